"""Distances and neighbourhoods in the Shrikhande graph, K4 and Doob graphs.

A vertex of D(m, n) is stored as two integer tuples: the Z4 run (m
Shrikhande pairs, followed by two K4(Z4) symbols when m is odd) and the
GF(4) run (the remaining K4(F4) symbols). Positions are 1-based in the text
format docs and 0-based in code.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .algebra import format_f4, format_z4, parse_f4, parse_z4


class ShapeMismatch(ValueError):
    pass


SHRIKHANDE_CONNECTORS = frozenset({(0, 1), (0, 3), (1, 0), (3, 0), (1, 1), (3, 3)})


def shrikhande_distance(a: tuple[int, int], b: tuple[int, int]) -> int:
    diff = ((a[0] - b[0]) % 4, (a[1] - b[1]) % 4)
    if diff == (0, 0):
        return 0
    return 1 if diff in SHRIKHANDE_CONNECTORS else 2


def k4_distance(a, b) -> int:
    return 0 if a == b else 1


@dataclass(frozen=True)
class DoobShape:
    """Parameters (m, n) of a Doob graph and its coordinate layout."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 0 or self.n < 0 or self.m + self.n < 1:
            raise ValueError(f"invalid Doob parameters ({self.m}, {self.n})")
        if self.m % 2 == 1 and self.n < 2:
            raise ValueError(
                f"D({self.m},{self.n}): odd m needs two K4(Z4) factors, so n >= 2"
            )

    @property
    def z4_length(self) -> int:
        return 2 * self.m + (2 if self.m % 2 else 0)

    @property
    def f4_length(self) -> int:
        return self.n - (2 if self.m % 2 else 0)

    @property
    def length(self) -> int:
        return 2 * self.m + self.n

    @property
    def degree(self) -> int:
        return 6 * self.m + 3 * self.n

    @property
    def num_vertices(self) -> int:
        return 4 ** self.length

    def __str__(self) -> str:
        return f"D({self.m},{self.n})"


@dataclass(frozen=True)
class DoobVertex:
    shape: DoobShape
    z4: tuple[int, ...]
    f4: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if len(self.z4) != self.shape.z4_length or len(self.f4) != self.shape.f4_length:
            raise ShapeMismatch(
                f"{self.shape} expects a {self.shape.z4_length}+{self.shape.f4_length} "
                f"word, got {len(self.z4)}+{len(self.f4)}"
            )
        if any(not 0 <= x <= 3 for x in self.z4 + self.f4):
            raise ValueError("coordinates must be in 0..3")

    def __str__(self) -> str:
        return format_vertex(self)


def parse_vertex(shape: DoobShape, text: str) -> DoobVertex:
    """Parse ``<z4digits>|<f4symbols>``, e.g. ``0123|x`` in D(2,1)."""
    if text.count("|") != 1:
        raise ValueError(f"vertex text needs exactly one '|': {text!r}")
    left, right = text.split("|")
    return DoobVertex(shape, parse_z4(left), parse_f4(right))


def format_vertex(v: DoobVertex) -> str:
    return f"{format_z4(v.z4)}|{format_f4(v.f4)}"


def doob_distance(a: DoobVertex, b: DoobVertex) -> int:
    if a.shape != b.shape:
        raise ShapeMismatch(f"shape mismatch: {a.shape} vs {b.shape}")
    m = a.shape.m
    d = 0
    for i in range(m):
        d += shrikhande_distance(a.z4[2 * i : 2 * i + 2], b.z4[2 * i : 2 * i + 2])
    d += sum(x != y for x, y in zip(a.z4[2 * m :], b.z4[2 * m :]))
    d += sum(x != y for x, y in zip(a.f4, b.f4))
    return d


def neighbors(v: DoobVertex) -> set[DoobVertex]:
    m = v.shape.m
    out = set()
    z4 = list(v.z4)
    for i in range(m):
        for dx, dy in SHRIKHANDE_CONNECTORS:
            w = z4.copy()
            w[2 * i] = (w[2 * i] + dx) % 4
            w[2 * i + 1] = (w[2 * i + 1] + dy) % 4
            out.add(DoobVertex(v.shape, tuple(w), v.f4))
    for i in range(2 * m, len(z4)):
        for a in range(4):
            if a != z4[i]:
                w = z4.copy()
                w[i] = a
                out.add(DoobVertex(v.shape, tuple(w), v.f4))
    f4 = list(v.f4)
    for i in range(len(f4)):
        for a in range(4):
            if a != f4[i]:
                w = f4.copy()
                w[i] = a
                out.add(DoobVertex(v.shape, v.z4, tuple(w)))
    return out


def ball(v: DoobVertex, radius: int = 1) -> set[DoobVertex]:
    if radius != 1:
        raise ValueError("only radius-1 balls are supported")
    return neighbors(v) | {v}


# --- 4-symbol ambient spaces --------------------------------------------------
#
# The substitution machinery works on 256-word spaces of length-4 words,
# indexed lexicographically: index = w0*64 + w1*16 + w2*4 + w3. Three metrics
# live on these spaces: H(4,4) over GF(4), D(2,0) (two Shrikhande pairs) and
# D(1,2) (one Shrikhande pair, then two K4(Z4) symbols).

H44 = "H(4,4)"
D20 = "D(2,0)"
D12 = "D(1,2)"
AMBIENTS = (H44, D20, D12)


def word_to_index(word) -> int:
    return ((int(word[0]) * 4 + int(word[1])) * 4 + int(word[2])) * 4 + int(word[3])


def index_to_word(index: int) -> tuple[int, int, int, int]:
    return (index >> 6 & 3, index >> 4 & 3, index >> 2 & 3, index & 3)


ALL_WORDS = np.array([index_to_word(i) for i in range(256)], dtype=np.uint8)


def quad_distance(ambient: str, a, b) -> int:
    if ambient == H44:
        return sum(x != y for x, y in zip(a, b))
    if ambient == D20:
        return shrikhande_distance(a[0:2], b[0:2]) + shrikhande_distance(a[2:4], b[2:4])
    if ambient == D12:
        return shrikhande_distance(a[0:2], b[0:2]) + (a[2] != b[2]) + (a[3] != b[3])
    raise ValueError(f"unknown ambient space {ambient!r}")


class QuadSpace:
    """Distance and neighbour tables for one 256-word ambient space."""

    def __init__(self, ambient: str):
        if ambient not in AMBIENTS:
            raise ValueError(f"unknown ambient space {ambient!r}")
        self.ambient = ambient

    @cached_property
    def distance_table(self) -> np.ndarray:
        words = [tuple(int(x) for x in w) for w in ALL_WORDS]
        table = np.empty((256, 256), dtype=np.int8)
        for i, a in enumerate(words):
            for j, b in enumerate(words):
                table[i, j] = quad_distance(self.ambient, a, b)
        return table

    @cached_property
    def neighbor_table(self) -> np.ndarray:
        """(256, 12) array of the distance-1 neighbours of every word."""
        rows = [np.flatnonzero(row == 1) for row in self.distance_table]
        return np.array(rows, dtype=np.int64)

    def distance(self, a: int, b: int) -> int:
        return int(self.distance_table[a, b])


_SPACES: dict[str, QuadSpace] = {}


def quad_space(ambient: str) -> QuadSpace:
    if ambient not in _SPACES:
        _SPACES[ambient] = QuadSpace(ambient)
    return _SPACES[ambient]
