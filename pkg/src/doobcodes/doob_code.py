"""1-perfect codes in Doob graphs built from the quaternary Hamming code.

The code in D(m, n) is the image of the Hamming code of length 2m + n under
a blockwise substitution: the leading Hamming positions are cut into
quadruples, each quadruple is pushed through phi (into two Shrikhande
components) or, for the last quadruple when m is odd, through psi (into one
Shrikhande component and the two K4(Z4) components), and the remaining
positions are copied unchanged into the K4(F4) components.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .component_codes import SubstitutionMap, substitution_map
from .hamming import HammingCode
from .metrics import (
    DoobShape,
    DoobVertex,
    ShapeMismatch,
    index_to_word,
    quad_space,
    word_to_index,
)

DEFAULT_ENUMERATION_CAP = 2**20


class InadmissibleParameters(ValueError):
    pass


class CapExceeded(RuntimeError):
    pass


def is_power_of_two(x: int) -> bool:
    return x > 0 and x & (x - 1) == 0


@dataclass(frozen=True)
class Admissibility:
    m: int
    n: int
    k: int | None

    @property
    def admissible(self) -> bool:
        return self.k is not None

    @property
    def ball_size(self) -> int:
        return 6 * self.m + 3 * self.n + 1

    def __bool__(self) -> bool:
        return self.admissible


def check_admissibility(m: int, n: int) -> Admissibility:
    """Find k with 2m + n = (4**k - 1) / 3, or report k=None."""
    if m < 0 or n < 0 or m + n < 1:
        raise ValueError(f"invalid Doob parameters ({m}, {n})")
    length = 2 * m + n
    k = 1
    while (4**k - 1) // 3 < length:
        k += 1
    return Admissibility(m, n, k if (4**k - 1) // 3 == length else None)


def additive_code_witness(m: int, n: int, bound: int = 64) -> tuple[int, int, int] | None:
    """Search for (Gamma, Delta, n'') meeting the known necessary conditions
    for an additive 1-perfect code in D(m, n'+n''); ``None`` if there is none.

    Conditions: 2m + n = (2**(G + 2D) - 1) / 3, 3n' + n'' = 2**(G + D) - 1,
    n'' <= 2**D - 1, n'' != 1, with n' + n'' = n.
    """
    for gamma in range(bound + 1):
        for delta in range(bound + 1):
            if 3 * (2 * m + n) != 2 ** (gamma + 2 * delta) - 1:
                continue
            twice = 3 * n - 2 ** (gamma + delta) + 1
            if twice < 0 or twice % 2:
                continue
            npp = twice // 2
            if npp <= n and npp != 1 and npp <= 2**delta - 1:
                return gamma, delta, npp
    return None


class DoobPerfectCode:
    """The substitution code in D(m, n) for admissible (m, n).

    ``phi`` and ``psi`` default to the canonical label-transport maps; other
    maps may be passed in (e.g. deliberately broken ones for negative tests).
    """

    def __init__(
        self,
        m: int,
        n: int,
        phi: SubstitutionMap | None = None,
        psi: SubstitutionMap | None = None,
    ):
        adm = check_admissibility(m, n)
        if not adm:
            raise InadmissibleParameters(
                f"D({m},{n}) has no 1-perfect code: 6m+3n+1 = {adm.ball_size}"
            )
        self.params = adm
        self.shape = DoobShape(m, n)
        self.k = adm.k
        self.hamming = HammingCode(adm.k)
        self.phi = phi or substitution_map("phi")
        self.psi = psi or substitution_map("psi")
        self.quad_maps: tuple[SubstitutionMap, ...] = (self.phi,) * (m // 2) + (
            (self.psi,) if m % 2 else ()
        )
        self.num_quads = len(self.quad_maps)
        if self.num_quads > self.hamming.num_quadruples:
            raise AssertionError("substituted quadruples leave the structured prefix")
        self.tail_offset = 4 * self.num_quads
        assert self.shape.z4_length == self.tail_offset
        assert self.shape.f4_length == self.hamming.length - self.tail_offset

    @property
    def m(self) -> int:
        return self.shape.m

    @property
    def n(self) -> int:
        return self.shape.n

    @property
    def length(self) -> int:
        return self.hamming.length

    @property
    def size(self) -> int:
        return 4**self.hamming.dimension

    def __repr__(self) -> str:
        return f"DoobPerfectCode({self.m}, {self.n})"

    # --- scalar interface ------------------------------------------------------

    def _check_shape(self, y: DoobVertex):
        if y.shape != self.shape:
            raise ShapeMismatch(f"vertex of {y.shape} given to a code in {self.shape}")

    def encode_vertex(self, x: Sequence[int]) -> DoobVertex:
        """Substitute quadruples of an arbitrary GF(4) word into a vertex."""
        if len(x) != self.length:
            raise ValueError(f"expected a GF(4) word of length {self.length}, got {len(x)}")
        z4: list[int] = []
        for j, smap in enumerate(self.quad_maps):
            z4.extend(index_to_word(int(smap.forward[word_to_index(x[4 * j : 4 * j + 4])])))
        return DoobVertex(self.shape, tuple(z4), tuple(int(a) for a in x[self.tail_offset :]))

    def pullback(self, y: DoobVertex) -> tuple[int, ...]:
        """Inverse of :meth:`encode_vertex`."""
        self._check_shape(y)
        x: list[int] = []
        for j, smap in enumerate(self.quad_maps):
            x.extend(index_to_word(int(smap.inverse[word_to_index(y.z4[4 * j : 4 * j + 4])])))
        x.extend(y.f4)
        return tuple(x)

    def is_member(self, y: DoobVertex) -> bool:
        return self.hamming.is_codeword(self.pullback(y))

    def decode(self, y: DoobVertex) -> DoobVertex:
        """The unique codeword at Doob distance at most 1 from ``y``."""
        return self.decode_counted(y)[0]

    def decode_counted(self, y: DoobVertex) -> tuple[DoobVertex, int]:
        """Decode, also returning the number of substitution/coset-search steps
        spent after the Hamming correction (0, or 1 + 16 in the quadruple case).
        """
        x = self.pullback(y)
        located = self.hamming.locate_error(self.hamming.packed_syndrome(x))
        if located is None:
            return y, 0
        pos, alpha = located
        if pos >= self.tail_offset:
            f4 = list(y.f4)
            f4[pos - self.tail_offset] ^= alpha
            return DoobVertex(self.shape, y.z4, tuple(f4)), 0

        j = pos // 4
        smap = self.quad_maps[j]
        b_quad = list(x[4 * j : 4 * j + 4])
        b_quad[pos % 4] ^= alpha
        z_quad = int(smap.forward[word_to_index(b_quad)])
        y_quad = word_to_index(y.z4[4 * j : 4 * j + 4])
        dist = quad_space(smap.target_ambient).distance_table
        members = smap.target.small_coset_members[z_quad]
        hits = [int(c) for c in members if dist[c, y_quad] <= 1]
        if len(hits) != 1:
            raise AssertionError(
                f"coset search found {len(hits)} candidates near {y}; the substitution "
                "map does not preserve cosets"
            )
        z4 = list(y.z4)
        z4[4 * j : 4 * j + 4] = index_to_word(hits[0])
        return DoobVertex(self.shape, tuple(z4), y.f4), 1 + len(members)

    def enumerate(self, cap: int = DEFAULT_ENUMERATION_CAP) -> list[DoobVertex]:
        """All codewords in lexicographic order; refuses codes larger than ``cap``."""
        if self.size > cap:
            raise CapExceeded(f"{self.shape} code has {self.size} words, cap is {cap}")
        words = [self.encode_vertex(c) for c in self.hamming.codewords()]
        return sorted(words, key=lambda v: (v.z4, v.f4))

    # --- batched interface ------------------------------------------------------
    #
    # Vertices in bulk are a pair of arrays: quadruple word indices (N, num_quads)
    # and K4(F4) symbols (N, f4_length).

    @cached_property
    def quad_syndrome_tables(self) -> np.ndarray:
        """``t[j, w]``: packed syndrome contribution of target word ``w`` in quadruple ``j``."""
        table = self.hamming.syndrome_table
        words = np.array([index_to_word(w) for w in range(256)], dtype=np.int64)
        out = np.zeros((self.num_quads, 256), dtype=np.int64)
        for j, smap in enumerate(self.quad_maps):
            per_source = np.zeros(256, dtype=np.int64)
            for t in range(4):
                per_source ^= table[4 * j + t, words[:, t]]
            out[j] = per_source[smap.inverse]
        return out

    @cached_property
    def tail_syndrome_table(self) -> np.ndarray:
        return self.hamming.syndrome_table[self.tail_offset :]

    @cached_property
    def quad_neighbor_tables(self) -> tuple[np.ndarray, ...]:
        return tuple(quad_space(s.target_ambient).neighbor_table for s in self.quad_maps)

    def split_coordinates(self, z4: np.ndarray) -> np.ndarray:
        """(N, z4_length) Z4 symbols -> (N, num_quads) quadruple word indices."""
        z4 = np.asarray(z4, dtype=np.int64).reshape(len(z4), self.num_quads, 4)
        return z4 @ np.array([64, 16, 4, 1], dtype=np.int64)

    def batch_syndromes(self, quads: np.ndarray, tail: np.ndarray) -> np.ndarray:
        s = np.zeros(len(quads), dtype=np.int64)
        for j in range(self.num_quads):
            s ^= self.quad_syndrome_tables[j, quads[:, j]]
        if tail.shape[1]:
            gathered = self.tail_syndrome_table[np.arange(tail.shape[1]), tail]
            s ^= np.bitwise_xor.reduce(gathered, axis=1)
        return s

    def batch_is_member(self, quads: np.ndarray, tail: np.ndarray) -> np.ndarray:
        return self.batch_syndromes(quads, tail) == 0


def build_code(m: int, n: int) -> DoobPerfectCode:
    return DoobPerfectCode(m, n)


def export_codewords(code: DoobPerfectCode, cap: int = DEFAULT_ENUMERATION_CAP) -> str:
    return "".join(f"{v}\n" for v in code.enumerate(cap))
