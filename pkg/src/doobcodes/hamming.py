"""The quaternary Hamming code with columns in inverse-lexicographic order.

Syndromes are packed into integers, two bits per row with row 0 most
significant. Because GF(4) addition is XOR on the 2-bit codes, adding two
syndromes is XOR on the packed integers, and the packed value of a column
orders columns exactly as the lexicographic rule does.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from .algebra import F4_INV, F4_MUL_TABLE, F4_SYMBOLS


def hamming_length(k: int) -> int:
    return (4**k - 1) // 3


def build_check_matrix(k: int) -> np.ndarray:
    """All height-``k`` columns with first nonzero entry 1, sorted descending.

    Returns a ``(k, (4**k - 1) // 3)`` uint8 array of GF(4) codes.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    cols = [
        c
        for c in itertools.product(range(4), repeat=k)
        if any(c) and next(x for x in c if x) == 1
    ]
    cols.sort(reverse=True)
    return np.array(cols, dtype=np.uint8).T.copy()


def format_check_matrix(matrix: np.ndarray) -> str:
    return "".join(" ".join(F4_SYMBOLS[x] for x in row) + "\n" for row in matrix)


def pack_column(col: Sequence[int]) -> int:
    out = 0
    for x in col:
        out = out << 2 | int(x)
    return out


def unpack_syndrome(value: int, k: int) -> tuple[int, ...]:
    return tuple(value >> 2 * (k - 1 - r) & 3 for r in range(k))


def scale_packed(alpha: int, value: int, k: int) -> int:
    out = 0
    for r in range(k):
        out = out << 2 | int(F4_MUL_TABLE[alpha, value >> 2 * (k - 1 - r) & 3])
    return out


@dataclass(frozen=True, eq=False)
class HammingCode:
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be at least 1")

    @property
    def length(self) -> int:
        return hamming_length(self.k)

    @property
    def dimension(self) -> int:
        return self.length - self.k

    @property
    def num_quadruples(self) -> int:
        """Number of leading 4-position blocks with the quadruple structure."""
        return (self.length - 1) // 4

    @cached_property
    def matrix(self) -> np.ndarray:
        return build_check_matrix(self.k)

    @cached_property
    def packed_columns(self) -> np.ndarray:
        return np.array([pack_column(c) for c in self.matrix.T], dtype=np.int64)

    @cached_property
    def column_position(self) -> dict[int, int]:
        return {int(c): i for i, c in enumerate(self.packed_columns)}

    @cached_property
    def syndrome_table(self) -> np.ndarray:
        """``table[i, a]`` is the packed syndrome of symbol ``a`` at position ``i``."""
        table = np.zeros((self.length, 4), dtype=np.int64)
        for i, c in enumerate(self.packed_columns):
            for a in range(1, 4):
                table[i, a] = scale_packed(a, int(c), self.k)
        return table

    def _check_length(self, word: Sequence[int]):
        if len(word) != self.length:
            raise ValueError(f"expected a word of length {self.length}, got {len(word)}")

    def packed_syndrome(self, word: Sequence[int]) -> int:
        self._check_length(word)
        table = self.syndrome_table
        s = 0
        for i, a in enumerate(word):
            if a:
                s ^= int(table[i, a])
        return s

    def syndrome(self, word: Sequence[int]) -> tuple[int, ...]:
        return unpack_syndrome(self.packed_syndrome(word), self.k)

    def is_codeword(self, word: Sequence[int]) -> bool:
        return self.packed_syndrome(word) == 0

    def locate_error(self, packed: int) -> tuple[int, int] | None:
        """Map a nonzero packed syndrome to ``(position, error value)``.

        The error value is the leading nonzero syndrome entry; dividing it
        out leaves a normalised column, which is looked up directly.
        """
        if packed == 0:
            return None
        digits = unpack_syndrome(packed, self.k)
        alpha = next(x for x in digits if x)
        column = scale_packed(F4_INV[alpha], packed, self.k)
        return self.column_position[column], alpha

    def decode(self, word: Sequence[int]) -> tuple[int, ...]:
        """The unique codeword within Hamming distance 1 of ``word``."""
        located = self.locate_error(self.packed_syndrome(word))
        if located is None:
            return tuple(int(x) for x in word)
        pos, alpha = located
        out = [int(x) for x in word]
        out[pos] ^= alpha
        return tuple(out)

    @cached_property
    def check_positions(self) -> tuple[int, ...]:
        """Positions of the unit columns, one per row."""
        return tuple(self.column_position[1 << 2 * (self.k - 1 - r)] for r in range(self.k))

    @cached_property
    def information_positions(self) -> tuple[int, ...]:
        checks = set(self.check_positions)
        return tuple(i for i in range(self.length) if i not in checks)

    def encode(self, info: Sequence[int]) -> tuple[int, ...]:
        """Systematic encoder: ``info`` fills the non-unit-column positions."""
        if len(info) != self.dimension:
            raise ValueError(f"expected {self.dimension} information symbols")
        word = [0] * self.length
        for pos, a in zip(self.information_positions, info):
            word[pos] = int(a)
        s = unpack_syndrome(self.packed_syndrome(word), self.k)
        # unit column r absorbs syndrome row r; char 2 means no negation
        for r, pos in enumerate(self.check_positions):
            word[pos] = s[r]
        return tuple(word)

    def codewords(self) -> Iterator[tuple[int, ...]]:
        for info in itertools.product(range(4), repeat=self.dimension):
            yield self.encode(info)

    def random_codeword(self, rng: np.random.Generator) -> tuple[int, ...]:
        return self.encode(rng.integers(0, 4, size=self.dimension).tolist())

    def translate_quadruple(
        self, c: Sequence[int], j: int, e: Sequence[int]
    ) -> tuple[int, ...]:
        """Add the length-4 word ``e`` on positions ``4j .. 4j+3`` of ``c``.

        ``e`` must lie in the inner code E'' of H(4,4); the result is then
        again a codeword.
        """
        from .component_codes import component_code

        if not 0 <= j < self.num_quadruples:
            raise ValueError(f"quadruple index {j} outside 0..{self.num_quadruples - 1}")
        if tuple(int(x) for x in e) not in component_code("E''").word_set:
            raise ValueError(f"{tuple(e)} is not in E''")
        out = [int(x) for x in c]
        for t in range(4):
            out[4 * j + t] ^= int(e[t])
        return tuple(out)
