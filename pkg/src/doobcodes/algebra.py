"""Arithmetic over GF(4) and Z4.

GF(4) elements are coded as 2-bit integers in the polynomial basis over
GF(2)[t]/(t^2 + t + 1): 0 -> 0, 1 -> 1, 2 -> xi, 3 -> xi^2 = xi + 1.
With this coding, field addition is bitwise XOR, and the integer order
0 < 1 < 2 < 3 coincides with the ranking 0 < 1 < xi < xi^2 used for
lexicographic ordering throughout the package.

Z4 elements are plain residues mod 4. The two alphabets are kept apart at
the scalar level (``F4Element`` and ``Z4Element`` refuse to mix); vectors
are tuples or numpy arrays of the integer codes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

# fmt: off
F4_MUL_TABLE = np.array([
    [0, 0, 0, 0],
    [0, 1, 2, 3],
    [0, 2, 3, 1],
    [0, 3, 1, 2],
], dtype=np.uint8)
# fmt: on
F4_ADD_TABLE = np.bitwise_xor.outer(np.arange(4), np.arange(4)).astype(np.uint8)
F4_INV = (0, 1, 3, 2)  # entry 0 is a placeholder; zero has no inverse

Z4_ADD_TABLE = (np.add.outer(np.arange(4), np.arange(4)) % 4).astype(np.uint8)
Z4_MUL_TABLE = (np.multiply.outer(np.arange(4), np.arange(4)) % 4).astype(np.uint8)

F4_SYMBOLS = "01xy"
Z4_SYMBOLS = "0123"


@dataclass(frozen=True)
class F4Element:
    value: int

    def __post_init__(self):
        if not 0 <= self.value <= 3:
            raise ValueError(f"GF(4) code out of range: {self.value}")

    def __add__(self, other: F4Element) -> F4Element:
        if not isinstance(other, F4Element):
            return NotImplemented
        return F4Element(self.value ^ other.value)

    __sub__ = __add__

    def __mul__(self, other: F4Element) -> F4Element:
        if not isinstance(other, F4Element):
            return NotImplemented
        return F4Element(int(F4_MUL_TABLE[self.value, other.value]))

    def __neg__(self) -> F4Element:
        return self

    def __index__(self) -> int:
        return self.value

    def inverse(self) -> F4Element:
        if self.value == 0:
            raise ZeroDivisionError("zero has no inverse in GF(4)")
        return F4Element(F4_INV[self.value])

    def __str__(self) -> str:
        return F4_SYMBOLS[self.value]

    def __repr__(self) -> str:
        return f"F4({F4_SYMBOLS[self.value]})"


@dataclass(frozen=True)
class Z4Element:
    value: int

    def __post_init__(self):
        if not 0 <= self.value <= 3:
            raise ValueError(f"Z4 residue out of range: {self.value}")

    def __add__(self, other: Z4Element) -> Z4Element:
        if not isinstance(other, Z4Element):
            return NotImplemented
        return Z4Element((self.value + other.value) % 4)

    def __sub__(self, other: Z4Element) -> Z4Element:
        if not isinstance(other, Z4Element):
            return NotImplemented
        return Z4Element((self.value - other.value) % 4)

    def __mul__(self, other: Z4Element) -> Z4Element:
        if not isinstance(other, Z4Element):
            return NotImplemented
        return Z4Element((self.value * other.value) % 4)

    def __neg__(self) -> Z4Element:
        return Z4Element(-self.value % 4)

    def __index__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return Z4_SYMBOLS[self.value]

    def __repr__(self) -> str:
        return f"Z4({self.value})"


ZERO = F4Element(0)
ONE = F4Element(1)
XI = F4Element(2)
XI2 = F4Element(3)

F4Like = Union[F4Element, int]
Z4Like = Union[Z4Element, int]


def f4_add(a: F4Element, b: F4Element) -> F4Element:
    return a + b


def f4_mul(a: F4Element, b: F4Element) -> F4Element:
    return a * b


def f4_dot(a: Sequence[F4Like], b: Sequence[F4Like]) -> F4Element:
    """Bilinear (non-Hermitian) dot product over GF(4)."""
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} != {len(b)}")
    acc = 0
    for x, y in zip(a, b):
        acc ^= int(F4_MUL_TABLE[int(x), int(y)])
    return F4Element(acc)


def z4_dot(a: Sequence[Z4Like], b: Sequence[Z4Like]) -> Z4Element:
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} != {len(b)}")
    return Z4Element(sum(int(x) * int(y) for x, y in zip(a, b)) % 4)


def f4_scale(alpha: int, word: Sequence[int]) -> tuple[int, ...]:
    return tuple(int(F4_MUL_TABLE[alpha, x]) for x in word)


def parse_f4(text: str) -> tuple[int, ...]:
    try:
        return tuple(F4_SYMBOLS.index(c) for c in text)
    except ValueError:
        raise ValueError(f"not a GF(4) word: {text!r}") from None


def parse_z4(text: str) -> tuple[int, ...]:
    try:
        return tuple(Z4_SYMBOLS.index(c) for c in text)
    except ValueError:
        raise ValueError(f"not a Z4 word: {text!r}") from None


def format_f4(word: Sequence[int]) -> str:
    return "".join(F4_SYMBOLS[int(x)] for x in word)


def format_z4(word: Sequence[int]) -> str:
    return "".join(Z4_SYMBOLS[int(x)] for x in word)
