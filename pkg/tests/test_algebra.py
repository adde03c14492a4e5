import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from doobcodes.algebra import (
    F4_MUL_TABLE,
    ONE,
    XI,
    XI2,
    ZERO,
    F4Element,
    Z4Element,
    f4_add,
    f4_dot,
    f4_mul,
    format_f4,
    parse_f4,
    z4_dot,
)

F4 = [F4Element(v) for v in range(4)]


def poly_mul(a: int, b: int) -> int:
    """GF(2)[t]/(t^2+t+1) product on 2-bit codes (bit 1 = coefficient of t)."""
    prod = 0
    for i in range(2):
        if b >> i & 1:
            prod ^= a << i
    if prod & 0b100:
        prod ^= 0b111
    return prod


def test_f4_add_examples():
    assert f4_add(XI, XI) == ZERO
    assert f4_add(ONE, XI) == XI2
    assert f4_add(ZERO, XI2) == XI2


def test_f4_mul_examples():
    assert f4_mul(XI, XI) == XI2
    assert f4_mul(XI, XI2) == ONE
    assert f4_mul(ZERO, XI) == ZERO


def test_mul_table_matches_polynomial_oracle():
    for a, b in itertools.product(range(4), repeat=2):
        assert F4_MUL_TABLE[a, b] == poly_mul(a, b)
        # addition of polynomials over GF(2) is coefficientwise XOR
        assert (F4[a] + F4[b]).value == a ^ b


def test_field_axioms_exhaustive():
    for a, b, c in itertools.product(F4, repeat=3):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
    for a in F4:
        assert a + a == ZERO


def test_nonzero_elements_cyclic_of_order_3():
    for a in F4[1:]:
        assert a * a.inverse() == ONE
        assert a * a * a == ONE
    assert {XI, XI * XI, XI * XI * XI} == {XI, XI2, ONE}
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_z4_tables_match_integers():
    for a, b in itertools.product(range(4), repeat=2):
        assert (Z4Element(a) + Z4Element(b)).value == (a + b) % 4
        assert (Z4Element(a) * Z4Element(b)).value == (a * b) % 4
    assert Z4Element(2) + Z4Element(2) == Z4Element(0)
    assert Z4Element(2) * Z4Element(2) == Z4Element(0)


def test_alphabets_do_not_mix():
    with pytest.raises(TypeError):
        F4Element(1) + Z4Element(1)
    with pytest.raises(TypeError):
        Z4Element(1) * F4Element(1)


def test_f4_dot_examples():
    assert f4_dot((1, 1, 1, 1), (1, 1, 1, 1)) == ZERO
    assert f4_dot((ZERO, ONE, XI, XI2), (XI2, XI, ONE, ZERO)) == ZERO
    assert f4_dot((0, 0, 0, 0), (3, 2, 1, 1)) == ZERO
    with pytest.raises(ValueError):
        f4_dot((1, 1), (1,))


def test_z4_dot_examples():
    assert z4_dot((0, 1, 2, 3), (1, 1, 1, 3)) == Z4Element(0)
    assert z4_dot((1, 0, 1, 2), (2, 0, 2, 0)) == Z4Element(0)
    assert z4_dot((1, 1, 1, 1), (1, 1, 1, 1)) == Z4Element(0)
    with pytest.raises(ValueError):
        z4_dot((1,), (1, 2))


@given(st.lists(st.integers(0, 3), min_size=1, max_size=12))
def test_f4_text_round_trip(word):
    assert parse_f4(format_f4(word)) == tuple(word)


def test_parse_rejects_unknown_symbols():
    with pytest.raises(ValueError):
        parse_f4("01z")
