import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from doobcodes.component_codes import substitution_from_forward, substitution_map
from doobcodes.doob_code import (
    CapExceeded,
    DoobPerfectCode,
    InadmissibleParameters,
    additive_code_witness,
    check_admissibility,
    export_codewords,
)
from doobcodes.metrics import (
    DoobShape,
    DoobVertex,
    ShapeMismatch,
    ball,
    doob_distance,
    neighbors,
)

SMALL_SHAPES = [(2, 1), (1, 3), (0, 5)]
K3_SHAPES = [(m, 21 - 2 * m) for m in range(11)]


def all_vertices(shape):
    for z4 in itertools.product(range(4), repeat=shape.z4_length):
        for f4 in itertools.product(range(4), repeat=shape.f4_length):
            yield DoobVertex(shape, z4, f4)


def random_vertex(shape, rng):
    return DoobVertex(
        shape,
        tuple(rng.integers(0, 4, shape.z4_length).tolist()),
        tuple(rng.integers(0, 4, shape.f4_length).tolist()),
    )


@pytest.fixture(scope="module", params=SMALL_SHAPES, ids=lambda p: f"D{p}")
def small(request):
    code = DoobPerfectCode(*request.param)
    return code, code.enumerate()


def test_admissibility_examples():
    a = check_admissibility(2, 1)
    assert a and a.k == 2 and a.ball_size == 16
    assert check_admissibility(6, 9).k == 3
    assert check_admissibility(0, 1).k == 1
    r = check_admissibility(1, 1)
    assert not r and r.k is None and r.ball_size == 10
    with pytest.raises(ValueError):
        check_admissibility(0, 0)
    with pytest.raises(InadmissibleParameters):
        DoobPerfectCode(1, 1)


def test_odd_m_forces_three_k4_factors():
    for m in range(0, 300):
        for n in range(0, 300):
            if m + n and check_admissibility(m, n) and m % 2:
                assert n >= 3


def test_additive_conditions():
    for m, n in [(6, 9), (9, 3), (10, 1)]:
        assert check_admissibility(m, n)
        assert additive_code_witness(m, n) is None
    # the two classical small codes are linear, so the conditions must be met
    assert additive_code_witness(2, 1) is not None
    assert additive_code_witness(1, 3) is not None


def test_layout():
    even = DoobPerfectCode(10, 1)
    assert [s.flavor for s in even.quad_maps] == ["phi"] * 5
    assert even.tail_offset == 20
    odd = DoobPerfectCode(9, 3)
    assert [s.flavor for s in odd.quad_maps] == ["phi"] * 4 + ["psi"]
    assert odd.tail_offset == 20 and odd.shape.f4_length == 1
    hamming_only = DoobPerfectCode(0, 21)
    assert hamming_only.num_quads == 0


def test_encode_zero_word():
    code = DoobPerfectCode(6, 9)
    v = code.encode_vertex((0,) * 21)
    assert v.z4 == substitution_map("phi").apply((0, 0, 0, 0)) * 3
    assert v.f4 == (0,) * 9


@pytest.mark.parametrize("mn", [(6, 9), (9, 3), (1, 19)])
def test_pullback_inverts_encoding(mn):
    code = DoobPerfectCode(*mn)
    rng = np.random.default_rng(1)
    for _ in range(10_000):
        x = tuple(rng.integers(0, 4, code.length).tolist())
        assert code.pullback(code.encode_vertex(x)) == x
    with pytest.raises(ValueError):
        code.encode_vertex((0,) * 5)


def test_membership(small):
    code, words = small
    assert len(words) == 64
    rng = np.random.default_rng(0)
    for _ in range(20):
        c = code.hamming.random_codeword(rng)
        assert code.is_member(code.encode_vertex(c))
        x = list(c)
        x[rng.integers(code.length)] ^= 1
        assert not code.is_member(code.encode_vertex(x))
    members = [v for v in all_vertices(code.shape) if code.is_member(v)]
    assert sorted(members, key=lambda v: (v.z4, v.f4)) == words


def test_membership_shape_mismatch():
    code = DoobPerfectCode(2, 1)
    with pytest.raises(ShapeMismatch):
        code.is_member(DoobVertex(DoobShape(0, 5), (), (0,) * 5))


def test_perfection_by_enumeration(small):
    code, words = small
    cover = {}
    for c in words:
        for v in ball(c):
            cover[v] = cover.get(v, 0) + 1
    assert len(cover) == 1024
    assert set(cover.values()) == {1}


def test_minimum_distance_three(small):
    _, words = small
    assert min(doob_distance(a, b) for a, b in itertools.combinations(words, 2)) >= 3


def test_decode_matches_brute_force(small):
    code, words = small
    for v in all_vertices(code.shape):
        nearest = min(words, key=lambda c: doob_distance(v, c))
        assert doob_distance(v, nearest) <= 1
        assert code.decode(v) == nearest


def test_decode_single_moves(small):
    code, words = small
    for c in words:
        assert code.decode(c) == c
        for v in neighbors(c):
            assert code.decode(v) == c


def test_decode_large_random():
    code = DoobPerfectCode(6, 9)
    rng = np.random.default_rng(7)
    for _ in range(100_000):
        y = random_vertex(code.shape, rng)
        c = code.decode(y)
        assert code.is_member(c)
        assert doob_distance(y, c) <= 1


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(K3_SHAPES), st.integers(0, 2**32 - 1))
def test_decode_idempotent(mn, seed):
    code = DoobPerfectCode(*mn)
    y = random_vertex(code.shape, np.random.default_rng(seed))
    c = code.decode(y)
    assert code.decode(c) == c


@pytest.mark.parametrize("mn", K3_SHAPES)
def test_ball_membership_explicit(mn):
    """Perfection at k=3 through explicit neighbour sets and scalar membership."""
    code = DoobPerfectCode(*mn)
    rng = np.random.default_rng(sum(mn))
    for _ in range(100):
        v = random_vertex(code.shape, rng)
        b = ball(v)
        assert len(b) == 64
        assert sum(code.is_member(u) for u in b) == 1


def test_decode_overhead_counts():
    code = DoobPerfectCode(9, 3)
    rng = np.random.default_rng(3)
    seen = set()
    for _ in range(2000):
        _, ops = code.decode_counted(random_vertex(code.shape, rng))
        seen.add(ops)
    assert seen <= {0, 17}
    assert 17 in seen


def test_enumerate_cap_and_order():
    assert len(DoobPerfectCode(1, 3).enumerate()) == 64
    with pytest.raises(CapExceeded):
        DoobPerfectCode(6, 9).enumerate()
    with pytest.raises(CapExceeded):
        DoobPerfectCode(2, 1).enumerate(cap=63)
    text = export_codewords(DoobPerfectCode(2, 1))
    lines = text.splitlines()
    assert len(lines) == 64 and lines == sorted(lines)
    assert text == export_codewords(DoobPerfectCode(2, 1))


def test_broken_phi_is_caught_by_decoder():
    phi = substitution_map("phi")
    fwd = phi.forward.copy()
    fwd[[0, 1]] = fwd[[1, 0]]
    broken = DoobPerfectCode(2, 1, phi=substitution_from_forward("phi", fwd, phi.target))
    failures = 0
    for v in all_vertices(broken.shape):
        try:
            c = broken.decode(v)
        except AssertionError:
            failures += 1
            continue
        if not broken.is_member(c) or doob_distance(c, v) > 1:
            failures += 1
    assert failures > 0
