import itertools

import numpy as np
import pytest

from doobcodes.algebra import F4_MUL_TABLE, parse_f4
from doobcodes.component_codes import component_code
from doobcodes.hamming import HammingCode, build_check_matrix, format_check_matrix

# 3x21 check matrix as printed with the construction (x = xi, y = xi^2)
PRINTED_K3 = [
    "1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 0 0 0 0 0",
    "y y y y x x x x 1 1 1 1 0 0 0 0 1 1 1 1 0",
    "y x 1 0 y x 1 0 y x 1 0 y x 1 0 y x 1 0 1",
]


def printed_k3_matrix():
    return np.array([parse_f4(row.replace(" ", "")) for row in PRINTED_K3], dtype=np.uint8)


def enumerate_and_sort(k):
    """Independent column oracle: filter by leading entry, order by rank tuples."""
    rank = {0: 0, 1: 1, 2: 2, 3: 3}  # 0 < 1 < xi < xi^2
    cols = []
    for col in itertools.product(range(4), repeat=k):
        nz = [c for c in col if c != 0]
        if nz and nz[0] == 1:
            cols.append(col)
    cols.sort(key=lambda c: [rank[x] for x in c], reverse=True)
    return cols


def brute_force_syndrome(matrix, word):
    out = []
    for row in matrix:
        acc = 0
        for a, b in zip(row, word):
            acc ^= int(F4_MUL_TABLE[a, b])
        out.append(acc)
    return tuple(out)


def test_k3_matrix_equals_printed():
    assert np.array_equal(build_check_matrix(3), printed_k3_matrix())
    assert format_check_matrix(build_check_matrix(3)).splitlines() == PRINTED_K3


def test_k2_and_k1_matrices():
    cols = [tuple(c) for c in build_check_matrix(2).T]
    assert cols == [(1, 3), (1, 2), (1, 1), (1, 0), (0, 1)]
    assert build_check_matrix(1).tolist() == [[1]]
    with pytest.raises(ValueError):
        build_check_matrix(0)


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_columns_match_oracle(k):
    cols = [tuple(int(x) for x in c) for c in build_check_matrix(k).T]
    assert cols == enumerate_and_sort(k)
    assert len(cols) == (4**k - 1) // 3
    assert len(set(cols)) == len(cols)


@pytest.mark.parametrize("k", [2, 3, 4, 5, 6])
def test_quadruple_structure(k):
    mat = HammingCode(k).matrix
    for j in range((mat.shape[1] - 1) // 4):
        block = mat[:, 4 * j : 4 * j + 4]
        assert tuple(block[-1]) == (3, 2, 1, 0)
        for row in block[:-1]:
            assert len(set(row.tolist())) == 1


@pytest.fixture(scope="module")
def k2_kernel():
    """All words of F4^5 with zero syndrome, by brute force."""
    mat = build_check_matrix(2)
    return [w for w in itertools.product(range(4), repeat=5) if not any(brute_force_syndrome(mat, w))]


def test_syndrome_examples():
    h2, h3 = HammingCode(2), HammingCode(3)
    assert h2.syndrome((0,) * 5) == (0, 0)
    assert h2.syndrome((0, 0, 0, 0, 1)) == (0, 1)
    assert h3.syndrome((1, 1, 1, 1) + (0,) * 17) == (0, 0, 0)
    with pytest.raises(ValueError):
        h2.syndrome((0,) * 4)


def test_syndrome_matches_brute_force():
    h = HammingCode(3)
    rng = np.random.default_rng(5)
    for _ in range(200):
        w = tuple(rng.integers(0, 4, 21).tolist())
        assert h.syndrome(w) == brute_force_syndrome(h.matrix, w)


def test_k2_code_size_and_distance(k2_kernel):
    h = HammingCode(2)
    assert len(k2_kernel) == 64
    assert set(h.codewords()) == set(k2_kernel)
    assert all(h.is_codeword(w) for w in k2_kernel)
    dmin = min(
        sum(x != y for x, y in zip(a, b)) for a, b in itertools.combinations(k2_kernel, 2)
    )
    assert dmin == 3


def test_k2_one_perfect(k2_kernel):
    for w in itertools.product(range(4), repeat=5):
        near = [c for c in k2_kernel if sum(x != y for x, y in zip(w, c)) <= 1]
        assert len(near) == 1


def test_is_codeword_examples():
    h = HammingCode(2)
    assert h.is_codeword((0,) * 5)
    for pos in range(5):
        for a in range(1, 4):
            w = [0] * 5
            w[pos] = a
            assert not h.is_codeword(w)


def test_decode_exhaustive_k2(k2_kernel):
    h = HammingCode(2)
    for w in itertools.product(range(4), repeat=5):
        nearest = min(k2_kernel, key=lambda c: sum(x != y for x, y in zip(w, c)))
        assert h.decode(w) == nearest
    assert h.decode((1, 0, 0, 0, 0)) == (0,) * 5


@pytest.mark.parametrize("k", [3, 4])
def test_decode_random_single_errors(k):
    h = HammingCode(k)
    rng = np.random.default_rng(k)
    for _ in range(100_000):
        c = h.random_codeword(rng)
        w = list(c)
        if rng.random() < 0.9:
            w[rng.integers(h.length)] ^= int(rng.integers(1, 4))
        assert h.decode(w) == c


def test_encoder_is_systematic_and_injective():
    h = HammingCode(3)
    rng = np.random.default_rng(0)
    infos, words = set(), set()
    for _ in range(500):
        info = rng.integers(0, 4, h.dimension).tolist()
        c = h.encode(info)
        assert h.is_codeword(c)
        assert [c[p] for p in h.information_positions] == info
        infos.add(tuple(info))
        words.add(c)
    assert len(words) == len(infos)


def test_translate_quadruple_examples():
    h3 = HammingCode(3)
    zero = (0,) * 21
    assert h3.translate_quadruple(zero, 0, (0, 0, 0, 0)) == zero
    for j in range(h3.num_quadruples):
        b = h3.translate_quadruple(zero, j, (1, 1, 1, 1))
        assert sum(x != 0 for x in b) == 4
        assert h3.syndrome(b) == (0, 0, 0)
    h2 = HammingCode(2)
    assert h2.is_codeword(h2.translate_quadruple((0,) * 5, 0, (0, 1, 2, 3)))


def test_translate_quadruple_errors():
    h = HammingCode(2)
    with pytest.raises(ValueError):
        h.translate_quadruple((0,) * 5, 1, (1, 1, 1, 1))
    with pytest.raises(ValueError):
        h.translate_quadruple((0,) * 5, 0, (1, 0, 0, 0))


@pytest.mark.parametrize("k", [2, 3, 4])
def test_translations_stay_in_code(k):
    h = HammingCode(k)
    rng = np.random.default_rng(k)
    e_words = component_code("E''").words
    for _ in range(10):
        c = h.random_codeword(rng)
        for j in range(h.num_quadruples):
            for e in e_words:
                assert h.is_codeword(h.translate_quadruple(c, j, e))
