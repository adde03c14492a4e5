"""Certification runs: perfection checks, the component-code suite, decode timing.

Perfection is checked from the vertex side: for every (or every sampled)
vertex v, count the codewords in the radius-1 ball around v; the code is
1-perfect iff every count is 1. Membership of a ball element is a syndrome
test, and the syndrome of a neighbour differs from the syndrome of v only in
the one quadruple or symbol that moved, so each ball costs O(6m + 3n) table
lookups.

Random vertices come from ``numpy.random.default_rng([seed, chunk])``
(PCG64), drawing every coordinate uniformly from 0..3, in fixed chunks of
``CHUNK`` samples. Results therefore do not depend on ``jobs``.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .component_codes import (
    CODE_NAMES,
    CPP_WORDS,
    PAIRS,
    ComponentCode,
    CosetStructure,
    build_component_code,
    component_code,
    lemma3_counting,
    min_distance,
)
from .doob_code import CapExceeded, DoobPerfectCode, check_admissibility
from .hamming import HammingCode
from .metrics import DoobShape, DoobVertex, index_to_word

DEFAULT_VERTEX_CAP = 2**24
CHUNK = 2**16
MAX_REPORTED_FAILURES = 20


@dataclass
class VerificationReport:
    m: int | None
    n: int | None
    k: int | None
    mode: str
    vertices_checked: int = 0
    failures: list[str] = field(default_factory=list)
    failure_count: int = 0
    samples: int | None = None
    seed: int | None = None
    checks: dict[str, bool] = field(default_factory=dict)
    counts: dict[str, int] = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return self.failure_count == 0 and all(self.checks.values())

    def fail(self, message: str):
        self.failure_count += 1
        if len(self.failures) < MAX_REPORTED_FAILURES:
            self.failures.append(message)

    def as_dict(self, include_timing: bool = False) -> dict:
        out = {
            "m": self.m,
            "n": self.n,
            "k": self.k,
            "mode": self.mode,
            "passed": self.passed,
            "vertices_checked": self.vertices_checked,
            "failure_count": self.failure_count,
            "failures": list(self.failures),
            "samples": self.samples,
            "seed": self.seed,
            "checks": dict(sorted(self.checks.items())),
            "counts": dict(sorted(self.counts.items())),
        }
        if include_timing:
            out["wall_time"] = round(self.wall_time, 6)
        return out

    def to_text(self, include_timing: bool = False) -> str:
        lines = []
        for key, value in self.as_dict(include_timing).items():
            if isinstance(value, dict):
                lines.extend(f"{key}.{k}: {v}" for k, v in value.items())
            elif isinstance(value, list):
                lines.extend(f"{key}[{i}]: {v}" for i, v in enumerate(value))
            else:
                lines.append(f"{key}: {'-' if value is None else value}")
        return "\n".join(lines) + "\n"

    def to_machine(self, include_timing: bool = False) -> str:
        return json.dumps(self.as_dict(include_timing), sort_keys=True) + "\n"


# --- perfection ------------------------------------------------------------------


def ball_counts(code: DoobPerfectCode, quads: np.ndarray, tail: np.ndarray) -> np.ndarray:
    """Number of codewords in the radius-1 ball of each vertex in the batch."""
    s = code.batch_syndromes(quads, tail)
    counts = (s == 0).astype(np.int64)
    for j in range(code.num_quads):
        w = quads[:, j]
        table = code.quad_syndrome_tables[j]
        rest = s ^ table[w]
        moved = table[code.quad_neighbor_tables[j][w]]
        counts += (moved == rest[:, None]).sum(axis=1)
    if tail.shape[1]:
        tail = np.asarray(tail, dtype=np.int64)
        pos = np.arange(tail.shape[1])
        table = code.tail_syndrome_table
        rest = s[:, None] ^ table[pos, tail]
        for delta in (1, 2, 3):
            counts += (table[pos, tail ^ delta] == rest).sum(axis=1)
    return counts


def _vertex_text(code: DoobPerfectCode, quads_row, tail_row) -> str:
    z4 = tuple(x for w in quads_row for x in index_to_word(int(w)))
    return str(DoobVertex(code.shape, z4, tuple(int(a) for a in tail_row)))


def _check_batch(code: DoobPerfectCode, quads, tail) -> tuple[int, list[str]]:
    counts = ball_counts(code, quads, tail)
    bad = np.flatnonzero(counts != 1)
    messages = [
        f"{_vertex_text(code, quads[i], tail[i])} covered {counts[i]} times"
        for i in bad[:MAX_REPORTED_FAILURES]
    ]
    return len(bad), messages


def _run_chunks(code, report, make_chunk, n_chunks, jobs):
    def work(c):
        return _check_batch(code, *make_chunk(c))

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(work, range(n_chunks)))
    else:
        results = [work(c) for c in range(n_chunks)]
    for bad, messages in results:
        report.failure_count += bad - len(messages)
        for msg in messages:
            report.fail(msg)


def _vertices_from_numbers(code: DoobPerfectCode, numbers: np.ndarray):
    length = code.length
    shifts = 2 * np.arange(length - 1, -1, -1, dtype=np.int64)
    digits = (numbers[:, None] >> shifts) & 3
    return code.split_coordinates(digits[:, : code.tail_offset]), digits[:, code.tail_offset :]


def verify_exhaustive(
    code: DoobPerfectCode, cap: int = DEFAULT_VERTEX_CAP, jobs: int = 1
) -> VerificationReport:
    """Check every vertex of D(m, n) lies in exactly one codeword ball."""
    total = code.shape.num_vertices
    if total > cap:
        raise CapExceeded(f"{code.shape} has {total} vertices, cap is {cap}")
    report = VerificationReport(code.m, code.n, code.k, "exhaustive")
    start = time.perf_counter()

    def make_chunk(c):
        numbers = np.arange(c * CHUNK, min(total, (c + 1) * CHUNK), dtype=np.int64)
        return _vertices_from_numbers(code, numbers)

    _run_chunks(code, report, make_chunk, -(-total // CHUNK), jobs)
    report.vertices_checked = total
    report.wall_time = time.perf_counter() - start
    return report


def random_vertices(code: DoobPerfectCode, count: int, seed: int, chunk: int = 0):
    rng = np.random.default_rng([seed, chunk])
    z4 = rng.integers(0, 4, size=(count, code.shape.z4_length))
    tail = rng.integers(0, 4, size=(count, code.shape.f4_length))
    return code.split_coordinates(z4), tail


def verify_sampled(
    code: DoobPerfectCode, samples: int, seed: int = 0, jobs: int = 1
) -> VerificationReport:
    """Check ``samples`` seeded random vertices each lie in exactly one codeword ball."""
    report = VerificationReport(code.m, code.n, code.k, "sampled", samples=samples, seed=seed)
    start = time.perf_counter()

    def make_chunk(c):
        return random_vertices(code, min(CHUNK, samples - c * CHUNK), seed, c)

    _run_chunks(code, report, make_chunk, -(-samples // CHUNK), jobs)
    report.vertices_checked = samples
    report.wall_time = time.perf_counter() - start
    return report


def verify(
    code: DoobPerfectCode,
    samples: int = 100_000,
    seed: int = 0,
    cap: int = DEFAULT_VERTEX_CAP,
    jobs: int = 1,
) -> VerificationReport:
    if code.shape.num_vertices <= cap:
        return verify_exhaustive(code, cap, jobs)
    return verify_sampled(code, samples, seed, jobs)


# --- component codes and Hamming code --------------------------------------------

ORTHOGONALITY = {
    "C'": [(1, 1, 1, 3)],
    "D'": [(0, 2, 0, 2), (2, 0, 2, 0)],
    "E'": [(1, 1, 1, 1)],
    "E''": [(1, 1, 1, 1), (3, 2, 1, 0)],
}


def quadruple_structure_holds(code: HammingCode) -> bool:
    """Each leading quadruple: last row (xi^2, xi, 1, 0), other rows constant."""
    mat = code.matrix
    for j in range(code.num_quadruples):
        block = mat[:, 4 * j : 4 * j + 4]
        if tuple(block[-1]) != (3, 2, 1, 0):
            return False
        if (block[:-1] != block[:-1, :1]).any():
            return False
    return True


def quadruple_translations(
    code: HammingCode, codewords: np.ndarray, e_code: ComponentCode | None = None
) -> tuple[int, int]:
    """Add every E'' word on every leading quadruple of every codeword.

    Returns ``(translations, failures)``; a failure is a result outside H.
    """
    e_words = np.array((e_code or component_code("E''")).words, dtype=np.int64)
    table = code.syndrome_table
    pos = np.arange(code.length)
    total = failures = 0
    for j in range(code.num_quadruples):
        words = np.repeat(codewords, len(e_words), axis=0)
        words[:, 4 * j : 4 * j + 4] ^= np.tile(e_words, (len(codewords), 1))
        syn = np.bitwise_xor.reduce(table[pos, words], axis=1)
        total += len(words)
        failures += int((syn != 0).sum())
    return total, failures


def run_lemma_suite(
    generators: Mapping[str, Sequence[Sequence[int]]] | None = None,
    seed: int = 0,
    translation_codewords: int = 100,
    translation_ks: Sequence[int] = (2, 3, 4),
) -> VerificationReport:
    """Component-code facts, the quadruple translation property and coset counting.

    ``generators`` overrides the generators of selected codes; used for
    mutation controls, which must make the suite fail.
    """
    generators = dict(generators or {})
    report = VerificationReport(None, None, None, "lemmas", seed=seed)
    start = time.perf_counter()
    codes = {name: build_component_code(name, generators.get(name)) for name in CODE_NAMES}

    for name, code in codes.items():
        expected = 16 if name.endswith("''") else 64
        report.checks[f"cardinality {name}"] = len(code) == expected
        try:
            d = min_distance(code)
        except AssertionError as exc:
            report.fail(str(exc))
            d = -1
        report.checks[f"min_distance {name}"] = d == (3 if name.endswith("''") else 2)
        for witness in ORTHOGONALITY.get(name, []):
            report.checks[f"orthogonal {name} {witness}"] = _orthogonal(code, witness)
    report.counts["cardinality"] = len(CODE_NAMES)
    report.counts["min_distance"] = len(CODE_NAMES)

    for pair in PAIRS:
        small, big = codes[pair + "''"], codes[pair + "'"]
        report.checks[f"nesting {pair}"] = small.element_set <= big.element_set
    report.counts["nesting"] = len(PAIRS)

    listed = set(CPP_WORDS)
    report.checks["table C''"] = set(codes["C''"].words) == listed
    report.checks["table D''"] = set(codes["D''"].words) == listed

    for pair in PAIRS:
        try:
            result = lemma3_counting(CosetStructure(codes[pair + "''"], codes[pair + "'"]))
            ok = result.passed
            if not ok:
                report.fail(f"coset counting {pair}: {result.counterexample}")
        except ValueError as exc:
            ok = False
            report.fail(f"coset counting {pair}: {exc}")
        report.checks[f"coset counting {pair}"] = ok
    report.counts["coset_counting"] = len(PAIRS)

    rng = np.random.default_rng(seed)
    translations = 0
    for k in range(2, 7):
        report.checks[f"quadruple structure k={k}"] = quadruple_structure_holds(HammingCode(k))
    for k in translation_ks:
        ham = HammingCode(k)
        words = [(0,) * ham.length] + [ham.random_codeword(rng) for _ in range(translation_codewords)]
        total, bad = quadruple_translations(ham, np.array(words, dtype=np.int64), codes["E''"])
        translations += total
        report.checks[f"translation k={k}"] = bad == 0
        if bad:
            report.fail(f"k={k}: {bad} translated words left the Hamming code")
    report.counts["translations"] = translations
    report.wall_time = time.perf_counter() - start
    return report


def _orthogonal(code, witness) -> bool:
    from .algebra import f4_dot, z4_dot

    dot = f4_dot if code.ambient == "H(4,4)" else z4_dot
    return all(dot(w, witness).value == 0 for w in code.words)


# --- decoding benchmark -----------------------------------------------------------


@dataclass
class BenchSummary:
    m: int
    n: int
    length: int
    trials: int
    mean_seconds: float | None
    max_overhead_ops: int
    mean_overhead_ops: float | None


def bench_decode(code: DoobPerfectCode, trials: int, seed: int = 0) -> BenchSummary:
    """Mean wall time of :meth:`DoobPerfectCode.decode` on seeded random vertices."""
    if trials == 0:
        return BenchSummary(code.m, code.n, code.length, 0, None, 0, None)
    vertices = bench_vertices(code, trials, seed)
    ops = []
    start = time.perf_counter()
    for v in vertices:
        ops.append(code.decode_counted(v)[1])
    elapsed = time.perf_counter() - start
    return BenchSummary(
        code.m, code.n, code.length, trials, elapsed / trials, max(ops), sum(ops) / trials
    )


def bench_vertices(code: DoobPerfectCode, trials: int, seed: int) -> list[DoobVertex]:
    rng = np.random.default_rng(seed)
    z4 = rng.integers(0, 4, size=(trials, code.shape.z4_length)).tolist()
    f4 = rng.integers(0, 4, size=(trials, code.shape.f4_length)).tolist()
    return [DoobVertex(code.shape, tuple(a), tuple(b)) for a, b in zip(z4, f4)]


def bench_shape(k: int) -> DoobShape:
    """Admissible shape of length (4**k - 1)/3 with as many Shrikhande factors as possible."""
    length = (4**k - 1) // 3
    m = (length - 1) // 2
    if m % 2:
        m -= 1
    assert check_admissibility(m, length - 2 * m)
    return DoobShape(m, length - 2 * m)


def bench_scaling(
    ks: Sequence[int] = (2, 3, 4, 5, 6), trials: int = 200, seed: int = 0
) -> list[BenchSummary]:
    out = []
    for k in ks:
        shape = bench_shape(k)
        code = DoobPerfectCode(shape.m, shape.n)
        code.decode(bench_vertices(code, 1, seed)[0])  # build lookup tables outside timing
        out.append(bench_decode(code, trials, seed))
    return out
