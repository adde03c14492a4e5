"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 inadmissible parameters, 4 cap exceeded, 5 vertex of the wrong shape.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .component_codes import substitution_map
from .doob_code import (
    DEFAULT_ENUMERATION_CAP,
    CapExceeded,
    DoobPerfectCode,
    InadmissibleParameters,
    additive_code_witness,
    check_admissibility,
    export_codewords,
)
from .hamming import format_check_matrix
from .metrics import ShapeMismatch, doob_distance, parse_vertex
from .verifier import DEFAULT_VERTEX_CAP, bench_scaling, run_lemma_suite, verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INADMISSIBLE, EXIT_CAP, EXIT_SHAPE = range(6)


def _emit(fmt: str, data: dict):
    if fmt == "machine":
        print(json.dumps(data, sort_keys=True))
    else:
        for key, value in data.items():
            print(f"{key}: {value}")


def cmd_admissible(args) -> int:
    adm = check_admissibility(args.m, args.n)
    data = {
        "graph": f"D({args.m},{args.n})",
        "admissible": adm.admissible,
        "k": adm.k if adm else "-",
        "ball": adm.ball_size,
    }
    if adm:
        witness = additive_code_witness(args.m, args.n)
        data["additive"] = (
            "no additive code exists"
            if witness is None
            else "conditions met (Gamma={}, Delta={}, n''={})".format(*witness)
        )
    _emit(args.format, data)
    return EXIT_OK if adm else EXIT_INADMISSIBLE


def cmd_construct(args) -> int:
    code = DoobPerfectCode(args.m, args.n)
    cap = args.cap or DEFAULT_ENUMERATION_CAP
    if args.enumerate and code.size > cap:
        raise CapExceeded(f"{code.shape} code has {code.size} words, cap is {cap}")
    out = Path(args.out or f"doob_{args.m}_{args.n}")
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for flavor in ("phi", "psi"):
        path = out / f"{flavor}.txt"
        path.write_text(substitution_map(flavor).export())
        written.append(path)
    path = out / "check_matrix.txt"
    path.write_text(format_check_matrix(code.hamming.matrix))
    written.append(path)
    if code.size <= cap:
        path = out / "codewords.txt"
        path.write_text(export_codewords(code, cap))
        written.append(path)
    for path in written:
        print(path)
    return EXIT_OK


def cmd_decode(args) -> int:
    code = DoobPerfectCode(args.m, args.n)
    y = parse_vertex(code.shape, args.vertex)
    c = code.decode(y)
    _emit(args.format, {"codeword": str(c), "distance": doob_distance(y, c)})
    return EXIT_OK


def cmd_member(args) -> int:
    code = DoobPerfectCode(args.m, args.n)
    y = parse_vertex(code.shape, args.vertex)
    _emit(args.format, {"vertex": str(y), "member": code.is_member(y)})
    return EXIT_OK


def cmd_verify(args) -> int:
    code = DoobPerfectCode(args.m, args.n)
    report = verify(
        code,
        samples=args.samples,
        seed=args.seed,
        cap=args.cap or DEFAULT_VERTEX_CAP,
        jobs=args.jobs,
    )
    lemmas = run_lemma_suite(seed=args.seed)
    if args.format == "machine":
        print(json.dumps({"perfection": report.as_dict(), "lemmas": lemmas.as_dict()}, sort_keys=True))
    else:
        print("[perfection]")
        print(report.to_text(), end="")
        print("[lemmas]")
        print(lemmas.to_text(), end="")
    return EXIT_OK if report.passed and lemmas.passed else EXIT_FAIL


def cmd_tables(args) -> int:
    text = substitution_map(args.flavor).export()
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_bench(args) -> int:
    for s in bench_scaling(tuple(args.ks), args.trials, args.seed):
        _emit(
            args.format,
            {
                "graph": f"D({s.m},{s.n})",
                "length": s.length,
                "mean_us": f"{s.mean_seconds * 1e6:.2f}" if s.trials else "-",
                "max_overhead_ops": s.max_overhead_ops,
            },
        )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="doobcodes", description="1-perfect codes in Doob graphs D(m,n)"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_params(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("m", type=int)
        p.add_argument("n", type=int)
        p.add_argument("--format", choices=("text", "machine"), default="text")
        p.set_defaults(func=func)
        return p

    with_params("admissible", cmd_admissible, "check whether D(m,n) admits a 1-perfect code")

    p = with_params("construct", cmd_construct, "write substitution tables, check matrix, codewords")
    p.add_argument("--enumerate", action="store_true", help="fail unless codewords fit the cap")
    p.add_argument("--cap", type=int, help=f"codeword cap (default {DEFAULT_ENUMERATION_CAP})")
    p.add_argument("--out", help="output directory")

    p = with_params("decode", cmd_decode, "decode a received vertex")
    p.add_argument("vertex", help="vertex text, e.g. 0123|x")

    p = with_params("member", cmd_member, "test code membership of a vertex")
    p.add_argument("vertex")

    p = with_params("verify", cmd_verify, "certify perfection and the component-code facts")
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int, help=f"exhaustive vertex cap (default {DEFAULT_VERTEX_CAP})")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("tables", help="print the phi or psi substitution table")
    p.add_argument("flavor", choices=("phi", "psi"))
    p.add_argument("--out")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("bench", help="time decoding for k = 2..6")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--ks", type=int, nargs="+", default=[2, 3, 4, 5, 6])
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InadmissibleParameters as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INADMISSIBLE
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ShapeMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SHAPE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
