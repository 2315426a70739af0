"""Command-line interface.

Exit codes: 0 success/verified, 1 validation or bound violation, 2 usage or
file errors. Data streams on stdout are byte-stable; wall times and
progress go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import bounds, io, validators, verify
from .constructions import (
    GJSpec,
    balanced_join,
    cross_polytope_boundary,
    cycle,
    gj,
    remark_complex,
    suspended_join,
)
from .core import ComplexError, SimplicialComplex
from .enumeration import CLASS_NAMES, are_isomorphic, enumerate_class
from .validators import _REPORT_ORDER

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load(path: str) -> SimplicialComplex:
    try:
        return io.load_path(path)
    except OSError as exc:
        raise io.FormatError(f"cannot read {path}: {exc.strerror}")


def _threads(args) -> int:
    if getattr(args, "threads", None):
        return max(1, args.threads)
    try:
        return max(1, int(os.environ.get("FLAGTOP_THREADS", "1")))
    except ValueError:
        return 1


# ---------------------------------------------------------------------------
# subcommands

def _cmd_construct(args) -> int:
    builders = {
        "cycle": lambda: cycle(args.k),
        "j": lambda: balanced_join(args.m, args.n),
        "jstar": lambda: suspended_join(args.m, args.n),
        "cross": lambda: cross_polytope_boundary(args.d),
        "gj": lambda: gj(GJSpec(tuple(args.a), tuple(args.b)),
                         allow_unbalanced=args.allow_unbalanced),
        "remark": lambda: remark_complex(*args.lengths),
    }
    k = builders[args.family]()
    _emit(io.dumps_json(k) if args.json else io.dumps_text(k), args.out)
    return EXIT_OK


def _cmd_fvector(args) -> int:
    k = _load(args.file)
    fv = k.f_vector()
    if args.json:
        payload = {"schema": 1, "n": k.n, "dim": k.dim, "f_vector": list(fv),
                   "reduced_euler": k.reduced_euler_char()}
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write(f"n {k.n}\ndim {k.dim}\nf_vector {' '.join(map(str, fv))}\n"
                         f"reduced_euler {k.reduced_euler_char()}\n")
    return EXIT_OK


def _cmd_validate(args) -> int:
    k = _load(args.file)
    report = validators.classify(k)
    if args.json:
        sys.stdout.write(json.dumps(report.to_json_dict(), indent=2) + "\n")
    else:
        rows = [f"{'n':<24}{report.n}", f"{'dim':<24}{report.dim}"]
        for name in _REPORT_ORDER:
            verdict = report.verdicts[name]
            shown = "n/a" if verdict is None else ("yes" if verdict else "no")
            rows.append(f"{name:<24}{shown}")
        sys.stdout.write("\n".join(rows) + "\n")
    if args.require:
        wanted = [w.strip() for w in args.require.split(",") if w.strip()]
        unknown = [w for w in wanted if w not in _REPORT_ORDER]
        if unknown:
            raise io.FormatError(f"unknown verdicts in --require: {unknown}")
        if any(report.verdicts[w] is not True for w in wanted):
            return EXIT_VIOLATION
    return EXIT_OK


def _cmd_bound_check(args) -> int:
    k = _load(args.file)
    theorem = args.theorem
    try:
        if theorem == "3dim":
            reports = [bounds.check_upper_bound_3dim(k)]
        elif theorem == "c-bound":
            reports = [bounds.check_lemma_c_bound(k)]
        elif theorem == "facet-sums":
            reports = []
            for facet in k.facets:
                reports.append(bounds.check_facet_edge_sum(k, facet))
                reports.append(bounds.check_facet_vertex_sum(k, facet))
        elif theorem.startswith("generic:"):
            reports = bounds.check_generic_bound(k, int(theorem.split(":", 1)[1]))
        else:
            raise io.FormatError(f"unknown theorem {theorem!r}")
    except bounds.PreconditionError as exc:
        sys.stdout.write(json.dumps({"schema": 1, "error": str(exc),
                                     "validator": exc.validator}, indent=2) + "\n")
        return EXIT_VIOLATION
    sys.stdout.write(json.dumps([r.to_json_dict() for r in reports], indent=2) + "\n")
    return EXIT_OK if all(r.holds() for r in reports) else EXIT_VIOLATION


def _cmd_enumerate(args) -> int:
    start = time.perf_counter()
    result = enumerate_class(args.n, args.cls, f1=args.f1, threads=_threads(args))
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        for idx, k in enumerate(result.representatives):
            path = os.path.join(args.out, f"{args.cls}_n{args.n}_{idx:03d}.cplx")
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(io.dumps_text(k))
    sys.stdout.write(json.dumps(result.to_json_dict(), indent=2) + "\n")
    sys.stderr.write(f"enumerated in {time.perf_counter() - start:.2f}s\n")
    return EXIT_OK


def _cmd_iso(args) -> int:
    k1 = _load(args.file1)
    k2 = _load(args.file2)
    same = are_isomorphic(k1, k2)
    if args.json:
        sys.stdout.write(json.dumps({"schema": 1, "isomorphic": same}) + "\n")
    else:
        sys.stdout.write("isomorphic\n" if same else "not isomorphic\n")
    return EXIT_OK if same else EXIT_VIOLATION


def _cmd_verify(args) -> int:
    start = time.perf_counter()
    results = verify.run_suite(args.suite, threads=_threads(args))
    if args.json:
        payload = {"schema": 1, "suite": args.suite,
                   "checks": [{"id": r.check_id, "ok": r.ok, "detail": r.detail}
                              for r in results],
                   "ok": all(r.ok for r in results)}
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        for r in results:
            sys.stdout.write(f"{'PASS' if r.ok else 'FAIL'} {r.check_id}: {r.detail}\n")
            sys.stderr.write(f"  [{r.wall_time_s:.2f}s] {r.check_id}\n")
    sys.stderr.write(f"suite finished in {time.perf_counter() - start:.2f}s\n")
    return EXIT_OK if all(r.ok for r in results) else EXIT_VIOLATION


# ---------------------------------------------------------------------------
# parser

def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated ints, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flagtop",
        description="Construct, validate, count, bound-check, and enumerate "
                    "flag simplicial complexes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a named complex and print its facet file")
    fam = p.add_subparsers(dest="family", required=True)
    f = fam.add_parser("cycle", help="cycle on k >= 4 vertices")
    f.add_argument("--k", type=int, required=True)
    for name, desc in (("j", "balanced join of m circles on n vertices"),
                       ("jstar", "suspension of the balanced join on n-2 vertices")):
        f = fam.add_parser(name, help=desc)
        f.add_argument("--m", type=int, required=True)
        f.add_argument("--n", type=int, required=True)
    f = fam.add_parser("cross", help="boundary of the d-dimensional cross-polytope")
    f.add_argument("--d", type=int, required=True)
    f = fam.add_parser("gj", help="union of joins of circles (Eulerian maximizer family)")
    f.add_argument("--a", type=_int_list, required=True, metavar="L1,L2,...")
    f.add_argument("--b", type=_int_list, required=True, metavar="L1,L2,...")
    f.add_argument("--allow-unbalanced", action="store_true")
    f = fam.add_parser("remark", help="weak-but-not-normal union of three joins")
    f.add_argument("--lengths", type=_int_list, required=True, metavar="L1,L2,L3,L4")
    for f in fam.choices.values():
        f.add_argument("--out", help="write to file instead of stdout")
        f.add_argument("--json", action="store_true", help="JSON facet format")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("fvector", help="face counts and reduced Euler characteristic")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_fvector)

    p = sub.add_parser("validate", help="class membership report")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--require", help="comma list of verdicts that must hold (exit 1 otherwise)")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("bound-check", help="run an inequality checker, JSON reports")
    p.add_argument("file")
    p.add_argument("--theorem", required=True,
                   help="3dim | c-bound | facet-sums | generic:m")
    p.set_defaults(func=_cmd_bound_check)

    p = sub.add_parser("enumerate", help="isomorph-free enumeration of a class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--class", dest="cls", required=True, choices=CLASS_NAMES)
    p.add_argument("--f1", type=int, help="restrict to complexes with this edge count")
    p.add_argument("--out", help="directory for one facet file per representative")
    p.add_argument("--threads", type=int)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("iso", help="isomorphism test for two flag complexes")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_iso)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", default="paper-core")
    p.add_argument("--threads", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except io.FormatError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except ComplexError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except KeyError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
