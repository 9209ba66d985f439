"""Command-line front end: ``gtsq {trees,poset,spectrum,charpoly,verify}``.

Exit codes: 0 on success or a passing verification, 1 when any selected
check fails, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import verify
from .exactpoly import charpoly
from .gts import HasseDiagram, build_hasse
from .matrices import exp_distance, exp_distance_qt, q_laplacian, qt_laplacian
from .spectra import eigen
from .trees import ORACLE_MAX_ORDER, TreeCode, TreeError, enumerate_trees, prufer_oracle

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _complex_pair(text: str) -> complex:
    try:
        re_, im = text.split(",")
        return complex(float(re_), float(im))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected RE,IM, got {text!r}") from None


def _code(text: str) -> TreeCode:
    try:
        return TreeCode.parse(text)
    except (TreeError, ValueError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _vertex_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated vertices, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv", "dot"))
    common.add_argument("--out", help="write output here instead of stdout")

    p = _Parser(prog="gtsq", description="Tree-shift poset and spectral monotonicity checks.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("trees", parents=[common], help="list canonical codes of all trees of order n")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--oracle", action="store_true", help="enumerate via Prüfer brute force instead")

    s = sub.add_parser("poset", parents=[common], help="Hasse diagram of GTS_n as DOT or JSON")
    s.add_argument("--n", type=int, required=True)

    s = sub.add_parser("spectrum", parents=[common], help="eigenvalues of one matrix as CSV")
    s.add_argument("code", type=_code)
    s.add_argument("--matrix", choices=("qlap", "qtlap", "ed", "edqt"), default="qlap")
    s.add_argument("--q", type=float)
    s.add_argument("--qt", type=_complex_pair, help="complex q as RE,IM; t is its conjugate")

    s = sub.add_parser("charpoly", parents=[common], help="det(xI - L^q), optionally with vertices deleted")
    s.add_argument("code", type=_code)
    s.add_argument("--delete", type=_vertex_list, default=())

    s = sub.add_parser("verify", parents=[common], help="run one claim checker, or all of them")
    s.add_argument("selector", help=f"one of {', '.join(sorted(verify.SELECTORS))}, or all")
    s.add_argument("--n", type=int, default=6)
    s.add_argument("--q", type=float, action="append", help="replace the real grid (repeatable)")
    s.add_argument("--qt", type=_complex_pair, action="append", help="replace the Hermitian grid (repeatable)")
    s.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--tol-override", type=float, help=argparse.SUPPRESS)
    s.add_argument("--inject-cover", action="store_true", help=argparse.SUPPRESS)
    return p


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_trees(args) -> int:
    fmt = args.format or "text"
    if fmt not in ("text", "json"):
        raise UsageError("trees supports --format text or json")
    if args.oracle:
        if not 1 <= args.n <= ORACLE_MAX_ORDER:
            raise UsageError(f"--oracle needs 1 <= n <= {ORACLE_MAX_ORDER}")
        codes = prufer_oracle(args.n)
    else:
        codes = enumerate_trees(args.n)
    if fmt == "json":
        _emit(json.dumps([c.to_json() for c in codes]) + "\n", args.out)
    else:
        _emit("".join(f"{c}\n" for c in codes), args.out)
    return EXIT_OK


def cmd_poset(args) -> int:
    fmt = args.format or "dot"
    if fmt not in ("dot", "json"):
        raise UsageError("poset supports --format dot or json")
    h = build_hasse(args.n)
    _emit(h.to_dot() if fmt == "dot" else h.dumps() + "\n", args.out)
    return EXIT_OK


def _matrix(args):
    t = args.code.tree()
    if args.matrix in ("qlap", "ed"):
        if args.q is None or args.qt is not None:
            raise UsageError(f"--matrix {args.matrix} takes a real --q")
        return q_laplacian(t, args.q) if args.matrix == "qlap" else exp_distance(t, args.q)
    if args.qt is None or args.q is not None:
        raise UsageError(f"--matrix {args.matrix} takes a complex --qt RE,IM")
    q = args.qt
    if args.matrix == "qtlap":
        return qt_laplacian(t, q, q.conjugate())
    return exp_distance_qt(t, q, q.conjugate())


def cmd_spectrum(args) -> int:
    fmt = args.format or "csv"
    if fmt not in ("csv", "json"):
        raise UsageError("spectrum supports --format csv or json")
    s = eigen(_matrix(args))
    if fmt == "json":
        text = json.dumps({"values": list(s.values), "clusters": [list(c) for c in s.clusters]}) + "\n"
    else:
        text = s.to_csv()
    _emit(text, args.out)
    return EXIT_OK


def cmd_charpoly(args) -> int:
    fmt = args.format or "text"
    if fmt not in ("text", "json"):
        raise UsageError("charpoly supports --format text or json")
    f = charpoly(args.code.tree(), args.delete)
    _emit((json.dumps(f.to_json()) if fmt == "json" else str(f)) + "\n", args.out)
    return EXIT_OK


def _with_reversed_cover(h: HasseDiagram) -> HasseDiagram:
    """Negative-control hook: add the reverse of the first cover edge."""
    i, j = h.covers[0]
    covers = sorted(h.covers + [(j, i)])
    witness = dict(h.witness)
    witness[(j, i)] = h.witness[(i, j)].reversed()
    return HasseDiagram(h.n, list(h.nodes), covers, witness)


def cmd_verify(args) -> int:
    fmt = args.format or "text"
    if fmt not in ("text", "json"):
        raise UsageError("verify supports --format text or json")
    if args.selector != "all" and args.selector not in verify.SELECTORS:
        raise UsageError(f"unknown selector {args.selector!r}")
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    try:
        grid = verify.QGrid(tuple(args.q)) if args.q else verify.QGrid.default()
        herm = verify.check_herm_grid(args.qt) if args.qt else verify.DEFAULT_HERM_GRID
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    hasse = None
    if args.inject_cover:
        if args.n < 4:
            raise UsageError("--inject-cover needs n >= 4")
        hasse = _with_reversed_cover(build_hasse(args.n))
    config = verify.VerifyConfig(n=args.n, grid=grid, herm_grid=herm, jobs=args.jobs, seed=args.seed, hasse=hasse)

    if args.tol_override is not None:
        with verify.slack_override(args.tol_override):
            reports = verify.run(args.selector, config)
    else:
        reports = verify.run(args.selector, config)

    ok = all(r.passed for r in reports)
    if fmt == "json":
        text = json.dumps({"passed": ok, "reports": [r.to_json() for r in reports]}, sort_keys=True) + "\n"
    else:
        parts = [r.to_text() for r in reports]
        if args.selector in ("table1", "all"):
            parts.insert(0, verify.format_table1(verify.locate_table1_pair()))
        text = "\n".join(parts) + "\n"
    _emit(text, args.out)
    if not ok and fmt != "json":
        failed = [r.to_json() for r in reports if not r.passed]
        sys.stderr.write(json.dumps({"passed": False, "failed": failed}, sort_keys=True) + "\n")
    return EXIT_OK if ok else EXIT_FAIL


COMMANDS = {
    "trees": cmd_trees,
    "poset": cmd_poset,
    "spectrum": cmd_spectrum,
    "charpoly": cmd_charpoly,
    "verify": cmd_verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        sys.stderr.write(f"gtsq: error: {exc}\n")
        return EXIT_USAGE
    except (TreeError, ValueError) as exc:
        sys.stderr.write(f"gtsq: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
