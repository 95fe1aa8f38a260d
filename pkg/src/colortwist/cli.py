"""Command-line interface: ``colortwist <command> ...``.

Exit status is 0 when every requested check passes, 1 when a verification
fails, and 2 for invalid arguments or unreadable and unwritable files.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import NoReturn, TextIO

from . import __version__
from .acceptance import CLAIMS, format_line, run_claim
from .anyons import builtin_model, display_order, verify_model
from .boundaries import enumerate_lagrangian_subgroups, fold_table
from .codes import FAMILIES, FamilyParams, build_code, dumps, loads, validate_code
from .codes.validate import encoding_rate
from .pauli import (
    StabilizerCode,
    check_commutation,
    code_k,
    distance_exact,
    format_check_matrix,
    gauge_qubit_count,
    parse_check_matrix,
)
from .symmetries import (
    TABLE_COLUMNS,
    TABLE_ROWS,
    class_table,
    conjugacy_classes,
    describe,
    enumerate_symmetries,
    quantum_dimension_squared,
    symmetry_names,
    word,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
_MODELS = {"cc": "CC", "tc": "TC", "3f": "3F"}


class UsageError(Exception):
    """Bad parameters or I/O trouble; reported on one line with exit status 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise UsageError(message)


def _model(name: str):
    return builtin_model(_MODELS[name])


# ---------------------------------------------------------------- anyons


def _sign(v: int) -> str:
    return "+1" if v == 1 else "-1"


def cmd_anyons(args: argparse.Namespace, out: TextIO) -> int:
    m = _model(args.model)
    order = display_order(m)
    labels = [m.labels[v] for v in order]
    width = max(len(x) for x in labels) + 1
    if args.table == "spin":
        for v in order:
            out.write(f"{m.labels[v]:<{width}}{_sign(m.spins[v])}\n")
    else:
        out.write(" " * width + "".join(f"{x:>{width}}" for x in labels) + "\n")
        for a in order:
            if args.table == "fusion":
                cells = [m.labels[a ^ b] for b in order]
            else:
                cells = [_sign(m.monodromies[a][b]) for b in order]
            out.write(f"{m.labels[a]:<{width}}" + "".join(f"{c:>{width}}" for c in cells) + "\n")
    if args.verify:
        report = verify_model(m)
        for law in report.laws:
            out.write(f"{law}\n")
        return EXIT_OK if report.passed else EXIT_FAIL
    return EXIT_OK


# ---------------------------------------------------------------- symmetries


def cmd_symmetries(args: argparse.Namespace, out: TextIO) -> int:
    name = _MODELS[args.model]
    group = enumerate_symmetries(name)
    if args.count:
        out.write(f"{len(group)}\n")
        return EXIT_OK
    if name != "CC":
        names = symmetry_names(name)
        for g in group:
            out.write(f"{names[g]}\n")
        return EXIT_OK
    for g in group:
        out.write(f"{describe(g)}\n")
    if args.classes:
        out.write("\n")
        for cls in conjugacy_classes(group):
            d2 = quantum_dimension_squared(cls.representative)
            out.write(f"class {cls.name}: size {len(cls):>2}, representative {describe(cls.representative)}, d^2 = {d2}\n")
        for with_d in (False, True):
            out.write("\n" + ("D o " if with_d else "    ") + "".join(f"{c:>4}" for c in TABLE_COLUMNS) + "\n")
            for row, cells in zip(TABLE_ROWS, class_table(with_d)):
                out.write(f"{row:<4}" + "".join(f"{c:>4}" for c in cells) + "\n")
    if args.dims:
        for prefix in ("", "D "):
            out.write("\n" + ("D o " if prefix else "d^2 ") + "".join(f"{c:>4}" for c in TABLE_COLUMNS) + "\n")
            for row in TABLE_ROWS:
                cells = [quantum_dimension_squared(word(f"{prefix}{row} {c}")) for c in TABLE_COLUMNS]
                out.write(f"{row:<4}" + "".join(f"{c:>4}" for c in cells) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------- boundaries


def cmd_boundaries(args: argparse.Namespace, out: TextIO) -> int:
    subs = enumerate_lagrangian_subgroups(_MODELS[args.model])
    for b in subs:
        out.write(f"{b}\n")
    out.write(f"{len(subs)} Lagrangian subgroups\n")
    if args.folds:
        for wall, boundary in fold_table():
            out.write(f"fold {wall} -> {boundary}\n")
    return EXIT_OK


# ---------------------------------------------------------------- code


def _params(args: argparse.Namespace) -> FamilyParams:
    try:
        return FamilyParams(args.family, d=args.d, s=args.s, lattice=args.lattice, l=args.l, L=args.L)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_code_build(args: argparse.Namespace, out: TextIO) -> int:
    params = _params(args)
    try:
        spec, code = build_code(params)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    text = dumps(spec, code) if args.format == "json" else format_check_matrix(code)
    if args.out is None or args.out == "-":
        out.write(text)
    else:
        try:
            Path(args.out).write_text(text)
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc.strerror}") from exc
        out.write(f"wrote {args.out}: n = {code.n}, {len(code.stabilizers)} stabilizers\n")
    return EXIT_OK


def _read_code(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        if text.lstrip().startswith("{"):
            return loads(text)
        return None, parse_check_matrix(text)
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def cmd_code_params(args: argparse.Namespace, out: TextIO) -> int:
    spec, code = _read_code(args.path)
    meta = dict(code.metadata)
    if "family" in meta and "walls" not in meta:
        try:
            params = FamilyParams.from_metadata(meta)
        except (KeyError, ValueError) as exc:
            raise UsageError(f"{args.path}: bad metadata: {exc}") from exc
        report = validate_code(code, params, spec, args.distance_max, args.dressed, args.workers)
        out.write(f"family {params.family}" + "".join(
            f" {k}={v}" for k, v in (("lattice", params.lattice), ("s", params.s), ("d", params.d),
                                     ("l", params.l), ("L", params.L)) if v is not None
        ) + "\n")
        out.write(f"n = {report.n}\nk = {report.k}\ngauge qubits = {report.gauge_qubits}\n")
        out.write(f"weights = {', '.join(map(str, report.weights))}\n")
        out.write(f"distance = {report.distance if report.distance is not None else 'not checked'}\n")
        out.write(f"c = {report.rate if report.rate is not None else 'n/a'}\n")
        for line in report.lines():
            out.write(line + "\n")
        out.write(f"{report.summary()} {'PASS' if report.ok else 'FAIL'}\n")
        return EXIT_OK if report.ok else EXIT_FAIL
    return _plain_params(code, args, out)


def _plain_params(code: StabilizerCode, args: argparse.Namespace, out: TextIO) -> int:
    """Parameters of a code with no family metadata: nothing to compare against."""
    if check_commutation(code) is not None:
        out.write("FAIL commutation\n")
        return EXIT_FAIL
    k = code_k(code)
    result = distance_exact(code, args.distance_max, args.dressed, args.workers) if k else None
    out.write(f"n = {code.n}\nk = {k}\ngauge qubits = {gauge_qubit_count(code)}\n")
    out.write(f"weights = {', '.join(map(str, sorted({p.weight for p in code.stabilizers})))}\n")
    out.write(f"distance = {result if result is not None else 'n/a'}\n")
    if result is not None and result.distance is not None:
        out.write(f"c = {encoding_rate(code, result.distance)}\n")
    d = result if result is not None else "-"
    out.write(f"[[{code.n},{k},{d}]] PASS\n")
    return EXIT_OK


# ---------------------------------------------------------------- verify-paper


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    chosen = [c for c in CLAIMS if not args.only or c.number in args.only]
    if args.only and len(chosen) != len(set(args.only)):
        raise UsageError(f"claims are numbered 1 to {len(CLAIMS)}")
    failed = 0
    for claim in chosen:
        result, _ = run_claim(claim)
        failed += not result.ok
        out.write(format_line(claim, result) + "\n")
        out.flush()
    out.write(f"{len(chosen) - failed}/{len(chosen)} claims pass\n")
    return EXIT_OK if not failed else EXIT_FAIL


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="colortwist", description="Color-code anyons, twists and stabilizer codes.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("anyons", help="fusion, spin and monodromy tables")
    p.add_argument("--model", choices=sorted(_MODELS), default="cc")
    p.add_argument("--table", choices=("fusion", "spin", "monodromy"), default="fusion")
    p.add_argument("--verify", action="store_true", help="also check the model laws")
    p.set_defaults(run=cmd_anyons)

    p = sub.add_parser("symmetries", help="symmetry group, classes and quantum dimensions")
    p.add_argument("--model", choices=sorted(_MODELS), default="cc")
    p.add_argument("--count", action="store_true")
    p.add_argument("--classes", action="store_true")
    p.add_argument("--dims", action="store_true")
    p.set_defaults(run=cmd_symmetries)

    p = sub.add_parser("boundaries", help="Lagrangian subgroups")
    p.add_argument("--model", choices=sorted(_MODELS), default="cc")
    p.add_argument("--folds", action="store_true", help="boundaries from folded three-fermion walls")
    p.set_defaults(run=cmd_boundaries)

    p = sub.add_parser("code", help="build codes and report their parameters")
    code_sub = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    b = code_sub.add_parser("build", help="generate a code family member")
    b.add_argument("--family", choices=FAMILIES, required=True)
    b.add_argument("--lattice", choices=("666", "488"))
    b.add_argument("--s", type=int)
    b.add_argument("--d", type=int)
    b.add_argument("--l", type=int, help="side of a Pauli-boundary triangle")
    b.add_argument("--L", type=int, help="torus size; the triangulated torus is 3L x 3L")
    b.add_argument("--out", help="output path, '-' for stdout (default)")
    b.add_argument("--format", choices=("json", "text"), default="json")
    b.set_defaults(run=cmd_code_build)
    q = code_sub.add_parser("params", help="n, k, weights, distance and rate of a saved code")
    q.add_argument("path", help="JSON document or check-matrix text, '-' for stdin")
    q.add_argument("--distance-max", type=int, default=5)
    q.add_argument("--dressed", action=argparse.BooleanOptionalAction, default=True)
    q.add_argument("--workers", type=int, default=1)
    q.set_defaults(run=cmd_code_params)

    p = sub.add_parser("verify-paper", help="run the reproducibility claims")
    p.add_argument("--only", type=int, nargs="+", help="claim numbers to run")
    p.set_defaults(run=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "workers", 1) < 1 or getattr(args, "distance_max", 1) < 0:
            raise UsageError("--workers must be positive and --distance-max non-negative")
        return int(args.run(args, out))
    except UsageError as exc:
        print(f"colortwist: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
