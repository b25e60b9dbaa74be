"""Command-line front end: ``qcd <verb> [options]``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .classify import acceptance_grid, default_grid, verify_theorem
from .cyclic import CyclicCode, cc_bar, cc_dual, cc_generator_matrix, cc_is_lcd, cc_is_self_orthogonal, cc_units
from .errors import QCDError
from .gf import field_elements, field_from_order
from .goursat import (
    GoursatData,
    qc_construct,
    qc_decompose,
    qc_generator_matrix,
    qc_is_consta_dihedral,
    qc_is_dihedral,
    qc_is_double_circulant,
    qc_is_principal,
    qc_is_self_dual,
    qc_two_generators,
)
from .idem import factor_xn1, primitive_idempotents
from .matrix import same_row_space
from .oracle import (
    oracle_double_circulant,
    oracle_min_distance,
    oracle_self_dual,
    oracle_shift_invariant,
    oracle_y_closed,
    oracle_ytilde_closed,
)
from .text import format_field, format_poly, matrix_pairs, parse_field, parse_poly, parse_support, read_matrix, write_matrix
from .worked import example_f4, example_f5

DEFAULT_CAP = 10**7

CHECKS = {
    "selfdual": qc_is_self_dual,
    "dihedral": qc_is_dihedral,
    "constadihedral": qc_is_consta_dihedral,
    "doublecirculant": qc_is_double_circulant,
    "principal": qc_is_principal,
}

# name -> (fixture, cases to show)
REPRO = {
    "f4": (example_f4, ("1", "2", "3")),
    "f5": (example_f5, ("1", "2", "3")),
    # aliases fixed by the command-line interface
    "example-1.1": (example_f4, ("1", "2")),
    "example-5.5": (example_f4, ("1", "2", "3")),
    "example-6.5": (example_f5, ("1", "2", "3")),
}


class UsageError(Exception):
    pass


def _cap(args) -> int:
    if getattr(args, "cap", None) is not None:
        return args.cap
    return int(os.environ.get("QCD_CAP", DEFAULT_CAP))


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _emit(args, obj: dict, text: str) -> None:
    target = getattr(args, "json", None)
    if target is None:
        print(text)
    elif target == "-":
        print(_dump(obj))
    else:
        with open(target, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(_dump(obj) + "\n")
        print(text)


def _require(args, *names: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n, None) is None]
    if missing:
        raise UsageError(f"{args.verb} requires {', '.join(missing)}")


def _basis(args):
    _require(args, "field", "n")
    return primitive_idempotents(parse_field(args.field), args.n)


def _data(args, basis) -> GoursatData:
    if getattr(args, "data", None):
        with open(args.data, encoding="utf-8") as fh:
            return GoursatData.from_json(basis, json.load(fh))
    F, n = basis.field, basis.n
    g = parse_poly(F, n, args.g) if args.g else None
    return GoursatData.from_supports(basis, parse_support(args.c1), parse_support(args.c2), parse_support(args.c12), g)


def _table(rows: list[tuple[str, str]]) -> str:
    width = max((len(k) for k, _ in rows), default=0)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def cmd_field(args) -> None:
    _require(args, "field")
    F = parse_field(args.field)
    elems = [str(e) for e in field_elements(F)]
    obj = {"p": F.p, "m": F.m, "q": F.q, "modulus": list(F.modulus), "elements": [e.to_json() for e in field_elements(F)]}
    _emit(args, obj, _table([("field", format_field(F)), ("q", str(F.q)), ("elements", " ".join(elems))]))


def cmd_factor(args) -> None:
    _require(args, "field", "n")
    F = parse_field(args.field)
    factors = factor_xn1(F, args.n)
    texts = [",".join(F.format(c) for c in f) for f in factors]
    _emit(args, {"factors": [[F.element(c).to_json() for c in f] for f in factors]}, "\n".join(texts))


def cmd_idempotents(args) -> None:
    basis = _basis(args)
    rows = []
    for i, e in enumerate(basis.idempotents):
        kind = "E1" if i in basis.fixed else "E2"
        rows.append((f"e{i}", f"{format_poly(e)}  dim={basis.dims[i]}  bar=e{basis.bar_perm[i]}  {kind}"))
    _emit(args, basis.to_json(), _table(rows))


def cmd_cyclic(args) -> None:
    basis = _basis(args)
    C = CyclicCode.of(basis, parse_support(args.support))
    op = args.op
    if op == "dual":
        D = cc_dual(C)
        _emit(args, D.to_json(), f"support {sorted(D.support)} dim {D.dim}")
    elif op == "bar":
        D = cc_bar(C)
        _emit(args, D.to_json(), f"support {sorted(D.support)} dim {D.dim}")
    elif op == "lcd":
        v = cc_is_lcd(C)
        _emit(args, {"lcd": v}, f"lcd {str(v).lower()}")
    elif op == "selforth":
        v = cc_is_self_orthogonal(C)
        _emit(args, {"self_orthogonal": v}, f"self-orthogonal {str(v).lower()}")
    elif op == "genmat":
        M = cc_generator_matrix(C)
        _emit(args, {"matrix": M.tolist(), "dim": C.dim}, write_matrix(M).rstrip())
    elif op == "units":
        units = cc_units(C, cap=_cap(args))
        _emit(args, {"units": [u.to_json() for u in units]}, "\n".join(format_poly(u) for u in units))
    else:
        _emit(args, C.to_json(), f"support {sorted(C.support)} dim {C.dim}")


def _verdicts(data: GoursatData) -> dict[str, bool]:
    return {k: f(data) for k, f in CHECKS.items()}


def cmd_construct(args) -> None:
    basis = _basis(args)
    data = _data(args, basis)
    code = qc_construct(data)
    M = qc_generator_matrix(code)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(write_matrix(M))
    g1, g2 = qc_two_generators(data)
    obj = {
        "data": data.to_json(),
        "dim": code.dim,
        "components": [str(c) for c in code.components],
        "generators": [[format_poly(a), format_poly(b)] for a, b in (g1, g2)],
        "matrix": M.tolist(),
    }
    rows = [(f"e{i}", str(c)) for i, c in enumerate(code.components)]
    rows.append(("dim", str(code.dim)))
    text = _table(rows) + "\n" + write_matrix(M).rstrip()
    _emit(args, obj, text)


def cmd_decompose(args) -> None:
    _require(args, "field", "gens")
    F = parse_field(args.field)
    with open(args.gens, encoding="utf-8") as fh:
        M = read_matrix(F, fh)
    n = M.cols // 2
    if args.n is not None and args.n != n:
        raise UsageError(f"matrix has {M.cols} columns but --n is {args.n}")
    basis = primitive_idempotents(F, n)
    data = qc_decompose(matrix_pairs(M), basis)
    text = _table(
        [("C1", str(sorted(data.C1.support))), ("C2", str(sorted(data.C2.support))), ("C12", str(sorted(data.C12.support))), ("g", format_poly(data.g))]
    )
    _emit(args, data.to_json(), text)


def cmd_check(args) -> None:
    basis = _basis(args)
    data = _data(args, basis)
    names = list(CHECKS) if args.what == "all" else [args.what]
    out = {k: CHECKS[k](data) for k in names}
    _emit(args, out, _table([(k, str(v).lower()) for k, v in out.items()]))


def cmd_oracle(args) -> None:
    _require(args, "field", "genmat")
    F = parse_field(args.field)
    with open(args.genmat, encoding="utf-8") as fh:
        M = read_matrix(F, fh)
    n = M.cols // 2
    check = args.check
    if check == "selfdual":
        v = oracle_self_dual(M, n)
    elif check == "yclosed":
        v = oracle_y_closed(M, n)
    elif check == "ytildeclosed":
        v = oracle_ytilde_closed(M, n)
    elif check == "shift":
        v = oracle_shift_invariant(M, n)
    elif check == "dc":
        a = oracle_double_circulant(M, n)
        obj = {"double_circulant": a is not None, "a": None if a is None else a.to_json()}
        _emit(args, obj, "absent" if a is None else format_poly(a))
        return
    else:
        d = oracle_min_distance(M)
        _emit(args, {"min_distance": d}, str(d))
        return
    _emit(args, {check: v}, str(v).lower())


def _report_text(rep) -> str:
    rows = [("q", str(rep.q)), ("n", str(rep.n))]
    rows += [(f"count.{k}", str(v)) for k, v in rep.counts.items()]
    rows += [(f"criterion.{k}", "vacuous" if v is None else str(v).lower()) for k, v in sorted(rep.criteria.items())]
    rows.append(("verdict", str(rep.verdict).lower()))
    rows.append(("counts", "from enumeration"))
    return _table(rows)


def cmd_classify(args) -> None:
    basis = _basis(args)
    rep = verify_theorem(basis, cap=_cap(args))
    _emit(args, rep.to_json(), _report_text(rep))


def cmd_sweep(args) -> None:
    grid = acceptance_grid() if args.grid == "acceptance" else default_grid()
    cap = _cap(args)
    for q, n in grid:
        rep = verify_theorem(primitive_idempotents(field_from_order(q), n), cap=cap)
        print(_dump(rep.to_json()), flush=True)


def cmd_repro(args) -> None:
    factory, wanted = REPRO[args.name]
    ex = factory()
    basis = ex.basis
    cases = []
    lines = [f"{ex.name}: GF({basis.field.q}), n={basis.n}"]
    for k, e in ex.idempotents.items():
        lines.append(f"  {k} = {format_poly(e)}  (index {basis.index_of(e)})")
    for case in ex.cases:
        if case.name not in wanted:
            continue
        M = qc_generator_matrix(case.data)
        v = _verdicts(case.data)
        entry = {"case": case.name, "data": case.data.to_json(), "matrix": M.tolist(), **v}
        lines.append(f"case ({case.name})")
        if case.matrix is not None:
            same = same_row_space(case.matrix, M)
            entry["reference_matrix"] = case.matrix.tolist()
            entry["same_row_space"] = same
            lines.append("  reference matrix")
            lines += ["    " + ln for ln in write_matrix(case.matrix).rstrip().splitlines()]
            lines.append(f"  same row space: {str(same).lower()}")
        lines.append("  canonical generator matrix")
        lines += ["    " + ln for ln in write_matrix(M).rstrip().splitlines()]
        lines += [f"  {k}: {str(val).lower()}" for k, val in v.items()]
        cases.append(entry)
    _emit(args, {"example": ex.name, "cases": cases}, "\n".join(lines))


VERBS = {
    "field": cmd_field,
    "factor": cmd_factor,
    "idempotents": cmd_idempotents,
    "cyclic": cmd_cyclic,
    "construct": cmd_construct,
    "decompose": cmd_decompose,
    "check": cmd_check,
    "oracle": cmd_oracle,
    "classify": cmd_classify,
    "sweep": cmd_sweep,
    "repro": cmd_repro,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qcd", description="2-quasi-cyclic codes over finite fields")
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, field=True, n=True):
        if field:
            p.add_argument("--field", help="p^m, p^m:c0,...,cm or a prime power q")
        if n:
            p.add_argument("--n", type=int)
        p.add_argument("--json", nargs="?", const="-", default=None, metavar="PATH", help="JSON to stdout, or to PATH")
        p.add_argument("--cap", type=int, default=None)

    def goursat_flags(p):
        p.add_argument("--c1", help="support of C1, e.g. 1,2")
        p.add_argument("--c2")
        p.add_argument("--c12")
        p.add_argument("--g", help="ascending coefficients of g, e.g. 1,w,w^2")
        p.add_argument("--data", help="GoursatData JSON file")

    common(sub.add_parser("field"), n=False)
    common(sub.add_parser("factor"))
    common(sub.add_parser("idempotents"))
    p = sub.add_parser("cyclic")
    common(p)
    p.add_argument("--support")
    p.add_argument("--op", choices=["dual", "bar", "lcd", "selforth", "genmat", "units", "show"], default="show")
    p = sub.add_parser("construct")
    common(p)
    goursat_flags(p)
    p.add_argument("--out", help="write the generator matrix file here")
    p = sub.add_parser("decompose")
    common(p)
    p.add_argument("--gens", help="matrix file whose rows are generators (a | b)")
    p = sub.add_parser("check")
    common(p)
    goursat_flags(p)
    p.add_argument("--what", choices=[*CHECKS, "all"], default="all")
    p = sub.add_parser("oracle")
    common(p, n=False)
    p.add_argument("--genmat")
    p.add_argument("--check", choices=["selfdual", "yclosed", "ytildeclosed", "dc", "shift", "mindist"], default="selfdual")
    common(sub.add_parser("classify"))
    p = sub.add_parser("sweep")
    p.add_argument("--grid", choices=["default", "acceptance"], default="default")
    p.add_argument("--cap", type=int, default=None)
    p = sub.add_parser("repro")
    p.add_argument("name", choices=sorted(REPRO))
    p.add_argument("--json", nargs="?", const="-", default=None, metavar="PATH")
    return parser


def _error(kind: str, detail: str) -> None:
    print(_dump({"error": {"kind": kind, "detail": detail}}))


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        VERBS[args.verb](args)
    except UsageError as exc:
        _error("UsageError", str(exc))
        return 2
    except QCDError as exc:
        _error(exc.kind, str(exc))
        return 1
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        _error("UsageError", str(exc))
        return 2
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
