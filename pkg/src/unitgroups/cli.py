"""Command-line surface: one subcommand per module, text or JSON out.

Exit codes are a stable contract: 0 on success (and, for check-style
commands, only when every property passed), 1 for domain errors (zero
denominators, out-of-range bounds, reducible moduli), 2 for input that
does not parse.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .classify import scan_classifications
from .extension import norm as _ext_norm
from .factor import factor_poly
from .gf import field_make
from .hahn import hs_section
from .parsing import (
    ParseError, parse_dyadic_ratfunc, parse_ext_elem, parse_extension,
    parse_field, parse_group, parse_hahn, parse_og_elem, parse_poly,
    parse_ratfunc,
)
from .perfect import (
    PCDecomposition, frobenius, frobenius_inv, pc_decompose, pc_level,
    pc_recompose,
)
from .ratfunc import decompose, multiplicative_rank
from .selfcheck import run_all, standard_probes
from .valuation import check_valuation_axioms, padic_valuation


def _emit(args, data, human: str) -> None:
    if args.json:
        print(json.dumps(data, separators=(",", ":")))
    else:
        print(human)


def _compact(s) -> str:
    return str(s).replace(" ", "")


# ---- subcommand handlers (return the exit code) ----

def _cmd_classify_scan(args) -> int:
    entries = list(scan_classifications(args.bound))
    fields = [e for e in entries if e.classification.indecomposable]
    disagreements = [e.classification.q for e in entries if not e.agree]
    data = {
        "bound": args.bound,
        "count": len(fields),
        "fields": [
            {"q": e.classification.q,
             "family": e.classification.family.value,
             "oracle_indecomposable": e.oracle_indecomposable}
            for e in fields
        ],
        "disagreements": disagreements,
    }
    lines = [
        f"q = {e.classification.q:<8} family = "
        f"{e.classification.family.value:<15} oracle agrees"
        for e in fields
    ]
    lines.append(f"{len(fields)} fields with indecomposable unit group up to "
                 f"{args.bound}; {len(disagreements)} oracle disagreements")
    _emit(args, data, "\n".join(lines))
    return 0 if not disagreements else 1


def _cmd_factor(args) -> int:
    spec = parse_field(args.field)
    f = parse_poly(spec, args.poly)
    unit, factors = factor_poly(f, seed=args.seed)
    parts = []
    if unit.val != 1 or not factors:
        parts.append(str(unit))
    for g, e in factors:
        parts.append(f"({g})" + (f"^{e}" if e > 1 else ""))
    data = {
        "field": str(spec),
        "input": _compact(f),
        "unit": _compact(unit),
        "factors": [{"poly": _compact(g), "exp": e} for g, e in factors],
    }
    _emit(args, data, " * ".join(parts))
    return 0


def _cmd_decompose(args) -> int:
    spec = parse_field(args.field)
    q = parse_ratfunc(spec, args.ratfunc)
    d = decompose(q, seed=args.seed)
    _emit(args, d.to_json_dict(), str(d))
    return 0


def _cmd_rank(args) -> int:
    spec = parse_field(args.field)
    elems = [parse_ratfunc(spec, s) for s in args.elements]
    r = multiplicative_rank(elems, seed=args.seed)
    _emit(args, {"rank": r, "count": len(elems)}, str(r))
    return 0


def _cmd_padic(args) -> int:
    text = args.rational.strip()
    try:
        r = Fraction(text.replace(" ", ""))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational number: {text!r}") from None
    v = padic_valuation(r, args.p)
    _emit(args, {"p": args.p, "input": text, "valuation": v}, str(v))
    return 0


_HAHN_ARITY = {"add": 2, "mul": 2, "inv": 1, "val": 1, "split": 1,
               "section": 1}


def _cmd_hahn(args) -> int:
    spec = parse_field(args.field)
    group = parse_group(args.group)
    op = args.op
    want = _HAHN_ARITY.get(op)
    if want is None:
        raise ParseError(f"unknown hahn operation {op!r} "
                         f"(choose from {sorted(_HAHN_ARITY)})")
    if len(args.operands) != want:
        raise ParseError(f"hahn {op} takes {want} operand(s), "
                         f"got {len(args.operands)}")
    if op == "section":
        g = parse_og_elem(group, args.operands[0])
        s = hs_section(spec, group, g)
        _emit(args, {"series": str(s)}, str(s))
        return 0
    series = [parse_hahn(spec, group, text) for text in args.operands]
    if op == "add":
        s = series[0] + series[1]
        _emit(args, {"series": str(s)}, str(s))
    elif op == "mul":
        s = series[0] * series[1]
        _emit(args, {"series": str(s)}, str(s))
    elif op == "inv":
        s = series[0].inverse(args.terms)
        _emit(args, {"series": str(s)}, str(s))
    elif op == "val":
        g = series[0].valuation()
        _emit(args, {"valuation": str(g)}, str(g))
    else:  # split
        g, w = series[0].unit_split()
        _emit(args, {"exponent": str(g), "unit": str(w)},
              f"exponent = {g}\nunit = {w}")
    return 0


_PC_OPS = ("frobenius", "frobenius-inv", "level", "decompose", "recompose")


def _cmd_pc(args) -> int:
    op = args.op
    if op not in _PC_OPS:
        raise ParseError(f"unknown pc operation {op!r} "
                         f"(choose from {list(_PC_OPS)})")
    if op == "recompose":
        try:
            payload = json.loads(args.operand)
            raw = [(item["poly"], item["exp"])
                   for item in payload["factors"]]
        except (json.JSONDecodeError, TypeError, KeyError) as exc:
            raise ParseError(f"bad decomposition JSON: {exc}") from None
        spec = field_make(2)
        factors = []
        for poly_text, exp_text in raw:
            p = parse_poly(spec, str(poly_text), var="t")
            try:
                e = Fraction(str(exp_text))
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"bad exponent {exp_text!r}") from None
            factors.append((p, e))
        factors.sort(key=lambda fe: (fe[0].degree, fe[0].int_code))
        d = PCDecomposition(tuple(factors))
        result = pc_recompose(d)
        _emit(args, {"element": str(result)}, str(result))
        return 0
    q = parse_dyadic_ratfunc(args.operand)
    if op == "frobenius":
        r = frobenius(q)
        _emit(args, {"element": str(r)}, str(r))
    elif op == "frobenius-inv":
        r = frobenius_inv(q)
        _emit(args, {"element": str(r)}, str(r))
    elif op == "level":
        lvl = pc_level(q)
        _emit(args, {"level": lvl}, str(lvl))
    else:  # decompose
        d = pc_decompose(q, seed=args.seed)
        _emit(args, d.to_json_dict(), str(d))
    return 0


def _cmd_norm(args) -> int:
    ext = parse_extension(args.ext)
    u = parse_ext_elem(ext, args.element)
    value = _ext_norm(u)
    data = {
        "extension": _compact(ext),
        "status": ext.status.value,
        "element": _compact(u),
        "norm": _compact(value),
    }
    _emit(args, data, str(value))
    return 0


def _cmd_axioms(args) -> int:
    probes = standard_probes()
    if args.probe is not None:
        probes = [p for p in probes if p.name == args.probe]
        if not probes:
            names = [p.name for p in standard_probes()]
            raise ParseError(f"unknown probe {args.probe!r} "
                             f"(choose from {names})")
    rows = []
    all_passed = True
    lines = []
    for probe in probes:
        outcome = check_valuation_axioms(probe, args.trials, args.seed)
        ok = outcome.passed
        all_passed = all_passed and ok
        rows.append({"name": probe.name, "passed": ok,
                     "detail": str(outcome)})
        lines.append(f"[{'PASS' if ok else 'FAIL'}] {probe.name}: {outcome}")
    lines.append(f"{len(probes)} probes x {args.trials} trials")
    _emit(args, {"trials": args.trials, "seed": args.seed, "probes": rows,
                 "all_passed": all_passed}, "\n".join(lines))
    return 0 if all_passed else 1


def _cmd_selftest(args) -> int:
    results = run_all(seed=args.seed, quick=args.quick)
    all_passed = all(r.passed for r in results)
    data = {
        "seed": args.seed,
        "quick": args.quick,
        "checks": [
            {"name": r.name, "passed": r.passed, "n_cases": r.n_cases,
             "details": r.details}
            for r in results
        ],
        "all_passed": all_passed,
    }
    lines = [str(r) for r in results]
    lines.append("all checks passed" if all_passed else "FAILURES present")
    _emit(args, data, "\n".join(lines))
    return 0 if all_passed else 1


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="unitgroups",
        description="Exact arithmetic for unit groups of rational function "
                    "fields: factorization, decompositions, valuations, "
                    "generalized power series, perfect closures, norms.")
    top.add_argument("--version", action="version",
                     version=f"%(prog)s {__version__}")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, seed=True):
        p.add_argument("--json", action="store_true",
                       help="emit one JSON document instead of text")
        if seed:
            p.add_argument("--seed", type=int, default=0,
                           help="seed for randomized subroutines (default 0)")

    p = sub.add_parser("classify-scan",
                       help="finite fields with indecomposable unit group")
    p.add_argument("--bound", type=int, required=True,
                   help="scan prime powers q <= bound (2 <= bound <= 2^40)")
    common(p, seed=False)
    p.set_defaults(func=_cmd_classify_scan)

    p = sub.add_parser("factor", help="factor a polynomial over GF(q)")
    p.add_argument("--field", required=True, help="GF(p) or GF(p^n)")
    p.add_argument("poly")
    common(p)
    p.set_defaults(func=_cmd_factor)

    p = sub.add_parser("decompose",
                       help="unit-group decomposition of a rational function")
    p.add_argument("--field", required=True)
    p.add_argument("ratfunc")
    common(p)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("rank",
                       help="multiplicative rank of rational functions")
    p.add_argument("--field", required=True)
    p.add_argument("elements", nargs="+")
    common(p)
    p.set_defaults(func=_cmd_rank)

    p = sub.add_parser("padic", help="p-adic valuation of a rational")
    p.add_argument("-p", type=int, required=True, help="the prime")
    p.add_argument("rational")
    common(p, seed=False)
    p.set_defaults(func=_cmd_padic)

    p = sub.add_parser("hahn", help="generalized power series arithmetic")
    p.add_argument("--field", default="GF(2)")
    p.add_argument("--group", default="Z", help="Z, Z^k, or Z[1/2]")
    p.add_argument("--terms", type=int, default=8,
                   help="terms to compute for inv (default 8)")
    p.add_argument("op", help="add | mul | inv | val | split | section")
    p.add_argument("operands", nargs="*")
    common(p, seed=False)
    p.set_defaults(func=_cmd_hahn)

    p = sub.add_parser("pc", help="perfect closure of GF(2)(t)")
    p.add_argument("op",
                   help="frobenius | frobenius-inv | level | decompose | "
                        "recompose")
    p.add_argument("operand")
    common(p)
    p.set_defaults(func=_cmd_pc)

    p = sub.add_parser("norm", help="field norm in a simple extension")
    p.add_argument("--ext", required=True,
                   help="descriptor like GF(2)(t)[y]/(y^2+y+t)")
    p.add_argument("element")
    common(p, seed=False)
    p.set_defaults(func=_cmd_norm)

    p = sub.add_parser("axioms", help="sample-test valuation axioms")
    p.add_argument("--probe", default=None,
                   help="run one named probe instead of all")
    p.add_argument("--trials", type=int, default=1000)
    common(p)
    p.set_defaults(func=_cmd_axioms)

    p = sub.add_parser("selftest", help="run every oracle cross-check")
    p.add_argument("--quick", action="store_true",
                   help="smaller trial counts, same coverage")
    common(p)
    p.set_defaults(func=_cmd_selftest)

    return top


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
