"""``ccsym``: JSON-only command line.

Exit codes: 0 when the computation finished (and any law checked holds),
1 when a checked law or cross-check failed, 2 on usage, parse or input
errors.  Errors are printed as {"error": {"kind": ..., "detail": ...}}.
"""
from __future__ import annotations

import argparse
import json
import random
import sys

from .errors import CCSymError, ExprSyntaxError, FieldOnly, InternalError, ShapeMismatch
from .generators import unit_series
from .oracle import symbol_oracle
from .p1 import (
    RationalFunction,
    check_units,
    local_res_w,
    local_residues,
    local_symbols,
    verify_witt_reciprocity,
)
from .parser import parse_element, parse_points, parse_ratfunc, parse_series, split_list
from .ring import Ring
from .suites import DEFAULT_SEED, SUITES, SYMBOL_RINGS
from .symbol import contou_carrere, residue_from_symbol, tame_symbol
from .witt import GhostVector, WittVector, ghost, unghost, witt_add, witt_mul
from .witt_params import witt_factor


class UsageError(Exception):
    kind = "UsageError"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _ring(text: str) -> Ring:
    try:
        return Ring.parse(text)
    except CCSymError:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _vector(text: str, ring: Ring, N: int | None) -> list:
    xs = [parse_element(v, ring) for v in split_list(text)]
    if N is not None and len(xs) != N:
        raise ShapeMismatch(f"expected {N} coordinates, got {len(xs)}")
    return xs


def _strs(values) -> list:
    return [str(v) for v in values]


# -- subcommands ------------------------------------------------------------------


def cmd_symbol(args) -> tuple:
    ring = _ring(args.ring)
    f, g = parse_series(args.f, ring), parse_series(args.g, ring)
    value = symbol_oracle(f, g) if args.oracle else contou_carrere(f, g)
    return {
        "ring": str(ring),
        "method": "oracle" if args.oracle else "formula",
        "value": str(value),
        "wf": f.winding_number(),
        "wg": g.winding_number(),
    }, 0


def cmd_factor(args) -> tuple:
    ring = _ring(args.ring)
    f = parse_series(args.f, ring)
    params = witt_factor(f, args.pos_terms)
    return {"ring": str(ring), **params.to_json()}, 0


def cmd_residue(args) -> tuple:
    ring = _ring(args.ring)
    f, g = parse_series(args.f, ring), parse_series(args.g, ring)
    direct = g.mul(f.derivative()).residue()
    via = residue_from_symbol(f, g)
    agree = direct == via
    return {"ring": str(ring), "direct": str(direct), "via_symbol": str(via), "agree": agree}, 0 if agree else 1


def cmd_witt(args) -> tuple:
    ring = _ring(args.ring)
    x = WittVector(_vector(args.x, ring, args.N))
    out = {"ring": str(ring), "op": args.op, "N": x.N}
    if args.op in ("add", "mul"):
        if args.y is None:
            raise UsageError(f"witt {args.op} needs --y")
        y = WittVector(_vector(args.y, ring, x.N))
        result = witt_add(x, y) if args.op == "add" else witt_mul(x, y)
        out["result"] = _strs(result.coords)
    elif args.op == "ghost":
        out["result"] = _strs(ghost(x).coords)
    else:
        out["result"] = _strs(unghost(GhostVector(x.coords)).coords)
    return out, 0


def _point_key(s) -> str:
    return str(s)


def cmd_p1(args) -> tuple:
    ring = _ring(args.ring)
    S = parse_points(args.S, ring)
    f = parse_ratfunc(args.f, ring, S)
    out = {"ring": str(ring), "law": args.law, "S": [_point_key(s) for s in S], "f": str(f)}
    if args.law in ("cc", "weil", "residue"):
        if args.g is None:
            raise UsageError(f"p1 {args.law} needs --g")
        g = parse_ratfunc(args.g, ring, S)
        out["g"] = str(g)
    if args.law in ("cc", "weil"):
        if args.law == "weil" and not ring.is_field:
            raise FieldOnly("Weil reciprocity is the field case")
        check_units(S, f, g)
        local = local_symbols(f, g, S, tame_symbol if args.law == "weil" else contou_carrere)
        prod = ring.one()
        for v in local.values():
            prod = prod * v
        out["local"] = {_point_key(s): str(v) for s, v in local.items()}
        out["product"] = str(prod)
        holds = prod == 1
    elif args.law == "residue":
        local = local_residues(f, g, S)
        total = ring.zero()
        agree = True
        for direct, via in local.values():
            total = total + direct
            agree = agree and direct == via
        out["local"] = {_point_key(s): {"direct": str(a), "via_symbol": str(b)} for s, (a, b) in local.items()}
        out["sum"] = str(total)
        out["routes_agree"] = agree
        holds = agree and total == 0
    else:
        xs = [parse_ratfunc(v, ring, S) for v in split_list(args.x)] if args.x else []
        N = args.N if args.N is not None else len(xs)
        if N < 1:
            raise UsageError("p1 witt needs --x or --N")
        if len(xs) > N:
            raise ShapeMismatch(f"{len(xs)} coordinates given for N = {N}")
        xs += [RationalFunction.constant(ring, 0)] * (N - len(xs))
        local = local_res_w(f, xs, N, S)
        total = verify_witt_reciprocity(f, xs, N, S)
        out["N"] = N
        out["x"] = _strs(xs)
        out["local"] = {_point_key(s): _strs(v.coords) for s, v in local.items()}
        out["sum"] = _strs(total.coords)
        if ring.p is not None:
            idx, i = [], 1
            while i <= N:
                idx.append(i)
                i *= ring.p
            out["p_typical"] = {"indices": idx, "coords": _strs(total.p_typical(ring.p))}
        holds = total.is_zero()
    out["law_holds"] = holds
    return out, 0 if holds else 1


def cmd_crosscheck(args) -> tuple:
    rings = [_ring(args.ring)] if args.ring else list(SYMBOL_RINGS)
    rng = random.Random(f"crosscheck:{args.seed}")
    checked = 0
    for ring in rings:
        for _ in range(args.trials):
            f, g = unit_series(ring, rng), unit_series(ring, rng)
            a, b = contou_carrere(f, g), symbol_oracle(f, g)
            checked += 1
            if a != b:
                return {
                    "trials": checked,
                    "agree": False,
                    "counterexample": {
                        "ring": str(ring),
                        "f": str(f),
                        "g": str(g),
                        "formula": str(a),
                        "oracle": str(b),
                    },
                }, 1
    return {"trials": checked, "rings": [str(r) for r in rings], "agree": True, "counterexample": None}, 0


def cmd_suite(args) -> tuple:
    try:
        wanted = sorted(SUITES) if not args.only else sorted({int(v) for v in args.only.split(",")})
    except ValueError:
        raise UsageError(f"--only takes comma-separated integers, got {args.only!r}") from None
    unknown = [i for i in wanted if i not in SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s) {unknown}; choose from 1-{len(SUITES)}")
    rows = []
    for i in wanted:
        res = SUITES[i](args.seed, args.scale)
        row = res.to_json()
        if not args.timings:
            row.pop("seconds")
        rows.append({"criterion": i, **row})
    ok = all(r["passed"] for r in rows)
    return {"seed": args.seed, "scale": args.scale, "results": rows, "all_passed": ok}, 0 if ok else 1


# -- argument parsing ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ccsym", description="Exact Contou-Carrere symbols, Witt vectors and reciprocity on P^1.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("symbol", help="evaluate <f, g>")
    s.add_argument("--ring", required=True)
    s.add_argument("--f", required=True)
    s.add_argument("--g", required=True)
    s.add_argument("--oracle", action="store_true", help="use the determinant route")
    s.set_defaults(run=cmd_symbol)

    s = sub.add_parser("factor", help="Witt parameters of a unit")
    s.add_argument("--ring", required=True)
    s.add_argument("--f", required=True)
    s.add_argument("--pos-terms", type=int, default=None, help="positive parameters to report for exact input")
    s.set_defaults(run=cmd_factor)

    s = sub.add_parser("residue", help="Res(g df) directly and through the symbol")
    s.add_argument("--ring", required=True)
    s.add_argument("--f", required=True)
    s.add_argument("--g", required=True)
    s.set_defaults(run=cmd_residue)

    s = sub.add_parser("witt", help="big Witt vector arithmetic")
    s.add_argument("op", choices=["add", "mul", "ghost", "unghost"])
    s.add_argument("--ring", default="Q")
    s.add_argument("--N", type=int, default=None)
    s.add_argument("--x", required=True)
    s.add_argument("--y", default=None)
    s.set_defaults(run=cmd_witt)

    s = sub.add_parser("p1", help="reciprocity laws on P^1")
    s.add_argument("law", choices=["cc", "weil", "residue", "witt"])
    s.add_argument("--ring", required=True)
    s.add_argument("--S", required=True, help='points, e.g. "0,1,inf"')
    s.add_argument("--f", required=True)
    s.add_argument("--g", default=None)
    s.add_argument("--x", default=None)
    s.add_argument("--N", type=int, default=None)
    s.set_defaults(run=cmd_p1)

    s = sub.add_parser("crosscheck", help="formula against determinant oracle on random pairs")
    s.add_argument("--trials", type=int, default=50)
    s.add_argument("--ring", default=None)
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.set_defaults(run=cmd_crosscheck)

    s = sub.add_parser("suite", help="run the randomized property suites")
    s.add_argument("--only", default=None, help="comma-separated suite numbers")
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.add_argument("--scale", type=float, default=1.0, help="multiply trial counts")
    s.add_argument("--timings", action="store_true", help="include wall-clock seconds (not reproducible)")
    s.set_defaults(run=cmd_suite)
    return p


def _emit(doc) -> None:
    sys.stdout.write(json.dumps(doc, sort_keys=True) + "\n")


def _error(kind: str, detail: str, **extra) -> dict:
    return {"error": {"kind": kind, "detail": detail, **extra}}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        doc, code = args.run(args)
    except UsageError as exc:
        _emit(_error("UsageError", str(exc)))
        return 2
    except ExprSyntaxError as exc:
        _emit(_error(exc.kind, str(exc), offset=exc.offset, expected=list(exc.expected)))
        return 2
    except InternalError as exc:
        _emit(_error(exc.kind, str(exc)))
        return 1
    except CCSymError as exc:
        _emit(_error(exc.kind, str(exc)))
        return 2
    _emit(doc)
    return code


if __name__ == "__main__":
    sys.exit(main())
