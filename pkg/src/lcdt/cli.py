"""Command-line front end; every command prints one JSON document.

Exit status: 0 success, 1 domain error (error JSON on stdout), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .algebra import Matrix
from .codes import LinearCode, hull_dimension, min_distance, weight_distribution
from .concat import concatenate, construct_lcd_concat, isometry_from_coeffs, search_isometry
from .dickson import dickson_poly, dickson_roots, factor_profile
from .dtcode import (
    DTParams,
    diagnosis_contradictions,
    dt_generator,
    existence_diagnosis,
    forbidden_set,
    is_lcd_direct,
    is_lcd_theorem,
    spectrum,
)
from .errors import LcdtError, ParseError
from .galois import FiniteField, embed_build, field_create, parse_field
from .reproduce import EXAMPLE_IDS, reproduce, reproduce_all


def _field(text: str) -> FiniteField:
    return parse_field(text)


def _base_field(args, sup: FiniteField) -> FiniteField:
    if getattr(args, "base_field", None):
        return parse_field(args.base_field)
    return field_create(sup.p)


def _generator(F: FiniteField, text: str) -> Matrix:
    """JSON matrix: {"rows","cols","entries"} or a list of rows of element strings."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"generator is not valid JSON: {exc}") from None
    if isinstance(data, dict):
        try:
            return Matrix.from_json(F, data)
        except (KeyError, ValueError) as exc:
            raise ParseError(f"bad generator matrix: {exc}") from None
    if isinstance(data, list) and data and all(isinstance(r, list) for r in data):
        rows = [[F.parse(str(e)) for e in r] for r in data]
        if len({len(r) for r in rows}) != 1:
            raise ParseError("generator rows have different lengths")
        return Matrix(F, rows, len(rows[0]))
    raise ParseError("generator must be a JSON object or a non-empty list of rows")


def _dt(args) -> DTParams:
    F = _field(args.field)
    return DTParams(F, args.n, F.parse(args.a), F.parse(args.b))


# -- commands ---------------------------------------------------------------


def cmd_field(args) -> dict:
    F = _field(args.field)
    g = F.primitive_element()
    out = {
        "field": F.spec,
        "p": F.p,
        "s": F.degree,
        "order": F.order,
        "modulus": list(F.modulus),
        "primitive_element": str(g),
    }
    if args.element:
        items = []
        for text in args.element:
            x = F.parse(text)
            items.append(
                {
                    "input": text,
                    "element": str(x),
                    "index": x.index,
                    "log": F.log_of(x),
                    "order": x.multiplicative_order() if x else None,
                }
            )
        out["elements"] = items
    return out


def cmd_dickson(args) -> dict:
    F = _field(args.field)
    want_roots = args.roots or not args.coeffs
    want_coeffs = args.coeffs or not args.roots
    out: dict = {"field": F.spec, "n": args.n}
    prof = factor_profile(args.n, F.p)
    out["profile"] = {"r": prof.r, "m": prof.m}
    if want_coeffs:
        out["coeffs"] = dickson_poly(args.n, F).to_json()["coeffs"]
    if want_roots:
        out["roots"] = dickson_roots(args.n, F).to_json()
    return out


def cmd_lcd_check(args) -> dict:
    dt = _dt(args)
    direct = is_lcd_direct(dt_generator(dt))
    prof = factor_profile(dt.n, dt.field.p)
    out = {"theorem": None, "direct": direct, "forbidden_base": None,
           "profile": {"r": prof.r, "m": prof.m}, "theta_field": None}
    if dt.n >= 2:
        fs = forbidden_set(dt.field, dt.n, dt.b)
        out["theorem"] = is_lcd_theorem(dt, fs)
        out["forbidden_base"] = [str(x) for x in fs.base_intersection]
        out["theta_field"] = fs.ext.spec
    else:
        out["theorem"] = is_lcd_theorem(dt)
    out["agree"] = out["theorem"] == direct
    return out


def cmd_forbidden_set(args) -> dict:
    F = _field(args.field)
    fs = forbidden_set(F, args.n, F.parse(args.b))
    return {"field": F.spec, "n": args.n, "b": str(fs.b), **fs.to_json()}


def cmd_spectrum(args) -> dict:
    dt = _dt(args)
    roots = spectrum(dt)
    return {"field": dt.field.spec, "n": dt.n, "a": str(dt.a), "b": str(dt.b),
            "eigenvalues": roots.to_json()}


def cmd_diagnose(args) -> dict:
    F = _field(args.field)
    b = F.parse(args.b)
    diag = existence_diagnosis(F, args.n, b)
    out = diag.to_json()
    if args.n >= 2:
        fs = forbidden_set(F, args.n, b)
        out["forbidden_base"] = [str(x) for x in fs.base_intersection]
        out["contradictions"] = diagnosis_contradictions(diag, fs)
    return out


def _code_summary(args) -> tuple[LinearCode, dict]:
    F = _field(args.field)
    code = LinearCode(_generator(F, args.generator))
    return code, {"field": F.spec, "n": code.length, "k": code.k,
                  "hull_dimension": hull_dimension(code)}


def cmd_distance(args) -> dict:
    code, out = _code_summary(args)
    out["d"] = min_distance(code, args.budget)
    return out


def cmd_weights(args) -> dict:
    code, out = _code_summary(args)
    dist = weight_distribution(code, args.budget)
    positive = [w for w in dist if w > 0]
    out["d"] = min(positive) if positive else 0
    out["counts"] = {str(w): c for w, c in dist.items()}
    out["total"] = sum(dist.values())
    return out


def cmd_concat(args) -> dict:
    F = _field(args.outer_field)
    emb = embed_build(_base_field(args, F), F)
    coeffs = [F.parse(t) for t in args.coeffs.split(";") if t.strip()]
    pi = isometry_from_coeffs(emb, coeffs)
    dt = DTParams(F, args.N, F.parse(args.a), F.parse(args.b))
    if args.force:
        cc = concatenate(pi, LinearCode(dt_generator(dt)), compute_distance=not args.no_distance)
    else:
        cc = construct_lcd_concat(dt, pi, compute_distance=not args.no_distance)
    out = cc.to_json()
    out["coeffs"] = [str(a) for a in pi.coeffs]
    return out


def cmd_search_isometry(args) -> dict:
    F = _field(args.field)
    emb = embed_build(_base_field(args, F), F)
    pi = search_isometry(emb, args.n, args.d, seed=args.seed, budget=args.budget)
    return pi.to_json()


def cmd_reproduce(args):
    if args.example:
        return reproduce(args.example).to_json()
    reports = reproduce_all()
    return {"all_match": all(r.matched for r in reports),
            "reports": [r.to_json() for r in reports]}


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lcdt",
        description="Double Toeplitz LCD codes over finite fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", help="describe a field and parse elements")
    p.add_argument("--field", required=True, help='field spec, e.g. "3^2/2,2,1"')
    p.add_argument("--element", action="append", help="element to describe (repeatable)")
    p.set_defaults(func=cmd_field)

    p = sub.add_parser("dickson", help="E_n coefficients and roots")
    p.add_argument("--field", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--roots", action="store_true")
    p.add_argument("--coeffs", action="store_true")
    p.set_defaults(func=cmd_dickson)

    for name, func, help_text in (
        ("lcd-check", cmd_lcd_check, "theorem and direct LCD verdicts"),
        ("spectrum", cmd_spectrum, "eigenvalues of T_n(a, b)"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--field", required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--a", required=True)
        p.add_argument("--b", default="1")
        p.set_defaults(func=func)

    for name, func, help_text in (
        ("forbidden-set", cmd_forbidden_set, "diagonal values a that break LCD"),
        ("diagnose", cmd_diagnose, "existence corollaries for (q, n, b)"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--field", required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--b", default="1")
        p.set_defaults(func=func)

    for name, func in (("distance", cmd_distance), ("weights", cmd_weights)):
        p = sub.add_parser(name, help=f"{name} of a code given by a JSON generator")
        p.add_argument("--field", required=True)
        p.add_argument("--generator", required=True, help="JSON matrix")
        p.add_argument("--budget", type=int, default=None)
        p.set_defaults(func=func)

    p = sub.add_parser("concat", help="concatenate a DT code with a trace isometry")
    p.add_argument("--outer-field", required=True)
    p.add_argument("--base-field", default=None, help="defaults to the prime field")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--coeffs", required=True, help='isometry coefficients "e1;e2;..."')
    p.add_argument("--force", action="store_true", help="concatenate even if the outer code is not LCD")
    p.add_argument("--no-distance", action="store_true")
    p.set_defaults(func=cmd_concat)

    p = sub.add_parser("search-isometry", help="find a trace isometry with inner distance >= d")
    p.add_argument("--field", required=True)
    p.add_argument("--base-field", default=None)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=1 << 20)
    p.set_defaults(func=cmd_search_isometry)

    p = sub.add_parser("reproduce", help="re-derive the worked examples")
    p.add_argument("--example", choices=EXAMPLE_IDS, default=None)
    p.set_defaults(func=cmd_reproduce)
    return parser


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.func(args)
    except ParseError as exc:
        _emit({"error": exc.code, "message": str(exc)})
        return 2
    except LcdtError as exc:
        _emit({"error": exc.code, "message": str(exc)})
        return 1
    except ValueError as exc:
        _emit({"error": "UsageError", "message": str(exc)})
        return 2
    _emit(result)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
