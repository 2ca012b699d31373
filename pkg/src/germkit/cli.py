"""Command-line interface.

Subcommands: analyze, scan, prepare, resultant, discriminant, coprime, demo.
Text output is deterministic; --json switches to a machine-readable envelope
{tool, version, command, input, result, timing_ms} where every rational is a
"num/den" string and polynomials are [[exponents, coefficient], ...] term
lists.  Exit codes: 0 success (an Undetermined analysis is a success), 1
usage or domain error, 2 syntax error in an input expression.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
import time
from fractions import Fraction

from . import __version__
from .algebra import Point, Polynomial
from .elimination import coprime_at, discriminant, resultant, zero_set_discrete
from .errors import GermkitError, ParseError, VariableIndexError
from .germs import GermQuery, GermStatus, ScanReport, analyze_germ, scan_stability
from .parsing import format_poly, parse_curve, parse_point, parse_poly, parse_rationals
from .series import TruncatedSeries
from .weierstrass import apply_shear, make_regular, weierstrass_prepare

DEMO_POLY = "z3^2 - z1*z2^2"
DEMO_CURVE = "t,0,0"
DEMO_T_VALUES = "1,1/2,1/4,1/8"


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    """argparse that raises instead of calling sys.exit on bad flags."""

    def error(self, message):
        raise _UsageError(message)


# -- serialization helpers ----------------------------------------------------


def _poly_terms(p: Polynomial) -> list:
    return [[list(mono), str(coeff)] for mono, coeff in p.terms()]


def _series_payload(s: TruncatedSeries) -> dict:
    return {"order": s.order, "terms": _poly_terms(s.body)}


def _jsonable(value):
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, Polynomial):
        return _poly_terms(value)
    if isinstance(value, TruncatedSeries):
        return _series_payload(value)
    if isinstance(value, (tuple, list)):
        return [_jsonable(v) for v in value]
    return str(value)


def _certificate_payload(cert) -> dict | None:
    if cert is None:
        return None
    payload = {"kind": cert.kind}
    for field in dataclasses.fields(cert):
        payload[field.name] = _jsonable(getattr(cert, field.name))
    return payload


def _status_payload(status: GermStatus) -> dict:
    factors = None
    if status.factors is not None:
        factors = [_poly_terms(fac.body) for fac in status.factors]
    return {
        "status": status.kind,
        "certificate": _certificate_payload(status.certificate),
        "factors": factors,
        "reason": status.reason,
        "applied_change": _jsonable(status.applied_change),
    }


def _scan_payload(report: ScanReport) -> dict:
    return {
        "base_point": [str(c) for c in report.base_point],
        "base_status": _status_payload(report.base_status),
        "curve": [_format_curve_coord(c) for c in report.curve],
        "samples": [
            {
                "t": str(s.t),
                "point": [str(c) for c in s.point],
                "on_locus": s.on_locus,
                "status": s.status.kind,
            }
            for s in report.samples
        ],
        "verdict": report.verdict,
        "witness_t": str(report.witness.t) if report.witness is not None else None,
        "reason": report.reason,
    }


# -- text rendering -----------------------------------------------------------


def _format_point(p: Point) -> str:
    return "(" + ", ".join(str(c) for c in p) + ")"


def _format_curve_coord(c: Polynomial) -> str:
    return format_poly(c).replace("z1", "t")


def _describe_shear(change, j: int) -> str:
    steps = []
    for i, c in enumerate(change, start=1):
        if c != 0:
            sign = "-" if c < 0 else "+"
            steps.append(f"z{i} <- z{i} {sign} {abs(c)}*z{j}")
    return ", ".join(steps)


_CERT_TEXT = {
    "NonzeroValue": lambda c: f"NonzeroValue(value = {c.value})",
    "SmoothPoint": lambda c: "SmoothPoint(gradient = "
    + _format_point(c.gradient)
    + ")",
    "DegreeOne": lambda c: "DegreeOne",
    "OddVariableOrder": lambda c: (
        f"OddVariableOrder(variable = z{c.variable}, order = {c.order})"
    ),
    "MonomialUnitSquare": lambda c: (
        "MonomialUnitSquare(square root exists but is not rational)"
        if c.symbolic
        else f"MonomialUnitSquare(root = {format_poly(c.root.body)})"
    ),
    "LowestFormNotASquare": lambda c: (
        f"LowestFormNotASquare(degree = {c.degree}, form = {format_poly(c.form)})"
    ),
    "DistinguishedVarDivides": lambda c: (
        f"DistinguishedVarDivides(variable = z{c.variable}, multiplicity = {c.multiplicity})"
    ),
    "MultiEdgePolygon": lambda c: f"MultiEdgePolygon(edges = {c.edge_count})",
    "BinomialCoprimeEdge": lambda c: f"BinomialCoprimeEdge(d = {c.d}, m = {c.m})",
    "BinomialNoncoprimeEdge": lambda c: f"BinomialNoncoprimeEdge(gcd = {c.gcd})",
    "EdgePolynomialSplits": lambda c: (
        f"EdgePolynomialSplits(distinct_factors = {c.factor_count})"
    ),
}


def _describe_certificate(cert) -> str:
    render = _CERT_TEXT.get(cert.kind)
    return render(cert) if render is not None else cert.kind


def _status_lines(status: GermStatus, j: int) -> list[str]:
    lines = [f"status: {status.kind}"]
    if status.applied_change is not None:
        lines.append(f"shear: {_describe_shear(status.applied_change, j)}")
    if status.certificate is not None:
        lines.append(f"certificate: {_describe_certificate(status.certificate)}")
    if status.factors is not None:
        for fac in status.factors:
            lines.append(f"factor: {format_poly(fac.body)}")
    if status.reason is not None:
        lines.append(f"reason: {status.reason}")
    return lines


# -- input plumbing -----------------------------------------------------------


def _parse_var_flag(text: str, n: int) -> int:
    raw = text.strip()
    digits = raw[1:] if raw.startswith("z") else raw
    if not digits.isdigit() or int(digits) == 0:
        raise _UsageError(f"--var expects a variable like z2, got {text!r}")
    j = int(digits)
    if j > n:
        raise VariableIndexError(f"variable z{j} out of range for {n} variable(s)")
    return j


def _poly_and_point(poly_text: str, point_text: str | None):
    """Parse a polynomial and a base point into one common dimension."""
    f = parse_poly(poly_text)
    if point_text is None:
        n = max(f.n, 1)
        point = tuple(Fraction(0) for _ in range(n))
    else:
        point = parse_point(point_text)
        n = max(f.n, len(point))
        point = parse_point(point_text, n)
    if f.n < n:
        f = parse_poly(poly_text, var_count=n)
    return f, point, n


# -- subcommand handlers ------------------------------------------------------
# Each returns (text lines, input echo, result payload).


def _cmd_analyze(ns):
    f, point, n = _poly_and_point(ns.poly, ns.point)
    j = _parse_var_flag(ns.var, n) if ns.var else n
    status = analyze_germ(GermQuery(f, point, ns.order, j))
    lines = [
        f"f = {format_poly(f)}",
        f"point = {_format_point(point)}",
        f"order = {ns.order}",
        *_status_lines(status, j),
    ]
    inputs = {"poly": ns.poly, "point": [str(c) for c in point], "order": ns.order}
    return lines, inputs, _status_payload(status)


def _cmd_scan(ns):
    f, point, n = _poly_and_point(ns.poly, ns.point)
    j = _parse_var_flag(ns.var, n) if ns.var else n
    curve = parse_curve(ns.curve, n)
    t_values = parse_rationals(ns.t)
    report = scan_stability(f, point, curve, t_values, ns.order, j)
    curve_text = "(" + ", ".join(_format_curve_coord(c) for c in curve) + ")"
    base = _status_lines(report.base_status, j)
    lines = [
        f"f = {format_poly(f)}",
        f"base point = {_format_point(point)}",
        "base " + base[0],
        *base[1:],
        f"curve = {curve_text}",
        f"order = {ns.order}",
    ]
    for s in report.samples:
        where = "on locus" if s.on_locus else "off locus"
        lines.append(
            f"t = {s.t}: point {_format_point(s.point)}, {where}, {s.status.kind}"
        )
    lines.append(f"verdict: {report.verdict}")
    if report.witness is not None:
        lines.append(f"witness: t = {report.witness.t}")
    if report.reason is not None:
        lines.append(f"reason: {report.reason}")
    inputs = {
        "poly": ns.poly,
        "point": [str(c) for c in point],
        "curve": ns.curve,
        "t": ns.t,
        "order": ns.order,
    }
    return lines, inputs, _scan_payload(report)


def _cmd_prepare(ns):
    f, point, n = _poly_and_point(ns.poly, ns.point)
    j = _parse_var_flag(ns.var, n) if ns.var else n
    shifted = f.shift(point)
    sheared, report = make_regular(shifted, j)
    change = report.applied_change
    if change is not None and all(c == 0 for c in change):
        change = None
    wd = weierstrass_prepare(sheared, j, ns.order)
    w = wd.weierstrass_polynomial()
    ok = wd.multiply_back() == TruncatedSeries(sheared, ns.order)

    lines = [
        f"f = {format_poly(f)}",
        f"point = {_format_point(point)}",
        f"distinguished variable: z{j}",
        f"order = {ns.order}",
    ]
    if change is not None:
        lines.append(f"shear: {_describe_shear(change, j)}")
    lines.append(f"degree d = {wd.degree}")
    lines.append(f"w = {format_poly(w)}")
    embedded = [e.body.insert_variable(j) for e in wd.coefficients]
    for i, e in enumerate(embedded, start=1):
        lines.append(f"e_{i} = {format_poly(e)}")
    lines.append(f"unit = {format_poly(wd.unit.body)}")
    lines.append(f"u*w agrees with f through total degree {ns.order}: "
                 + ("yes" if ok else "NO"))

    inputs = {
        "poly": ns.poly,
        "point": [str(c) for c in point],
        "var": f"z{j}",
        "order": ns.order,
    }
    result = {
        "degree": wd.degree,
        "distinguished_var": j,
        "order": ns.order,
        "applied_change": _jsonable(change),
        "weierstrass_polynomial": _poly_terms(w),
        "coefficients": [_poly_terms(e) for e in embedded],
        "unit": _series_payload(wd.unit),
        "multiply_back_ok": ok,
    }
    return lines, inputs, result


def _two_polys(a_text: str, b_text: str):
    a, b = parse_poly(a_text), parse_poly(b_text)
    n = max(a.n, b.n, 1)
    if a.n < n:
        a = parse_poly(a_text, var_count=n)
    if b.n < n:
        b = parse_poly(b_text, var_count=n)
    return a, b, n


def _cmd_resultant(ns):
    f, g, n = _two_polys(ns.f, ns.g)
    j = _parse_var_flag(ns.var, n)
    r = resultant(f, g, j)
    inputs = {"f": ns.f, "g": ns.g, "var": f"z{j}"}
    result = {"resultant": format_poly(r), "terms": _poly_terms(r), "var": j}
    return [format_poly(r)], inputs, result


def _cmd_discriminant(ns):
    f = parse_poly(ns.poly)
    n = max(f.n, 1)
    if f.n < n:
        f = parse_poly(ns.poly, var_count=n)
    j = _parse_var_flag(ns.var, n)
    d = discriminant(f, j)
    inputs = {"poly": ns.poly, "var": f"z{j}"}
    result = {"discriminant": format_poly(d), "terms": _poly_terms(d), "var": j}
    return [format_poly(d)], inputs, result


def _cmd_coprime(ns):
    g, h, n = _two_polys(ns.g, ns.h)
    if ns.point is not None:
        point = parse_point(ns.point, n)
    else:
        point = tuple(Fraction(0) for _ in range(n))
    j = _parse_var_flag(ns.var, n) if ns.var else n
    rep = coprime_at(g, h, point, j)
    r = rep.resultant_poly
    discrete = zero_set_discrete(r, tuple(Fraction(0) for _ in range(r.n)))

    lines = [
        f"g = {format_poly(g)}",
        f"h = {format_poly(h)}",
        f"point = {_format_point(point)}",
        f"eliminated variable: z{j}",
    ]
    if rep.applied_change is not None and any(c != 0 for c in rep.applied_change):
        lines.append(f"shear: {_describe_shear(rep.applied_change, j)}")
    lines.append(f"resultant (remaining variables renumbered): {format_poly(r)}")
    lines.append("germs coprime at the point: "
                 + ("yes" if rep.coprime_germ_at_point else "no"))
    lines.append("resultant vanishes at the point: "
                 + ("yes" if rep.vanishing_at_point else "no"))
    lines.append("resultant zero set discrete near the point: "
                 + ("yes" if discrete else "no"))

    inputs = {
        "g": ns.g,
        "h": ns.h,
        "point": [str(c) for c in point],
        "var": f"z{j}",
    }
    result = {
        "resultant": format_poly(r),
        "terms": _poly_terms(r),
        "var": j,
        "applied_change": _jsonable(rep.applied_change),
        "coprime": rep.coprime_germ_at_point,
        "vanishes_at_point": rep.vanishing_at_point,
        "zero_set_discrete": discrete,
    }
    return lines, inputs, result


def _cmd_demo(ns):
    if ns.topic != "counterexample":
        raise _UsageError(f"unknown demo topic {ns.topic!r}")
    N = ns.order
    f = parse_poly(DEMO_POLY)
    origin = (Fraction(0),) * 3
    near = (Fraction(1), Fraction(0), Fraction(0))

    origin_status = analyze_germ(GermQuery(f, origin, N))
    near_status = analyze_germ(GermQuery(f, near, N))

    multiply_back = None
    if near_status.factors is not None:
        target = f.shift(near)
        if near_status.applied_change is not None:
            target = apply_shear(target, 3, near_status.applied_change)
        product = near_status.factors[0]
        for fac in near_status.factors[1:]:
            product = product * fac
        multiply_back = product == TruncatedSeries(target, N)

    curve = parse_curve(DEMO_CURVE, 3)
    t_values = parse_rationals(DEMO_T_VALUES)
    report = scan_stability(f, origin, curve, t_values, N)

    lines = [
        "counterexample: local irreducibility is not stable in three variables",
        "",
        f"f = {format_poly(f)}",
        "",
        "[1] analyze at the origin",
        *_status_lines(origin_status, 3),
        "",
        f"[2] analyze at {_format_point(near)}",
        *_status_lines(near_status, 3),
    ]
    if multiply_back is not None:
        lines.append(
            f"factors multiply back to f at {_format_point(near)}: "
            + ("yes" if multiply_back else "NO")
            + f" (through total degree {N})"
        )
    lines += [
        "",
        "[3] scan along (t, 0, 0) with t in {" + DEMO_T_VALUES.replace(",", ", ") + "}",
    ]
    for s in report.samples:
        where = "on locus" if s.on_locus else "off locus"
        lines.append(
            f"t = {s.t}: point {_format_point(s.point)}, {where}, {s.status.kind}"
        )
    lines += [
        f"verdict: {report.verdict}",
        "",
        "f is irreducible at the origin yet reducible at (t, 0, 0) for every",
        "sampled t != 0, so irreducibility fails arbitrarily close to the origin.",
    ]

    inputs = {
        "poly": DEMO_POLY,
        "point": [str(c) for c in origin],
        "curve": DEMO_CURVE,
        "t": DEMO_T_VALUES,
        "order": N,
    }
    result = {
        "poly": DEMO_POLY,
        "origin": {
            "point": [str(c) for c in origin],
            **_status_payload(origin_status),
        },
        "nearby": {
            "point": [str(c) for c in near],
            **_status_payload(near_status),
            "factors_multiply_back": multiply_back,
        },
        "scan": _scan_payload(report),
    }
    return lines, inputs, result


_HANDLERS = {
    "analyze": _cmd_analyze,
    "scan": _cmd_scan,
    "prepare": _cmd_prepare,
    "resultant": _cmd_resultant,
    "discriminant": _cmd_discriminant,
    "coprime": _cmd_coprime,
    "demo": _cmd_demo,
}


# -- parser and entry points --------------------------------------------------


def _add_common(sub, order=True):
    if order:
        sub.add_argument("--order", type=int, default=8,
                         help="series truncation order N (default 8)")
    sub.add_argument("--json", action="store_true",
                     help="emit a JSON report instead of text")


def _build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(
        prog="germkit",
        description="Exact local irreducibility analysis of polynomial germs.",
    )
    parser.add_argument("--version", action="version",
                        version=f"germkit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_ArgumentParser)

    p = sub.add_parser("analyze", help="classify the germ of a polynomial at a point")
    p.add_argument("--poly", required=True, help="polynomial in z1, z2, ...")
    p.add_argument("--point", required=True, help="comma-separated rationals")
    p.add_argument("--var", help="distinguished variable (default: last)")
    _add_common(p)

    p = sub.add_parser("scan", help="classify germs along a parametric curve")
    p.add_argument("--poly", required=True, help="polynomial in z1, z2, ...")
    p.add_argument("--point", required=True, help="base point, comma-separated")
    p.add_argument("--curve", required=True,
                   help="curve through the base point, e.g. \"t,0,0\"")
    p.add_argument("--t", default=DEMO_T_VALUES,
                   help=f"parameter samples (default {DEMO_T_VALUES})")
    p.add_argument("--var", help="distinguished variable (default: last)")
    _add_common(p)

    p = sub.add_parser("prepare",
                       help="Weierstrass preparation at a point (default: origin)")
    p.add_argument("--poly", required=True, help="polynomial in z1, z2, ...")
    p.add_argument("--point", help="expansion point (default: origin)")
    p.add_argument("--var", help="distinguished variable (default: last)")
    _add_common(p)

    p = sub.add_parser("resultant", help="eliminate one variable from two polynomials")
    p.add_argument("--f", required=True, help="first polynomial")
    p.add_argument("--g", required=True, help="second polynomial")
    p.add_argument("--var", required=True, help="variable to eliminate, e.g. z2")
    _add_common(p, order=False)

    p = sub.add_parser("discriminant",
                       help="discriminant with respect to one variable")
    p.add_argument("--poly", required=True, help="polynomial in z1, z2, ...")
    p.add_argument("--var", required=True, help="variable, e.g. z2")
    _add_common(p, order=False)

    p = sub.add_parser("coprime",
                       help="test two germs for a common factor at a point")
    p.add_argument("--g", required=True, help="first polynomial")
    p.add_argument("--h", required=True, help="second polynomial")
    p.add_argument("--point", help="base point (default: origin)")
    p.add_argument("--var", help="variable to eliminate (default: last)")
    _add_common(p, order=False)

    p = sub.add_parser("demo", help="run a built-in worked example")
    p.add_argument("topic", nargs="?", default="counterexample",
                   help="demo name (counterexample)")
    _add_common(p)

    return parser


def run_cli(argv=None, stdout=None, stderr=None) -> int:
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return 1
    except SystemExit as exc:  # --help / --version print and exit themselves
        return int(exc.code or 0)

    started = time.perf_counter()
    try:
        lines, inputs, result = _HANDLERS[ns.command](ns)
    except ParseError as exc:
        print(f"parse error: {exc}", file=err)
        return 2
    except _UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return 1
    except (GermkitError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return 1

    if ns.json:
        envelope = {
            "tool": "germkit",
            "version": __version__,
            "command": ns.command,
            "input": inputs,
            "result": result,
            "timing_ms": round((time.perf_counter() - started) * 1000, 3),
        }
        print(json.dumps(envelope, indent=2), file=out)
    else:
        print("\n".join(lines), file=out)
    return 0


def main() -> None:
    sys.exit(run_cli())
