"""Command-line surface: constants, counts, series, verification, worked example.

Commands
--------
constants          emit q, p, k, c, d, r1, r2, theta, theta_paper, gauss_cubed_over_q
count              one exact count: --z for a plain target, --y for a twisted one
series             a window of counts: --z for N_1..N_n, --y for T_2..T_{n+1}
verify             run the full cross-validation suite
reproduce-example  the F_31 worked example, PASS/FAIL

Fields are selected with --p/--k plus optional --modulus/--generator overrides
(little-endian comma-separated coefficients); targets are class keywords
(zero|c0|c1|c2) or concrete elements in the same coefficient syntax.

Output is deterministic JSON ({"query": ..., "result": ..., "warnings": [...]})
or TSV.  Exit codes: 0 success, 1 verification failure, 2 validation error,
3 integrity error; errors are emitted as JSON objects.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import verify as verify_mod
from .constants import THETA_SOURCES, CubicData, cubic_data
from .counting import bijective_count, count_diagonal, count_twisted, diagonal_series, twisted_series
from .errors import DomainError, IntegrityError, ResourceError
from .fields import CubicClass, FieldDescriptor, make_field, parse_element

_CLASS_KEYWORDS = {
    "zero": CubicClass.ZERO,
    "c0": CubicClass.C0,
    "c1": CubicClass.C1,
    "c2": CubicClass.C2,
}


class _Parser(argparse.ArgumentParser):
    # surface argparse problems as validation errors with JSON output
    def error(self, message):
        raise DomainError(message)


def _add_field_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--p", type=int, required=True, help="field characteristic (prime)")
    sub.add_argument("--k", type=int, default=1, help="extension degree (default 1)")
    sub.add_argument("--modulus", help="modulus coefficients c0,c1,...,ck (little-endian, monic)")
    sub.add_argument("--generator", help="generator coefficients c0,...,c{k-1}")


def _add_theta_option(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--theta-source", choices=THETA_SOURCES, default="exact",
                     help="which theta feeds the non-cubic counts (default exact)")


def _add_format_option(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=("json", "tsv"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="diagcubic", description=__doc__.splitlines()[0])
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("constants", help="field constants as JSON")
    _add_field_options(sub)
    _add_theta_option(sub)
    _add_format_option(sub)

    sub = commands.add_parser("count", help="one exact zero count")
    _add_field_options(sub)
    sub.add_argument("--s", type=int, required=True, help="number of variables")
    sub.add_argument("--z", help="target: element coefficients or zero|c0|c1|c2")
    sub.add_argument("--y", help="twisted coefficient: element or c1|c2 (non-cubic)")
    _add_theta_option(sub)
    _add_format_option(sub)

    sub = commands.add_parser("series", help="window of counts from the generating function")
    _add_field_options(sub)
    sub.add_argument("--z", help="target: element coefficients or zero|c0|c1|c2")
    sub.add_argument("--y", help="twisted coefficient: element or c1|c2 (non-cubic)")
    sub.add_argument("--n-terms", type=int, default=8, help="number of coefficients (default 8)")
    _add_theta_option(sub)
    _add_format_option(sub)

    sub = commands.add_parser("verify", help="run the full cross-validation suite")
    _add_format_option(sub)

    sub = commands.add_parser("reproduce-example", help="the F_31 worked example")
    _add_theta_option(sub)
    _add_format_option(sub)
    return parser


def _parse_coeffs(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(c) for c in text.split(","))
    except ValueError as exc:
        raise DomainError(f"bad coefficient list {text!r}") from exc


def _resolve_field(args) -> FieldDescriptor:
    modulus = _parse_coeffs(args.modulus) if args.modulus else None
    generator = _parse_coeffs(args.generator) if args.generator else None
    return make_field(args.p, args.k, modulus, generator)


def _field_query(args, field: FieldDescriptor) -> dict:
    return {"command": args.command, "field": field.to_string()}


def _data_warnings(data: CubicData) -> list[dict]:
    if data.theta != data.theta_paper:
        return [{
            "code": "theta-parity-rule-mismatch",
            "message": (
                f"exact theta = {data.theta} but the even-degree parity rule gives "
                f"{data.theta_paper}; counts use the exact value (override with --theta-source paper)"
            ),
        }]
    return []


def _resolve_target(field: FieldDescriptor, text: str) -> tuple[CubicClass, str, dict]:
    """Class keyword or concrete element -> (class, canonical label, extra result keys)."""
    keyword = text.strip().lower()
    if keyword in _CLASS_KEYWORDS:
        cls = _CLASS_KEYWORDS[keyword]
        if cls in (CubicClass.C1, CubicClass.C2) and field.q % 3 != 1:
            raise DomainError(f"classes c1/c2 are undefined for q = {field.q} = 2 (mod 3)")
        return cls, keyword, {}
    z = parse_element(field, text)
    if z.is_zero():
        return CubicClass.ZERO, str(z), {"cubic_class": "zero"}
    if field.q % 3 != 1:
        return CubicClass.C0, str(z), {"cubic_class": "cube (q = 2 mod 3)"}
    cls = field.cube_class(z)
    return cls, str(z), {"cubic_class": cls.value}


def _run_constants(args) -> tuple[dict, int]:
    field = _resolve_field(args)
    data = cubic_data(field)
    result = {
        "q": data.q, "p": data.p, "k": data.k,
        "c": data.c, "d": data.d, "r1": data.r1, "r2": data.r2,
        "theta": data.theta, "theta_paper": data.theta_paper,
        "gauss_cubed_over_q": str(data.gauss_cubed_over_q),
    }
    return {"query": _field_query(args, field), "result": result, "warnings": _data_warnings(data)}, 0


def _run_count(args) -> tuple[dict, int]:
    field = _resolve_field(args)
    if (args.z is None) == (args.y is None):
        raise DomainError("give exactly one of --z (plain target) or --y (twisted coefficient)")
    warnings: list[dict] = []
    if args.y is not None:
        if field.q % 3 != 1:
            raise DomainError(
                f"every element of F_{field.q} is a cube (q = 2 mod 3): no non-cubic coefficient exists"
            )
        cls, label, extra = _resolve_target(field, args.y)
        data = cubic_data(field)
        warnings += _data_warnings(data)
        value = count_twisted(data, args.s, cls, args.theta_source)
        result = {"q": field.q, "s": args.s, "target": label, "kind": "twisted", "value": value, **extra}
    else:
        cls, label, extra = _resolve_target(field, args.z)
        if field.q % 3 == 1:
            data = cubic_data(field)
            warnings += _data_warnings(data)
            value = count_diagonal(data, args.s, cls, args.theta_source)
        else:
            value = bijective_count(field.q, args.s, cls is CubicClass.ZERO)
        if args.s == 0:
            warnings.append({
                "code": "empty-tuple-convention",
                "message": "s = 0 uses the empty-tuple convention and is not part of the series proper",
            })
        result = {"q": field.q, "s": args.s, "target": label, "kind": "diagonal", "value": value, **extra}
    return {"query": {**_field_query(args, field), "s": args.s}, "result": result, "warnings": warnings}, 0


def _run_series(args) -> tuple[dict, int]:
    field = _resolve_field(args)
    if (args.z is None) == (args.y is None):
        raise DomainError("give exactly one of --z or --y")
    if field.q % 3 != 1:
        raise DomainError(f"series require q = 1 (mod 3); q = {field.q} counts are q^(s-1) throughout")
    data = cubic_data(field)
    warnings = _data_warnings(data)
    if args.y is not None:
        cls, label, extra = _resolve_target(field, args.y)
        coeffs = twisted_series(data, cls, args.n_terms, args.theta_source)
        result = {"q": field.q, "target": label, "kind": "twisted", "s_start": 2,
                  "coefficients": list(coeffs), **extra}
    else:
        cls, label, extra = _resolve_target(field, args.z)
        window = diagonal_series(data, cls, args.n_terms, args.theta_source)
        result = {"q": field.q, "target": label, "kind": "diagonal", "s_start": 1,
                  "coefficients": list(window.coefficients), **extra}
    return {"query": {**_field_query(args, field), "n_terms": args.n_terms}, "result": result, "warnings": warnings}, 0


def _run_verify(args) -> tuple[dict, int]:
    report = verify_mod.full_report()
    warnings = [
        {"code": "check-warning", "message": f"{c['name']}: {c['observed']}"}
        for c in report["checks"] if c["status"] == "warn"
    ]
    payload = {"query": {"command": "verify"}, "result": report, "warnings": warnings}
    return payload, 0 if report["ok"] else 1


def _run_reproduce(args) -> tuple[dict, int]:
    report = verify_mod.reproduce_example(args.theta_source)
    payload = {
        "query": {"command": "reproduce-example", "theta_source": args.theta_source},
        "result": report,
        "warnings": [],
    }
    return payload, 0 if report["status"] == "PASS" else 1


_HANDLERS = {
    "constants": _run_constants,
    "count": _run_count,
    "series": _run_series,
    "verify": _run_verify,
    "reproduce-example": _run_reproduce,
}


def _tsv_lines(result: dict) -> list[str]:
    if "coefficients" in result:
        start = result.get("s_start", 1)
        return [f"{start + i}\t{v}" for i, v in enumerate(result["coefficients"])]
    if "checks" in result:
        return [f"{c['name']}\t{c['status']}" for c in result["checks"]]
    return [f"{key}\t{result[key]}" for key in sorted(result)]


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "tsv":
        print("\n".join(_tsv_lines(payload["result"])))
    else:
        print(json.dumps(payload, sort_keys=True))


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        payload, code = _HANDLERS[args.command](args)
    except DomainError as exc:
        print(json.dumps({"error": {"type": "validation", "message": str(exc)}}, sort_keys=True))
        return 2
    except ResourceError as exc:
        print(json.dumps({"error": {"type": "resource", "message": str(exc)}}, sort_keys=True))
        return 2
    except IntegrityError as exc:
        print(json.dumps({"error": {"type": "integrity", "message": str(exc)}}, sort_keys=True))
        return 3
    _emit(payload, args.format)
    return code


if __name__ == "__main__":
    sys.exit(main())
