"""Command-line front end.

One binary, subcommand style:

    rslocal lfactor --l 3 --k 2 [--d 1] [--s0 1/2] [--right St|Sigma|Sp]
                    [--distinct-inertial] [--format text|latex|json]
    rslocal pfd     (same flags; prints the residue table and the
                     recombination verdict)
    rslocal whittaker spherical --sigma 2 --lambda 2,1
    rslocal whittaker essential --l 4 --lambda 3,0,0
    rslocal segments "St(2)@rho x [0,1]@rho" [--dual]
    rslocal rs-integral --case tate|steinberg-distinct|steinberg-equal|
                    spherical-cauchy [--l L] [--k K] [--n N] [--depth D]
    rslocal verify [--suite all] [--max-l 5] [--depth 24] [--seed 0]

The default truncation depth comes from the RS_DEPTH environment variable
when set.  Exit codes: 0 on success, 1 when an identity check fails, 2 on
usage errors.  Every run is deterministic given the flags and the seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .halfint import format_half, parse_half
from .integrals import check_partial_fraction_identity
from .lfactors import LFactorSpec, l_steinberg_pair, partial_fractions, recombine
from .parser import ParseError, SemanticError, format_descriptor, parse_descriptor
from .ratfunc import rf_expand
from .render import (
    rf_latex,
    rf_text,
    rf_to_json,
    scalar_latex,
    scalar_text,
    scalar_to_json,
    series_to_json,
)
from .segments import Kind, RepDescriptor, Segment, is_generic_product, is_standard
from .segments import zelevinsky_dual_discrete
from .verify import CASES, SUITES, named_case, run_suite
from .whittaker import Cocharacter, SatakeParams, essential_value, spherical_value

_RIGHT = {"St": Kind.STEINBERG, "Sigma": Kind.SIGMA, "Sp": Kind.SPEH}


def _default_depth(fallback: int = 24) -> int:
    env = os.environ.get("RS_DEPTH")
    if env is None:
        return fallback
    try:
        return int(env)
    except ValueError:
        raise SystemExit(f"RS_DEPTH must be an integer, got {env!r}")


def _emit(payload: dict, fmt: str, text_lines: list[str], latex_lines: list[str]):
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    elif fmt == "latex":
        print("\n".join(latex_lines))
    else:
        print("\n".join(text_lines))


def _half_arg(text: str):
    try:
        return parse_half(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _lambda_arg(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected a comma-separated integer list, got {text!r}"
        )


def _pair_spec(args) -> LFactorSpec:
    return LFactorSpec.unramified(
        args.l,
        args.k,
        d=args.d,
        s0=args.s0,
        right_kind=_RIGHT[args.right],
        distinct_inertial=args.distinct_inertial,
    )


def _cmd_lfactor(args) -> int:
    spec = _pair_spec(args)
    value = l_steinberg_pair(spec)
    payload = {
        "command": "lfactor",
        "l": args.l,
        "k": args.k,
        "d": args.d,
        "s0": format_half(args.s0),
        "right": args.right,
        "dual_pair": spec.is_dual_pair,
        "value": rf_to_json(value),
        "text": rf_text(value),
    }
    _emit(payload, args.format, [rf_text(value)], [rf_latex(value)])
    return 0


def _cmd_pfd(args) -> int:
    spec = _pair_spec(args)
    if not spec.is_dual_pair:
        message = "L-factor is 1 for an inertially distinct pair; no decomposition"
        _emit(
            {"command": "pfd", "trivial": True, "note": message},
            args.format,
            [message],
            [message],
        )
        return 0
    pf = partial_fractions(spec)
    target = l_steinberg_pair(spec)
    recombined = recombine(pf)
    ok = recombined == target
    lam_sum = pf.lambda_sum()
    text_lines = [f"Y = X^{pf.power}"]
    latex_lines = [f"Y = X^{{{pf.power}}}"]
    for i, (pole, lam) in enumerate(pf.terms):
        text_lines.append(
            f"term {i}: pole {scalar_text(pole)}  lambda {scalar_text(lam)}"
        )
        latex_lines.append(
            f"\\lambda_{{{i}}} = {scalar_latex(lam)}, \\quad c_{{{i}}} = {scalar_latex(pole)}"
        )
    text_lines.append(f"sum of lambdas: {scalar_text(lam_sum)}")
    text_lines.append(f"recombination: {'ok' if ok else 'MISMATCH'}")
    latex_lines.append(f"\\sum_i \\lambda_i = {scalar_latex(lam_sum)}")
    payload = {
        "command": "pfd",
        "l": args.l,
        "k": args.k,
        "d": args.d,
        "s0": format_half(args.s0),
        "power": pf.power,
        "terms": [
            {
                "pole": scalar_to_json(pole),
                "pole_text": scalar_text(pole),
                "lambda": scalar_to_json(lam),
                "lambda_text": scalar_text(lam),
            }
            for pole, lam in pf.terms
        ],
        "lambda_sum": scalar_text(lam_sum),
        "recombines": ok,
    }
    _emit(payload, args.format, text_lines, latex_lines)
    return 0 if ok else 1


def _cmd_whittaker(args) -> int:
    if args.variant == "spherical":
        params = SatakeParams.sigma(args.sigma)
        lam = Cocharacter.of(args.lam)
        if lam.n != args.sigma:
            raise ValueError(
                f"lambda length {lam.n} must equal the module size {args.sigma}"
            )
        value = spherical_value(params, lam)
        meta = {"variant": "spherical", "sigma": args.sigma}
    else:
        value = essential_value(args.l, args.lam)
        meta = {"variant": "essential", "l": args.l}
    payload = {
        "command": "whittaker",
        **meta,
        "lambda": list(args.lam),
        "value": scalar_to_json(value),
        "text": scalar_text(value),
    }
    _emit(payload, args.format, [scalar_text(value)], [scalar_latex(value)])
    return 0


def _describe(obj: Segment | RepDescriptor) -> list[str]:
    lines = [f"expression: {format_descriptor(obj)}"]
    if isinstance(obj, Segment):
        lines.append(
            f"segment of length {obj.length}, group size {obj.group_size}, "
            f"e-value {format_half(obj.e_value)}"
        )
        return lines
    lines.append(f"kind: {obj.kind.value}, group size {obj.group_size}")
    for seg in obj.segments:
        lines.append(
            f"  factor {format_descriptor(seg)} (length {seg.length}, "
            f"e-value {format_half(seg.e_value)})"
        )
    if obj.kind in (Kind.PRODUCT, Kind.STEINBERG, Kind.SIGMA):
        lines.append(f"standard: {is_standard(obj)}")
        lines.append(f"generic product: {is_generic_product(obj)}")
    return lines


def _cmd_segments(args) -> int:
    obj = parse_descriptor(args.expression)
    if args.dual:
        if isinstance(obj, Segment):
            raise SystemExit("duality applies to St and Sp descriptors, not segments")
        obj = zelevinsky_dual_discrete(obj)
    payload: dict = {
        "command": "segments",
        "expression": format_descriptor(obj),
    }
    if isinstance(obj, Segment):
        payload.update(
            {
                "type": "segment",
                "length": obj.length,
                "group_size": obj.group_size,
                "e_value": format_half(obj.e_value),
            }
        )
    else:
        payload.update(
            {
                "type": "descriptor",
                "kind": obj.kind.value,
                "group_size": obj.group_size,
                "factors": [format_descriptor(s) for s in obj.segments],
            }
        )
        if obj.kind is not Kind.SPEH:
            payload["standard"] = is_standard(obj)
            payload["generic_product"] = is_generic_product(obj)
    lines = _describe(obj)
    _emit(payload, args.format, lines, lines)
    return 0


def _cmd_rs_integral(args) -> int:
    from .integrals import torus_series

    spec, closed = named_case(args.case, l=args.l, k=args.k, n=args.n, depth=args.depth)
    series = torus_series(spec)
    expansion = rf_expand(closed, spec.depth)
    from .ratfunc import series_eq

    equal, idx = series_eq(series, expansion)
    payload = {
        "command": "rs-integral",
        "case": args.case,
        "n": spec.n,
        "m": spec.m,
        "depth": spec.depth,
        "series": series_to_json(series),
        "closed_form": rf_to_json(closed),
        "closed_form_text": rf_text(closed),
        "verdict": equal,
        "first_mismatch": idx,
    }
    print(json.dumps(payload, sort_keys=True))
    return 0 if equal else 1


def _cmd_verify(args) -> int:
    results = run_suite(args.suite, max_l=args.max_l, depth=args.depth, seed=args.seed)
    all_passed = all(r.passed for r in results)
    if args.format == "json":
        payload = {
            "command": "verify",
            "suite": args.suite,
            "max_l": args.max_l,
            "depth": args.depth,
            "seed": args.seed,
            "passed": all_passed,
            "checks": [
                {
                    "name": r.name,
                    "description": r.description,
                    "passed": r.passed,
                    "first_mismatch": r.first_mismatch,
                }
                for r in results
            ],
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            extra = (
                f" (first mismatch at X^{r.first_mismatch})"
                if not r.passed and r.first_mismatch is not None
                else ""
            )
            print(f"[{status}] {r.name}: {r.description}{extra}")
        print(
            f"{len(results)} checks, {sum(r.passed for r in results)} passed, "
            f"{sum(not r.passed for r in results)} failed"
        )
    return 0 if all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rslocal",
        description=(
            "Exact local Rankin-Selberg L-factors for Steinberg/Speh pairs, "
            "and truncated torus-sum verification of their test-vector "
            "integral identities."
        ),
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_pair_flags(p):
        p.add_argument("--l", type=int, required=True, help="left Steinberg length")
        p.add_argument("--k", type=int, required=True, help="right factor length")
        p.add_argument("--d", type=int, default=1, help="unramified self-twist order")
        p.add_argument(
            "--s0", type=_half_arg, default=0, help="offset exponent (half-integer)"
        )
        p.add_argument("--right", choices=sorted(_RIGHT), default="St")
        p.add_argument(
            "--distinct-inertial",
            action="store_true",
            help="pair inertially distinct data (the factor is then 1)",
        )
        p.add_argument("--format", choices=("text", "latex", "json"), default="text")

    p_lf = sub.add_parser("lfactor", help="closed-form L-factor of a pair")
    add_pair_flags(p_lf)
    p_lf.set_defaults(func=_cmd_lfactor)

    p_pfd = sub.add_parser("pfd", help="simple-pole decomposition with residues")
    add_pair_flags(p_pfd)
    p_pfd.set_defaults(func=_cmd_pfd)

    p_wh = sub.add_parser("whittaker", help="torus values of Whittaker vectors")
    wh_sub = p_wh.add_subparsers(dest="variant", required=True)
    p_sph = wh_sub.add_parser("spherical", help="normalized spherical vector")
    p_sph.add_argument("--sigma", type=int, required=True, help="module length k")
    p_sph.add_argument(
        "--lambda", dest="lam", type=_lambda_arg, required=True,
        help="cocharacter, e.g. 2,1,0",
    )
    p_sph.add_argument("--format", choices=("text", "latex", "json"), default="text")
    p_sph.set_defaults(func=_cmd_whittaker)
    p_ess = wh_sub.add_parser("essential", help="essential Steinberg vector")
    p_ess.add_argument("--l", type=int, required=True, help="Steinberg size l >= 2")
    p_ess.add_argument(
        "--lambda", dest="lam", type=_lambda_arg, required=True,
        help="cocharacter of length l-1",
    )
    p_ess.add_argument("--format", choices=("text", "latex", "json"), default="text")
    p_ess.set_defaults(func=_cmd_whittaker)

    p_seg = sub.add_parser("segments", help="parse and describe a descriptor")
    p_seg.add_argument("expression", help="e.g. 'St(2)@rho x [0,1]@rho'")
    p_seg.add_argument("--dual", action="store_true", help="apply St <-> Sp duality")
    p_seg.add_argument("--format", choices=("text", "json"), default="text")
    p_seg.set_defaults(func=_cmd_segments)

    p_rs = sub.add_parser(
        "rs-integral", help="evaluate a named torus-sum integral (JSON output)"
    )
    p_rs.add_argument("--case", choices=CASES, required=True)
    p_rs.add_argument("--l", type=int, default=3)
    p_rs.add_argument("--k", type=int, default=2)
    p_rs.add_argument("--n", type=int, default=2)
    p_rs.add_argument("--depth", type=int, default=_default_depth())
    p_rs.set_defaults(func=_cmd_rs_integral)

    p_v = sub.add_parser("verify", help="run the identity battery")
    p_v.add_argument("--suite", choices=SUITES, default="all")
    p_v.add_argument("--max-l", type=int, default=5)
    p_v.add_argument("--depth", type=int, default=_default_depth())
    p_v.add_argument("--seed", type=int, default=0)
    p_v.add_argument("--format", choices=("text", "json"), default="text")
    p_v.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.func(args)
    except (ParseError, SemanticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return code


if __name__ == "__main__":
    sys.exit(main())
