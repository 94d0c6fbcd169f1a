"""Command-line interface.

Subcommands: eval, member, plot, profile, synth, verify.  Exit codes are
scriptable: 0 success or member, 1 domain-negative result (point outside,
target not reached), 2 usage error, 3 tolerance or verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .dynamics import UVWPoint, UnitMassError, XYPoint, eval_xy, extract_uvw, project
from .lie_core import (
    abelianization_lower_bound,
    element_to_json,
    evaluate_word,
)
from .region import EpsilonPolicy, Membership, membership, render_region
from .scalar import Mode, Scalar
from .search import (
    SearchConfig,
    SynthesisDomainError,
    coarse_length_profile,
    coarse_length_profile_uvw,
    profile_to_csv,
    synthesize_word,
)
from .verify import SUITE_NAMES, run_suite
from .words import (
    WordParseError,
    coarse_length,
    format_word,
    length,
    normalize,
    parse_word,
    sigma_to_rword,
    word_to_json,
)

__all__ = ["main"]

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_TOLERANCE = 3


def _mode(args: argparse.Namespace) -> Mode:
    return Mode.EXACT if args.arith == "exact" else Mode.FLOAT


def _config(args: argparse.Namespace) -> SearchConfig:
    return SearchConfig(
        master_seed=args.seed,
        pattern_cap=args.pattern_cap,
        synthesis_tolerance=args.tol,
        diagonal_tolerance=min(args.tol, 1e-9),
        max_synthesis_steps=args.pattern_cap,
    )


def _emit(args: argparse.Namespace, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _reject_csv(args: argparse.Namespace, command: str) -> None:
    if args.format == "csv":
        raise _UsageError(f"{command} has no csv form; use text or json")


class _UsageError(Exception):
    pass


def _parse_scalar(text: str, mode: Mode, what: str) -> Scalar:
    try:
        return Scalar.parse(text, mode)
    except (ValueError, ZeroDivisionError) as exc:
        raise _UsageError(f"bad {what} {text!r}: {exc}") from exc


def _cmd_eval(args: argparse.Namespace) -> int:
    mode = _mode(args)
    _reject_csv(args, "eval")
    word = parse_word(args.word, mode)
    element = evaluate_word(word, mode)
    ell = length(word)
    ell_prime = coarse_length(word)
    uvw = xy = None
    try:
        uvw = extract_uvw(element)
        xy = project(uvw)
    except UnitMassError:
        pass
    if args.format == "json":
        payload = {
            "element": element_to_json(element),
            "uvw": [c.as_json() for c in uvw.coords()] if uvw else None,
            "xy": [c.as_json() for c in xy.coords()] if xy else None,
            "length": ell.as_json(),
            "coarse_length": ell_prime,
            "abelianization_lower_bound": abelianization_lower_bound(element).as_json(),
        }
        _emit(args, json.dumps(payload, indent=2))
        return EXIT_OK
    lines = [f"element: ({', '.join(element_to_json(element))})"]
    if uvw is not None and xy is not None:
        lines.append(f"uvw: ({', '.join(c.as_json() for c in uvw.coords())})")
        lines.append(f"xy: ({', '.join(c.as_json() for c in xy.coords())})")
    else:
        lines.append("uvw: n/a (generator masses are not (1, 1))")
    lines.append(f"length: {ell.as_json()}")
    lines.append(f"coarse_length: {ell_prime}")
    _emit(args, "\n".join(lines))
    return EXIT_OK


def _cmd_member(args: argparse.Namespace) -> int:
    mode = _mode(args)
    _reject_csv(args, "member")
    point = XYPoint(
        _parse_scalar(args.x, mode, "x coordinate"),
        _parse_scalar(args.y, mode, "y coordinate"),
    )
    try:
        policy = EpsilonPolicy.for_mode(mode, args.eps)
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    verdict = membership(point, policy)
    if args.format == "json":
        payload = {
            "x": point.x.as_json(),
            "y": point.y.as_json(),
            "status": verdict.status.value,
            "failed_condition": verdict.failed_condition,
            "boundary_equality": verdict.boundary_equality,
        }
        _emit(args, json.dumps(payload, indent=2))
    else:
        lines = [f"status: {verdict.status.value}"]
        if verdict.failed_condition:
            tie = " (exact equality)" if verdict.boundary_equality else ""
            lines.append(f"failed_condition: {verdict.failed_condition}{tie}")
        _emit(args, "\n".join(lines))
    return EXIT_OK if verdict.is_member() else EXIT_DOMAIN


def _cmd_plot(args: argparse.Namespace) -> int:
    out = args.out or ("region.csv" if args.format == "csv" else "region.svg")
    summary = render_region(
        out,
        format=args.format,
        count=args.count,
        resolution=args.resolution,
        eps=args.eps,
    )
    print(f"wrote {summary.format} to {summary.path}")
    return EXIT_OK


def _cmd_profile(args: argparse.Namespace) -> int:
    cfg = _config(args)
    values = [float(_parse_scalar(v, Mode.FLOAT, "coordinate").value) for v in args.values]
    if args.objective == "xy":
        if len(values) != 2:
            raise _UsageError("planar profile takes: profile X Y K_MAX")
        target = XYPoint.of_floats(values[0], values[1])
        rows = coarse_length_profile(target, args.k_max, cfg)
    else:
        if len(values) != 3:
            raise _UsageError("uvw profile takes: profile --objective uvw U V W K_MAX")
        target = UVWPoint(*(Scalar.of_float(v) for v in values))
        rows = coarse_length_profile_uvw(target, args.k_max, cfg)
    if args.format == "json":
        payload = {
            "objective": args.objective,
            "target": values,
            "note": (
                "distances are optimizer upper bounds; the planar objective "
                "lower-bounds full-element difficulty"
            ),
            "rows": [
                {
                    "k": row.k,
                    "distance": row.distance,
                    "pattern": row.pattern,
                    "t_vector": list(row.t_values),
                }
                for row in rows
            ],
        }
        _emit(args, json.dumps(payload, indent=2))
    else:
        _emit(args, profile_to_csv(rows).rstrip("\n"))
    return EXIT_OK


def _cmd_synth(args: argparse.Namespace) -> int:
    mode = Mode.FLOAT
    _reject_csv(args, "synth")
    cfg = _config(args)
    target = XYPoint(
        _parse_scalar(args.x, mode, "x coordinate"),
        _parse_scalar(args.y, mode, "y coordinate"),
    )
    try:
        result = synthesize_word(target, cfg)
    except SynthesisDomainError as exc:
        print(f"not synthesized: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    word_text = None
    if result.word is not None:
        word_text = format_word(normalize(sigma_to_rword(result.word)))
    if args.format == "json":
        payload = {
            "success": result.success,
            "stage": result.stage,
            "residual": result.residual,
            "message": result.message,
            "word_text": word_text,
            "word": word_to_json(sigma_to_rword(result.word)) if result.word else None,
            "sequence": {
                "seed": result.sequence.seed.value,
                "steps": [
                    [kind.value, t.as_json()] for kind, t in result.sequence.steps
                ],
            }
            if result.sequence
            else None,
            "achieved": [c.as_json() for c in result.achieved.coords()]
            if result.achieved
            else None,
        }
        _emit(args, json.dumps(payload, indent=2))
    else:
        if result.success:
            lines = [
                f"word: {word_text}",
                f"residual: {result.residual!r}",
                f"stage: {result.stage}",
            ]
        else:
            lines = [f"not synthesized: {result.message}"]
        _emit(args, "\n".join(lines))
    return EXIT_OK if result.success else EXIT_DOMAIN


def _cmd_verify(args: argparse.Namespace) -> int:
    mode = _mode(args)
    _reject_csv(args, "verify")
    result = run_suite(args.suite, mode=mode, trials=args.trials, seed=args.seed)
    if args.format == "json":
        payload = {
            "suite": result.suite,
            "mode": result.mode.value,
            "trials": result.trials,
            "passed": result.passed,
            "seconds": round(result.seconds, 3),
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in result.checks
            ],
        }
        _emit(args, json.dumps(payload, indent=2))
    else:
        lines = [
            f"suite {result.suite} ({result.mode.value} mode, "
            f"{result.trials} trials, {result.seconds:.1f}s)"
        ]
        for check in result.checks:
            flag = "PASS" if check.passed else "FAIL"
            lines.append(f"[{flag}] {check.name}: {check.detail}")
        _emit(args, "\n".join(lines))
    return EXIT_OK if result.passed else EXIT_TOLERANCE


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--arith", choices=("exact", "float"), default="float",
        help="scalar arithmetic mode (default float)",
    )
    common.add_argument(
        "--eps", type=float, default=0.0,
        help="strictness margin for region conditions (float mode only)",
    )
    common.add_argument(
        "--tol", type=float, default=1e-9,
        help="residual tolerance for searches and synthesis",
    )
    common.add_argument(
        "--seed", type=int, default=1729, help="master seed for all randomness"
    )
    common.add_argument(
        "--pattern-cap", type=int, default=12,
        help="exhaustive kind-pattern cap; also the synthesis step budget",
    )
    common.add_argument("--out", help="write output to this path instead of stdout")
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument(
        "--format", choices=("json", "csv", "text"), default="text",
        help="output format (default text)",
    )

    parser = argparse.ArgumentParser(
        prog="nilwords",
        description=(
            "Word calculus in the free 3-step nilpotent group on two "
            "generators: evaluation, region membership, reachability "
            "profiles, and word synthesis."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "eval", parents=[common, fmt],
        help="evaluate a word and report element, (u,v,w), (x,y), lengths",
    )
    p.add_argument("word", help="word text, e.g. 'X^0.5 Y^1 X^0.5'")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser(
        "member", parents=[common, fmt],
        help="classify a planar point against the region inequalities",
    )
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=_cmd_member)

    p = sub.add_parser(
        "plot", parents=[common],
        help="render the region as SVG, or its boundary curves as CSV",
    )
    p.add_argument(
        "--format", choices=("svg", "csv"), default="svg",
        help="plot output kind (default svg)",
    )
    p.add_argument(
        "--count", type=int, default=512, help="samples per boundary curve"
    )
    p.add_argument(
        "--resolution", type=int, default=512, help="shading grid resolution"
    )
    p.set_defaults(func=_cmd_plot)

    p = sub.add_parser(
        "profile", parents=[common, fmt],
        help="distance to a target versus the step budget k",
    )
    p.add_argument(
        "values", nargs="+",
        help="target coordinates: X Y (planar) or U V W (with --objective uvw)",
    )
    p.add_argument("k_max", type=int, help="largest step budget")
    p.add_argument(
        "--objective", choices=("xy", "uvw"), default="xy",
        help="score sequences in the plane or against full (u,v,w)",
    )
    p.set_defaults(func=_cmd_profile)

    p = sub.add_parser(
        "synth", parents=[common, fmt],
        help="construct a word whose planar image is the target",
    )
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=_cmd_synth)

    p = sub.add_parser(
        "verify", parents=[common, fmt], help="run a named verification suite"
    )
    p.add_argument("suite", choices=SUITE_NAMES)
    p.add_argument(
        "--trials", type=int, default=None,
        help="override the suite's default trial count",
    )
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except WordParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
