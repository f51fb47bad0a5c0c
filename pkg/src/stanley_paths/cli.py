"""Command-line front end: sequence export, validation, enumeration, verify.

Exit codes: 0 on success, 1 when `verify` finds a disagreement, 2 on usage
errors.  All integers are printed in full decimal; nothing is ever rendered
through floating point.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .oracle import (
    DEFAULT_EXHAUSTIVE_CAPS,
    LimitExceededError,
    State,
    automaton,
    dp_counts,
    enumerate_words,
    parse_word,
    state_sort_key,
    validate_word,
)
from .series import DomainError, TruncatedSeries
from .skew import boundary_skew, level_gf_skew, r2_skew, total_prefix_skew
from .standard import boundary_std, level_gf_std, r2_std, total_prefix_std
from .verify import Bounds, Fault, run_checks

DEFAULT_ORDER = 64
FORMATS = ("plain", "csv", "json", "bfile")

_SERIES_CHOICES = {
    "std": ("r2", "f1", "h0", "total", "level"),
    "skew": ("r2", "e1", "f1", "h0", "k0", "total", "level"),
}


@dataclass
class SequenceReport:
    """One exported integer sequence with its provenance."""

    name: str
    variant: str
    method: str  # dp | closedform | formula
    order: int
    values: list[int]
    metadata: dict[str, str] = field(default_factory=dict)


def render(report: SequenceReport, fmt: str, offset: int = 0) -> str:
    if fmt == "plain":
        return " ".join(str(v) for v in report.values) + "\n"
    if fmt == "csv":
        lines = ["n,value"]
        lines += [f"{n},{v}" for n, v in enumerate(report.values)]
        return "\n".join(lines) + "\n"
    if fmt == "json":
        payload = {
            "name": report.name,
            "variant": report.variant,
            "method": report.method,
            "order": report.order,
            "values": report.values,
            "metadata": report.metadata,
        }
        return json.dumps(payload) + "\n"
    if fmt == "bfile":
        lines = [f"{n + offset} {v}" for n, v in enumerate(report.values)]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def _parse_state(text: str, variant: str, parser: argparse.ArgumentParser) -> State:
    try:
        layer, _, level_text = text.partition(":")
        layer = layer.strip().upper()
        level = int(level_text)
    except ValueError:
        parser.error(f"state must look like LAYER:LEVEL, got {text!r}")
    if layer not in automaton(variant).layers:
        parser.error(f"layer {layer!r} does not exist in variant {variant!r}")
    if level < 0:
        parser.error("state level must be non-negative")
    return State(layer, level)


# ------------------------------------------------------------------ series

def _cmd_series(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    variant, what, order = args.variant, args.what, args.order
    if what not in _SERIES_CHOICES[variant]:
        parser.error(f"--what {what} is not defined for variant {variant}")
    metadata: dict[str, str] = {}
    if what == "level":
        if args.layer is None or args.level is None:
            parser.error("--what level requires --layer and --level")
        layer = args.layer.upper()
        if layer not in automaton(variant).layers:
            parser.error(f"layer {layer!r} does not exist in variant {variant!r}")
        try:
            gf = (level_gf_std if variant == "std" else level_gf_skew)(
                layer, args.level, order
            )
        except DomainError as exc:
            parser.error(str(exc))
        series = gf.series
        name = f"{variant}-level-{layer}{args.level}"
        metadata = {"layer": layer, "level": str(args.level)}
    else:
        series = _named_series(variant, what, order)
        name = f"{variant}-{what}"
    report = SequenceReport(
        name=name,
        variant=variant,
        method="closedform",
        order=order,
        values=series.integer_coefficients(),
        metadata=metadata,
    )
    sys.stdout.write(render(report, args.format, args.offset))
    return 0


def _named_series(variant: str, what: str, order: int) -> TruncatedSeries:
    if what == "r2":
        return r2_std(order) if variant == "std" else r2_skew(order)
    if what == "total":
        return total_prefix_std(order) if variant == "std" else total_prefix_skew(order)
    if variant == "std":
        return getattr(boundary_std(order), what)
    return getattr(boundary_skew(order), what)


# ---------------------------------------------------------------------- dp

def _cmd_dp(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    table = dp_counts(args.variant, args.max_len)
    if args.state is not None:
        state = _parse_state(args.state, args.variant, parser)
        report = SequenceReport(
            name=f"{args.variant}-dp-{state.layer}{state.level}",
            variant=args.variant,
            method="dp",
            order=args.max_len + 1,
            values=[table.count(n, state) for n in range(args.max_len + 1)],
            metadata={"layer": state.layer, "level": str(state.level)},
        )
        sys.stdout.write(render(report, args.format, args.offset))
        return 0
    if args.format == "bfile":
        parser.error("bfile output needs a single sequence; use --state")
    rows = [
        (n, state.layer, state.level, count)
        for n in range(args.max_len + 1)
        for state, count in sorted(
            table.row(n).items(), key=lambda kv: state_sort_key(kv[0])
        )
    ]
    if args.format == "plain":
        out = "".join(f"{n} {layer}:{level} {count}\n" for n, layer, level, count in rows)
    elif args.format == "csv":
        out = "n,layer,level,count\n" + "".join(
            f"{n},{layer},{level},{count}\n" for n, layer, level, count in rows
        )
    else:  # json
        out = json.dumps({
            "variant": args.variant,
            "max_len": args.max_len,
            "counts": [list(row) for row in rows],
        }) + "\n"
    sys.stdout.write(out)
    return 0


# --------------------------------------------------------------- enumerate

def _cmd_enumerate(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    cap = args.exhaustive_cap
    if cap is not None and cap > DEFAULT_EXHAUSTIVE_CAPS[args.variant]:
        sys.stderr.write(
            f"warning: exhaustive cap {cap} is above the default "
            f"{DEFAULT_EXHAUSTIVE_CAPS[args.variant]} for {args.variant}; "
            "expect a slow walk\n"
        )
    try:
        result = enumerate_words(args.variant, args.len, list_mode=args.list, cap=cap)
    except LimitExceededError as exc:
        parser.error(str(exc))
    auto = automaton(args.variant)
    lines: list[str] = []
    if args.state is not None:
        state = _parse_state(args.state, args.variant, parser)
        lines.append(str(result.counts.get(state, 0)))
        if args.list:
            lines.extend(result.words.get(state, ()))
    else:
        for state, count in result.counts.items():
            marker = " (dead end)" if args.list and auto.is_dead_end(state) else ""
            lines.append(f"{state.layer}:{state.level} {count}{marker}")
            if args.list:
                lines.extend(f"  {word}" for word in result.words[state])
        lines.append(f"total {result.total()}")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


# ---------------------------------------------------------------- validate

def _cmd_validate(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.stdin:
        raw_words = [line for line in sys.stdin.read().splitlines() if line.strip()]
    elif args.word is not None:
        raw_words = [args.word]
    else:
        parser.error("provide a WORD argument or --stdin")
    for raw in raw_words:
        try:
            word = parse_word(raw)
        except DomainError as exc:
            parser.error(str(exc))
        result = validate_word(args.variant, word)
        shown = word if word else "(empty)"
        if result.valid:
            end = result.end_state
            sys.stdout.write(f"valid {shown} -> {end.layer}:{end.level}\n")
        else:
            sys.stdout.write(
                f"invalid {shown} at {result.first_violation}: {result.reason}\n"
            )
    return 0


# ------------------------------------------------------------------ verify

def _cmd_verify(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    variants = ("std", "skew") if args.variant == "all" else (args.variant,)
    fault = None
    if args.inject_fault:
        check_name, sep, key = args.inject_fault.partition(":")
        if not sep:
            parser.error("--inject-fault expects CHECK:KEY")
        fault = Fault(check=check_name, key=key)
    bounds = Bounds(order=args.order, max_len=args.max_len)
    results = run_checks(variants, bounds, fault)
    failed = 0
    comparisons = 0
    for result in results:
        comparisons += result.comparisons
        if result.passed:
            sys.stdout.write(f"PASS {result.name} ({result.comparisons} comparisons)\n")
        else:
            failed += 1
            first = result.mismatches[0]
            sys.stdout.write(
                f"FAIL {result.name} at {first.key}: "
                f"{result.lhs_label}={first.lhs} != {result.rhs_label}={first.rhs} "
                f"({len(result.mismatches)} of {result.comparisons} comparisons differ)\n"
            )
    sys.stdout.write(
        f"{failed} failed, {len(results) - failed} passed "
        f"({comparisons} comparisons)\n"
    )
    return 1 if failed else 0


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stanley-paths",
        description=(
            "Exact enumeration of Dyck-path prefixes with odd returns to the "
            "x-axis (standard and skew variants), cross-verified three ways."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_variant(p: argparse.ArgumentParser, with_all: bool = False) -> None:
        choices = ("std", "skew", "all") if with_all else ("std", "skew")
        p.add_argument("variant", choices=choices, help="path variant")

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=FORMATS, default="plain",
                       help="output format (default: plain)")
        p.add_argument("--offset", type=int, default=0,
                       help="starting index for bfile output (default: 0)")

    p = sub.add_parser("series", help="export a counting series")
    add_variant(p)
    p.add_argument("--what", required=True,
                   choices=("r2", "e1", "f1", "h0", "k0", "total", "level"),
                   help="which series to export")
    p.add_argument("--layer", help="layer letter for --what level")
    p.add_argument("--level", type=int, help="level for --what level")
    p.add_argument("--order", type=int, default=DEFAULT_ORDER,
                   help=f"truncation order (default: {DEFAULT_ORDER})")
    add_format(p)
    p.set_defaults(handler=_cmd_series)

    p = sub.add_parser("dp", help="export state-graph path counts")
    add_variant(p)
    p.add_argument("--max-len", type=int, required=True, help="largest word length")
    p.add_argument("--state", help="restrict to one state, e.g. H:0")
    add_format(p)
    p.set_defaults(handler=_cmd_dp)

    p = sub.add_parser("enumerate", help="exhaustively enumerate valid words")
    add_variant(p)
    p.add_argument("--len", type=int, required=True, help="word length")
    p.add_argument("--state", help="restrict to one end state, e.g. H:0")
    p.add_argument("--list", action="store_true", help="also print the words")
    p.add_argument("--exhaustive-cap", type=int, default=None,
                   help="override the exhaustive length cap "
                        f"(defaults: std {DEFAULT_EXHAUSTIVE_CAPS['std']}, "
                        f"skew {DEFAULT_EXHAUSTIVE_CAPS['skew']})")
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("validate", help="judge step words (U/D/R)")
    add_variant(p)
    p.add_argument("word", nargs="?", help="step word, e.g. UDUD or 'u d u d'")
    p.add_argument("--stdin", action="store_true",
                   help="read words from stdin, one per line")
    p.set_defaults(handler=_cmd_validate)

    p = sub.add_parser("verify", help="run every cross-check between methods")
    add_variant(p, with_all=True)
    p.add_argument("--order", type=int, default=DEFAULT_ORDER,
                   help=f"truncation order for series checks (default: {DEFAULT_ORDER})")
    p.add_argument("--max-len", type=int, default=14,
                   help="length bound for the exhaustive-vs-DP check (default: 14)")
    p.add_argument("--inject-fault", default=None, help=argparse.SUPPRESS)
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args, parser)
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 2


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
