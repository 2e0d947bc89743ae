"""Command-line interface.

Subcommands: validate, spread, unfold-bp, trellis, compare.  Exit codes:
0 success, 1 validation or comparison failure, 2 parse error, 3 bound
exhausted while --require-saturation is set.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import fileio
from .errors import ParseError, SpreadNetError
from .mcnets import validate_mcnet
from .modes import BP, TRELLIS, ModeSpec, spread_with_mode
from .oracle import isomorphic, trellis_oracle, unfold_bp_oracle

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_PARSE = 2
EXIT_UNSATURATED = 3


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def _load_net(path: str):
    return fileio.parse_net(_read(path))


def _cmd_validate(args) -> int:
    mc = _load_net(args.net)
    verdict = validate_mcnet(mc)
    if not verdict:
        for line in verdict.violations:
            print(line, file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


def _cmd_spread(args) -> int:
    mc = _load_net(args.net)
    mode = fileio.parse_mode(_read(args.mode))
    result = spread_with_mode(mc, mode)
    doc = fileio.SpreadDocument.of(result)
    Path(args.out).write_text(fileio.emit_spread(doc))
    if args.dot:
        Path(args.dot).write_text(fileio.emit_dot(doc))
    if args.require_saturation and not result.saturated:
        print("bound exhausted before saturation", file=sys.stderr)
        return EXIT_UNSATURATED
    return EXIT_OK


def _cmd_unfold_bp(args) -> int:
    mc = _load_net(args.net)
    net = unfold_bp_oracle(mc, args.depth)
    Path(args.out).write_text(fileio.emit_oracle_net(net))
    return EXIT_OK


def _cmd_trellis(args) -> int:
    mc = _load_net(args.net)
    net = trellis_oracle(mc, args.height)
    Path(args.out).write_text(fileio.emit_oracle_net(net))
    return EXIT_OK


def _first_discrepancy(a, b) -> str:
    for kind, xs, ys in (("place", a.places, b.places),
                         ("transition", a.transitions, b.transitions)):
        la = sorted(a.label(x) for x in xs)
        lb = sorted(b.label(y) for y in ys)
        if la != lb:
            return (f"{kind} labels differ: {len(xs)} vs {len(ys)} nodes, "
                    f"multisets {la} vs {lb}")
    if len(a.flow) != len(b.flow):
        return f"arc counts differ: {len(a.flow)} vs {len(b.flow)}"
    return "same node and arc counts but no label-preserving bijection exists"


def _cmd_compare(args) -> int:
    mc = _load_net(args.net)
    if args.mode:
        mode = fileio.parse_mode(_read(args.mode))
        mode = ModeSpec(mode.kind, mode.components, mode.max_events, args.depth)
    else:
        mode = (ModeSpec.bp(args.depth) if args.against == "bp"
                else ModeSpec.trellis(args.depth))
    result = spread_with_mode(mc, mode)
    if args.require_saturation and not result.saturated:
        print("bound exhausted before saturation", file=sys.stderr)
        return EXIT_UNSATURATED
    if args.against == "bp":
        reference = unfold_bp_oracle(mc, args.depth)
    else:
        reference = trellis_oracle(mc, args.depth)
    iso = isomorphic(result.net.mc.net, reference)
    if iso is None:
        print(_first_discrepancy(result.net.mc.net, reference), file=sys.stderr)
        return EXIT_FAILED
    for x, y in iso.place_bijection + iso.trans_bijection:
        print(f"{x} ~ {y}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spreadnet",
        description="Spread multi-clock Petri nets over ticking domains.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check that a net file is a valid "
                                        "multi-clock net")
    p.add_argument("--net", required=True)
    p.set_defaults(fn=_cmd_validate)

    p = sub.add_parser("spread", help="spread a net with a mode file")
    p.add_argument("--net", required=True)
    p.add_argument("--mode", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--dot", help="also write a graph-description export")
    p.add_argument("--require-saturation", action="store_true")
    p.set_defaults(fn=_cmd_spread)

    p = sub.add_parser("unfold-bp", help="reference branching-process prefix")
    p.add_argument("--net", required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=_cmd_unfold_bp)

    p = sub.add_parser("trellis", help="reference trellis prefix")
    p.add_argument("--net", required=True)
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=_cmd_trellis)

    p = sub.add_parser("compare", help="cross-check a spreading against an "
                                       "oracle construction")
    p.add_argument("--net", required=True)
    p.add_argument("--mode", help="mode file; defaults to the mode named by "
                                  "--against")
    p.add_argument("--against", choices=("bp", "trellis"), required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--require-saturation", action="store_true")
    p.set_defaults(fn=_cmd_compare)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SpreadNetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED


def run() -> None:
    raise SystemExit(main())
