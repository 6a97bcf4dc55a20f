"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import ENGINE_VERSION, SCHEMA_VERSION
from .acceptance import SCOPES, run_all
from .cache import Cache, cached, resolve_cache
from .errors import InconsistencyError, VerificationFailure
from .lr import SquareSplit, square_split
from .moduli import (
    PairConfig,
    _fmt,
    _label,
    _rat,
    component_records,
    format_component_table,
    full_report,
    gs_module,
    gs_threshold,
)

EXIT_USAGE = 1
EXIT_VERIFY = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_at_least(lo: int, name: str):
    def conv(text):
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer, got {text!r}")
        if v < lo:
            raise argparse.ArgumentTypeError(f"{name} must be >= {lo}, got {v}")
        return v

    return conv


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="grassembed", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"grassembed {ENGINE_VERSION}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def pair(p):
        p.add_argument("--m", type=_int_at_least(2, "m"), required=True, help="Gr_m(C^{m+2}), m >= 2")
        p.add_argument("--k", type=_int_at_least(1, "k"), required=True, help="degree k >= 1")
        p.add_argument("--format", choices=("json", "text"), default="text")
        p.add_argument("--cache", metavar="PATH", help="cache file (overrides $GRASSEMBED_CACHE)")
        p.add_argument("--no-cache", action="store_true")

    pair(sub.add_parser("decompose", help="component table of F(k pi_2) (x) F(k pi_2)"))
    pair(sub.add_parser("square-split", help="symmetric / exterior square split"))
    pair(sub.add_parser("center-weights", help="center weights of lowest weight vectors"))
    pair(sub.add_parser("gs", help="the GS module and its two-stage filter"))
    pair(sub.add_parser("report", help="full moduli report"))
    v = sub.add_parser("verify", help="run the self-verification suite")
    v.add_argument("--scope", choices=tuple(SCOPES), default="quick")
    return parser


def _split(cfg: PairConfig, cache: Cache | None) -> SquareSplit:
    return cached(
        cache,
        "square_split",
        {"lambda": cfg.base.to_json(), "n": cfg.n},
        lambda: square_split(cfg.base, cfg.n),
        SquareSplit.to_json,
        SquareSplit.from_json,
    )


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def cmd_decompose(cfg, fmt, cache) -> str:
    comps = component_records(cfg, _split(cfg, cache))
    if fmt == "text":
        return format_component_table(comps, cfg.n) + "\n"
    return _dump(
        {
            "schema_version": SCHEMA_VERSION,
            "config": {"m": cfg.m, "k": cfg.k, "n": cfg.n},
            "components": [
                {
                    "i": c.i,
                    "j": c.j,
                    "lambda": list(c.lam.padded(cfg.n)),
                    "parity": c.parity,
                    "center_weight": _rat(c.center_weight),
                    "dim": str(c.dim),
                }
                for c in comps
            ],
        }
    )


def cmd_square_split(cfg, fmt, cache) -> str:
    split = _split(cfg, cache)
    if fmt == "json":
        return _dump({"schema_version": SCHEMA_VERSION, **split.to_json()})
    lines = []
    for name, part in (("sym", split.sym), ("alt", split.alt)):
        for p, c in part.items():
            lines.append(f"{name}  {_label(p, cfg.n)}  mult={c}")
    return "\n".join(lines) + "\n"


def cmd_center_weights(cfg, fmt, cache) -> str:
    comps = component_records(cfg, _split(cfg, cache))
    thr = gs_threshold(cfg)
    if fmt == "json":
        return _dump(
            {
                "schema_version": SCHEMA_VERSION,
                "threshold": _rat(thr),
                "weights": [
                    {"i": c.i, "j": c.j, "center_weight": _rat(c.center_weight), "at_or_below": c.center_weight <= thr}
                    for c in comps
                ],
            }
        )
    lines = [f"threshold {_fmt(thr)}"]
    for c in comps:
        mark = "<=" if c.center_weight <= thr else ">"
        lines.append(f"({c.i},{c.j})  {_label(c.lam, cfg.n)}  {_fmt(c.center_weight)}  {mark} threshold")
    return "\n".join(lines) + "\n"


def cmd_gs(cfg, fmt, cache) -> str:
    gs = gs_module(cfg, _split(cfg, cache))
    if fmt == "json":
        return _dump(
            {
                "schema_version": SCHEMA_VERSION,
                "module": list(gs.partition.padded(cfg.n)),
                "threshold": _rat(gs.threshold),
                "below_threshold": [list(ij) for ij in gs.below_threshold],
                "in_sym": [list(ij) for ij in gs.in_sym],
            }
        )
    return (
        f"threshold        {_fmt(gs.threshold)}\n"
        f"below threshold  {gs.below_threshold}\n"
        f"in S^2           {gs.in_sym}\n"
        f"GS module        V{_label(gs.partition, cfg.n)}\n"
    )


def cmd_report(cfg, fmt, cache) -> str:
    report = full_report(cfg, _split(cfg, cache))
    return _dump(report.to_json()) if fmt == "json" else report.to_text()


COMMANDS = {
    "decompose": cmd_decompose,
    "square-split": cmd_square_split,
    "center-weights": cmd_center_weights,
    "gs": cmd_gs,
    "report": cmd_report,
}


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    if args.command == "verify":
        results = run_all(args.scope)
        for r in results:
            print(r.line())
            for msg in r.failures[:5]:
                print(f"    {msg}")
        return 0 if all(r.passed for r in results) else EXIT_VERIFY
    cfg = PairConfig(args.m, args.k)
    cache = resolve_cache(args.cache, args.no_cache)
    try:
        out = COMMANDS[args.command](cfg, args.format, cache)
    except (VerificationFailure, InconsistencyError) as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
