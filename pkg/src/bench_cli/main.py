#!/usr/bin/env python3
"""gqap-bench: GA, local search and exact tools for the GQAP."""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from src.bench_cli.actions import run_action
from src.logger import logger, set_level
from src.settings import settings


def _int_levels(text: str) -> tuple[int, ...]:
    try:
        levels = tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got '{text}'"
        ) from exc
    if not levels:
        raise argparse.ArgumentTypeError("at least one level is required")
    return levels


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gqap-bench",
        description=__doc__,
    )
    parser.add_argument(
        "-v", "--verbose", action="store_true", help="log at DEBUG level"
    )
    sub = parser.add_subparsers(dest="action", required=True, metavar="ACTION")

    solve = sub.add_parser("solve", help="GA followed by steepest descent")
    solve.add_argument("--instance", required=True)
    solve.add_argument("--n-pop", type=int, default=10)
    solve.add_argument("--max-k", type=int, default=100)
    solve.add_argument("--max-iter", type=int, default=settings.max_iter)
    solve.add_argument("--seed", type=_non_negative, default=0)
    solve.add_argument("--no-local-search", action="store_true")
    solve.add_argument("--z-ref", type=float, default=None)
    solve.add_argument("--output", default=None, help="CSV file for the run record")

    exact = sub.add_parser("exact", help="exhaustive optimum for small instances")
    exact.add_argument("--instance", required=True)
    exact.add_argument("--limit", type=int, default=settings.exact_limit)
    exact.add_argument("--workers", type=int, default=settings.workers)

    export = sub.add_parser("export-lp", help="write the linearized MILP")
    export.add_argument("--instance", required=True)
    export.add_argument("--output", required=True)
    export.add_argument(
        "--omit-zero-w",
        action="store_true",
        help="drop w columns (and their rows) with zero objective coefficient",
    )

    gen = sub.add_parser("gen", help="generate a random feasible instance")
    gen.add_argument("--machines", "-M", type=int, required=True)
    gen.add_argument("--locations", "-N", type=int, required=True)
    gen.add_argument("--seed", type=_non_negative, default=0)
    gen.add_argument("--output", required=True)

    doe = sub.add_parser("doe", help="two-factor parameter study")
    doe.add_argument("--instance", required=True)
    doe.add_argument("--n-pop-levels", type=_int_levels, default=(5, 10, 15))
    doe.add_argument("--max-k-levels", type=_int_levels, default=(10, 40, 70))
    doe.add_argument("--replicates", type=int, default=3)
    doe.add_argument("--seed", type=_non_negative, default=0, help="base seed")
    doe.add_argument("--z-ref", type=float, default=None)
    doe.add_argument("--max-iter", type=int, default=settings.max_iter)
    doe.add_argument("--workers", type=int, default=settings.workers)
    doe.add_argument("--output", required=True)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verbose:
        set_level("DEBUG")

    try:
        run_action(args.action, args)
    except (ValueError, OSError, RuntimeError) as exc:
        logger.error("%s failed: %s", args.action, exc)
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
