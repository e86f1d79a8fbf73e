"""
Command-line surface: mine, worstcase, check, bench, info and gui.

Exit codes: 0 ok, 1 check mismatch, 2 usage or unreadable input,
3 malformed context file.
"""
import argparse
import csv
import json
import logging
import random
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from mining import (
    ContextParseError,
    DomainError,
    MiningConfig,
    MiningManager,
    MiningParams,
    MiningProgress,
    OracleRefusal,
    TransactionContext,
    describe,
    oracle_mine,
    parse_context,
    parse_minconf,
    parse_minsupp,
    random_context,
    worst_case_context,
    write_fimi,
)

from .document import build_document, build_oracle_document, diff_documents, rules_text, to_dot, to_json

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_MALFORMED = 3

DEFAULT_SEED = 20240501


class UsageError(Exception):
    """Bad arguments or unreadable input; maps to exit code 2."""


def _setup_logging(verbosity: int):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def _load_context(path: str, keep_empty: bool = False) -> TransactionContext:
    try:
        data = Path(path).read_bytes()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror or e}") from None
    return parse_context(data, name=Path(path).stem, keep_empty=keep_empty)


def _params(args, ctx: TransactionContext) -> MiningParams:
    return MiningParams(parse_minsupp(args.minsupp, ctx.n_objects), parse_minconf(args.minconf))


def _log_progress(progress: MiningProgress):
    logger.info("[%5.1f%%] %s: %s", progress.percent, progress.stage, progress.message)


def _write(path: Optional[str], text: str):
    if path is None:
        return
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def cmd_mine(args) -> int:
    ctx = _load_context(args.input, args.keep_empty)
    params = _params(args, ctx)
    config = MiningConfig(params, use_closed_level_shortcut=args.shortcut)

    started = time.perf_counter()
    run = MiningManager(progress_callback=_log_progress).mine(ctx, config)
    elapsed = (time.perf_counter() - started) * 1000

    doc = build_document(run) if (args.json or args.dot) else None
    if args.json:
        _write(args.json, to_json(doc))
    if args.dot:
        _write(args.dot, to_dot(doc))
    if args.rules:
        _write(args.rules, rules_text(ctx, run.rules.all_rules))

    counts = " ".join(f"{k}={v}" for k, v in run.summary().items())
    print(f"{counts} elapsed_ms={elapsed:.1f} minsupp_abs={params.minsupp_abs}")
    return EXIT_OK


def cmd_worstcase(args) -> int:
    sys.stdout.write(write_fimi(worst_case_context(args.n)))
    return EXIT_OK


def _check_one(ctx: TransactionContext, params: MiningParams, max_items: int) -> list[str]:
    config = MiningConfig(params, oracle_max_items=max_items)
    run = MiningManager().mine(ctx, config)
    result = oracle_mine(ctx, params, max_items=config.oracle_max_items)
    expected = build_oracle_document(ctx, params, result)
    return diff_documents(expected, build_document(run))


def _report_diff(label: str, diffs: list[str]):
    print(f"MISMATCH {label}")
    for line in diffs:
        print(f"  {line}")


def cmd_check(args) -> int:
    if args.random:
        return _check_random(args)
    if not args.input:
        raise UsageError("check needs an input file or --random N")

    ctx = _load_context(args.input, args.keep_empty)
    params = _params(args, ctx)
    if args.expected:
        try:
            expected = json.loads(Path(args.expected).read_text(encoding="utf-8"))
        except OSError as e:
            raise UsageError(f"cannot read {args.expected}: {e.strerror or e}") from None
        except json.JSONDecodeError as e:
            raise UsageError(f"{args.expected} is not a lattice document: {e}") from None
        run = MiningManager().mine(ctx, MiningConfig(params))
        diffs = diff_documents(expected, build_document(run))
    else:
        diffs = _check_one(ctx, params, args.max_items)

    if diffs:
        _report_diff(ctx.name, diffs)
        return EXIT_MISMATCH
    print(f"OK {ctx.name}")
    return EXIT_OK


def _check_random(args) -> int:
    rng = random.Random(args.seed)
    confidences = [Fraction(0), Fraction(1, 2), Fraction(1)]
    failures = 0
    for i in range(args.random):
        n_objects = rng.randint(4, 14)
        ctx = random_context(args.items, n_objects, rng.uniform(0.2, 0.8), rng)
        params = MiningParams(rng.randint(1, max(1, n_objects // 2)), rng.choice(confidences))
        diffs = _check_one(ctx, params, args.max_items)
        if diffs:
            failures += 1
            _report_diff(f"random #{i} (seed {args.seed}, minsupp {params.minsupp_abs}, "
                         f"minconf {params.minconf})", diffs)
            print(write_fimi(ctx), end="")

    print(f"{args.random - failures}/{args.random} random contexts agree")
    return EXIT_MISMATCH if failures else EXIT_OK


def cmd_bench(args) -> int:
    ctx = _load_context(args.input, args.keep_empty)
    minconf = parse_minconf(args.minconf)
    manager = MiningManager()

    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["minsupp", "stage1_ms", "stage2_ms", "stage3_ms", "generators", "classes"])
    for threshold in args.minsupp:
        params = MiningParams(parse_minsupp(threshold, ctx.n_objects), minconf)
        run = manager.mine(ctx, MiningConfig(params, use_closed_level_shortcut=args.shortcut))
        t = run.timings_ms
        summary = run.summary()
        writer.writerow([
            params.minsupp_abs,
            f"{t['generators']:.3f}", f"{t['order']:.3f}", f"{t['rules']:.3f}",
            summary["generators"], summary["classes"],
        ])
    return EXIT_OK


def cmd_info(args) -> int:
    stats = describe(_load_context(args.input, args.keep_empty))
    print(f"name={stats.name} objects={stats.objects} items={stats.items} "
          f"avg_size={stats.avg_object_size:.2f} density={stats.density:.4f}")
    return EXIT_OK


def cmd_gui(args) -> int:
    from ui import MainWindow

    app = MainWindow()
    app.mainloop()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lattice-miner",
        description="Frequent closed itemsets, minimal generators and generic association rules.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p, required=True):
        p.add_argument("input", nargs=None if required else "?", help="FIMI context file")
        p.add_argument("--keep-empty", action="store_true",
                       help="blank lines are objects without items")

    def add_thresholds(p):
        p.add_argument("--minsupp", required=True, help='absolute count or "P%%"')
        p.add_argument("--minconf", default="0", help='decimal or fraction in [0, 1]')

    p = sub.add_parser("mine", help="mine a context")
    add_input(p)
    add_thresholds(p)
    p.add_argument("--json", metavar="PATH", help="write the lattice document")
    p.add_argument("--rules", metavar="PATH", help="write the rule listing")
    p.add_argument("--dot", metavar="PATH", help="write the Hasse diagram")
    p.add_argument("--shortcut", action="store_true", help="insert closed levels without comparisons")
    p.set_defaults(handler=cmd_mine)

    p = sub.add_parser("worstcase", help="print the worst-case context of size n")
    p.add_argument("n", type=int)
    p.set_defaults(handler=cmd_worstcase)

    p = sub.add_parser("check", help="compare the pipeline with the brute-force miner")
    add_input(p, required=False)
    p.add_argument("--minsupp", default="1", help='absolute count or "P%%"')
    p.add_argument("--minconf", default="0", help='decimal or fraction in [0, 1]')
    p.add_argument("--expected", metavar="JSON", help="compare against a stored lattice document")
    p.add_argument("--random", type=int, metavar="N", help="check N random contexts instead")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--items", type=int, default=6)
    p.add_argument("--max-items", type=int, default=20, help="brute-force item limit")
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("bench", help="per-stage timings as CSV")
    add_input(p)
    p.add_argument("--minsupp", nargs="+", required=True, help='absolute counts or "P%%"')
    p.add_argument("--minconf", default="0")
    p.add_argument("--shortcut", action="store_true")
    p.set_defaults(handler=cmd_bench)

    p = sub.add_parser("info", help="context characteristics")
    add_input(p)
    p.set_defaults(handler=cmd_info)

    p = sub.add_parser("gui", help="open the desktop front-end")
    p.set_defaults(handler=cmd_gui)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _setup_logging(args.verbose)

    try:
        return args.handler(args)
    except ContextParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_MALFORMED
    except (UsageError, DomainError, OracleRefusal) as e:
        parser.print_usage(sys.stderr)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
