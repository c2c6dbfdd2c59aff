"""
adtcomp command line

    adtcomp capacity  --m 3 --n 4 --L 2
    adtcomp classify  --n11 2 --n12 1 --n21 1 --n22 2
    adtcomp decompose --m 2 --n 7 [--rule full|odd|scale --k K] [--coloring]
    adtcomp construct --m 3 --n 4 [--scheme auto] [--out code.json]
    adtcomp verify    --code code.json [--dims] [--simulate TRIALS]
    adtcomp search    --m 1 --n 2 --K 2 [--N 1] [--random TRIALS] [--seed S] [--jobs J]
    adtcomp sweep     --n 12 --L 2 --m 1..12 [--formulas-only] [--jobs J] [--out rows.csv]
    adtcomp sweep     --curve --q 12

Results go to stdout, logs to stderr. Exit status: 0 success, 1 verification
failure, 2 usage error.
"""

import argparse
import asyncio
import csv
import io
import json
import logging
import sys
from typing import Optional, Sequence

import aiofiles
from pydantic import BaseModel, ValidationError

from .adtcomp_engine import AdtEngine
from .codes.linear_code import LinearCode
from .config import AdtConfig
from .errors import AdtError
from .schemas import CurveSample, NetworkParams2x2, NetworkParamsSym, OracleMode, Scheme, SweepRow

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

LOG_FORMAT = '[%(asctime)s] [%(name)s] %(levelname)s: %(message)s'

logger = logging.getLogger("adtcomp.cli")


class UsageError(AdtError):
    """Bad flag combination detected after argparse accepted the line"""


# ===== Parser =====

def _network_flags() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    group = parent.add_argument_group("network")
    group.add_argument("--m", type=int, help="cross-link levels of a symmetric network")
    group.add_argument("--n", type=int, help="direct-link levels of a symmetric network")
    group.add_argument("--L", type=int, default=2, help="number of users (default: 2)")
    for name in ("n11", "n12", "n21", "n22"):
        group.add_argument(f"--{name}", type=int, help=f"levels on link {name[1]}->{name[2]} of a 2x2 network")
    return parent


def _output_flags() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--json", action="store_true", help="print JSON instead of a table")
    parent.add_argument("--verbose", "-v", action="store_true", help="debug logging on stderr")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="adtcomp", description="Sum computation over linear deterministic networks.")
    sub = parser.add_subparsers(dest="command", required=True)
    net, out = _network_flags(), _output_flags()

    sub.add_parser("capacity", parents=[net, out], help="capacity and bounds")
    sub.add_parser("classify", parents=[net, out], help="degeneracy of a 2x2 network")

    p = sub.add_parser("decompose", parents=[net, out], help="split a symmetric network into sub-models")
    p.add_argument("--rule", choices=["full", "odd", "scale"], default="full")
    p.add_argument("--k", type=int, help="colors for the scale rule")
    p.add_argument("--coloring", action="store_true", help="also print the level coloring as CSV")

    p = sub.add_parser("construct", parents=[net, out], help="build a code")
    p.add_argument("--scheme", choices=[s.value for s in Scheme if s is not Scheme.CUSTOM], default=Scheme.AUTO.value)
    p.add_argument("--out", help="write the code as JSON to this file")

    p = sub.add_parser("verify", parents=[net, out], help="check a code for zero-error decodability")
    p.add_argument("--code", help="code JSON file (default: construct the auto scheme for the network flags)")
    p.add_argument("--dims", action="store_true", help="report the per-bit subspace dimensions")
    p.add_argument("--simulate", type=int, metavar="TRIALS", help="random end-to-end trials")
    p.add_argument("--exhaustive-sim", action="store_true", help="simulate every source tuple")

    p = sub.add_parser("search", parents=[net, out], help="brute-force search for a code")
    p.add_argument("--K", type=int, required=True, help="source bits per transmitter")
    p.add_argument("--N", type=int, default=1, help="channel uses (default: 1)")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true", help="enumerate every candidate (default)")
    mode.add_argument("--random", type=int, metavar="TRIALS", help="randomized search with this many draws")
    p.add_argument("--budget", type=int, help="max candidates for exhaustive mode")
    p.add_argument("--seed", type=int)
    p.add_argument("--jobs", type=int)

    p = sub.add_parser("sweep", parents=[out], help="CSV rows over m for fixed n and L")
    p.add_argument("--n", type=int)
    p.add_argument("--L", type=int, default=2)
    p.add_argument("--m", dest="m_values", help="range a..b or comma list")
    p.add_argument("--formulas-only", action="store_true", help="skip code construction and verification")
    p.add_argument("--jobs", type=int)
    p.add_argument("--out", help="write the CSV to this file")
    p.add_argument("--curve", action="store_true", help="emit normalized-capacity samples instead")
    p.add_argument("--q", type=int, help="levels for --curve")
    return parser


# ===== Flag helpers =====

def _params(args: argparse.Namespace) -> NetworkParams2x2 | NetworkParamsSym:
    links = [getattr(args, name) for name in ("n11", "n12", "n21", "n22")]
    if any(v is not None for v in links):
        if any(v is None for v in links):
            raise UsageError("a 2x2 network needs all of --n11 --n12 --n21 --n22")
        if args.m is not None or args.n is not None:
            raise UsageError("give either --m/--n or --n11..--n22, not both")
        return NetworkParams2x2(n11=links[0], n12=links[1], n21=links[2], n22=links[3])
    if args.m is None or args.n is None:
        raise UsageError("a symmetric network needs --m and --n")
    return NetworkParamsSym(m=args.m, n=args.n, L=args.L)


def _symmetric(args: argparse.Namespace) -> NetworkParamsSym:
    params = _params(args)
    if not isinstance(params, NetworkParamsSym):
        raise UsageError(f"{args.command} needs a symmetric network (--m --n)")
    return params


def parse_m_values(text: str) -> list[int]:
    """'1..12' (inclusive) or '1,3,5'."""
    try:
        if ".." in text:
            low, high = (int(part) for part in text.split("..", 1))
            values = list(range(low, high + 1))
        else:
            values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise UsageError(f"--m expects a..b or a comma list, got {text!r}") from e
    if not values or min(values) < 0:
        raise UsageError(f"--m expects non-negative values, got {text!r}")
    return values


def _csv_text(rows: Sequence[BaseModel], columns: list[str]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: ("" if v is None else v) for k, v in row.model_dump().items()})
    return buffer.getvalue()


def _print_matrices(code: LinearCode) -> None:
    for tx, v in enumerate(code.V, start=1):
        print(f"V{tx} ({v.rows}x{v.cols}):")
        print(str(v) if v.rows and v.cols else "  (empty)")


async def _read_text(path: str) -> str:
    try:
        async with aiofiles.open(path, "r", encoding="utf-8") as f:
            return await f.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from e


async def _write_text(path: str, text: str) -> None:
    async with aiofiles.open(path, "w", encoding="utf-8") as f:
        await f.write(text)


# ===== Subcommands =====

async def cmd_capacity(engine: AdtEngine, args: argparse.Namespace) -> int:
    report = engine.capacity(_params(args)).as_dict()
    if args.json:
        print(json.dumps(report, indent=2))
        return EXIT_OK
    for key, value in report.items():
        print(f"{key:20} {'-' if value is None else value}")
    return EXIT_OK


async def cmd_classify(engine: AdtEngine, args: argparse.Namespace) -> int:
    outcome = engine.classify(_params(args))
    data = {
        "params": outcome.params.describe(),
        "closed_form": outcome.closed_form.value,
        "constructive": outcome.constructive.network_class.value,
        "witness": None if outcome.constructive.witness is None else list(outcome.constructive.witness),
        "agree": outcome.agree,
        "claim1": outcome.claim1,
    }
    if args.json:
        print(json.dumps(data, indent=2))
        return EXIT_OK
    for key, value in data.items():
        print(f"{key:14} {'-' if value is None else value}")
    return EXIT_OK


async def cmd_decompose(engine: AdtEngine, args: argparse.Namespace) -> int:
    dec = engine.decompose(_symmetric(args), rule=args.rule, k=args.k)
    if args.json:
        print(json.dumps({
            "params": dec.params.describe(),
            "factorization": dec.factorization(),
            "color_models": [list(model) for model in dec.color_models],
            "coloring": [list(row) for row in dec.coloring.table()] if args.coloring else None,
        }, indent=2))
        return EXIT_OK
    print(dec.factorization())
    if args.coloring:
        print("node,level,color,sublevel")
        for node, level, color, sub in dec.coloring.table():
            print(f"{node},{level},{color},{sub}")
    return EXIT_OK


async def cmd_construct(engine: AdtEngine, args: argparse.Namespace) -> int:
    code = engine.construct(_params(args), Scheme(args.scheme))
    if args.out:
        await _write_text(args.out, code.to_json() + "\n")
        logger.info(f"[cli.cmd_construct] wrote {args.out}")
    if args.json:
        print(code.to_json())
        return EXIT_OK
    print(f"scheme {code.label}  {code.params.describe()}  K={code.K} N={code.N} rate={code.rate}")
    _print_matrices(code)
    return EXIT_OK


async def cmd_verify(engine: AdtEngine, args: argparse.Namespace) -> int:
    if args.code:
        code = LinearCode.from_json(await _read_text(args.code))
    else:
        code = engine.construct(_params(args))
    report = engine.verify(code, dims=args.dims, simulate_trials=args.simulate, exhaustive=args.exhaustive_sim)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(f"{'PASS' if report.passed else 'FAIL'}  {report.label}  {report.params}  K={report.K} N={report.N}")
        for r in report.receivers:
            print(f"  receiver {r.index}: rank {r.rank}, decoder {'found' if r.passed else 'missing'}")
        if report.simulated is not None:
            print(f"  simulation: {'ok' if report.simulated else 'mismatch'}")
        if report.subspace is not None:
            sub = report.subspace
            print("  bit  " + " ".join(f"rx{rx + 1}" for rx in range(len(sub.independent))))
            for i, row in enumerate(sub.dims, start=1):
                print(f"  {i:<4} " + " ".join(f"{d:>3}" for d in row))
            print(f"  independent per receiver: {sub.independent}")
            if sub.pattern_check_applicable:
                print(f"  forbidden patterns: {sub.forbidden_patterns or 'none'}")
    return EXIT_OK if report.passed else EXIT_FAILED


async def cmd_search(engine: AdtEngine, args: argparse.Namespace) -> int:
    mode = OracleMode.RANDOM if args.random is not None else OracleMode.EXHAUSTIVE
    params = _params(args)
    result = await asyncio.to_thread(
        engine.search, params, args.K, args.N, mode, args.random, args.seed, args.jobs
    )
    if args.json:
        print(json.dumps(result.to_dict(), indent=2))
        return EXIT_OK
    print(f"{result.status.value}  {params.describe()}  K={result.K} N={result.N}  mode={result.mode.value}")
    print(f"space {result.space}")
    if result.seed is not None:
        print(f"seed {result.seed}")
    if result.diagnostic:
        print(result.diagnostic)
    if result.witness is not None:
        _print_matrices(result.witness)
    return EXIT_OK


async def cmd_sweep(engine: AdtEngine, args: argparse.Namespace) -> int:
    if args.curve:
        if args.q is None:
            raise UsageError("--curve needs --q")
        samples = engine.curve(args.q)
        text = _csv_text(samples, list(CurveSample.model_fields))
        failed = False
    else:
        if args.n is None or args.m_values is None:
            raise UsageError("sweep needs --n and --m (or --curve --q)")
        rows = await engine.sweep(args.n, args.L, parse_m_values(args.m_values),
                                  formulas_only=args.formulas_only, jobs=args.jobs)
        text = _csv_text(rows, SweepRow.columns())
        failed = not args.formulas_only and any(row.achieved_num is None for row in rows)
    if args.out:
        await _write_text(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_FAILED if failed else EXIT_OK


COMMANDS = {
    "capacity": cmd_capacity,
    "classify": cmd_classify,
    "decompose": cmd_decompose,
    "construct": cmd_construct,
    "verify": cmd_verify,
    "search": cmd_search,
    "sweep": cmd_sweep,
}


# ===== Entry point =====

def setup_logging(level: str) -> None:
    handler = logging.StreamHandler(sys.stderr)
    handler.set_name("adtcomp")
    handler.setFormatter(logging.Formatter(LOG_FORMAT, datefmt='%H:%M:%S'))
    root = logging.getLogger()
    root.handlers[:] = [h for h in root.handlers if h.get_name() != "adtcomp"] + [handler]
    root.setLevel(level.upper())


def _subparser_usage(parser: argparse.ArgumentParser, command: str) -> str:
    for action in parser._subparsers._group_actions:
        if command in action.choices:
            return action.choices[command].format_usage()
    return parser.format_usage()


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    config = AdtConfig.from_env()
    setup_logging("DEBUG" if args.verbose else config.log_level)
    if getattr(args, "jobs", None) is not None:
        config.jobs = args.jobs
    if getattr(args, "seed", None) is not None:
        config.seed = args.seed
    if getattr(args, "budget", None) is not None:
        config.oracle_budget = args.budget
    engine = AdtEngine(config)

    try:
        return asyncio.run(COMMANDS[args.command](engine, args))
    except ValidationError as e:
        first = e.errors()[0]
        message = f"{'.'.join(str(part) for part in first['loc'])}: {first['msg']}"
    except AdtError as e:
        message = str(e) or type(e).__name__
    print(f"adtcomp {args.command}: error: {message}", file=sys.stderr)
    print(_subparser_usage(parser, args.command), end="", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
