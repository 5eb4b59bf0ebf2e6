"""Consensus core command line module"""

import argparse
import json
import logging
import sys
import warnings
from dataclasses import dataclass
from itertools import product
from pathlib import Path
from typing import Any
from typing import Dict
from typing import List
from typing import NoReturn
from typing import Optional
from typing import Sequence

from consensus_core import __version__
from consensus_core.app import ProfileAnalyzer
from consensus_core.configurations import Config
from consensus_core.detection.datatypes import ConsensusKind
from consensus_core.detection.datatypes import ConsensusReport
from consensus_core.exceptions import ArgumentError
from consensus_core.exceptions import CapacityError
from consensus_core.exceptions import ConsensusCoreError
from consensus_core.exceptions import DimensionError
from consensus_core.exceptions import PreconditionError
from consensus_core.experiments.bounds import flexible_lower_bound
from consensus_core.experiments.bounds import level1_upper_bound
from consensus_core.experiments.datatypes import GeneratorSpec
from consensus_core.experiments.datatypes import LowerBound
from consensus_core.experiments.sweeps import ALL_CHECKS
from consensus_core.experiments.sweeps import Check
from consensus_core.experiments.sweeps import default_seed
from consensus_core.experiments.sweeps import run_grid
from consensus_core.preferences.mahonian import mahonian_table
from consensus_core.preflib.datatypes import PreflibDocument
from consensus_core.preflib.exceptions import PreflibError
from consensus_core.preflib.parsers import read_preflib
from consensus_core.reports import stats_to_json
from consensus_core.reports import write_stats_csv

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_ARGUMENT = 3
EXIT_CAPACITY = 4


@dataclass
class UsageError(ArgumentError):
    """Command line that does not match the grammar"""

    usage: str = ""


class ArgumentParser(argparse.ArgumentParser):
    """Raises usage errors so that main can format them."""

    def error(self, message: str) -> NoReturn:
        raise UsageError(message, self.format_usage())


def exit_code(error: Exception) -> int:
    if isinstance(error, PreflibError):
        return EXIT_PARSE
    if isinstance(error, CapacityError):
        return EXIT_CAPACITY
    return EXIT_ARGUMENT


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="consensus-core",
        description="Detect level-1 and flexible consensus in "
        "preference profiles.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="log to stderr; repeat for debug output",
    )
    parser.add_argument(
        "--json", action="store_true", help="machine-readable output"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    detect = commands.add_parser("detect", help="analyze one PrefLib file")
    detect.add_argument("--input", required=True, type=Path)
    detect.add_argument(
        "--oracle",
        action="store_true",
        help="also run the brute-force definitions (small K only)",
    )
    detect.set_defaults(handler=cmd_detect)

    simulate = commands.add_parser("simulate", help="run trial sweeps")
    simulate.add_argument(
        "--model", choices=["mallows", "impartial"], default="mallows"
    )
    simulate.add_argument("--k", type=int, nargs="+", required=True)
    simulate.add_argument("--n", type=int, nargs="+", default=[])
    simulate.add_argument("--phi", type=float, nargs="+", default=[])
    simulate.add_argument("--m", type=int, nargs="+", default=[])
    simulate.add_argument("--trials", type=int, default=1000)
    simulate.add_argument("--seed", type=int)
    simulate.add_argument("--workers", type=int, default=1)
    simulate.add_argument("--csv", type=Path, help="write the CSV here")
    simulate.add_argument(
        "--no-stability",
        action="store_true",
        help="skip stability verification of flexible pivots",
    )
    simulate.set_defaults(handler=cmd_simulate)

    bounds = commands.add_parser("bounds", help="print analytic bounds")
    bounds.add_argument("--k", type=int, nargs="+", required=True)
    bounds.add_argument("--m", type=int, nargs="+", required=True)
    bounds.set_defaults(handler=cmd_bounds)

    preflib = commands.add_parser("preflib", help="PrefLib utilities")
    preflib_commands = preflib.add_subparsers(
        dest="preflib_command", required=True
    )
    scan = preflib_commands.add_parser(
        "scan", help="classify every PrefLib file in a directory"
    )
    scan.add_argument("directory", type=Path)
    scan.add_argument("--pattern", default="*.soc")
    scan.set_defaults(handler=cmd_scan)
    return parser


def _pivot_text(report: ConsensusReport, document: PreflibDocument) -> str:
    return "; ".join(
        " > ".join(document.names(pivot)) for pivot in report.pivots
    )


def cmd_detect(args: argparse.Namespace, config: Config) -> int:
    document = read_preflib(args.input)
    analyzer = ProfileAnalyzer.from_document(document, config=config)
    reports = [analyzer.level1, analyzer.flexible]
    if args.oracle:
        reports.extend(analyzer.brute_force(kind) for kind in ConsensusKind)
    payload = analyzer.document(
        source=str(args.input), names=document.alternative_names
    )
    if args.oracle:
        payload["oracle"] = [report.to_dict() for report in reports[2:]]
    if args.json:
        print(json.dumps(payload, indent=2))
        return EXIT_OK

    print(f"{args.input}: K={analyzer.profile.K} n={analyzer.profile.n}")
    for report in reports[:2]:
        if report.found:
            print(
                f"found:{report.kind.value} pivot "
                f"{_pivot_text(report, document)} (d_hat={report.d_hat})"
            )
        else:
            print(
                f"not_found:{report.kind.value} "
                f"({report.failure_reason.value})"
            )
    single_peaked = analyzer.single_peaked
    if single_peaked.axis is not None:
        axis = " - ".join(document.name(a) for a in single_peaked.axis)
        print(f"single-peaked on axis {axis}")
    else:
        print("not single-peaked")
    stability = payload.get("stability")
    if stability is not None:
        state = "ok" if stability["ok"] else "VIOLATED"
        print(f"stability: {state} ({len(stability['checks'])} checks)")
    return EXIT_OK


def _grid(args: argparse.Namespace) -> List[GeneratorSpec]:
    if args.trials < 1:
        raise ArgumentError(f"--trials must be positive, got {args.trials}")
    if args.model == "impartial":
        if not args.m:
            raise ArgumentError("impartial sweeps need --m")
        return [
            GeneratorSpec.impartial(K, m) for K, m in product(args.k, args.m)
        ]
    if not args.n or not args.phi:
        raise ArgumentError("mallows sweeps need --n and --phi")
    return [
        GeneratorSpec.mallows(K, n, phi)
        for K, n, phi in product(args.k, args.n, args.phi)
    ]


def cmd_simulate(args: argparse.Namespace, config: Config) -> int:
    specs = _grid(args)
    checks = ALL_CHECKS
    if args.no_stability:
        checks = checks - {Check.STABILITY}
    seed = default_seed(args.seed, config)
    stats = run_grid(specs, args.trials, seed, checks, args.workers, config)
    if args.csv is not None:
        with args.csv.open("w", newline="", encoding="utf-8") as stream:
            write_stats_csv(stats, stream)
        log.info("wrote %d rows to %s", len(stats), args.csv)
    if args.json:
        print(stats_to_json(stats))
    elif args.csv is None:
        write_stats_csv(stats, sys.stdout)
    return EXIT_OK


def _flexible_lower(K: int, config: Config) -> Optional[LowerBound]:
    try:
        return flexible_lower_bound(K, config.bound_cap)
    except CapacityError as error:
        log.warning("flexible lower bound unavailable: %s", error)
        return None


def cmd_bounds(args: argparse.Namespace, config: Config) -> int:
    rows: List[Dict[str, Any]] = []
    for K in args.k:
        lower = _flexible_lower(K, config)
        mahonian = None
        if K <= config.mahonian_cap:
            mahonian = list(mahonian_table(K, config.mahonian_cap).counts)
        for m in args.m:
            upper = level1_upper_bound(m, K)
            row: Dict[str, Any] = {
                "K": K,
                "m": m,
                "level1_upper_exponent": upper.exponent,
                "level1_upper_raw": upper.raw,
                "level1_upper": upper.reported,
                "flexible_lower": None,
                "flexible_lower_exact": None,
                "flexible_lower_log10": None,
                "mahonian": mahonian,
            }
            if lower is not None:
                row["flexible_lower"] = lower.value
                row["flexible_lower_exact"] = str(lower.exact)
                row["flexible_lower_log10"] = lower.log10
            rows.append(row)
    if args.json:
        print(json.dumps(rows, indent=2))
        return EXIT_OK
    for row in rows:
        flexible = "unavailable"
        if row["flexible_lower_exact"] is not None:
            flexible = (
                f"{row['flexible_lower_exact']} "
                f"= {row['flexible_lower']:.6g}"
            )
        print(
            f"K={row['K']} m={row['m']}: "
            f"level-1 upper bound {row['level1_upper']:.6g} "
            f"(raw {row['level1_upper_raw']:.6g}, "
            f"exponent {row['level1_upper_exponent']}); "
            f"flexible lower bound {flexible}"
        )
    return EXIT_OK


@dataclass
class ScanRow:
    file: str
    K: Optional[int] = None
    n: Optional[int] = None
    n_distinct: Optional[int] = None
    level1: Optional[bool] = None
    flexible: Optional[bool] = None
    single_peaked: Optional[bool] = None
    error: Optional[str] = None


def scan_file(path: Path, config: Config) -> ScanRow:
    row = ScanRow(path.name)
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            document = read_preflib(path)
        for warning in caught:
            log.warning("%s: %s", path, warning.message)
        analyzer = ProfileAnalyzer.from_document(document, config=config)
        row.K = analyzer.profile.K
        row.n = analyzer.profile.n
        row.n_distinct = analyzer.profile.n_distinct
        row.level1 = analyzer.level1.found
        row.flexible = analyzer.flexible.found
        row.single_peaked = bool(analyzer.single_peaked)
    except (ConsensusCoreError, OSError, ValueError) as error:
        log.warning("skipping %s: %s", path, error)
        row.error = f"{type(error).__name__}: {error}"
    return row


def cmd_scan(args: argparse.Namespace, config: Config) -> int:
    if not args.directory.is_dir():
        raise ArgumentError(f"{args.directory} is not a directory")
    paths = sorted(
        path for path in args.directory.rglob(args.pattern) if path.is_file()
    )
    rows = [scan_file(path, config) for path in paths]
    parsed = [row for row in rows if row.error is None]
    summary = {
        "files": len(rows),
        "parsed": len(parsed),
        "errors": len(rows) - len(parsed),
        "level1": sum(bool(row.level1) for row in parsed),
        "flexible": sum(bool(row.flexible) for row in parsed),
        "single_peaked": sum(bool(row.single_peaked) for row in parsed),
    }
    log.info("scanned %d files, %d parsed", len(rows), len(parsed))
    if args.json:
        print(
            json.dumps(
                {"files": [vars(row) for row in rows], "summary": summary},
                indent=2,
            )
        )
        return EXIT_OK

    columns = list(vars(ScanRow("")).keys())
    print("\t".join(columns))
    for row in rows:
        cells = ("" if v is None else str(v) for v in vars(row).values())
        print("\t".join(cells))
    print(
        f"parsed {summary['parsed']}/{summary['files']} files: "
        f"level-1 {summary['level1']}, flexible {summary['flexible']}, "
        f"single-peaked {summary['single_peaked']}"
    )
    return EXIT_OK


def configure_logging(verbosity: int) -> None:
    if verbosity <= 0:
        return
    level = logging.DEBUG if verbosity > 1 else logging.INFO
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


def report_error(error: Exception, code: int, as_json: bool) -> None:
    if as_json:
        message = {
            "error": type(error).__name__,
            "message": str(error),
            "exit_code": code,
        }
        print(json.dumps(message), file=sys.stderr)
        return
    if isinstance(error, UsageError):
        sys.stderr.write(error.usage)
    print(f"consensus-core: error: {error}", file=sys.stderr)


def main(argv: Optional[Sequence[str]] = None) -> int:
    arguments = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(arguments)
    except UsageError as error:
        report_error(error, EXIT_ARGUMENT, "--json" in arguments)
        return EXIT_ARGUMENT
    configure_logging(args.verbose)
    try:
        config = Config.from_env()
        return int(args.handler(args, config))
    except (
        PreflibError,
        ArgumentError,
        CapacityError,
        DimensionError,
        PreconditionError,
        FileNotFoundError,
        ValueError,
    ) as error:
        code = exit_code(error)
        report_error(error, code, args.json)
        return code
