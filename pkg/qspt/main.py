import argparse
import configparser
import logging
import sys
from enum import IntEnum
from typing import BinaryIO

from qspt.auxiliary.errors import QsptError
from qspt.auxiliary.logs import VERBOSE, setup_logging
from qspt.config.config import cache_directory, config
from qspt.forms.named import SeriesSource, named_series
from qspt.ladder.ladder import Method, check_ladder
from qspt.sequences.brute import ENUMERATION_CAP, Oracle, oracle_check
from qspt.sequences.tables import SequenceName, sequence
from qspt.series.laurent import ArithmeticMode
from qspt.verify.cache import SeriesCache
from qspt.verify.report import Format, SequenceValue, VerificationReport, report_emit, sequence_emit
from qspt.verify.suites import Theorem, appendix_tasks, lemma_tasks, theorem_tasks
from qspt.verify.tasks import run_tasks


setup_logging()
logger = logging.getLogger(__name__)


class ExitCode(IntEnum):
    PASSED = 0
    FAILED = 1
    USAGE = 2


class UsageError(QsptError):
    def __init__(self, message: str):
        super().__init__(message)


COMPUTED_SEQUENCES = (
    SequenceName.P,
    SequenceName.C,
    SequenceName.SPT,
    SequenceName.SPT_OMEGA,
    SequenceName.SPT_C5,
    SequenceName.P_OMEGA,
)
STARTS_AT_ZERO = (SequenceName.P, SequenceName.C)
DEFAULT_K = {Theorem.GARVAN: 3}
MIN_K = {Theorem.GARVAN: 3}


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', help='extra .ini file read after configs/*.ini')
    common.add_argument('--workers', type=int, help='size of the worker pool, 1 runs tasks sequentially')
    common.add_argument('--no-cache', action='store_true', help='do not read or write the series cache')
    common.add_argument('--format', choices=[f.value for f in Format], default=Format.TEXT.value)
    common.add_argument('--verbose', action='store_true', help='log series sizes and timings')
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(prog='qspt', description='Finite verification of congruences for smallest parts functions modulo powers of 5')
    commands = parser.add_subparsers(dest='command', required=True)

    verify = commands.add_parser('verify', help='run a verification suite')
    suites = verify.add_subparsers(dest='suite', required=True)

    appendix = suites.add_parser('appendix', parents=[common], help='the twenty seeded U_5 identities')
    appendix.add_argument('--order', type=int)

    lemmas = suites.add_parser('lemmas', parents=[common], help='rho identity, Newton chain, recurrence cross-checks, valuation bounds')
    lemmas.add_argument('--order', type=int)

    theorem = suites.add_parser('theorem', parents=[common], help='congruence scans and sequence relations')
    theorem.add_argument('--which', choices=[t.value for t in Theorem], required=True)
    theorem.add_argument('--k', type=int)
    theorem.add_argument('--nmax', type=int)

    compute = commands.add_parser('compute', parents=[common], help='print a sequence')
    compute.add_argument('--seq', choices=[s.value for s in COMPUTED_SEQUENCES], required=True)
    compute.add_argument('--nmax', type=int, required=True)

    ladder = commands.add_parser('ladder', parents=[common], help='compute L_i directly and from the a/b tables')
    ladder.add_argument('--i', type=int, required=True)
    ladder.add_argument('--order', type=int, default=60)
    ladder.add_argument('--method', choices=[m.value for m in Method], default=Method.BOTH.value)
    ladder.add_argument('--mode', choices=[m.value for m in ArithmeticMode])

    oracle = commands.add_parser('oracle', parents=[common], help='brute force against generating functions')
    oracle.add_argument('--seq', choices=[o.value for o in Oracle], required=True)
    oracle.add_argument('--nmax', type=int, required=True)

    return parser


def _source(args: argparse.Namespace) -> SeriesSource:
    if args.no_cache or not config.getboolean('Cache', 'enabled', default=True):
        return named_series
    return SeriesCache(cache_directory()).named_series


def _workers(args: argparse.Namespace) -> int:
    workers = args.workers if args.workers is not None else config.getint('Run', 'workers', default=1)
    if workers < 1:
        raise UsageError(f'--workers must be positive, got {workers}')
    return workers


def _nonnegative(flag: str, value: int | None):
    if value is not None and value < 0:
        raise UsageError(f'{flag} must be nonnegative, got {value}')


def _order(args: argparse.Namespace, default: int) -> int:
    _nonnegative('--order', args.order)
    return args.order if args.order is not None else default


def _ladder_mode(args: argparse.Namespace) -> ArithmeticMode:
    if args.mode is not None:
        return ArithmeticMode(args.mode)
    if args.i >= config.getint('Arithmetic', 'deep_ladder_index', default=3):
        return ArithmeticMode.REDUCED
    return config.getenum('Arithmetic', 'mode', ArithmeticMode, default=ArithmeticMode.EXACT)


def _verify(args: argparse.Namespace, source: SeriesSource) -> list[VerificationReport]:
    match args.suite:
        case 'appendix':
            order = _order(args, config.getint('Series', 'appendix_order', default=200))
            tasks = appendix_tasks(order, source)
        case 'lemmas':
            order = _order(args, config.getint('Series', 'default_order', default=300))
            tasks = lemma_tasks(order, source)
        case 'theorem':
            which = Theorem(args.which)
            k = args.k if args.k is not None else DEFAULT_K.get(which, 1)
            if k < MIN_K.get(which, 1):
                raise UsageError(f'--k must be at least {MIN_K.get(which, 1)} for {which.value}, got {k}')
            _nonnegative('--nmax', args.nmax)
            tasks = theorem_tasks(which, k, args.nmax, source)
        case _:
            raise UsageError(f'Unknown suite: {args.suite}')
    return run_tasks(tasks, _workers(args))


def _compute(args: argparse.Namespace, source: SeriesSource) -> bytes:
    _nonnegative('--nmax', args.nmax)
    name = SequenceName(args.seq)
    table = sequence(name, args.nmax, source)
    start = 0 if name in STARTS_AT_ZERO else 1
    values = [SequenceValue(n=n, value=table[n]) for n in range(start, args.nmax + 1)]
    return sequence_emit(values, Format(args.format))


def _dispatch(args: argparse.Namespace) -> tuple[bytes, ExitCode]:
    source = _source(args)
    match args.command:
        case 'verify':
            reports = _verify(args, source)
        case 'ladder':
            if args.i < 1:
                raise UsageError(f'The ladder starts at L_1, got --i {args.i}')
            _nonnegative('--order', args.order)
            reports = [check_ladder(
                args.i,
                args.order,
                Method(args.method),
                _ladder_mode(args),
                spot_check=config.getint('Arithmetic', 'reduced_spot_check', default=10),
                source=source,
            )]
        case 'oracle':
            oracle = Oracle(args.seq)
            _nonnegative('--nmax', args.nmax)
            if args.nmax > ENUMERATION_CAP and oracle is not Oracle.SPT_C5_DIRECT:
                raise UsageError(f'Brute force is capped at --nmax {ENUMERATION_CAP}, got {args.nmax}')
            reports = [oracle_check(oracle, args.nmax, source)]
        case 'compute':
            return _compute(args, source), ExitCode.PASSED
        case _:
            raise UsageError(f'Unknown command: {args.command}')

    passed = all(report.passed for report in reports)
    logger.info(f'{sum(r.passed for r in reports)}/{len(reports)} reports passed')
    return report_emit(reports, Format(args.format)), ExitCode.PASSED if passed else ExitCode.FAILED


def run_command(argv: list[str] = None, stdout: BinaryIO = None) -> ExitCode:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return ExitCode.PASSED if e.code == 0 else ExitCode.USAGE

    if args.verbose:
        setup_logging(VERBOSE)

    try:
        if args.config:
            try:
                config.read_file_path(args.config)
            except (FileNotFoundError, configparser.Error) as e:
                raise UsageError(f'Cannot read config {args.config}: {e}') from e
        output, code = _dispatch(args)
    except UsageError as e:
        logger.error(str(e))
        parser.print_usage(sys.stderr)
        return ExitCode.USAGE
    except (QsptError, ValueError, OSError) as e:
        logger.error(f'{type(e).__name__}: {e}')
        return ExitCode.FAILED

    stdout = stdout or sys.stdout.buffer
    stdout.write(output)
    stdout.flush()
    return code


if __name__ == '__main__':
    sys.exit(run_command())
