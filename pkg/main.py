#!/usr/bin/env python3
"""
bgap - exact verification of Bernstein-operator convexity inequalities

Commands:
  identity  random exact checks of the midpoint identity
  coeffs    Taylor coefficients of the gap polynomial at z = -1
  scan      gap reports over an (x, y) grid, as text, JSON or CSV

Exit status: 0 verified, 1 invariant violated, 2 usage or input error,
3 I/O error.
"""

import argparse
import logging
import sys

from pydantic import ValidationError

from bernstein_gap.config import settings
from bernstein_gap.core.errors import BernsteinGapError, NegativeCoefficient
from bernstein_gap.models.scan_config import ScanConfig
from bernstein_gap.services.verifier import GapVerifier
from bernstein_gap.storage.report_storage import ReportStorage
from bernstein_gap.ui.dashboard import VerifierDashboard
from bernstein_gap.utils.helpers import format_fraction, fraction_arg, nonnegative_int, positive_int

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_IO = 3

logger = logging.getLogger("bgap")


def degree_arg(text: str) -> int:
    n = positive_int(text)
    if n > settings.MAX_CLI_N:
        raise argparse.ArgumentTypeError(f"n is capped at {settings.MAX_CLI_N} on the command line, got {n}")
    return n


parser = argparse.ArgumentParser(prog='bgap', description='Exact Bernstein gap verifier')
parser.add_argument('--verbose', '-v', action='store_true',
                    help='Enable debug logging')
subparsers = parser.add_subparsers(dest='command', required=True)

identity_parser = subparsers.add_parser('identity', help='Randomized exact checks of the midpoint identity')
identity_parser.add_argument('--n', type=degree_arg, required=True,
                             help='Operator degree n')
identity_parser.add_argument('--trials', type=positive_int, default=settings.DEFAULT_TRIALS,
                             help=f'Number of random cases (default: {settings.DEFAULT_TRIALS})')
identity_parser.add_argument('--seed', type=nonnegative_int, default=settings.DEFAULT_SEED,
                             help=f'Seed of the random generator (default: {settings.DEFAULT_SEED})')

coeffs_parser = subparsers.add_parser('coeffs', help='Print g^(k)(-1)/k! for k = 0..2n-2')
coeffs_parser.add_argument('--n', type=degree_arg, required=True,
                           help='Operator degree n')
coeffs_parser.add_argument('--x', type=fraction_arg, required=True,
                           help='Rational x in [0, 1], written p/q')
coeffs_parser.add_argument('--y', type=fraction_arg, required=True,
                           help='Rational y in [0, 1], written p/q')

scan_parser = subparsers.add_parser('scan', help='Evaluate all four gaps on an (x, y) grid')
scan_parser.add_argument('--n', type=degree_arg, required=True,
                         help='Operator degree n')
scan_parser.add_argument('--fn', type=str, required=True,
                         help='Function spec: e2, abs:1/2, hat:1/2, pwl:0,0;1/2,1;1,0, exp')
scan_parser.add_argument('--grid', type=positive_int, default=settings.DEFAULT_GRID,
                         help=f'Grid resolution G (default: {settings.DEFAULT_GRID})')
scan_parser.add_argument('--mode', choices=['exact', 'float'], default='exact',
                         help='Arithmetic mode (default: exact)')
scan_parser.add_argument('--format', dest='output_format', choices=['json', 'csv', 'text'], default='text',
                         help='Output format (default: text)')
scan_parser.add_argument('--out', type=str,
                         help='Write the report to this file instead of stdout')
scan_parser.add_argument('--seed', type=nonnegative_int, default=settings.DEFAULT_SEED,
                         help='Seed recorded in the report')
scan_parser.add_argument('--workers', type=positive_int, default=settings.SCAN_WORKERS,
                         help=f'Threads evaluating cells (default: {settings.SCAN_WORKERS})')
scan_parser.add_argument('--timing', action='store_true',
                         help='Record wall time in runtime_ms (output is then no longer byte-stable)')


def cmd_identity(args) -> int:
    result = GapVerifier().run_identity_trials(args.n, args.trials, args.seed)
    VerifierDashboard().display_identity(result)
    if result.ok:
        print(f"residual 0 in {result.passed}/{result.trials} cases")
        return EXIT_OK
    print(f"residual nonzero in {result.trials - result.passed}/{result.trials} cases (seed {result.seed})")
    return EXIT_VIOLATION


def cmd_coeffs(args) -> int:
    coeffs = GapVerifier().coefficients(args.n, args.x, args.y)
    print(" ".join(format_fraction(c) for c in coeffs.c))
    return EXIT_OK


def cmd_scan(args) -> int:
    try:
        config = ScanConfig(
            n=args.n,
            function=args.fn,
            grid=args.grid,
            mode=args.mode,
            seed=args.seed,
            output_format=args.output_format,
            out=args.out,
            workers=args.workers,
            record_timing=args.timing,
        )
    except ValidationError as e:
        print(f"Error: invalid scan configuration:\n{e}", file=sys.stderr)
        return EXIT_USAGE

    verifier = GapVerifier()
    result = verifier.run_scan(config)
    storage = ReportStorage()

    if config.out is not None:
        storage.save(result, config.out, config.output_format)
        print(f"💾 Report saved to {config.out}")
    elif config.output_format == "json":
        sys.stdout.write(storage.emit_json(result))
    elif config.output_format == "csv":
        sys.stdout.write(storage.emit_csv(result))
    else:
        VerifierDashboard().display_scan(result)

    if not result.convex_input:
        print(f"⚠️ '{config.function}' samples are not convex at n={config.n}; no verdict claimed", file=sys.stderr)
    for violation in result.violations:
        print(f"❌ {violation}", file=sys.stderr)
    return verifier.scan_exit_status(result)


COMMANDS = {
    'identity': cmd_identity,
    'coeffs': cmd_coeffs,
    'scan': cmd_scan,
}


def main(args=None):
    """Main entry point for the CLI"""
    if args is None:
        args = parser.parse_args()

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else settings.LOG_LEVEL,
        format='%(asctime)s %(levelname)s %(name)s: %(message)s',
    )

    try:
        status = COMMANDS[args.command](args)
    except NegativeCoefficient as e:
        print(f"Error: {e}", file=sys.stderr)
        status = EXIT_VIOLATION
    except BernsteinGapError as e:
        print(f"Error: {e}", file=sys.stderr)
        status = EXIT_USAGE
    except OSError as e:
        print(f"Error: could not write report: {e}", file=sys.stderr)
        status = EXIT_IO

    sys.exit(status)


if __name__ == "__main__":
    main()
