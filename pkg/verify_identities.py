#!/usr/bin/env python3
"""
Verify Schroeder-Tree Identities
================================

Runs the cross-formula verification suite, logs progress to a file and
prints the summary table.

Usage:
    python verify_identities.py
    python verify_identities.py --degree 5 --seed 7 --jobs 4
"""

import argparse
import json
import sys
from pathlib import Path

# Ensure we can import from the current directory
if __name__ == '__main__':
    sys.path.insert(0, str(Path(__file__).parent))

from schroeder.config import config
from schroeder.utils.logger import setup_logger
from schroeder.verification.suite import VerificationSuite


def parse_args(argv=None):
    """Parse command line arguments."""
    parser = argparse.ArgumentParser(
        description='Cross-check the Schroeder-tree formulas'
    )

    parser.add_argument(
        '--degree',
        type=int,
        default=None,
        help='Largest degree checked (default: from config)'
    )

    parser.add_argument(
        '--seed',
        type=int,
        default=None,
        help='Seed for the random tables (default: from config)'
    )

    parser.add_argument(
        '--jobs',
        type=int,
        default=None,
        help='Worker threads (default: from config)'
    )

    parser.add_argument(
        '--log-file',
        type=str,
        default='logs/verify.log',
        help='Log file path'
    )

    parser.add_argument(
        '--report',
        type=str,
        default=None,
        help='Also write the JSON report to this file'
    )

    return parser.parse_args(argv)


def main(argv=None) -> int:
    """Run the suite and print the summary table."""
    args = parse_args(argv)

    logger = setup_logger(log_file=args.log_file, level=config.log_level, stream=sys.stderr)
    logger.info("=" * 80)
    logger.info("Schroeder identity verification")
    logger.info("=" * 80)

    report = VerificationSuite(args.degree, args.seed, args.jobs, config).run()

    print(report.summary_table())
    if args.report:
        report_path = Path(args.report)
        report_path.parent.mkdir(parents=True, exist_ok=True)
        with open(report_path, 'w') as f:
            json.dump(report.to_json(), f, indent=2, sort_keys=True)
        logger.info(f"Report written to {report_path}")

    if report.passed:
        logger.info("All identities hold")
        return 0
    for failure in report.failures:
        logger.error(f"{failure.name}: {failure.counterexample}")
    return 1


if __name__ == '__main__':
    sys.exit(main())
