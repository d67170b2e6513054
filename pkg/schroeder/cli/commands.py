"""
Command Line Interface
======================

Usage:
    schroeder trees enum --n 3 --boolean
    schroeder trees count --n 5 --pretty
    schroeder hopf antipode --word "1 2" --method takeuchi
    schroeder hopf coproduct --word "1 2 3" --reduced --iterate 2
    schroeder prob cumulants --kind free --moments moments.json
    schroeder prob wick --word "1 2" --moments moments.json
    schroeder verify --degree 4 --jobs 4

Results go to stdout (or ``--out``), logs to stderr. Exit codes: 0 success,
1 verification failure, 2 usage or argument error, 3 input/output or data error.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, Optional, Sequence

import pandas as pd

from ..combinatorics.trees import enum_schroder, is_boolean, is_prime, murua_coefficient
from ..combinatorics.partitions import tree_to_ncp
from ..config import Config, config as default_config
from ..data.io import (
    cumulants_to_json,
    dumps,
    element_to_json,
    load_cumulants,
    load_moments,
    moments_to_json,
)
from ..errors import (
    DataFormatError,
    DegreeOverflowError,
    MissingMomentError,
    SchroederError,
)
from ..hopf.antipode import ANTIPODE_METHODS, antipode
from ..hopf.coproduct import (
    coproduct,
    half_coproduct_left,
    half_coproduct_right,
    iterated_coproduct,
    iterated_reduced_coproduct,
    reduced_coproduct,
)
from ..hopf.tensor import TensorElement, parse_word, pretty, word_text
from ..ncprob.cumulants import (
    DEFAULT_METHODS,
    INVERSE_METHODS,
    KINDS,
    conv_inverse,
    cumulants_from_moments,
    moments_from_cumulants,
)
from ..ncprob.wick import WICK_METHODS, wick
from ..utils.logger import setup_logger
from ..utils.rationals import format_fraction
from ..verification.suite import VerificationSuite

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_DATA = 3

logger = logging.getLogger(__name__)


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        '--pretty',
        action='store_true',
        help='Human-readable output instead of canonical JSON'
    )
    common.add_argument(
        '--out',
        type=str,
        default=None,
        help='Write the result to this file instead of stdout'
    )
    common.add_argument(
        '--config',
        type=str,
        default=None,
        help='Configuration file (default: $SCHROEDER_CONFIG or the bundled config.yaml)'
    )
    common.add_argument(
        '--log-level',
        type=str,
        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
        default=None,
        help='Logging level (default: from config)'
    )
    common.add_argument(
        '--log-file',
        type=str,
        default=None,
        help='Also log to this file'
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    """Parser for every subcommand."""
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog='schroeder',
        description='Schroeder trees, the double tensor Hopf algebra and non-commutative cumulants'
    )
    groups = parser.add_subparsers(dest='group', required=True)

    # trees
    trees = groups.add_parser('trees', help='Enumerate and count Schroeder trees')
    trees_cmds = trees.add_subparsers(dest='command', required=True)

    enum = trees_cmds.add_parser('enum', parents=[common], help='List trees of a degree')
    enum.add_argument('--n', type=int, required=True, help='Degree (leaves - 1)')
    enum.add_argument('--k', type=int, default=None, help='Only trees with k internal vertices')
    family = enum.add_mutually_exclusive_group()
    family.add_argument('--prime', action='store_true', help='Only prime trees')
    family.add_argument('--boolean', action='store_true', help='Only Boolean trees')
    enum.add_argument('--with-ncp', action='store_true', help='Add the partition pi(t)')
    enum.add_argument('--murua', action='store_true', help='Add the coefficient omega(sk(t))')

    count = trees_cmds.add_parser('count', parents=[common], help='Count trees by internal vertices')
    count.add_argument('--n', type=int, required=True, help='Degree (leaves - 1)')

    # hopf
    hopf = groups.add_parser('hopf', help='Coproducts and antipodes of words')
    hopf_cmds = hopf.add_subparsers(dest='command', required=True)

    anti = hopf_cmds.add_parser('antipode', parents=[common], help='Antipode of a word')
    anti.add_argument('--word', type=str, required=True, help='Space-separated letter ids, e.g. "1 2"')
    anti.add_argument('--method', type=str, default='schroder', help=f"One of {', '.join(ANTIPODE_METHODS)}")

    cop = hopf_cmds.add_parser('coproduct', parents=[common], help='Coproduct of a word')
    cop.add_argument('--word', type=str, required=True, help='Space-separated letter ids')
    cop.add_argument('--reduced', action='store_true', help='Reduced coproduct')
    cop.add_argument('--iterate', type=int, default=None, help='Iterate to k tensor factors')
    cop.add_argument('--half', type=str, choices=['left', 'right'], default=None, help='Half-coproduct')

    # prob
    prob = groups.add_parser('prob', help='Moments, cumulants and Wick polynomials')
    prob_cmds = prob.add_subparsers(dest='command', required=True)

    cum = prob_cmds.add_parser('cumulants', parents=[common], help='Cumulants from a moment file')
    cum.add_argument('--kind', type=str, choices=KINDS, required=True)
    cum.add_argument('--moments', type=str, required=True, help='Moment JSON file')
    cum.add_argument('--method', type=str, default=None, help='Formula (default depends on --kind)')

    mom = prob_cmds.add_parser('moments', parents=[common], help='Moments from a cumulant file')
    mom.add_argument('--kind', type=str, choices=KINDS, required=True)
    mom.add_argument('--cumulants', type=str, required=True, help='Cumulant JSON file')

    wk = prob_cmds.add_parser('wick', parents=[common], help='Free Wick polynomial of a word')
    wk.add_argument('--word', type=str, required=True, help='Space-separated letter ids')
    wk.add_argument('--moments', type=str, required=True, help='Moment JSON file')
    wk.add_argument('--method', type=str, default='schroder', help=f"One of {', '.join(WICK_METHODS)}")

    inv = prob_cmds.add_parser('inverse', parents=[common], help='Convolution inverse of the moment character')
    inv.add_argument('--moments', type=str, required=True, help='Moment JSON file')
    inv.add_argument('--method', type=str, default='antipode', help=f"One of {', '.join(INVERSE_METHODS)}")

    # verify
    verify = groups.add_parser('verify', parents=[common], help='Run the cross-formula verification suite')
    verify.add_argument('--degree', type=int, default=None, help='Largest degree checked (default: from config)')
    verify.add_argument('--seed', type=int, default=None, help='Seed for random tables (default: from config)')
    verify.add_argument('--jobs', type=int, default=None, help='Worker threads (default: from config)')

    return parser


# ---------------------------------------------------------------------------
# Commands; each returns (text, exit code)
# ---------------------------------------------------------------------------

def cmd_trees(args: argparse.Namespace, cfg: Config):
    if args.command == 'count':
        trees = enum_schroder(args.n)
        by_k: Dict[int, int] = {}
        for t in trees:
            by_k[t.internal_count] = by_k.get(t.internal_count, 0) + 1
        if args.pretty:
            frame = pd.DataFrame({'k': list(by_k), 'trees': list(by_k.values())}).sort_values('k')
            return frame.to_string(index=False) + f"\ntotal {len(trees)}", EXIT_OK
        table = {'n': args.n, 'by_k': {str(k): v for k, v in sorted(by_k.items())}, 'total': len(trees)}
        return dumps(table), EXIT_OK

    trees = enum_schroder(args.n)
    if args.k is not None:
        trees = [t for t in trees if t.internal_count == args.k]
    if args.prime:
        trees = [t for t in trees if is_prime(t)]
    if args.boolean:
        trees = [t for t in trees if is_boolean(t)]
    logger.info(f"Listing {len(trees)} trees of degree {args.n}")
    rows = []
    for t in trees:
        row = {'tree': t.serialized}
        if args.with_ncp:
            row['ncp'] = tree_to_ncp(t).serialize()
        if args.murua:
            row['murua'] = format_fraction(murua_coefficient(t))
        rows.append(row)
    if args.pretty and rows:
        return pd.DataFrame(rows).to_string(index=False), EXIT_OK
    return '\n'.join('\t'.join(row.values()) for row in rows), EXIT_OK


def _render_element(x: TensorElement, args: argparse.Namespace) -> str:
    return pretty(x) if args.pretty else dumps(element_to_json(x))


def cmd_hopf(args: argparse.Namespace, cfg: Config):
    w = parse_word(args.word)
    if args.command == 'antipode':
        return _render_element(antipode(w, args.method), args), EXIT_OK

    if args.half and (args.reduced or args.iterate):
        raise argparse.ArgumentTypeError("--half cannot be combined with --reduced or --iterate")
    if args.half == 'left':
        result = half_coproduct_left(w)
    elif args.half == 'right':
        result = half_coproduct_right(w)
    elif args.iterate is not None:
        result = iterated_reduced_coproduct(w, args.iterate) if args.reduced else iterated_coproduct(w, args.iterate)
    else:
        result = reduced_coproduct(w) if args.reduced else coproduct(w)
    return _render_element(result, args), EXIT_OK


def _table_text(table: Dict) -> str:
    frame = pd.DataFrame(
        [{'word': word_text(w), 'value': format_fraction(v)} for w, v in table.items()]
    )
    return frame.to_string(index=False)


def cmd_prob(args: argparse.Namespace, cfg: Config):
    if args.command == 'cumulants':
        phi = load_moments(args.moments)
        c = cumulants_from_moments(args.kind, phi, args.method or DEFAULT_METHODS[args.kind])
        return (_table_text(c.table) if args.pretty else dumps(cumulants_to_json(c))), EXIT_OK

    if args.command == 'moments':
        c = load_cumulants(args.cumulants)
        phi = moments_from_cumulants(args.kind, c)
        return (_table_text(phi.table) if args.pretty else dumps(moments_to_json(phi))), EXIT_OK

    phi = load_moments(args.moments)
    if args.command == 'wick':
        return _render_element(wick(parse_word(args.word), phi, args.method), args), EXIT_OK

    inverse = conv_inverse(phi, args.method)
    table = {w: inverse.on_word(w) for w in phi.words()}
    if args.pretty:
        return _table_text(table), EXIT_OK
    payload = {
        'alphabet': list(phi.alphabet),
        'inverse': {word_text(w): format_fraction(v) for w, v in table.items()},
        'max_degree': phi.max_degree,
        'method': args.method,
    }
    return dumps(payload), EXIT_OK


def cmd_verify(args: argparse.Namespace, cfg: Config):
    report = VerificationSuite(args.degree, args.seed, args.jobs, cfg).run()
    code = EXIT_OK if report.passed else EXIT_VERIFY_FAILED
    if args.pretty:
        verdict = 'all checks passed' if report.passed else f"{len(report.failures)} checks failed"
        return f"{report.summary_table()}\n{verdict}", code
    return dumps(report.to_json()), code


COMMANDS: Dict[str, Callable] = {
    'trees': cmd_trees,
    'hopf': cmd_hopf,
    'prob': cmd_prob,
    'verify': cmd_verify,
}


def _emit(text: str, out: Optional[str]):
    if out:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text + '\n', encoding='utf-8')
        logger.info(f"Wrote {path}")
    else:
        sys.stdout.write(text + '\n')


def exit_code_for(error: BaseException) -> int:
    """Map an exception raised by a command onto an exit code."""
    if isinstance(error, (OSError, DataFormatError, MissingMomentError, DegreeOverflowError)):
        return EXIT_DATA
    if isinstance(error, (SchroederError, argparse.ArgumentTypeError)):
        return EXIT_USAGE
    raise error


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    cfg = Config(args.config) if args.config else default_config
    level = getattr(logging, args.log_level) if args.log_level else cfg.log_level
    setup_logger(
        'schroeder',
        log_file=args.log_file or cfg.get('logging.log_file'),
        level=level,
        stream=sys.stderr
    )

    try:
        text, code = COMMANDS[args.group](args, cfg)
        _emit(text, args.out)
    except (OSError, SchroederError, argparse.ArgumentTypeError) as e:
        code = exit_code_for(e)
        logger.debug(f"{type(e).__name__}: {e}")
        sys.stderr.write(f"error: {e}\n")
        return code
    return code


if __name__ == '__main__':
    sys.exit(main())
