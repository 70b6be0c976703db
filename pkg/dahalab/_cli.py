from typing import TYPE_CHECKING, Any, Optional, Sequence

if TYPE_CHECKING:
    print: Any  # MyPy complains that print is not defined without this

import argparse
import inspect
import logging
import os
import sys
from pathlib import Path

from ._engine import Engine
from ._parameter import Parameters, load_external
from ._suites import SUITES, build_checks
from .algebra import ConfigError
from .plugins import BudgetPlugin, LogPlugin, ProgressPlugin, ReportPlugin

try:
    from rich import print as rprint
    from rich.markup import escape

    def print(*args: Any, **kwargs: Any) -> None:
        args = tuple(escape(a) if isinstance(a, str) else a for a in args)
        rprint(*args, **kwargs)
except ImportError:
    from builtins import print

try:
    from rich_argparse import RichHelpFormatter as HelpFormatter

    HelpFormatter.styles['argparse.groups'] = 'bold italic yellow'
except ImportError:
    from argparse import HelpFormatter

__all__ = ['CLI', 'CLIEngine', 'main']
log = logging.getLogger(__name__)

GRAMMAR = """\
weights:  comma separated entries c*t^k (SL: t^(k/N) allowed), e.g. "t^0,t^0,t^-2",
          or one of qrho, trivial, unit
words:    space separated generators T0..T(n-1), Ti^-1, Y1..Yn (SL: Z1..Zn), X1..Xn (with ^k), pi, pi^-1, e.g. "T1 Y1 T1"
config:   python file defining `params`, a Parameters object or a function returning one;
          -p KEY=VALUE arguments are cast according to the type hints of that function
"""

# Keys set from command line flags; run plumbing is volatile and not echoed in reports
FLAG_KEYS = (
    'n', 'N', 'regime', 'weight', 'target', 'character', 'ordinary', 'generalized', 'word', 'expect', 'length_bound', 'beta_bound',
    'phi_word', 'alpha', 'samples', 'seed', 'gamma', 'dimension', 'multipartitions', 'full', 'degree_bound',
)
VOLATILE_KEYS = ('json_path', 'jobs', 'log_file', 'quiet', 'budget_scale')


class CLIEngine(Engine):
    """Engine with the logging, progress, report and budget plugins used by the command line."""

    plugins = [LogPlugin(), ProgressPlugin(), ReportPlugin(), BudgetPlugin()]


class CustomFormatter(HelpFormatter):
    def __init__(self, prog: str, indent_increment: int = 2, max_help_position: int = 60, width: Optional[int] = None):
        super().__init__(prog, indent_increment, max_help_position, width)


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.replace(' ', '').split(',') if v]
    except ValueError as err:
        raise argparse.ArgumentTypeError(f'"{text}" is not a comma separated list of integers') from err


class CLI(argparse.ArgumentParser):
    """
    Command line front end, with one subcommand per verification suite and a ``parameters`` subcommand.

    Every suite subcommand takes its configuration from a python config file (``-c``), from flags, or both;
    flags take precedence over the config file.
    """

    def __init__(self, *args: Any, **kwargs: Any):
        kwargs.setdefault('epilog', GRAMMAR)
        super().__init__(*args, **kwargs)
        if self.formatter_class is argparse.HelpFormatter:
            self.formatter_class = CustomFormatter

        self.__parsers: dict[str, argparse.ArgumentParser] = {}
        subparsers = self.add_subparsers(parser_class=argparse.ArgumentParser, required=True, metavar='subcommand', title='subcommands')

        config = argparse.ArgumentParser(add_help=False)
        config.add_argument('-c', '--config', type=Path, default=None, help='python parameter file')
        config.add_argument('-p', '--param', action='append', metavar='KEY=VALUE', help='keyword arguments for parameter file (multiple are allowed)')

        parent = argparse.ArgumentParser(add_help=False, parents=[config])
        group = parent.add_argument_group('algebra')
        group.add_argument('--n', type=int, default=None, help='rank of the algebra')
        group.add_argument('--N', dest='N', type=int, default=None, help='rank of the specialization (defaults to n)')
        group.add_argument('--regime', choices=('GENERIC', 'GL', 'SL'), type=str.upper, default=None, help='parameter specialization')
        group.add_argument('--weight', default=None, help='weight of the induced module')
        group = parent.add_argument_group('run')
        group.add_argument('--json', dest='json_path', type=Path, default=None, help='write the report as JSON to this path')
        group.add_argument('--jobs', type=int, default=None, help='worker threads (default: $DAHALAB_JOBS or 1)')
        group.add_argument('--log-file', type=Path, default=None, help='store a debug log')
        group.add_argument('--budget-scale', type=float, default=None, help='skip checks running longer than this many times their budget')
        group.add_argument('--quiet', action='store_const', const=True, default=None, help='hide the text report and all log messages below WARNING')

        for name, suite in SUITES.items():
            self.__parsers[name] = subparsers.add_parser(
                name,
                parents=[parent],
                formatter_class=self.formatter_class,
                description=suite.help[0].upper() + suite.help[1:],
                help=suite.help,
                epilog=GRAMMAR,
            )
            self.__parsers[name].set_defaults(subcommand=name)

        self['nf'].add_argument('word', nargs='?', default=None, help='generator word')
        self['nf'].add_argument('--expect', default=None, help='expected normal form')
        self['weightspace'].add_argument('--target', default=None, help='target weight, or "self" (default)')
        self['weightspace'].add_argument('--character', type=str.upper, choices=('SIGN', 'TRIV'), default=None, help='induce from an affine Hecke character')
        self['weightspace'].add_argument('--ordinary', type=int, default=None, help='expected ordinary dimension')
        self['weightspace'].add_argument('--generalized', type=int, default=None, help='expected generalized dimension')
        self['relcheck'].add_argument('--length-bound', type=int, default=None, help='maximal length of x in the triangularity check')
        self['relcheck'].add_argument('--beta-bound', type=int, default=None, help='maximal |beta| in the triangularity check')
        self['intertwiner'].add_argument('--phi-word', type=_int_list, default=None, help='word of simple reflections, e.g. 1,2,0,1,2,0,1,2')
        self['intertwiner'].add_argument('--alpha', type=int, default=None, help='expected phi/nu exponent')
        self['aha-iso'].add_argument('--samples', type=int, default=None, help='number of random descending weights')
        self['aha-iso'].add_argument('--seed', type=int, default=None, help='seed of the random weights')
        self['endring'].add_argument('--gamma', type=_int_list, default=None, help='window of gamma, found automatically by default')
        self['endring'].add_argument('--expect', choices=('group', 'nilpotent', 'unknown'), default=None, help='expected identification')
        for name in ('endring', 'chisuite'):
            self[name].add_argument('--dimension', type=int, default=None, help='expected dimension')
        self['chisuite'].add_argument('--multipartitions', type=int, default=None, help='expected multipartition count')
        self['rea-check'].add_argument('--full', action='store_const', const=True, default=None, help='also run the N = 3 centrality check')
        self['morita'].add_argument('--degree-bound', type=int, default=None, help='degree bound of the witness search')

        self.__parsers['parameters'] = subparsers.add_parser(
            'parameters', parents=[config], formatter_class=self.formatter_class, description='Show parameters', help='show parameters'
        )
        self.__parsers['parameters'].set_defaults(subcommand='parameters')
        self.__parsers['parameters'].add_argument(
            '--signature', action='store_true', help='show parameter signature with its arguments instead of creating it'
        )

    def __getitem__(self, name: str) -> argparse.ArgumentParser:
        return self.__parsers[name]

    def run(self, args: Optional[Sequence[str]] = None, variable: str = 'params') -> int:
        """
        Parse arguments, build the suite and run it.

        Returns:
            Exit status: 0 when the report passes, 1 on a failing report. Usage errors exit with status 2.
        """
        parsed = self.parse_args(args)
        parser = self[parsed.subcommand]
        try:
            if parsed.subcommand == 'parameters':
                self.__parameters(parsed, variable)
                return 0

            params = self.get_parameters(parsed, variable)
            checks = build_checks(params)
        except ConfigError as err:
            parser.error(str(err))

        from . import __version__

        engine = CLIEngine(params, checks, version=__version__)
        report = engine.run()
        return report.exit_code

    def __parameters(self, args: argparse.Namespace, variable: str) -> None:
        if args.config is None:
            raise ConfigError('parameters needs a config file (-c)')
        if args.signature:
            symbol = load_external(args.config, variable)
            if not callable(symbol):
                raise ConfigError(f'"{variable}" in "{args.config}" is not a function and thus has no arguments')
            print(f'{variable}{inspect.signature(symbol)}')
        else:
            print(self.get_parameters(args, variable))

    @staticmethod
    def get_parameters(args: argparse.Namespace, variable: str = 'params') -> Parameters:
        """
        Merge the flags of a parsed command line with the parameters of its config file.

        Raises:
            ConfigError: the config file or its arguments are invalid
        """
        flags: dict[str, Any] = {k: getattr(args, k) for k in FLAG_KEYS if getattr(args, k, None) is not None}
        flags.update({f'_{k}': getattr(args, k) for k in VOLATILE_KEYS if getattr(args, k, None) is not None})
        if args.subcommand != 'parameters':
            flags['suite'] = args.subcommand
        params = Parameters(**flags)

        param_kwargs: dict[str, str] = {}
        if args.param is not None:
            if not all('=' in p for p in args.param):
                raise ConfigError(f'Could not parse parameters: {args.param}, expected KEY=VALUE')
            param_kwargs = {k.strip(): v.strip() for k, v in (p.split('=', 1) for p in args.param)}

        if args.config is not None:
            with Parameters.enable_cast():
                config = Parameters.from_file(args.config, variable, **param_kwargs)
            suite = config.get('suite')
            if suite is not None and 'suite' in params and suite != params.suite:
                log.warning('Config "%s" is meant for suite "%s", running "%s"', args.config, suite, params.suite)
            params = params + config
        elif param_kwargs:
            log.warning('Ignoring %s without a config file', sorted(param_kwargs))

        if 'jobs' not in params:
            params = params + Parameters(_jobs=_default_jobs())
        return params


def _default_jobs() -> int:
    value = os.environ.get('DAHALAB_JOBS', '1')
    try:
        return max(1, int(value))
    except ValueError as err:
        raise ConfigError(f'DAHALAB_JOBS should be an integer, got "{value}"') from err


def main(args: Optional[Sequence[str]] = None) -> None:
    cli = CLI(prog='dahalab', description='Exact verification suites for double affine Hecke algebras', formatter_class=CustomFormatter)
    sys.exit(cli.run(args))
