from ._report import CheckRecord, CheckResult, Report, Status  # NOQA: I001 - CLI import needs to happen last
from ._parameter import Parameters
from ._engine import Check, Engine
from .core import hooks
from ._suites import SUITES, build_checks
from ._cli import CLI

__all__ = ['Check', 'CheckRecord', 'CheckResult', 'CLI', 'Engine', 'Parameters', 'Report', 'Status', 'SUITES', 'build_checks', 'hooks']
__version__ = '0.0.0'
