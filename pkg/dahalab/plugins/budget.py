import logging
import signal
import threading
from types import FrameType
from typing import Optional, Protocol

from .._report import CheckRecord
from ..algebra import CheckTimeout
from ..core import Plugin, hooks

__all__ = ['BudgetPlugin']
log = logging.getLogger(__name__)


class ParentProtocol(Protocol):
    budget_scale: float = 10.0
    """ A check is stopped after this many times its budget. """


class BudgetPlugin(Plugin, protocol=ParentProtocol):
    """
    Stop checks that run far beyond their budget.

    A SIGALRM timer of ``budget_scale`` times the budget of the check is armed when it begins.
    When it fires, :class:`~dahalab.algebra.CheckTimeout` is raised inside the check, which the engine records as SKIP.
    Timers only work for checks running in the main thread, so parallel runs are not limited.
    """

    def __init__(self) -> None:
        self.armed = False

    @hooks.check_begin
    def arm(self, index: int, name: str) -> None:
        check = self.parent.checks[index]
        if check.budget is None or not hasattr(signal, 'SIGALRM') or getattr(self.parent, 'jobs', 1) != 1:
            return
        if threading.current_thread() is not threading.main_thread():
            return

        seconds = float(check.budget) * float(getattr(self.parent, 'budget_scale', 10.0))
        self.current = name
        self.seconds = seconds
        signal.signal(signal.SIGALRM, self.expire)
        signal.setitimer(signal.ITIMER_REAL, seconds)
        self.armed = True

    @hooks.check_end.set_early()
    def disarm(self, index: int, record: CheckRecord) -> None:
        if self.armed:
            signal.setitimer(signal.ITIMER_REAL, 0)
            signal.signal(signal.SIGALRM, signal.SIG_DFL)
            self.armed = False

    def expire(self, signum: int, frame: Optional[FrameType]) -> None:
        log.warning('Check %s exceeded %.0fs', self.current, self.seconds)
        raise CheckTimeout(f'{self.current} ran longer than {self.seconds:.0f}s')
