from __future__ import annotations

import logging
import signal
import threading
import time
from collections.abc import Sequence
from concurrent.futures import Future, ThreadPoolExecutor
from dataclasses import dataclass
from types import FrameType
from typing import Any, Callable, Literal, Optional, Protocol

from ._parameter import Parameters
from ._report import CheckRecord, CheckResult, Report, Status
from .algebra import CheckTimeout, DahaLabError
from .core import HookParent, PluginParent, ProtocolChecker, hooks

__all__ = ['Check', 'Engine']
log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Check:
    """
    A named verification.

    Args:
        name: identifier shown in reports
        fn: zero-argument callable returning a :class:`~dahalab.CheckResult`
        budget: expected runtime in seconds, used by the budget plugin
    """

    name: str
    fn: Callable[[], CheckResult]
    budget: Optional[float] = None


class ParentProtocol(Protocol):
    suite: str
    """ Name of the suite that is run. """

    jobs: int = 1
    """ Number of worker threads (1 runs the checks in the main thread). """

    @hooks.engine_init
    def engine_init(self) -> None:
        """Called once the engine is constructed."""

    @hooks.engine_del
    def engine_del(self) -> None:
        """Called when the engine is destroyed."""

    @hooks.engine_begin
    def engine_begin(self, suite: str, total: int) -> None:
        """Called before the first check."""

    @hooks.engine_end
    def engine_end(self, report: Report) -> None:
        """Called with the aggregate report, also when the run was interrupted."""

    @hooks.check_begin
    def check_begin(self, index: int, name: str) -> None:
        """Called before a check runs (or is submitted to the worker pool)."""

    @hooks.check_end
    def check_end(self, index: int, record: CheckRecord) -> None:
        """Called with the record of every finished check, in suite order."""


class Engine(HookParent, PluginParent, protocol=ParentProtocol):
    """
    Run a list of checks and collect their records in a :class:`~dahalab.Report`.

    Errors derived from :class:`~dahalab.algebra.DahaLabError` turn into FAIL records carrying the error text,
    :class:`~dahalab.algebra.CheckTimeout` into SKIP records.
    SIGINT and SIGTERM stop the run after the current check.

    Attributes that are not found on the engine are looked up on its parameters.
    """

    __type_check__: Literal['none', 'log', 'raise'] = 'raise'
    plugins: Any = []

    def __init__(self, params: Parameters, checks: Sequence[Check], version: str = '0.0.0', **kwargs: Any):
        self.__sigint__ = False
        self.__quit__ = False
        self.__default_sigint: Any = None
        self.__default_sigterm: Any = None
        if threading.current_thread() is threading.main_thread():
            self.__default_sigint = signal.signal(signal.SIGINT, self.__interrupt)
            self.__default_sigterm = signal.signal(signal.SIGTERM, self.__interrupt)

        self.params = params
        self.checks = list(checks)
        self.version = version
        self.protocol = ProtocolChecker().add(type(self).__name__, self.__protocol__) + self.plugins.protocol
        self.report: Optional[Report] = None

        for key, value in kwargs.items():
            if hasattr(self, key):
                log.warning('%s attribute already exists on engine', key)
            else:
                setattr(self, key, value)

        self.run_hook(type='engine_init')

    def __del__(self) -> None:
        if 'protocol' not in vars(self):
            return
        self.run_hook(type='engine_del')
        if self.__default_sigint is not None:
            signal.signal(signal.SIGINT, self.__default_sigint)
        if self.__default_sigterm is not None:
            signal.signal(signal.SIGTERM, self.__default_sigterm)

    def run(self) -> Report:
        self.__check()
        suite = getattr(self, 'suite', 'checks')
        config = {k: v for k, v in self.params.to_dict().items() if k not in self.params.volatile}
        self.report = Report(suite, self.version, config)
        jobs = max(1, int(getattr(self, 'jobs', 1) or 1))
        log.info('Running %d checks of "%s" with %d job(s)', len(self.checks), suite, jobs)

        self.run_hook(type='engine_begin', args=[suite, len(self.checks)])
        try:
            if jobs == 1:
                self.__run_serial()
            else:
                self.__run_parallel(jobs)
        finally:
            self.run_hook(type='engine_end', args=[self.report])
        return self.report

    def run_hook(
        self,
        /,
        type: Optional[str] = None,
        index: Optional[int] = None,
        args: Sequence[Any] = (),
        kwargs: Optional[dict[str, Any]] = None,
    ) -> None:
        """Run the hooks of the engine and its plugins in three passes (early, normal, late)."""
        run_hooks = self.hooks.run(type=type, index=index, args=args, kwargs=kwargs)
        run_plugins = self.plugins.run(type=type, index=index, args=args, kwargs=kwargs)
        for _ in range(3):
            run_hooks()
            run_plugins()

    def quit(self) -> None:
        if not self.__quit__:
            log.debug('Quit requested, stopping after the current check')
            self.__quit__ = True

    @property
    def stopping(self) -> bool:
        return self.__quit__ or self.__sigint__

    def __run_serial(self) -> None:
        assert self.report is not None
        for index, check in enumerate(self.checks):
            if self.stopping:
                self.__skip_rest(index)
                return
            self.run_hook(type='check_begin', index=index, args=[index, check.name])
            record = execute(check)
            self.__finish(index, record)

    def __run_parallel(self, jobs: int) -> None:
        assert self.report is not None
        futures: list[Future[CheckRecord]] = []
        with ThreadPoolExecutor(max_workers=jobs, thread_name_prefix='dahalab') as pool:
            for index, check in enumerate(self.checks):
                self.run_hook(type='check_begin', index=index, args=[index, check.name])
                futures.append(pool.submit(execute, check))

            for index, future in enumerate(futures):
                if self.stopping and future.cancel():
                    self.__skip_rest(index, futures[index:])
                    return
                self.__finish(index, future.result())

    def __finish(self, index: int, record: CheckRecord) -> None:
        assert self.report is not None
        self.report.records.append(record)
        log.info('%s %s (%.2fs)', record.status.value, record.name, record.time)
        self.run_hook(type='check_end', index=index, args=[index, record])

    def __skip_rest(self, start: int, futures: Sequence[Future[CheckRecord]] = ()) -> None:
        log.warning('Run interrupted, skipping %d remaining checks', len(self.checks) - start)
        for offset, check in enumerate(self.checks[start:]):
            future = futures[offset] if offset < len(futures) else None
            if future is not None and not future.cancel() and future.done():
                record = future.result()
            else:
                record = CheckRecord(check.name, Status.SKIP, 'interrupted')
            self.__finish(start + offset, record)

    def __check(self) -> None:
        self.plugins.check(self.protocol)
        self.hooks.check(self.protocol, self.__type_check__, type(self).__name__)
        issues = self.protocol.check(self)
        if not issues:
            return
        if self.__type_check__ == 'raise':
            raise TypeError('Engine does not satisfy its protocol: ' + '; '.join(str(i) for i in issues))
        for issue in issues:
            log.error('Protocol: %s', issue)

    def __interrupt(self, signum: int, frame: Optional[FrameType]) -> None:
        if not self.__sigint__:
            log.warning('SIGINT/SIGTERM caught, stopping after the current check')
            self.__sigint__ = True

    def __getattr__(self, name: str) -> Any:
        if name == 'params':
            raise AttributeError('params not yet available on Engine')
        try:
            return getattr(self.params, name)
        except AttributeError as err:
            raise AttributeError(f'{name} attribute does not exist') from err


def execute(check: Check) -> CheckRecord:
    """Run one check, turning library errors into FAIL or SKIP records."""
    start = time.perf_counter()
    try:
        result = check.fn()
    except CheckTimeout as err:
        result = CheckResult(Status.SKIP, f'exceeded budget: {err}')
    except DahaLabError as err:
        log.debug('Check %s raised %r', check.name, err)
        result = CheckResult(Status.FAIL, type(err).__name__, str(err))
    elapsed = time.perf_counter() - start
    return CheckRecord(check.name, result.status, result.message, result.witness, result.details, round(elapsed, 4))
