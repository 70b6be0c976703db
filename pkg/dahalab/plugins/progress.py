import datetime
import logging
import sys
import time
from typing import Any, Literal, Optional

from .._report import CheckRecord, Report
from ..core import Plugin, hooks

__all__ = ['ProgressPlugin']
log = logging.getLogger(__name__)


class ProgressPlugin(Plugin):
    """
    Show a rich progress bar with one task per suite on a terminal.

    Without a terminal (or without rich) a single line is printed per finished check instead,
    so long runs still show where they are.
    """

    __type_check__: Literal['none', 'log', 'raise'] = 'none'

    def __init__(self) -> None:
        self.tty = sys.stdout.isatty()
        self.progress: Optional[Any] = None

    @hooks.engine_begin
    def start_progress(self, suite: str, total: int) -> None:
        self.start = time.perf_counter()
        self.total = total
        self.progress = None
        if not self.tty:
            return

        try:
            from rich.progress import BarColumn, MofNCompleteColumn, Progress, TextColumn, TimeElapsedColumn
        except ImportError:
            return

        self.progress = Progress(
            TextColumn('{task.description}'),
            BarColumn(pulse_style='bar.back'),
            MofNCompleteColumn(),
            TimeElapsedColumn(),
            TextColumn('{task.fields[current]}'),
        )
        self.task = self.progress.add_task(suite, total=total, current='')
        self.progress.start()

    @hooks.check_begin
    def show_check(self, index: int, name: str) -> None:
        if self.progress is not None:
            self.progress.update(self.task, current=name)

    @hooks.check_end
    def advance(self, index: int, record: CheckRecord) -> None:
        if self.progress is not None:
            self.progress.advance(self.task)
        else:
            print(f'[{index + 1}/{self.total}] {record.status.value} {record.name} ({record.time:.2f}s)', flush=True)

    @hooks.engine_end
    def stop_progress(self, report: Report) -> None:
        if self.progress is not None:
            self.progress.stop()
            self.progress = None
        delta = round(time.perf_counter() - self.start)
        log.info('Suite %s took %s', report.suite, datetime.timedelta(seconds=delta))
