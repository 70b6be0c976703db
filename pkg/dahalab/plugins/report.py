import logging
from pathlib import Path
from typing import Optional, Protocol, Union

from .._report import Report
from ..core import Plugin, hooks

__all__ = ['ReportPlugin']
log = logging.getLogger(__name__)


class ParentProtocol(Protocol):
    json_path: Optional[Union[str, Path]] = None
    """ Path of the JSON report. No JSON is written when this is missing. """

    quiet: bool = False
    """ Do not print the text report. """


class ReportPlugin(Plugin, protocol=ParentProtocol):
    """Print the text form of the aggregate report and write it as JSON once the suite is done."""

    @hooks.engine_end.set_late()
    def write_report(self, report: Report) -> None:
        if not getattr(self.parent, 'quiet', False):
            _print(report.text())

        json_path = getattr(self.parent, 'json_path', None)
        if json_path is not None:
            report.write(json_path)
            log.info('Report written to "%s"', json_path)


def _print(text: str) -> None:
    try:
        from rich import print as rprint
        from rich.markup import escape
    except ImportError:
        print(text)
        return
    styles = {'[PASS]': 'green', '[FAIL]': 'bold red', '[SKIP]': 'yellow'}
    for line in text.split('\n'):
        style = next((s for tag, s in styles.items() if line.startswith(tag)), None)
        line = escape(line)
        rprint(f'[{style}]{line}[/{style}]' if style else line)
