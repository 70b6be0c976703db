import logging
import sys
from contextlib import suppress
from pathlib import Path
from typing import Literal, Optional, Protocol, Union, cast

from ..core import Plugin, hooks

__all__ = ['LogPlugin']
log = logging.getLogger(__name__)


class ParentProtocol(Protocol):
    log_file: Optional[Union[str, Path]] = None
    """ Path to store the run log. Nothing is stored when this is missing. """

    quiet: bool = False
    """ Only warnings reach the console when set. """


class LogPlugin(Plugin, protocol=ParentProtocol):
    """
    Install logging handlers for the duration of an engine.

    The console gets a :class:`~rich.logging.RichHandler` on a terminal when rich is installed,
    and a plain :class:`logging.StreamHandler` on stderr otherwise.

    Args:
        file_mode: How to open the log file. Default **'a'**
        file_level: Filter level for the log file; Default **DEBUG**
        console_level: Filter level for the console; Default **INFO**
        clean_up: Whether to remove the handlers when the engine is destroyed; Default **True**
    """

    def __init__(
        self,
        file_mode: Literal['a', 'w'] = 'a',
        file_level: int = logging.DEBUG,
        console_level: int = logging.INFO,
        clean_up: bool = True,
    ):
        self.file_mode = file_mode
        self.file_level = file_level
        self.console_level = console_level
        self.clean_up = clean_up
        self.handlers: tuple[logging.Handler, ...] = ()

    @hooks.engine_init.set_early()
    def setup_handlers(self) -> None:
        handlers = (self.setup_filehandler(), self.setup_streamhandler())
        self.handlers = tuple(h for h in handlers if h is not None)
        for handler in self.handlers:
            logging.root.addHandler(handler)
        logging.root.setLevel(min(h.level for h in self.handlers))

    @hooks.engine_del.set_late()
    def remove_handlers(self) -> None:
        if self.clean_up:
            for handler in self.handlers:
                logging.root.removeHandler(handler)
                handler.close()
            self.handlers = ()

    def setup_streamhandler(self) -> logging.Handler:
        handler: Optional[logging.Handler] = None
        if sys.stderr.isatty():
            with suppress(ImportError):
                from rich.logging import RichHandler

                handler = cast(logging.Handler, RichHandler(rich_tracebacks=True, tracebacks_suppress=['dahalab']))
                handler.setFormatter(logging.Formatter('%(message)s', '[%X]'))
        if handler is None:
            handler = logging.StreamHandler()
            handler.setFormatter(logging.Formatter('%(levelname)-8s %(message)s'))
        handler.setLevel(logging.WARNING if getattr(self.parent, 'quiet', False) else self.console_level)
        return handler

    def setup_filehandler(self) -> Optional[logging.Handler]:
        log_file = getattr(self.parent, 'log_file', None)
        if log_file is None:
            return None

        path = Path(log_file)
        if not path.parent.exists():
            log.info('log_file folder "%s" does not exist, creating now...', path.parent)
            path.parent.mkdir(parents=True)

        handler = logging.FileHandler(filename=path, mode=self.file_mode)
        handler.setFormatter(logging.Formatter(fmt='%(levelname)s %(asctime)s [%(name)s:%(lineno)d] | %(message)s', datefmt='%x %X'))
        handler.setLevel(self.file_level)
        return handler
