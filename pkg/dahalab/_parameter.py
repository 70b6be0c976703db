from __future__ import annotations

import copy
import importlib.util
import inspect
import json
import logging
import re
from collections.abc import Iterator, Mapping, Sequence
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Callable, ClassVar, Literal, Optional, Union

from .algebra import ConfigError

__all__ = ['Parameters', 'cast_arg', 'load_external']
log = logging.getLogger(__name__)


class Parameters:
    """
    Attribute store for a run configuration, loaded from python config files.

    Keys passed with a leading underscore are volatile: they are available without the underscore,
    but are not written by :meth:`save`.

    Example:
        >>> params = Parameters(n=2, regime='GL', _json_path='report.json')
        >>> params.json_path
        'report.json'
        >>> params.keys()
        ['json_path', 'n', 'regime']
    """

    _cast: ClassVar[bool] = False

    def __init__(self, **kwargs: Any):
        object.__setattr__(self, '_volatile', set())
        for key, value in kwargs.items():
            volatile = key.startswith('_')
            key = key.lstrip('_')
            if key in vars(self):
                log.error('"%s" is given twice, keeping the first value', key)
                continue
            setattr(self, key, value)
            if volatile:
                self._volatile.add(key)

    def save(self, filename: Union[Path, str], *keys: str) -> None:
        """
        Write the non-volatile parameters to a JSON file.

        Values that are not JSON representable are skipped with a warning.
        """
        keys = keys or tuple(k for k in self.keys() if k not in self._volatile)
        state = {}
        for key in keys:
            value = getattr(self, key)
            try:
                json.dumps(value)
            except TypeError:
                log.warning('Parameter "%s" is not JSON serializable and will not be saved', key)
                continue
            state[key] = value
        Path(filename).write_text(json.dumps(state, indent=2, sort_keys=True) + '\n')

    def load(self, filename: Union[Path, str], *keys: str) -> None:
        state = json.loads(Path(filename).read_text())
        for key in keys or tuple(state):
            if key not in state:
                log.error('Key "%s" is not present in "%s"', key, filename)
                continue
            setattr(self, key, state[key])

    def get(self, name: str, default: Optional[Any] = None) -> Any:
        """Drill down through dotted names, indexing dictionaries and sequences on the way."""
        obj: Any = self
        for attr in name.split('.'):
            try:
                if isinstance(obj, Mapping):
                    obj = obj[attr]
                elif isinstance(obj, Sequence) and attr.isdigit():
                    obj = obj[int(attr)]
                else:
                    obj = getattr(obj, attr)
            except (KeyError, AttributeError, IndexError):
                return default
        return obj

    def keys(self) -> list[str]:
        return sorted(k for k in vars(self) if not k.startswith('_'))

    def values(self) -> Iterator[Any]:
        return (getattr(self, k) for k in self.keys())

    def items(self) -> Iterator[tuple[str, Any]]:
        return ((k, getattr(self, k)) for k in self.keys())

    def to_dict(self) -> dict[str, Any]:
        """Every parameter as text-friendly values, as echoed in reports."""
        out = {}
        for key, value in self.items():
            if value is None or isinstance(value, (bool, int, float, str)):
                out[key] = value
            elif isinstance(value, (list, tuple)):
                out[key] = [v if isinstance(v, (bool, int, float, str)) else str(v) for v in value]
            else:
                out[key] = str(value)
        return out

    @property
    def volatile(self) -> set[str]:
        return set(self._volatile)

    def __str__(self) -> str:
        lines = [f'{type(self).__name__}(']
        for key, value in self.items():
            text = str(value)
            if '\n' in text:
                text = getattr(value, '__name__', type(value).__name__)
            lines.append(f'  {key}{"*" if key in self._volatile else ""} = {text}')
        return '\n'.join(lines) + '\n)'

    def __repr__(self) -> str:
        return f'{type(self).__name__}({", ".join(f"{k}={v!r}" for k, v in self.items())})'

    def __add__(self, other: Parameters) -> Parameters:
        """Shallow copy of self, completed with the keys of other that self does not have."""
        if not isinstance(other, Parameters):
            return NotImplemented
        new = copy.copy(self)
        object.__setattr__(new, '_volatile', set(self._volatile))
        for key, value in other.items():
            if key in new:
                log.warning('"%s" is available in both Parameters, keeping first', key)
                continue
            setattr(new, key, value)
            if key in other._volatile:
                new._volatile.add(key)
        return new

    def __contains__(self, key: str) -> bool:
        return key in self.keys()

    def __iter__(self) -> Iterator[str]:
        return iter(self.keys())

    @classmethod
    def from_file(cls, filename: Union[Path, str], variable: str = 'params', **kwargs: Any) -> Parameters:
        """
        Load Parameters from a python config file.

        The variable in the file is either a :class:`Parameters` object or a callable returning one.
        Keyword arguments are passed to the callable; inside :meth:`enable_cast` string arguments are first
        converted according to the type hints of the callable.

        Raises:
            ConfigError: the variable has the wrong type, or an argument cannot be converted

        Example:
            >>> # configs/springer.py
            >>> def params(N: int = 2, regime: str = 'GL'):
            ...     return dahalab.Parameters(suite='springer', N=N, regime=regime)

            >>> with Parameters.enable_cast():
            ...     params = Parameters.from_file('configs/springer.py', N='3')
        """
        params = load_external(Path(filename), variable)
        if not callable(params):
            if kwargs:
                log.warning('"%s" in "%s" is not callable, ignoring arguments %s', variable, filename, sorted(kwargs))
            return params

        if cls._cast:
            hints = inspect.signature(params).parameters
            for name, param in hints.items():
                if name in kwargs and isinstance(kwargs[name], str) and param.annotation is not param.empty:
                    annotation = _resolve(params, param.annotation)
                    try:
                        kwargs[name] = cast_arg(kwargs[name], annotation)
                    except (ValueError, TypeError, AssertionError) as err:
                        raise ConfigError(f'Could not convert {name}="{kwargs[name]}" to {annotation}') from err

        try:
            result = params(**kwargs)
        except TypeError as err:
            raise ConfigError(f'Could not call "{variable}" in "{filename}": {err}') from err
        if not isinstance(result, Parameters):
            raise ConfigError(f'"{variable}" in "{filename}" did not return Parameters [{type(result)}]')
        return result

    @staticmethod
    @contextmanager
    def enable_cast(enabled: bool = True) -> Iterator[None]:
        state = Parameters._cast
        Parameters._cast = enabled
        try:
            yield
        finally:
            Parameters._cast = state


def _resolve(fn: Callable[..., Any], annotation: Any) -> Any:
    if not isinstance(annotation, str):
        return annotation
    try:
        return eval(annotation, getattr(fn, '__globals__', {}))  # NOQA: S307 - annotations of a trusted local config file
    except Exception:
        log.warning('Could not resolve annotation "%s", keeping the argument as a string', annotation)
        return str


def load_external(filename: Path, variable: str) -> Union[Parameters, Callable[..., Parameters]]:
    """
    Import a python file by path and return one of its variables.

    Raises:
        ConfigError: the file does not exist, cannot be imported or lacks the variable
    """
    if not filename.is_file():
        raise ConfigError(f'Config file "{filename}" does not exist')

    module_name = 'dahalab.cfg.' + re.sub(r'[^a-zA-Z0-9]', '_', str(filename))
    spec = importlib.util.spec_from_file_location(module_name, filename)
    if spec is None or spec.loader is None:
        raise ConfigError(f'Could not import "{filename}", is it a python file?')
    module = importlib.util.module_from_spec(spec)
    try:
        spec.loader.exec_module(module)
    except SyntaxError as err:
        raise ConfigError(f'Could not import "{filename}": {err}') from err

    try:
        params = getattr(module, variable)
    except AttributeError as err:
        raise ConfigError(f'Variable "{variable}" not found in "{filename}"') from err

    if not callable(params) and not isinstance(params, Parameters):
        raise ConfigError(f'"{variable}" in "{filename}" should be Parameters or a callable returning them [{type(params)}]')
    return params


def cast_arg(param: str, cast_type: Any) -> Any:  # NOQA: C901 - one branch per supported annotation
    """
    Convert a command line string according to a type annotation.

    Example:
        >>> cast_arg('1,2,3', tuple[int, ...])
        (1, 2, 3)
        >>> cast_arg('none', Optional[int]) is None
        True
    """
    if cast_type in (str, Any):
        return param

    if cast_type in (int, float):
        return cast_type(param)

    if cast_type is bool:
        if param.lower() in ('true', 't', 'yes', 'y', '1'):
            return True
        if param.lower() in ('false', 'f', 'no', 'n', '0'):
            return False
        raise ValueError(f'Could not convert "{param}" to bool')

    if cast_type is type(None):
        if param.lower() != 'none':
            raise ValueError(f'Expected "none", got "{param}"')
        return None

    origin = getattr(cast_type, '__origin__', None)
    args = getattr(cast_type, '__args__', ())

    if origin is Literal:
        assert param in args, f'"{param}" is not one of {args}'
        return param

    if origin is Union:
        # Try str last so it does not swallow everything
        for subtype in sorted(args, key=lambda t: t is str):
            try:
                return cast_arg(param, subtype)
            except (ValueError, TypeError, AssertionError):
                continue
        raise ValueError(f'Could not convert "{param}" to {cast_type}')

    if origin is tuple and args and args[-1] is not Ellipsis:
        values = param.split(',')
        assert len(values) == len(args), f'"{param}" does not have {len(args)} values'
        return tuple(cast_arg(v.strip(), t) for v, t in zip(values, args))

    if origin in (tuple, list, set):
        subtype = args[0] if args else str
        return origin(cast_arg(v.strip(), subtype) for v in param.split(','))

    if origin is dict:
        keytype, valuetype = args if len(args) == 2 else (str, str)
        pairs = (item.split(':', 1) for item in param.split(','))
        return {cast_arg(k.strip(), keytype): cast_arg(v.strip(), valuetype) for k, v in pairs}

    log.error('Unknown type "%s", keeping the argument as a string', cast_type)
    return param
