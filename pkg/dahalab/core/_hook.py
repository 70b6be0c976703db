from __future__ import annotations

import inspect
import logging
from collections import defaultdict
from collections.abc import Sequence
from functools import update_wrapper
from itertools import chain
from types import MethodType
from typing import TYPE_CHECKING, Any, Callable, Literal, Optional, TypeVar, Union

if TYPE_CHECKING:
    from ._protocol import ProtocolChecker

__all__ = ['Hook', 'HookDecorator', 'HookManager', 'HookParent', 'hooks']
log = logging.getLogger(__name__)

Self = TypeVar('Self', bound='HookParent')
Indices = Union[int, slice, tuple[Union[int, slice], ...]]


class HookDecorator:
    """
    Partially configured hook, returned by ``hooks.<type>``.

    Indexing restricts the check indices the hook fires on and ``set_early``/``set_late`` move it to another pass.
    """

    def __init__(self, type: str, parent: Optional[HookParent] = None):
        self.type = type
        self.parent = parent
        self.indices: tuple[slice, ...] = (slice(None),)
        self.timing = 0

    def __getitem__(self, indices: Indices) -> HookDecorator:
        if not isinstance(indices, tuple):
            indices = (indices,)
        self.indices = tuple(idx if isinstance(idx, slice) else slice(idx, idx + 1) for idx in indices)
        return self

    def __call__(self, fn: Callable[..., None]) -> Hook:
        assert callable(fn), f'hooks.{self.type} should decorate a callable, got {fn!r}'
        return Hook(self.type, self.indices, fn, self.parent, self.timing)

    def set_early(self) -> HookDecorator:
        self.timing = -1
        return self

    def set_late(self) -> HookDecorator:
        self.timing = 1
        return self


class _HookFactory:
    """
    Turn methods into hooks.

    Example:
        >>> class Verbose(dahalab.core.Plugin):
        ...     @dahalab.hooks.check_end
        ...     def report(self, index, record):
        ...         print(record.name, record.status)
        ...
        ...     @dahalab.hooks.check_begin[::10]
        ...     def every_tenth(self, index, name):
        ...         pass
    """

    def __getattr__(self, name: str) -> HookDecorator:
        if name.startswith('__'):
            raise AttributeError(name)
        return HookDecorator(name)


hooks = _HookFactory()


class Hook:
    """A method that runs automatically when its parent fires hooks of a given type."""

    def __init__(
        self,
        type: str,
        indices: tuple[slice, ...],
        fn: Callable[..., Any],
        parent: Optional[HookParent] = None,
        timing: int = 0,
        enabled: bool = True,
    ) -> None:
        self.type = type
        self.indices = indices
        self.timing = timing
        self.enabled = enabled

        if parent is None:
            self.fn = fn
        else:
            func = fn.__func__ if isinstance(fn, MethodType) else fn
            self.fn = MethodType(func, parent)
            manager = vars(parent).get('hooks')
            if manager is not None:
                manager.register(self)
        update_wrapper(self, self.fn)

        # Arguments the function accepts, None meaning any
        self._argcount: Optional[int] = 0
        self._kwargs: Optional[set[str]] = set()
        parameters = list(inspect.signature(fn).parameters.values())
        if not isinstance(fn, MethodType) and parameters:
            parameters = parameters[1:]
        for param in parameters:
            if param.kind == param.VAR_POSITIONAL:
                self._argcount = None
            elif param.kind == param.VAR_KEYWORD:
                self._kwargs = None
            else:
                if param.kind != param.KEYWORD_ONLY and self._argcount is not None:
                    self._argcount += 1
                if param.kind != param.POSITIONAL_ONLY and self._kwargs is not None:
                    self._kwargs.add(param.name)

    def __call__(self, *args: Any, **kwargs: Any) -> None:
        if self._argcount is not None:
            args = args[: self._argcount]
        if self._kwargs is not None:
            kwargs = {name: value for name, value in kwargs.items() if name in self._kwargs}
        self.fn(*args, **kwargs)

    def __repr__(self) -> str:
        return f'<Hook {self.type}: {self.fn!r}>'

    def bind(self, parent: HookParent) -> Hook:
        return self.__class__(self.type, self.indices, self.fn, parent, self.timing, self.enabled)

    def is_active(self, index: Optional[int] = None) -> bool:
        if not self.enabled:
            return False
        if index is None:
            return True
        return any(
            (s.start is None or index >= s.start) and (s.stop is None or index < s.stop) and (index - (s.start or 0)) % (s.step or 1) == 0
            for s in self.indices
        )

    @property
    def early(self) -> bool:
        return self.timing == -1

    @property
    def late(self) -> bool:
        return self.timing == 1


class HookManager:
    """Registry of the hooks bound to one parent, split into early, normal and late passes when run."""

    def __init__(self, parent: HookParent):
        self._parent = parent
        self._hooks: dict[str, list[Hook]] = defaultdict(list)

        for name in dir(type(parent)):
            value = getattr(type(parent), name, None)
            if isinstance(value, Hook):
                bound = value.bind(parent)
                object.__setattr__(parent, name, bound)
                self.register(bound)

    def register(self, hook: Hook) -> None:
        self._hooks[hook.type].append(hook)

    def run(
        self,
        /,
        type: Optional[str] = None,
        index: Optional[int] = None,
        args: Sequence[Any] = (),
        kwargs: Optional[dict[str, Any]] = None,
    ) -> Callable[[], None]:
        """
        Prepare the active hooks and return a function that runs the next pass (early, normal, late) each time it is called.
        """
        kwargs = kwargs or {}
        selected = chain(*self._hooks.values()) if type is None else self._hooks.get(type, [])
        passes: tuple[list[Hook], list[Hook], list[Hook]] = ([], [], [])
        for hook in selected:
            if hook.is_active(index):
                passes[0 if hook.early else 2 if hook.late else 1].append(hook)

        called = 0

        def run_pass() -> None:
            nonlocal called
            for hook in passes[called]:
                hook(*args, **kwargs)
            called += 1

        return run_pass

    def types(self) -> set[str]:
        return {name for name, registered in self._hooks.items() if registered}

    def check(self, protocol: ProtocolChecker, mode: Literal['none', 'log', 'raise'], owner: str) -> None:
        """Complain about hooks of a type the protocol does not declare."""
        if mode == 'none':
            return
        for name in sorted(self.types()):
            if protocol.check_hook_type(name):
                continue
            if mode == 'raise':
                raise TypeError(f'Unregistered hook type "{name}" in <{owner}>')
            log.error('Unregistered hook type "%s" in <%s>', name, owner)

    def __getattr__(self, name: str) -> HookDecorator:
        if name.startswith('_'):
            raise AttributeError(name)
        return HookDecorator(name, self._parent)


class HookParent:
    """
    Base class for objects carrying hooks.

    Hooks declared on the class with ``@hooks.<type>`` are bound to every instance,
    and ``self.hooks.<type>(fn)`` registers extra hooks at runtime.
    A ``protocol`` class argument names the hook types and attributes the object expects.
    """

    hooks: HookManager
    __type_check__: Literal['none', 'log', 'raise'] = 'log'
    __protocol__: Optional[type] = None

    def __init_subclass__(cls, /, protocol: Optional[type] = None, **kwargs: Any) -> None:
        super().__init_subclass__(**kwargs)
        if protocol is not None:
            cls.__protocol__ = protocol

    def __new__(cls: type[Self], *args: Any, **kwargs: Any) -> Self:
        obj = super().__new__(cls)
        object.__setattr__(obj, 'hooks', HookManager(obj))
        return obj
