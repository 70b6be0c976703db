from __future__ import annotations

import copy
import inspect
import logging
from collections.abc import Iterator, Sequence
from typing import Any, Callable, Optional, TypeVar

from ._hook import Hook, HookManager, HookParent
from ._protocol import ProtocolChecker

__all__ = ['Plugin', 'PluginManager', 'PluginParent']
log = logging.getLogger(__name__)

Self = TypeVar('Self', bound='PluginParent')


class Plugin(HookParent):
    """
    Reusable bundle of hooks attached to an engine.

    Plugins are listed as instances in the ``plugins`` class attribute of an engine.
    Every engine instance gets its own copy, bound with :attr:`parent` pointing back to it.
    """

    __type_check__ = 'raise'
    _parent: Optional[PluginParent] = None
    enabled: bool = True

    def bind(self, parent: PluginParent) -> Plugin:
        new = self.__class__.__new__(self.__class__)
        for name, value in vars(self).items():
            if not isinstance(value, (HookManager, Hook)):
                setattr(new, name, copy.deepcopy(value))
        new._parent = parent
        return new

    @property
    def parent(self) -> Any:
        assert self._parent is not None, f'{type(self).__name__}.parent is only available on plugins bound to an engine'
        return self._parent

    @property
    def name(self) -> str:
        return type(self).__name__.lower()


class PluginParent:
    """Base class for objects that collect plugins from the ``plugins`` attribute of every class in their MRO."""

    plugins: PluginManager

    def __new__(cls: type[Self], *args: Any, **kwargs: Any) -> Self:
        obj = super().__new__(cls)
        object.__setattr__(obj, 'plugins', PluginManager(obj))
        return obj


class PluginManager:
    def __init__(self, parent: PluginParent):
        self._children: dict[str, Plugin] = {}
        for cls in reversed(inspect.getmro(type(parent))):
            for plugin in vars(cls).get('plugins', []):
                bound = plugin.bind(parent)
                if bound.name in self._children:
                    log.warning('Plugin "%s" is listed twice, keeping the last one', bound.name)
                self._children[bound.name] = bound

        self.protocol = ProtocolChecker()
        for name, child in self._children.items():
            self.protocol.add(name, child.__protocol__)

    def run(
        self,
        /,
        type: Optional[str] = None,
        index: Optional[int] = None,
        args: Sequence[Any] = (),
        kwargs: Optional[dict[str, Any]] = None,
    ) -> Callable[[], None]:
        runners = [child.hooks.run(type=type, index=index, args=args, kwargs=kwargs) for child in self._children.values() if child.enabled]

        def run_pass() -> None:
            for runner in runners:
                runner()

        return run_pass

    def check(self, protocol: ProtocolChecker) -> None:
        for name, child in self._children.items():
            child.hooks.check(protocol, child.__type_check__, name)

    def __len__(self) -> int:
        return len(self._children)

    def __getitem__(self, name: str) -> Plugin:
        name = name.lower()
        if name not in self._children:
            raise KeyError(f'Plugin "{name}" is not attached, available: {sorted(self._children)}')
        return self._children[name]

    def __contains__(self, name: str) -> bool:
        return name.lower() in self._children

    def __iter__(self) -> Iterator[Plugin]:
        return iter(self._children.values())
