from __future__ import annotations

import inspect
import logging
import typing
from dataclasses import dataclass, field
from typing import Any, Optional

import typeguard

from ._hook import Hook

__all__ = ['ProtocolChecker', 'ProtocolIssue']
log = logging.getLogger(__name__)
_missing = object()


@dataclass
class ProtocolIssue:
    owner: str
    name: str
    message: str

    def __str__(self) -> str:
        return f'{self.owner}.{self.name}: {self.message}'


@dataclass
class _Attribute:
    name: str
    type: Any
    default: Any
    doc: Optional[str] = None

    def __str__(self) -> str:
        text = f'{self.name}: {inspect.formatannotation(self.type)}'
        return text if self.default is _missing else f'{text} = {self.default!r}'


@dataclass
class _HookType:
    name: str
    signature: inspect.Signature
    doc: Optional[str] = None

    def __str__(self) -> str:
        return f'@hooks.{self.name}{self.signature}'


@dataclass
class _Entry:
    owner: str
    attributes: list[_Attribute] = field(default_factory=list)
    hooks: list[_HookType] = field(default_factory=list)


class ProtocolChecker:
    """
    Collection of the Protocol classes an engine and its plugins declare.

    A protocol lists the hook types that may be fired (methods decorated with ``@hooks.<type>``)
    and the attributes the engine should carry, checked at runtime with :func:`typeguard.check_type`.
    Attribute docstrings are the string literal directly following the annotation.
    """

    def __init__(self) -> None:
        self.entries: list[_Entry] = []

    def add(self, owner: str, protocol: Optional[type]) -> ProtocolChecker:
        if protocol is None:
            return self

        entry = _Entry(owner)
        hints = typing.get_type_hints(protocol)
        docs = _attribute_docs(protocol)
        for name, hint in hints.items():
            entry.attributes.append(_Attribute(name, hint, getattr(protocol, name, _missing), docs.get(name)))
        for name, value in vars(protocol).items():
            if isinstance(value, Hook):
                fn = getattr(value.fn, '__func__', value.fn)
                signature = inspect.signature(fn)
                signature = signature.replace(parameters=list(signature.parameters.values())[1:])
                entry.hooks.append(_HookType(value.type, signature, inspect.getdoc(fn)))
        self.entries.append(entry)
        return self

    def __add__(self, other: ProtocolChecker) -> ProtocolChecker:
        new = ProtocolChecker()
        new.entries = [*self.entries, *other.entries]
        return new

    @property
    def hook_types(self) -> set[str]:
        return {hook.name for entry in self.entries for hook in entry.hooks}

    def check_hook_type(self, name: str) -> bool:
        return name in self.hook_types

    def check(self, obj: Any) -> list[ProtocolIssue]:
        """Type check the declared attributes on an object; attributes with a default may be missing."""
        issues = []
        for entry in self.entries:
            for attr in entry.attributes:
                value = getattr(obj, attr.name, _missing)
                if value is _missing:
                    if attr.default is _missing:
                        issues.append(ProtocolIssue(entry.owner, attr.name, 'missing'))
                    continue
                try:
                    typeguard.check_type(value, attr.type)
                except typeguard.TypeCheckError as err:
                    issues.append(ProtocolIssue(entry.owner, attr.name, str(err)))
        for issue in issues:
            log.debug('Protocol issue %s', issue)
        return issues

    def __str__(self) -> str:
        lines = []
        for entry in self.entries:
            lines.append(f'[{entry.owner}]')
            for hook in entry.hooks:
                lines.append(f'  {hook}')
            for attr in entry.attributes:
                lines.append(f'  {attr}')
                if attr.doc:
                    lines.append(f'      {attr.doc}')
        return '\n'.join(lines)


def _attribute_docs(protocol: type) -> dict[str, str]:
    """Docstrings written as a string expression right after an annotated attribute."""
    try:
        source = inspect.getsource(protocol)
    except (OSError, TypeError):
        return {}

    docs = {}
    previous = None
    for raw in inspect.cleandoc(source).splitlines()[1:]:
        line = raw.strip()
        if previous is not None and line[:3] in ('"""', "'''"):
            docs[previous] = line.strip('"\' ')
        name, sep, _ = line.partition(':')
        previous = name if sep and name.isidentifier() else None
    return docs
