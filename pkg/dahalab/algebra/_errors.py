from __future__ import annotations

from typing import Any

__all__ = [
    'DahaLabError',
    'ConfigError',
    'ParseError',
    'RegimeMismatch',
    'InconsistentCharacter',
    'NotDescending',
    'PoleAtWeight',
    'NotEqual',
    'CheckTimeout',
]


class DahaLabError(Exception):
    """Base class for every error raised by dahalab."""


class ConfigError(DahaLabError):
    """Invalid run configuration or usage (the CLI exits with status 2)."""


class ParseError(ConfigError):
    """Text could not be parsed by the weight or generator-word grammar."""


class RegimeMismatch(DahaLabError):
    """Operands were built from different :class:`~dahalab.algebra.DahaParams`."""


class InconsistentCharacter(DahaLabError):
    """A one-dimensional affine Hecke character violates the defining relations."""


class NotDescending(DahaLabError):
    """An operation requiring a descending weight received a weight that is not descending."""


class PoleAtWeight(DahaLabError):
    """
    A localized operator hit a pole while acting on an induced module.

    Args:
        perm: basis element T_perm whose coefficient has the pole
        factor: text form of the vanishing denominator factor(s)
    """

    def __init__(self, perm: Any, factor: str):
        super().__init__(f'pole at weight for T{perm}: {factor}')
        self.perm = perm
        self.factor = factor


class NotEqual(DahaLabError):
    """Two expressions that should agree are different (an implementation fault, not a math case)."""


class CheckTimeout(DahaLabError):
    """A check exceeded its runtime budget."""
