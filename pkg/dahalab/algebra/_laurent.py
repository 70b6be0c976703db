from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator, Mapping, Sequence
from typing import Any, Union

from sympy import QQ
from sympy.polys.polyerrors import CoercionFailed

__all__ = ['VarSpace', 'LaurentPoly', 'Exponent', 'qint', 'qfact', 'qbinom']
log = logging.getLogger(__name__)

Exponent = tuple[int, ...]
Coefficient = Any  # element of sympy's QQ domain
Scalarlike = Union[int, Coefficient]


class VarSpace:
    """
    Ordered list of free Laurent variables, together with derived symbols that specialize to monomials in them.

    Derived symbols can only refer to free variables, so the specialization rules are acyclic by construction
    and resolving a monomial twice gives the same exponent vector.

    Args:
        names: free variables, in the order used for the lexicographic monomial order
        rules: derived symbol name mapped to ``{free variable: exponent}``

    Example:
        >>> space = VarSpace(['u', 'Y1', 'Y2'], {'t': {'u': 2}, 'q': {'u': -4}})
        >>> space.exponent('q', 2)
        (-8, 0, 0)
    """

    def __init__(self, names: Sequence[str], rules: Mapping[str, Mapping[str, int]] | None = None):
        self.names: tuple[str, ...] = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError(f'Duplicate variable names: {self.names}')

        self.__index = {name: idx for idx, name in enumerate(self.names)}
        self.rules: dict[str, dict[str, int]] = {}
        for symbol, target in (rules or {}).items():
            if symbol in self.__index:
                raise ValueError(f'Derived symbol "{symbol}" is also a free variable')
            for name in target:
                if name not in self.__index:
                    raise ValueError(f'Rule for "{symbol}" refers to "{name}", which is not a free variable')
            self.rules[symbol] = dict(target)

    @property
    def arity(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.__index[name]

    def __contains__(self, name: str) -> bool:
        return name in self.__index or name in self.rules

    def exponent(self, name: str, power: int = 1) -> Exponent:
        """Exponent vector of ``name ** power``, resolving derived symbols through their rules."""
        exp = [0] * self.arity
        if name in self.__index:
            exp[self.__index[name]] = power
        elif name in self.rules:
            for target, value in self.rules[name].items():
                exp[self.__index[target]] += value * power
        else:
            raise KeyError(f'Unknown symbol "{name}"')
        return tuple(exp)

    def resolve(self, powers: Mapping[str, int]) -> Exponent:
        """Exponent vector of a product of (free or derived) symbol powers."""
        exp = [0] * self.arity
        for name, power in powers.items():
            for idx, value in enumerate(self.exponent(name, power)):
                exp[idx] += value
        return tuple(exp)

    def monomial(self, name: str, power: int = 1, coefficient: Scalarlike = 1) -> LaurentPoly:
        return LaurentPoly.monomial(self, self.exponent(name, power), coefficient)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VarSpace):
            return NotImplemented
        return self.names == other.names and self.rules == other.rules

    def __hash__(self) -> int:
        return hash((self.names, tuple(sorted((k, tuple(sorted(v.items()))) for k, v in self.rules.items()))))

    def __repr__(self) -> str:
        rules = ', '.join(f'{k}={LaurentPoly.monomial(self, self.exponent(k))}' for k in self.rules)
        return f'VarSpace({", ".join(self.names)}{"; " + rules if rules else ""})'


def _coef(value: Scalarlike) -> Coefficient:
    if isinstance(value, int):
        return QQ(value)
    return QQ.convert(value)


class LaurentPoly:
    """
    Sparse multivariate Laurent polynomial with rational coefficients over a :class:`VarSpace`.

    Values are immutable: every operation returns a new polynomial and no zero coefficient is ever stored.
    """

    __slots__ = ('space', 'terms', '_hash')

    def __init__(self, space: VarSpace, terms: Mapping[Exponent, Scalarlike] | None = None):
        self.space = space
        clean: dict[Exponent, Coefficient] = {}
        for exp, value in (terms or {}).items():
            assert len(exp) == space.arity, f'Exponent {exp} does not match the arity of {space}'
            c = _coef(value)
            if c:
                clean[tuple(exp)] = c
        self.terms: dict[Exponent, Coefficient] = clean
        self._hash: int | None = None

    @classmethod
    def _raw(cls, space: VarSpace, terms: dict[Exponent, Coefficient]) -> LaurentPoly:
        """Build from terms that are already clean (no zeros, QQ coefficients)."""
        obj = cls.__new__(cls)
        obj.space = space
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, space: VarSpace) -> LaurentPoly:
        return cls._raw(space, {})

    @classmethod
    def constant(cls, space: VarSpace, value: Scalarlike = 1) -> LaurentPoly:
        return cls(space, {(0,) * space.arity: value})

    @classmethod
    def monomial(cls, space: VarSpace, exp: Iterable[int], coefficient: Scalarlike = 1) -> LaurentPoly:
        return cls(space, {tuple(exp): coefficient})

    # Inspection
    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Exponent, Coefficient]]:
        return iter(self.terms.items())

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    @property
    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def leading(self) -> tuple[Exponent, Coefficient]:
        """Lexicographically largest term (with the VarSpace's variable order)."""
        exp = max(self.terms)
        return exp, self.terms[exp]

    def min_exponents(self) -> Exponent:
        return tuple(min(col) for col in zip(*self.terms)) if self.terms else (0,) * self.space.arity

    def depends_on(self, indices: Iterable[int]) -> bool:
        idx = tuple(indices)
        return any(exp[i] for exp in self.terms for i in idx)

    # Arithmetic
    def _other(self, other: Any) -> LaurentPoly | None:
        if isinstance(other, LaurentPoly):
            if other.space is not self.space and other.space != self.space:
                raise ValueError(f'Cannot combine polynomials over {self.space} and {other.space}')
            return other
        try:
            return LaurentPoly.constant(self.space, other)
        except (TypeError, CoercionFailed):
            return None

    def __add__(self, other: Any) -> LaurentPoly:
        o = self._other(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for exp, c in o.terms.items():
            value = terms.get(exp, 0) + c
            if value:
                terms[exp] = value
            else:
                terms.pop(exp, None)
        return LaurentPoly._raw(self.space, terms)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw(self.space, {exp: -c for exp, c in self.terms.items()})

    def __sub__(self, other: Any) -> LaurentPoly:
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other: Any) -> LaurentPoly:
        o = self._other(other)
        if o is None:
            return NotImplemented
        terms: dict[Exponent, Coefficient] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                value = terms.get(exp, 0) + c1 * c2
                if value:
                    terms[exp] = value
                else:
                    terms.pop(exp, None)
        return LaurentPoly._raw(self.space, terms)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> LaurentPoly:
        if power < 0:
            if not self.is_monomial:
                raise ValueError('Only monomials can be raised to a negative power')
            exp, c = next(iter(self.terms.items()))
            return LaurentPoly._raw(self.space, {tuple(power * e for e in exp): QQ(1) / c ** (-power)})

        result = LaurentPoly.constant(self.space, 1)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def shift(self, exp: Iterable[int], coefficient: Scalarlike = 1) -> LaurentPoly:
        """Multiply by the monomial ``coefficient * x^exp``."""
        e = tuple(exp)
        c = _coef(coefficient)
        if not c:
            return LaurentPoly.zero(self.space)
        return LaurentPoly._raw(self.space, {tuple(a + b for a, b in zip(k, e)): v * c for k, v in self.terms.items()})

    def monomial_map(self, images: Mapping[int, tuple[Coefficient, Exponent]]) -> LaurentPoly:
        """
        Substitute variables by monomials.

        Args:
            images: variable index mapped to ``(coefficient, exponent)``; unlisted variables are kept
        """
        terms: dict[Exponent, Coefficient] = {}
        for exp, c in self.terms.items():
            new = list(exp)
            coef = c
            for idx, (ic, iexp) in images.items():
                power = exp[idx]
                if not power:
                    continue
                new[idx] -= power
                coef = coef * (ic**power if power > 0 else QQ(1) / ic ** (-power))
                for k, v in enumerate(iexp):
                    if v:
                        new[k] += v * power
            key = tuple(new)
            value = terms.get(key, 0) + coef
            if value:
                terms[key] = value
            else:
                terms.pop(key, None)
        return LaurentPoly._raw(self.space, terms)

    # Comparison
    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self.space == other.space and self.terms == other.terms
        if isinstance(other, int):
            return self.terms == LaurentPoly.constant(self.space, other).terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # Conversion
    def to_scalar(self, field: Any) -> Any:
        """
        Convert a polynomial in the field's variables to an element of the sympy fraction field ``field``.

        Raises:
            ValueError: the polynomial depends on a variable the field does not have
        """
        names = [str(s) for s in field.symbols]
        positions = [self.space.index(name) for name in names]
        others = [i for i in range(self.space.arity) if i not in positions]
        if self.depends_on(others):
            raise ValueError(f'{self} is not a scalar over {names}')
        if not self.terms:
            return field.zero

        exps = {tuple(exp[p] for p in positions): c for exp, c in self.terms.items()}
        low = tuple(min(0, *col) for col in zip(*exps))
        ring = field.ring
        numer = ring.from_dict({tuple(e - m for e, m in zip(exp, low)): c for exp, c in exps.items()})
        denom = ring.from_dict({tuple(-m for m in low): QQ(1)})
        return field.new(numer, denom)

    @classmethod
    def from_scalar(cls, space: VarSpace, field: Any, value: Any) -> LaurentPoly:
        """
        Convert a field element whose denominator is a monomial back to a Laurent polynomial.

        Raises:
            ValueError: the denominator is not a monomial
        """
        names = [str(s) for s in field.symbols]
        positions = [space.index(name) for name in names]
        dterms = value.denom.terms()
        if len(dterms) != 1:
            raise ValueError(f'{value} has a non-monomial denominator')
        dexp, dc = dterms[0]

        terms: dict[Exponent, Coefficient] = {}
        for nexp, nc in value.numer.terms():
            exp = [0] * space.arity
            for p, a, b in zip(positions, nexp, dexp):
                exp[p] = a - b
            terms[tuple(exp)] = nc / dc
        return cls(space, terms)

    # Text
    def __str__(self) -> str:
        if not self.terms:
            return '0'

        parts = []
        for exp in sorted(self.terms, reverse=True):
            c = self.terms[exp]
            factors = [name if e == 1 else f'{name}^{e}' for name, e in zip(self.space.names, exp) if e]
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append(' * '.join(factors))
            elif c == -1:
                parts.append('-' + ' * '.join(factors))
            else:
                parts.append(' * '.join([str(c), *factors]))

        text = parts[0]
        for part in parts[1:]:
            text += f' - {part[1:]}' if part.startswith('-') else f' + {part}'
        return text

    def __repr__(self) -> str:
        return f'LaurentPoly({self})'


def qint(k: int, r: LaurentPoly) -> LaurentPoly:
    """
    Unbalanced quantum integer.

    Args:
        k: non-negative integer
        r: base of the quantum integer (typically ``t**2`` or ``t**-2``)

    Returns:
        ``1 + r + ... + r^(k-1)``
    """
    if k < 0:
        raise ValueError(f'Quantum integers are only defined for k >= 0, got {k}')
    result = LaurentPoly.zero(r.space)
    power = LaurentPoly.constant(r.space, 1)
    for _ in range(k):
        result = result + power
        power = power * r
    return result


def qfact(k: int, r: LaurentPoly) -> LaurentPoly:
    """Quantum factorial ``[k]_r! = [1]_r [2]_r ... [k]_r``."""
    result = LaurentPoly.constant(r.space, 1)
    for j in range(1, k + 1):
        result = result * qint(j, r)
    return result


def qbinom(k: int, j: int, r: LaurentPoly) -> LaurentPoly:
    """Quantum binomial coefficient, computed with the recursion ``C(k, j) = C(k-1, j-1) + r^j C(k-1, j)``."""
    if j < 0 or j > k:
        return LaurentPoly.zero(r.space)

    row = [LaurentPoly.constant(r.space, 1)]
    for m in range(1, k + 1):
        new = [LaurentPoly.constant(r.space, 1)]
        for i in range(1, m):
            new.append(row[i - 1] + r**i * row[i])
        new.append(LaurentPoly.constant(r.space, 1))
        row = new
    return row[j]
