from __future__ import annotations

import logging
from collections.abc import Sequence
from enum import Enum
from functools import cached_property, lru_cache
from typing import Any

from sympy import QQ
from sympy.polys.fields import field

from ._errors import RegimeMismatch
from ._laurent import Coefficient, Exponent, LaurentPoly, VarSpace, qfact, qint
from ._perm import AffinePerm

__all__ = ['Regime', 'DahaParams', 'WeightPoint']
log = logging.getLogger(__name__)


class Regime(Enum):
    """Parameter specialization of the double affine Hecke algebra."""

    GENERIC = 'GENERIC'
    GL = 'GL'
    SL = 'SL'

    @classmethod
    def parse(cls, value: str | Regime) -> Regime:
        if isinstance(value, Regime):
            return value
        try:
            return cls[value.upper()]
        except KeyError as err:
            raise ValueError(f'Unknown regime "{value}", expected one of {[r.name for r in cls]}') from err


class DahaParams:
    """
    Rank, specialization and coefficient variables of a double affine Hecke algebra.

    The Laurent variables are the base parameters followed by ``Y1..Yn`` (``Z1..Zn`` in the SL regime).
    Fractional powers of t are realized through a base variable ``u`` with ``t = u^N``:

    - GENERIC: free ``t`` and ``q``
    - GL: ``q = t^(-2n/N)``, with base ``t`` when N divides 2n and base ``u`` otherwise
    - SL: base ``u`` standing for the root ``t^(1/N)``, with ``q = u^(-2n)`` and ``Zprod = u^(n(n - N^2))``

    Extended indices follow ``Y_{i+mn} = q^-m Y_i``; in the SL regime ``q^-1 = u^(2n)`` gives ``Z_{i+mn} = u^(2nm) Z_i``.

    Args:
        n: rank of the algebra
        N: rank of the group the specialization comes from (defaults to n)
        regime: parameter specialization
    """

    def __init__(self, n: int, N: int | None = None, regime: Regime | str = Regime.GL):
        if n < 2:
            raise ValueError(f'Rank n must be at least 2, got {n}')
        self.n = n
        self.N = N if N is not None else n
        if self.N < 1:
            raise ValueError(f'N must be positive, got {self.N}')
        self.regime = Regime.parse(regime)

        rules: dict[str, dict[str, int]]
        if self.regime is Regime.GENERIC:
            base = ['t', 'q']
            rules = {}
        elif self.regime is Regime.GL and (2 * n) % self.N == 0:
            base = ['t']
            rules = {'q': {'t': -2 * n // self.N}}
        elif self.regime is Regime.GL:
            base = ['u']
            rules = {'t': {'u': self.N}, 'q': {'u': -2 * n}}
        else:
            base = ['u']
            rules = {'t': {'u': self.N}, 'q': {'u': -2 * n}, 'Zprod': {'u': n * (n - self.N**2)}}

        self.base: tuple[str, ...] = tuple(base)
        self.y_name = 'Z' if self.regime is Regime.SL else 'Y'
        self.space = VarSpace([*base, *(f'{self.y_name}{i}' for i in range(1, n + 1))], rules)
        self.field, *_ = field(','.join(base), QQ)
        self.domain = self.field.to_domain()
        log.debug('Created %s', self)

    # Identity
    @property
    def key(self) -> tuple[int, int, Regime]:
        return (self.n, self.N, self.regime)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DahaParams):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f'DahaParams(n={self.n}, N={self.N}, regime={self.regime.name})'

    def check_same(self, other: DahaParams) -> None:
        if self != other:
            raise RegimeMismatch(f'Operands were built from {self!r} and {other!r}')

    # Variables
    @cached_property
    def t(self) -> LaurentPoly:
        return self.space.monomial('t')

    @cached_property
    def q(self) -> LaurentPoly:
        return self.space.monomial('q')

    @cached_property
    def c(self) -> LaurentPoly:
        """Hecke constant ``t - t^-1``."""
        return self.t - self.t**-1

    @cached_property
    def zprod(self) -> LaurentPoly:
        if self.regime is not Regime.SL:
            raise ValueError('Zprod only exists in the SL regime')
        return self.space.monomial('Zprod')

    @cached_property
    def q_exp(self) -> Exponent:
        return self.space.exponent('q')

    @cached_property
    def line_exp(self) -> Exponent:
        """Exponent of the step between entries on the same line: ``t^2``, or ``t^(2/N) = u^2`` in the SL regime."""
        if self.regime is Regime.SL:
            return self.space.exponent('u', 2)
        return self.space.exponent('t', 2)

    @property
    def y_indices(self) -> range:
        """Positions of ``Y1..Yn`` in the variable space."""
        return range(len(self.base), len(self.base) + self.n)

    def y_index(self, j: int) -> int:
        """Variable position of ``Y_j`` for ``1 <= j <= n``."""
        assert 1 <= j <= self.n, f'Index {j} out of range 1..{self.n}'
        return len(self.base) + j - 1

    def y_exp(self, j: int) -> Exponent:
        """Exponent vector of the extended generator ``Y_j = q^-m Y_r`` with ``j = r + mn``."""
        m, r = divmod(j - 1, self.n)
        exp = [-m * e for e in self.q_exp]
        exp[self.y_index(r + 1)] += 1
        return tuple(exp)

    def y(self, j: int, power: int = 1) -> LaurentPoly:
        return LaurentPoly.monomial(self.space, (power * e for e in self.y_exp(j)))

    def monomial(self, beta: Sequence[int], coefficient: Any = 1) -> LaurentPoly:
        """``coefficient * Y^beta``."""
        exp = [0] * self.space.arity
        for j, b in enumerate(beta, start=1):
            exp[self.y_index(j)] = b
        return LaurentPoly.monomial(self.space, exp, coefficient)

    def y_part(self, exp: Exponent) -> tuple[int, ...]:
        return tuple(exp[i] for i in self.y_indices)

    def base_part(self, exp: Exponent) -> Exponent:
        return tuple(0 if i in self.y_indices else e for i, e in enumerate(exp))

    # Actions on Y-polynomials
    def act_images(self, x: AffinePerm) -> dict[int, tuple[Coefficient, Exponent]]:
        """Monomial substitution realizing ``x > Y_j = Y_{x(j)}`` (times ``u^(-2 deg x)`` in the SL regime)."""
        return _act_images(self, x.window)

    def act(self, x: AffinePerm, poly: LaurentPoly) -> LaurentPoly:
        return poly.monomial_map(self.act_images(x))

    # Normal form helpers
    @cached_property
    def _zn_images(self) -> dict[int, tuple[Coefficient, Exponent]]:
        exp = list(self.space.exponent('Zprod'))
        for j in range(1, self.n):
            exp[self.y_index(j)] -= 1
        return {self.y_index(self.n): (QQ(1), tuple(exp))}

    def normalize_poly(self, poly: LaurentPoly) -> LaurentPoly:
        """Apply ``Z1 ... Zn = Zprod`` so no monomial contains ``Zn`` (SL regime only)."""
        if self.regime is not Regime.SL:
            return poly
        return poly.monomial_map(self._zn_images)

    def normalize_perm(self, x: AffinePerm) -> AffinePerm:
        """Apply ``pi^n = 1`` so the pi-degree lies in ``0..n-1`` (SL regime only)."""
        if self.regime is not Regime.SL:
            return x
        shift = x.degree // self.n
        if not shift:
            return x
        return AffinePerm([v - shift * self.n for v in x.window])

    # Scalars
    def scalar(self, poly: LaurentPoly) -> Any:
        """Element of the parameter field for a polynomial in the base variables."""
        return poly.to_scalar(self.field)

    def qint(self, k: int, r: LaurentPoly) -> Any:
        return self.scalar(qint(k, r))

    def qfact(self, k: int, r: LaurentPoly) -> Any:
        return self.scalar(qfact(k, r))


@lru_cache(maxsize=4096)
def _act_images(params: DahaParams, window: tuple[int, ...]) -> dict[int, tuple[Coefficient, Exponent]]:
    x = AffinePerm(window)
    shift: Exponent = (0,) * params.space.arity
    if params.regime is Regime.SL:
        shift = params.space.exponent('u', -2 * x.degree)

    images = {}
    for j in range(1, params.n + 1):
        exp = tuple(a + b for a, b in zip(params.y_exp(x(j)), shift))
        images[params.y_index(j)] = (QQ(1), exp)
    return images


class WeightPoint:
    """
    Character of the Y-subalgebra, given by the values ``a_1..a_n`` of the generators.

    Every entry is a nonzero rational times a monomial in the base variables.
    Extended values follow the same rule as the generators, ``a_{j+mn} = q^-m a_j``.

    Args:
        params: algebra parameters
        entries: values of ``Y_1..Y_n``

    Raises:
        ValueError: an entry is not a monomial in the base variables, or an SL weight violates ``a_1 ... a_n = Zprod``
    """

    def __init__(self, params: DahaParams, entries: Sequence[LaurentPoly]):
        if len(entries) != params.n:
            raise ValueError(f'Weight has {len(entries)} entries, expected {params.n}')
        for a in entries:
            if not a.is_monomial or a.depends_on(params.y_indices):
                raise ValueError(f'Weight entry {a} is not a monomial in {params.base}')
        self.params = params
        self.entries: tuple[LaurentPoly, ...] = tuple(entries)

        if params.regime is Regime.SL:
            product = LaurentPoly.constant(params.space, 1)
            for a in self.entries:
                product = product * a
            if product != params.zprod:
                raise ValueError(f'SL weight product {product} differs from Zprod = {params.zprod}')

    @classmethod
    def from_exponents(cls, params: DahaParams, exponents: Sequence[Exponent], coefficients: Sequence[Any] | None = None) -> WeightPoint:
        coefficients = coefficients or [1] * len(exponents)
        return cls(params, [LaurentPoly.monomial(params.space, e, c) for e, c in zip(exponents, coefficients)])

    @classmethod
    def qrho(cls, params: DahaParams) -> WeightPoint:
        """The weight ``(1, q, ..., q^(n-1))``."""
        return cls(params, [params.q**i for i in range(params.n)])

    @classmethod
    def trivial(cls, params: DahaParams) -> WeightPoint:
        return cls(params, [LaurentPoly.constant(params.space, 1)] * params.n)

    @cached_property
    def images(self) -> dict[int, tuple[Coefficient, Exponent]]:
        """Monomial substitution ``Y_j -> a_j``."""
        return {self.params.y_index(j): a.leading()[::-1] for j, a in enumerate(self.entries, start=1)}

    def __getitem__(self, j: int) -> LaurentPoly:
        """Extended value ``a_j`` for any integer j."""
        m, r = divmod(j - 1, self.params.n)
        return self.entries[r] * self.params.q ** (-m)

    def __len__(self) -> int:
        return len(self.entries)

    def act(self, x: AffinePerm) -> WeightPoint:
        """``(x . a)_j = a_{x^-1(j)}``, times ``u^(2 deg x)`` in the SL regime."""
        inv = x.inverse
        factor = LaurentPoly.constant(self.params.space, 1)
        if self.params.regime is Regime.SL:
            factor = self.params.space.monomial('u', 2 * x.degree)
        return WeightPoint(self.params, [self[inv(j)] * factor for j in range(1, self.params.n + 1)])

    def scalar(self, j: int) -> Any:
        return self.params.scalar(self[j])

    def line_ratio(self, i: int, j: int) -> int | None:
        """The z with ``a_i / a_j = step^z`` for the line step ``t^2`` (``t^(2/N)`` for SL), or None when not on one line."""
        ratio = self[i] * self[j] ** -1
        exp, coefficient = ratio.leading()
        if coefficient != 1:
            return None
        step = self.params.line_exp
        z = None
        for e, s in zip(exp, step):
            if s == 0:
                if e != 0:
                    return None
                continue
            if e % s:
                return None
            if z is None:
                z = e // s
            elif z != e // s:
                return None
        return z if z is not None else 0

    @property
    def descending(self) -> bool:
        n = self.params.n
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                z = self.line_ratio(i, j)
                if z is not None and z < 0:
                    return False
        return True

    @property
    def transverse(self) -> bool:
        return len(set(self.entries)) == len(self.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightPoint):
            return NotImplemented
        return self.params == other.params and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __str__(self) -> str:
        return '(' + ', '.join(str(a) for a in self.entries) + ')'

    def __repr__(self) -> str:
        return f'WeightPoint{self}'
