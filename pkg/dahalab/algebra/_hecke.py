from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping
from enum import Enum
from functools import lru_cache
from typing import Any, TypeVar

from sympy import QQ
from sympy.polys.polyerrors import CoercionFailed

from ._fraction import Binomial, FactoredFraction
from ._laurent import Coefficient, Exponent, LaurentPoly, qfact
from ._params import DahaParams
from ._perm import AffinePerm, finite_perms

__all__ = [
    'NormalForm',
    'FinHeckeElement',
    'AhaElement',
    'IdempotentKind',
    'idempotent',
    'unnormalized_idempotent',
    'hf_mul',
    'aha_mul',
    'push',
    'left_word',
]
log = logging.getLogger(__name__)

Coef = Any  # LaurentPoly or FactoredFraction
Terms = dict[AffinePerm, Coef]
NF = TypeVar('NF', bound='NormalForm')


def _acc(out: dict[Any, Any], key: Any, value: Any) -> None:
    if not value:
        return
    if key in out:
        total = out[key] + value
        if total:
            out[key] = total
        else:
            del out[key]
    else:
        out[key] = value


# Bernstein commutation engine
@lru_cache(maxsize=None)
def _swap_exponents(params: DahaParams, i: int) -> tuple[int, int, Exponent, Exponent]:
    """Variable positions and extended exponents of ``x = Y_i`` and ``y = Y_{i+1}`` for the reflection s_i."""
    n = params.n
    ix = params.y_index((i - 1) % n + 1)
    iy = params.y_index(i % n + 1)
    return ix, iy, params.y_exp(i), params.y_exp(i + 1)


@lru_cache(maxsize=None)
def _difference_binomial(params: DahaParams, i: int) -> Binomial:
    """``Y_{i+1} - Y_i`` (``Y_1 - q Y_n`` for i = 0)."""
    return Binomial(params.y(i + 1) - params.y(i))


def _swap_demazure_poly(params: DahaParams, i: int, g: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """
    Split ``g T_i = T_i (s_i g) + c D_i(g)`` for a Laurent polynomial.

    With ``x = Y_i`` and ``y = Y_{i+1}``, the operator is ``D_i(g) = (g - s_i g) y / (y - x)``, which on monomials reads
    ``x^a y^b -> sum_{j < b-a} x^(a+j) y^(b-j)`` when ``a < b`` and ``-sum_{j < a-b} x^(b+j) y^(a-j)`` when ``a > b``.

    Returns:
        Tuple ``(s_i g, c D_i(g))``
    """
    ix, iy, xe, ye = _swap_exponents(params, i)
    swapped: dict[Exponent, Coefficient] = {}
    dem: dict[Exponent, Coefficient] = {}

    for exp, coef in g.terms.items():
        a, b = exp[ix], exp[iy]
        rest = tuple(e - a * p - b * r for e, p, r in zip(exp, xe, ye))
        _acc(swapped, tuple(s + b * p + a * r for s, p, r in zip(rest, xe, ye)), coef)
        if a < b:
            for j in range(b - a):
                _acc(dem, tuple(s + (a + j) * p + (b - j) * r for s, p, r in zip(rest, xe, ye)), coef)
        elif a > b:
            for j in range(a - b):
                _acc(dem, tuple(s + (b + j) * p + (a - j) * r for s, p, r in zip(rest, xe, ye)), -coef)

    space = params.space
    return LaurentPoly._raw(space, swapped), LaurentPoly._raw(space, dem) * params.c


def _swap_demazure(params: DahaParams, i: int, g: Coef) -> tuple[Coef, Coef]:
    if isinstance(g, LaurentPoly):
        return _swap_demazure_poly(params, i, g)
    if g.is_polynomial:
        sg, dg = _swap_demazure_poly(params, i, g.num)
        return FactoredFraction.from_poly(sg), FactoredFraction.from_poly(dg)

    sg = g.act(params.act_images(AffinePerm.simple(params.n, i)))
    dg = ((g - sg) * params.y(i + 1)).divide(_difference_binomial(params, i))
    return sg, dg * params.c


def right_T(params: DahaParams, terms: Mapping[AffinePerm, Coef], i: int) -> Terms:
    """``(sum T_w g_w) T_i``."""
    out: Terms = {}
    c = params.c
    for w, g in terms.items():
        sg, dg = _swap_demazure(params, i, g)
        _acc(out, w.right_simple(i), sg)
        if w.right_descent(i):
            _acc(out, w, sg * c)
        _acc(out, w, dg)
    return out


def right_pi(params: DahaParams, terms: Mapping[AffinePerm, Coef], k: int) -> Terms:
    """``(sum T_w g_w) pi^k = sum T_{w pi^k} (pi^-k > g_w)``."""
    if not k:
        return dict(terms)
    piinv = AffinePerm.pi(params.n, -k)
    pik = AffinePerm.pi(params.n, k)
    images = params.act_images(piinv)
    out: Terms = {}
    for w, g in terms.items():
        mapped = g.monomial_map(images) if isinstance(g, LaurentPoly) else g.act(images)
        _acc(out, params.normalize_perm(w.compose(pik)), mapped)
    return out


def left_T(params: DahaParams, terms: Mapping[AffinePerm, Coef], i: int) -> Terms:
    """``T_i (sum T_w g_w)``; only the Hecke part changes."""
    out: Terms = {}
    c = params.c
    for w, g in terms.items():
        _acc(out, w.left_simple(i), g)
        if w.left_descent(i):
            _acc(out, w, g * c)
    return out


def left_pi(params: DahaParams, terms: Mapping[AffinePerm, Coef], k: int) -> Terms:
    if not k:
        return dict(terms)
    pik = AffinePerm.pi(params.n, k)
    out: Terms = {}
    for w, g in terms.items():
        _acc(out, params.normalize_perm(pik.compose(w)), g)
    return out


def left_word(params: DahaParams, terms: Mapping[AffinePerm, Coef], w: AffinePerm) -> Terms:
    """``T_w (sum T_v g_v)`` with ``T_{pi^k u} = pi^k T_u``."""
    k, word = w.reduced_word()
    out = dict(terms)
    for i in reversed(word):
        out = left_T(params, out, i)
    return left_pi(params, out, k)


@lru_cache(maxsize=500_000)
def _push_cached(params: DahaParams, g: Coef, window: tuple[int, ...]) -> tuple[tuple[AffinePerm, Coef], ...]:
    w = AffinePerm(window)
    for i in range(params.n):
        if w.right_descent(i):
            prefix = dict(_push_cached(params, g, w.right_simple(i).window))
            return tuple(right_T(params, prefix, i).items())

    k = w.degree
    images = params.act_images(AffinePerm.pi(params.n, -k))
    mapped = g.monomial_map(images) if isinstance(g, LaurentPoly) else g.act(images)
    return ((w, mapped),)


def push(params: DahaParams, g: Coef, w: AffinePerm) -> Terms:
    """
    Normal ordering of ``g T_w``, i.e. the coefficients ``h_v`` with ``g T_w = sum T_v h_v``.

    Polynomials are pushed monomial by monomial (Y-part only, the base part is a scalar), and every
    intermediate prefix of the reduced word is cached.
    """
    if not isinstance(g, LaurentPoly):
        return dict(_push_cached(params, g, w.window))

    out: Terms = {}
    space = params.space
    yidx = set(params.y_indices)
    for exp, coef in g.terms.items():
        ypart = tuple(e if idx in yidx else 0 for idx, e in enumerate(exp))
        base = tuple(0 if idx in yidx else e for idx, e in enumerate(exp))
        mono = LaurentPoly._raw(space, {ypart: QQ(1)})
        for v, h in _push_cached(params, mono, w.window):
            _acc(out, v, h.shift(base, coef))
    return out


# Normal-form elements
class NormalForm:
    """
    Finite sum ``sum_w T_w g_w`` over the extended affine symmetric group with right coefficients.

    Subclasses fix the coefficient ring: Laurent polynomials in Y (and the parameters), or factored fractions.
    The SL relations ``pi^n = 1`` and ``Z1...Zn = Zprod`` are applied on construction.
    """

    _rank = 0

    def __init__(self, params: DahaParams, terms: Mapping[AffinePerm, Any] | None = None):
        self.params = params
        clean: Terms = {}
        for w, g in (terms or {}).items():
            assert w.n == params.n, f'Permutation {w} does not have rank {params.n}'
            _acc(clean, params.normalize_perm(w), self._coerce(g))
        self.terms: Terms = clean

    def _coerce(self, g: Any) -> Coef:
        if isinstance(g, int):
            g = LaurentPoly.constant(self.params.space, g)
        return self.params.normalize_poly(g)

    @classmethod
    def _raw(cls: type[NF], params: DahaParams, terms: Terms) -> NF:
        obj = cls.__new__(cls)
        obj.params = params
        obj.terms = terms
        return obj

    # Constructors
    @classmethod
    def one(cls: type[NF], params: DahaParams) -> NF:
        return cls(params, {AffinePerm.identity(params.n): 1})

    @classmethod
    def zero(cls: type[NF], params: DahaParams) -> NF:
        return cls(params, {})

    @classmethod
    def scalar(cls: type[NF], params: DahaParams, value: Any) -> NF:
        if not isinstance(value, LaurentPoly):
            value = LaurentPoly.constant(params.space, value)
        return cls(params, {AffinePerm.identity(params.n): value})

    @classmethod
    def T(cls: type[NF], params: DahaParams, i: int) -> NF:
        return cls(params, {AffinePerm.simple(params.n, i): 1})

    @classmethod
    def T_inv(cls: type[NF], params: DahaParams, i: int) -> NF:
        """``T_i^-1 = T_i - (t - t^-1)``."""
        return cls(params, {AffinePerm.simple(params.n, i): 1, AffinePerm.identity(params.n): -params.c})

    @classmethod
    def basis(cls: type[NF], params: DahaParams, w: AffinePerm, coefficient: Any = 1) -> NF:
        return cls(params, {w: coefficient})

    @classmethod
    def Y(cls: type[NF], params: DahaParams, j: int, power: int = 1) -> NF:
        """Extended generator ``Y_j^power``."""
        return cls(params, {AffinePerm.identity(params.n): params.y(j, power)})

    @classmethod
    def Y_monomial(cls: type[NF], params: DahaParams, beta: Iterable[int]) -> NF:
        return cls(params, {AffinePerm.identity(params.n): params.monomial(tuple(beta))})

    # Linear structure
    def _promote(self, other: NormalForm) -> type[NormalForm]:
        self.params.check_same(other.params)
        return type(self) if self._rank >= other._rank else type(other)

    def __add__(self: NF, other: Any) -> NF:
        if not isinstance(other, NormalForm):
            if other == 0:
                return self
            return NotImplemented
        cls = self._promote(other)
        out = {w: cls._convert(g) for w, g in self.terms.items()}
        for w, g in other.terms.items():
            _acc(out, w, cls._convert(g))
        return cls._raw(self.params, out)  # type: ignore[return-value]

    __radd__ = __add__

    def __neg__(self: NF) -> NF:
        return type(self)._raw(self.params, {w: -g for w, g in self.terms.items()})

    def __sub__(self: NF, other: Any) -> NF:
        if not isinstance(other, NormalForm):
            return NotImplemented
        return self + (-other)

    @classmethod
    def _convert(cls, g: Coef) -> Coef:
        return g

    # Multiplication
    def __mul__(self: NF, other: Any) -> NF:
        if isinstance(other, NormalForm):
            return self._product(other)  # type: ignore[return-value]
        value = self._scalar_value(other)
        if value is None:
            return NotImplemented
        return type(self)._raw(self.params, {w: r for w, g in self.terms.items() if (r := g * value)})

    def __rmul__(self: NF, other: Any) -> NF:
        value = self._scalar_value(other)
        if value is None:
            return NotImplemented
        if isinstance(value, LaurentPoly):
            assert not value.depends_on(self.params.y_indices), 'Left multiplication by Y-polynomials needs a NormalForm'
        return type(self)._raw(self.params, {w: r for w, g in self.terms.items() if (r := g * value)})

    def _scalar_value(self, other: Any) -> Any:
        if isinstance(other, (LaurentPoly, FactoredFraction)):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(self.params.space, other)
        try:
            return LaurentPoly.constant(self.params.space, QQ.convert(other))
        except CoercionFailed:
            return None

    def _product(self, other: NormalForm) -> NormalForm:
        cls = self._promote(other)
        params = self.params
        out: Terms = {}
        for v, h in other.terms.items():
            for w, g in self.terms.items():
                pushed = left_word(params, push(params, cls._convert(g), v), w)
                for y, k in pushed.items():
                    _acc(out, y, k * h)
        return cls(params, out)

    def __pow__(self: NF, power: int) -> NF:
        if power < 0:
            raise ValueError('Negative powers are only available for generators')
        result = type(self).one(self.params)
        for _ in range(power):
            result = result * self
        return result

    def right_T(self: NF, i: int) -> NF:
        return type(self)(self.params, right_T(self.params, self.terms, i))

    def right_pi(self: NF, k: int = 1) -> NF:
        return type(self)(self.params, right_pi(self.params, self.terms, k))

    def left_T(self: NF, i: int) -> NF:
        return type(self)(self.params, left_T(self.params, self.terms, i))

    def left_pi(self: NF, k: int = 1) -> NF:
        return type(self)(self.params, left_pi(self.params, self.terms, k))

    # Inspection
    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = type(self).scalar(self.params, other)
        if not isinstance(other, NormalForm):
            return NotImplemented
        if self.params != other.params:
            return False
        cls = self._promote(other)
        a = {w: cls._convert(g) for w, g in self.terms.items()}
        b = {w: cls._convert(g) for w, g in other.terms.items()}
        return a == b

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def leading(self) -> tuple[AffinePerm, Coef]:
        """Term with the unique longest T_w (ties broken by window)."""
        w = max(self.terms, key=lambda x: (x.length, x.window))
        return w, self.terms[w]

    def __repr__(self) -> str:
        return f'{type(self).__name__}({self})'

    def __str__(self) -> str:
        from ._grammar import format_element

        return format_element(self)


class AhaElement(NormalForm):
    """Element of the extended affine Hecke algebra generated by T_1..T_{n-1} and Y, in the basis ``T_w Y^beta``."""

    def __init__(self, params: DahaParams, terms: Mapping[AffinePerm, Any] | None = None):
        super().__init__(params, terms)
        for w in self.terms:
            if not w.is_finite:
                raise ValueError(f'{w} is not in the finite symmetric group')


def aha_mul(a: AhaElement, b: AhaElement) -> AhaElement:
    """Product in the affine Hecke algebra."""
    return a * b


class FinHeckeElement:
    """
    Element of the finite Hecke algebra, with coefficients in the parameter field.

    Args:
        params: algebra parameters (only n and t are used)
        terms: finite permutation mapped to a field element
    """

    def __init__(self, params: DahaParams, terms: Mapping[AffinePerm, Any] | None = None):
        self.params = params
        self.terms: dict[AffinePerm, Any] = {}
        for w, value in (terms or {}).items():
            if not w.is_finite:
                raise ValueError(f'{w} is not in the finite symmetric group')
            _acc(self.terms, w, params.field(value) if isinstance(value, int) else value)

    @classmethod
    def one(cls, params: DahaParams) -> FinHeckeElement:
        return cls(params, {AffinePerm.identity(params.n): 1})

    @classmethod
    def T(cls, params: DahaParams, i: int) -> FinHeckeElement:
        if not 1 <= i < params.n:
            raise ValueError(f'T_{i} is not a finite Hecke generator for n = {params.n}')
        return cls(params, {AffinePerm.simple(params.n, i): 1})

    def _right_T(self, terms: Mapping[AffinePerm, Any], i: int) -> dict[AffinePerm, Any]:
        c = self.params.scalar(self.params.c)
        out: dict[AffinePerm, Any] = {}
        for w, a in terms.items():
            _acc(out, w.right_simple(i), a)
            if w.right_descent(i):
                _acc(out, w, a * c)
        return out

    def __mul__(self, other: Any) -> FinHeckeElement:
        if not isinstance(other, FinHeckeElement):
            return FinHeckeElement(self.params, {w: a * other for w, a in self.terms.items()})
        self.params.check_same(other.params)
        out: dict[AffinePerm, Any] = {}
        for v, b in other.terms.items():
            partial = dict(self.terms)
            for i in v.reduced_word()[1]:
                partial = self._right_T(partial, i)
            for w, a in partial.items():
                _acc(out, w, a * b)
        return FinHeckeElement(self.params, out)

    def __rmul__(self, other: Any) -> FinHeckeElement:
        return FinHeckeElement(self.params, {w: other * a for w, a in self.terms.items()})

    def __add__(self, other: FinHeckeElement) -> FinHeckeElement:
        out = dict(self.terms)
        for w, a in other.terms.items():
            _acc(out, w, a)
        return FinHeckeElement(self.params, out)

    def __sub__(self, other: FinHeckeElement) -> FinHeckeElement:
        return self + (-1) * other

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FinHeckeElement):
            return NotImplemented
        keys = set(self.terms) | set(other.terms)
        zero = self.params.field.zero
        return all(not (self.terms.get(w, zero) - other.terms.get(w, zero)) for w in keys)

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self) -> bool:
        return bool(self.terms)

    def to_aha(self) -> AhaElement:
        """Embed into the affine Hecke algebra (coefficients must be Laurent polynomials in the base variables)."""
        space = self.params.space
        terms = {}
        for w, a in self.terms.items():
            terms[w] = LaurentPoly.from_scalar(space, self.params.field, a)
        return AhaElement(self.params, terms)

    def __str__(self) -> str:
        parts = []
        for w in sorted(self.terms):
            name = '' if w.length == 0 else f'T{w}'
            coef = str(self.terms[w].as_expr())
            parts.append(f'({coef}){" * " + name if name else ""}')
        return ' + '.join(parts) or '0'

    def __repr__(self) -> str:
        return f'FinHeckeElement({self})'


def hf_mul(a: FinHeckeElement, b: FinHeckeElement) -> FinHeckeElement:
    """Product in the finite Hecke algebra."""
    return a * b


class IdempotentKind(Enum):
    SIGN = 'SIGN'
    TRIV = 'TRIV'


def idempotent(params: DahaParams, kind: IdempotentKind | str) -> FinHeckeElement:
    """
    Sign or trivial idempotent of the finite Hecke algebra.

    - SIGN: ``1/[n]_{t^-2}! * sum_w (-t^-1)^len(w) T_w``, killed by ``T_i + t^-1``
    - TRIV: ``1/[n]_{t^2}! * sum_w t^len(w) T_w``, killed by ``T_i - t``
    """
    kind = IdempotentKind(kind) if isinstance(kind, str) else kind
    t = params.t
    if kind is IdempotentKind.SIGN:
        base, norm = -(t**-1), qfact(params.n, t**-2)
    else:
        base, norm = t, qfact(params.n, t**2)

    scale = params.field.one / params.scalar(norm)
    terms = {w: params.scalar(base**w.length) * scale for w in finite_perms(params.n)}
    return FinHeckeElement(params, terms)


def unnormalized_idempotent(params: DahaParams, kind: IdempotentKind | str) -> AhaElement:
    """The idempotent without its quantum-factorial normalization, as a polynomial element."""
    kind = IdempotentKind(kind) if isinstance(kind, str) else kind
    base = -(params.t**-1) if kind is IdempotentKind.SIGN else params.t
    return AhaElement(params, {w: base**w.length for w in finite_perms(params.n)})
