from __future__ import annotations

import logging
from collections.abc import Mapping
from functools import lru_cache
from typing import Any, NamedTuple

from ._hecke import AhaElement, FinHeckeElement, NormalForm, _acc
from ._laurent import LaurentPoly
from ._params import DahaParams, Regime
from ._perm import AffinePerm

__all__ = [
    'DahaElement',
    'daha_mul',
    'x_generator',
    'dual_normal_form',
    'from_dual',
    'hx_form',
    'Relation',
    'defining_relations',
]
log = logging.getLogger(__name__)

DualKey = tuple[tuple[int, ...], AffinePerm, tuple[int, ...]]
HxTerms = dict[tuple[tuple[int, ...], AffinePerm], LaurentPoly]


class DahaElement(NormalForm):
    """
    Element of the GL or SL double affine Hecke algebra in the basis ``T_w Y^beta``.

    The coefficient of ``T_w`` is a Laurent polynomial in the Y-variables and the base parameters,
    so ``terms[w] = sum_beta c_beta(t) Y^beta``.

    Example:
        >>> p = DahaParams(2, regime='GL')
        >>> str(DahaElement.T(p, 1) * DahaElement.Y(p, 1) * DahaElement.T(p, 1))
        'Y^(0,1)'
    """

    @classmethod
    def pi(cls, params: DahaParams, power: int = 1) -> DahaElement:
        return cls(params, {AffinePerm.pi(params.n, power): 1})

    @classmethod
    def X(cls, params: DahaParams, j: int, power: int = 1) -> DahaElement:
        """``X_j^power`` through the alternate presentation."""
        gen = x_generator(params, j, inverse=power < 0)
        result = cls.one(params)
        for _ in range(abs(power)):
            result = result * gen
        return result

    def by_basis(self) -> dict[tuple[AffinePerm, tuple[int, ...]], LaurentPoly]:
        """Coefficients of the basis elements ``T_w Y^beta``, as polynomials in the base variables."""
        out: dict[tuple[AffinePerm, tuple[int, ...]], LaurentPoly] = {}
        params = self.params
        for w, g in self.terms.items():
            for exp, coef in g.terms.items():
                key = (w, params.y_part(exp))
                _acc(out, key, LaurentPoly._raw(params.space, {params.base_part(exp): coef}))
        return out


def daha_mul(a: DahaElement, b: DahaElement) -> DahaElement:
    """
    Product in the double affine Hecke algebra.

    Raises:
        RegimeMismatch: operands were built from different parameters
    """
    a.params.check_same(b.params)
    return a * b


@lru_cache(maxsize=256)
def x_generator(params: DahaParams, i: int, inverse: bool = False) -> DahaElement:
    """
    Generator X_i of the alternate presentation.

    ``X_1 = pi T_{n-1}^-1 ... T_1^-1`` and ``X_{i+1} = T_i X_i T_i``, with the inverses in reversed order.
    """
    n = params.n
    if not 1 <= i <= n:
        raise ValueError(f'X_{i} does not exist for n = {n}')

    if i == 1:
        if not inverse:
            result = DahaElement.pi(params)
            for k in range(n - 1, 0, -1):
                result = result * DahaElement.T_inv(params, k)
        else:
            result = DahaElement.one(params)
            for k in range(1, n):
                result = result * DahaElement.T(params, k)
            result = result * DahaElement.pi(params, -1)
        return result

    prev = x_generator(params, i - 1, inverse)
    if inverse:
        return DahaElement.T_inv(params, i - 1) * prev * DahaElement.T_inv(params, i - 1)
    return DahaElement.T(params, i - 1) * prev * DahaElement.T(params, i - 1)


# H(X) normal form X^alpha T_sigma
def _hx_normalize(params: DahaParams, alpha: tuple[int, ...]) -> tuple[int, ...]:
    if params.regime is Regime.SL:
        return tuple(a - alpha[-1] for a in alpha)
    return alpha


def _hx_left_X(params: DahaParams, terms: HxTerms, j: int, power: int) -> HxTerms:
    out: HxTerms = {}
    for (alpha, sigma), c in terms.items():
        new = list(alpha)
        new[j - 1] += power
        _acc(out, (_hx_normalize(params, tuple(new)), sigma), c)
    return out


def _hx_left_T(params: DahaParams, terms: HxTerms, i: int) -> HxTerms:
    """``T_i X^alpha T_sigma = X^(s_i alpha) T_i T_sigma + c D_i(X^alpha) T_sigma`` for ``1 <= i < n``."""
    c = params.c
    out: HxTerms = {}
    for (alpha, sigma), coef in terms.items():
        a, b = alpha[i - 1], alpha[i]
        swapped = list(alpha)
        swapped[i - 1], swapped[i] = b, a
        swapped_t = _hx_normalize(params, tuple(swapped))
        _acc(out, (swapped_t, sigma.left_simple(i)), coef)
        if sigma.left_descent(i):
            _acc(out, (swapped_t, sigma), coef * c)

        if a != b:
            lo, hi, sign = (a, b, 1) if a < b else (b, a, -1)
            for j in range(hi - lo):
                new = list(alpha)
                new[i - 1], new[i] = lo + j, hi - j
                _acc(out, (_hx_normalize(params, tuple(new)), sigma), coef * c * sign)
    return out


def _hx_left_T_inv(params: DahaParams, terms: HxTerms, i: int) -> HxTerms:
    out = _hx_left_T(params, terms, i)
    for key, coef in terms.items():
        _acc(out, key, -(coef * params.c))
    return out


def _hx_left_pi(params: DahaParams, terms: HxTerms, power: int) -> HxTerms:
    """``pi = X_1 T_1 ... T_{n-1}`` and ``pi^-1 = T_{n-1}^-1 ... T_1^-1 X_1^-1``."""
    n = params.n
    for _ in range(power):
        for i in range(n - 1, 0, -1):
            terms = _hx_left_T(params, terms, i)
        terms = _hx_left_X(params, terms, 1, 1)
    for _ in range(-power):
        terms = _hx_left_X(params, terms, 1, -1)
        for i in range(1, n):
            terms = _hx_left_T_inv(params, terms, i)
    return terms


def _hx_left_simple(params: DahaParams, terms: HxTerms, i: int) -> HxTerms:
    if i:
        return _hx_left_T(params, terms, i)
    terms = _hx_left_pi(params, terms, -1)
    terms = _hx_left_T(params, terms, params.n - 1)
    return _hx_left_pi(params, terms, 1)


@lru_cache(maxsize=4096)
def _hx_form_cached(params: DahaParams, window: tuple[int, ...]) -> tuple[tuple[tuple[tuple[int, ...], AffinePerm], LaurentPoly], ...]:
    w = AffinePerm(window)
    k, word = w.reduced_word()
    terms: HxTerms = {((0,) * params.n, AffinePerm.identity(params.n)): LaurentPoly.constant(params.space, 1)}
    for i in reversed(word):
        terms = _hx_left_simple(params, terms, i)
    return tuple(_hx_left_pi(params, terms, k).items())


def hx_form(params: DahaParams, w: AffinePerm) -> HxTerms:
    """``T_w`` written in the basis ``X^alpha T_sigma`` of the X-side affine Hecke algebra."""
    return dict(_hx_form_cached(params, w.window))


def dual_normal_form(a: DahaElement) -> dict[DualKey, LaurentPoly]:
    """
    Rewrite an element in the basis ``X^alpha T_sigma Y^gamma``.

    Returns:
        Mapping ``(alpha, sigma, gamma)`` to a polynomial in the base variables.
    """
    params = a.params
    out: dict[DualKey, LaurentPoly] = {}
    for (w, gamma), coef in a.by_basis().items():
        for (alpha, sigma), c in hx_form(params, w).items():
            _acc(out, (alpha, sigma, gamma), c * coef)
    return out


@lru_cache(maxsize=1024)
def _x_monomial(params: DahaParams, alpha: tuple[int, ...]) -> DahaElement:
    result = DahaElement.one(params)
    for j, power in enumerate(alpha, start=1):
        if power:
            result = result * DahaElement.X(params, j, power)
    return result


def from_dual(params: DahaParams, data: Mapping[DualKey, Any]) -> DahaElement:
    """Inverse of :func:`dual_normal_form`."""
    result = DahaElement.zero(params)
    for (alpha, sigma, gamma), coef in data.items():
        term = _x_monomial(params, tuple(alpha)) * DahaElement.basis(params, sigma) * DahaElement.Y_monomial(params, gamma)
        result = result + term * coef
    return result


# Defining relations
class Relation(NamedTuple):
    name: str
    lhs: Any
    rhs: Any

    @property
    def holds(self) -> bool:
        return bool(self.lhs == self.rhs)


def _braid_relations(params: DahaParams, gen: Any, indices: range, affine: bool) -> list[Relation]:
    n = params.n
    out = []
    for i in indices:
        for j in indices:
            if j <= i:
                continue
            adjacent = (j - i) % n in (1, n - 1) if affine else j - i == 1
            if affine and n == 2:
                continue
            ti, tj = gen(i), gen(j)
            if adjacent:
                out.append(Relation(f'T{i} T{j} T{i} = T{j} T{i} T{j}', ti * tj * ti, tj * ti * tj))
            else:
                out.append(Relation(f'T{i} T{j} = T{j} T{i}', ti * tj, tj * ti))
    return out


def defining_relations(params: DahaParams, algebra: str = 'daha') -> list[Relation]:
    """
    Defining relations of the finite Hecke (``finite``), affine Hecke (``aha``) or double affine Hecke (``daha``) algebra.

    Every relation is returned with both sides multiplied out, so ``relation.holds`` certifies it.
    """
    n = params.n
    t = params.t
    relations: list[Relation] = []

    if algebra == 'finite':
        T = lambda i: FinHeckeElement.T(params, i)  # NOQA: E731 - short generator alias
        one = FinHeckeElement.one(params)
        tk = params.scalar(t)
        for i in range(1, n):
            relations.append(Relation(f'(T{i} - t)(T{i} + t^-1) = 0', (T(i) - one * tk) * (T(i) + one * (1 / tk)), one * 0))
        relations.extend(_braid_relations(params, T, range(1, n), False))
        return relations

    cls: type[NormalForm] = AhaElement if algebra == 'aha' else DahaElement
    T = lambda i: cls.T(params, i)  # NOQA: E731 - short generator alias
    Y = lambda j, p=1: cls.Y(params, j, p)  # NOQA: E731 - short generator alias
    one = cls.one(params)
    hecke = range(1, n) if algebra == 'aha' else range(n)
    y = params.y_name

    for i in hecke:
        relations.append(Relation(f'(T{i} - t)(T{i} + t^-1) = 0', (T(i) - one * t) * (T(i) + one * t**-1), cls.zero(params)))
    relations.extend(_braid_relations(params, T, hecke, algebra != 'aha'))

    for i in range(1, n):
        relations.append(Relation(f'T{i} {y}{i} T{i} = {y}{i + 1}', T(i) * Y(i) * T(i), Y(i + 1)))
    for i in hecke:
        for j in range(1, n + 1):
            if j % n not in (i % n, (i + 1) % n):
                relations.append(Relation(f'T{i} {y}{j} = {y}{j} T{i}', T(i) * Y(j), Y(j) * T(i)))
    for j in range(1, n + 1):
        relations.append(Relation(f'{y}{j} {y}{j}^-1 = 1', Y(j) * Y(j, -1), one))

    if algebra == 'aha':
        return relations

    pi = DahaElement.pi(params)
    pinv = DahaElement.pi(params, -1)
    relations.append(Relation('pi pi^-1 = 1', pi * pinv, one))
    if params.regime is Regime.SL:
        u = params.space.monomial('u')
        relations.append(Relation(f'T0 {y}{n} T0 = u^{2 * n} {y}1', T(0) * Y(n) * T(0), Y(1) * u ** (2 * n)))
        for i in range(n):
            relations.append(Relation(f'pi T{i} = T{(i + 1) % n} pi', pi * T(i), T((i + 1) % n) * pi))
        for i in range(1, n):
            relations.append(Relation(f'pi {y}{i} = u^-2 {y}{i + 1} pi', pi * Y(i), Y(i + 1) * pi * u**-2))
        relations.append(Relation(f'pi {y}{n} = u^{2 * n - 2} {y}1 pi', pi * Y(n), Y(1) * pi * u ** (2 * n - 2)))
        product = one
        for j in range(1, n + 1):
            product = product * Y(j)
        relations.append(Relation(f'{y}1 ... {y}{n} = Zprod', product, one * params.zprod))
        relations.append(Relation(f'pi^{n} = 1', pi**n, one))
    else:
        q = params.q
        relations.append(Relation(f'T0 {y}{n} T0 = q^-1 {y}1', T(0) * Y(n) * T(0), Y(1) * q**-1))
        for i in range(n - 1):
            relations.append(Relation(f'pi T{i} pi^-1 = T{i + 1}', pi * T(i) * pinv, T(i + 1)))
        relations.append(Relation(f'pi T{n - 1} pi^-1 = T0', pi * T(n - 1) * pinv, T(0)))
        for i in range(1, n):
            relations.append(Relation(f'pi {y}{i} pi^-1 = {y}{i + 1}', pi * Y(i) * pinv, Y(i + 1)))
        relations.append(Relation(f'pi {y}{n} pi^-1 = q^-1 {y}1', pi * Y(n) * pinv, Y(1) * q**-1))

    X = lambda j: DahaElement.X(params, j)  # NOQA: E731 - short generator alias
    for i in range(1, n):
        relations.append(Relation(f'T{i} X{i} T{i} = X{i + 1}', T(i) * X(i) * T(i), X(i + 1)))
        for j in range(i + 1, n + 1):
            relations.append(Relation(f'X{i} X{j} = X{j} X{i}', X(i) * X(j), X(j) * X(i)))
    for j in range(1, n + 1):
        relations.append(Relation(f'X{j} X{j}^-1 = 1', X(j) * DahaElement.X(params, j, -1), one))
    return relations
