from __future__ import annotations

import logging
from collections.abc import Sequence
from functools import lru_cache
from typing import Any

from ._daha import DahaElement, Relation
from ._errors import NotEqual
from ._fraction import Binomial, FactoredFraction
from ._hecke import NormalForm, Terms, _acc, left_pi, left_T
from ._laurent import LaurentPoly
from ._params import DahaParams, Regime
from ._perm import AffinePerm

__all__ = [
    'LocDahaElement',
    'f_factor',
    'phi',
    'nu',
    'nu_word',
    'nu_from_word',
    'phi_word',
    'loc_mul',
    'phi_vs_nu_check',
    'ab_decompose',
    'intertwiner_relations',
]
log = logging.getLogger(__name__)


class LocDahaElement(NormalForm):
    """
    Element of the localized double affine Hecke algebra, in its normal ordering ``sum_w T_w g_w``.

    The coefficients are :class:`FactoredFraction` values in the Y-variables; the element lies in the
    unlocalized algebra exactly when every coefficient is a polynomial.
    """

    _rank = 1

    def _coerce(self, g: Any) -> FactoredFraction:
        return self._convert(LaurentPoly.constant(self.params.space, g) if isinstance(g, int) else g)

    @classmethod
    def _convert(cls, g: Any) -> FactoredFraction:
        if isinstance(g, LaurentPoly):
            return FactoredFraction.from_poly(g)
        return g  # type: ignore[no-any-return]

    @classmethod
    def from_element(cls, a: NormalForm) -> LocDahaElement:
        return cls(a.params, dict(a.terms))

    @property
    def is_polynomial(self) -> bool:
        return all(g.is_polynomial for g in self.terms.values())

    def to_daha(self) -> DahaElement:
        """
        Raises:
            ValueError: a coefficient has a denominator
        """
        if not self.is_polynomial:
            raise ValueError('Element has non-polynomial coefficients')
        return DahaElement(self.params, {w: g.num for w, g in self.terms.items()})

    def rescale(self, g: Any) -> LocDahaElement:
        """Right multiplication by a rational function."""
        return LocDahaElement(self.params, {w: c * g for w, c in self.terms.items()})


def f_factor(params: DahaParams, i: int, j: int) -> Binomial:
    """
    ``f_{i,j} = t Y_i - t^-1 Y_j`` with extended indices.

    Raises:
        ValueError: i and j are congruent modulo n
    """
    if (i - j) % params.n == 0:
        raise ValueError(f'f({i},{j}) needs indices that differ modulo {params.n}')
    return _f_factor(params, i, j)


@lru_cache(maxsize=4096)
def _f_factor(params: DahaParams, i: int, j: int) -> Binomial:
    return Binomial(params.t * params.y(i) - params.t**-1 * params.y(j), (i, j))


def _ab(params: DahaParams, i: int, renormalize: bool) -> tuple[FactoredFraction, FactoredFraction]:
    """Coefficients with ``phi_i = T_i a + b`` (or the same for ``nu_i`` when renormalized)."""
    a = FactoredFraction.from_poly(params.y(i) - params.y(i + 1))
    b = FactoredFraction.from_poly(params.c * params.y(i + 1))
    if renormalize:
        f = f_factor(params, i, i + 1)
        a, b = a.divide(f), b.divide(f)
    return a, b


def phi(params: DahaParams, i: int) -> LocDahaElement:
    """Intertwiner ``phi_i = T_i (Y_i - Y_{i+1}) + (t - t^-1) Y_{i+1}``."""
    a, b = _ab(params, i, False)
    return LocDahaElement(params, {AffinePerm.simple(params.n, i): a, AffinePerm.identity(params.n): b})


def nu(params: DahaParams, i: int) -> LocDahaElement:
    """Renormalized intertwiner ``nu_i = phi_i f_{i,i+1}^-1``."""
    a, b = _ab(params, i, True)
    return LocDahaElement(params, {AffinePerm.simple(params.n, i): a, AffinePerm.identity(params.n): b})


def _word_product(params: DahaParams, k: int, word: Sequence[int], renormalize: bool) -> LocDahaElement:
    """
    ``pi^k X_{i_1} ... X_{i_m}`` for ``X = phi`` or ``nu``, built right to left without any pushing.

    With ``E = X_{i_{k+1}} ... X_{i_m}`` and ``x = s_{i_{k+1}} ... s_{i_m}``, moving the coefficients of ``X_{i_k} = T a + b``
    through ``E`` twists them by ``x^-1``, so ``X_{i_k} E = (T E)(x^-1 > a) + E (x^-1 > b)``.
    """
    n = params.n
    terms: Terms = {AffinePerm.identity(n): FactoredFraction.from_poly(LaurentPoly.constant(params.space, 1))}
    x = AffinePerm.identity(n)
    for i in reversed(word):
        a, b = _ab(params, i, renormalize)
        images = params.act_images(x.inverse)
        a, b = a.act(images), b.act(images)
        out: Terms = {}
        for w, g in left_T(params, terms, i).items():
            _acc(out, w, g * a)
        for w, g in terms.items():
            _acc(out, w, g * b)
        terms = out
        x = AffinePerm.simple(n, i).compose(x)
    return LocDahaElement(params, left_pi(params, terms, k))


def nu_from_word(params: DahaParams, k: int, word: Sequence[int]) -> LocDahaElement:
    """``pi^k nu_{i_1} ... nu_{i_m}`` for an explicit word."""
    return _word_product(params, k, word, True)


def nu_word(params: DahaParams, w: AffinePerm) -> LocDahaElement:
    """Renormalized intertwiner ``nu_w``, computed along the reduced word of w (with ``nu_pi = pi``)."""
    k, word = w.reduced_word()
    return nu_from_word(params, k, word)


def phi_word(params: DahaParams, w: AffinePerm) -> LocDahaElement:
    """Intertwiner ``phi_w`` along the reduced word of w (with ``phi_pi = pi``)."""
    k, word = w.reduced_word()
    return _word_product(params, k, word, False)


def loc_mul(a: NormalForm, b: NormalForm) -> LocDahaElement:
    """Product in the localized algebra, ``sum_x (a T_x) g_x`` for ``b = sum_x T_x g_x``."""
    return LocDahaElement.from_element(a) * LocDahaElement.from_element(b)


def phi_vs_nu_check(params: DahaParams, w: AffinePerm) -> tuple[int, bool]:
    """
    Find the exponent alpha with ``phi_w = nu_w q^alpha prod_{(i,j) in Inv(w)} f_{i,j}``.

    Returns:
        Tuple ``(alpha, verified)``

    Raises:
        NotEqual: no power of q relates both sides
    """
    lhs = phi_word(params, w)
    product = LaurentPoly.constant(params.space, 1)
    for i, j in sorted(w.inversions()):
        product = product * f_factor(params, i, j).poly
    rhs = nu_word(params, w).rescale(product)

    lead = w if w in lhs.terms else lhs.leading()[0]
    if lead not in rhs.terms:
        raise NotEqual(f'T{lead} is missing from nu_w * prod f for w = {w}')
    top, bottom = lhs.terms[lead], rhs.terms[lead]
    if not (top.is_polynomial and bottom.is_polynomial):
        raise NotEqual(f'Leading coefficients of phi_w and nu_w * prod f are not polynomials for w = {w}')

    (e1, c1), (e2, c2) = top.num.leading(), bottom.num.leading()
    if c1 != c2:
        raise NotEqual(f'Leading coefficients differ by a non-monomial factor for w = {w}')
    diff = [a - b for a, b in zip(e1, e2)]
    alpha = _q_power(params, diff)
    if alpha is None:
        raise NotEqual(f'Leading coefficients differ by a factor that is not a power of q for w = {w}')

    verified = lhs == rhs.rescale(params.q**alpha)
    if not verified:
        raise NotEqual(f'phi_w and q^{alpha} nu_w prod f differ for w = {w}')
    log.debug('phi_w = q^%d nu_w prod f for w = %s', alpha, w)
    return alpha, verified


def _q_power(params: DahaParams, exp: Sequence[int]) -> int | None:
    alpha = None
    for e, q in zip(exp, params.q_exp):
        if q == 0:
            if e:
                return None
            continue
        if e % q:
            return None
        if alpha is None:
            alpha = e // q
        elif alpha != e // q:
            return None
    return alpha if alpha is not None else 0


def ab_decompose(params: DahaParams, i: int, j: int) -> tuple[FactoredFraction, FactoredFraction]:
    """
    Coefficients ``a_{ij} = t f_{i-n,j} / f_{ij}`` and ``b_{ij} = (t - t^-1) Y_j / f_{ij}``.

    With them ``nu_i = T_i a_{i,i+1} + b_{i,i+1}``, which requires the specialization ``q = t^-2``.

    Raises:
        ValueError: the parameters do not satisfy ``q = t^-2``
    """
    if params.q != params.t**-2:
        raise ValueError(f'a/b decomposition needs q = t^-2, which does not hold for {params!r}')
    f = f_factor(params, i, j)
    a = FactoredFraction.from_poly(params.t * f_factor(params, i - params.n, j).poly).divide(f)
    b = FactoredFraction.from_poly(params.c * params.y(j)).divide(f)
    return a, b


def intertwiner_relations(params: DahaParams) -> list[Relation]:
    """Intertwining, braid, quadratic and mixed braid relations of phi and nu, with both sides multiplied out."""
    n = params.n
    # Localized elements keep Zn as a free variable in the SL regime, so generators are built directly
    Y = lambda j: LocDahaElement.Y(params, j)  # NOQA: E731 - short generator alias
    T = lambda i: LocDahaElement.T(params, i)  # NOQA: E731 - short generator alias
    pi = LocDahaElement.basis(params, AffinePerm.pi(n))
    one = LocDahaElement.one(params)
    relations = []

    for i in range(n):
        p, v = phi(params, i), nu(params, i)
        for j in range(1, n + 1):
            sj = AffinePerm.simple(n, i)(j)
            yj = FactoredFraction.from_poly(params.y(sj))
            relations.append(Relation(f'Y{j} phi{i} = phi{i} Y{sj}', Y(j) * p, p.rescale(yj)))
            relations.append(Relation(f'Y{j} nu{i} = nu{i} Y{sj}', Y(j) * v, v.rescale(yj)))

        if params.regime is Regime.SL:
            twist = params.space.monomial('u', -2)
            relations.append(Relation(f'pi phi{i} = u^-2 phi{i + 1} pi', pi * p, phi(params, i + 1) * pi * twist))
        else:
            relations.append(Relation(f'pi phi{i} = phi{i + 1} pi', pi * p, phi(params, i + 1) * pi))
        relations.append(Relation(f'pi nu{i} = nu{i + 1} pi', pi * v, nu(params, i + 1) * pi))

        f1, f2 = f_factor(params, i, i + 1), f_factor(params, i + 1, i)
        relations.append(Relation(f'phi{i}^2 = f({i},{i + 1}) f({i + 1},{i})', p * p, one.rescale(FactoredFraction.from_poly(f1.poly * f2.poly))))
        relations.append(Relation(f'nu{i}^2 = 1', v * v, one))

    if n == 2:
        return relations

    for i in range(n):
        for j in range(i + 1, n):
            adjacent = (j - i) % n in (1, n - 1)
            pi_, pj = phi(params, i), phi(params, j)
            vi, vj = nu(params, i), nu(params, j)
            if adjacent:
                relations.append(Relation(f'phi{i} phi{j} phi{i} = phi{j} phi{i} phi{j}', pi_ * pj * pi_, pj * pi_ * pj))
                relations.append(Relation(f'nu{i} nu{j} nu{i} = nu{j} nu{i} nu{j}', vi * vj * vi, vj * vi * vj))
                relations.append(Relation(f'nu{i} T{j} nu{i} = nu{j} T{i} nu{j}', vi * T(j) * vi, vj * T(i) * vj))
                relations.append(Relation(f'nu{i} nu{j} T{i} = T{j} nu{i} nu{j}', vi * vj * T(i), T(j) * vi * vj))
            else:
                relations.append(Relation(f'phi{i} phi{j} = phi{j} phi{i}', pi_ * pj, pj * pi_))
                relations.append(Relation(f'nu{i} nu{j} = nu{j} nu{i}', vi * vj, vj * vi))

    for i in range(n):
        for j in range(n):
            if (i - j) % n not in (0, 1, n - 1):
                relations.append(Relation(f'T{i} nu{j} = nu{j} T{i}', T(i) * nu(params, j), nu(params, j) * T(i)))
    return relations
