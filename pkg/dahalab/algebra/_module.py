from __future__ import annotations

import itertools
import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from typing import Any, Final, Literal

from ._daha import DahaElement, dual_normal_form
from ._errors import InconsistentCharacter, NotDescending, PoleAtWeight
from ._fraction import Pole
from ._grammar import format_scalar
from ._hecke import AhaElement, IdempotentKind, NormalForm, _acc, unnormalized_idempotent
from ._intertwiner import f_factor
from ._laurent import LaurentPoly
from ._linalg import identity, kernel, matrix, rank
from ._params import DahaParams, Regime, WeightPoint
from ._perm import AffinePerm, bruhat_ideal, bruhat_leq, finite_perms, is_minimal_coset_rep

__all__ = [
    'IndVector',
    'IndYModule',
    'AhaModule',
    'AhaCharacter',
    'IndAhaModule',
    'IndShReport',
    'weight_solutions',
    'descending',
    'transverse',
    'check_triangularity',
    'check_ind_sh',
    'induce_from_aha_char',
    'classify_inversions',
    'RHO',
]
log = logging.getLogger(__name__)

RHO: Final = 'rho'


def descending(pt: WeightPoint) -> bool:
    """Whether ``a_i / a_j = t^2z`` (``t^(2z/N)`` for SL) with ``i < j`` always has ``z >= 0``."""
    return pt.descending


def transverse(pt: WeightPoint) -> bool:
    """Whether the entries are pairwise distinct."""
    return pt.transverse


def _q_steps(params: DahaParams, ratio: LaurentPoly) -> int | None:
    """The m with ``ratio = q^-m``, or None."""
    exp, coefficient = ratio.leading()
    if coefficient != 1:
        return None
    m = None
    for e, q in zip(exp, params.q_exp):
        if q == 0:
            if e:
                return None
            continue
        if e % q:
            return None
        if m is None:
            m = -e // q
        elif m != -e // q:
            return None
    return m if m is not None else 0


def weight_solutions(pt: WeightPoint, target: WeightPoint) -> list[AffinePerm]:
    """
    All x in the extended affine symmetric group with ``x . pt = target``, sorted by length.

    Since ``(x . a)_j = a_{x^-1(j)}``, every value ``x^-1(j)`` is an extended index whose entry equals ``target_j``,
    so the inverse windows are enumerated from these finite candidate sets.
    In the SL regime the pi-degree is fixed to ``0..n-1`` and its ``u^(2 deg)`` factor is taken into account.
    """
    params = pt.params
    params.check_same(target.params)
    n = params.n
    degrees = range(n) if params.regime is Regime.SL else range(1)

    found: set[AffinePerm] = set()
    for d in degrees:
        shift = params.space.monomial('u', -2 * d) if params.regime is Regime.SL else LaurentPoly.constant(params.space, 1)
        candidates: list[list[int]] = []
        for j in range(1, n + 1):
            options = []
            for r in range(1, n + 1):
                m = _q_steps(params, target[j] * shift * pt[r] ** -1)
                if m is not None:
                    options.append(r + m * n)
            candidates.append(options)

        for window in itertools.product(*candidates):
            if len({v % n for v in window}) != n:
                continue
            x = params.normalize_perm(AffinePerm(window).inverse)
            if pt.act(x) == target:
                found.add(x)

    return sorted(found)


def _evaluate(pt: WeightPoint, y: AffinePerm, g: Any) -> Any:
    """Value of a Y-coefficient at the weight; poles raise :class:`PoleAtWeight`."""
    if isinstance(g, LaurentPoly):
        return g.monomial_map(pt.images).to_scalar(pt.params.field)

    value = g.evaluate(pt.images, pt.params.field)
    if isinstance(value, Pole):
        raise PoleAtWeight(y, ' * '.join(value.factors))
    return value


class IndVector:
    """
    Vector ``sum_x c_x T_x (x) v`` of an induced module, with coefficients in the parameter field.

    Args:
        module: module the vector lives in
        coeffs: basis permutation mapped to its coefficient
    """

    def __init__(self, module: Any, coeffs: Mapping[AffinePerm, Any] | None = None):
        self.module = module
        self.coeffs: dict[AffinePerm, Any] = {}
        for x, c in (coeffs or {}).items():
            _acc(self.coeffs, x, c)

    def __add__(self, other: IndVector) -> IndVector:
        out = dict(self.coeffs)
        for x, c in other.coeffs.items():
            _acc(out, x, c)
        return IndVector(self.module, out)

    def __neg__(self) -> IndVector:
        return IndVector(self.module, {x: -c for x, c in self.coeffs.items()})

    def __sub__(self, other: IndVector) -> IndVector:
        return self + (-other)

    def __mul__(self, scalar: Any) -> IndVector:
        return IndVector(self.module, {x: c * scalar for x, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.coeffs
        if not isinstance(other, IndVector):
            return NotImplemented
        return not (self - other).coeffs

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, x: AffinePerm) -> Any:
        return self.coeffs.get(x, self.module.params.field.zero)

    def leading(self) -> AffinePerm:
        """Basis element of maximal length in the support."""
        return max(self.coeffs, key=lambda x: (x.length, x.window))

    def to_list(self, basis: Sequence[AffinePerm]) -> list[Any]:
        zero = self.module.params.field.zero
        assert set(self.coeffs) <= set(basis), 'Vector is not supported on the given basis'
        return [self.coeffs.get(x, zero) for x in basis]

    def __str__(self) -> str:
        if not self.coeffs:
            return '0'
        parts = [f'({format_scalar(self.coeffs[x])}) T{x} (x) v' for x in sorted(self.coeffs)]
        return ' + '.join(parts)

    def __repr__(self) -> str:
        return f'IndVector({self})'


class _InducedBase:
    params: DahaParams

    def vector(self, x: AffinePerm | None = None, coefficient: Any = 1) -> IndVector:
        x = x if x is not None else AffinePerm.identity(self.params.n)
        return IndVector(self, {x: self.params.field(coefficient) if isinstance(coefficient, int) else coefficient})

    def generator(self) -> IndVector:
        """The vector ``1 (x) v``."""
        return self.vector()

    def from_list(self, values: Sequence[Any], basis: Sequence[AffinePerm]) -> IndVector:
        return IndVector(self, dict(zip(basis, values)))

    def _basis_image(self, h: NormalForm, x: AffinePerm) -> dict[AffinePerm, Any]:
        raise NotImplementedError

    def act(self, h: NormalForm, m: IndVector) -> IndVector:
        """
        Action of an algebra element: normal-order ``h T_x``, then evaluate every Y-part on the inducing data.

        Raises:
            PoleAtWeight: a rational coefficient of a localized element has a pole at the weight
        """
        self.params.check_same(h.params)
        out: dict[AffinePerm, Any] = {}
        for x, c in m.coeffs.items():
            for y, value in self._basis_image(h, x).items():
                _acc(out, y, c * value)
        return IndVector(self, out)

    # Weight spaces
    def _candidates(self, target: WeightPoint) -> list[AffinePerm]:
        raise NotImplementedError

    def _ideal(self, target: WeightPoint) -> list[AffinePerm]:
        raise NotImplementedError

    def _weight_rows(self, target: WeightPoint, basis: Sequence[AffinePerm], power: int = 1) -> list[list[Any]]:
        """Stacked rows of ``(Y_j - target_j)^power`` on the span of the basis."""
        params = self.params
        domain = params.domain
        size = len(basis)
        rows: list[list[Any]] = []
        for j in range(1, params.n + 1):
            columns = [self.act(DahaElement.Y(params, j), self.vector(x)).to_list(basis) for x in basis]
            shifted = matrix([[columns[c][r] for c in range(size)] for r in range(size)], domain, size)
            shifted = shifted - identity(size, domain) * domain.convert(target.scalar(j))
            rows.extend(list(r) for r in (shifted**power).to_list())
        return rows

    def ordinary_weight_space(self, target: WeightPoint) -> list[IndVector]:
        """
        Basis of the simultaneous Y-eigenspace with eigenvalues ``target``.

        Any weight vector has a Bruhat-maximal support element x with ``x . a = target``,
        so the computation is exact on the finite order ideal generated by those x.
        """
        basis = self._ideal(target)
        if not basis:
            return []
        rows = self._weight_rows(target, basis)
        vectors = [self.from_list(v, basis) for v in kernel(rows, self.params.domain, len(basis))]
        log.debug('Weight space of dimension %d inside an ideal of size %d', len(vectors), len(basis))
        return vectors

    def generalized_weight_dim(self, target: WeightPoint) -> int:
        """Number of basis elements with diagonal weight ``target``, the generalized eigenspace dimension."""
        return len(self._candidates(target))

    def generalized_weight_space(self, target: WeightPoint) -> list[IndVector]:
        """Generalized eigenspace computed by linear algebra on the order ideal (cross-check for small cases)."""
        basis = self._ideal(target)
        if not basis:
            return []
        rows = self._weight_rows(target, basis, power=len(basis))
        return [self.from_list(v, basis) for v in kernel(rows, self.params.domain, len(basis))]

    def is_weight_vector(self, m: IndVector, target: WeightPoint) -> bool:
        for j in range(1, self.params.n + 1):
            if self.act(DahaElement.Y(self.params, j), m) != m * target.scalar(j):
                return False
        return True


class IndYModule(_InducedBase):
    """
    The double affine Hecke module induced from a character of the Y-subalgebra, with basis ``T_x (x) v``.

    Args:
        params: algebra parameters
        weight: values of ``Y_1..Y_n`` on v
    """

    def __init__(self, params: DahaParams, weight: WeightPoint):
        params.check_same(weight.params)
        self.params = params
        self.weight = weight

    def _basis_image(self, h: NormalForm, x: AffinePerm) -> dict[AffinePerm, Any]:
        product = h * type(h).basis(self.params, x)
        return {y: _evaluate(self.weight, y, g) for y, g in product.terms.items()}

    def _candidates(self, target: WeightPoint) -> list[AffinePerm]:
        return weight_solutions(self.weight, target)

    def _ideal(self, target: WeightPoint) -> list[AffinePerm]:
        ideal: set[AffinePerm] = set()
        for x in self._candidates(target):
            ideal |= bruhat_ideal(x)
        return sorted(self.params.normalize_perm(x) for x in ideal)


class AhaModule(IndYModule):
    """The n!-dimensional affine Hecke module ``Ind_Y^H(Y)(a)``, with basis ``T_w (x) v`` for w in S_n."""

    def __init__(self, params: DahaParams, weight: WeightPoint):
        super().__init__(params, weight)
        self.basis = list(finite_perms(params.n))

    def matrix_of(self, h: NormalForm) -> list[list[Any]]:
        """Matrix of an affine Hecke element in the basis ``T_w (x) v`` (column per basis vector)."""
        columns = [self.act(h, self.vector(w)).to_list(self.basis) for w in self.basis]
        size = len(self.basis)
        return [[columns[c][r] for c in range(size)] for r in range(size)]

    def span_rank(self, start: IndVector) -> int:
        """Dimension of the submodule generated by a vector, by closing its span under T_i and Y_j^(+-1)."""
        params = self.params
        generators: list[NormalForm] = [AhaElement.T(params, i) for i in range(1, params.n)]
        generators += [AhaElement.Y(params, j, p) for j in range(1, params.n + 1) for p in (1, -1)]

        domain = params.domain
        spanning = [start.to_list(self.basis)]
        current = rank(spanning, domain)
        queue = [start]
        while queue and current < len(self.basis):
            m = queue.pop(0)
            for h in generators:
                image = self.act(h, m)
                if not image:
                    continue
                candidate = spanning + [image.to_list(self.basis)]
                if (r := rank(candidate, domain)) > current:
                    spanning, current = candidate, r
                    queue.append(image)
        return current


@dataclass
class IndShReport:
    """Outcome of the certification that the sign-induced module is isomorphic to the Y-induced one."""

    weight: str
    annihilated: bool
    power_sums: bool
    rank: int
    dimension: int
    constant: Any
    expected: Any

    @property
    def generated(self) -> bool:
        return self.rank == self.dimension

    @property
    def constant_matches(self) -> bool:
        return bool(self.constant == self.expected)

    @property
    def passed(self) -> bool:
        return self.annihilated and self.power_sums and self.generated and self.constant_matches


def check_ind_sh(params: DahaParams, weight: WeightPoint) -> IndShReport:
    """
    Certify ``Ind_SH(a, sgn) = Ind_Y^H(Y)(a)`` through the universal property of the sign-induced module.

    The vector ``e_- (x) v`` must be killed by ``T_i + t^-1`` and by the power sums ``sum_i Y_i^m - a_i^m``,
    it must generate all n! dimensions, and ``g(Y) = prod_{i<j} (Y_i - a_j)`` must send it to
    ``t^(n(n-1)/2) / [n]_{t^2}! * prod_{i<j} f_{i,j}(a)`` times ``1 (x) v``.

    Raises:
        NotDescending: the weight is not descending
    """
    if not weight.descending:
        raise NotDescending(f'Weight {weight} is not descending')

    n = params.n
    t = params.t
    module = AhaModule(params, weight)
    one = module.generator()
    norm = params.qfact(n, t**-2)
    ev = module.act(unnormalized_idempotent(params, IdempotentKind.SIGN), one) * (params.field.one / norm)

    annihilated = all(not module.act(AhaElement.T(params, i) + AhaElement.scalar(params, t**-1), ev) for i in range(1, n))

    power_sums = True
    for m in range(1, n + 1):
        h = AhaElement.zero(params)
        for i in range(1, n + 1):
            h = h + AhaElement.Y(params, i, m) - AhaElement.scalar(params, weight[i] ** m)
        power_sums = power_sums and not module.act(h, ev)

    g = AhaElement.one(params)
    expected = params.scalar(t ** (n * (n - 1) // 2)) / params.qfact(n, t**2)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            g = g * (AhaElement.Y(params, i) - AhaElement.scalar(params, weight[j]))
            expected = expected * params.scalar(f_factor(params, i, j).poly.monomial_map(weight.images))
    image = module.act(g, ev)
    identity_perm = AffinePerm.identity(n)
    constant = image[identity_perm] if set(image.coeffs) <= {identity_perm} else None

    report = IndShReport(str(weight), annihilated, power_sums, module.span_rank(ev), len(module.basis), constant, expected)
    log.info('Ind SH check for %s: rank %d/%d, passed=%s', weight, report.rank, report.dimension, report.passed)
    return report


def check_triangularity(params: DahaParams, x: AffinePerm, beta: Sequence[int]) -> bool:
    """
    Whether ``Y^beta T_x = T_x (x^-1 > Y^beta) + sum_{y < x} T_y g_y`` with y strictly below x in Bruhat order.

    The diagonal term gives the eigenvalue ``(x . a)^beta`` on ``T_x (x) v``.
    """
    product = DahaElement.Y_monomial(params, beta) * DahaElement.basis(params, x)
    x = params.normalize_perm(x)
    leading = params.normalize_poly(params.act(x.inverse, params.monomial(beta)))
    if product.terms.get(x) != leading:
        return False
    return all(y == x or bruhat_leq(y, x) for y in product.terms)


@dataclass(frozen=True)
class AhaCharacter:
    """
    One-dimensional affine Hecke module: every T_i acts by ``t`` (TRIV) or ``-t^-1`` (SIGN) and Y by ``weight``.

    Raises:
        InconsistentCharacter: ``T_i Y_i T_i = Y_{i+1}`` fails, i.e. ``c_{i+1} != eps^2 c_i``
    """

    weight: WeightPoint
    kind: IdempotentKind

    def __post_init__(self) -> None:
        if isinstance(self.kind, str):
            object.__setattr__(self, 'kind', IdempotentKind(self.kind))
        eps2 = self.eigenvalue_poly**2
        for i in range(1, self.weight.params.n):
            if self.weight[i + 1] != eps2 * self.weight[i]:
                raise InconsistentCharacter(f'{self.kind.name} character needs Y{i + 1} = {eps2} Y{i}, got weight {self.weight}')

    @property
    def eigenvalue_poly(self) -> LaurentPoly:
        t = self.weight.params.t
        return t if self.kind is IdempotentKind.TRIV else -(t**-1)

    @property
    def eigenvalue(self) -> Any:
        return self.weight.params.scalar(self.eigenvalue_poly)


class IndAhaModule(_InducedBase):
    """
    The double affine Hecke module induced from a one-dimensional affine Hecke character.

    It is realized on the basis ``T_x (x) m`` for minimal coset representatives x of ``x S_n``,
    using ``T_{x sigma} = T_x T_sigma`` and ``T_sigma m = eps^len(sigma) m``.
    :meth:`to_x_basis` gives the coordinates in the PBW basis ``X^alpha (x) m``.
    """

    def __init__(self, params: DahaParams, character: AhaCharacter):
        params.check_same(character.weight.params)
        self.params = params
        self.character = character

    @property
    def weight(self) -> WeightPoint:
        return self.character.weight

    def _split(self, y: AffinePerm) -> tuple[AffinePerm, AffinePerm]:
        rep = AffinePerm(sorted(y.window))
        return rep, rep.inverse.compose(y)

    def _basis_image(self, h: NormalForm, x: AffinePerm) -> dict[AffinePerm, Any]:
        product = h * type(h).basis(self.params, x)
        eps = self.character.eigenvalue
        out: dict[AffinePerm, Any] = {}
        for y, g in product.terms.items():
            rep, sigma = self._split(y)
            _acc(out, self.params.normalize_perm(rep), _evaluate(self.weight, y, g) * eps**sigma.length)
        return out

    def _candidates(self, target: WeightPoint) -> list[AffinePerm]:
        return [x for x in weight_solutions(self.weight, target) if is_minimal_coset_rep(x)]

    def _ideal(self, target: WeightPoint) -> list[AffinePerm]:
        ideal: set[AffinePerm] = set()
        for x in self._candidates(target):
            ideal |= {self.params.normalize_perm(y) for y in bruhat_ideal(x) if is_minimal_coset_rep(y)}
        return sorted(ideal)

    def to_x_basis(self, m: IndVector) -> dict[tuple[int, ...], Any]:
        """Coordinates of a vector in the basis ``X^alpha (x) m``."""
        params = self.params
        eps = self.character.eigenvalue
        out: dict[tuple[int, ...], Any] = {}
        for x, c in m.coeffs.items():
            for (alpha, sigma, gamma), coef in dual_normal_form(DahaElement.basis(params, x)).items():
                value = params.scalar(coef) * eps**sigma.length
                value = value * params.scalar(params.monomial(gamma).monomial_map(self.weight.images))
                _acc(out, alpha, c * value)
        return out


def induce_from_aha_char(params: DahaParams, weight: WeightPoint, kind: IdempotentKind | str) -> IndAhaModule:
    """
    Induce a one-dimensional affine Hecke character to the double affine Hecke algebra.

    Raises:
        InconsistentCharacter: the character does not respect the affine Hecke relations
    """
    kind = IdempotentKind(kind) if isinstance(kind, str) else kind
    return IndAhaModule(params, AhaCharacter(weight, kind))


def classify_inversions(params: DahaParams, w: AffinePerm, relative_to: WeightPoint | Literal['rho'] = RHO) -> dict[str, list[tuple[int, int]]]:
    """
    Sort the inversions of w into vanishing, singular and neutral ones.

    Relative to a weight, ``(i, j)`` is vanishing when ``Y_i - Y_j`` is zero at the weight (a potential zero of ``nu_w``),
    singular when ``f_{i,j}`` is (a potential pole) and neutral otherwise. Extended indices follow the weight's quasi-periodicity.

    Relative to ``RHO`` the modulus rule for ``n = N`` is used: vanishing when ``j - i = 0 mod n+1`` and singular when ``j - i = n mod n+1``.

    Raises:
        ValueError: ``RHO`` with ``N != n``
    """
    out: dict[str, list[tuple[int, int]]] = {'vanishing': [], 'singular': [], 'neutral': []}
    if isinstance(relative_to, str):
        if relative_to != RHO:
            raise ValueError(f'Inversions are classified relative to a weight or "{RHO}", got "{relative_to}"')
        if params.N != params.n:
            raise ValueError(f'The modulus rule needs N = n, got N = {params.N} and n = {params.n}')
        modulus = params.n + 1
        for i, j in sorted(w.inversions()):
            residue = (j - i) % modulus
            out['vanishing' if residue == 0 else 'singular' if residue == params.n else 'neutral'].append((i, j))
        return out

    images = relative_to.images
    for i, j in sorted(w.inversions()):
        if not (params.y(i) - params.y(j)).monomial_map(images):
            out['vanishing'].append((i, j))
        elif not f_factor(params, i, j).poly.monomial_map(images):
            out['singular'].append((i, j))
        else:
            out['neutral'].append((i, j))
    return out
