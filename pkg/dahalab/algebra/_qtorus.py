"""
Quantum torus smash product ``D = K[X^+-1, Y^+-1] # S_N`` and its induced modules.

Elements are sums of ``X^alpha Y^beta sigma`` with ``Y^beta X^alpha = q^<beta,alpha> X^alpha Y^beta``
and ``sigma X^alpha sigma^-1 = X^(sigma alpha)``, ``(sigma alpha)_i = alpha_(sigma^-1(i))``.
The pairing is the dot product, or ``beta.alpha - |beta||alpha|/N`` in the SL regime,
where ``X_1 ... X_N = 1`` and ``Y_1 ... Y_N = Zprod``.
"""
from __future__ import annotations

import itertools
import logging
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Any, Tuple

from ._daha import Relation
from ._grammar import format_scalar
from ._hecke import _acc
from ._laurent import LaurentPoly
from ._linalg import kernel, matrix, rank
from ._module import _q_steps
from ._params import DahaParams, Regime, WeightPoint
from ._perm import AffinePerm, act_int, finite_perms
from ._table import EndoTable, group_name, structure_table

__all__ = [
    'QTorusElt',
    'QTIndModule',
    'QTIndVector',
    'SpringerSummand',
    'qt_mul',
    'qt_relations',
    'qt_weight_space',
    'qt_end_ring',
    'qt_y_semisimple',
    'qt_shift_bijection',
    'unit_weight',
    'partitions',
    'standard_tableaux',
    'seminormal_matrices',
    'springer_decomposition_check',
]
log = logging.getLogger(__name__)

Vec = Tuple[int, ...]
Key = Tuple[Vec, Vec, AffinePerm]


def _pairing_poly(params: DahaParams, beta: Sequence[int], alpha: Sequence[int]) -> LaurentPoly:
    """``q^<beta,alpha>`` as a monomial in the base variables."""
    dot = sum(b * a for b, a in zip(beta, alpha))
    if params.regime is not Regime.SL:
        return params.q**dot

    num = 2 * params.n * (params.N * dot - sum(beta) * sum(alpha))
    assert num % params.N == 0, f'Pairing of {beta} and {alpha} is not an integral power of u'
    return params.space.monomial('u', -num // params.N)


def _normalize(params: DahaParams, alpha: Vec, beta: Vec) -> tuple[Vec, Vec, LaurentPoly]:
    """Apply ``X_1...X_N = 1`` and ``Y_1...Y_N = Zprod`` so the last exponents vanish (SL regime only)."""
    one = LaurentPoly.constant(params.space, 1)
    if params.regime is not Regime.SL:
        return alpha, beta, one
    a, b = alpha[-1], beta[-1]
    alpha = tuple(v - a for v in alpha)
    beta = tuple(v - b for v in beta)
    return alpha, beta, params.zprod**b if b else one


def _permute(sigma: AffinePerm, vector: Sequence[int]) -> Vec:
    return act_int(sigma, vector, 0)


class QTorusElt:
    """
    Element ``sum c X^alpha Y^beta sigma`` of the quantum torus smash product, with coefficients in the parameter field.

    Args:
        params: parameters, with ``N = params.n``
        terms: ``(alpha, beta, sigma)`` mapped to coefficients
    """

    def __init__(self, params: DahaParams, terms: Mapping[Key, Any] | None = None):
        self.params = params
        self.terms: dict[Key, Any] = {}
        for (alpha, beta, sigma), c in (terms or {}).items():
            assert sigma.is_finite, f'{sigma} is not in S_{params.n}'
            alpha, beta, factor = _normalize(params, tuple(alpha), tuple(beta))
            _acc(self.terms, (alpha, beta, sigma), self._scalar(c) * params.scalar(factor))

    def _scalar(self, c: Any) -> Any:
        if isinstance(c, (int, Fraction)):
            return self.params.scalar(LaurentPoly.constant(self.params.space, c))
        if isinstance(c, LaurentPoly):
            return self.params.scalar(c)
        return c

    # Constructors
    @classmethod
    def _zero_vec(cls, params: DahaParams) -> Vec:
        return (0,) * params.n

    @classmethod
    def one(cls, params: DahaParams) -> QTorusElt:
        zero = cls._zero_vec(params)
        return cls(params, {(zero, zero, AffinePerm.identity(params.n)): 1})

    @classmethod
    def scalar(cls, params: DahaParams, value: Any) -> QTorusElt:
        zero = cls._zero_vec(params)
        return cls(params, {(zero, zero, AffinePerm.identity(params.n)): value})

    @classmethod
    def monomial(cls, params: DahaParams, alpha: Sequence[int], beta: Sequence[int], sigma: AffinePerm | None = None) -> QTorusElt:
        sigma = sigma if sigma is not None else AffinePerm.identity(params.n)
        return cls(params, {(tuple(alpha), tuple(beta), sigma): 1})

    @classmethod
    def X(cls, params: DahaParams, j: int, power: int = 1) -> QTorusElt:
        alpha = tuple(power if i == j else 0 for i in range(1, params.n + 1))
        return cls.monomial(params, alpha, cls._zero_vec(params))

    @classmethod
    def Y(cls, params: DahaParams, j: int, power: int = 1) -> QTorusElt:
        beta = tuple(power if i == j else 0 for i in range(1, params.n + 1))
        return cls.monomial(params, cls._zero_vec(params), beta)

    @classmethod
    def perm(cls, params: DahaParams, sigma: AffinePerm) -> QTorusElt:
        zero = cls._zero_vec(params)
        return cls.monomial(params, zero, zero, sigma)

    # Arithmetic
    def __add__(self, other: QTorusElt) -> QTorusElt:
        self.params.check_same(other.params)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, c)
        return QTorusElt(self.params, out)

    def __neg__(self) -> QTorusElt:
        return QTorusElt(self.params, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: QTorusElt) -> QTorusElt:
        return self + (-other)

    def __mul__(self, other: Any) -> QTorusElt:
        if isinstance(other, QTorusElt):
            return qt_mul(self, other)
        value = self._scalar(other)
        return QTorusElt(self.params, {k: c * value for k, c in self.terms.items()})

    def __rmul__(self, other: Any) -> QTorusElt:
        return self * other

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QTorusElt):
            return NotImplemented
        return self.params == other.params and not (self - other).terms

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return '0'
        parts = []
        for (alpha, beta, sigma), c in sorted(self.terms.items(), key=lambda item: (item[0][2], item[0][0], item[0][1])):
            factors = []
            if any(alpha):
                factors.append('X^(' + ','.join(map(str, alpha)) + ')')
            if any(beta):
                factors.append('Y^(' + ','.join(map(str, beta)) + ')')
            if sigma.length:
                factors.append(f's{sigma}')
            body = ' * '.join(factors) or '1'
            parts.append(body if c == self.params.field.one else f'({format_scalar(c)}) * {body}')
        return ' + '.join(parts)

    def __repr__(self) -> str:
        return f'QTorusElt({self})'


def qt_mul(a: QTorusElt, b: QTorusElt) -> QTorusElt:
    """Normal-ordered product, ``(X^a Y^b s)(X^a' Y^b' s') = q^<b, s a'> X^(a + s a') Y^(b + s b') s s'``."""
    a.params.check_same(b.params)
    params = a.params
    out: dict[Key, Any] = {}
    for (alpha, beta, sigma), c in a.terms.items():
        for (alpha2, beta2, sigma2), d in b.terms.items():
            moved_alpha = _permute(sigma, alpha2)
            moved_beta = _permute(sigma, beta2)
            twist = params.scalar(_pairing_poly(params, beta, moved_alpha))
            key = (
                tuple(x + y for x, y in zip(alpha, moved_alpha)),
                tuple(x + y for x, y in zip(beta, moved_beta)),
                sigma.compose(sigma2),
            )
            _acc(out, key, c * d * twist)
    return QTorusElt(params, out)


def qt_relations(params: DahaParams) -> list[Relation]:
    """Defining relations of the smash product, with the q-twist written out independently of the pairing."""
    n = params.n
    out = []
    one = QTorusElt.one(params)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            delta = int(i == j)
            if params.regime is Regime.SL:
                factor = params.space.monomial('u', -2 * (params.N * delta - 1) * n // params.N)
            else:
                factor = params.q**delta
            out.append(Relation(f'Y{i} X{j} = q^<e{i},e{j}> X{j} Y{i}', QTorusElt.Y(params, i) * QTorusElt.X(params, j), QTorusElt.X(params, j) * QTorusElt.Y(params, i) * factor))
            if i < j:
                out.append(Relation(f'X{i} X{j} = X{j} X{i}', QTorusElt.X(params, i) * QTorusElt.X(params, j), QTorusElt.X(params, j) * QTorusElt.X(params, i)))
                out.append(Relation(f'Y{i} Y{j} = Y{j} Y{i}', QTorusElt.Y(params, i) * QTorusElt.Y(params, j), QTorusElt.Y(params, j) * QTorusElt.Y(params, i)))
        out.append(Relation(f'X{i} X{i}^-1 = 1', QTorusElt.X(params, i) * QTorusElt.X(params, i, -1), one))

    for k in range(1, n):
        s = QTorusElt.perm(params, AffinePerm.simple(n, k))
        out.append(Relation(f's{k}^2 = 1', s * s, one))
        for j in range(1, n + 1):
            target = k + 1 if j == k else k if j == k + 1 else j
            out.append(Relation(f's{k} X{j} = X{target} s{k}', s * QTorusElt.X(params, j), QTorusElt.X(params, target) * s))
            out.append(Relation(f's{k} Y{j} = Y{target} s{k}', s * QTorusElt.Y(params, j), QTorusElt.Y(params, target) * s))
        if k + 1 < n:
            t = QTorusElt.perm(params, AffinePerm.simple(n, k + 1))
            out.append(Relation(f's{k} s{k+1} s{k} = s{k+1} s{k} s{k+1}', s * t * s, t * s * t))
    return out


def unit_weight(params: DahaParams) -> WeightPoint:
    """The weight ``1^N``, or ``(Zprod^(1/N))^N`` in the SL regime."""
    if params.regime is not Regime.SL:
        return WeightPoint.trivial(params)
    power = params.n * (params.n - params.N**2)
    if power % params.n:
        raise ValueError(f'Zprod has no n-th root in the base variable for {params!r}')
    return WeightPoint(params, [params.space.monomial('u', power // params.n)] * params.n)


@dataclass(frozen=True)
class QTIndVector:
    """Basis vector ``X^alpha sigma (x) v`` of a torus-induced module."""

    alpha: Vec
    sigma: AffinePerm

    def __str__(self) -> str:
        return 'X^(' + ','.join(map(str, self.alpha)) + f') s{self.sigma} (x) v'


class QTIndModule:
    """
    The module ``Ind_Y^D(b)``, with basis ``X^alpha sigma (x) v`` on which Y acts diagonally.

    Vectors are dictionaries from :class:`QTIndVector` to coefficients.
    """

    def __init__(self, params: DahaParams, weight: WeightPoint):
        params.check_same(weight.params)
        self.params = params
        self.weight = weight

    def basis_vector(self, alpha: Sequence[int], sigma: AffinePerm) -> QTIndVector:
        alpha, _, _ = _normalize(self.params, tuple(alpha), (0,) * self.params.n)
        return QTIndVector(alpha, sigma)

    def eigenvalue(self, b: QTIndVector) -> WeightPoint:
        """Y-weight ``q^<e_j, alpha> (sigma . b)_j`` of a basis vector."""
        moved = self.weight.act(b.sigma)
        entries = []
        for j in range(1, self.params.n + 1):
            unit = tuple(int(i == j) for i in range(1, self.params.n + 1))
            entries.append(_pairing_poly(self.params, unit, b.alpha) * moved[j])
        return WeightPoint(self.params, entries)

    def act(self, h: QTorusElt, m: Mapping[QTIndVector, Any]) -> dict[QTIndVector, Any]:
        self.params.check_same(h.params)
        params = self.params
        out: dict[QTIndVector, Any] = {}
        for b, c in m.items():
            for (alpha, beta, tau), d in h.terms.items():
                moved = _permute(tau, b.alpha)
                rho = tau.compose(b.sigma)
                twist = params.scalar(_pairing_poly(params, beta, moved))
                point = self.weight.act(rho)
                value = params.field.one
                for j, e in enumerate(beta, start=1):
                    value *= point.scalar(j) ** e
                key = self.basis_vector([x + y for x, y in zip(alpha, moved)], rho)
                _acc(out, key, c * d * twist * value)
        return out


def _solve_alpha(module: QTIndModule, sigma: AffinePerm, target: WeightPoint) -> Vec | None:
    params = module.params
    moved = module.weight.act(sigma)
    ratios = [target[j] * moved[j] ** -1 for j in range(1, params.n + 1)]

    if params.regime is Regime.SL:
        exps = []
        for r in ratios:
            exp, c = r.leading()
            if c != 1 or any(e for i, e in enumerate(exp) if i != params.space.index('u')):
                return None
            exps.append(exp[params.space.index('u')])
        alpha = []
        for e in exps:
            if (exps[-1] - e) % (2 * params.n):
                return None
            alpha.append((exps[-1] - e) // (2 * params.n))
        return tuple(alpha)

    steps = [_q_steps(params, r) for r in ratios]
    if any(s is None for s in steps):
        return None
    return tuple(-s for s in steps)  # type: ignore[operator]


def qt_weight_space(module: QTIndModule, target: WeightPoint) -> list[QTIndVector]:
    """Basis vectors of weight ``target``, one for each sigma whose twisted weight reaches it."""
    out = []
    for sigma in finite_perms(module.params.n):
        alpha = _solve_alpha(module, sigma, target)
        if alpha is None:
            continue
        b = module.basis_vector(alpha, sigma)
        if module.eigenvalue(b) == target:
            out.append(b)
    return out


def qt_end_ring(params: DahaParams, weight: WeightPoint) -> EndoTable:
    """
    Structure constants of ``End(Ind_Y^D(b))`` on the basis ``Phi_sigma(1 (x) v) = X^alpha sigma (x) v`` of its b-weight space.

    The table is labeled by the permutations, so ``Phi_w o Phi_u = Phi_uw`` identifies the opposite group algebra.
    """
    module = QTIndModule(params, weight)
    basis = qt_weight_space(module, weight)
    one = params.field.one
    coords = [[one if b == c else params.field.zero for c in basis] for b in basis]

    def composition(i: int, j: int) -> list[Any]:
        source = basis[j]
        image = module.act(QTorusElt.monomial(params, source.alpha, (0,) * params.n, source.sigma), {basis[i]: one})
        if set(image) - set(basis):
            raise ArithmeticError('Composition leaves the weight space')
        return [image.get(b, params.field.zero) for b in basis]

    labels = [b.sigma for b in basis]
    log.info('Torus weight space of %s has dimension %d', weight, len(basis))
    return structure_table(
        coords,
        composition,
        params.domain,
        str(weight),
        labels=labels,
        group=group_name(labels, params.n),
        basis_text=[str(b) for b in basis],
    )


def _box(n: int, bound: int) -> Iterator[Vec]:
    for beta in itertools.product(range(-bound, bound + 1), repeat=n):
        if sum(abs(b) for b in beta) <= bound:
            yield beta


def qt_y_semisimple(module: QTIndModule, bound: int = 1) -> bool:
    """Whether every ``Y_j`` maps each basis vector with ``|alpha|_1 <= bound`` to a multiple of itself."""
    params = module.params
    for alpha in _box(params.n, bound):
        for sigma in finite_perms(params.n):
            b = module.basis_vector(alpha, sigma)
            for j in range(1, params.n + 1):
                if set(module.act(QTorusElt.Y(params, j), {b: params.field.one})) != {b}:
                    return False
    return True


def qt_shift_bijection(module: QTIndModule, alpha: Sequence[int], sigma: AffinePerm, bound: int = 1) -> bool:
    """
    Check that ``X^a s (x) v' -> X^a s X^alpha sigma (x) v`` matches bases of ``Ind(b')`` and ``Ind(b)``.

    Here ``b'`` is the weight of ``X^alpha sigma (x) v``; basis vectors with ``|a|_1 <= bound`` must map to distinct
    nonzero multiples of basis vectors of the same weight.
    """
    params = module.params
    seed = module.basis_vector(alpha, sigma)
    shifted = QTIndModule(params, module.eigenvalue(seed))
    seen = set()
    for a in _box(params.n, bound):
        for s in finite_perms(params.n):
            source = shifted.basis_vector(a, s)
            image = module.act(QTorusElt.monomial(params, source.alpha, (0,) * params.n, s), {seed: params.field.one})
            if len(image) != 1:
                return False
            (target, _), = image.items()
            if target in seen or module.eigenvalue(target) != shifted.eigenvalue(source):
                return False
            seen.add(target)
    return True


# Irreducible representations of S_N
def partitions(n: int, largest: int | None = None) -> list[tuple[int, ...]]:
    """Partitions of n in decreasing lexicographic order."""
    largest = n if largest is None else largest
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        out.extend((first, *rest) for rest in partitions(n - first, first))
    return out


def standard_tableaux(shape: Sequence[int]) -> list[tuple[tuple[int, ...], ...]]:
    """Standard Young tableaux of a shape, as tuples of rows."""
    total = sum(shape)
    out = []

    def fill(rows: list[list[int]], k: int) -> None:
        if k > total:
            out.append(tuple(tuple(r) for r in rows))
            return
        for r, size in enumerate(shape):
            if len(rows[r]) < size and (r == 0 or len(rows[r - 1]) > len(rows[r])):
                rows[r].append(k)
                fill(rows, k + 1)
                rows[r].pop()

    fill([[] for _ in shape], 1)
    return out


def _content(tableau: Sequence[Sequence[int]]) -> dict[int, int]:
    return {k: col - row for row, entries in enumerate(tableau) for col, k in enumerate(entries)}


def _swap(tableau: Sequence[Sequence[int]], k: int) -> tuple[tuple[int, ...], ...]:
    swap = {k: k + 1, k + 1: k}
    return tuple(tuple(swap.get(v, v) for v in row) for row in tableau)


def seminormal_matrices(params: DahaParams, shape: Sequence[int]) -> list[list[list[Any]]]:
    """
    Matrices of ``s_1 .. s_(N-1)`` on the Specht module in Young's seminormal form.

    With ``r = c(k+1) - c(k)`` the content difference in T and ``T' = s_k T``,
    ``s_k v_T = v_T / r + v_T'`` when ``r > 0`` and ``s_k v_T = v_T / r + (1 - 1/r^2) v_T'`` otherwise.
    The term in ``v_T'`` is dropped when T' is not standard, which only happens for ``r = +-1``.
    """
    tableaux = standard_tableaux(shape)
    index = {tab: i for i, tab in enumerate(tableaux)}
    size = len(tableaux)
    out = []
    for k in range(1, sum(shape)):
        m = [[params.field.zero] * size for _ in range(size)]
        for col, tab in enumerate(tableaux):
            content = _content(tab)
            r = Fraction(1, content[k + 1] - content[k])
            m[col][col] = _field(params, r)
            other = index.get(_swap(tab, k))
            if other is not None:
                m[other][col] = _field(params, 1 if r > 0 else 1 - r * r)
        out.append(m)
    return out


def _field(params: DahaParams, value: Fraction | int) -> Any:
    value = Fraction(value)
    return params.field.one * value.numerator / value.denominator


def _matmul(a: list[list[Any]], b: list[list[Any]], params: DahaParams) -> list[list[Any]]:
    return (matrix(a, params.domain) * matrix(b, params.domain)).to_list()


def _representation(params: DahaParams, generators: list[list[list[Any]]], sigma: AffinePerm) -> list[list[Any]]:
    size = len(generators[0]) if generators else 1
    result = [[params.field.one if r == c else params.field.zero for c in range(size)] for r in range(size)]
    for i in sigma.reduced_word()[1]:
        result = _matmul(result, generators[i - 1], params)
    return result


def _commutant_dim(params: DahaParams, generators: list[list[list[Any]]], size: int) -> int:
    """Dimension of ``{A : A M = M A}`` for all generator matrices M."""
    rows = []
    for m in generators:
        for r in range(size):
            for c in range(size):
                row = [params.field.zero] * (size * size)
                for k in range(size):
                    row[r * size + k] += m[k][c]
                    row[k * size + c] -= m[r][k]
                rows.append(row)
    return len(kernel(rows, params.domain, size * size))


@dataclass
class SpringerSummand:
    """Certificate for one summand ``L_lambda (x) S^lambda`` of ``Ind_Y^D(1^N)``."""

    shape: tuple[int, ...]
    dimension: int
    multiplicity: Any
    commutant: int
    cyclic: bool
    weight_space: bool
    generates: bool

    @property
    def passed(self) -> bool:
        return not (self.multiplicity - self.dimension) and self.commutant == 1 and self.cyclic and self.weight_space and self.generates

    def __str__(self) -> str:
        shape = '(' + ','.join(map(str, self.shape)) + ')'
        status = 'simple' if self.passed else 'not certified'
        return f'L{shape}: dim S = {self.dimension}, multiplicity {format_scalar(self.multiplicity)}, {status}'


class _SpechtInduced:
    """``L_lambda = Ind_Gamma^D(1^N (x) S^lambda)`` with basis ``X^beta (x) u_T``."""

    def __init__(self, params: DahaParams, reps: Mapping[AffinePerm, list[list[Any]]], size: int):
        self.params = params
        self.reps = reps
        self.size = size
        self.unit = unit_weight(params)

    def key(self, beta: Sequence[int], col: int) -> tuple[Vec, int]:
        beta, _, _ = _normalize(self.params, tuple(beta), (0,) * self.params.n)
        return beta, col

    def act(self, h: QTorusElt, m: Mapping[tuple[Vec, int], Any]) -> dict[tuple[Vec, int], Any]:
        params = self.params
        out: dict[tuple[Vec, int], Any] = {}
        for (beta, col), c in m.items():
            for (alpha, b, tau), d in h.terms.items():
                moved = _permute(tau, beta)
                scale = c * d * params.scalar(_pairing_poly(params, b, moved))
                for j, e in enumerate(b, start=1):
                    scale *= self.unit.scalar(j) ** e
                rep = self.reps[tau]
                for row in range(self.size):
                    if rep[row][col]:
                        _acc(out, self.key([x + y for x, y in zip(alpha, moved)], row), scale * rep[row][col])
        return out


def _summand(params: DahaParams, shape: tuple[int, ...], regular: dict[AffinePerm, Any], bound: int) -> SpringerSummand:
    n = params.n
    one = params.field.one
    generators = seminormal_matrices(params, shape)
    size = len(standard_tableaux(shape))
    elements = list(finite_perms(n))
    reps = {s: _representation(params, generators, s) for s in elements}

    total = params.field.zero
    for s in elements:
        inverse = reps[s.inverse]
        total += regular[s] * sum((inverse[i][i] for i in range(size)), params.field.zero)
    multiplicity = total / factorial(n)

    cyclic = True
    for col in range(size):
        orbit = [[reps[s][row][col] for row in range(size)] for s in elements]
        cyclic = cyclic and rank(orbit, params.domain) == size

    module = _SpechtInduced(params, reps, size)
    zero = (0,) * n
    weight_space = True
    generates = True
    for beta in _box(n, bound):
        for col in range(size):
            vector = {module.key(beta, col): one}
            # Y_j acts by q^<e_j, beta> times the unit weight, which is the unit weight only for beta = 0
            eigen = []
            for j in range(1, n + 1):
                image = module.act(QTorusElt.Y(params, j), vector)
                if set(image) != set(vector):
                    weight_space = False
                    break
                eigen.append(image[module.key(beta, col)])
            else:
                at_unit = eigen == [module.unit.scalar(j) for j in range(1, n + 1)]
                weight_space = weight_space and at_unit == (module.key(beta, col)[0] == zero)

            back = QTorusElt.monomial(params, [-b for b in beta], zero)
            generates = generates and module.act(back, vector) == {module.key(zero, col): one}

    return SpringerSummand(shape, size, multiplicity, _commutant_dim(params, generators, size), cyclic, weight_space, generates)


def springer_decomposition_check(N: int, regime: Regime | str = Regime.GL, bound: int = 2) -> list[SpringerSummand]:
    """
    Decompose the ``1^N``-weight space ``K[S_N]`` of ``Ind_Y^D(1^N)`` into Specht modules and certify each ``L_lambda``.

    The regular character is read off the module action of ``S_N`` on ``sigma (x) v``.
    Simplicity of ``L_lambda`` is certified on the weight vectors ``X^beta (x) u_T`` with ``|beta|_1 <= bound``:
    their weights only reach ``1^N`` at ``beta = 0``, ``X^-beta`` brings them back to ``1 (x) u_T``,
    and ``S^lambda`` is cyclic on every basis vector with a one-dimensional commutant.

    Raises:
        ValueError: N is larger than 4
    """
    if N > 4:
        raise ValueError(f'Springer decomposition is only available for N <= 4, got {N}')
    params = DahaParams(N, N, regime)
    module = QTIndModule(params, unit_weight(params))
    basis = qt_weight_space(module, module.weight)

    regular = {}
    for s in finite_perms(N):
        trace = params.field.zero
        for b in basis:
            trace += module.act(QTorusElt.perm(params, s), {b: params.field.one}).get(b, params.field.zero)
        regular[s] = trace

    summands = [_summand(params, shape, regular, bound) for shape in partitions(N)]
    for s in summands:
        log.info('%s', s)
    return summands
