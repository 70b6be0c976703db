from __future__ import annotations

import itertools
import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from math import factorial
from typing import Any

from ._daha import DahaElement
from ._errors import NotDescending, NotEqual, PoleAtWeight
from ._fraction import FactoredFraction, Pole, ff_reduce
from ._grammar import format_scalar
from ._hecke import IdempotentKind, unnormalized_idempotent
from ._intertwiner import LocDahaElement, f_factor, nu_from_word, nu_word
from ._linalg import coordinates, rank
from ._module import IndVector, IndYModule, _q_steps, weight_solutions
from ._params import DahaParams, WeightPoint
from ._perm import AffinePerm, finite_perms, gamma
from ._table import EndoTable, group_name, structure_table

__all__ = [
    'Endomorphism',
    'NoPolesReport',
    'MoritaWitness',
    'gamma_for_weight',
    'nopoles_check',
    'nu_product_check',
    'build_endo',
    'compose',
    'end_ring',
    'parabolic_stabilizer',
    'multipartition_count',
    'morita_witness_search',
]
log = logging.getLogger(__name__)


def _young_stabilizer_order(pt: WeightPoint) -> int | None:
    """Order of the S_n-stabilizer when equal entries sit in consecutive positions, else None."""
    entries = pt.entries
    order = 1
    run = 1
    for i in range(1, len(entries)):
        if entries[i] == entries[i - 1]:
            run += 1
            continue
        if entries[i] in entries[:i]:
            return None
        order *= factorial(run)
        run = 1
    return order * factorial(run)


def gamma_for_weight(pt: WeightPoint, max_length: int | None = None) -> AffinePerm:
    """
    Minimal length ``gamma`` such that ``gamma Stab(a) gamma^-1`` is a standard parabolic subgroup of S_n.

    Elements ``pi^k x`` are searched breadth-first by the length of x, with ``|k| <= n^2``.
    Ties are broken by the smallest ``|k|`` and then by window.

    Raises:
        ValueError: nothing was found up to ``max_length`` (default ``2 n^2``)
    """
    params = pt.params
    n = params.n
    size = len(weight_solutions(pt, pt))
    max_length = max_length if max_length is not None else 2 * n * n

    layer = {AffinePerm.identity(n)}
    for length in range(max_length + 1):
        found = []
        for x in layer:
            for k in range(-n * n, n * n + 1):
                g = params.normalize_perm(AffinePerm.pi(n, k).compose(x))
                if _young_stabilizer_order(pt.act(g)) == size:
                    found.append(g)
        if found:
            best = min(found, key=lambda g: (abs(g.degree), g.window))
            log.debug('gamma for %s is %s (length %d)', pt, best, length)
            return best
        layer = {x.right_simple(i) for x in layer for i in range(n) if not x.right_descent(i)}

    raise ValueError(f'No gamma found for {pt} up to length {max_length}')


def parabolic_stabilizer(pt: WeightPoint) -> list[AffinePerm]:
    """Elements of S_n fixing the weight, in length order."""
    return [s for s in finite_perms(pt.params.n) if pt.act(s) == pt]


def _conjugated(params: DahaParams, w: AffinePerm, g: AffinePerm) -> AffinePerm:
    return params.normalize_perm(g.inverse.compose(w).compose(g))


@dataclass
class NoPolesReport:
    """Leading term and pole analysis of ``nu_u`` with ``u = gamma^-1 w gamma`` at the weight ``q^rho``."""

    w: AffinePerm
    u: AffinePerm
    leading_term: bool
    leading_value: bool
    pole_free: bool
    offending: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.leading_term and self.leading_value and self.pole_free

    def __str__(self) -> str:
        status = 'passed' if self.passed else 'failed'
        text = f'nopoles w={self.w} u={self.u}: {status}'
        if self.offending:
            text += ' [' + '; '.join(self.offending) + ']'
        return text


def nopoles_check(params: DahaParams, w: AffinePerm) -> NoPolesReport:
    """
    Certify that ``nu_u``, ``u = gamma^-1 w gamma``, has leading term ``T_u`` and no pole at ``q^rho``.

    Its leading coefficient must neither vanish nor have a pole there.

    Raises:
        ValueError: the parameters do not satisfy ``q = t^-2``
    """
    if params.q != params.t**-2:
        raise ValueError(f'{params!r} does not specialize q = t^-2')

    u = _conjugated(params, w, gamma(params.n))
    element = nu_word(params, u)
    pt = WeightPoint.qrho(params)

    top = max(x.length for x in element.terms)
    leaders = [x for x in element.terms if x.length == top]
    leading_term = leaders == [u]
    offending = [] if leading_term else [f'leading terms {", ".join(str(x) for x in sorted(leaders))}']

    leading_value = False
    pole_free = True
    for x, g in sorted(element.terms.items()):
        value = g.evaluate(pt.images, params.field)
        if isinstance(value, Pole):
            pole_free = False
            offending.append(f'T{x}: {ff_reduce(g)} has a pole of order {value.order}')
        elif x == u:
            leading_value = bool(value)
            if not leading_value:
                offending.append(f'T{x}: {ff_reduce(g)} vanishes')

    report = NoPolesReport(w, u, leading_term, leading_value, pole_free, offending)
    log.info('%s', report)
    return report


def nu_product_check(params: DahaParams, w: AffinePerm, v: AffinePerm, g: AffinePerm | None = None) -> bool:
    """
    Whether ``nu_{g^-1 w g} nu_{g^-1 v g} = nu_{g^-1 wv g}`` in the localized algebra.

    The left side is built along the concatenated, possibly non-reduced word.
    With ``nu_i pi^k = pi^k nu_{i-k}`` it reads ``pi^(k_w + k_v) nu_{a_1 - k_v} ... nu_{a_r - k_v} nu_{b_1} ... nu_{b_s}``.
    """
    g = g if g is not None else gamma(params.n)
    k_w, word_w = _conjugated(params, w, g).reduced_word()
    k_v, word_v = _conjugated(params, v, g).reduced_word()
    word = tuple((i - k_v) % params.n for i in word_w) + word_v
    lhs = nu_from_word(params, k_w + k_v, word)
    return lhs == nu_word(params, _conjugated(params, w.compose(v), g))


@dataclass
class Endomorphism:
    """Module endomorphism ``h (x) v -> h m`` determined by the image ``m`` of ``1 (x) v``."""

    label: AffinePerm | None
    vector: IndVector

    def __call__(self, m: IndVector) -> IndVector:
        module = self.vector.module
        out = IndVector(module)
        for x, c in m.coeffs.items():
            out = out + module.act(DahaElement.basis(module.params, x), self.vector) * c
        return out


def compose(first: Endomorphism, second: Endomorphism) -> Endomorphism:
    """``first o second``, labeled by ``second.label * first.label`` when both are labeled."""
    label = None
    if first.label is not None and second.label is not None:
        label = second.label.compose(first.label)
    return Endomorphism(label, first(second.vector))


def build_endo(
    module: IndYModule,
    w: AffinePerm,
    g: AffinePerm,
    rescale: Sequence[tuple[int, int]] = (),
) -> Endomorphism:
    """
    Endomorphism ``Phi_w`` with ``Phi_w(1 (x) v) = nu_{g^-1 w g} (x) v``.

    The intertwiner word can be rescaled on the right by f-factors ``f_{i,j}`` so its coefficients have no pole at the weight.

    Raises:
        NotDescending: the weight is not descending
        PoleAtWeight: a coefficient has a pole at the weight, so a rescale is required
        NotEqual: the image is not a weight vector of the weight
    """
    params = module.params
    if not module.weight.descending:
        raise NotDescending(f'Weight {module.weight} is not descending')

    element: LocDahaElement = nu_word(params, _conjugated(params, w, g))
    for i, j in rescale:
        element = element.rescale(FactoredFraction.from_poly(f_factor(params, i, j).poly))

    vector = module.act(element, module.generator())
    if not vector:
        raise NotEqual(f'Endomorphism for {w} vanishes on 1 (x) v')
    if not module.is_weight_vector(vector, module.weight):
        raise NotEqual(f'Image of 1 (x) v under the endomorphism for {w} is not a weight vector')
    log.debug('Phi_%s(1 (x) v) = %s', w, vector)
    return Endomorphism(w, vector)


def _table(module: IndYModule, endos: Sequence[Endomorphism], **kwargs: Any) -> EndoTable:
    support = sorted({x for e in endos for x in e.vector.coeffs})
    basis = [e.vector.to_list(support) for e in endos]

    def composition(i: int, j: int) -> list[Any]:
        image = endos[i](endos[j].vector)
        extra = set(image.coeffs) - set(support)
        if extra:
            raise ArithmeticError(f'Composition has support outside the weight space: {sorted(extra)}')
        return image.to_list(support)

    return structure_table(
        basis,
        composition,
        module.params.domain,
        str(module.weight),
        basis_text=[str(e.vector) for e in endos],
        **kwargs,
    )


def end_ring(params: DahaParams, pt: WeightPoint, g: AffinePerm | None = None) -> EndoTable:
    """
    Structure constants of ``End(Ind_Y^H(a))`` on a basis of the a-weight space.

    For a descending weight, the intertwiner endomorphisms ``Phi_w`` for w in the parabolic stabilizer of ``g . a``
    are used when they are pole-free and span the weight space; the table is then labeled by these w.
    Otherwise the basis is the kernel basis of the weight space and the table is unlabeled.
    """
    module = IndYModule(params, pt)
    space = module.ordinary_weight_space(pt)
    log.info('Weight space of %s has dimension %d', pt, len(space))

    if pt.descending and space:
        g = g if g is not None else gamma_for_weight(pt)
        stabilizer = parabolic_stabilizer(pt.act(g))
        if len(stabilizer) == len(space):
            try:
                endos = [build_endo(module, w, g) for w in stabilizer]
            except (PoleAtWeight, NotEqual) as err:
                log.info('Intertwiner basis unavailable for %s: %s', pt, err)
            else:
                support = sorted({x for e in endos for x in e.vector.coeffs})
                if rank([e.vector.to_list(support) for e in endos], params.domain) == len(endos):
                    return _table(module, endos, labels=stabilizer, group=group_name(stabilizer, params.n))
                log.info('Intertwiner vectors for %s are linearly dependent', pt)

    return _table(module, [Endomorphism(None, m) for m in space])


def multipartition_count(pt: WeightPoint) -> int:
    """Product of the partition counts ``p(|block|)`` over the blocks of entries that differ by powers of q."""
    params = pt.params
    blocks: list[list[Any]] = []
    for a in pt.entries:
        for block in blocks:
            if _q_steps(params, a * block[0] ** -1) is not None:
                block.append(a)
                break
        else:
            blocks.append([a])
    count = 1
    for size in map(len, blocks):
        count *= _partitions(size)
    return count


def _partitions(k: int) -> int:
    table = [1] + [0] * k
    for part in range(1, k + 1):
        for total in range(part, k + 1):
            table[total] += table[total - part]
    return table[k]


@dataclass
class MoritaWitness:
    """Terms ``(c, h, h')`` with ``sum c h e_- h' = 1`` for the unnormalized sign idempotent ``e_-``."""

    terms: list[tuple[Any, DahaElement, DahaElement]]

    def __str__(self) -> str:
        return ' + '.join(f'({format_scalar(c)}) ({h}) e- ({k})' for c, h, k in self.terms)


def _bounded_span(params: DahaParams, bound: int, left: bool) -> list[DahaElement]:
    """Elements ``pi^k Y^beta`` (or ``Y^beta pi^k`` on the right) with ``|k| + |beta|_1 <= bound``."""
    n = params.n
    out = []
    for k in range(-bound, bound + 1):
        rest = bound - abs(k)
        for beta in itertools.product(range(-rest, rest + 1), repeat=n):
            if sum(abs(b) for b in beta) <= rest:
                pi, y = DahaElement.pi(params, k), DahaElement.Y_monomial(params, beta)
                out.append(pi * y if left else y * pi)
    return out


def morita_witness_search(params: DahaParams, degree_bound: int) -> MoritaWitness | None:
    """
    Search ``sum_i c_i h_i e_- h_i' = 1`` with ``h_i = pi^k Y^beta`` and ``h_i' = Y^beta pi^k`` of bounded degree.

    The coefficients are found by exact linear algebra over the parameter field and the witness is re-verified
    coordinate by coordinate. None means nothing was found at this bound, which is inconclusive.
    """
    idempotent = DahaElement(params, unnormalized_idempotent(params, IdempotentKind.SIGN).terms)
    left = _bounded_span(params, degree_bound, True)
    right = _bounded_span(params, degree_bound, False)

    products = []
    pairs = []
    for h in left:
        he = h * idempotent
        for k in right:
            products.append((he * k).by_basis())
            pairs.append((h, k))

    one = (AffinePerm.identity(params.n), (0,) * params.n)
    keys = sorted({key for p in products for key in p} | {one}, key=lambda key: (key[0], key[1]))
    domain = params.domain
    columns = [[params.scalar(p[key]) if key in p else domain.zero for key in keys] for p in products]
    target = [domain.one if key == one else domain.zero for key in keys]

    coords = coordinates(target, columns, domain)
    if coords is None:
        log.info('No Morita witness with degree bound %d', degree_bound)
        return None

    check = [domain.zero] * len(keys)
    for c, column in zip(coords, columns):
        for r, value in enumerate(column):
            check[r] += c * value
    assert check == target, 'Morita witness does not reproduce 1'

    terms = [(c, *pair) for c, pair in zip(coords, pairs) if c]
    return MoritaWitness(terms)
