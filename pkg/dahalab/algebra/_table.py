from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from ._grammar import format_scalar
from ._linalg import coordinates, kernel
from ._perm import AffinePerm

__all__ = ['EndoTable', 'Identification', 'IdentificationKind', 'identify', 'group_name', 'structure_table']
log = logging.getLogger(__name__)


class IdentificationKind(Enum):
    GROUP_ALGEBRA = 'GROUP_ALGEBRA'
    NILPOTENT_WITNESS = 'NILPOTENT_WITNESS'
    UNKNOWN = 'UNKNOWN'


@dataclass
class EndoTable:
    """
    Structure constants of an endomorphism ring, ``e_i e_j = sum_k constants[i][j][k] e_k``.

    The product is composition, ``e_i e_j = e_i o e_j``.
    When ``labels`` is set, ``e_i`` is the endomorphism attached to the group element ``labels[i]``.
    """

    weight: str
    constants: list[list[list[Any]]]
    domain: Any
    labels: list[AffinePerm] | None = None
    group: str | None = None
    basis_text: list[str] = field(default_factory=list)

    @property
    def dimension(self) -> int:
        return len(self.constants)

    def product(self, a: Sequence[Any], b: Sequence[Any]) -> list[Any]:
        d = self.dimension
        out = [self.domain.zero] * d
        for i in range(d):
            if not a[i]:
                continue
            for j in range(d):
                if not b[j]:
                    continue
                c = a[i] * b[j]
                for k, value in enumerate(self.constants[i][j]):
                    if value:
                        out[k] += c * value
        return out

    def unit(self, i: int) -> list[Any]:
        return [self.domain.one if k == i else self.domain.zero for k in range(self.dimension)]

    def is_associative(self) -> bool:
        d = self.dimension
        for i in range(d):
            for j in range(d):
                ij = self.constants[i][j]
                for k in range(d):
                    if self.product(ij, self.unit(k)) != self.product(self.unit(i), self.constants[j][k]):
                        return False
        return True

    def identity(self) -> list[Any] | None:
        """Coordinates of the unit element, found by solving ``e x = x`` for all basis elements, or None."""
        d = self.dimension
        # Rows: for every (j, k), sum_i e_i c_ijk = delta_jk
        rows = []
        rhs = []
        for j in range(d):
            for k in range(d):
                rows.append([self.constants[i][j][k] for i in range(d)])
                rhs.append(self.domain.one if j == k else self.domain.zero)
        columns = [[row[i] for row in rows] for i in range(d)]
        return coordinates(rhs, columns, self.domain)

    def trace(self, a: Sequence[Any]) -> Any:
        """Trace of left multiplication by a."""
        total = self.domain.zero
        for k in range(self.dimension):
            total += self.product(a, self.unit(k))[k]
        return total

    def radical(self) -> list[list[Any]]:
        """Basis of the kernel of the trace form ``(a, b) -> tr(L_ab)``, which is the radical in characteristic 0."""
        d = self.dimension
        traces = [self.trace(self.unit(k)) for k in range(d)]
        gram = [[sum((self.constants[i][j][k] * traces[k] for k in range(d)), self.domain.zero) for j in range(d)] for i in range(d)]
        return kernel(gram, self.domain, d)

    def nilpotency_index(self, a: Sequence[Any]) -> int | None:
        """Smallest k with ``a^k = 0`` (up to the dimension plus one), or None."""
        power = list(a)
        for k in range(1, self.dimension + 2):
            if all(not v for v in power):
                return k
            power = self.product(power, a)
        return None

    @property
    def semisimple(self) -> bool:
        return not self.radical()

    def text(self) -> list[str]:
        lines = []
        for i in range(self.dimension):
            for j in range(self.dimension):
                terms = [f'({format_scalar(c)}) e{k}' for k, c in enumerate(self.constants[i][j]) if c]
                lines.append(f'e{i} * e{j} = ' + (' + '.join(terms) or '0'))
        return lines


@dataclass
class Identification:
    kind: IdentificationKind
    group: str | None = None
    witness: list[Any] | None = None
    nilpotency: int | None = None

    def __str__(self) -> str:
        if self.kind is IdentificationKind.GROUP_ALGEBRA:
            return 'End ≅ K' if self.group == '1' else f'End ≅ K[{self.group}]^op'
        if self.kind is IdentificationKind.NILPOTENT_WITNESS:
            witness = ', '.join(format_scalar(c) for c in self.witness or [])
            return f'End has a nilpotent element ({witness}) with nilpotency index {self.nilpotency}'
        return 'End is not identified'


def group_name(labels: Sequence[AffinePerm], n: int) -> str:
    """
    Name of a subgroup of S_n, as a product of symmetric groups when it is a standard parabolic subgroup.

    Example:
        >>> group_name([AffinePerm([1, 2, 3]), AffinePerm([2, 1, 3])], 3)
        'S_2 x S_1'
    """
    elements = set(labels)
    simple = [i for i in range(1, n) if AffinePerm.simple(n, i) in elements]
    blocks = []
    size = 1
    for i in range(1, n):
        if i in simple:
            size += 1
        else:
            blocks.append(size)
            size = 1
    blocks.append(size)

    order = 1
    for b in blocks:
        for k in range(2, b + 1):
            order *= k
    if order != len(elements) or not all(x.is_finite for x in elements):
        return f'W({len(elements)})'
    if len(blocks) == 1:
        return f'S_{n}'
    return ' x '.join(f'S_{b}' for b in blocks)


def structure_table(basis: Sequence[Sequence[Any]], compose: Any, domain: Any, weight: str, **kwargs: Any) -> EndoTable:
    """
    Structure constants from basis vectors (as coordinate lists) and a composition returning coordinate lists.

    Raises:
        ArithmeticError: a composition leaves the span of the basis
    """
    d = len(basis)
    constants: list[list[list[Any]]] = []
    for i in range(d):
        row = []
        for j in range(d):
            coords = coordinates(compose(i, j), basis, domain)
            if coords is None:
                raise ArithmeticError(f'Composition e{i} o e{j} is not in the span of the weight space')
            row.append(coords)
        constants.append(row)
    return EndoTable(weight, constants, domain, **kwargs)


def identify(table: EndoTable) -> Identification:
    """
    Recognize the opposite group algebra of the labels, or a nilpotent element of the radical.

    With labels, the table must satisfy ``e_w o e_u = e_{uw}`` element by element.
    """
    if table.labels is not None:
        index = {w: i for i, w in enumerate(table.labels)}
        matches = True
        for i, w in enumerate(table.labels):
            for j, u in enumerate(table.labels):
                k = index.get(u.compose(w))
                if k is None or table.constants[i][j] != table.unit(k):
                    matches = False
                    break
            if not matches:
                break
        if matches:
            return Identification(IdentificationKind.GROUP_ALGEBRA, table.group)
        log.info('Labeled table for %s does not match the opposite group algebra', table.weight)

    radical = table.radical()
    if radical:
        witness = radical[0]
        return Identification(IdentificationKind.NILPOTENT_WITNESS, witness=witness, nilpotency=table.nilpotency_index(witness))
    if table.dimension == 1 and table.identity() is not None:
        return Identification(IdentificationKind.GROUP_ALGEBRA, '1')
    return Identification(IdentificationKind.UNKNOWN)
