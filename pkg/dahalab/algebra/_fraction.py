from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from math import comb
from typing import TYPE_CHECKING, Any, Union

from sympy import QQ

from ._laurent import Coefficient, Exponent, LaurentPoly

if TYPE_CHECKING:
    from ._params import WeightPoint

__all__ = ['Binomial', 'FactoredFraction', 'Pole', 'NOT_DIVISIBLE', 'binomial_divide', 'ff_reduce', 'eval_at_point']
log = logging.getLogger(__name__)

MonomialImages = Mapping[int, tuple[Coefficient, Exponent]]


class _NotDivisible:
    """Sentinel returned by :func:`binomial_divide` when the division leaves a remainder."""

    __slots__ = ()

    def __repr__(self) -> str:
        return 'NOT_DIVISIBLE'

    def __bool__(self) -> bool:
        return False


NOT_DIVISIBLE = _NotDivisible()


@dataclass(frozen=True)
class Pole:
    """Result of evaluating a fraction at a point where ``order`` denominator factors vanish."""

    order: int
    factors: tuple[str, ...] = ()

    def __str__(self) -> str:
        return f'POLE({self.order})'


class Binomial:
    """
    Two-term Laurent polynomial, stored as ``unit * core`` with ``core = 1 + r * x^d``.

    The core is normalized so that its lexicographically largest monomial is the constant 1,
    which makes two binomials that differ by a unit compare equal.
    The optional ``tag`` records the indices (i, j) of an f-factor and does not take part in comparisons.

    Args:
        poly: polynomial with exactly two terms
        tag: indices of the f-factor ``t Y_i - t^-1 Y_j`` this binomial represents

    Raises:
        ValueError: the polynomial does not have two terms or is not irreducible
    """

    __slots__ = ('poly', 'tag', 'r', 'd', 'unit', 'core')

    def __init__(self, poly: LaurentPoly, tag: tuple[int, int] | None = None):
        if len(poly) != 2:
            raise ValueError(f'A binomial needs exactly two terms, got {poly}')

        (e1, c1), (e2, c2) = sorted(poly.terms.items(), reverse=True)
        d = tuple(b - a for a, b in zip(e1, e2))
        if not any(abs(v) == 1 for v in d):
            raise ValueError(f'{poly} is not an irreducible binomial')

        self.poly = poly
        self.tag = tag
        self.r: Coefficient = c2 / c1
        self.d: Exponent = d
        self.unit: tuple[Coefficient, Exponent] = (c1, e1)
        zero = (0,) * poly.space.arity
        self.core = LaurentPoly._raw(poly.space, {zero: QQ(1), d: self.r})

    @property
    def key(self) -> tuple[Coefficient, Exponent]:
        return (self.r, self.d)

    @property
    def normalized(self) -> Binomial:
        """Binomial equal to this one's core (unit 1), keeping the tag."""
        if self.unit == (1, (0,) * len(self.d)):
            return self
        return Binomial(self.core, self.tag)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Binomial):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __str__(self) -> str:
        if self.tag is not None:
            return f'f({self.tag[0]},{self.tag[1]})'
        return f'({self.poly})'

    def __repr__(self) -> str:
        return f'Binomial({self.poly})'


def binomial_divide(p: LaurentPoly, b: Binomial) -> LaurentPoly | _NotDivisible:
    """
    Exact division of a Laurent polynomial by a binomial.

    Both operands are shifted into the polynomial ring and divided with lexicographic long division.
    Since the divisor has two terms and no monomial factor, divisibility in the Laurent ring
    is the same as divisibility of the shifted polynomials.

    Returns:
        The quotient ``p / b`` or :data:`NOT_DIVISIBLE` when the remainder is nonzero.

    Example:
        >>> from dahalab.algebra import VarSpace
        >>> space = VarSpace(['Y1', 'Y2'])
        >>> y1, y2 = space.monomial('Y1'), space.monomial('Y2')
        >>> str(binomial_divide(y1**2 - y2**2, Binomial(y1 - y2)))
        'Y1 + Y2'
    """
    space = p.space
    if not p:
        return LaurentPoly.zero(space)

    shift = tuple(max(0, -v) for v in b.d)
    lead = shift
    tail = tuple(s + v for s, v in zip(shift, b.d))
    r = b.r

    low = p.min_exponents()
    rem: dict[Exponent, Coefficient] = {tuple(e - m for e, m in zip(exp, low)): c for exp, c in p.terms.items()}
    quotient: dict[Exponent, Coefficient] = {}

    while rem:
        exp = max(rem)
        c = rem.pop(exp)
        qexp = tuple(e - s for e, s in zip(exp, lead))
        if any(v < 0 for v in qexp):
            return NOT_DIVISIBLE
        quotient[qexp] = c

        texp = tuple(q + s for q, s in zip(qexp, tail))
        value = rem.get(texp, 0) - c * r
        if value:
            rem[texp] = value
        else:
            rem.pop(texp, None)

    uc, uexp = b.unit
    offset = tuple(m + s - u for m, s, u in zip(low, shift, uexp))
    return LaurentPoly._raw(space, {tuple(a + o for a, o in zip(exp, offset)): c / uc for exp, c in quotient.items()})


Fractionlike = Union['FactoredFraction', LaurentPoly, int]


class FactoredFraction:
    """
    Rational function whose denominator is a product of irreducible binomial cores.

    Units of the denominator are absorbed into the numerator and cores dividing the numerator are cancelled,
    so every value has a single reduced representative and equality is structural.

    Args:
        num: numerator
        den: binomial factors of the denominator, either an iterable or a mapping to multiplicities
    """

    __slots__ = ('num', 'den')

    def __init__(self, num: LaurentPoly, den: Iterable[Binomial] | Mapping[Binomial, int] = ()):
        items = den.items() if isinstance(den, Mapping) else ((b, 1) for b in den)
        factors: dict[Binomial, int] = {}
        for b, mult in items:
            if mult <= 0:
                continue
            uc, uexp = b.unit
            if (uc, uexp) != (1, (0,) * num.space.arity):
                num = num.shift(tuple(-e * mult for e in uexp), QQ(1) / uc**mult)
            core = b.normalized
            factors[core] = factors.get(core, 0) + mult

        self.num = num
        self.den = factors
        self._reduce()

    @classmethod
    def _raw(cls, num: LaurentPoly, den: dict[Binomial, int]) -> FactoredFraction:
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> FactoredFraction:
        return cls._raw(p, {})

    def _reduce(self) -> None:
        if not self.num:
            self.den = {}
            return

        for b in list(self.den):
            mult = self.den[b]
            while mult:
                quotient = binomial_divide(self.num, b)
                if quotient is NOT_DIVISIBLE:
                    break
                self.num = quotient  # type: ignore[assignment]
                mult -= 1
            if mult:
                self.den[b] = mult
            else:
                del self.den[b]

    @property
    def space(self) -> Any:
        return self.num.space

    @property
    def is_polynomial(self) -> bool:
        return not self.den

    def __bool__(self) -> bool:
        return bool(self.num)

    def _other(self, other: Any) -> FactoredFraction | None:
        if isinstance(other, FactoredFraction):
            return other
        if isinstance(other, LaurentPoly):
            return FactoredFraction._raw(other, {})
        if isinstance(other, int):
            return FactoredFraction._raw(LaurentPoly.constant(self.space, other), {})
        return None

    def __add__(self, other: Any) -> FactoredFraction:
        o = self._other(other)
        if o is None:
            return NotImplemented
        if not o.num:
            return self
        if not self.num:
            return o

        den = dict(self.den)
        for b, mult in o.den.items():
            den[b] = max(den.get(b, 0), mult)

        n1, n2 = self.num, o.num
        for b, mult in den.items():
            if (m1 := mult - self.den.get(b, 0)) > 0:
                n1 = n1 * b.core**m1
            if (m2 := mult - o.den.get(b, 0)) > 0:
                n2 = n2 * b.core**m2

        result = FactoredFraction._raw(n1 + n2, den)
        result._reduce()
        return result

    __radd__ = __add__

    def __neg__(self) -> FactoredFraction:
        return FactoredFraction._raw(-self.num, dict(self.den))

    def __sub__(self, other: Any) -> FactoredFraction:
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> FactoredFraction:
        return (-self) + other

    def __mul__(self, other: Any) -> FactoredFraction:
        o = self._other(other)
        if o is None:
            return NotImplemented
        if not self.num or not o.num:
            return FactoredFraction._raw(LaurentPoly.zero(self.space), {})

        den = dict(self.den)
        for b, mult in o.den.items():
            den[b] = den.get(b, 0) + mult
        result = FactoredFraction._raw(self.num * o.num, den)
        if self.den or o.den:
            result._reduce()
        return result

    __rmul__ = __mul__

    def divide(self, b: Binomial, mult: int = 1) -> FactoredFraction:
        """Divide by ``b ** mult``."""
        return self * FactoredFraction(LaurentPoly.constant(self.space, 1), {b: mult})

    def __truediv__(self, other: Any) -> FactoredFraction:
        """
        Divide by a monomial, a binomial or a fraction whose numerator is one of those.

        Raises:
            ValueError: the divisor numerator has more than two terms
        """
        if isinstance(other, Binomial):
            return self.divide(other)
        o = self._other(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError('Division of a fraction by zero')

        inverse = FactoredFraction._raw(LaurentPoly.constant(self.space, 1), {})
        for b, mult in o.den.items():
            inverse = inverse * b.core**mult
        if o.num.is_monomial:
            inverse = inverse * o.num**-1
        elif len(o.num) == 2:
            inverse = inverse * FactoredFraction(LaurentPoly.constant(self.space, 1), [Binomial(o.num)])
        else:
            raise ValueError(f'Cannot invert the non-binomial numerator {o.num}')
        return self * inverse

    def act(self, images: MonomialImages) -> FactoredFraction:
        """Apply a monomial substitution to numerator and denominator, renormalizing the factors."""
        den: dict[Binomial, int] = {}
        num = self.num.monomial_map(images)
        for b, mult in self.den.items():
            mapped = Binomial(b.core.monomial_map(images), b.tag)
            den[mapped] = den.get(mapped, 0) + mult
        return FactoredFraction(num, den)

    def __eq__(self, other: object) -> bool:
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        return hash((self.num, frozenset(self.den.items())))

    def __str__(self) -> str:
        if not self.den:
            return str(self.num)
        den = ' * '.join(f'({b.core})' if m == 1 else f'({b.core})^{m}' for b, m in sorted(self.den.items(), key=lambda i: str(i[0].core)))
        return f'({self.num}) / ({den})'

    def __repr__(self) -> str:
        return f'FactoredFraction({self})'

    # Evaluation
    def evaluate(self, images: MonomialImages, field: Any) -> Any:
        """
        Evaluate by substituting monomials in the base variables for the Y-variables.

        Returns:
            An element of ``field`` or a :class:`Pole` counting the vanishing denominator factors.
        """
        value = field.one
        vanishing = 0
        factors = []
        for b, mult in self.den.items():
            core = b.core.monomial_map(images)
            if not core:
                vanishing += mult
                factors.append(str(b.core))
            else:
                value = value * core.to_scalar(field) ** mult
        if vanishing:
            return Pole(vanishing, tuple(factors))
        return self.num.monomial_map(images).to_scalar(field) / value

    def vanishing_order(self, images: MonomialImages) -> int:
        """
        Order of vanishing of the numerator at a point, found by substituting ``Y_i -> a_i (1 + eps)``.

        Only the total Y-degree of each term matters after the substitution, so the lowest nonzero
        eps-coefficient is found among the first ``#degrees`` binomial coefficients.
        """
        buckets: dict[int, LaurentPoly] = {}
        indices = list(images)
        for exp, c in self.num.terms.items():
            degree = sum(exp[i] for i in indices)
            term = LaurentPoly._raw(self.space, {exp: c}).monomial_map(images)
            buckets[degree] = buckets.get(degree, LaurentPoly.zero(self.space)) + term

        buckets = {d: v for d, v in buckets.items() if v}
        if not buckets:
            return -1
        for k in range(len(buckets) + 1):
            total = LaurentPoly.zero(self.space)
            for degree, value in buckets.items():
                total = total + value * _gbinom(degree, k)
            if total:
                return k
        raise AssertionError('Vanishing order exceeds the number of degree classes')


def _gbinom(s: int, k: int) -> Any:
    """Generalized binomial coefficient for possibly negative upper index."""
    if s >= 0:
        return QQ(comb(s, k))
    return QQ((-1) ** k * comb(k - s - 1, k))


def ff_reduce(x: FactoredFraction) -> FactoredFraction:
    """Return the fully reduced representative of ``x``."""
    result = FactoredFraction._raw(x.num, dict(x.den))
    result._reduce()
    return result


def eval_at_point(x: FactoredFraction | LaurentPoly, pt: WeightPoint) -> Any:
    """
    Evaluate a fraction in the Y-variables at a weight.

    Returns:
        An element of the parameter field, or a :class:`Pole` when denominator factors vanish.
    """
    if isinstance(x, LaurentPoly):
        return x.monomial_map(pt.images).to_scalar(pt.params.field)
    return ff_reduce(x).evaluate(pt.images, pt.params.field)
