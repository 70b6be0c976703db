from __future__ import annotations

import itertools
import logging
from collections.abc import Iterator, Sequence
from functools import cache, cached_property

__all__ = [
    'AffinePerm',
    'translation',
    'gamma',
    'act_int',
    'bruhat_leq',
    'bruhat_ideal',
    'finite_perms',
    'is_minimal_coset_rep',
    'inversion_bijections',
]
log = logging.getLogger(__name__)


class AffinePerm:
    """
    Element of the extended affine symmetric group in window notation.

    The window ``(w(1), ..., w(n))`` determines the bijection of the integers through ``w(i + mn) = w(i) + mn``.

    Args:
        window: images of 1..n, pairwise distinct modulo n

    Example:
        >>> u = AffinePerm([5, 6, -5])
        >>> u.length, u.degree
        (8, 0)
        >>> u.reduced_word()
        (0, (1, 2, 0, 1, 2, 0, 1, 2))
    """

    def __init__(self, window: Sequence[int]):
        self.window: tuple[int, ...] = tuple(int(v) for v in window)
        self.n = len(self.window)
        if self.n == 0:
            raise ValueError('An affine permutation needs a non-empty window')
        if len({v % self.n for v in self.window}) != self.n:
            raise ValueError(f'Window {list(self.window)} is not pairwise distinct modulo {self.n}')

    # Constructors
    @classmethod
    def identity(cls, n: int) -> AffinePerm:
        return cls(range(1, n + 1))

    @classmethod
    def pi(cls, n: int, power: int = 1) -> AffinePerm:
        return cls([i + power for i in range(1, n + 1)])

    @classmethod
    def simple(cls, n: int, i: int) -> AffinePerm:
        """Simple reflection s_i, with i taken modulo n."""
        i %= n
        window = list(range(1, n + 1))
        if i == 0:
            window[0], window[-1] = 0, n + 1
        else:
            window[i - 1], window[i] = i + 1, i
        return cls(window)

    @classmethod
    def from_word(cls, n: int, word: Sequence[int], pi_power: int = 0) -> AffinePerm:
        """Element ``pi^k s_{i_1} ... s_{i_m}``."""
        w = cls.pi(n, pi_power)
        for i in word:
            w = w.right_simple(i)
        return w

    # Evaluation
    def __call__(self, i: int) -> int:
        m, r = divmod(i - 1, self.n)
        return self.window[r] + m * self.n

    @cached_property
    def degree(self) -> int:
        """The pi-degree ``(sum w(i) - sum i) / n``."""
        return (sum(self.window) - self.n * (self.n + 1) // 2) // self.n

    @property
    def is_finite(self) -> bool:
        return sorted(self.window) == list(range(1, self.n + 1))

    # Group structure
    def __mul__(self, other: AffinePerm) -> AffinePerm:
        return self.compose(other)

    def compose(self, other: AffinePerm) -> AffinePerm:
        """``(self o other)(i) = self(other(i))``."""
        if self.n != other.n:
            raise ValueError(f'Cannot compose permutations of different rank ({self.n} and {other.n})')
        return AffinePerm([self(v) for v in other.window])

    @cached_property
    def inverse(self) -> AffinePerm:
        window = [0] * self.n
        for i, v in enumerate(self.window, start=1):
            m, r = divmod(v - 1, self.n)
            window[r] = i - m * self.n
        return AffinePerm(window)

    def right_simple(self, i: int) -> AffinePerm:
        """``self * s_i``, computed directly on the window."""
        i %= self.n
        window = list(self.window)
        if i == 0:
            window[0], window[-1] = self.window[-1] - self.n, self.window[0] + self.n
        else:
            window[i - 1], window[i] = window[i], window[i - 1]
        return AffinePerm(window)

    def left_simple(self, i: int) -> AffinePerm:
        """``s_i * self``."""
        return AffinePerm.simple(self.n, i).compose(self)

    def conjugate(self, g: AffinePerm) -> AffinePerm:
        """``g^-1 * self * g``."""
        return g.inverse.compose(self).compose(g)

    # Combinatorics
    def right_descent(self, i: int) -> bool:
        """Whether ``len(self * s_i) < len(self)``."""
        i %= self.n
        return self(i) > self(i + 1)

    def left_descent(self, i: int) -> bool:
        """Whether ``len(s_i * self) < len(self)``."""
        return self.inverse.right_descent(i)

    @cached_property
    def length(self) -> int:
        n = self.n
        return sum(abs((self.window[j] - self.window[i]) // n) for i in range(n) for j in range(i + 1, n))

    def inversions(self) -> frozenset[tuple[int, int]]:
        """
        Pairs ``(i, j)`` with ``1 <= i <= n``, ``i < j`` and ``w(i) > w(j)``.

        For each residue class ``j0 + mn`` the condition only holds for ``m < (w(i) - w(j0)) / n``, so the scan is finite.
        """
        result = set()
        for i in range(1, self.n + 1):
            wi = self(i)
            for j0 in range(i + 1, i + self.n):
                diff = wi - self(j0)
                m = 0
                while m * self.n < diff:
                    result.add((i, j0 + m * self.n))
                    m += 1
        return frozenset(result)

    def reduced_word(self) -> tuple[int, tuple[int, ...]]:
        """
        Reduced expression ``self = pi^k s_{i_1} ... s_{i_m}``, found by repeatedly stripping the smallest right descent.

        Returns:
            Tuple ``(k, (i_1, ..., i_m))``
        """
        return _reduced_word(self.window)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AffinePerm):
            return NotImplemented
        return self.window == other.window

    def __lt__(self, other: AffinePerm) -> bool:
        return (self.length, self.window) < (other.length, other.window)

    def __hash__(self) -> int:
        return hash(self.window)

    def __str__(self) -> str:
        return '[' + ','.join(str(v) for v in self.window) + ']'

    def __repr__(self) -> str:
        return f'AffinePerm({list(self.window)})'

    @property
    def word_str(self) -> str:
        """Reduced word as ``pi^k . s1 s2 s0``."""
        k, word = self.reduced_word()
        letters = ' '.join(f's{i}' for i in word)
        if k == 0:
            return letters or 'e'
        prefix = 'pi' if k == 1 else f'pi^{k}'
        return f'{prefix} . {letters}' if letters else prefix


@cache
def _reduced_word(window: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    w = AffinePerm(window)
    word: list[int] = []
    while True:
        for i in range(w.n):
            if w.right_descent(i):
                w = w.right_simple(i)
                word.append(i)
                break
        else:
            break
    return w.degree, tuple(reversed(word))


def translation(beta: Sequence[int]) -> AffinePerm:
    """Translation ``i -> i + n * beta_i``."""
    n = len(beta)
    return AffinePerm([i + n * b for i, b in enumerate(beta, start=1)])


def gamma(n: int) -> AffinePerm:
    """Translation by ``(0, -1, ..., 1 - n)``."""
    return translation([-i for i in range(n)])


def act_int(w: AffinePerm, b: Sequence[int], p: int = 1) -> tuple[int, ...]:
    """
    Left action on integer vectors, ``(w . b)_i = b_{w^-1(i)}`` with quasi-periodic entries ``b_{i+mn} = b_i - mp``.

    Example:
        >>> act_int(AffinePerm.simple(2, 0), (3, 7))
        (8, 2)
    """
    if len(b) != w.n:
        raise ValueError(f'Vector of length {len(b)} does not match rank {w.n}')
    inv = w.inverse
    out = []
    for i in range(1, w.n + 1):
        m, r = divmod(inv(i) - 1, w.n)
        out.append(b[r] - m * p)
    return tuple(out)


@cache
def bruhat_ideal(y: AffinePerm) -> frozenset[AffinePerm]:
    """All ``x <= y`` in Bruhat order, as products of subwords of a reduced word of ``y``."""
    k, word = y.reduced_word()
    ideal = {AffinePerm.pi(y.n, k)}
    for i in word:
        ideal |= {x.right_simple(i) for x in ideal}
    return frozenset(ideal)


def bruhat_leq(x: AffinePerm, y: AffinePerm) -> bool:
    """Bruhat order; elements of different pi-degree are incomparable."""
    if x.n != y.n or x.degree != y.degree or x.length > y.length:
        return False
    return x in bruhat_ideal(y)


def finite_perms(n: int) -> Iterator[AffinePerm]:
    """Elements of S_n, ordered by length and then window."""
    yield from sorted(AffinePerm(p) for p in itertools.permutations(range(1, n + 1)))


def is_minimal_coset_rep(x: AffinePerm) -> bool:
    """Whether ``x`` is the minimal length representative of ``x S_n``, i.e. ``x(1) < ... < x(n)``."""
    return all(a < b for a, b in zip(x.window, x.window[1:]))


def inversion_bijections(w: AffinePerm) -> tuple[dict[tuple[int, int], tuple[int, int]], dict[tuple[int, int], tuple[int, int]]]:
    """
    Maps ``(i, j) -> (i, j + (j - i) n)`` and ``(i, j) -> (i, j + (j - i + 1) n)`` on the inversions of a finite permutation.

    Args:
        w: element of S_n

    Returns:
        The two maps as dictionaries on the inversions of ``w``.
    """
    if not w.is_finite:
        raise ValueError(f'{w} is not a finite permutation')
    n = w.n
    alpha = {(i, j): (i, j + (j - i) * n) for i, j in w.inversions()}
    beta = {(i, j): (i, j + (j - i + 1) * n) for i, j in w.inversions()}
    return alpha, beta
