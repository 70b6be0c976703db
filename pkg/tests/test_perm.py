import itertools

import pytest

from dahalab.algebra import (
    AffinePerm,
    act_int,
    bruhat_leq,
    finite_perms,
    gamma,
    inversion_bijections,
    is_minimal_coset_rep,
    translation,
)

PHI_WORD = [1, 2, 0, 1, 2, 0, 1, 2]


def words(n, length):
    return [list(w) for w in itertools.product(range(n), repeat=length)]


def test_from_word():
    """Test building an element from a word of simple reflections"""
    w = AffinePerm.from_word(3, PHI_WORD)
    assert w == AffinePerm([5, 6, -5])
    assert (w.length, w.degree) == (8, 0)
    assert w.reduced_word() == (0, tuple(PHI_WORD))
    assert w.word_str == 's1 s2 s0 s1 s2 s0 s1 s2'


def test_invalid_window():
    """Test that windows which are not a bijection modulo n are refused"""
    with pytest.raises(ValueError):
        AffinePerm([1, 3])
    with pytest.raises(ValueError):
        AffinePerm([])


@pytest.mark.parametrize('n', [2, 3])
def test_group_laws(n):
    """Test inverses, involutions and the extension of the window to all integers"""
    e = AffinePerm.identity(n)
    for word in words(n, 3):
        w = AffinePerm.from_word(n, word, pi_power=1)
        assert w * w.inverse == e
        assert w.inverse * w == e
        assert all(w(i + 2 * n) == w(i) + 2 * n for i in range(-n, n))

    for i in range(n):
        s = AffinePerm.simple(n, i)
        assert s * s == e
        assert s.length == 1
        assert AffinePerm.simple(n, i).left_simple(i) == e


def test_braid_relations():
    """Test the braid relations of the affine symmetric group for n = 3"""
    for i, j in ((1, 2), (2, 0), (0, 1)):
        assert AffinePerm.from_word(3, [i, j, i]) == AffinePerm.from_word(3, [j, i, j])

    pi = AffinePerm.pi(3)
    assert pi.degree == 1
    assert AffinePerm.pi(3, 3) == translation([1, 1, 1])
    # pi s_i pi^-1 = s_(i+1)
    assert pi * AffinePerm.simple(3, 1) * pi.inverse == AffinePerm.simple(3, 2)


@pytest.mark.parametrize('n', [2, 3])
def test_length_is_inversion_count(n):
    """Test that the length counts the inversions and drops by one at right descents"""
    for word in words(n, 4):
        w = AffinePerm.from_word(n, word)
        assert len(w.inversions()) == w.length
        k, reduced = w.reduced_word()
        assert AffinePerm.from_word(n, reduced, pi_power=k) == w
        assert len(reduced) == w.length
        for i in range(n):
            step = w.right_simple(i).length - w.length
            assert step == (-1 if w.right_descent(i) else 1)


def test_act_int():
    """Test the quasi-periodic action on integer vectors"""
    assert act_int(AffinePerm.simple(2, 0), (3, 7)) == (8, 2)
    assert act_int(AffinePerm.simple(3, 1), (1, 2, 3)) == (2, 1, 3)
    assert act_int(translation([1, 0]), (0, 0)) == (1, 0)
    with pytest.raises(ValueError):
        act_int(AffinePerm.identity(2), (1, 2, 3))


def test_bruhat():
    """Test the Bruhat order on small elements"""
    s1, s2 = AffinePerm.simple(3, 1), AffinePerm.simple(3, 2)
    e = AffinePerm.identity(3)
    s1s2 = s1 * s2
    assert bruhat_leq(e, s1s2)
    assert bruhat_leq(s1, s1s2)
    assert bruhat_leq(s2, s1s2)
    assert not bruhat_leq(s1s2, s1)
    assert not bruhat_leq(s1, s2)
    assert not bruhat_leq(e, AffinePerm.pi(3))


def test_finite_perms():
    """Test the enumeration of S_n and its minimal coset representatives"""
    perms = list(finite_perms(3))
    assert len(perms) == 6
    assert perms[0] == AffinePerm.identity(3)
    assert perms[-1] == AffinePerm([3, 2, 1])
    assert all(p.is_finite for p in perms)

    assert is_minimal_coset_rep(translation([1, 0, 0]) * AffinePerm([2, 1, 3])) is False
    assert is_minimal_coset_rep(AffinePerm([0, 2, 4]))


@pytest.mark.parametrize('n', [2, 3])
def test_inversion_bijections(n):
    """Test that conjugation by gamma sends inversions onto the vanishing and singular pairs"""
    g = gamma(n)
    for x in finite_perms(n):
        u = x.conjugate(g)
        inversions = u.inversions()
        alpha, beta = inversion_bijections(x)
        assert set(alpha.values()) == {(i, j) for i, j in inversions if (j - i) % (n + 1) == 0}
        assert set(beta.values()) == {(i, j) for i, j in inversions if (j - i) % (n + 1) == n}
        assert len(set(alpha.values())) == len(alpha) == x.length

    for i in range(1, n):
        assert AffinePerm.simple(n, i).conjugate(g).length == 2 * n - 1

    with pytest.raises(ValueError):
        inversion_bijections(AffinePerm.simple(n, 0))
