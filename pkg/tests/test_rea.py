import pytest
from sympy.polys.matrices import DomainMatrix

from dahalab.algebra import (
    AffinePerm,
    antisymmetrizer_check,
    centrality_check,
    detq,
    excedance,
    hecke_and_ybe_check,
    r_matrix,
    select_convention,
    statistics_check,
)


def test_r_matrix():
    """Test the entries of the N = 2 R-matrix in both conventions"""
    upper = r_matrix(2)
    qq = upper.qq
    assert upper.entries[0][0] == qq
    assert upper.entries[1][1] == 1
    assert upper.entries[1][2] == qq - qq**-1
    assert upper.entries[2][1] == 0

    lower = r_matrix(2, 'lower')
    assert lower.entries[2][1] == qq - qq**-1
    assert lower.entries[1][2] == 0

    with pytest.raises(ValueError):
        r_matrix(2, 'diagonal')


def test_r_matrix_domain():
    """Test that the R-matrix and its rescaling are exact matrices over Q(v)"""
    R = r_matrix(2)
    assert isinstance(R.matrix, DomainMatrix)
    assert R.matrix.shape == (4, 4)
    assert R.matrix.domain == R.domain

    rescaled = R.rescaled()
    v = R.K.gens[0]
    assert rescaled.scale == v**-1
    assert rescaled.entries == [[x * v**-1 for x in row] for row in R.entries]


@pytest.mark.slow
def test_hecke_and_ybe_rank3():
    """Test the Hecke relation and the Yang-Baxter equation for N = 3 on 27-dimensional V (x) V (x) V"""
    report = hecke_and_ybe_check(3)
    assert report.hecke
    assert report.ybe


@pytest.mark.parametrize('convention', ['upper', 'lower'])
def test_hecke_and_ybe(convention):
    """Test the Hecke relation and the Yang-Baxter equation for N = 2"""
    report = hecke_and_ybe_check(2, convention)
    assert report.hecke
    assert report.ybe
    assert report.rescale_invariant
    assert str(report).startswith(f'{convention}: hecke=True')


def test_select_convention():
    """Test that the first passing convention is selected"""
    report = select_convention(2)
    assert report.passed
    assert report.convention == 'upper'


def test_detq():
    """Test the terms of the quantum determinant"""
    qq = r_matrix(2).qq
    d = detq(2)
    assert sorted(d) == [(0, 3), (1, 2)]
    assert d[(0, 3)] == 1
    assert d[(1, 2)] == -(qq**2)
    assert len(detq(3)) == 6


def test_excedance():
    """Test counting excedances"""
    assert excedance(AffinePerm.identity(3)) == 0
    assert excedance(AffinePerm([2, 3, 1])) == 2
    assert excedance(AffinePerm([3, 1, 2])) == 1


@pytest.mark.parametrize(
    'N, eulerian, mahonian',
    [
        (2, [1, 1], [1, 1]),
        (3, [1, 4, 1], [1, 2, 2, 1]),
        (4, [1, 11, 11, 1], [1, 3, 5, 6, 5, 3, 1]),
    ],
)
def test_statistics(N, eulerian, mahonian):
    """Test the excedance and length distributions over S_N"""
    report = statistics_check(N)
    assert report.eulerian == eulerian
    assert report.mahonian == mahonian
    assert report.passed


def test_antisymmetrizer():
    """Test the q-antisymmetrizer on two tensor factors"""
    ok, z = antisymmetrizer_check(2, select_convention(2).convention)
    assert ok
    assert 'v1 (x) v2' in z


def test_centrality_slice():
    """Test the size of the degree 3 slice used for the determinant commutators"""
    report = centrality_check(2, 'upper')
    assert report.words == 4**3
    assert 0 < report.slice_rank < report.words
    assert report.central is not bool(report.failures)
