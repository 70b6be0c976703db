import pytest

from dahalab.algebra import (
    AffinePerm,
    DahaParams,
    IdentificationKind,
    QTIndModule,
    QTorusElt,
    identify,
    partitions,
    qt_end_ring,
    qt_mul,
    qt_relations,
    qt_shift_bijection,
    qt_weight_space,
    qt_y_semisimple,
    seminormal_matrices,
    springer_decomposition_check,
    standard_tableaux,
    unit_weight,
)


def square(m):
    size = len(m)
    return [[sum(m[r][k] * m[k][c] for k in range(size)) for c in range(size)] for r in range(size)]


@pytest.mark.parametrize('regime', ['GENERIC', 'GL', 'SL'])
def test_qt_relations(regime):
    """Test the defining relations of the quantum torus smash product for N = 2"""
    relations = qt_relations(DahaParams(2, regime=regime))
    assert [r.name for r in relations if not r.holds] == []


def test_qt_twist():
    """Test Y X = q X Y on the same index and commutation on different ones"""
    dp = DahaParams(2)
    X1, X2, Y1 = QTorusElt.X(dp, 1), QTorusElt.X(dp, 2), QTorusElt.Y(dp, 1)
    assert Y1 * X1 == X1 * Y1 * dp.q
    assert Y1 * X2 == X2 * Y1
    assert X1 * QTorusElt.X(dp, 1, -1) == QTorusElt.one(dp)
    assert Y1 * X1 - X1 * Y1 * dp.q == QTorusElt(dp)


def test_qt_mul_associative():
    """Test associativity of the smash product on mixed elements"""
    dp = DahaParams(3)
    s1, s2 = QTorusElt.perm(dp, AffinePerm.simple(3, 1)), QTorusElt.perm(dp, AffinePerm.simple(3, 2))
    a = QTorusElt.X(dp, 1) + s1
    b = QTorusElt.Y(dp, 2, -1) * s2 + QTorusElt.X(dp, 3)
    c = QTorusElt.monomial(dp, (1, 0, -1), (0, 1, 1), AffinePerm([2, 3, 1]))
    assert qt_mul(qt_mul(a, b), c) == qt_mul(a, qt_mul(b, c))
    assert qt_mul(s1, QTorusElt.X(dp, 1)) == qt_mul(QTorusElt.X(dp, 2), s1)


def test_partitions():
    """Test partitions and standard tableaux"""
    assert partitions(3) == [(3,), (2, 1), (1, 1, 1)]
    assert len(partitions(4)) == 5
    assert [len(standard_tableaux(shape)) for shape in partitions(4)] == [1, 3, 2, 3, 1]
    assert standard_tableaux((2, 1)) == [((1, 2), (3,)), ((1, 3), (2,))]


def test_seminormal_matrices():
    """Test that the seminormal generators are involutions"""
    dp = DahaParams(3)
    one, zero = dp.field.one, dp.field.zero
    for shape in partitions(3):
        for m in seminormal_matrices(dp, shape):
            size = len(m)
            assert square(m) == [[one if r == c else zero for c in range(size)] for r in range(size)]


def test_unit_weight_space():
    """Test the weight space of 1^N and the endomorphism ring K[S_N]"""
    dp = DahaParams(2)
    module = QTIndModule(dp, unit_weight(dp))
    basis = qt_weight_space(module, module.weight)
    assert sorted(b.sigma for b in basis) == [AffinePerm.identity(2), AffinePerm.simple(2, 1)]
    assert all(b.alpha == (0, 0) for b in basis)

    table = qt_end_ring(dp, unit_weight(dp))
    assert table.dimension == 2
    assert table.group == 'S_2'
    assert identify(table).kind is IdentificationKind.GROUP_ALGEBRA


def test_sl_unit_weight():
    """Test the unit weight in the SL regime"""
    dp = DahaParams(2, regime='SL')
    pt = unit_weight(dp)
    assert pt.entries[0] * pt.entries[1] == dp.zprod
    assert len(qt_weight_space(QTIndModule(dp, pt), pt)) == 2


def test_module_structure():
    """Test that Y acts semisimply and shifts by X^alpha sigma match bases"""
    dp = DahaParams(2)
    module = QTIndModule(dp, unit_weight(dp))
    assert qt_y_semisimple(module)
    assert qt_shift_bijection(module, (1, 0), AffinePerm.simple(2, 1))


def test_springer():
    """Test the decomposition of the unit weight space for N = 2"""
    summands = springer_decomposition_check(2)
    assert [s.shape for s in summands] == [(2,), (1, 1)]
    assert all(s.passed for s in summands)
    assert all(s.dimension == 1 for s in summands)
    assert str(summands[0]).startswith('L(2): dim S = 1')

    with pytest.raises(ValueError):
        springer_decomposition_check(5)


@pytest.mark.slow
def test_springer_rank3():
    """Test the decomposition for N = 3, where S^(2,1) appears twice"""
    summands = springer_decomposition_check(3)
    assert all(s.passed for s in summands)
    assert [s.dimension for s in summands] == [1, 2, 1]
