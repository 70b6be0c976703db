import pytest
from sympy import QQ

from dahalab.algebra import (
    AffinePerm,
    DahaParams,
    EndoTable,
    Identification,
    IdentificationKind,
    IndYModule,
    LaurentPoly,
    NotDescending,
    Regime,
    WeightPoint,
    build_endo,
    compose,
    end_ring,
    finite_perms,
    gamma_for_weight,
    group_name,
    identify,
    multipartition_count,
    nopoles_check,
    nu_product_check,
    parabolic_stabilizer,
    parse_weight,
    structure_table,
)


def qq(rows):
    return [[[QQ(v) for v in entry] for entry in row] for row in rows]


def test_end_ring_qrho():
    """Test that the endomorphism ring at q^rho is the group algebra of S_2"""
    dp = DahaParams(2)
    table = end_ring(dp, WeightPoint.qrho(dp))
    assert table.dimension == 2
    assert table.group == 'S_2'
    assert table.is_associative()
    assert table.identity() is not None
    assert table.semisimple

    ident = identify(table)
    assert ident.kind is IdentificationKind.GROUP_ALGEBRA
    assert str(ident) == 'End ≅ K[S_2]^op'


def test_end_ring_nondescending():
    """Test the one-dimensional endomorphism ring at a non-descending weight"""
    dp = DahaParams(2)
    table = end_ring(dp, parse_weight(dp, 't^-2,t^0'))
    assert table.dimension == 1
    assert table.labels is None
    assert str(identify(table)) == 'End ≅ K'


def test_build_endo():
    """Test the intertwiner endomorphism of the identity and the descending requirement"""
    dp = DahaParams(2)
    pt = WeightPoint.qrho(dp)
    module = IndYModule(dp, pt)
    g = gamma_for_weight(pt)
    e = AffinePerm.identity(2)

    endo = build_endo(module, e, g)
    assert endo.vector == module.generator()
    assert endo(module.generator()) == module.generator()
    assert compose(endo, endo).label == e

    bad = IndYModule(dp, parse_weight(dp, 't^-2,t^0'))
    with pytest.raises(NotDescending):
        build_endo(bad, e, g)


def test_parabolic_stabilizer():
    """Test the finite stabilizers of weights with repeated entries"""
    dp = DahaParams(3)
    one = LaurentPoly.constant(dp.space, 1)
    assert parabolic_stabilizer(WeightPoint(dp, [one, one, dp.t**-2])) == [AffinePerm.identity(3), AffinePerm.simple(3, 1)]
    assert parabolic_stabilizer(WeightPoint.trivial(dp)) == list(finite_perms(3))
    assert parabolic_stabilizer(WeightPoint.qrho(dp)) == [AffinePerm.identity(3)]


@pytest.mark.parametrize('w', list(finite_perms(2)))
def test_nopoles(w):
    """Test that the conjugated intertwiners have leading term T_u and no pole at q^rho"""
    report = nopoles_check(DahaParams(2), w)
    assert report.passed
    assert report.offending == []
    assert str(report).endswith('passed')


def test_nopoles_specialization():
    """Test that the pole analysis needs q = t^-2"""
    with pytest.raises(ValueError):
        nopoles_check(DahaParams(2, regime='GENERIC'), AffinePerm.simple(2, 1))


def test_nu_product():
    """Test that the conjugated intertwiners multiply like the group"""
    dp = DahaParams(2)
    s1 = AffinePerm.simple(2, 1)
    assert nu_product_check(dp, s1, s1)
    assert nu_product_check(dp, s1, AffinePerm.identity(2))
    assert nu_product_check(DahaParams(2, regime=Regime.SL), s1, s1)


@pytest.mark.slow
@pytest.mark.parametrize(
    'w, u',
    [
        ([2, 3, 1], [3, 1, 2]),
        ([3, 1, 2], [3, 1, 2]),
        ([3, 2, 1], [3, 2, 1]),
        ([1, 3, 2], [3, 2, 1]),
        ([2, 3, 1], [2, 1, 3]),
    ],
)
def test_nu_product_rank3(w, u):
    """Test the intertwiner product on pairs of S_3 that are not both simple, including pairs where length drops"""
    assert nu_product_check(DahaParams(3), AffinePerm(w), AffinePerm(u))


def test_multipartition_count():
    """Test the partition counts of blocks of entries differing by powers of q"""
    assert multipartition_count(WeightPoint.qrho(DahaParams(2))) == 2
    assert multipartition_count(WeightPoint.trivial(DahaParams(3))) == 3
    assert multipartition_count(parse_weight(DahaParams(3), 't^0,t^-2,t^5')) == 2
    assert multipartition_count(parse_weight(DahaParams(3), '2, 3, 1')) == 1


def test_group_name():
    """Test naming subgroups of S_n"""
    e3 = AffinePerm.identity(3)
    assert group_name([e3, AffinePerm.simple(3, 1)], 3) == 'S_2 x S_1'
    assert group_name(list(finite_perms(3)), 3) == 'S_3'
    assert group_name([e3, AffinePerm([3, 2, 1])], 3) == 'W(2)'


def test_dual_numbers():
    """Test the radical of K[e]/(e^2)"""
    table = EndoTable('dual', qq([[[1, 0], [0, 1]], [[0, 1], [0, 0]]]), QQ)
    assert table.is_associative()
    assert table.identity() == [1, 0]
    assert table.radical()
    assert not table.semisimple
    assert table.nilpotency_index([QQ(0), QQ(1)]) == 2
    assert table.nilpotency_index([QQ(1), QQ(0)]) is None

    ident = identify(table)
    assert ident.kind is IdentificationKind.NILPOTENT_WITNESS
    assert ident.nilpotency == 2
    assert table.text()[3] == 'e1 * e1 = 0'


def test_group_table():
    """Test a labeled table of the group algebra of S_2"""
    labels = list(finite_perms(2))
    table = EndoTable('s2', qq([[[1, 0], [0, 1]], [[0, 1], [1, 0]]]), QQ, labels=labels, group='S_2')
    assert table.semisimple
    assert table.trace(table.unit(0)) == 2
    assert identify(table).kind is IdentificationKind.GROUP_ALGEBRA

    wrong = EndoTable('s2', qq([[[1, 0], [0, 1]], [[0, 1], [0, 1]]]), QQ, labels=labels, group='S_2')
    assert identify(wrong).kind is not IdentificationKind.GROUP_ALGEBRA


def test_identification_text():
    """Test the text of identifications"""
    assert str(Identification(IdentificationKind.GROUP_ALGEBRA, '1')) == 'End ≅ K'
    assert str(Identification(IdentificationKind.GROUP_ALGEBRA, 'S_2 x S_1')) == 'End ≅ K[S_2 x S_1]^op'
    assert str(Identification(IdentificationKind.UNKNOWN)) == 'End is not identified'


def test_structure_table():
    """Test structure constants from compositions of coordinate vectors"""
    basis = [[QQ(1), QQ(0)]]
    table = structure_table(basis, lambda i, j: [QQ(3), QQ(0)], QQ, 'line')
    assert table.constants == [[[3]]]

    with pytest.raises(ArithmeticError):
        structure_table(basis, lambda i, j: [QQ(0), QQ(1)], QQ, 'line')


@pytest.mark.slow
def test_end_ring_transverse():
    """Test the endomorphism ring at a weight with distinct entries for n = 3"""
    dp = DahaParams(3)
    pt = parse_weight(dp, 't^0,t^-2,t^5')
    table = end_ring(dp, pt)
    assert table.dimension == 2 == multipartition_count(pt)
    assert table.is_associative()


@pytest.mark.slow
def test_end_ring_nilpotent():
    """Test the nilpotent endomorphism at (1, 1, t^-2) for n = 3"""
    dp = DahaParams(3)
    table = end_ring(dp, parse_weight(dp, 't^0,t^0,t^-2'))
    assert table.dimension == 2
    assert table.is_associative()
    assert identify(table).kind is IdentificationKind.NILPOTENT_WITNESS
