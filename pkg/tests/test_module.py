import pytest

from dahalab.algebra import (
    RHO,
    AffinePerm,
    AhaElement,
    AhaModule,
    DahaElement,
    DahaParams,
    InconsistentCharacter,
    IndYModule,
    LaurentPoly,
    NotDescending,
    WeightPoint,
    check_ind_sh,
    check_triangularity,
    classify_inversions,
    finite_perms,
    gamma,
    induce_from_aha_char,
    parse_weight,
    weight_solutions,
)


@pytest.fixture
def dp():
    return DahaParams(2)


def test_weight_solutions(dp):
    """Test the elements sending one weight to another"""
    qrho = WeightPoint.qrho(dp)
    found = weight_solutions(qrho, qrho)
    assert len(found) == 2
    assert found[0] == AffinePerm.identity(2)
    assert all(qrho.act(x) == qrho for x in found)

    swapped = qrho.act(AffinePerm.simple(2, 1))
    assert AffinePerm.simple(2, 1) in weight_solutions(qrho, swapped)
    assert weight_solutions(qrho, WeightPoint(dp, [dp.t**3, dp.t**7])) == []


def test_vectors(dp):
    """Test the vector arithmetic of induced modules"""
    module = IndYModule(dp, WeightPoint.qrho(dp))
    s1 = AffinePerm.simple(2, 1)
    v = module.generator() + module.vector(s1, 2)
    assert v[s1] == 2
    assert v.leading() == s1
    assert v - v == 0
    assert not (v - v)
    assert 2 * v == v + v
    assert v.to_list([AffinePerm.identity(2), s1]) == [1, 2]
    assert str(module.generator()) == '(1) T[1,2] (x) v'


def test_act(dp):
    """Test that Y acts on 1 (x) v by the weight and T by the basis"""
    pt = WeightPoint(dp, [dp.t**3, dp.t**-1])
    module = IndYModule(dp, pt)
    v = module.generator()
    assert module.act(DahaElement.Y(dp, 1), v) == v * dp.scalar(dp.t**3)
    assert module.act(DahaElement.Y(dp, 2, -1), v) == v * dp.scalar(dp.t)
    assert module.act(DahaElement.T(dp, 1), v) == module.vector(AffinePerm.simple(2, 1))
    assert module.is_weight_vector(v, pt)
    assert not module.is_weight_vector(module.vector(AffinePerm.simple(2, 1)), pt)


def test_aha_module(dp):
    """Test the matrix of T1 on the affine Hecke module"""
    module = AhaModule(dp, WeightPoint.qrho(dp))
    c = dp.scalar(dp.c)
    assert module.basis == list(finite_perms(2))
    assert module.matrix_of(AhaElement.T(dp, 1)) == [[0, 1], [1, c]]
    assert module.span_rank(module.generator()) == 2


def test_weight_spaces(dp):
    """Test ordinary and generalized weight spaces at q^rho"""
    qrho = WeightPoint.qrho(dp)
    module = IndYModule(dp, qrho)
    space = module.ordinary_weight_space(qrho)
    assert len(space) == 2
    assert all(module.is_weight_vector(m, qrho) for m in space)
    assert module.generalized_weight_dim(qrho) == 2
    assert len(module.generalized_weight_space(qrho)) == 2
    assert module.ordinary_weight_space(WeightPoint(dp, [dp.t**3, dp.t**7])) == []


def test_triangularity(dp):
    """Test that Y^beta T_x is Bruhat triangular with the twisted diagonal term"""
    elements = [AffinePerm.from_word(2, word) for word in ([], [1], [0], [1, 0], [0, 1], [1, 0, 1], [0, 1, 0])]
    for x in elements:
        for beta in [(0, 0), (1, 0), (0, -1), (2, -1), (-1, -1)]:
            assert check_triangularity(dp, x, beta)


def test_triangularity_sl():
    """Test triangularity with the SL relations applied"""
    sl = DahaParams(2, regime='SL')
    for x in (AffinePerm.simple(2, 0), AffinePerm.from_word(2, [1, 0])):
        assert check_triangularity(sl, x, (1, 0))


def test_ind_sh(dp):
    """Test the sign-induced module against the Y-induced one for n = 2"""
    report = check_ind_sh(dp, WeightPoint.qrho(dp))
    assert report.passed
    assert (report.rank, report.dimension) == (2, 2)

    one = LaurentPoly.constant(dp.space, 1)
    report = check_ind_sh(dp, WeightPoint(dp, [one, dp.t**-2]))
    assert report.passed
    assert report.constant == dp.scalar(1 - dp.t**-2)

    with pytest.raises(NotDescending):
        check_ind_sh(dp, WeightPoint(dp, [dp.t**-2, one]))


@pytest.mark.slow
def test_ind_sh_rank3():
    """Test the sign-induced module for n = 3 at q^rho and a random descending weight"""
    dp = DahaParams(3)
    for pt in (WeightPoint.qrho(dp), parse_weight(dp, 't^3,t^1,t^-2')):
        report = check_ind_sh(dp, pt)
        assert report.passed
        assert report.rank == 6


def test_induced_characters(dp):
    """Test the modules induced from one-dimensional affine Hecke characters"""
    b = parse_weight(dp, 't^-2,t^0')
    sign = induce_from_aha_char(dp, parse_weight(dp, 't^0,t^-2'), 'SIGN')
    triv = induce_from_aha_char(dp, b, 'TRIV')

    assert sign.character.eigenvalue == dp.scalar(-(dp.t**-1))
    assert sign.act(DahaElement.T(dp, 1), sign.generator()) == sign.generator() * sign.character.eigenvalue
    assert len(sign.ordinary_weight_space(b)) == 0
    assert len(triv.ordinary_weight_space(b)) == 1
    assert triv.generalized_weight_dim(b) == 2

    with pytest.raises(InconsistentCharacter):
        induce_from_aha_char(dp, b, 'SIGN')


def test_x_basis(dp):
    """Test the PBW coordinates X^alpha (x) m of induced character modules"""
    triv = induce_from_aha_char(dp, parse_weight(dp, 't^-2,t^0'), 'TRIV')
    assert triv.to_x_basis(triv.generator()) == {(0, 0): 1}


def test_classify_inversions(dp):
    """Test vanishing, singular and neutral inversions relative to a weight"""
    s1 = AffinePerm.simple(2, 1)
    one = LaurentPoly.constant(dp.space, 1)
    assert classify_inversions(dp, s1, WeightPoint(dp, [one, dp.t**2])) == {'vanishing': [], 'singular': [(1, 2)], 'neutral': []}
    assert classify_inversions(dp, s1, WeightPoint(dp, [dp.t**2, one]))['neutral'] == [(1, 2)]
    assert classify_inversions(dp, s1, WeightPoint.trivial(dp))['vanishing'] == [(1, 2)]

    with pytest.raises(ValueError):
        classify_inversions(DahaParams(2, 3), s1)
    with pytest.raises(ValueError):
        classify_inversions(dp, s1, 'sigma')


def test_classify_conjugated_rank3():
    """Test the classes of gamma^-1 s1 s2 gamma at q^rho for n = 3"""
    dp = DahaParams(3)
    g = gamma(3)
    u = g.inverse.compose(AffinePerm.simple(3, 1)).compose(AffinePerm.simple(3, 2)).compose(g)
    assert u == AffinePerm([5, 6, -5])

    classes = classify_inversions(dp, u, WeightPoint.qrho(dp))
    assert classes['vanishing'] == [(1, 9), (2, 6)]
    assert classes['singular'] == [(1, 12), (2, 9)]
    assert len(classes['neutral']) == 4
    assert classify_inversions(dp, u) == classes


@pytest.mark.parametrize('n', [2, 3])
@pytest.mark.parametrize('regime', ['GL', 'SL'])
def test_classify_modulus_rule(n, regime):
    """Test that the classes at q^rho follow j - i modulo n + 1 for every conjugated permutation"""
    dp = DahaParams(n, regime=regime)
    g = gamma(n)
    qrho = WeightPoint.qrho(dp)
    for x in finite_perms(n):
        u = g.inverse.compose(x).compose(g)
        classes = classify_inversions(dp, u, qrho)
        assert classes == classify_inversions(dp, u, RHO)
        assert all((j - i) % (n + 1) == 0 for i, j in classes['vanishing'])
        assert all((j - i) % (n + 1) == n for i, j in classes['singular'])
        assert sum(map(len, classes.values())) == u.length
