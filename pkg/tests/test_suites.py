import pytest

from dahalab import SUITES, Parameters, Status, build_checks
from dahalab._suites import daha_params, weight_arg
from dahalab.algebra import ConfigError, DahaParams, ParseError, Regime, WeightPoint


def run_all(checks, exclude=()):
    results = {}
    for check in checks:
        if any(check.name.startswith(prefix) for prefix in exclude):
            continue
        result = check.fn()
        results[check.name] = result.status
    return results


def test_registry():
    """Test that every suite is registered with a help text"""
    expected = {'nf', 'relcheck', 'intertwiner', 'weightspace', 'aha-iso', 'nopoles', 'endring', 'springer', 'chisuite', 'nilpotent', 'nondescending', 'qtorus', 'rea-check', 'morita'}
    assert set(SUITES) == expected
    assert all(s.help for s in SUITES.values())


def test_unknown_suite():
    """Test that unknown suites are configuration errors"""
    with pytest.raises(ConfigError):
        build_checks(Parameters(suite='nope'))


def test_daha_params():
    """Test building algebra parameters from a configuration"""
    dp = daha_params(Parameters(n=3, regime='sl'))
    assert dp == DahaParams(3, regime=Regime.SL)
    assert daha_params(Parameters()) == DahaParams(2)
    assert daha_params(Parameters(n=2, N=3)).N == 3

    with pytest.raises(ConfigError):
        daha_params(Parameters(n=1))
    with pytest.raises(ConfigError):
        daha_params(Parameters(regime='XX'))


def test_weight_arg():
    """Test named weights and the weight grammar"""
    dp = DahaParams(2)
    assert weight_arg(dp, None) == WeightPoint.qrho(dp)
    assert weight_arg(dp, 'trivial') == WeightPoint.trivial(dp)
    assert weight_arg(dp, 't^0,t^-2') == WeightPoint.qrho(dp)

    with pytest.raises(ConfigError):
        weight_arg(DahaParams(2, regime='SL'), 'trivial')
    with pytest.raises(ParseError):
        weight_arg(dp, 'x,y')


@pytest.mark.parametrize(
    'config',
    [
        {'suite': 'nf'},
        {'suite': 'endring', 'expect': 'bogus'},
        {'suite': 'rea-check', 'N': 4},
        {'suite': 'chisuite', 'weight': 't^-2,t^0'},
        {'suite': 'springer', 'N': 2, 'regime': 'GENERIC'},
        {'suite': 'nopoles', 'n': 2, 'regime': 'GENERIC'},
    ],
)
def test_invalid_configurations(config):
    """Test that invalid suite configurations are rejected before any check runs"""
    with pytest.raises(ConfigError):
        build_checks(Parameters(**config))


def test_nf():
    """Test the normal form suite with and without an expected text"""
    checks = build_checks(Parameters(suite='nf', word='T1 Y1 T1', expect='Y^(0,1)'))
    assert [c.name for c in checks] == ['nf[T1 Y1 T1]']
    assert checks[0].fn().status is Status.PASS

    result = build_checks(Parameters(suite='nf', word='T1 Y1 T1', expect='Y^(1,0)'))[0].fn()
    assert result.status is Status.FAIL
    assert result.witness == 'expected Y^(1,0)'

    result = build_checks(Parameters(suite='nf', word='T1 T1'))[0].fn()
    assert result.status is Status.PASS
    assert result.witness.startswith('1 + ')
    assert result.witness.endswith('T[2,1]')


@pytest.mark.parametrize(
    'config',
    [
        {'suite': 'relcheck', 'n': 2, 'regime': 'GL', 'length_bound': 3, 'beta_bound': 1},
        {'suite': 'intertwiner', 'n': 2},
        {'suite': 'weightspace', 'n': 2, 'weight': 'qrho', 'ordinary': 2, 'generalized': 2},
        {'suite': 'weightspace', 'n': 2, 'weight': 't^-2,t^0', 'character': 'triv', 'ordinary': 1, 'generalized': 2},
        {'suite': 'aha-iso', 'n': 2, 'samples': 0},
        {'suite': 'nopoles', 'n': 2},
        {'suite': 'endring', 'n': 2, 'expect': 'group', 'group': 'S_2', 'dimension': 2},
        {'suite': 'nondescending'},
        {'suite': 'qtorus', 'N': 2},
        {'suite': 'springer', 'N': 2},
    ],
)
def test_suites_pass(config):
    """Test that the rank 2 suites pass every check"""
    results = run_all(build_checks(Parameters(**config)))
    assert results
    assert set(results.values()) == {Status.PASS}


def test_springer_pairs():
    """Test that the rank 3 Springer suite checks the intertwiner product on every pair of S_3"""
    checks = build_checks(Parameters(suite='springer', N=3))
    names = [c.name for c in checks if c.name.startswith('nu-product')]
    assert len(names) == 36
    assert len(set(names)) == 36
    assert all(c.budget == 120.0 for c in checks if c.name.startswith('nu-product'))


def test_rea_check():
    """Test the R-matrix suite for N = 2"""
    checks = build_checks(Parameters(suite='rea-check', N=2))
    assert [c.name for c in checks] == [
        'hecke-ybe[upper]',
        'hecke-ybe[lower]',
        'select-convention',
        'detq[N=2]',
        'centrality[N=2]',
        'antisymmetrizer[N=2]',
        'statistics[N=2]',
    ]
    results = run_all(checks, exclude=('centrality',))
    assert set(results.values()) == {Status.PASS}


def test_rea_check_gated():
    """Test that the N = 3 determinant centrality is skipped unless requested"""
    checks = {c.name: c for c in build_checks(Parameters(suite='rea-check', N=3))}
    assert checks['centrality[N=3]'].fn().status is Status.SKIP


def test_aha_iso_samples():
    """Test that random descending weights are added to the sign-induced comparison"""
    names = [c.name for c in build_checks(Parameters(suite='aha-iso', n=2, samples=2))]
    assert names[0] == 'ind-sh[t^0,t^-2]'
    assert len(names) == 4
    assert names[-1] == 'ind-sh-constant[1,t^-2]'


@pytest.mark.slow
@pytest.mark.parametrize('suite', ['nilpotent', 'aha-iso'])
def test_rank3_suites(suite):
    """Test the rank 3 suites"""
    results = run_all(build_checks(Parameters(suite=suite, n=3)))
    assert set(results.values()) == {Status.PASS}


def test_morita_never_fails():
    """Test that the bounded witness search is conclusive or skipped, never a failure"""
    checks = build_checks(Parameters(suite='morita', n=2, degree_bound=1))
    assert [c.name for c in checks] == ['morita[n=2, bound=1]']
    assert checks[0].fn().status in (Status.PASS, Status.SKIP)
