"""
Verification suites, one per CLI subcommand.

Every suite builder validates the run configuration and returns the list of checks it runs.
Configuration problems raise :class:`~dahalab.algebra.ConfigError` before the engine starts;
mathematical failures become FAIL records.
"""
from __future__ import annotations

import itertools
import logging
import random
from collections.abc import Sequence
from dataclasses import dataclass
from math import factorial
from typing import Any, Callable, Optional

from ._engine import Check
from ._parameter import Parameters
from ._report import CheckResult, Status
from .algebra import (
    RHO,
    AffinePerm,
    ConfigError,
    DahaParams,
    IdentificationKind,
    IndYModule,
    LaurentPoly,
    LocDahaElement,
    QTIndModule,
    Regime,
    WeightPoint,
    ab_decompose,
    antisymmetrizer_check,
    build_endo,
    centrality_check,
    check_ind_sh,
    check_triangularity,
    classify_inversions,
    compose,
    defining_relations,
    detq,
    end_ring,
    finite_perms,
    format_element,
    format_weight,
    gamma,
    hecke_and_ybe_check,
    identify,
    induce_from_aha_char,
    intertwiner_relations,
    inversion_bijections,
    morita_witness_search,
    multipartition_count,
    nopoles_check,
    nu,
    nu_from_word,
    nu_product_check,
    parse_weight,
    parse_word,
    phi_vs_nu_check,
    qt_end_ring,
    qt_relations,
    qt_shift_bijection,
    qt_weight_space,
    qt_y_semisimple,
    select_convention,
    springer_decomposition_check,
    statistics_check,
    unit_weight,
    weight_solutions,
)

__all__ = ['SUITES', 'Suite', 'build_checks', 'daha_params', 'weight_arg']
log = logging.getLogger(__name__)

Builder = Callable[[Parameters], 'list[Check]']


@dataclass(frozen=True)
class Suite:
    name: str
    builder: Builder
    help: str


SUITES: dict[str, Suite] = {}


def suite(name: str, help: str) -> Callable[[Builder], Builder]:
    def register(fn: Builder) -> Builder:
        SUITES[name] = Suite(name, fn, help)
        return fn

    return register


def build_checks(params: Parameters) -> list[Check]:
    """
    Validate the configuration and build the checks of ``params.suite``.

    Raises:
        ConfigError: unknown suite or invalid configuration
    """
    name = params.get('suite')
    if name not in SUITES:
        raise ConfigError(f'Unknown suite "{name}", expected one of {sorted(SUITES)}')
    checks = SUITES[name].builder(params)
    log.debug('Suite "%s" has %d checks', name, len(checks))
    return checks


# Configuration helpers
def daha_params(params: Parameters, regime: Optional[str] = None, n: Optional[int] = None) -> DahaParams:
    """
    Algebra parameters from the ``n``, ``N`` and ``regime`` keys.

    Raises:
        ConfigError: invalid rank or regime
    """
    n = n if n is not None else params.get('n', 2)
    N = params.get('N')
    regime = regime if regime is not None else params.get('regime') or 'GL'
    try:
        return DahaParams(int(n), None if N is None else int(N), regime)
    except (ValueError, TypeError) as err:
        raise ConfigError(f'Invalid algebra parameters n={n}, N={N}, regime={regime}: {err}') from err


def weight_arg(dp: DahaParams, text: Optional[str], default: str = 'qrho') -> WeightPoint:
    """
    Weight from the weight grammar, or one of the names ``qrho``, ``trivial`` and ``unit``.

    Raises:
        ParseError: the text does not follow the weight grammar
        ConfigError: the weight is invalid for the regime
    """
    text = (text or default).strip()
    try:
        if text == 'qrho':
            return WeightPoint.qrho(dp)
        if text == 'trivial':
            return WeightPoint.trivial(dp)
        if text == 'unit':
            return unit_weight(dp)
    except ValueError as err:
        raise ConfigError(f'Weight "{text}" does not exist for {dp!r}: {err}') from err
    return parse_weight(dp, text)


def _regimes(params: Parameters) -> list[Regime]:
    value = params.get('regime')
    if value is None:
        return list(Regime)
    values = [value] if isinstance(value, (str, Regime)) else list(value)
    try:
        return [Regime.parse(v) for v in values]
    except ValueError as err:
        raise ConfigError(str(err)) from err


def _require_spherical(dp: DahaParams, suite_name: str) -> None:
    if dp.n != dp.N or dp.q != dp.t**-2:
        raise ConfigError(f'{suite_name} needs n = N and q = t^-2, got {dp!r}')


def _expect(name: str, value: Any, expected: Any) -> tuple[bool, str]:
    if expected is None:
        return True, f'{name} {value}'
    return value == expected, f'{name} {value} (expected {expected})'


def _failures(names: Sequence[str], total: int) -> CheckResult:
    if names:
        return CheckResult(Status.FAIL, f'{len(names)}/{total} relations fail', '; '.join(names))
    return CheckResult(Status.PASS, f'{total} relations hold')


def _affine_elements(n: int, max_length: int) -> list[AffinePerm]:
    """Elements of the affine Weyl group up to a length, in length order."""
    layer = {AffinePerm.identity(n)}
    found = set(layer)
    for _ in range(max_length):
        layer = {x.right_simple(i) for x in layer for i in range(n) if not x.right_descent(i)}
        found |= layer
    return sorted(found, key=lambda x: (x.length, x.window))


def _box(n: int, bound: int) -> list[tuple[int, ...]]:
    return [b for b in itertools.product(range(-bound, bound + 1), repeat=n) if sum(map(abs, b)) <= bound]


# Presentations
@suite('nf', 'normal form of a generator word')
def nf_suite(params: Parameters) -> list[Check]:
    dp = daha_params(params)
    word = params.get('word')
    if not word:
        raise ConfigError('The nf suite needs a generator word, e.g. "T1 Y1 T1"')
    element = parse_word(dp, word)
    expect = params.get('expect')

    def run() -> CheckResult:
        text = format_element(element)
        if expect is None:
            return CheckResult(Status.PASS, f'{word} = {text}', text)
        return CheckResult.of(text == expect, f'{word} = {text}', None if text == expect else f'expected {expect}')

    return [Check(f'nf[{word}]', run, 1.0)]


@suite('relcheck', 'defining relations of the Hecke, affine Hecke, double affine Hecke and quantum torus algebras')
def relcheck_suite(params: Parameters) -> list[Check]:
    n = int(params.get('n', 2))
    checks = []
    for regime in _regimes(params):
        dp = daha_params(params, regime.name, n)
        for algebra in ('finite', 'aha', 'daha'):

            def run(dp: DahaParams = dp, algebra: str = algebra) -> CheckResult:
                relations = defining_relations(dp, algebra)
                return _failures([r.name for r in relations if not r.holds], len(relations))

            checks.append(Check(f'relations[{algebra}, {regime.name}, n={n}]', run, 10.0))

        def run_qt(dp: DahaParams = dp) -> CheckResult:
            relations = qt_relations(dp)
            return _failures([r.name for r in relations if not r.holds], len(relations))

        checks.append(Check(f'relations[qtorus, {regime.name}, n={n}]', run_qt, 10.0))

    length_bound = int(params.get('length_bound') or (8 if n == 2 else 3))
    beta_bound = int(params.get('beta_bound') or (2 if n == 2 else 1))
    dp = daha_params(params, 'GL', n)

    def run_triangularity() -> CheckResult:
        elements = _affine_elements(n, length_bound)
        betas = _box(n, beta_bound)
        for x in elements:
            for beta in betas:
                if not check_triangularity(dp, x, beta):
                    return CheckResult(Status.FAIL, 'Y^beta T_x is not Bruhat triangular', f'x = {x}, beta = {beta}')
        return CheckResult(Status.PASS, f'{len(elements)} elements times {len(betas)} exponents', details={'elements': len(elements)})

    checks.append(Check(f'triangularity[len<={length_bound}, |beta|<={beta_bound}]', run_triangularity, 60.0))
    return checks


# Intertwiners
@suite('intertwiner', 'intertwiner relations, the phi/nu exponent and the inversion bijections')
def intertwiner_suite(params: Parameters) -> list[Check]:
    dp = daha_params(params)
    n = dp.n
    checks = []

    def run_relations() -> CheckResult:
        relations = intertwiner_relations(dp)
        return _failures([r.name for r in relations if not r.holds], len(relations))

    checks.append(Check(f'intertwiner-relations[n={n}]', run_relations, 60.0))

    word = params.get('phi_word')
    expected_alpha = params.get('alpha')
    if word is None:
        word = [1, 2, 0, 1, 2, 0, 1, 2] if n == 3 else [1, 0, 1]
        expected_alpha = 5 if n == 3 else expected_alpha
    w = AffinePerm.from_word(n, word)

    def run_phi_vs_nu() -> CheckResult:
        alpha, _ = phi_vs_nu_check(dp, w)
        inversions = sorted(w.inversions())
        ok, message = _expect('alpha', alpha, expected_alpha)
        return CheckResult.of(
            ok and len(inversions) == w.length,
            f'{message}, {len(inversions)} inversions',
            ' '.join(f'({i},{j})' for i, j in inversions),
            alpha=alpha,
            length=w.length,
        )

    checks.append(Check(f'phi-vs-nu[{w.word_str}]', run_phi_vs_nu, 10.0))

    def run_bijections() -> CheckResult:
        g = gamma(n)
        rho_params = dp if dp.N == n else DahaParams(n, regime=dp.regime)
        for x in finite_perms(n):
            u = g.inverse.compose(x).compose(g)
            classes = classify_inversions(rho_params, u, RHO)
            vanishing, singular = set(classes['vanishing']), set(classes['singular'])
            alpha, beta = inversion_bijections(x)
            if set(alpha.values()) != vanishing or len(set(alpha.values())) != len(alpha):
                return CheckResult(Status.FAIL, 'alpha is not a bijection onto the vanishing inversions', f'w = {x}')
            if set(beta.values()) != singular or len(set(beta.values())) != len(beta):
                return CheckResult(Status.FAIL, 'beta is not a bijection onto the singular inversions', f'w = {x}')
        for i in range(1, n):
            u = g.inverse.compose(AffinePerm.simple(n, i)).compose(g)
            if u.length != 2 * n - 1:
                return CheckResult(Status.FAIL, f'len(gamma^-1 s{i} gamma) = {u.length}', f'expected {2 * n - 1}')
        return CheckResult(Status.PASS, f'{factorial(n)} permutations, len(gamma^-1 s_i gamma) = {2 * n - 1}')

    checks.append(Check(f'inversion-bijections[n={n}]', run_bijections, 10.0))

    if dp.q == dp.t**-2:

        def run_ab() -> CheckResult:
            for i in range(1, n):
                a, b = ab_decompose(dp, i, i + 1)
                rhs = LocDahaElement.T(dp, i).rescale(a) + LocDahaElement.one(dp).rescale(b)
                if nu(dp, i) != rhs:
                    return CheckResult(Status.FAIL, f'nu{i} differs from T{i} a + b', f'a = {a}, b = {b}')
            return CheckResult(Status.PASS, f'nu_i = T_i a_(i,i+1) + b_(i,i+1) for i < {n}')

        checks.append(Check(f'ab-decomposition[n={n}]', run_ab, 10.0))

    if n >= 3:

        def run_braid_words() -> CheckResult:
            lhs, rhs = nu_from_word(dp, 0, [1, 2, 1]), nu_from_word(dp, 0, [2, 1, 2])
            return CheckResult.of(lhs == rhs, 'nu_(s1 s2 s1) = nu_(s2 s1 s2)')

        checks.append(Check(f'reduced-words[n={n}]', run_braid_words, 10.0))

    return checks


# Induced modules
@suite('weightspace', 'ordinary and generalized weight spaces of an induced module')
def weightspace_suite(params: Parameters) -> list[Check]:
    dp = daha_params(params)
    pt = weight_arg(dp, params.get('weight'))
    target_text = params.get('target') or 'self'
    target = pt if target_text == 'self' else weight_arg(dp, target_text)
    kind = params.get('character')
    module: Any = IndYModule(dp, pt) if kind is None else induce_from_aha_char(dp, pt, str(kind).upper())
    label = f'{format_weight(pt)} -> {format_weight(target)}'

    def run_ordinary() -> CheckResult:
        space = module.ordinary_weight_space(target)
        ok, message = _expect('dimension', len(space), params.get('ordinary'))
        return CheckResult.of(ok, message, '\n    '.join(str(v) for v in space) or None, dimension=len(space))

    def run_generalized() -> CheckResult:
        dim = module.generalized_weight_dim(target)
        ok, message = _expect('dimension', dim, params.get('generalized'))
        return CheckResult.of(ok, message, dimension=dim)

    return [Check(f'ordinary[{label}]', run_ordinary, 30.0), Check(f'generalized[{label}]', run_generalized, 60.0)]


@suite('aha-iso', 'sign-induced modules against Y-induced modules')
def aha_iso_suite(params: Parameters) -> list[Check]:
    dp = daha_params(params)
    weights = [weight_arg(dp, params.get('weight'))]
    if dp.regime is not Regime.SL:
        rng = random.Random(params.get('seed', 0))
        for _ in range(int(params.get('samples', 3))):
            exponents = sorted(rng.sample(range(-3, 4), dp.n), reverse=True)
            weights.append(WeightPoint(dp, [dp.t**k for k in exponents]))

    checks = []
    for pt in weights:

        def run(pt: WeightPoint = pt) -> CheckResult:
            report = check_ind_sh(dp, pt)
            return CheckResult.of(
                report.passed,
                f'rank {report.rank}/{report.dimension}, annihilated={report.annihilated}, power sums={report.power_sums}',
                f'g(Y) e- (x) v = ({report.constant}) 1 (x) v, expected ({report.expected})',
            )

        checks.append(Check(f'ind-sh[{format_weight(pt)}]', run, 30.0))

    if dp.n == 2 and dp.regime is not Regime.SL:
        pt = WeightPoint(dp, [LaurentPoly.constant(dp.space, 1), dp.t**-2])
        closed = dp.scalar(LaurentPoly.constant(dp.space, 1) - dp.t**-2)

        def run_closed() -> CheckResult:
            report = check_ind_sh(dp, pt)
            return CheckResult.of(report.constant == closed, f'g(Y) e- (x) v = ({report.constant}) 1 (x) v', f'expected ({closed})')

        checks.append(Check('ind-sh-constant[1,t^-2]', run_closed, 10.0))

    return checks


# Endomorphism rings
def _identified(table: Any, kind: Optional[IdentificationKind] = None, group: Optional[str] = None, dimension: Optional[int] = None) -> CheckResult:
    ident = identify(table)
    ok = (ident.kind is not IdentificationKind.UNKNOWN if kind is None else ident.kind is kind) and table.is_associative() and table.identity() is not None
    if group is not None:
        ok = ok and ident.group == group
    if dimension is not None:
        ok = ok and table.dimension == dimension
    return CheckResult.of(
        ok,
        f'{ident}, dimension {table.dimension}',
        '\n    '.join(table.text()) if not ok else None,
        dimension=table.dimension,
        identification=str(ident),
        semisimple=table.semisimple,
        weight=table.weight,
    )


@suite('nopoles', 'leading terms and poles of the conjugated intertwiners at q^rho')
def nopoles_suite(params: Parameters) -> list[Check]:
    dp = daha_params(params)
    _require_spherical(dp, 'nopoles')
    return _nopoles_checks(dp)


def _nopoles_checks(dp: DahaParams) -> list[Check]:
    qrho = WeightPoint.qrho(dp)
    checks = []
    for w in finite_perms(dp.n):

        def run(w: AffinePerm = w) -> CheckResult:
            report = nopoles_check(dp, w)
            classes = classify_inversions(dp, report.u, qrho)
            return CheckResult.of(
                report.passed,
                f'leading term T{report.u}' if report.passed else 'leading term or pole analysis fails',
                '; '.join(report.offending) or None,
                **{k: len(v) for k, v in classes.items()},
            )

        checks.append(Check(f'nopoles[{w.word_str}]', run, 60.0))
    return checks


@suite('endring', 'endomorphism ring of a Y-induced module')
def endring_suite(params: Parameters) -> list[Check]:
    dp = daha_params(params)
    pt = weight_arg(dp, params.get('weight'))
    window = params.get('gamma')
    g = AffinePerm(list(window)) if window else None
    expect = params.get('expect')
    kinds = {'group': IdentificationKind.GROUP_ALGEBRA, 'nilpotent': IdentificationKind.NILPOTENT_WITNESS, 'unknown': IdentificationKind.UNKNOWN}
    if expect is not None and expect not in kinds:
        raise ConfigError(f'expect should be one of {sorted(kinds)}, got "{expect}"')

    def run() -> CheckResult:
        kind = kinds[expect] if expect is not None else None
        return _identified(end_ring(dp, pt, g), kind, params.get('group'), params.get('dimension'))

    return [Check(f'end-ring[{format_weight(pt)}]', run, 120.0)]


@suite('springer', 'the Springer theorem on the double affine and quantum torus sides')
def springer_suite(params: Parameters) -> list[Check]:
    N = int(params.get('N') or params.get('n', 2))
    dp = daha_params(params, n=N)
    _require_spherical(dp, 'springer')
    group = f'S_{N}'
    checks = _nopoles_checks(dp)

    perms = finite_perms(N) if N <= 3 else [AffinePerm.simple(N, i) for i in range(1, N)]
    for w, u in itertools.product(perms, repeat=2):
        checks.append(Check(f'nu-product[{w.word_str}, {u.word_str}]', lambda w=w, u=u: CheckResult.of(nu_product_check(dp, w, u)), 120.0))

    if dp.regime is Regime.SL:

        def run_zprod() -> CheckResult:
            product = LaurentPoly.constant(dp.space, 1)
            for a in WeightPoint.qrho(dp).entries:
                product = product * a
            return CheckResult.of(product == dp.zprod, f'prod q^rho = {product}, Zprod = {dp.zprod}')

        checks.append(Check('zprod-consistency', run_zprod, 1.0))

    checks.append(Check('end-ring[qrho]', lambda: _identified(end_ring(dp, WeightPoint.qrho(dp)), IdentificationKind.GROUP_ALGEBRA, group, factorial(N)), 300.0))
    checks.append(Check('qtorus-end-ring[unit]', lambda: _identified(qt_end_ring(dp, unit_weight(dp)), IdentificationKind.GROUP_ALGEBRA, group, factorial(N)), 60.0))
    checks.append(Check('springer-decomposition', lambda: _decomposition(N, dp.regime), 60.0))
    return checks


def _decomposition(N: int, regime: Regime) -> CheckResult:
    summands = springer_decomposition_check(N, regime)
    return CheckResult.of(
        all(s.passed for s in summands),
        f'{len(summands)} simple summands',
        '\n    '.join(str(s) for s in summands),
        multiplicities={'(' + ','.join(map(str, s.shape)) + ')': s.dimension for s in summands},
    )


@suite('chisuite', 'endomorphism rings at a transverse descending weight')
def chi_suite(params: Parameters) -> list[Check]:
    dp = daha_params(params)
    pt = weight_arg(dp, params.get('weight'), 'qrho')
    if not pt.descending:
        raise ConfigError(f'chisuite needs a descending weight, got {format_weight(pt)}')
    label = format_weight(pt)
    group, dimension = params.get('group'), params.get('dimension')

    def run_daha() -> CheckResult:
        table = end_ring(dp, pt)
        result = _identified(table, IdentificationKind.GROUP_ALGEBRA, group, dimension)
        if result.status is Status.PASS and not table.semisimple:
            return CheckResult(Status.FAIL, f'{result.message}, not semisimple', details=result.details)
        return result

    def run_count() -> CheckResult:
        count = multipartition_count(pt)
        ok, message = _expect('multipartitions', count, params.get('multipartitions'))
        return CheckResult.of(ok, message, count=count)

    return [
        Check(f'end-ring[{label}]', run_daha, 120.0),
        Check(f'qtorus-end-ring[{label}]', lambda: _identified(qt_end_ring(dp, pt), IdentificationKind.GROUP_ALGEBRA, group, dimension), 60.0),
        Check(f'multipartitions[{label}]', run_count, 1.0),
    ]


@suite('nilpotent', 'the weight (1, 1, t^-2) whose endomorphism ring has a nilpotent element')
def nilpotent_suite(params: Parameters) -> list[Check]:
    dp = DahaParams(3, 3, Regime.GL)
    pt = parse_weight(dp, 't^0,t^0,t^-2')
    words = [[], [1], [2, 1, 0, 1, 2], [1, 2, 1, 0, 1, 2], [2, 1, 0, 1, 2, 1], [1, 2, 1, 0, 1, 2, 1]]
    expected = {AffinePerm.from_word(3, word) for word in words}
    module = IndYModule(dp, pt)

    def run_stabilizer() -> CheckResult:
        found = set(weight_solutions(pt, pt))
        return CheckResult.of(found == expected, f'{len(found)} elements', ' '.join(sorted(x.word_str for x in found)))

    def run_dims() -> CheckResult:
        ordinary, generalized = len(module.ordinary_weight_space(pt)), module.generalized_weight_dim(pt)
        return CheckResult.of((ordinary, generalized) == (2, 6), f'ordinary {ordinary}, generalized {generalized}')

    def run_square() -> CheckResult:
        E = build_endo(module, AffinePerm.simple(3, 2), AffinePerm([1, 2, 0]), rescale=[(-1, 1)])
        square = compose(E, E)
        return CheckResult.of(bool(E.vector) and not square.vector, 'E != 0 and E o E = 0', str(E.vector))

    return [
        Check('stabilizer[1,1,t^-2]', run_stabilizer, 10.0),
        Check('weight-spaces[1,1,t^-2]', run_dims, 60.0),
        Check('end-ring[1,1,t^-2]', lambda: _identified(end_ring(dp, pt), IdentificationKind.NILPOTENT_WITNESS, dimension=2), 120.0),
        Check('nilpotent-endomorphism', run_square, 60.0),
    ]


@suite('nondescending', 'the weight (t^-2, 1), whose induced module is a non-split extension')
def nondescending_suite(params: Parameters) -> list[Check]:
    dp = DahaParams(2, 2, Regime.GL)
    b = parse_weight(dp, 't^-2,t^0')
    sign = induce_from_aha_char(dp, parse_weight(dp, 't^0,t^-2'), 'SIGN')
    triv = induce_from_aha_char(dp, parse_weight(dp, 't^-2,t^0'), 'TRIV')

    def run_end() -> CheckResult:
        table = end_ring(dp, b)
        return CheckResult.of(table.dimension == 1, f'dimension {table.dimension}', str(identify(table)))

    def run_sign() -> CheckResult:
        dim = len(sign.ordinary_weight_space(b))
        return CheckResult.of(dim == 0, f'ordinary dimension {dim}')

    def run_triv() -> CheckResult:
        ordinary, generalized = len(triv.ordinary_weight_space(b)), triv.generalized_weight_dim(b)
        return CheckResult.of((ordinary, generalized) == (1, 2), f'ordinary {ordinary}, generalized {generalized}')

    return [
        Check('end-ring[t^-2,1]', run_end, 30.0),
        Check('sign-module[t^-2,1]', run_sign, 10.0),
        Check('trivial-module[t^-2,1]', run_triv, 10.0),
    ]


# Quantum torus
@suite('qtorus', 'the quantum torus smash product and its Springer decomposition')
def qtorus_suite(params: Parameters) -> list[Check]:
    N = int(params.get('N') or params.get('n', 2))
    dp = daha_params(params, n=N)
    module = QTIndModule(dp, unit_weight(dp))

    def run_relations() -> CheckResult:
        relations = qt_relations(dp)
        return _failures([r.name for r in relations if not r.holds], len(relations))

    def run_space() -> CheckResult:
        space = qt_weight_space(module, module.weight)
        return CheckResult.of(len(space) == factorial(N), f'dimension {len(space)}', dimension=len(space))

    alpha = [1] + [0] * (N - 1)

    return [
        Check(f'relations[N={N}]', run_relations, 10.0),
        Check('weight-space[unit]', run_space, 10.0),
        Check('end-ring[unit]', lambda: _identified(qt_end_ring(dp, module.weight), IdentificationKind.GROUP_ALGEBRA, f'S_{N}', factorial(N)), 60.0),
        Check('y-semisimple', lambda: CheckResult.of(qt_y_semisimple(module)), 30.0),
        Check('shift-bijection', lambda: CheckResult.of(qt_shift_bijection(module, alpha, AffinePerm.simple(N, 1))), 30.0),
        Check('springer-decomposition', lambda: _decomposition(N, dp.regime), 60.0),
    ]


# Reflection equation algebra
@suite('rea-check', 'R-matrix conventions and the quantum determinant of the reflection equation algebra')
def rea_suite(params: Parameters) -> list[Check]:
    N = int(params.get('N') or 2)
    if not 2 <= N <= 3:
        raise ConfigError(f'rea-check supports N = 2 and 3, got {N}')
    full = bool(params.get('full', False))
    checks = []
    for convention in ('upper', 'lower'):

        def run(convention: str = convention) -> CheckResult:
            report = hecke_and_ybe_check(N, convention)
            # A failing convention is not an error as long as another one passes
            return CheckResult(Status.PASS if report.passed else Status.SKIP, str(report))

        checks.append(Check(f'hecke-ybe[{convention}]', run, 10.0))

    def run_select() -> CheckResult:
        report = select_convention(N)
        return CheckResult.of(report.passed and report.rescale_invariant, f'selected {report.convention}', str(report))

    def run_detq() -> CheckResult:
        terms = detq(N)
        return CheckResult.of(len(terms) == factorial(N), f'{len(terms)} terms')

    def run_centrality() -> CheckResult:
        if N == 3 and not full:
            return CheckResult(Status.SKIP, 'N = 3 centrality is gated, set full=true')
        report = centrality_check(N)
        return CheckResult.of(report.central, str(report), report.certificate, slice_rank=report.slice_rank, words=report.words)

    def run_antisymmetrizer() -> CheckResult:
        ok, z = antisymmetrizer_check(N, select_convention(N).convention)
        return CheckResult.of(ok, 'e- (v1 (x) ... (x) vN) spans the image', z)

    def run_statistics() -> CheckResult:
        report = statistics_check(N)
        return CheckResult.of(report.passed, f'eulerian {report.eulerian}, mahonian {report.mahonian}')

    checks += [
        Check('select-convention', run_select, 10.0),
        Check(f'detq[N={N}]', run_detq, 1.0),
        Check(f'centrality[N={N}]', run_centrality, 10.0 if N == 2 else 600.0),
        Check(f'antisymmetrizer[N={N}]', run_antisymmetrizer, 10.0),
        Check(f'statistics[N={N}]', run_statistics, 1.0),
    ]
    return checks


@suite('morita', 'bounded search for a witness that the sign idempotent generates the unit ideal')
def morita_suite(params: Parameters) -> list[Check]:
    dp = daha_params(params)
    bound = int(params.get('degree_bound', 1))

    def run() -> CheckResult:
        witness = morita_witness_search(dp, bound)
        if witness is None:
            return CheckResult(Status.SKIP, f'NOT_FOUND at degree bound {bound} (inconclusive)')
        return CheckResult(Status.PASS, f'{len(witness.terms)} terms', str(witness))

    return [Check(f'morita[n={dp.n}, bound={bound}]', run, 120.0)]
