"""
Text grammars for weights and generator words, and the canonical text form of algebra elements.

Weights are comma separated entries ``[rational *] factor (* factor)*`` with factors ``t^k``, ``t^(a/b)``, ``q^k``, ``u^k`` or ``1``.
Words are whitespace separated generators ``T0 T1^-1 pi pi^-1 Y1 Y1^-1 X1``, multiplied left to right, with ``Z`` in place of ``Y`` in the SL regime.
"""
from __future__ import annotations

import logging
import re
from fractions import Fraction
from typing import TYPE_CHECKING, Any

from sympy import QQ

from ._errors import ConfigError, ParseError
from ._laurent import LaurentPoly
from ._params import DahaParams, WeightPoint

if TYPE_CHECKING:
    from ._daha import DahaElement
    from ._hecke import NormalForm

__all__ = ['parse_weight', 'parse_word', 'format_element', 'format_weight', 'format_scalar']
log = logging.getLogger(__name__)

_COEF = re.compile(r'^([+-]?\d+(?:/\d+)?)$')
_FACTOR = re.compile(r'^(?P<name>[tqu])(?:\^(?:(?P<int>[+-]?\d+)|\((?P<num>[+-]?\d+)/(?P<den>\d+)\)))?$')
_GENERATOR = re.compile(r'^(?P<name>T|Y|Z|X)(?P<index>\d+)(?:\^(?P<power>[+-]?\d+))?$')
_PI = re.compile(r'^pi(?:\^(?P<power>[+-]?\d+))?$')


def _factor_exponent(params: DahaParams, name: str, power: Fraction, text: str) -> tuple[int, ...]:
    space = params.space
    if power.denominator == 1:
        if name not in space:
            raise ParseError(f'Symbol "{name}" in "{text}" does not exist for {params!r}')
        return space.exponent(name, int(power))

    # Fractional powers are only available for t, through the root variable u
    if name != 't' or 'u' not in space.names:
        raise ParseError(f'Fractional power in "{text}" needs the root variable u (SL regime or N not dividing 2n)')
    upower = power * params.N
    if upower.denominator != 1:
        raise ParseError(f'"{text}" is not an integral power of u = t^(1/{params.N})')
    return space.exponent('u', int(upower))


def _parse_entry(params: DahaParams, text: str) -> LaurentPoly:
    parts = [p.strip() for p in text.split('*')]
    if not parts or any(not p for p in parts):
        raise ParseError(f'Empty factor in weight entry "{text}"')

    coefficient = Fraction(1)
    if _COEF.match(parts[0]) and (len(parts) > 1 or parts[0] != '1'):
        coefficient = Fraction(parts.pop(0))
        if coefficient == 0:
            raise ParseError(f'Weight entry "{text}" is zero')

    exp = [0] * params.space.arity
    for part in parts or ['1']:
        if part == '1':
            continue
        match = _FACTOR.match(part)
        if match is None:
            raise ParseError(f'Cannot parse factor "{part}" in weight entry "{text}"')
        if match['int'] is not None:
            power = Fraction(int(match['int']))
        elif match['num'] is not None:
            power = Fraction(int(match['num']), int(match['den']))
        else:
            power = Fraction(1)
        for idx, value in enumerate(_factor_exponent(params, match['name'], power, text)):
            exp[idx] += value

    return LaurentPoly.monomial(params.space, exp, QQ(coefficient.numerator, coefficient.denominator))


def parse_weight(params: DahaParams, text: str) -> WeightPoint:
    """
    Parse a weight such as ``t^0,t^-2,t^-4``.

    Raises:
        ParseError: malformed entries or a wrong number of entries
        ConfigError: the entries do not form a valid weight (e.g. the SL product constraint fails)

    Example:
        >>> p = DahaParams(3, regime='GL')
        >>> str(parse_weight(p, 't^0, t^0, t^-2'))
        '(1, 1, t^-2)'
    """
    entries = [e.strip() for e in text.split(',')]
    if len(entries) != params.n:
        raise ParseError(f'Weight "{text}" has {len(entries)} entries, expected {params.n}')

    polys = [_parse_entry(params, e) for e in entries]
    try:
        return WeightPoint(params, polys)
    except ValueError as err:
        raise ConfigError(str(err)) from err


def parse_word(params: DahaParams, text: str) -> DahaElement:
    """
    Multiply out a generator word such as ``T1 Y1 T1``.

    Raises:
        ParseError: unknown tokens or generator indices out of range
    """
    from ._daha import DahaElement

    n = params.n
    result = DahaElement.one(params)
    tokens = text.split()
    if not tokens:
        raise ParseError('Empty generator word')

    for token in tokens:
        if (match := _PI.match(token)) is not None:
            power = int(match['power'] or 1)
            result = result * DahaElement.pi(params, power)
            continue

        match = _GENERATOR.match(token)
        if match is None:
            raise ParseError(f'Unknown generator "{token}"')
        name, index, power = match['name'], int(match['index']), int(match['power'] or 1)

        if name == 'T':
            if not 0 <= index < n:
                raise ParseError(f'T{index} does not exist for n = {n}')
            gen = DahaElement.T(params, index) if power > 0 else DahaElement.T_inv(params, index)
            for _ in range(abs(power)):
                result = result * gen
        else:
            if not 1 <= index <= n:
                raise ParseError(f'{name}{index} does not exist for n = {n}')
            if name in 'YZ' and name != params.y_name:
                raise ParseError(f'{name}{index} does not exist in the {params.regime.name} regime, use {params.y_name}{index}')
            if name == 'X':
                result = result * DahaElement.X(params, index, power)
            else:
                result = result * DahaElement.Y(params, index, power)

    log.debug('Parsed "%s" into %d terms', text, len(result))
    return result


def format_scalar(value: Any) -> str:
    """Text form of an element of the parameter field."""
    return str(value.as_expr()) if hasattr(value, 'as_expr') else str(value)


def _coefficient_prefix(poly: LaurentPoly, rest: str) -> str:
    if not rest:
        return str(poly)
    if poly.is_constant:
        c = poly.leading()[1]
        if c == 1:
            return rest
        if c == -1:
            return f'-{rest}'
        return f'{c} * {rest}'
    if poly.is_monomial:
        return f'{poly} * {rest}'
    return f'({poly}) * {rest}'


def format_element(a: NormalForm) -> str:
    """
    Canonical text form, one term per basis element ``T[w] * Y^(beta)`` with its coefficient in front.

    Elements with rational coefficients print one term ``T[w] * (g_w)`` per permutation.
    """
    if not a.terms:
        return '0'

    params = a.params
    parts: list[str] = []
    if all(isinstance(g, LaurentPoly) for g in a.terms.values()):
        grouped: dict[tuple[Any, tuple[int, ...]], LaurentPoly] = {}
        for w, g in a.terms.items():
            for exp, coef in g.terms.items():
                key = (w, params.y_part(exp))
                term = LaurentPoly._raw(params.space, {params.base_part(exp): coef})
                grouped[key] = grouped[key] + term if key in grouped else term

        for (w, beta), coef in sorted(grouped.items(), key=lambda item: (item[0][0], item[0][1])):
            if not coef:
                continue
            factors = []
            if w.length or w.degree:
                factors.append(f'T{w}')
            if any(beta):
                factors.append(f'{params.y_name}^(' + ','.join(str(b) for b in beta) + ')')
            parts.append(_coefficient_prefix(coef, ' * '.join(factors)))
    else:
        for w in sorted(a.terms):
            g = a.terms[w]
            parts.append(f'({g})' if not (w.length or w.degree) else f'T{w} * ({g})')

    text = parts[0] if parts else '0'
    for part in parts[1:]:
        text += f' - {part[1:]}' if part.startswith('-') else f' + {part}'
    return text


def format_weight(pt: WeightPoint) -> str:
    """Inverse of :func:`parse_weight`."""
    params = pt.params
    entries = []
    for a in pt.entries:
        exp, c = a.leading()
        factors = []
        for name, e in zip(params.space.names, exp):
            if not e:
                continue
            if name == 'u':
                power = Fraction(e, params.N)
                factors.append(f't^{power.numerator}' if power.denominator == 1 else f't^({power.numerator}/{power.denominator})')
            else:
                factors.append(f'{name}^{e}')
        body = '*'.join(factors) or 't^0'
        entries.append(body if c == 1 else f'{c}*{body}')
    return ','.join(entries)
