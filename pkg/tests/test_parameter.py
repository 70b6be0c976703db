from typing import Literal, Optional, Union

import pytest

import dahalab
from dahalab._parameter import cast_arg
from dahalab.algebra import ConfigError


def test_from_file_basic(tmp_path):
    """Test that we can load parameters from arbitrary files"""
    (tmp_path / 'param.py').write_text('import dahalab\nparams = dahalab.Parameters(a=1)\n')

    p = dahalab.Parameters.from_file(tmp_path / 'param.py')
    assert p.a == 1


def test_from_file_func(tmp_path):
    """Test that we can load functions with arguments as parameters from arbitrary files"""
    (tmp_path / 'param.py').write_text('import dahalab\ndef params(a):\n    return dahalab.Parameters(a=a)\n')

    p = dahalab.Parameters.from_file(tmp_path / 'param.py', a=123)
    assert p.a == 123


def test_from_file_cast(tmp_path):
    """Test that string arguments are converted with the type hints of the parameter function"""
    (tmp_path / 'param.py').write_text(
        'from typing import Optional\n'
        'import dahalab\n'
        'def params(N: int = 2, full: bool = False, word: tuple[int, ...] = (1,), alpha: Optional[int] = None):\n'
        '    return dahalab.Parameters(N=N, full=full, word=word, alpha=alpha)\n'
    )

    with dahalab.Parameters.enable_cast():
        p = dahalab.Parameters.from_file(tmp_path / 'param.py', N='3', full='yes', word='1,2,0', alpha='none')
    assert (p.N, p.full, p.word, p.alpha) == (3, True, (1, 2, 0), None)

    # Without casting, strings are passed through
    p = dahalab.Parameters.from_file(tmp_path / 'param.py', N='3')
    assert p.N == '3'

    with dahalab.Parameters.enable_cast(), pytest.raises(ConfigError):
        dahalab.Parameters.from_file(tmp_path / 'param.py', N='three')


@pytest.mark.parametrize(
    'content, variable',
    [
        ('x = 1\n', 'params'),
        ('params = 1\n', 'params'),
        ('def params():\n    return 1\n', 'params'),
        ('def params(a):\n    pass\n', 'params'),
        ('params = (\n', 'params'),
    ],
)
def test_from_file_errors(tmp_path, content, variable):
    """Test that invalid config files raise a ConfigError"""
    (tmp_path / 'param.py').write_text(content)
    with pytest.raises(ConfigError):
        dahalab.Parameters.from_file(tmp_path / 'param.py', variable)


def test_from_file_missing(tmp_path):
    """Test that a missing config file raises a ConfigError"""
    with pytest.raises(ConfigError, match='does not exist'):
        dahalab.Parameters.from_file(tmp_path / 'nothing.py')


def test_save_load(tmp_path):
    """Test Saving and Loading"""
    p1 = dahalab.Parameters(a=1, _b=2, c=[1, 2], d=object())
    p1.save(tmp_path / 'param.json')

    p2 = dahalab.Parameters(a=0)
    p2.load(tmp_path / 'param.json')

    assert p2.a == p1.a
    assert p2.c == [1, 2]
    assert 'b' in p1
    assert 'b' not in p2
    assert 'd' not in p2


def test_volatile():
    """Test that underscored keys are stored without underscore and remembered as volatile"""
    p = dahalab.Parameters(n=2, _jobs=4)
    assert p.jobs == 4
    assert p.keys() == ['jobs', 'n']
    assert p.volatile == {'jobs'}
    assert 'jobs*' in str(p)


def test_get():
    """Test the get method"""
    p = dahalab.Parameters(a={'value': [0, 1, 2]})
    assert p.get('a.value.1') == 1
    assert p.get('b') is None
    assert p.get('a.none', 123) == 123
    assert p.get('a.value.50') is None


def test_add():
    """Test that adding Parameter objects together keeps the values of the first"""
    p1 = dahalab.Parameters(a=1, _jobs=10)
    p2 = dahalab.Parameters(a=2, b=1)

    p3 = p1 + p2
    assert (p3.a, p3.b, p3.jobs) == (1, 1, 10)
    assert p3.volatile == {'jobs'}

    p4 = p2 + p1
    assert (p4.a, p4.b, p4.jobs) == (2, 1, 10)
    assert p4.volatile == {'jobs'}

    # Originals are untouched
    assert 'b' not in p1
    assert p1.volatile == {'jobs'}


def test_to_dict():
    """Test the text-friendly dictionary of parameters"""
    p = dahalab.Parameters(n=2, word=(1, 0, 1), regime='GL', other=Literal)
    assert p.to_dict() == {'n': 2, 'word': [1, 0, 1], 'regime': 'GL', 'other': str(Literal)}


@pytest.mark.parametrize(
    'text, annotation, expected',
    [
        ('3', int, 3),
        ('0.5', float, 0.5),
        ('text', str, 'text'),
        ('True', bool, True),
        ('no', bool, False),
        ('none', Optional[int], None),
        ('5', Optional[int], 5),
        ('5', Union[int, str], 5),
        ('qrho', Union[int, str], 'qrho'),
        ('GL', Literal['GL', 'SL'], 'GL'),
        ('1,2,0', tuple[int, ...], (1, 2, 0)),
        ('1, 2', list[int], [1, 2]),
        ('1,x', tuple[int, str], (1, 'x')),
        ('a:1,b:2', dict[str, int], {'a': 1, 'b': 2}),
    ],
)
def test_cast_arg(text, annotation, expected):
    """Test conversion of command line strings"""
    assert cast_arg(text, annotation) == expected


@pytest.mark.parametrize(
    'text, annotation',
    [
        ('x', int),
        ('maybe', bool),
        ('GENERIC', Literal['GL', 'SL']),
        ('1,2,3', tuple[int, int]),
    ],
)
def test_cast_arg_error(text, annotation):
    """Test that invalid strings raise"""
    with pytest.raises((ValueError, AssertionError)):
        cast_arg(text, annotation)
