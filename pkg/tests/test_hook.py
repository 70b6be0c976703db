from typing import Protocol

import pytest

import dahalab
from dahalab.core import HookParent, ProtocolChecker


def fire(parent, **kwargs):
    run = parent.hooks.run(**kwargs)
    for _ in range(3):
        run()


class HookProtocol(Protocol):
    @dahalab.hooks.a
    def a(self): ...

    @dahalab.hooks.b
    def b(self, extra: int): ...

    @dahalab.hooks.c
    def c(self, a: int, *, b: int): ...


def test_api():
    """Test general hook usage API"""

    class Parent(HookParent, protocol=HookProtocol):
        def __init__(self):
            self.hooks.check(ProtocolChecker().add('parent', HookProtocol), 'raise', 'parent')

            self.value_a = 0
            self.value_b = 0
            self.value_c = 0

        @dahalab.hooks.a
        def test_hook_type(self):
            self.value_a += 1

        @dahalab.hooks.b[5:50:10]
        def test_hook_index(self):
            self.value_b += 1

        @dahalab.hooks.c
        def test_args(self, a, *, b=None):
            self.value_c += a + b

    p = Parent()
    fire(p, type='a')
    assert (p.value_a, p.value_b, p.value_c) == (1, 0, 0)

    for index, expected in ((0, 0), (5, 1), (22, 1), (25, 2), (55, 2)):
        fire(p, type='b', index=index)
        assert p.value_b == expected
    assert p.value_a == 1

    fire(p, type='c', args=[111], kwargs={'b': 222})
    assert (p.value_a, p.value_b, p.value_c) == (1, 2, 333)


def test_runtime():
    """Test that hooks registered at runtime work and are bound to their parent"""

    class Parent(HookParent):
        def __init__(self):
            self.value_a = 0
            self.value_b = 0
            self.hooks.a(self.test_hook_1)
            self.hooks.b[::5](self.test_hook_2)

        def test_hook_1(self):
            self.value_a += 1

        def test_hook_2(self, extra):
            self.value_b += extra

    p = Parent()
    fire(p, type='a')
    assert (p.value_a, p.value_b) == (1, 0)

    fire(p, type='b', index=3, args=[1])
    assert p.value_b == 0
    fire(p, type='b', index=10, args=[4])
    assert p.value_b == 4
    assert p.hooks.types() == {'a', 'b'}


def test_instances_are_independent():
    """Test that class hooks are bound to every instance separately"""

    class Parent(HookParent):
        def __init__(self):
            self.value = 0

        @dahalab.hooks.a
        def increment(self):
            self.value += 1

    p1, p2 = Parent(), Parent()
    fire(p1, type='a')
    assert p1.value == 1
    assert p2.value == 0


def test_timing():
    """Test that early hooks run before normal hooks, which run before late hooks"""
    calls = []

    class Parent(HookParent):
        @dahalab.hooks.a.set_late()
        def late(self):
            calls.append('late')

        @dahalab.hooks.a
        def normal(self):
            calls.append('normal')

        @dahalab.hooks.a.set_early()
        def early(self):
            calls.append('early')

    p = Parent()
    run = p.hooks.run(type='a')
    run()
    assert calls == ['early']
    run()
    run()
    assert calls == ['early', 'normal', 'late']


def test_argument_filtering():
    """Test that hooks only receive the arguments they accept"""
    received = []

    class Parent(HookParent):
        @dahalab.hooks.a
        def none(self):
            received.append(())

        @dahalab.hooks.a
        def first(self, index):
            received.append((index,))

        @dahalab.hooks.a
        def everything(self, *args, **kwargs):
            received.append((*args, *sorted(kwargs.items())))

    fire(Parent(), type='a', args=[1, 2], kwargs={'extra': 3})
    assert sorted(received, key=len) == [(), (1,), (1, 2, ('extra', 3))]


def test_disabled():
    """Test that disabled hooks do not run"""

    class Parent(HookParent):
        def __init__(self):
            self.value = 0

        @dahalab.hooks.a
        def increment(self):
            self.value += 1

    p = Parent()
    p.increment.enabled = False
    fire(p, type='a')
    assert p.value == 0


def test_check():
    """Test that hook types missing from the protocol are reported"""

    class Parent(HookParent):
        @dahalab.hooks.unknown
        def hook(self):
            pass

    checker = ProtocolChecker().add('parent', HookProtocol)
    p = Parent()
    with pytest.raises(TypeError, match='unknown'):
        p.hooks.check(checker, 'raise', 'parent')

    # Other modes do not raise
    p.hooks.check(checker, 'log', 'parent')
    p.hooks.check(checker, 'none', 'parent')
