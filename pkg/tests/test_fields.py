from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mme.fields import FieldContext, FieldError, field_configure


def omega():
    return field_configure([1, 1, 1])


def test_rational_context_basics(Q):
    a = Q.from_rational(Fraction(2, 3))
    b = Q.from_rational(5)
    assert (a * b).as_fraction() == Fraction(10, 3)
    assert (a - a).is_zero()
    assert (b / b) == Q.one


def test_context_cache_returns_same_instance():
    assert field_configure([1, 1, 1]) is field_configure([1, 1, 1])
    assert FieldContext.rationals() is FieldContext.rationals()


def test_generator_satisfies_minpoly():
    ctx = omega()
    w = ctx.gen()
    assert (w * w + w + ctx.one).is_zero()
    assert w * w * w == ctx.one


def test_inverse_in_extension():
    ctx = omega()
    w = ctx.gen()
    x = w + ctx.from_rational(2)
    assert x * x.inverse() == ctx.one


def test_reducible_minpoly_rejected():
    with pytest.raises(FieldError):
        field_configure([-1, 0, 1])  # t^2 - 1 = (t-1)(t+1)
    with pytest.raises(FieldError):
        field_configure([1, 1])  # degree-1 extensions are just Q


def test_cross_context_mixing_rejected():
    a = omega().gen()
    b = field_configure([2, 0, 1]).gen()
    with pytest.raises(FieldError):
        a + b


def test_embedding_matches_arithmetic():
    ctx = omega()
    w = ctx.gen()
    z = complex(w)
    assert abs(z * z + z + 1) < 1e-12


fracs = st.fractions(
    min_value=-50, max_value=50, max_denominator=20
)


def elements(ctx):
    deg = len(ctx.minpoly) - 1 if ctx.minpoly else 1
    return st.lists(fracs, min_size=deg, max_size=deg).map(ctx.element)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_field_axioms_in_quadratic_extension(data):
    ctx = omega()
    x = data.draw(elements(ctx))
    y = data.draw(elements(ctx))
    z = data.draw(elements(ctx))
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x + ctx.zero == x
    assert x * ctx.one == x
    if not x.is_zero():
        assert x * x.inverse() == ctx.one


@settings(max_examples=50, deadline=None)
@given(fracs, fracs)
def test_rational_arithmetic_matches_fractions(a, b):
    Q = FieldContext.rationals()
    x, y = Q.from_rational(a), Q.from_rational(b)
    assert (x + y).as_fraction() == a + b
    assert (x * y).as_fraction() == a * b
