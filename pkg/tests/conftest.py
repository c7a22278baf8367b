import numpy as np
import pytest

from mme.fields import FieldContext
from mme.polys import Poly
from mme.ratmaps import RationalMap


@pytest.fixture
def Q():
    return FieldContext.rationals()


def random_rational_map(degree, rng, ctx=None, coeff_bound=5):
    """A random exact map of the given degree with small integer coefficients."""
    ctx = ctx or FieldContext.rationals()
    while True:
        num = [int(rng.integers(-coeff_bound, coeff_bound + 1)) for _ in range(degree + 1)]
        den = [int(rng.integers(-coeff_bound, coeff_bound + 1)) for _ in range(degree + 1)]
        num[-1] = num[-1] or 1
        if all(c == 0 for c in den):
            continue
        try:
            f = RationalMap(Poly(ctx, num), Poly(ctx, den))
        except Exception:
            continue
        if f.degree == degree:
            return f


def random_polynomial_map(degree, rng, ctx=None, coeff_bound=5):
    ctx = ctx or FieldContext.rationals()
    num = [int(rng.integers(-coeff_bound, coeff_bound + 1)) for _ in range(degree + 1)]
    num[-1] = num[-1] or 1
    return RationalMap(Poly(ctx, num), Poly(ctx, [1]))


def rng_for(name, seed=0):
    from mme.numeric import named_rng

    return named_rng(seed, name)
