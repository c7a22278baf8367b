from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from mme.fields import FieldContext
from mme.polys import BiPoly, Poly, graph_bipoly, poly_gcd

Q = FieldContext.rationals()

small_coeffs = st.lists(
    st.integers(min_value=-9, max_value=9), min_size=1, max_size=6
)


def poly_from(coeffs):
    return Poly(Q, coeffs)


def test_basic_arithmetic():
    p = poly_from([1, 2, 1])  # (z+1)^2
    q = poly_from([1, 1])
    assert q * q == p
    assert p.divide_exact(q) == q
    assert p % q == Poly.zero(Q)
    assert p.derivative() == poly_from([2, 2])


def test_divide_exact_returns_none_on_remainder():
    assert poly_from([1, 0, 1]).divide_exact(poly_from([1, 1])) is None


def test_gcd_of_shared_factor():
    a = poly_from([1, 1]) * poly_from([-2, 1])
    b = poly_from([1, 1]) * poly_from([3, 1])
    assert poly_gcd(a, b).monic() == poly_from([1, 1])


def test_squarefree_decomposition_recovers_multiplicities():
    p = poly_from([1, 1]) ** 3 * poly_from([-1, 1])
    by_mult = {m: q.monic() for q, m in p.squarefree_decomposition()}
    assert by_mult[3] == poly_from([1, 1])
    assert by_mult[1] == poly_from([-1, 1])


def test_compose_and_eval():
    p = poly_from([0, 0, 1])
    q = poly_from([1, 1])
    assert p.compose(q) == poly_from([1, 2, 1])
    assert p(Fraction(3)) == Fraction(9)


def test_graph_bipoly_antisymmetric_and_diagonal_divisible():
    num, den = poly_from([0, -3, 0, 1]), poly_from([1])
    P = graph_bipoly(num, den)
    assert P.is_antisymmetric()
    assert P.bidegree == (3, 3)
    diag = BiPoly(Q, [[0, -1], [1, 0]])  # x - y
    quotient = P.divide_exact(diag)
    assert quotient is not None
    assert quotient * diag == P


def test_graph_bipoly_for_rational_map():
    P = graph_bipoly(poly_from([1, 0, 1]), poly_from([0, 1]))  # (z^2+1)/z
    assert P.bidegree == (2, 2)
    assert P.is_antisymmetric()
    assert P.eval_exact(Fraction(2), Fraction(1, 2)).is_zero()


def test_substitute_mobius_preserves_bidegree():
    P = graph_bipoly(poly_from([0, -3, 0, 1]), poly_from([1]))
    Pm = P.substitute_mobius(poly_from([1, 2]), poly_from([3, 1]))
    assert Pm.bidegree == (3, 3)
    assert Pm.is_antisymmetric()


@settings(max_examples=60, deadline=None)
@given(small_coeffs, small_coeffs)
def test_degree_of_product_is_additive(a, b):
    p, q = poly_from(a), poly_from(b)
    if p.is_zero() or q.is_zero():
        assert (p * q).is_zero()
    else:
        assert (p * q).degree == p.degree + q.degree


@settings(max_examples=60, deadline=None)
@given(small_coeffs, small_coeffs)
def test_exact_division_inverts_multiplication(a, b):
    p, q = poly_from(a), poly_from(b)
    if q.is_zero():
        return
    assert (p * q).divide_exact(q) == p


@settings(max_examples=40, deadline=None)
@given(small_coeffs, small_coeffs, small_coeffs)
def test_bipoly_division_inverts_multiplication(a, b, c):
    # build P and D as products of separated-variable slices
    P = BiPoly(Q, [list(a), list(b)])
    D = BiPoly(Q, [list(c)])
    if D.is_zero():
        return
    assert (P * D).divide_exact(D) == P
