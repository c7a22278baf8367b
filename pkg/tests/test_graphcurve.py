import math

import pytest

from mme.fields import FieldContext
from mme.graphcurve import analyze, genus_zero_parametrization_check
from mme.numeric import ConsistencyError
from mme.polys import BiPoly, Poly, graph_bipoly
from mme.ratmaps import RationalMap
from conftest import random_rational_map, rng_for

Q = FieldContext.rationals()


def rmap(num, den=(1,)):
    return RationalMap(Poly(Q, list(num)), Poly(Q, list(den)))


def bidegs(report):
    return sorted(tuple(c["bidegree"]) for c in report["components"])


def test_chebyshev_cubic_decomposition():
    report, _curve, _mon, certs = analyze(rmap([0, -3, 0, 1]), seed=0)
    assert bidegs(report) == [(1, 1), (2, 2)]
    assert all(c["genus"] == 0 for c in report["components"])
    polys = {BiPoly(Q, [[0, -1], [1, 0]]).normalized()}
    polys.add(BiPoly(Q, [[-3, 0, 1], [0, 1, 0], [1, 0, 0]]).normalized())
    got = {c.exact_poly.normalized() for c in certs}
    assert got == polys


def test_power_map_splits_into_lines():
    report, _c, _m, certs = analyze(rmap([0, 0, 0, 1]), seed=1)
    assert bidegs(report) == [(1, 1), (1, 1), (1, 1)]
    # the two non-diagonal lines x = (cube root of unity) * y exist
    # geometrically but are not defined over Q, so no exact factor
    for cert in certs:
        if cert.is_diagonal:
            assert cert.exact_poly is not None
        else:
            assert cert.exact_poly is None


def test_generic_quadratic_two_components():
    report, *_ = analyze(rmap([1, 2, 1], [2, -1, 3]), seed=0)
    assert bidegs(report) == [(1, 1), (1, 1)]


def test_generic_map_genus_matches_adjunction():
    # a degree-4 map with generic ramification: non-diagonal component is
    # irreducible of bidegree (3,3) and genus (d-2)^2 = 4
    rng = rng_for("generic-genus")
    for _ in range(10):
        f = random_rational_map(4, rng)
        report, *_ = analyze(f, seed=2, reconstruct=False)
        bd = bidegs(report)
        if bd == [(1, 1), (3, 3)]:
            nondiag = [c for c in report["components"] if not c["is_diagonal"]][0]
            assert nondiag["genus"] == 4
            return
    pytest.skip("no generic degree-4 sample found")


def test_bidegree_sums_to_degree():
    rng = rng_for("bidegree-sum")
    for d in (2, 3, 4):
        f = random_rational_map(d, rng)
        report, *_ = analyze(f, seed=3, reconstruct=False)
        rs = [c["bidegree"] for c in report["components"]]
        assert sum(r[0] for r in rs) == d
        assert all(r[0] == r[1] for r in rs)


def test_ramification_cycle_type_partition_sizes():
    report, *_ = analyze(rmap([0, -3, 0, 1]), seed=0)
    for comp in report["components"]:
        r = comp["bidegree"][0]
        for cycle_type in comp["ramification"]:
            assert sum(cycle_type) == r


def test_reconstructed_factors_multiply_to_graph_polynomial():
    f = rmap([1, 0, 1], [0, 1])  # z + 1/z
    report, _c, _m, certs = analyze(f, seed=0)
    product = certs[0].exact_poly
    for cert in certs[1:]:
        product = product * cert.exact_poly
    P = graph_bipoly(f.num, f.den)
    assert product.normalized() == P.normalized()


def test_genus_zero_parametrization_check():
    _r, _c, _m, certs = analyze(rmap([0, -3, 0, 1]), seed=0)
    for cert in certs:
        assert genus_zero_parametrization_check(cert) == "PASS"


def test_diagonal_component_identified_uniquely():
    report, *_ = analyze(rmap([2, 0, 0, 1], [0, 0, 1]), seed=0)  # (z^3+2)/z^2
    diag = [c for c in report["components"] if c["is_diagonal"]]
    assert len(diag) == 1
    assert diag[0]["bidegree"] == [1, 1]


def test_sphere_relation_violation_raises():
    from mme.graphcurve import _check_sphere_relation

    # the product of these transpositions in either order is not the identity
    perms = [(1, 0, 2), (0, 2, 1)]
    with pytest.raises(ConsistencyError):
        _check_sphere_relation(3, perms, [0, 1])
    # genuine involution pair is accepted
    _check_sphere_relation(3, [(1, 0, 2), (1, 0, 2)], [0, 1])


def test_riemann_hurwitz_genus_is_integer_and_nonnegative():
    rng = rng_for("rh-int")
    for d in (2, 3):
        f = random_rational_map(d, rng)
        report, *_ = analyze(f, seed=4, reconstruct=False)
        for comp in report["components"]:
            g = comp["genus"]
            assert isinstance(g, int) and g >= 0
