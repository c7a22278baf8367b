"""Rational self-maps of P^1 and Moebius transformations.

Maps are stored as coprime numerator/denominator polynomials over the
configured exact field, normalized so the leading denominator coefficient
(else numerator) equals 1; equality is then a coefficient-wise test.
Numeric evaluation switches to the chart w = 1/z away from the unit disc,
so infinity is never represented by a large sentinel.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .fields import FieldError
from .numeric import INF, certified_roots, chordal, is_inf
from .polys import Poly

DEFAULT_DEGREE_BUDGET = 4096


class MapError(ValueError):
    pass


class SizeBudgetError(MapError):
    pass


class RationalMap:
    __slots__ = ("ctx", "num", "den", "degree", "_num_rev", "_den_rev")

    def __init__(self, num, den):
        if num.ctx is not den.ctx:
            raise FieldError("numerator and denominator from different contexts")
        ctx = num.ctx
        if den.is_zero():
            raise MapError("denominator is the zero polynomial")
        if num.is_zero():
            raise MapError("numerator is the zero polynomial (constant map)")
        g = num.gcd(den)
        if g.degree > 0:
            num = num.divide_exact(g)
            den = den.divide_exact(g)
        degree = max(num.degree, den.degree)
        if degree < 1:
            raise MapError("constant map is not a rational self-map of degree >= 1")
        # canonical form: monic denominator
        inv = den.leading().inverse()
        self.ctx = ctx
        self.num = num.scale(inv)
        self.den = den.scale(inv)
        self.degree = degree
        self._num_rev = None
        self._den_rev = None

    @classmethod
    def from_coeffs(cls, ctx, num, den):
        return cls(Poly(ctx, num), Poly(ctx, den))

    @classmethod
    def polynomial(cls, poly):
        return cls(poly, Poly.one(poly.ctx))

    def __eq__(self, other):
        if not isinstance(other, RationalMap):
            return NotImplemented
        if self.ctx is not other.ctx:
            raise FieldError("comparing maps from different field contexts")
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return "RationalMap(%r / %r)" % (self.num, self.den)

    # -- algebra -----------------------------------------------------------------

    def compose(self, other):
        """self(other(z)): exact, degree multiplicative."""
        if not isinstance(other, RationalMap):
            raise TypeError("compose expects a RationalMap")
        if self.ctx is not other.ctx:
            raise FieldError("composing maps from different field contexts")
        d = self.degree
        u, v = other.num, other.den
        upow = [Poly.one(self.ctx)]
        vpow = [Poly.one(self.ctx)]
        for _ in range(d):
            upow.append(upow[-1] * u)
            vpow.append(vpow[-1] * v)
        num = Poly.zero(self.ctx)
        den = Poly.zero(self.ctx)
        for i in range(d + 1):
            a = self.num.coeff(i)
            b = self.den.coeff(i)
            if not a.is_zero():
                num = num + upow[i] * vpow[d - i] * a
            if not b.is_zero():
                den = den + upow[i] * vpow[d - i] * b
        return RationalMap(num, den)

    def iterate(self, n, budget=DEFAULT_DEGREE_BUDGET):
        if n < 1:
            raise MapError("iterate exponent must be >= 1")
        if self.degree**n > budget:
            raise SizeBudgetError(
                "degree %d^%d exceeds the composite-degree budget %d"
                % (self.degree, n, budget)
            )
        out = self
        for _ in range(n - 1):
            out = self.compose(out)
        return out

    def derivative_pair(self):
        """(num, den) of f' = (p'q - pq')/q^2, unreduced."""
        w = self.num.derivative() * self.den - self.num * self.den.derivative()
        return w, self.den * self.den

    def wronskian(self):
        return self.num.derivative() * self.den - self.num * self.den.derivative()

    # -- exact evaluation -----------------------------------------------------------

    def eval_exact(self, z):
        """Exact evaluation at a field element or INF; returns element or INF."""
        if is_inf(z):
            u, v = self.ctx.one, self.ctx.zero
        else:
            u, v = z, self.ctx.one
        nu, nv = self.eval_projective(u, v)
        if nv.is_zero():
            return INF
        return nu / nv

    def eval_projective(self, u, v):
        """Exact homogeneous evaluation at (u : v)."""
        d = self.degree
        nu = self.num.eval_homogeneous(u, v, d)
        nv = self.den.eval_homogeneous(u, v, d)
        if nu.is_zero() and nv.is_zero():
            raise MapError("projective evaluation hit (0, 0); input was not a point")
        return nu, nv

    # -- numeric evaluation -----------------------------------------------------------

    def _reversed_pair(self):
        if self._num_rev is None:
            d = self.degree
            self._num_rev = self.num.reversed(d)
            self._den_rev = self.den.reversed(d)
        return self._num_rev, self._den_rev

    def eval_numeric(self, z):
        """Projective numeric evaluation; |z| > 1 is computed in the chart 1/z."""
        if is_inf(z) or abs(z) > 1.0:
            nrev, drev = self._reversed_pair()
            w = 0j if is_inf(z) else 1.0 / z
            n = nrev.eval_numeric(w)
            d = drev.eval_numeric(w)
        else:
            n = self.num.eval_numeric(z)
            d = self.den.eval_numeric(z)
        scale = max(abs(n), abs(d))
        if scale < 1e-12:
            return self._eval_mpmath(z)
        if abs(d) <= 1e-15 * abs(n):
            return INF
        return n / d

    def _eval_mpmath(self, z):
        # near-total cancellation: escalate precision (cannot be a true 0/0
        # because num, den are coprime)
        import mpmath

        with mpmath.workdps(60):
            if is_inf(z):
                w = mpmath.mpc(0)
                nrev, drev = self._reversed_pair()
                n = mpmath.polyval([mpmath.mpc(c) for c in reversed(nrev.numeric_coeffs())], w)
                d = mpmath.polyval([mpmath.mpc(c) for c in reversed(drev.numeric_coeffs())], w)
            else:
                w = mpmath.mpc(z)
                n = mpmath.polyval([mpmath.mpc(c) for c in reversed(self.num.numeric_coeffs())], w)
                d = mpmath.polyval([mpmath.mpc(c) for c in reversed(self.den.numeric_coeffs())], w)
            if abs(d) == 0:
                return INF
            return complex(n / d)

    def eval_derivative_numeric(self, z):
        """f'(z) numerically, finite z in the standard chart."""
        w, q2 = self.derivative_pair()
        return w.eval_numeric(z) / q2.eval_numeric(z)

    def preimages(self, w, residual_tol=1e-10, refine=True):
        """The d preimages of a numeric point w (counted with multiplicity).

        ``refine=False`` skips Newton polishing (hot loops with simple
        roots); the residual certificate still applies.
        """
        from .numeric import projective_roots

        d = self.degree
        nc = self.num.numeric_coeffs()
        dc = self.den.numeric_coeffs()
        nc = np.concatenate([nc, np.zeros(d + 1 - len(nc))])
        dc = np.concatenate([dc, np.zeros(d + 1 - len(dc))])
        if is_inf(w):
            coeffs = dc
        else:
            scale = max(1.0, abs(w))
            coeffs = nc / scale - (w / scale) * dc
        return projective_roots(coeffs, d, residual_tol=residual_tol, refine=refine)

    # -- serialization helpers ---------------------------------------------------------

    def coeff_strings(self):
        def enc(poly):
            out = []
            for c in poly.coeffs:
                if c.is_rational():
                    out.append(str(c.as_fraction()))
                else:
                    out.append(c.coords_strings())
            return out

        return enc(self.num), enc(self.den)


def compose(f, g):
    return f.compose(g)


def iterate(f, n, budget=DEFAULT_DEGREE_BUDGET):
    return f.iterate(n, budget=budget)


def maps_equal(f, g):
    return f == g


class Moebius:
    """z -> (az + b)/(cz + d) with exact entries and nonzero determinant."""

    __slots__ = ("ctx", "a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        ctx = a.ctx
        for x in (b, c, d):
            if x.ctx is not ctx:
                raise FieldError("Moebius entries from different contexts")
        det = a * d - b * c
        if det.is_zero():
            raise MapError("Moebius transformation must have nonzero determinant")
        # normalize: first nonzero of (a, b, c, d) scaled to 1
        for pivot in (a, b, c, d):
            if not pivot.is_zero():
                inv = pivot.inverse()
                break
        self.ctx = ctx
        self.a, self.b, self.c, self.d = a * inv, b * inv, c * inv, d * inv

    @classmethod
    def identity(cls, ctx):
        return cls(ctx.one, ctx.zero, ctx.zero, ctx.one)

    @classmethod
    def from_rationals(cls, ctx, a, b, c, d):
        return cls(
            ctx.from_rational(a), ctx.from_rational(b), ctx.from_rational(c), ctx.from_rational(d)
        )

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def __eq__(self, other):
        if not isinstance(other, Moebius):
            return NotImplemented
        return self.entries() == other.entries()

    def __hash__(self):
        return hash(self.entries())

    def __repr__(self):
        return "Moebius((%r)z + (%r)) / ((%r)z + (%r))" % (self.a, self.b, self.c, self.d)

    def compose(self, other):
        """self after other (matrix product)."""
        return Moebius(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self):
        return Moebius(self.d, -self.b, -self.c, self.a)

    def apply_exact(self, z):
        if is_inf(z):
            if self.c.is_zero():
                return INF
            return self.a / self.c
        den = self.c * z + self.d
        if den.is_zero():
            return INF
        return (self.a * z + self.b) / den

    def apply_numeric(self, z):
        e = [complex(x) for x in self.entries()]
        if is_inf(z):
            if abs(e[2]) == 0:
                return INF
            return e[0] / e[2]
        den = e[2] * z + e[3]
        num = e[0] * z + e[1]
        if abs(den) <= 1e-15 * max(1.0, abs(num)):
            return INF
        return num / den

    def as_rational_map(self):
        return RationalMap(
            Poly(self.ctx, [self.b, self.a]), Poly(self.ctx, [self.d, self.c])
        )

    def is_identity(self):
        return self == Moebius.identity(self.ctx)


def _three_point_matrix(p1, p2, p3, one):
    """Matrix entries (a,b,c,d) of the map sending p1,p2,p3 -> 0,1,inf.

    Duck-typed over exact field elements or complex scalars; INF allowed
    among the inputs.
    """
    zero = one - one
    if is_inf(p1):
        # z -> (p2 - p3)/(z - p3)
        return (zero, p2 - p3, one, -p3) if not is_inf(p3) else (zero, one, one, -p2 + zero)
    if is_inf(p2):
        # z -> (z - p1)/(z - p3)
        if is_inf(p3):
            return (one, -p1, zero, one)
        return (one, -p1, one, -p3)
    if is_inf(p3):
        # z -> (z - p1)/(p2 - p1)
        return (one, -p1, zero, p2 - p1)
    # z -> ((z - p1)(p2 - p3)) / ((z - p3)(p2 - p1))
    return (p2 - p3, -p1 * (p2 - p3), p2 - p1, -p3 * (p2 - p1))


def _mobius_compose(m1, m2):
    a1, b1, c1, d1 = m1
    a2, b2, c2, d2 = m2
    return (
        a1 * a2 + b1 * c2,
        a1 * b2 + b1 * d2,
        c1 * a2 + d1 * c2,
        c1 * b2 + d1 * d2,
    )


def _mobius_inverse(m):
    a, b, c, d = m
    return (d, -b, -c, a)


def mobius_from_three_points(ctx, pairs):
    """The unique exact Moebius with sigma(p_i) = q_i for three pairs.

    ``pairs`` is [(p1, q1), (p2, q2), (p3, q3)] of field elements or INF.
    """
    (p1, q1), (p2, q2), (p3, q3) = pairs
    for u, v in ((p1, p2), (p1, p3), (p2, p3)):
        if (is_inf(u) and is_inf(v)) or (not is_inf(u) and not is_inf(v) and u == v):
            raise MapError("source points must be pairwise distinct")
    for u, v in ((q1, q2), (q1, q3), (q2, q3)):
        if (is_inf(u) and is_inf(v)) or (not is_inf(u) and not is_inf(v) and u == v):
            raise MapError("target points must be pairwise distinct")
    one = ctx.one
    ms = _three_point_matrix(p1, p2, p3, one)
    mt = _three_point_matrix(q1, q2, q3, one)
    a, b, c, d = _mobius_compose(_mobius_inverse(mt), ms)
    return Moebius(a, b, c, d)


def fit_mobius_numeric(pairs):
    """Complex 4-tuple (a,b,c,d) for sigma(p_i) = q_i, numerically."""
    (p1, q1), (p2, q2), (p3, q3) = pairs
    one = 1.0 + 0.0j
    ms = _three_point_matrix(p1, p2, p3, one)
    mt = _three_point_matrix(q1, q2, q3, one)
    return _mobius_compose(_mobius_inverse(mt), ms)


# -- critical data -------------------------------------------------------------------


@dataclass(frozen=True)
class CriticalData:
    """Critical points/values of a map with exact multiplicities.

    points: [(point, multiplicity)] where point is complex or INF and
        multiplicity is the exact order in the ramification divisor, so
        the local degree of the map there is multiplicity + 1.
    values: [(value, simple)] deduplicated critical values; simple means
        the preimage contains exactly one critical point counted with
        multiplicity.
    value_groups: per deduplicated value, the list of critical points
        (with multiplicity) mapping there.
    """

    points: list
    values: list
    value_groups: list = field(default_factory=list)

    def local_degree_at(self, z, tol=1e-6):
        """Local degree of the map at a numeric point (1 if noncritical)."""
        for p, m in self.points:
            if chordal(p, z) < tol:
                return m + 1
        return 1


def critical_data(f, residual_tol=1e-10, value_tol=1e-7):
    """Critical points with exact multiplicities and flagged critical values.

    Exact route: the Wronskian's square-free decomposition gives the
    multiplicity structure; each square-free factor has well-conditioned
    simple roots.  The infinity chart contributes 2d-2 - deg(W) extra
    multiplicity.  A direct clustering of the plain numeric roots of W
    cross-checks the multiset.
    """
    if f.degree < 2:
        raise MapError("critical data requires degree >= 2")
    d = f.degree
    w = f.wronskian()
    total = 2 * d - 2
    points = []
    if not w.is_zero():
        for factor, mult in w.squarefree_decomposition():
            roots = certified_roots(factor.numeric_coeffs(), residual_tol=residual_tol)
            for r in roots:
                points.append((complex(r), mult))
        inf_mult = total - w.degree
    else:
        raise MapError("degenerate map: identically zero Wronskian")
    if inf_mult > 0:
        points.append((INF, inf_mult))
    assert sum(m for _, m in points) == total, "Riemann-Hurwitz count violated"
    # cross-check: cluster the raw numeric roots of the full Wronskian
    _crosscheck_multiplicities(w, points, total)
    points.sort(key=lambda pm: (is_inf(pm[0]), pm[0].real if not is_inf(pm[0]) else 0.0,
                                pm[0].imag if not is_inf(pm[0]) else 0.0))
    # critical values
    imgs = [(f.eval_numeric(p), p, m) for p, m in points]
    groups = []
    for v, p, m in imgs:
        for g in groups:
            if chordal(g["value"], v) < value_tol:
                g["points"].append((p, m))
                break
        else:
            groups.append({"value": v, "points": [(p, m)]})
    values = []
    value_groups = []
    for g in groups:
        simple = len(g["points"]) == 1 and g["points"][0][1] == 1
        values.append((g["value"], simple))
        value_groups.append((g["value"], list(g["points"])))
    return CriticalData(points=points, values=values, value_groups=value_groups)


def _crosscheck_multiplicities(w, points, total):
    """Cluster raw numeric Wronskian roots; multiset must match the exact one."""
    finite = [(p, m) for p, m in points if not is_inf(p)]
    if not finite:
        return
    raw = np.roots(w.numeric_coeffs()[::-1])
    counts = {i: 0 for i in range(len(finite))}
    for r in raw:
        best_i = min(range(len(finite)), key=lambda i: chordal(finite[i][0], r))
        counts[best_i] += 1
    got = sorted(counts.values())
    want = sorted(m for _, m in finite)
    if got != want:
        raise MapError(
            "multiplicity cross-check failed: clustering %s vs exact %s" % (got, want)
        )
