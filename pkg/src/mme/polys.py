"""Univariate and bivariate polynomials over a configured field.

Poly stores ascending coefficients with no trailing zeros (the zero
polynomial is the empty tuple).  BiPoly stores a dense coefficient
matrix indexed by (x-degree, y-degree).  All operations are exact.
"""

from __future__ import annotations

from fractions import Fraction

from .fields import FieldElement, FieldError, to_fraction


class Poly:
    __slots__ = ("ctx", "coeffs", "_numeric")

    def __init__(self, ctx, coeffs):
        cs = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.ctx is not ctx:
                    raise FieldError("coefficient from a different field context")
                cs.append(c)
            else:
                cs.append(ctx.from_rational(to_fraction(c)))
        while cs and cs[-1].is_zero():
            cs.pop()
        self.ctx = ctx
        self.coeffs = tuple(cs)
        self._numeric = None

    # -- constructors -----------------------------------------------------------

    @classmethod
    def zero(cls, ctx):
        return cls(ctx, [])

    @classmethod
    def one(cls, ctx):
        return cls(ctx, [1])

    @classmethod
    def x(cls, ctx):
        return cls(ctx, [0, 1])

    @classmethod
    def constant(cls, ctx, c):
        return cls(ctx, [c])

    # -- structure --------------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    def leading(self):
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ctx.zero

    def padded(self, n):
        """Coefficient list of length n+1 (ascending)."""
        return [self.coeff(i) for i in range(n + 1)]

    def is_monic(self):
        return not self.is_zero() and self.leading() == self.ctx.one

    def monic(self):
        if self.is_zero():
            return self
        inv = self.leading().inverse()
        return Poly(self.ctx, [c * inv for c in self.coeffs])

    # -- arithmetic --------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.ctx is not self.ctx:
                raise FieldError("mixing polynomials from different field contexts")
            return other
        if isinstance(other, (int, Fraction, FieldElement, str)):
            return Poly(self.ctx, [other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.ctx, [self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ctx, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.ctx, [self.coeff(i) - other.coeff(i) for i in range(n)])

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.ctx)
        out = [self.ctx.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return Poly(self.ctx, out)

    __rmul__ = __mul__

    def scale(self, c):
        c = self.ctx._coerce(c)
        return Poly(self.ctx, [a * c for a in self.coeffs])

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = Poly.one(self.ctx)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        inv = other.leading().inverse()
        q = [self.ctx.zero] * max(len(rem) - db, 0)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k] * inv
            if c.is_zero():
                continue
            q[k - db] = c
            for j in range(db + 1):
                rem[k - db + j] = rem[k - db + j] - c * other.coeffs[j]
        return Poly(self.ctx, q), Poly(self.ctx, rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divide_exact(self, other):
        """Exact quotient, or None when the division leaves a remainder."""
        q, r = divmod(self, other)
        return q if r.is_zero() else None

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(self.ctx), self.coeffs))

    # -- calculus / composition ---------------------------------------------------

    def derivative(self):
        return Poly(self.ctx, [c * i for i, c in enumerate(self.coeffs)][1:])

    def compose(self, other):
        """self(other(x)) by Horner."""
        other = self._coerce(other)
        acc = Poly.zero(self.ctx)
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def reversed(self, formal_degree=None):
        """x^d * p(1/x) for the chart at infinity."""
        d = self.degree if formal_degree is None else formal_degree
        if d < self.degree:
            raise ValueError("formal degree below actual degree")
        return Poly(self.ctx, list(reversed(self.padded(d))))

    # -- evaluation --------------------------------------------------------------

    def __call__(self, z):
        acc = self.ctx.zero
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def eval_homogeneous(self, u, v, formal_degree):
        """sum c_i u^i v^(d-i) for exact projective evaluation."""
        d = formal_degree
        acc = self.ctx.zero
        up = self.ctx.one
        vps = [self.ctx.one]
        for _ in range(d):
            vps.append(vps[-1] * v)
        for i in range(d + 1):
            c = self.coeff(i)
            if not c.is_zero():
                acc = acc + c * up * vps[d - i]
            if i < d:
                up = up * u
        return acc

    def numeric_coeffs(self):
        """Embedded complex coefficient array (ascending), cached."""
        if self._numeric is None:
            import numpy as np

            self._numeric = np.array(
                [self.ctx.embed(c) for c in self.coeffs], dtype=complex
            )
        return self._numeric

    def eval_numeric(self, z):
        acc = 0j
        for c in reversed(self.numeric_coeffs()):
            acc = acc * z + c
        return acc

    # -- gcd and squarefree structure ----------------------------------------------

    def gcd(self, other):
        """Monic gcd; gcd(p, 0) is monic p."""
        other = self._coerce(other)
        a, b = self, other
        while not b.is_zero():
            r = a % b
            a, b = b, (r.monic() if not r.is_zero() else r)
        return a.monic() if not a.is_zero() else a

    def squarefree_decomposition(self):
        """Yun's algorithm: [(g_i, i)] with self = lc * prod g_i^i, g_i monic."""
        if self.is_zero():
            raise ValueError("squarefree decomposition of zero")
        p = self.monic()
        if p.degree == 0:
            return []
        out = []
        d = p.derivative()
        a = p.gcd(d)
        b = p.divide_exact(a)
        c = d.divide_exact(a)
        dd = c - b.derivative()
        i = 1
        while b.degree > 0:
            a = b.gcd(dd)
            if a.degree > 0:
                out.append((a, i))
            b = b.divide_exact(a)
            c = dd.divide_exact(a)
            dd = c - b.derivative()
            i += 1
        return out

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            if i == 0:
                parts.append("(%s)" % c)
            elif i == 1:
                parts.append("(%s)*z" % c)
            else:
                parts.append("(%s)*z^%d" % (c, i))
        return "Poly(%s)" % " + ".join(parts)


def poly_gcd(p, q):
    return p.gcd(q)


class BiPoly:
    """Polynomial in x, y as a dense matrix indexed by (x-degree, y-degree)."""

    __slots__ = ("ctx", "rows")

    def __init__(self, ctx, rows):
        mat = []
        for row in rows:
            cs = []
            for c in row:
                if isinstance(c, FieldElement):
                    if c.ctx is not ctx:
                        raise FieldError("coefficient from a different field context")
                    cs.append(c)
                else:
                    cs.append(ctx.from_rational(to_fraction(c)))
            mat.append(cs)
        # pad ragged rows, then trim zero fringe
        width = max((len(r) for r in mat), default=0)
        for r in mat:
            r.extend([ctx.zero] * (width - len(r)))
        while mat and all(c.is_zero() for c in mat[-1]):
            mat.pop()
        while mat and all(r[-1].is_zero() for r in mat):
            for r in mat:
                r.pop()
        self.ctx = ctx
        self.rows = tuple(tuple(r) for r in mat)

    @classmethod
    def zero(cls, ctx):
        return cls(ctx, [])

    def is_zero(self):
        return not self.rows

    @property
    def bidegree(self):
        """(max x-degree, max y-degree), (-1, -1) for zero."""
        if not self.rows:
            return (-1, -1)
        return (len(self.rows) - 1, len(self.rows[0]) - 1)

    def coeff(self, i, j):
        if 0 <= i < len(self.rows) and self.rows and 0 <= j < len(self.rows[0]):
            return self.rows[i][j]
        return self.ctx.zero

    def transpose(self):
        if not self.rows:
            return self
        dx, dy = self.bidegree
        return BiPoly(self.ctx, [[self.rows[i][j] for i in range(dx + 1)] for j in range(dy + 1)])

    def is_antisymmetric(self):
        return (self + self.transpose()).is_zero()

    def __add__(self, other):
        dx = max(len(self.rows), len(other.rows))
        dy = max(self.bidegree[1], other.bidegree[1]) + 1
        return BiPoly(
            self.ctx,
            [[self.coeff(i, j) + other.coeff(i, j) for j in range(dy)] for i in range(dx)],
        )

    def __neg__(self):
        return BiPoly(self.ctx, [[-c for c in row] for row in self.rows])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElement, str)):
            c = self.ctx._coerce(other)
            return BiPoly(self.ctx, [[a * c for a in row] for row in self.rows])
        if self.is_zero() or other.is_zero():
            return BiPoly.zero(self.ctx)
        ax, ay = self.bidegree
        bx, by = other.bidegree
        out = [[self.ctx.zero] * (ay + by + 1) for _ in range(ax + bx + 1)]
        for i in range(ax + 1):
            for j in range(ay + 1):
                a = self.rows[i][j]
                if a.is_zero():
                    continue
                for k in range(bx + 1):
                    for l in range(by + 1):
                        b = other.rows[k][l]
                        if not b.is_zero():
                            out[i + k][j + l] = out[i + k][j + l] + a * b
        return BiPoly(self.ctx, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.ctx is other.ctx and self.rows == other.rows

    def __hash__(self):
        return hash((id(self.ctx), self.rows))

    # -- views -----------------------------------------------------------------

    def y_slices(self):
        """List over y-degree j of the coefficient Poly in x."""
        dx, dy = self.bidegree
        return [
            Poly(self.ctx, [self.coeff(i, j) for i in range(dx + 1)]) for j in range(dy + 1)
        ]

    @classmethod
    def from_y_slices(cls, ctx, slices):
        dx = max((p.degree for p in slices), default=-1)
        return cls(ctx, [[slices[j].coeff(i) for j in range(len(slices))] for i in range(dx + 1)])

    def eval_x(self, x):
        """Exact substitution of x, leaving a Poly in y."""
        dy = self.bidegree[1]
        return Poly(self.ctx, [Poly(self.ctx, [self.coeff(i, j) for i in range(len(self.rows))])(x) for j in range(dy + 1)])

    def eval_exact(self, x, y):
        return self.eval_x(x)(y)

    def numeric_matrix(self):
        import numpy as np

        dx, dy = self.bidegree
        return np.array(
            [[self.ctx.embed(self.rows[i][j]) for j in range(dy + 1)] for i in range(dx + 1)],
            dtype=complex,
        )

    # -- division -----------------------------------------------------------------

    def divide_exact(self, other):
        """Quotient Q with self = other * Q exactly, else None.

        Long division in y over the ring F[x]; every leading-coefficient
        division must itself be exact.
        """
        if other.is_zero():
            raise ZeroDivisionError("bivariate division by zero")
        if self.is_zero():
            return BiPoly.zero(self.ctx)
        dslices = other.y_slices()
        dD = len(dslices) - 1
        lead = dslices[-1]
        rem = self.y_slices()
        zero = Poly.zero(self.ctx)
        qslices = {}
        while True:
            while rem and rem[-1].is_zero():
                rem.pop()
            if not rem:
                break
            k = len(rem) - 1
            if k < dD:
                return None
            q = rem[k].divide_exact(lead)
            if q is None:
                return None
            qslices[k - dD] = q
            for j in range(dD + 1):
                idx = k - dD + j
                rem[idx] = rem[idx] - dslices[j] * q
        if not qslices:
            return BiPoly.zero(self.ctx)
        n = max(qslices) + 1
        return BiPoly.from_y_slices(self.ctx, [qslices.get(j, zero) for j in range(n)])

    def substitute_mobius(self, num, den):
        """Substitute x -> num(x)/den(x) and y -> num(y)/den(y), cleared.

        num, den are Polys of degree <= 1; the result is
        sum c_ij num(x)^i den(x)^(dx-i) num(y)^j den(y)^(dy-j).
        """
        dx, dy = self.bidegree
        if dx < 0:
            return self
        npow = [Poly.one(self.ctx)]
        dpow = [Poly.one(self.ctx)]
        for _ in range(max(dx, dy)):
            npow.append(npow[-1] * num)
            dpow.append(dpow[-1] * den)
        out = BiPoly.zero(self.ctx)
        for i in range(dx + 1):
            for j in range(dy + 1):
                c = self.rows[i][j]
                if c.is_zero():
                    continue
                px = npow[i] * dpow[dx - i]
                py = npow[j] * dpow[dy - j]
                term = [[px.coeff(a) * py.coeff(b) * c for b in range(py.degree + 1)] for a in range(px.degree + 1)]
                out = out + BiPoly(self.ctx, term)
        return out

    def normalized(self):
        """Scale so the highest (x-degree, y-degree) lexicographic coefficient is 1."""
        if self.is_zero():
            return self
        for i in range(len(self.rows) - 1, -1, -1):
            for j in range(len(self.rows[0]) - 1, -1, -1):
                if not self.rows[i][j].is_zero():
                    return self * self.rows[i][j].inverse()
        return self

    def coeff_strings(self):
        return [[c.coords_strings() if not c.is_rational() else str(c.as_fraction()) for c in row] for row in self.rows]

    def __repr__(self):
        return "BiPoly(bidegree=%s)" % (self.bidegree,)


def bipoly_divide_exact(P, D):
    return P.divide_exact(D)


def graph_bipoly(num, den):
    """p(x)q(y) - p(y)q(x): the defining polynomial of {G(x) = G(y)}."""
    ctx = num.ctx
    px = [[num.coeff(i)] for i in range(num.degree + 1)] or [[0]]
    qx = [[den.coeff(i)] for i in range(den.degree + 1)] or [[0]]
    py = [[num.coeff(j) for j in range(num.degree + 1)]] if not num.is_zero() else [[0]]
    qy = [[den.coeff(j) for j in range(den.degree + 1)]] if not den.is_zero() else [[0]]
    return BiPoly(ctx, px) * BiPoly(ctx, qy) - BiPoly(ctx, py) * BiPoly(ctx, qx)
