"""Exact arithmetic over Q and simple algebraic extensions Q(alpha).

A FieldContext fixes the minimal polynomial of alpha once per run; every
FieldElement carries a reference to its context and refuses to mix with
elements of another one.  Elements are immutable coordinate vectors in
the power basis 1, alpha, ..., alpha^(m-1) with reduced Fraction entries,
so equality is exact coefficient comparison.
"""

from __future__ import annotations

from fractions import Fraction

MAX_EXTENSION_DEGREE = 8


class FieldError(ValueError):
    """Invalid field configuration or cross-context arithmetic."""


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError("cannot interpret %r as a rational number" % (x,))


def _q_poly_divmod(a, b):
    """Divmod for Fraction coefficient lists (ascending)."""
    a = list(a)
    db = len(b) - 1
    inv = 1 / b[-1]
    q = [Fraction(0)] * max(len(a) - db, 0)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] * inv
        q[k - db] = c
        if c:
            for j in range(db + 1):
                a[k - db + j] -= c * b[j]
    r = a[:db]
    while r and r[-1] == 0:
        r.pop()
    return q, r


def _is_irreducible_over_q(coeffs) -> bool:
    # One-shot exact check at context configuration time; sympy is the
    # well-tested factorization engine available, no point hand-rolling
    # the quartic resolvent.
    import sympy

    t = sympy.Symbol("t")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * t**i for i, c in enumerate(coeffs))
    return sympy.Poly(expr, t, domain="QQ").is_irreducible


class FieldContext:
    """The field Q(alpha) where alpha has the given monic minimal polynomial.

    Use :meth:`rationals` for plain Q.  User-supplied minimal polynomials
    must be monic, irreducible, and of degree 2..8; degree-1 input is
    rejected as degenerate.
    """

    _rationals = None

    def __init__(self, minpoly, _allow_linear=False):
        coeffs = [to_fraction(c) for c in minpoly]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if len(coeffs) < 2:
            raise FieldError("minimal polynomial must be non-constant")
        if coeffs[-1] != 1:
            raise FieldError("minimal polynomial must be monic")
        degree = len(coeffs) - 1
        if degree == 1 and not _allow_linear:
            raise FieldError(
                "degree-1 minimal polynomial is degenerate; "
                "use FieldContext.rationals() for plain Q"
            )
        if degree > MAX_EXTENSION_DEGREE:
            raise FieldError("extension degree capped at %d" % MAX_EXTENSION_DEGREE)
        if degree > 1 and not _is_irreducible_over_q(coeffs):
            raise FieldError(
                "minimal polynomial %s is reducible over Q; the generator "
                "would not define a field" % (coeffs,)
            )
        self.minpoly = tuple(coeffs)
        self.degree = degree
        # alpha^k for k = degree .. 2*degree-2, reduced to the power basis
        table = {degree: [-c for c in coeffs[:-1]]}
        for k in range(degree + 1, 2 * degree - 1):
            shifted = [Fraction(0)] + table[k - 1]
            top = shifted.pop()  # coefficient of alpha^degree
            if top:
                base = table[degree]
                shifted = [shifted[i] + top * base[i] for i in range(degree)]
            table[k] = shifted
        self._reduction = table
        self._embedding = None

    @classmethod
    def rationals(cls):
        if cls._rationals is None:
            cls._rationals = cls([0, 1], _allow_linear=True)
        return cls._rationals

    # -- element constructors ------------------------------------------------

    def element(self, coords):
        coords = [to_fraction(c) for c in coords]
        if len(coords) > self.degree:
            raise FieldError("coordinate vector longer than extension degree")
        coords += [Fraction(0)] * (self.degree - len(coords))
        return FieldElement(self, tuple(coords))

    def from_rational(self, x):
        return self.element([to_fraction(x)])

    def gen(self):
        if self.degree == 1:
            return self.from_rational(-self.minpoly[0])
        return self.element([0, 1])

    @property
    def zero(self):
        return self.from_rational(0)

    @property
    def one(self):
        return self.from_rational(1)

    # -- numerics --------------------------------------------------------------

    def embedding(self) -> complex:
        """A fixed complex root of the minimal polynomial.

        The root with the largest imaginary part (ties broken by real part)
        is chosen, so t^2+1 -> i and t^2+t+1 -> (-1+sqrt(3)i)/2.
        """
        if self._embedding is None:
            if self.degree == 1:
                self._embedding = complex(-self.minpoly[0])
            else:
                import numpy as np

                roots = np.roots([float(c) for c in reversed(self.minpoly)])
                roots = sorted(roots, key=lambda r: (-r.imag, -r.real))
                self._embedding = complex(roots[0])
        return self._embedding

    def embed(self, elt) -> complex:
        a = self.embedding()
        acc = 0j
        for c in reversed(elt.coords):
            acc = acc * a + complex(c)
        return acc

    # -- internals --------------------------------------------------------------

    def _reduce(self, conv):
        m = self.degree
        out = list(conv[:m]) + [Fraction(0)] * max(0, m - len(conv))
        for k in range(m, len(conv)):
            c = conv[k]
            if c:
                row = self._reduction[k]
                for i in range(m):
                    out[i] += c * row[i]
        return tuple(out)

    def _coerce(self, x):
        if isinstance(x, FieldElement):
            if x.ctx is not self:
                raise FieldError("mixing elements from different field contexts")
            return x
        if isinstance(x, (int, Fraction, str)):
            return self.from_rational(x)
        return NotImplemented

    def __repr__(self):
        if self.degree == 1:
            return "FieldContext(Q)"
        return "FieldContext(minpoly=%s)" % (list(self.minpoly),)

    def __eq__(self, other):
        return isinstance(other, FieldContext) and self.minpoly == other.minpoly

    def __hash__(self):
        return hash(self.minpoly)


class FieldElement:
    __slots__ = ("ctx", "coords")

    def __init__(self, ctx, coords):
        self.ctx = ctx
        self.coords = coords

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def is_rational(self):
        return all(c == 0 for c in self.coords[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise FieldError("element %r is not rational" % (self,))
        return self.coords[0]

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        other = self.ctx._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.ctx, tuple(-a for a in self.coords))

    def __sub__(self, other):
        other = self.ctx._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self.ctx._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coords, other.coords
        m = self.ctx.degree
        conv = [Fraction(0)] * (2 * m - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        return FieldElement(self.ctx, self.ctx._reduce(conv))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        m = self.ctx.degree
        if m == 1 or self.is_rational():
            inv = 1 / self.coords[0]
            return self.ctx.from_rational(inv)
        # extended Euclid in Q[t] against the minimal polynomial
        f = list(self.ctx.minpoly)
        g = list(self.coords)
        while g and g[-1] == 0:
            g.pop()
        r0, r1 = f, g
        s0, s1 = [], [Fraction(1)]
        while r1:
            q, r = _q_poly_divmod(r0, r1)
            # s_new = s0 - q*s1
            s_new = list(s0) + [Fraction(0)] * max(0, len(q) + len(s1) - 1 - len(s0))
            for i, qi in enumerate(q):
                if qi:
                    for j, sj in enumerate(s1):
                        s_new[i + j] -= qi * sj
            while s_new and s_new[-1] == 0:
                s_new.pop()
            r0, r1 = r1, r
            s0, s1 = s1, s_new
        # r0 is the gcd; a nonzero constant since minpoly is irreducible
        if len(r0) != 1:
            raise FieldError("minimal polynomial not irreducible (internal)")
        c = 1 / r0[0]
        coords = [ci * c for ci in s0]
        return self.ctx.element(coords)

    def __truediv__(self, other):
        other = self.ctx._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = self.ctx.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        try:
            other = self.ctx._coerce(other)
        except FieldError:
            raise
        if other is NotImplemented:
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash((id(self.ctx), self.coords))

    def __complex__(self):
        return self.ctx.embed(self)

    def coords_strings(self):
        return [str(c) for c in self.coords]

    def __repr__(self):
        if self.is_rational():
            return str(self.coords[0])
        parts = []
        for i, c in enumerate(self.coords):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("%s*a" % c)
            else:
                parts.append("%s*a^%d" % (c, i))
        return " + ".join(parts) if parts else "0"


def field_configure(minpoly) -> FieldContext:
    """Configure the coefficient field from a monic minimal polynomial.

    ``minpoly`` is an ascending coefficient sequence over Q.  Rejects
    non-monic, degenerate (degree < 2), and reducible inputs with an
    explanation; see :class:`FieldContext`.

    Contexts are cached by minimal polynomial, so two configurations of
    the same field share elements freely.
    """
    key = tuple(to_fraction(c) for c in minpoly)
    ctx = _CONTEXT_CACHE.get(key)
    if ctx is None:
        ctx = FieldContext(minpoly)
        _CONTEXT_CACHE[key] = ctx
    return ctx


_CONTEXT_CACHE = {}
