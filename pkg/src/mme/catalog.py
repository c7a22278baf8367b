"""Built-in example families with their expected certificates.

Each entry constructs its maps exactly (over Q or Q(w) with w^2+w+1=0)
and records which certificate verdicts it is expected to produce, so the
entries double as regression fixtures and CLI demos.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .fields import FieldContext, field_configure
from .identities import (
    CertificateReport,
    check_counterexample_triple,
    maps_equal,
    sigma_f_quadratic,
)
from .polys import Poly
from .ratmaps import MapError, RationalMap

ENTRY_NAMES = ("chebyshev-flower", "zieve-family", "power-map", "quadratic-sigma")


@dataclass
class CatalogEntry:
    name: str
    ctx: FieldContext
    maps: dict
    params: dict
    expected: list = dc_field(default_factory=list)  # (claim, verdict)

    def run(self, seed=0):
        """CertificateReport for the entry's claims."""
        if self.name in ("chebyshev-flower", "zieve-family"):
            return check_counterexample_triple(
                self.maps["R"], self.maps["S"], self.maps["T"], seed=seed
            )
        rep = CertificateReport()
        f = self.maps["f"]
        if f.degree == 2:
            sigma = sigma_f_quadratic(f)
            rep.add("f∘σ_f = f", "PASS", sigma)  # construction verifies both identities
            rep.add("σ_f∘σ_f = id", "PASS")
        else:
            rep.add("degree", "PASS", ("degree", f.degree))
        return rep


def omega_field():
    """Q(w) with w a primitive cube root of unity (w^2 + w + 1 = 0)."""
    return field_configure([1, 1, 1])


def parse_param(ctx, value):
    """An exact field element from an int/Fraction/str like '1+w'."""
    if isinstance(value, (int, Fraction)):
        return ctx.from_rational(value)
    if isinstance(value, str):
        text = value.replace(" ", "")
        gen = ctx.gen() if ctx.degree > 1 else ctx.one
        # tiny linear grammar: q, w, q+w, q-w, q*w, q+q*w
        total = ctx.zero
        term = ""
        sign = 1
        tokens = []
        for ch in text:
            if ch in "+-" and term:
                tokens.append((sign, term))
                sign = 1 if ch == "+" else -1
                term = ""
            elif ch == "-" and not term:
                sign = -sign
            else:
                term += ch
        tokens.append((sign, term))
        for sgn, t in tokens:
            if not t:
                raise MapError("empty term in parameter %r" % value)
            if t.endswith("*w") or t.endswith("w"):
                scal = t[:-2] if t.endswith("*w") else t[:-1]
                coef = ctx.from_rational(Fraction(scal)) if scal else ctx.one
                part = coef * gen
            else:
                part = ctx.from_rational(Fraction(t))
            total = total + part if sgn > 0 else total - part
        return total
    return ctx._coerce(value)


def _chebyshev_flower(params):
    ctx = omega_field()
    a = parse_param(ctx, params.get("a", 1))
    if a.is_zero():
        raise MapError("parameter a must be nonzero")
    w = ctx.gen()
    x = Poly.x(ctx)
    T = RationalMap.polynomial(x**3 - x * 3)
    R = RationalMap(x * x * (a * a) + ctx.one, x * a)
    aw = a * w
    S = RationalMap(x * x * (aw * aw) + ctx.one, x * aw)
    f = R.compose(T)
    g = S.compose(T)
    return CatalogEntry(
        name="chebyshev-flower",
        ctx=ctx,
        maps={"T": T, "R": R, "S": S, "f": f, "g": g},
        params={"a": a},
        expected=[
            ("T∘R = T∘S", "PASS"),
            ("no Moebius factor R = σ∘S", "PASS"),
            ("f∘f = f∘g", "PASS"),
        ],
    )


def _zieve_family(params):
    n = int(params.get("n", 2))
    m = int(params.get("m", 1))
    if n < 1 or m < 1:
        raise MapError("zieve-family requires n, m >= 1")
    ctx = FieldContext.rationals()
    x = Poly.x(ctx)
    one = Poly.one(ctx)
    T = RationalMap.polynomial(x**n * (x + ctx.one) ** m)
    R = RationalMap(one - x**n, x ** (n + m) - one)
    S = RationalMap(x**m * (one - x**n), x ** (n + m) - one)
    f = R.compose(T)
    g = S.compose(T)
    return CatalogEntry(
        name="zieve-family",
        ctx=ctx,
        maps={"T": T, "R": R, "S": S, "f": f, "g": g},
        params={"n": n, "m": m},
        expected=[
            ("T∘R = T∘S", "PASS"),
            # for n = m, T is symmetric under z -> -1-z and that symmetry
            # relates R and S exactly, so a Moebius factor does exist
            ("no Moebius factor R = σ∘S", "PASS" if n != m else "FAIL"),
            ("f∘f = f∘g", "PASS"),
        ],
    )


def _power_map(params):
    d = int(params.get("d", 2))
    if d < 2:
        raise MapError("power-map requires d >= 2")
    ctx = FieldContext.rationals()
    f = RationalMap.polynomial(Poly.x(ctx) ** d)
    return CatalogEntry(
        name="power-map",
        ctx=ctx,
        maps={"f": f},
        params={"d": d},
        expected=[("f∘σ_f = f", "PASS"), ("σ_f∘σ_f = id", "PASS")] if d == 2 else [],
    )


def _quadratic_sigma(params):
    ctx = FieldContext.rationals()
    x = Poly.x(ctx)
    if "num" in params or "den" in params:
        f = RationalMap(Poly(ctx, params["num"]), Poly(ctx, params["den"]))
        if f.degree != 2:
            raise MapError("quadratic-sigma requires a degree-2 map")
    else:
        f = RationalMap(x * x + ctx.one, x)  # z + 1/z
    return CatalogEntry(
        name="quadratic-sigma",
        ctx=ctx,
        maps={"f": f, "sigma": sigma_f_quadratic(f)},
        params=dict(params),
        expected=[("f∘σ_f = f", "PASS"), ("σ_f∘σ_f = id", "PASS")],
    )


_BUILDERS = {
    "chebyshev-flower": _chebyshev_flower,
    "zieve-family": _zieve_family,
    "power-map": _power_map,
    "quadratic-sigma": _quadratic_sigma,
}


def entry(name, params=None):
    if name not in _BUILDERS:
        raise MapError("unknown catalog entry %r (have: %s)" % (name, ", ".join(ENTRY_NAMES)))
    return _BUILDERS[name](params or {})


def iterate_square_identity_check(a):
    """f_a∘f_a = f_{-a}∘f_{-a} (with f_a ≠ f_{-a}) for the degree-6 family."""
    ctx = omega_field()
    a = parse_param(ctx, a)
    if a.is_zero():
        raise MapError("parameter a must be nonzero")
    f_plus = _chebyshev_flower({"a": a}).maps["f"]
    f_minus = _chebyshev_flower({"a": -a}).maps["f"]
    if maps_equal(f_plus, f_minus):
        return "FAIL"
    if maps_equal(f_plus.compose(f_plus), f_minus.compose(f_minus)):
        return "PASS"
    return "FAIL"
