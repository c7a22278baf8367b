"""Numeric primitives: the point at infinity, chordal geometry on the
Riemann sphere, certified complex root finding, and rationalization of
floating-point values back into the exact field."""

from __future__ import annotations

from fractions import Fraction

import numpy as np


class _Infinity:
    """The point at infinity on P^1 (a unique sentinel)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"


INF = _Infinity()


def is_inf(z):
    return z is INF


def chordal(a, b):
    """Chordal distance on the sphere, normalized to [0, 1]."""
    if is_inf(a) and is_inf(b):
        return 0.0
    if is_inf(a):
        return 1.0 / np.sqrt(1.0 + abs(b) ** 2)
    if is_inf(b):
        return 1.0 / np.sqrt(1.0 + abs(a) ** 2)
    return abs(a - b) / np.sqrt((1.0 + abs(a) ** 2) * (1.0 + abs(b) ** 2))


def sphere_lift(z):
    """Stereographic lift to the unit sphere in R^3 (infinity -> north pole)."""
    if is_inf(z):
        return np.array([0.0, 0.0, 1.0])
    r2 = z.real * z.real + z.imag * z.imag
    s = 1.0 / (1.0 + r2)
    return np.array([2.0 * z.real * s, 2.0 * z.imag * s, (r2 - 1.0) * s])


def sphere_lift_many(zs):
    out = np.empty((len(zs), 3))
    for k, z in enumerate(zs):
        out[k] = sphere_lift(z)
    return out


def sphere_unlift(p):
    """Inverse stereographic projection; the north pole maps to INF."""
    x, y, w = p
    if w > 1.0 - 1e-12:
        return INF
    s = 1.0 / (1.0 - w)
    return complex(x * s, y * s)


class RootFindingError(RuntimeError):
    """Raised when roots cannot be certified to the requested residual."""


class ConsistencyError(RuntimeError):
    """A cross-check between two routes to the same quantity failed."""


def _newton_refine(coeffs_desc, roots, iters=8):
    """Monotone Newton: a step is kept only if it lowers the residual.

    Plain Newton diverges near multiple roots, where np.roots output is
    already as good as it gets; monotone acceptance keeps those roots put.
    """
    dcoeffs = np.polyder(coeffs_desc)
    best = np.abs(np.polyval(coeffs_desc, roots))
    for _ in range(iters):
        ders = np.polyval(dcoeffs, roots)
        mask = np.abs(ders) > 1e-300
        step = np.zeros_like(roots, dtype=complex)
        vals = np.polyval(coeffs_desc, roots)
        step[mask] = vals[mask] / ders[mask]
        cand = roots - step
        cand_res = np.abs(np.polyval(coeffs_desc, cand))
        keep = cand_res < best
        roots = np.where(keep, cand, roots)
        best = np.where(keep, cand_res, best)
    return roots


def _residuals(coeffs_desc, roots):
    scale = np.max(np.abs(coeffs_desc))
    vals = np.abs(np.polyval(coeffs_desc, roots))
    denom = scale * np.maximum(1.0, np.abs(roots)) ** (len(coeffs_desc) - 1)
    return vals / denom


def certified_roots(coeffs, residual_tol=1e-10, refine=True):
    """All complex roots of a polynomial with simple-root expectations.

    ``coeffs`` ascending.  Roots are Newton-refined and checked against a
    scaled residual; on failure precision escalates through mpmath and a
    final residual check is applied.
    """
    c = np.asarray(coeffs, dtype=complex)
    while len(c) and abs(c[-1]) == 0.0:
        c = c[:-1]
    if len(c) <= 1:
        return np.array([], dtype=complex)
    desc = c[::-1]
    roots = np.roots(desc)
    if refine:
        roots = _newton_refine(desc, roots)
    if np.all(_residuals(desc, roots) < residual_tol):
        return roots
    # precision escalation
    import mpmath

    with mpmath.workdps(50):
        try:
            mp_roots = mpmath.polyroots([mpmath.mpc(x) for x in desc], maxsteps=200, extraprec=120)
        except mpmath.libmp.NoConvergence as exc:
            raise RootFindingError(
                "root finder failed to converge for polynomial %s" % (list(coeffs),)
            ) from exc
    roots = np.array([complex(r) for r in mp_roots])
    res = _residuals(desc, roots)
    # multiple roots cannot beat eps**(1/mult); accept the escalated roots
    # but reject garbage
    if np.any(res > 1e-4):
        raise RootFindingError(
            "residuals %s exceed tolerance for polynomial %s" % (res, list(coeffs))
        )
    return roots


def projective_roots(coeffs, formal_degree, residual_tol=1e-10, refine=True, inf_tol=1e-13):
    """Roots of a degree-``formal_degree`` polynomial on P^1.

    Returns a list of length formal_degree: finite complex roots plus
    copies of INF for the drop between the effective and formal degree.
    Leading coefficients below inf_tol * max|c| are treated as zero
    (the corresponding roots sit at/near infinity, which the chordal
    metric keeps continuous for tracking purposes).
    """
    c = np.asarray(coeffs, dtype=complex)
    if len(c) < formal_degree + 1:
        c = np.concatenate([c, np.zeros(formal_degree + 1 - len(c), dtype=complex)])
    scale = np.max(np.abs(c))
    if scale == 0.0:
        raise ValueError("zero polynomial has no root set of finite degree")
    eff = formal_degree
    while eff > 0 and abs(c[eff]) <= inf_tol * scale:
        eff -= 1
    finite = certified_roots(c[: eff + 1], residual_tol=residual_tol, refine=refine)
    return list(finite) + [INF] * (formal_degree - eff)


def min_pairwise_chordal(points):
    n = len(points)
    best = np.inf
    for i in range(n):
        for j in range(i + 1, n):
            d = chordal(points[i], points[j])
            if d < best:
                best = d
    return best


def rationalize_fraction(x, max_den=10**6, tol=1e-6):
    """Nearest small-denominator Fraction, or None when x is not close."""
    f = Fraction(float(x)).limit_denominator(max_den)
    if abs(float(f) - float(x)) <= tol * max(1.0, abs(float(x))):
        return f
    return None


def rationalize_into_field(ctx, z, max_den=10**6, tol=1e-6):
    """Express complex z as an exact element of ctx, or None.

    Solves z = sum c_k alpha^k over the reals by least squares on the
    power basis, rounds each coordinate to a small-denominator rational,
    and verifies the embedding reproduces z.
    """
    m = ctx.degree
    alpha = ctx.embedding()
    basis = [alpha**k for k in range(m)]
    A = np.array([[b.real for b in basis], [b.imag for b in basis]])
    rhs = np.array([z.real, z.imag])
    sol, *_ = np.linalg.lstsq(A, rhs, rcond=None)
    fracs = [Fraction(float(c)).limit_denominator(max_den) for c in sol]
    elt = ctx.element(fracs)
    if abs(ctx.embed(elt) - z) <= tol * max(1.0, abs(z)):
        return elt
    return None


def named_rng(seed, name):
    """A deterministic per-module numpy Generator derived from one seed."""
    tag = int.from_bytes(name.encode("utf8"), "big") % (2**32)
    return np.random.default_rng([int(seed) % (2**63), tag])
