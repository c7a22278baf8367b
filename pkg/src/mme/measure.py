"""Empirical maximal-entropy measures by backward-orbit sampling.

Preimage sets of a point equidistribute toward the measure of maximal
entropy, so independent random backward orbits (uniform preimage choice,
short burn-in discarded) give a point cloud approximating it.  Clouds are
stored as stereographic lifts on the unit sphere so infinity needs no
special casing, and compared with the energy distance.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field

import numpy as np

from .numeric import (
    RootFindingError,
    chordal,
    is_inf,
    named_rng,
    projective_roots,
    sphere_lift_many,
    sphere_unlift,
)
from .polys import Poly
from .ratmaps import MapError, Moebius, RationalMap

BURN_IN = 10
SAME_FACTOR = 3.0
DIFFERENT_FACTOR = 10.0
ALL_PAIRS_CAP = 2000
SUBSAMPLE_PAIRS = 10**6


@dataclass
class MeasureCloud:
    points: np.ndarray  # (N, 3) unit-sphere coordinates
    meta: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.points)

    @property
    def weights(self):
        n = len(self.points)
        return np.full(n, 1.0 / n) if n else np.zeros(0)

    def as_complex(self):
        return [sphere_unlift(p) for p in self.points]


@dataclass
class MeasureDistanceReport:
    distance: float
    self_baseline: float
    verdict: str  # SAME / DIFFERENT / INCONCLUSIVE
    meta: dict = field(default_factory=dict)

    def as_dict(self):
        return {
            "distance": self.distance,
            "self_baseline": self.self_baseline,
            "ratio": self.distance / self.self_baseline if self.self_baseline else None,
            "verdict": self.verdict,
            "thresholds": {"same": SAME_FACTOR, "different": DIFFERENT_FACTOR,
                           "note": "calibration constants, not theorem claims"},
            **self.meta,
        }


def map_digest(f):
    ns, ds = f.coeff_strings()
    return hashlib.sha256(repr((ns, ds)).encode()).hexdigest()[:16]


def _exceptional_points(f):
    """Totally invariant finite sets: fixed points equal to their full preimage."""
    d = f.degree
    # fixed points: roots of p(z) - z q(z), plus infinity when deg p > deg q
    fixed_poly = f.num - Poly.x(f.ctx) * f.den
    coeffs = fixed_poly.numeric_coeffs()
    pts = projective_roots(np.concatenate([coeffs, np.zeros(max(0, d + 2 - len(coeffs)))]), d + 1)
    out = []
    for z in pts:
        try:
            pre = f.preimages(z)
        except RootFindingError:
            continue
        if all(chordal(w, z) < 1e-6 for w in pre):
            out.append(z)
    return out


def backward_orbit_sample(f, count, depth=40, seed=0, burn_in=BURN_IN, stream="cloud"):
    """A cloud of `count` points from random backward orbits of length `depth`."""
    if f.degree < 2:
        raise MapError("sampling requires degree >= 2")
    if depth <= burn_in:
        raise MapError("depth must exceed the burn-in length %d" % burn_in)
    rng = named_rng(seed, stream)
    exceptional = _exceptional_points(f)
    per_orbit = depth - burn_in
    n_orbits = math.ceil(count / per_orbit)
    pts = []
    failures = 0
    while len(pts) < count:
        if failures > 10 * max(1, n_orbits):
            raise MapError("too many failed backward orbits; map may be degenerate")
        z = complex(np.exp(rng.normal(0.0, 0.5)) * np.exp(2j * np.pi * rng.uniform()))
        if any(chordal(z, e) < 1e-6 for e in exceptional):
            failures += 1
            continue
        orbit = []
        try:
            for k in range(depth):
                pre = f.preimages(z, residual_tol=1e-7, refine=False)
                z = pre[int(rng.integers(0, len(pre)))]
                if any(chordal(z, e) < 1e-6 for e in exceptional):
                    raise RootFindingError("orbit hit an exceptional point")
                if k >= burn_in:
                    orbit.append(z)
        except RootFindingError:
            failures += 1
            continue
        pts.extend(orbit)
    pts = pts[:count]
    return MeasureCloud(
        points=sphere_lift_many(pts),
        meta={"map": map_digest(f), "depth": depth, "seed": seed, "stream": stream,
              "count": count},
    )


def _mean_pair_distance(A, B):
    diff = A[:, None, :] - B[None, :, :]
    return float(np.sqrt((diff**2).sum(-1)).mean())


def measure_distance(A, B, seed=0):
    """Energy distance 2 E|X-Y| - E|X-X'| - E|Y-Y'| on the sphere.

    All-pairs for small clouds; above the cap the three expectations are
    estimated on shared index draws (common random numbers), which cancels
    most of the per-pair sampling noise when A and B are close.
    """
    pa, pb = A.points, B.points
    na, nb = len(pa), len(pb)
    if max(na, nb) <= ALL_PAIRS_CAP:
        return (
            2.0 * _mean_pair_distance(pa, pb)
            - _mean_pair_distance(pa, pa)
            - _mean_pair_distance(pb, pb)
        )
    rng = named_rng(seed, "energy")
    total = 0.0
    block = 10**5
    n_pairs = SUBSAMPLE_PAIRS
    done = 0
    while done < n_pairs:
        m = min(block, n_pairs - done)
        ia = rng.integers(0, na, size=m)
        ja = rng.integers(0, na, size=m)
        ib = rng.integers(0, nb, size=m)
        jb = rng.integers(0, nb, size=m)
        d_ab = np.sqrt(((pa[ia] - pb[jb]) ** 2).sum(-1))
        d_ba = np.sqrt(((pa[ja] - pb[ib]) ** 2).sum(-1))
        d_aa = np.sqrt(((pa[ia] - pa[ja]) ** 2).sum(-1))
        d_bb = np.sqrt(((pb[ib] - pb[jb]) ** 2).sum(-1))
        total += float((d_ab + d_ba - d_aa - d_bb).sum())
        done += m
    return total / n_pairs


def same_measure_test(f, g, count=4000, depth=40, seed=0):
    """SAME/DIFFERENT verdict from energy distance against a self baseline."""
    cf1 = backward_orbit_sample(f, count, depth=depth, seed=seed, stream="f-first")
    cf2 = backward_orbit_sample(f, count, depth=depth, seed=seed, stream="f-second")
    cg = backward_orbit_sample(g, count, depth=depth, seed=seed, stream="g")
    baseline = abs(measure_distance(cf1, cf2, seed=seed))
    baseline = max(baseline, 1e-12)
    dist = measure_distance(cf1, cg, seed=seed)
    if dist < SAME_FACTOR * baseline:
        verdict = "SAME"
    elif dist > DIFFERENT_FACTOR * baseline:
        verdict = "DIFFERENT"
    else:
        verdict = "INCONCLUSIVE"
    return MeasureDistanceReport(
        distance=dist,
        self_baseline=baseline,
        verdict=verdict,
        meta={"count": count, "depth": depth, "seed": seed,
              "maps": [map_digest(f), map_digest(g)]},
    )


def sigma_invariance_check(f, sigma, count=2000, depth=30, seed=0, baseline_pairs=3):
    """SAME-threshold check that pushing a cloud of f forward by sigma
    preserves the empirical measure.

    The pushed cloud is compared against an independent cloud of f, and the
    baseline averages several independent same-map pair distances (a single
    pair draw is too noisy to threshold against).
    """
    pushed = push_forward(
        backward_orbit_sample(f, count, depth=depth, seed=seed, stream="push-src"),
        sigma,
    )
    ref = backward_orbit_sample(f, count, depth=depth, seed=seed, stream="push-ref")
    dist = measure_distance(pushed, ref, seed=seed)
    baselines = []
    for k in range(baseline_pairs):
        a = backward_orbit_sample(f, count, depth=depth, seed=seed,
                                  stream="base-a-%d" % k)
        b = backward_orbit_sample(f, count, depth=depth, seed=seed,
                                  stream="base-b-%d" % k)
        baselines.append(abs(measure_distance(a, b, seed=seed)))
    baseline = max(float(np.mean(baselines)), 1e-12)
    verdict = "SAME" if dist < SAME_FACTOR * baseline else (
        "DIFFERENT" if dist > DIFFERENT_FACTOR * baseline else "INCONCLUSIVE"
    )
    return MeasureDistanceReport(
        distance=dist,
        self_baseline=baseline,
        verdict=verdict,
        meta={"count": count, "depth": depth, "seed": seed, "map": map_digest(f),
              "baseline_pairs": baseline_pairs},
    )


def push_forward(cloud, phi):
    """Image cloud under a RationalMap or Moebius."""
    if isinstance(phi, Moebius):
        apply = phi.apply_numeric
    elif isinstance(phi, RationalMap):
        apply = phi.eval_numeric
    else:
        raise TypeError("push_forward expects a RationalMap or Moebius")
    zs = [apply(z) for z in cloud.as_complex()]
    return MeasureCloud(points=sphere_lift_many(zs), meta={**cloud.meta, "pushed": True})


def julia_raster(f, width, height, window, count=20000, depth=30, seed=0):
    """Grayscale PPM (binary P6) of the log-scaled backward-orbit density.

    window = (re_min, re_max, im_min, im_max).
    """
    re0, re1, im0, im1 = window
    if not (re1 > re0 and im1 > im0):
        raise MapError("empty raster window")
    hist = np.zeros((height, width))
    if count > 0:
        cloud = backward_orbit_sample(f, count, depth=depth, seed=seed, stream="raster")
        for z in cloud.as_complex():
            if is_inf(z):
                continue
            col = int((z.real - re0) / (re1 - re0) * width)
            row = int((im1 - z.imag) / (im1 - im0) * height)
            if 0 <= col < width and 0 <= row < height:
                hist[row, col] += 1
    dens = np.log1p(hist)
    peak = dens.max()
    if peak > 0:
        dens /= peak
    gray = (dens * 255).astype(np.uint8)
    rgb = np.repeat(gray[:, :, None], 3, axis=2)
    header = b"P6\n%d %d\n255\n" % (width, height)
    return header + rgb.tobytes()


def lit_fraction(ppm_bytes):
    """Fraction of non-black pixels in a P6 raster (for sanity checks)."""
    idx = ppm_bytes.index(b"255\n") + 4
    body = np.frombuffer(ppm_bytes[idx:], dtype=np.uint8)
    pixels = body.reshape(-1, 3)
    return float((pixels.sum(1) > 0).mean())
