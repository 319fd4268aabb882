"""Affine independence: certificates, perturbation radii, and stress tests.

The quantitative certificate: a family of k+1 points whose difference
matrix has smallest singular value sigma stays affinely independent under
any perturbation of the points by less than sigma / (4 sqrt(k)).  The
adversarial checker hammers that radius with random and structured
perturbations and reports every independence failure it finds.
"""

from __future__ import annotations

import math
import time

import numpy as np

from .config import ToleranceConfig, resolve
from .errors import HyperconvexError
from .report import Report


def _family(points) -> np.ndarray:
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[0] == 0:
        raise HyperconvexError("expected a nonempty 2d array of points")
    if not np.all(np.isfinite(pts)):
        raise HyperconvexError("points must be finite")
    return pts


def _diff_matrix(pts: np.ndarray) -> np.ndarray:
    return pts[1:] - pts[0]


def is_affinely_independent(points, tol: float | None = None) -> bool:
    """True when no point lies in the affine hull of the others.

    Decided on the smallest singular value of the difference matrix, with
    cutoff tol times the largest singular value floored at 1.
    """
    pts = _family(points)
    if tol is None:
        tol = resolve(None).tau_rank
    k = pts.shape[0] - 1
    if k == 0:
        return True
    if k > pts.shape[1]:
        return False
    sv = np.linalg.svd(_diff_matrix(pts), compute_uv=False)
    return bool(sv[-1] > tol * max(float(sv[0]), 1.0))


def independence_radius(points, tol: ToleranceConfig | None = None) -> float:
    """Certified perturbation radius: moving every point by strictly less
    than this keeps the family affinely independent.  A single point is
    unconditionally independent (radius inf)."""
    cfg = resolve(tol)
    pts = _family(points)
    k = pts.shape[0] - 1
    if k == 0:
        return math.inf
    if not is_affinely_independent(pts, cfg.tau_rank):
        raise HyperconvexError("family is affinely dependent; no radius exists")
    sv = np.linalg.svd(_diff_matrix(pts), compute_uv=False)
    return float(sv[-1]) / (4.0 * math.sqrt(k))


def _dependence_floor(pts: np.ndarray) -> float:
    sv = np.linalg.svd(_diff_matrix(pts), compute_uv=False)
    return min(1e-9, float(sv[-1]) / 4.0)


_BLOCK = 256


def adversarial_independence_check(
    points, delta: float, trials: int, seed: int
) -> Report:
    """Try to break affine independence by perturbing each point within a
    closed delta-ball.

    Perturbations: uniform in the ball, boundary-biased (pushed to radius
    delta), and a structured probe that projects the family onto its best
    least-squares fitting hyperplane whenever that fits within delta.  A
    trial fails when the perturbed difference matrix is numerically rank
    deficient.  Work is sharded into fixed blocks with RNG substreams keyed
    by (seed, block), so results do not depend on execution order.
    """
    t0 = time.perf_counter()
    pts = _family(points)
    if not delta > 0:
        raise HyperconvexError("delta must be positive")
    if trials < 0:
        raise HyperconvexError("trials must be nonnegative")
    k = pts.shape[0] - 1
    report = Report(suite="independence-adversarial", trials=trials, seed=seed)
    if trials == 0 or k == 0:
        report.runtime_ms = (time.perf_counter() - t0) * 1000.0
        return report
    floor = _dependence_floor(pts) if is_affinely_independent(pts) else 1e-9

    def record(perturbed: np.ndarray, sigma: float, kind: str) -> None:
        report.failures.append(
            {
                "kind": kind,
                "inputs": {"points": perturbed.tolist(), "delta": delta},
                "residual": sigma,
                "threshold": floor,
            }
        )

    # structured probe: flatten onto the best-fit affine hyperplane
    center = pts.mean(axis=0)
    _, s, vh = np.linalg.svd(pts - center, full_matrices=False)
    if s.size >= 1:
        drop = vh[-1]
        coords = (pts - center) @ drop
        if float(np.abs(coords).max()) <= delta:
            flattened = pts - coords[:, None] * drop[None, :]
            sv = np.linalg.svd(_diff_matrix(flattened), compute_uv=False)
            sigma = float(sv[-1])
            if sigma <= floor:
                record(flattened, sigma, "structured-probe")

    m, n = pts.shape
    done = 0
    block = 0
    while done < trials:
        count = min(_BLOCK, trials - done)
        rng = np.random.default_rng([seed, block])
        noise = rng.standard_normal((count, m, n))
        noise /= np.maximum(np.linalg.norm(noise, axis=2, keepdims=True), 1e-300)
        radii = delta * rng.random((count, m, 1)) ** (1.0 / n)
        # push half of each block to the boundary of the delta-ball
        half = count // 2
        radii[:half] = delta * (1.0 - 1e-12)
        perturbed = pts[None, :, :] + noise * radii
        diffs = perturbed[:, 1:, :] - perturbed[:, :1, :]
        sv = np.linalg.svd(diffs, compute_uv=False)
        bad = np.nonzero(sv[:, -1] <= floor)[0]
        for i in bad:
            record(perturbed[i], float(sv[i, -1]), "random")
        done += count
        block += 1
    report.runtime_ms = (time.perf_counter() - t0) * 1000.0
    return report


def barycentric_coordinates(simplex, x, tol: float = 1e-9) -> np.ndarray:
    """Barycentric coordinates of x with respect to an affinely independent
    family; unique because the difference matrix has full row rank.

    Raises when the family is dependent or x sits off the affine hull by
    more than tol relative to the data scale.
    """
    pts = _family(simplex)
    x = np.asarray(x, dtype=float)
    if x.shape != (pts.shape[1],):
        raise HyperconvexError("point dimension does not match the simplex")
    if not is_affinely_independent(pts):
        raise HyperconvexError("simplex points must be affinely independent")
    scale = max(1.0, float(np.linalg.norm(x)), float(np.abs(pts).max()))
    if pts.shape[0] == 1:
        if np.linalg.norm(x - pts[0]) > tol * scale:
            raise HyperconvexError("point lies off the affine hull of the simplex")
        return np.ones(1)
    d = _diff_matrix(pts)
    mu, *_ = np.linalg.lstsq(d.T, x - pts[0], rcond=None)
    if np.linalg.norm(mu @ d - (x - pts[0])) > tol * scale:
        raise HyperconvexError("point lies off the affine hull of the simplex")
    return np.concatenate([[1.0 - mu.sum()], mu])


def in_relative_interior(simplex, x, tol: float = 1e-9) -> bool:
    """True when x lies strictly inside the simplex: every barycentric
    coordinate in (tol, 1 - tol).  Points off the affine hull are outside.
    """
    pts = _family(simplex)
    x = np.asarray(x, dtype=float)
    if x.shape != (pts.shape[1],):
        raise HyperconvexError("point dimension does not match the simplex")
    if not is_affinely_independent(pts):
        raise HyperconvexError("simplex points must be affinely independent")
    if pts.shape[0] == 1:
        return bool(np.linalg.norm(x - pts[0]) <= tol)
    try:
        lam = barycentric_coordinates(pts, x)
    except HyperconvexError:
        return False
    return bool(np.all(lam > tol) and np.all(lam < 1.0 - tol))
