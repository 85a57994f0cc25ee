"""Minimal enclosing ball of a few points in Euclidean space.

Deterministic subset enumeration: the optimal ball is the smallest
circumball over boundary subsets that contains all points (the support
set of the optimum is affinely independent and its circumcenter is the
center), so for the tiny point counts used here (simplex vertex tuples)
brute force over subsets is exact, order-independent and equivariant
under isometries of the input.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np


def _circumcenter(points: np.ndarray):
    """Point of the affine hull equidistant from all rows, or None."""
    base = points[0]
    diffs = points[1:] - base
    if len(diffs) == 0:
        return base.copy()
    A = 2.0 * diffs @ diffs.T
    b = np.einsum("ij,ij->i", diffs, diffs)
    try:
        lam = np.linalg.solve(A, b)
    except np.linalg.LinAlgError:
        return None
    if not np.all(np.isfinite(lam)):
        return None
    return base + lam @ diffs


def minimal_enclosing_ball(points: np.ndarray):
    """Center and radius of the smallest ball containing all rows."""
    pts = np.asarray(points, dtype=float)
    m, dim = pts.shape
    if m == 1:
        return pts[0].copy(), 0.0
    best_center = None
    best_radius = np.inf
    scale = 1.0 + float(np.max(np.abs(pts))) ** 2
    slack = 1e-12 * scale
    for size in range(1, min(m, dim + 1) + 1):
        for subset in combinations(range(m), size):
            c = _circumcenter(pts[list(subset)])
            if c is None:
                continue
            r2 = float(np.max(np.einsum("ij,ij->i", pts[list(subset)] - c,
                                        pts[list(subset)] - c)))
            d2 = np.einsum("ij,ij->i", pts - c, pts - c)
            if float(np.max(d2)) <= r2 + slack:
                r = np.sqrt(r2)
                if r < best_radius:
                    best_radius = r
                    best_center = c
    if best_center is None:  # cannot happen: the full-set candidate exists
        raise RuntimeError("minimal enclosing ball search failed")
    return best_center, float(best_radius)
