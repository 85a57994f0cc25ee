"""Ball model of complex hyperbolic space: typed public API.

Wraps the kernel backend (compiled when available, NumPy otherwise) with
validated types and the higher-level constructions: minimax centers,
recursive geodesic simplices, boundary rays and the group cocycle given
by integrating the invariant two-form power over geodesic simplices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations
from typing import Optional, Sequence, Tuple

import numpy as np

from ..errors import (
    GeometryInputError,
    ParabolicConfigurationError,
    QuadratureError,
    SolverError,
)
from ._meb import minimal_enclosing_ball
from .backend import kernels

INTERIOR_MARGIN = 1e-12
JUNITARITY_TOL = 1e-10
DET_TOL = 1e-8
BOUNDARY_TOL = 1e-12


class CHPoint:
    """Point of the open unit ball in C^n (kept off the boundary margin)."""

    __slots__ = ("z",)

    def __init__(self, z):
        z = np.array(z, dtype=complex).reshape(-1)
        if z.size < 1:
            raise GeometryInputError("point needs at least one coordinate")
        if float(np.linalg.norm(z)) >= 1.0 - INTERIOR_MARGIN:
            raise GeometryInputError(
                f"|z| = {np.linalg.norm(z):.15f} violates the interior "
                f"margin 1 - {INTERIOR_MARGIN:.0e}")
        z.setflags(write=False)
        self.z = z

    @property
    def n(self) -> int:
        return self.z.shape[0]

    @classmethod
    def origin(cls, n: int) -> "CHPoint":
        return cls(np.zeros(n, dtype=complex))

    def __repr__(self):
        return f"CHPoint({np.array2string(self.z, precision=6)})"


class BoundaryPoint:
    """Point of the sphere at infinity: |b| = 1 within tolerance."""

    __slots__ = ("b",)

    def __init__(self, b):
        b = np.array(b, dtype=complex).reshape(-1)
        if abs(float(np.linalg.norm(b)) - 1.0) > BOUNDARY_TOL:
            raise GeometryInputError(
                f"||b| - 1| = {abs(np.linalg.norm(b) - 1.0):.3e} exceeds "
                f"{BOUNDARY_TOL:.0e}")
        b.setflags(write=False)
        self.b = b

    @property
    def n(self) -> int:
        return self.b.shape[0]

    def __repr__(self):
        return f"BoundaryPoint({np.array2string(self.b, precision=6)})"


class Isometry:
    """Element of SU(n,1) acting projectively on the ball."""

    __slots__ = ("matrix",)

    def __init__(self, matrix):
        g = np.array(matrix, dtype=complex)
        if g.ndim != 2 or g.shape[0] != g.shape[1] or g.shape[0] < 2:
            raise GeometryInputError(f"isometry matrix has shape {g.shape}")
        n = g.shape[0] - 1
        J = kernels.j_matrix(n)
        defect = float(np.max(np.abs(g.conj().T @ J @ g - J)))
        if defect > JUNITARITY_TOL:
            raise GeometryInputError(
                f"matrix is not J-unitary: |g*Jg - J| = {defect:.3e} "
                f"exceeds {JUNITARITY_TOL:.0e}")
        det = complex(np.linalg.det(g))
        if abs(det - 1.0) > DET_TOL:
            raise GeometryInputError(
                f"matrix determinant {det:.12f} is not 1 within {DET_TOL:.0e}")
        g.setflags(write=False)
        self.matrix = g

    @property
    def n(self) -> int:
        return self.matrix.shape[0] - 1

    @classmethod
    def identity(cls, n: int) -> "Isometry":
        return cls(np.eye(n + 1, dtype=complex))

    def inverse(self) -> "Isometry":
        return Isometry(kernels.su_inverse(self.matrix))

    def __matmul__(self, other):
        if not isinstance(other, Isometry):
            return NotImplemented
        return Isometry(self.matrix @ other.matrix)

    def distance_to_identity(self) -> float:
        n = self.n
        return float(np.linalg.norm(self.matrix - np.eye(n + 1), 2))

    def __repr__(self):
        return f"Isometry(n={self.n})"


# -- basic operations ---------------------------------------------------


def dist(x: CHPoint, y: CHPoint) -> float:
    """Hyperbolic distance in the ball model."""
    return kernels.dist(x.z, y.z)


def geodesic(y: CHPoint, z: CHPoint, t: float) -> CHPoint:
    """Constant-speed geodesic from y (t=0) to z (t=1)."""
    return CHPoint(kernels.geodesic(y.z, z.z, float(t)))


def act(g: Isometry, x: CHPoint) -> CHPoint:
    try:
        return CHPoint(kernels.act(g.matrix, x.z))
    except ValueError as err:
        raise ParabolicConfigurationError(str(err)) from err


def boundary_act(g: Isometry, b: BoundaryPoint) -> BoundaryPoint:
    try:
        return BoundaryPoint(kernels.boundary_act(g.matrix, b.b))
    except ValueError as err:
        raise ParabolicConfigurationError(str(err)) from err


def act_tangent(g: Isometry, x: CHPoint, v: np.ndarray) -> np.ndarray:
    """Differential of the action of g at x, applied to tangent vector v."""
    return kernels.act_tangent(g.matrix, x.z, np.asarray(v, dtype=complex))


def tangent_norm(x: CHPoint, v: np.ndarray) -> float:
    return kernels.tangent_norm(x.z, np.asarray(v, dtype=complex))


def kahler_form(x: CHPoint) -> np.ndarray:
    """Matrix of the invariant two-form at x in real ball coordinates
    (Re z1, Im z1, ..., Re zn, Im zn)."""
    return kernels.kahler_matrix(x.z)


def omega_value(x: CHPoint, u, w) -> float:
    return kernels.omega_value(x.z, np.asarray(u, dtype=complex),
                               np.asarray(w, dtype=complex))


def ray_endpoint(x: CHPoint, v) -> BoundaryPoint:
    """Ideal endpoint of the geodesic ray from x with unit tangent v."""
    v = np.asarray(v, dtype=complex).reshape(-1)
    if v.shape != x.z.shape:
        raise GeometryInputError(
            f"tangent vector has shape {v.shape}, point has {x.z.shape}")
    speed = kernels.tangent_norm(x.z, v)
    if abs(speed - 1.0) > 1e-8:
        raise GeometryInputError(
            f"tangent vector has metric norm {speed:.12f}, expected 1")
    M = kernels.chart_to(x.z)
    w = kernels.act_tangent(kernels.su_inverse(M), x.z, v)
    w = w / np.linalg.norm(w)
    return BoundaryPoint(kernels.boundary_act(M, w))


# -- minimax center -------------------------------------------------------


@dataclass(frozen=True)
class CenterInfo:
    """Diagnostics reported alongside a center solve."""

    iterations: int
    step: float
    max_distance: float
    equidistance_residual: float


def _center_raw(points: Sequence[np.ndarray], tol: float, max_iter: int):
    if len(points) == 1:
        return points[0].copy(), CenterInfo(0, 0.0, 0.0, 0.0)
    if len(points) == 2:
        mid = kernels.geodesic(points[0], points[1], 0.5)
        d = kernels.dist(points[0], points[1])
        res = abs(kernels.dist(mid, points[0]) - kernels.dist(mid, points[1]))
        return mid, CenterInfo(0, 0.0, d / 2.0, res)

    m = points[0].copy()
    step = math.inf
    for iteration in range(1, max_iter + 1):
        M = kernels.chart_to(m)
        Minv = kernels.su_inverse(M)
        logs = [kernels.log_origin(kernels.act(Minv, p)) for p in points]
        P = np.array([np.concatenate([u.real, u.imag]) for u in logs])
        h_real, _ = minimal_enclosing_ball(P)
        n = m.shape[0]
        h = h_real[:n] + 1j * h_real[n:]
        step = float(np.linalg.norm(h))
        if step < tol:
            dists = [kernels.dist(m, p) for p in points]
            return m, CenterInfo(iteration, step, max(dists),
                                 max(dists) - min(dists))
        current = max(kernels.dist(m, p) for p in points)
        for _ in range(8):
            candidate = kernels.act(M, kernels.exp_origin(h))
            if max(kernels.dist(candidate, p) for p in points) \
                    <= current * (1.0 + 1e-12) + 1e-15:
                break
            h = h / 2.0
        m = candidate
    raise SolverError(
        f"center iteration did not reach step < {tol:g} in {max_iter} "
        f"iterations (last step {step:.3e})", residual=step)


def center(points: Sequence[CHPoint], tol: float = 1e-10,
           max_iter: int = 200) -> CHPoint:
    """Minimax (Chebyshev) center of a finite point set.

    Fixed-point iteration: lift the points to the tangent space at the
    current iterate, take the Euclidean minimal-enclosing-ball center
    there, and step back through the exponential; terminates when the
    step length drops below tol.  For point sets whose minimax ball is
    supported by two points the exact equidistant point need not exist
    for the others; :func:`center_with_info` exposes the equidistance
    residual alongside the result.
    """
    if not points:
        raise GeometryInputError("center needs at least one point")
    raw, _ = _center_raw([p.z for p in points], tol, max_iter)
    return CHPoint(raw)


def center_with_info(points: Sequence[CHPoint], tol: float = 1e-10,
                     max_iter: int = 200) -> Tuple[CHPoint, CenterInfo]:
    if not points:
        raise GeometryInputError("center needs at least one point")
    raw, info = _center_raw([p.z for p in points], tol, max_iter)
    return CHPoint(raw), info


# -- geodesic simplices ----------------------------------------------------


class SimplexMap:
    """Recursive geodesic simplex over a vertex tuple.

    Precomputes, for every vertex subset of size >= 2 (indexed by bitmask),
    the minimax center together with a chart isometry moving the origin to
    it; evaluation then runs entirely in the kernel backend.  Evaluating at
    the i-th corner returns the i-th vertex, the barycenter maps to the
    center of the full tuple, and restricting to a boundary face gives the
    face's own simplex map.
    """

    def __init__(self, points: Sequence[CHPoint], tol: float = 1e-10):
        if not points:
            raise GeometryInputError("simplex needs at least one vertex")
        n = points[0].n
        for p in points:
            if p.n != n:
                raise GeometryInputError("vertex dimensions differ")
        self.vertices = np.array([p.z for p in points], dtype=complex)
        m = len(points)
        self.dimension = m - 1
        size = 1 << m
        self.centers = np.zeros((size, n), dtype=complex)
        self.charts = np.zeros((size, n + 1, n + 1), dtype=complex)
        self.inv_charts = np.zeros_like(self.charts)
        self.center_info = {}
        for mask in range(1, size):
            members = [i for i in range(m) if mask & (1 << i)]
            if len(members) == 1:
                self.centers[mask] = self.vertices[members[0]]
                continue
            raw, info = _center_raw([self.vertices[i] for i in members],
                                    tol, 200)
            self.centers[mask] = raw
            self.center_info[mask] = info
            self.charts[mask] = kernels.chart_to(raw)
            self.inv_charts[mask] = kernels.su_inverse(self.charts[mask])

    @property
    def apex(self) -> CHPoint:
        """Center of the full vertex tuple."""
        return CHPoint(self.centers[(1 << (self.dimension + 1)) - 1])

    def _validate(self, t) -> np.ndarray:
        t = np.asarray(t, dtype=float).reshape(-1)
        if t.shape[0] != self.dimension + 1:
            raise GeometryInputError(
                f"barycentric tuple has length {t.shape[0]}, expected "
                f"{self.dimension + 1}")
        if np.any(t < -1e-12) or abs(float(np.sum(t)) - 1.0) > 1e-9:
            raise GeometryInputError(
                f"invalid barycentric coordinates {t.tolist()}")
        t = np.clip(t, 0.0, None)
        return t / float(np.sum(t))

    def eval_raw(self, t) -> np.ndarray:
        return kernels.sigma_eval(self.vertices, self.centers, self.charts,
                                  self.inv_charts, self._validate(t))

    def __call__(self, t) -> CHPoint:
        return CHPoint(self.eval_raw(t))


def simplex(points: Sequence[CHPoint], tol: float = 1e-10) -> SimplexMap:
    """Build the recursive geodesic simplex over the given vertices."""
    return SimplexMap(points, tol)


# -- cocycle quadrature -----------------------------------------------------


def _chambers(j: int) -> np.ndarray:
    """Barycentric vertex tuples of the ordering chambers of the simplex,
    oriented positively for the (t_1..t_j) coordinate parametrization."""
    out = []
    for perm in permutations(range(j + 1)):
        c = np.zeros((j + 1, j + 1))
        for level in range(j + 1):
            share = 1.0 / (j + 1 - level)
            for i in perm[level:]:
                c[level, i] = share
        A = (c[1:] - c[0])[:, 1:].T
        if np.linalg.det(A) < 0:
            c[[j - 1, j]] = c[[j, j - 1]]
        out.append(c)
    return np.array(out)


def _gauss_nodes(order: int):
    if order < 1:
        raise QuadratureError(f"quadrature order must be >= 1, got {order}")
    x, w = np.polynomial.legendre.leggauss(order)
    return (x + 1.0) / 2.0, w / 2.0


def _check_cocycle_args(elements, x, k):
    if k < 1:
        raise GeometryInputError(f"form power k must be >= 1, got {k}")
    j = len(elements) - 1
    if j != 2 * k:
        raise GeometryInputError(
            f"form degree mismatch: {len(elements)} elements give a "
            f"{j}-simplex, but omega^{k} needs dimension {2 * k}")
    n = x.n
    for g in elements:
        if g.n != n:
            raise GeometryInputError(
                f"element dimension {g.n} does not match base point {n}")


def cocycle_eval(elements: Sequence[Isometry], x: Optional[CHPoint] = None,
                 k: int = 1, order: int = 8, fd_step: float = 1e-5,
                 tol: float = 1e-10) -> float:
    """Group cocycle value: integral over the simplex spanned by the orbit
    points f_i(x) of the pullback of the invariant form power omega^k.

    ``order`` is the number of Gauss points per axis per ordering chamber;
    convergence should be assessed by doubling it (the construction has no
    closed-form reference values).
    """
    if x is None:
        x = CHPoint.origin(elements[0].n)
    _check_cocycle_args(elements, x, k)
    pts = [act(g, x) for g in elements]
    smap = SimplexMap(pts, tol)
    nodes, weights = _gauss_nodes(order)
    value = kernels.cocycle_integral(
        smap.vertices, smap.centers, smap.charts, smap.inv_charts,
        _chambers(smap.dimension), nodes, weights, int(k), float(fd_step))
    if not math.isfinite(value):
        raise QuadratureError(f"quadrature returned {value}")
    return float(value)


def coboundary_residual(elements: Sequence[Isometry],
                        x: Optional[CHPoint] = None, k: int = 1,
                        order: int = 8, fd_step: float = 1e-5,
                        tol: float = 1e-10, return_faces: bool = False):
    """Absolute value of the alternating sum of cocycle values over the
    faces of a (2k+1)-simplex of group elements; the cocycle identity
    makes the exact value zero, so the result measures discretization
    error and must shrink as ``order`` grows."""
    if len(elements) != 2 * k + 2:
        raise GeometryInputError(
            f"coboundary check needs {2 * k + 2} elements, got {len(elements)}")
    faces = []
    for i in range(len(elements)):
        subset = [g for pos, g in enumerate(elements) if pos != i]
        faces.append(cocycle_eval(subset, x, k, order, fd_step, tol))
    residual = abs(sum(((-1) ** i) * f for i, f in enumerate(faces)))
    if return_faces:
        return residual, faces
    return residual


# -- random isometries -------------------------------------------------------


def _expm(X: np.ndarray) -> np.ndarray:
    norm = float(np.linalg.norm(X, 1))
    squarings = max(0, int(math.ceil(math.log2(norm))) + 1) if norm > 0.5 else 0
    Y = X / (2.0 ** squarings)
    term = np.eye(X.shape[0], dtype=complex)
    out = term.copy()
    for k in range(1, 30):
        term = term @ Y / k
        out += term
        if float(np.max(np.abs(term))) < 1e-18:
            break
    for _ in range(squarings):
        out = out @ out
    return out


def random_isometry(n: int, rng: np.random.Generator,
                    scale: float = 0.25) -> Isometry:
    """Random element of SU(n,1): the exponential of a random Lie-algebra
    element of operator norm ``scale`` (so the distance to the identity is
    about e^scale - 1)."""
    A = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    A = (A - A.conj().T) / 2.0
    b = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    X = np.zeros((n + 1, n + 1), dtype=complex)
    X[:n, :n] = A
    X[:n, n] = b
    X[n, :n] = b.conj()
    X[n, n] = -np.trace(A)
    norm = float(np.linalg.norm(X, 2))
    if norm > 0:
        X *= scale / norm
    return Isometry(_expm(X))
