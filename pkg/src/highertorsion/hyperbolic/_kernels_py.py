"""Pure NumPy kernels for the unit-ball model of complex hyperbolic space.

This module is the fallback backend; ``_kernels_cy`` is a compiled mirror
of the same functions selected at import time when available.  Everything
here works on raw arrays: points are complex vectors of length n with
|z| < 1, isometries are (n+1) x (n+1) complex matrices g with g* J g = J
for J = diag(1, ..., 1, -1), acting projectively on lifts (z, 1).

Conventions (fixed for the whole package):

- distance:  cosh^2 d(x, y) = |1 - <x, y>|^2 / ((1 - |x|^2)(1 - |y|^2)),
  so dist(0, (s, 0, ...)) = arctanh(s);
- metric tensor g_{ij} = delta_ij/(1-|z|^2) + conj(z_i) z_j/(1-|z|^2)^2
  (the Hessian of the potential -log(1 - |z|^2)), whose real part
  reproduces the distance above along radial lines;
- invariant two-form omega(u, w) = -2 Im sum g_{ij} u_i conj(w_j), the
  standard symplectic matrix scaled by 2 at the origin.
"""

from __future__ import annotations

from itertools import product
from math import atanh, factorial, sqrt, tanh

import numpy as np

DEHOM_EPS = 1e-14

name = "pure"


def j_matrix(n: int) -> np.ndarray:
    J = np.eye(n + 1, dtype=complex)
    J[n, n] = -1.0
    return J


def j_inner(u: np.ndarray, w: np.ndarray) -> complex:
    """Indefinite Hermitian form <u, w> = sum_{l<n} u_l conj(w_l) - u_n conj(w_n)."""
    return complex(np.dot(u[:-1], w[:-1].conj()) - u[-1] * np.conj(w[-1]))


def su_inverse(g: np.ndarray) -> np.ndarray:
    """Inverse of a J-unitary matrix: J g* J."""
    n = g.shape[0] - 1
    J = j_matrix(n)
    return J @ g.conj().T @ J


def act(g: np.ndarray, z: np.ndarray) -> np.ndarray:
    """Projective action on the lift (z, 1)."""
    n = z.shape[0]
    w = g[:n, :n] @ z + g[:n, n]
    denom = complex(g[n, :n] @ z + g[n, n])
    if abs(denom) < DEHOM_EPS:
        raise ValueError(
            f"dehomogenization denominator {abs(denom):.3e} below {DEHOM_EPS:.0e}"
            " (numerically parabolic configuration)")
    return w / denom


def act_tangent(g: np.ndarray, z: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Differential of the projective action at z applied to v."""
    n = z.shape[0]
    denom = complex(g[n, :n] @ z + g[n, n])
    if abs(denom) < DEHOM_EPS:
        raise ValueError("dehomogenization denominator vanished")
    image = (g[:n, :n] @ z + g[:n, n]) / denom
    return (g[:n, :n] @ v - image * complex(g[n, :n] @ v)) / denom


boundary_act = act  # same projective formula; null lifts have |w| = |denom|


def dist(x: np.ndarray, y: np.ndarray) -> float:
    # absolute accuracy near zero is limited to ~1e-8 by cancellation in
    # cosh^2 - 1; comparisons of nearly coincident points should use
    # coordinates instead
    h = complex(np.dot(x, y.conj()))
    num = abs(1.0 - h) ** 2
    den = (1.0 - float(np.dot(x, x.conj()).real)) * \
          (1.0 - float(np.dot(y, y.conj()).real))
    c2 = num / den
    if c2 <= 1.0:
        return 0.0
    return float(np.arccosh(sqrt(c2)))


def chart_to(y: np.ndarray) -> np.ndarray:
    """An isometry in SU(n,1) sending the origin to y.

    Completes the normalized lift of y to a J-orthonormal basis by
    Gram-Schmidt with respect to the indefinite form, then fixes the
    determinant phase.
    """
    n = y.shape[0]
    norm2 = float(np.dot(y, y.conj()).real)
    lift = np.concatenate([y, [1.0]]).astype(complex)
    lift /= sqrt(1.0 - norm2)  # J-norm is now -1
    cols = []
    for i in range(n):
        v = np.zeros(n + 1, dtype=complex)
        v[i] = 1.0
        v = v + j_inner(v, lift) * lift
        for u in cols:
            v = v - j_inner(v, u) * u
        norm = sqrt(j_inner(v, v).real)
        cols.append(v / norm)
    M = np.column_stack(cols + [lift])
    det = np.linalg.det(M)
    M *= np.exp(-1j * np.angle(det) / (n + 1))
    return M


def geodesic(y: np.ndarray, z: np.ndarray, t: float) -> np.ndarray:
    """Constant-speed geodesic with gamma(0) = y, gamma(1) = z."""
    M = chart_to(y)
    w = act(su_inverse(M), z)
    r = float(np.sqrt(np.dot(w, w.conj()).real))
    if r < 1e-300:
        return y.astype(complex).copy()
    rho = tanh(t * atanh(r))
    return act(M, (rho / r) * w)


def log_origin(w: np.ndarray) -> np.ndarray:
    """Riemannian log map at the origin (tangent vector toward w)."""
    r = float(np.sqrt(np.dot(w, w.conj()).real))
    if r < 1e-300:
        return np.zeros_like(w)
    return (atanh(r) / r) * w


def exp_origin(h: np.ndarray) -> np.ndarray:
    """Riemannian exponential at the origin."""
    r = float(np.sqrt(np.dot(h, h.conj()).real))
    if r < 1e-300:
        return np.zeros_like(h)
    return (tanh(r) / r) * h


def metric_inner(x: np.ndarray, u: np.ndarray, w: np.ndarray) -> complex:
    """sum g_{ij}(x) u_i conj(w_j) for the ball metric tensor."""
    a = 1.0 - float(np.dot(x, x.conj()).real)
    zu = complex(np.dot(x.conj(), u))
    zw = complex(np.dot(x.conj(), w))
    return complex(np.dot(u, w.conj())) / a + zu * np.conj(zw) / (a * a)


def tangent_norm(x: np.ndarray, v: np.ndarray) -> float:
    return sqrt(max(metric_inner(x, v, v).real, 0.0))


def omega_value(x: np.ndarray, u: np.ndarray, w: np.ndarray) -> float:
    """Invariant closed two-form evaluated on two tangent vectors."""
    return -2.0 * metric_inner(x, u, w).imag


def kahler_matrix(x: np.ndarray) -> np.ndarray:
    """Coefficient matrix of omega in real coordinates
    (Re z_1, Im z_1, ..., Re z_n, Im z_n)."""
    n = x.shape[0]
    out = np.zeros((2 * n, 2 * n))
    frame = []
    for i in range(n):
        e = np.zeros(n, dtype=complex)
        e[i] = 1.0
        frame.append(e)
        frame.append(1j * e)
    rows = [frame[2 * i + a] for i in range(n) for a in range(2)]
    for a, u in enumerate(rows):
        for b in range(a + 1, 2 * n):
            val = omega_value(x, u, rows[b])
            out[a, b] = val
            out[b, a] = -val
    return out


# ---------------------------------------------------------------------------
# Geodesic simplex evaluation and cocycle quadrature.
#
# The simplex data is precomputed per vertex tuple (see hyperbolic.core):
# for every index subset with >= 2 elements, identified by its bitmask,
# the minimax center and a chart isometry sending the origin to it.
# ---------------------------------------------------------------------------

def _geodesic_from_chart(chart, inv_chart, z, s):
    n = z.shape[0]
    w = act(inv_chart, z)
    r = float(np.sqrt(np.dot(w, w.conj()).real))
    if r < 1e-300:
        return act(chart, np.zeros(n, dtype=complex))
    rho = tanh(s * atanh(r))
    return act(chart, (rho / r) * w)


def sigma_eval(verts: np.ndarray, centers: np.ndarray, charts: np.ndarray,
               inv_charts: np.ndarray, t: np.ndarray) -> np.ndarray:
    """Evaluate the recursive geodesic simplex at barycentric t.

    The recursion cones the face opposite the smallest coordinate over the
    center of the current vertex subset: with p active vertices and u the
    first index attaining the minimum, the value is the geodesic from the
    subset center to the face value at parameter s = 1 - p * t_u, the face
    being evaluated at the renormalized coordinates (t_i - t_u) / s.  This
    is the cone over the boundary along barycentric rays, which keeps the
    map continuous at coordinate ties (both branches exit through the same
    face corner) while restricting to the sub-simplex maps on faces.
    """
    m = verts.shape[0]
    full_mask = (1 << m) - 1
    return _sigma_rec(verts, centers, charts, inv_charts,
                      full_mask, np.asarray(t, dtype=float))


def _sigma_rec(verts, centers, charts, inv_charts, mask, t):
    active = [i for i in range(verts.shape[0]) if mask & (1 << i)]
    p = len(active)
    if p == 1:
        return verts[active[0]].copy()
    u = min(active, key=lambda i: (t[i], i))
    tu = t[u]
    s = 1.0 - p * tu
    if s < 1e-14:  # barycenter of the active subset: the apex itself
        return centers[mask].copy()
    child_mask = mask & ~(1 << u)
    t_child = (t - tu) / s
    child = _sigma_rec(verts, centers, charts, inv_charts, child_mask, t_child)
    return _geodesic_from_chart(charts[mask], inv_charts[mask], child, s)


def pfaffian(B: np.ndarray) -> float:
    """Pfaffian of a small antisymmetric matrix (recursive expansion)."""
    size = B.shape[0]
    if size == 0:
        return 1.0
    if size % 2:
        return 0.0
    if size == 2:
        return float(B[0, 1])
    total = 0.0
    rest = list(range(1, size))
    for pos, k in enumerate(rest):
        keep = [i for i in rest if i != k]
        minor = B[np.ix_(keep, keep)]
        term = B[0, k] * pfaffian(minor)
        total += term if pos % 2 == 0 else -term
    return float(total)


def cocycle_integral(verts: np.ndarray, centers: np.ndarray,
                     charts: np.ndarray, inv_charts: np.ndarray,
                     chambers: np.ndarray, nodes: np.ndarray,
                     weights: np.ndarray, k: int, fd_step: float) -> float:
    """Integral of the simplex pullback of omega^k over the j-simplex.

    The simplex is split into its ordering chambers (the map is smooth in
    each); every chamber is mapped affinely from the reference simplex and
    integrated with a Duffy-transformed tensor Gauss rule.  Derivatives of
    the simplex map are central finite differences along the chamber's
    affine directions, and omega^k contributes k! times the Pfaffian of
    the pulled-back two-form matrix.
    """
    m = verts.shape[0]
    j = m - 1
    if j != 2 * k:
        raise ValueError(f"form power {k} needs a {2 * k}-simplex, got {j}")
    total = 0.0
    q = nodes.shape[0]
    kfact = float(factorial(k))
    for chamber in chambers:
        base = chamber[0]
        dirs = chamber[1:] - base  # j x (j+1) barycentric directions
        for idx in product(range(q), repeat=j):
            u = nodes[list(idx)]
            wt = float(np.prod(weights[list(idx)]))
            beta = np.empty(j)
            jac = 1.0
            prefix = 1.0
            for a in range(j):
                beta[a] = u[a] * prefix
                jac *= (1.0 - u[a]) ** (j - 1 - a)
                prefix *= 1.0 - u[a]
            t = base + beta @ dirs
            x0 = sigma_eval(verts, centers, charts, inv_charts, t)
            D = np.empty((j, verts.shape[1]), dtype=complex)
            for a in range(j):
                plus = sigma_eval(verts, centers, charts, inv_charts,
                                  t + fd_step * dirs[a])
                minus = sigma_eval(verts, centers, charts, inv_charts,
                                   t - fd_step * dirs[a])
                D[a] = (plus - minus) / (2.0 * fd_step)
            B = np.zeros((j, j))
            for a in range(j):
                for b in range(a + 1, j):
                    val = omega_value(x0, D[a], D[b])
                    B[a, b] = val
                    B[b, a] = -val
            total += wt * jac * kfact * pfaffian(B)
    return total
