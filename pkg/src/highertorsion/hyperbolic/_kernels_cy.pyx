# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernels for the ball model: hot paths of the cocycle quadrature.

Mirrors the API of ``_kernels_py``; the functions that only run during
setup (chart construction, Kahler matrix, log/exp at the origin) are
reused from the pure module, while point actions, geodesic evaluation,
the recursive simplex map and the full quadrature loop run in C.
"""

from libc.math cimport atanh, fabs, sqrt, tanh

import numpy as np

cimport numpy as cnp

from . import _kernels_py as _py

name = "compiled"

DEF MAXN = 8        # max complex ball dimension
DEF MAXM = 7        # max simplex vertices (form power k <= 3)
DEF MAXDIM = 9      # MAXN + 1

j_matrix = _py.j_matrix
j_inner = _py.j_inner
su_inverse = _py.su_inverse
chart_to = _py.chart_to
log_origin = _py.log_origin
exp_origin = _py.exp_origin
metric_inner = _py.metric_inner
tangent_norm = _py.tangent_norm
kahler_matrix = _py.kahler_matrix

DEHOM_EPS = 1e-14


def _carr(obj, dtype):
    """Contiguous writable array view/copy (inputs may be read-only)."""
    arr = np.ascontiguousarray(obj, dtype=dtype)
    if not arr.flags.writeable:
        arr = arr.copy()
    return arr


cdef int c_act(double complex[:, :] g, double complex* z, int n,
               double complex* out) except -1:
    cdef double complex w[MAXN]
    cdef double complex den = 0
    cdef int i, j
    for i in range(n):
        w[i] = g[i, n]
        for j in range(n):
            w[i] = w[i] + g[i, j] * z[j]
    den = g[n, n]
    for j in range(n):
        den = den + g[n, j] * z[j]
    if abs(den) < 1e-14:
        raise ValueError(
            "dehomogenization denominator below 1e-14 "
            "(numerically parabolic configuration)")
    for i in range(n):
        out[i] = w[i] / den
    return 0


cdef double c_norm(double complex* z, int n):
    cdef double acc = 0.0
    cdef int i
    for i in range(n):
        acc += z[i].real * z[i].real + z[i].imag * z[i].imag
    return sqrt(acc)


cdef int c_geodesic_from_chart(double complex[:, :] chart,
                               double complex[:, :] inv_chart,
                               double complex* z, double s, int n,
                               double complex* out) except -1:
    cdef double complex w[MAXN]
    cdef double r, rho
    cdef int i
    c_act(inv_chart, z, n, w)
    r = c_norm(w, n)
    if r < 1e-300:
        for i in range(n):
            w[i] = 0
    else:
        rho = tanh(s * atanh(r)) / r
        for i in range(n):
            w[i] = w[i] * rho
    c_act(chart, w, n, out)
    return 0


cdef int c_sigma(double complex[:, :] verts, double complex[:, :] centers,
                 double complex[:, :, :] charts,
                 double complex[:, :, :] inv_charts,
                 int mask, double* t, int m, int n,
                 double complex* out) except -1:
    cdef int active[MAXM]
    cdef int p = 0
    cdef int i, u
    cdef double tu, s
    cdef double t_child[MAXM]
    cdef double complex child[MAXN]
    for i in range(m):
        if mask & (1 << i):
            active[p] = i
            p += 1
    if p == 1:
        for i in range(n):
            out[i] = verts[active[0], i]
        return 0
    u = active[0]
    for i in range(1, p):
        if t[active[i]] < t[u]:
            u = active[i]
    tu = t[u]
    s = 1.0 - p * tu
    if s < 1e-14:
        for i in range(n):
            out[i] = centers[mask, i]
        return 0
    for i in range(m):
        t_child[i] = (t[i] - tu) / s
    c_sigma(verts, centers, charts, inv_charts, mask & ~(1 << u),
            t_child, m, n, child)
    return c_geodesic_from_chart(charts[mask], inv_charts[mask],
                                 child, s, n, out)


cdef double c_omega(double complex* x, double complex* u, double complex* w,
                    int n):
    cdef double a = 1.0
    cdef double complex zu = 0, zw = 0, uw = 0
    cdef int i
    for i in range(n):
        a -= x[i].real * x[i].real + x[i].imag * x[i].imag
        zu = zu + x[i].conjugate() * u[i]
        zw = zw + x[i].conjugate() * w[i]
        uw = uw + u[i] * w[i].conjugate()
    return -2.0 * (uw / a + zu * zw.conjugate() / (a * a)).imag


cdef double c_pfaffian(double* B, int size, int stride):
    # recursive expansion along the first active row; B indexed through
    # the `rows` indirection to avoid copying minors
    cdef int rows[8]
    cdef int i
    for i in range(size):
        rows[i] = i
    return _pf_rec(B, stride, rows, size)


cdef double _pf_rec(double* B, int stride, int* rows, int size):
    if size == 0:
        return 1.0
    cdef double total = 0.0
    cdef double term
    cdef int k, i, pos
    cdef int sub[8]
    for k in range(1, size):
        pos = 0
        for i in range(1, size):
            if i != k:
                sub[pos] = rows[i]
                pos += 1
        term = B[rows[0] * stride + rows[k]] * _pf_rec(B, stride, sub, size - 2)
        if k % 2 == 1:
            total += term
        else:
            total -= term
    return total


def act(g, z):
    cdef cnp.ndarray[cnp.complex128_t, ndim=2] gm = _carr(g, np.complex128)
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] zv = _carr(z, np.complex128)
    cdef int n = zv.shape[0]
    cdef double complex zin[MAXN]
    cdef double complex out[MAXN]
    cdef int i
    if n > MAXN:
        return _py.act(g, z)
    for i in range(n):
        zin[i] = zv[i]
    c_act(gm, zin, n, out)
    result = np.empty(n, dtype=np.complex128)
    for i in range(n):
        result[i] = out[i]
    return result


boundary_act = act


def act_tangent(g, z, v):
    return _py.act_tangent(g, z, v)


def dist(x, y):
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] xv = _carr(x, np.complex128)
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] yv = _carr(y, np.complex128)
    cdef int n = xv.shape[0]
    cdef int i
    cdef double complex h = 0
    cdef double nx = 0, ny = 0, c2, s
    for i in range(n):
        h = h + xv[i] * yv[i].conjugate()
        nx += xv[i].real * xv[i].real + xv[i].imag * xv[i].imag
        ny += yv[i].real * yv[i].real + yv[i].imag * yv[i].imag
    c2 = abs(1.0 - h) ** 2 / ((1.0 - nx) * (1.0 - ny))
    if c2 <= 1.0:
        return 0.0
    s = sqrt(c2)
    return float(np.arccosh(s))


def geodesic(y, z, double t):
    cdef cnp.ndarray[cnp.complex128_t, ndim=2] chart = np.ascontiguousarray(
        _py.chart_to(np.asarray(y, dtype=np.complex128)), dtype=np.complex128)
    cdef cnp.ndarray[cnp.complex128_t, ndim=2] inv = np.ascontiguousarray(
        _py.su_inverse(chart), dtype=np.complex128)
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] zv = _carr(z, np.complex128)
    cdef int n = zv.shape[0]
    cdef double complex zin[MAXN]
    cdef double complex out[MAXN]
    cdef int i
    if n > MAXN:
        return _py.geodesic(y, z, t)
    for i in range(n):
        zin[i] = zv[i]
    c_geodesic_from_chart(chart, inv, zin, t, n, out)
    result = np.empty(n, dtype=np.complex128)
    for i in range(n):
        result[i] = out[i]
    return result


def omega_value(x, u, w):
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] xv = _carr(x, np.complex128)
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] uv = _carr(u, np.complex128)
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] wv = _carr(w, np.complex128)
    cdef int n = xv.shape[0]
    cdef double complex xb[MAXN]
    cdef double complex ub[MAXN]
    cdef double complex wb[MAXN]
    cdef int i
    if n > MAXN:
        return _py.omega_value(x, u, w)
    for i in range(n):
        xb[i] = xv[i]
        ub[i] = uv[i]
        wb[i] = wv[i]
    return c_omega(xb, ub, wb, n)


def pfaffian(B):
    cdef cnp.ndarray[cnp.float64_t, ndim=2] Bm = _carr(B, np.float64)
    cdef int size = Bm.shape[0]
    if size == 0:
        return 1.0
    if size % 2:
        return 0.0
    if size > 8:
        return _py.pfaffian(B)
    return c_pfaffian(<double*> Bm.data, size, size)


def sigma_eval(verts, centers, charts, inv_charts, t):
    cdef cnp.ndarray[cnp.complex128_t, ndim=2] vv = _carr(verts, np.complex128)
    cdef cnp.ndarray[cnp.complex128_t, ndim=2] cc = _carr(centers, np.complex128)
    cdef cnp.ndarray[cnp.complex128_t, ndim=3] ch = _carr(charts, np.complex128)
    cdef cnp.ndarray[cnp.complex128_t, ndim=3] ic = _carr(inv_charts, np.complex128)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] tv = _carr(t, np.float64)
    cdef int m = vv.shape[0]
    cdef int n = vv.shape[1]
    cdef double tb[MAXM]
    cdef double complex out[MAXN]
    cdef int i
    if m > MAXM or n > MAXN:
        return _py.sigma_eval(verts, centers, charts, inv_charts, t)
    for i in range(m):
        tb[i] = tv[i]
    c_sigma(vv, cc, ch, ic, (1 << m) - 1, tb, m, n, out)
    result = np.empty(n, dtype=np.complex128)
    for i in range(n):
        result[i] = out[i]
    return result


def cocycle_integral(verts, centers, charts, inv_charts, chambers,
                     nodes, weights, int k, double fd_step):
    cdef cnp.ndarray[cnp.complex128_t, ndim=2] vv = _carr(verts, np.complex128)
    cdef cnp.ndarray[cnp.complex128_t, ndim=2] cc = _carr(centers, np.complex128)
    cdef cnp.ndarray[cnp.complex128_t, ndim=3] ch = _carr(charts, np.complex128)
    cdef cnp.ndarray[cnp.complex128_t, ndim=3] ic = _carr(inv_charts, np.complex128)
    cdef cnp.ndarray[cnp.float64_t, ndim=3] chams = _carr(chambers, np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] xs = _carr(nodes, np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] ws = _carr(weights, np.float64)

    cdef int m = vv.shape[0]
    cdef int n = vv.shape[1]
    cdef int j = m - 1
    if j != 2 * k:
        raise ValueError(f"form power {k} needs a {2 * k}-simplex, got {j}")
    if m > MAXM or n > MAXN or j > 6:
        return _py.cocycle_integral(verts, centers, charts, inv_charts,
                                    chambers, nodes, weights, k, fd_step)

    cdef int q = xs.shape[0]
    cdef int n_chambers = chams.shape[0]
    cdef int full_mask = (1 << m) - 1
    cdef double kfact = 1.0
    cdef int i
    for i in range(2, k + 1):
        kfact *= i

    cdef double total = 0.0
    cdef int ci, a, b, axis, carry
    cdef int idx[6]
    cdef double base[MAXM]
    cdef double dirs[6][MAXM]
    cdef double beta[6]
    cdef double tvec[MAXM]
    cdef double tpert[MAXM]
    cdef double wt, jac, prefix
    cdef double complex x0[MAXN]
    cdef double complex plus[MAXN]
    cdef double complex minus[MAXN]
    cdef double complex D[6][MAXN]
    cdef double B[36]

    for ci in range(n_chambers):
        for a in range(m):
            base[a] = chams[ci, 0, a]
        for a in range(j):
            for b in range(m):
                dirs[a][b] = chams[ci, a + 1, b] - base[b]
        for a in range(j):
            idx[a] = 0
        while True:
            wt = 1.0
            jac = 1.0
            prefix = 1.0
            for a in range(j):
                wt *= ws[idx[a]]
                beta[a] = xs[idx[a]] * prefix
                jac *= (1.0 - xs[idx[a]]) ** (j - 1 - a)
                prefix *= 1.0 - xs[idx[a]]
            for b in range(m):
                tvec[b] = base[b]
                for a in range(j):
                    tvec[b] += beta[a] * dirs[a][b]
            c_sigma(vv, cc, ch, ic, full_mask, tvec, m, n, x0)
            for a in range(j):
                for b in range(m):
                    tpert[b] = tvec[b] + fd_step * dirs[a][b]
                c_sigma(vv, cc, ch, ic, full_mask, tpert, m, n, plus)
                for b in range(m):
                    tpert[b] = tvec[b] - fd_step * dirs[a][b]
                c_sigma(vv, cc, ch, ic, full_mask, tpert, m, n, minus)
                for b in range(n):
                    D[a][b] = (plus[b] - minus[b]) / (2.0 * fd_step)
            for a in range(j):
                B[a * j + a] = 0.0
                for b in range(a + 1, j):
                    B[a * j + b] = c_omega(x0, D[a], D[b], n)
                    B[b * j + a] = -B[a * j + b]
            total += wt * jac * kfact * c_pfaffian(B, j, j)
            # odometer over the tensor grid
            axis = 0
            while axis < j:
                idx[axis] += 1
                if idx[axis] < q:
                    break
                idx[axis] = 0
                axis += 1
            if axis == j:
                break
    return total
