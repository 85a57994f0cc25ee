import math

import numpy as np
import pytest

from highertorsion.errors import GeometryInputError
from highertorsion.hyperbolic import (
    BoundaryPoint,
    CHPoint,
    Isometry,
    act,
    act_tangent,
    boundary_act,
    center,
    center_with_info,
    dist,
    geodesic,
    kahler_form,
    omega_value,
    random_isometry,
    ray_endpoint,
    simplex,
    tangent_norm,
)
from highertorsion.hyperbolic.backend import kernels


def rng():
    return np.random.default_rng(20240517)


def random_point(n, gen, radius=0.8):
    direction = gen.standard_normal(n) + 1j * gen.standard_normal(n)
    direction /= np.linalg.norm(direction)
    return CHPoint(gen.uniform(0.0, radius) * direction)


def test_point_validation():
    CHPoint([0.5, 0.0])
    with pytest.raises(GeometryInputError):
        CHPoint([1.0, 0.0])
    with pytest.raises(GeometryInputError):
        CHPoint([0.9999999999999, 0.0])


def test_isometry_validation():
    Isometry.identity(2)
    bad = np.eye(3, dtype=complex)
    bad[0, 0] = 2.0
    with pytest.raises(GeometryInputError):
        Isometry(bad)


def test_dist_basics():
    n = 2
    origin = CHPoint.origin(n)
    assert dist(origin, origin) == 0.0
    for s in (0.1, 0.5, 0.9):
        p = CHPoint([s, 0.0])
        assert dist(origin, p) == pytest.approx(math.atanh(s), abs=1e-12)
        assert dist(p, origin) == pytest.approx(math.atanh(s), abs=1e-12)


def test_dist_against_numeric_length_integration():
    # Independent oracle: integrate the metric speed along the radial
    # segment with composite Simpson quadrature.
    s = 0.7
    samples = 2001
    ts = np.linspace(0.0, s, samples)
    speeds = 1.0 / (1.0 - ts**2)  # radial metric speed in the ball
    simpson = speeds[0] + speeds[-1] + 4 * speeds[1:-1:2].sum() + 2 * speeds[2:-1:2].sum()
    length = simpson * (ts[1] - ts[0]) / 3.0
    assert dist(CHPoint.origin(1), CHPoint([s])) == pytest.approx(length, abs=1e-10)


def test_dist_invariance():
    gen = rng()
    n = 2
    for _ in range(50):
        g = random_isometry(n, gen, scale=1.0)
        x = random_point(n, gen)
        y = random_point(n, gen)
        assert dist(act(g, x), act(g, y)) == pytest.approx(dist(x, y), abs=1e-9)


def test_triangle_inequality():
    gen = rng()
    n = 2
    for _ in range(100):
        x, y, z = (random_point(n, gen) for _ in range(3))
        assert dist(x, z) <= dist(x, y) + dist(y, z) + 1e-12


def test_geodesic_endpoints_and_midpoint():
    gen = rng()
    n = 2
    for _ in range(25):
        y = random_point(n, gen)
        z = random_point(n, gen)
        g0 = geodesic(y, z, 0.0)
        g1 = geodesic(y, z, 1.0)
        assert np.allclose(g0.z, y.z, atol=1e-12)
        assert np.allclose(g1.z, z.z, atol=1e-12)
        mid = geodesic(y, z, 0.5)
        assert dist(y, mid) == pytest.approx(dist(y, z) / 2.0, abs=1e-9)
        t = gen.uniform(0, 1)
        assert dist(y, geodesic(y, z, t)) == pytest.approx(t * dist(y, z), abs=1e-9)


def test_geodesic_radial_formula():
    s = 0.8
    mid = geodesic(CHPoint.origin(2), CHPoint([s, 0.0]), 0.5)
    expected = math.tanh(math.atanh(s) / 2.0)
    assert mid.z[0].real == pytest.approx(expected, abs=1e-12)
    assert abs(mid.z[1]) < 1e-15


def test_geodesic_invariance():
    gen = rng()
    n = 2
    for _ in range(50):
        g = random_isometry(n, gen, scale=1.0)
        y, z = random_point(n, gen), random_point(n, gen)
        t = gen.uniform(0, 1)
        direct = act(g, geodesic(y, z, t))
        moved = geodesic(act(g, y), act(g, z), t)
        assert np.allclose(direct.z, moved.z, atol=1e-9)


def test_act_group_law():
    gen = rng()
    n = 2
    x = random_point(n, gen)
    assert np.allclose(act(Isometry.identity(n), x).z, x.z)
    for _ in range(20):
        g = random_isometry(n, gen, scale=0.8)
        roundtrip = act(g, act(g.inverse(), x))
        assert np.allclose(roundtrip.z, x.z, atol=1e-10)


def test_boundary_act_preserves_sphere():
    gen = rng()
    n = 2
    for _ in range(25):
        g = random_isometry(n, gen, scale=1.0)
        b = gen.standard_normal(n) + 1j * gen.standard_normal(n)
        b /= np.linalg.norm(b)
        image = boundary_act(g, BoundaryPoint(b))
        assert abs(np.linalg.norm(image.b) - 1.0) <= 1e-12


def test_ray_endpoint_radial_and_antipodal():
    onehot = np.zeros(2, dtype=complex)
    onehot[0] = 1.0
    out = ray_endpoint(CHPoint.origin(2), onehot)
    assert np.allclose(out.b, onehot, atol=1e-12)
    back = ray_endpoint(CHPoint.origin(2), -onehot)
    assert np.allclose(back.b, -onehot, atol=1e-12)


def test_ray_endpoint_rejects_non_unit():
    with pytest.raises(GeometryInputError):
        ray_endpoint(CHPoint.origin(2), np.array([2.0, 0.0], dtype=complex))


def test_ray_endpoint_equivariance():
    gen = rng()
    n = 2
    for _ in range(30):
        x = random_point(n, gen)
        v = gen.standard_normal(n) + 1j * gen.standard_normal(n)
        v /= tangent_norm(x, v)
        g = random_isometry(n, gen, scale=0.8)
        gx = act(g, x)
        gv = act_tangent(g, x, v)
        gv /= tangent_norm(gx, gv)  # renormalize against roundoff
        lhs = ray_endpoint(gx, gv)
        rhs = boundary_act(g, ray_endpoint(x, v))
        assert np.allclose(lhs.b, rhs.b, atol=1e-8)


def test_kahler_at_origin():
    omega = kahler_form(CHPoint.origin(2))
    expected = np.zeros((4, 4))
    expected[0, 1] = expected[2, 3] = 2.0
    expected[1, 0] = expected[3, 2] = -2.0
    assert np.allclose(omega, expected, atol=1e-14)
    assert np.allclose(omega, -omega.T)


def test_kahler_invariance():
    gen = rng()
    n = 2
    for _ in range(25):
        g = random_isometry(n, gen, scale=0.8)
        x = random_point(n, gen)
        u = gen.standard_normal(n) + 1j * gen.standard_normal(n)
        w = gen.standard_normal(n) + 1j * gen.standard_normal(n)
        pulled = omega_value(act(g, x), act_tangent(g, x, u), act_tangent(g, x, w))
        assert pulled == pytest.approx(omega_value(x, u, w), abs=1e-8)


def test_center_singleton_and_pair():
    gen = rng()
    x = random_point(2, gen)
    assert np.allclose(center([x]).z, x.z)
    y = random_point(2, gen)
    mid = center([x, y])
    assert np.allclose(mid.z, geodesic(x, y, 0.5).z, atol=1e-12)


def test_center_three_points_minimax():
    gen = rng()
    pts = [random_point(2, gen, radius=0.5) for _ in range(3)]
    m, info = center_with_info(pts, tol=1e-11)
    radii = [dist(m, p) for p in pts]
    r = max(radii)
    # no nearby point does better (local minimax optimality)
    for _ in range(200):
        offset = 0.01 * (gen.standard_normal(2) + 1j * gen.standard_normal(2))
        probe = CHPoint(m.z + offset)
        assert max(dist(probe, p) for p in pts) >= r - 1e-6
    assert info.equidistance_residual <= 1e-8 or info.max_distance >= r - 1e-9


def test_center_equivariance():
    # coordinate comparison: dist() loses absolute accuracy below ~1e-8
    # for nearly coincident points (cancellation in the cosh^2 formula)
    gen = rng()
    n = 2
    tol = 1e-10
    for _ in range(50):
        pts = [random_point(n, gen, radius=0.6) for _ in range(3)]
        g = random_isometry(n, gen, scale=0.8)
        lhs = center([act(g, p) for p in pts], tol=tol)
        rhs = act(g, center(pts, tol=tol))
        assert float(np.linalg.norm(lhs.z - rhs.z)) <= 10 * tol


def test_simplex_vertices_and_barycenter():
    gen = rng()
    n = 2
    pts = [random_point(n, gen, radius=0.6) for _ in range(3)]
    smap = simplex(pts)
    for i in range(3):
        t = np.zeros(3)
        t[i] = 1.0
        assert np.allclose(smap(t).z, pts[i].z, atol=1e-8)
    bary = smap(np.full(3, 1.0 / 3.0))
    assert np.allclose(bary.z, smap.apex.z, atol=1e-10)
    pair = simplex(pts[:2])
    assert np.allclose(pair(np.array([0.5, 0.5])).z,
                       geodesic(pts[0], pts[1], 0.5).z, atol=1e-10)


def test_simplex_face_compatibility():
    gen = rng()
    n = 2
    pts = [random_point(n, gen, radius=0.6) for _ in range(3)]
    smap = simplex(pts)
    edge = simplex(pts[:2])
    for _ in range(100):
        a = gen.uniform(0, 1)
        t3 = np.array([1.0 - a, a, 0.0])
        t2 = np.array([1.0 - a, a])
        assert np.allclose(smap(t3).z, edge(t2).z, atol=1e-8)


def test_simplex_equivariance():
    gen = rng()
    n = 2
    pts = [random_point(n, gen, radius=0.5) for _ in range(3)]
    g = random_isometry(n, gen, scale=0.6)
    smap = simplex(pts)
    moved = simplex([act(g, p) for p in pts])
    for _ in range(20):
        t = gen.dirichlet(np.ones(3))
        assert np.allclose(act(g, smap(t)).z, moved(t).z, atol=1e-8)


def test_center_nonconvergence_raises_solver_error():
    from highertorsion.errors import SolverError

    gen = rng()
    pts = [random_point(2, gen, radius=0.6) for _ in range(3)]
    with pytest.raises(SolverError) as err:
        center(pts, tol=1e-15, max_iter=1)
    assert err.value.residual is not None
    assert err.value.residual > 0


def test_substitute_rank_mismatch():
    from highertorsion.errors import RankMismatchError
    from highertorsion.sympoly import GradedPoly, substitute

    p = GradedPoly(2, 4, {(1, 1): 1})
    with pytest.raises(RankMismatchError):
        substitute(p, [[1, 0]])  # one image for two variables
    with pytest.raises(RankMismatchError):
        substitute(p, [[1, 0], [1]])  # inconsistent image lengths


def test_simplex_rejects_bad_barycentric():
    gen = rng()
    pts = [random_point(2, gen) for _ in range(3)]
    smap = simplex(pts)
    with pytest.raises(GeometryInputError):
        smap(np.array([0.5, 0.5]))
    with pytest.raises(GeometryInputError):
        smap(np.array([0.7, 0.6, -0.3]))


def test_backend_consistency_if_compiled():
    from highertorsion.hyperbolic.backend import available_backends
    from highertorsion.hyperbolic.core import _chambers, _gauss_nodes

    backends = available_backends()
    if "compiled" not in backends:
        pytest.skip("compiled kernels not built")
    pure, comp = backends["pure"], backends["compiled"]
    gen = rng()
    n = 2
    for _ in range(10):
        x = random_point(n, gen).z
        y = random_point(n, gen).z
        assert comp.dist(x, y) == pytest.approx(pure.dist(x, y), abs=1e-13)
        t = gen.uniform(0, 1)
        assert np.allclose(comp.geodesic(x, y, t), pure.geodesic(x, y, t),
                           atol=1e-13)
        g = random_isometry(n, gen, scale=0.8).matrix
        assert np.allclose(comp.act(g, x), pure.act(g, x), atol=1e-13)
        u = gen.standard_normal(n) + 1j * gen.standard_normal(n)
        w = gen.standard_normal(n) + 1j * gen.standard_normal(n)
        assert comp.omega_value(x, u, w) == pytest.approx(
            pure.omega_value(x, u, w), rel=1e-12, abs=1e-12)

    # antisymmetric matrices: pfaffians agree for sizes 2, 4, 6
    for size in (2, 4, 6):
        A = gen.standard_normal((size, size))
        B = A - A.T
        assert comp.pfaffian(B) == pytest.approx(pure.pfaffian(B), rel=1e-10)

    # simplex evaluation and full quadrature agree
    pts = [random_point(n, gen, radius=0.5) for _ in range(3)]
    smap = simplex(pts)
    for _ in range(25):
        t = gen.dirichlet(np.ones(3))
        a = comp.sigma_eval(smap.vertices, smap.centers, smap.charts,
                            smap.inv_charts, t)
        b = pure.sigma_eval(smap.vertices, smap.centers, smap.charts,
                            smap.inv_charts, t)
        assert np.allclose(a, b, atol=1e-13)
    nodes, weights = _gauss_nodes(4)
    chambers = _chambers(2)
    va = comp.cocycle_integral(smap.vertices, smap.centers, smap.charts,
                               smap.inv_charts, chambers, nodes, weights,
                               1, 1e-5)
    vb = pure.cocycle_integral(smap.vertices, smap.centers, smap.charts,
                               smap.inv_charts, chambers, nodes, weights,
                               1, 1e-5)
    assert va == pytest.approx(vb, rel=1e-10, abs=1e-14)

    # form power two: 4-simplex quadrature (4x4 pfaffians) also agrees
    pts4 = [random_point(n, gen, radius=0.4) for _ in range(5)]
    smap4 = simplex(pts4)
    nodes1, weights1 = _gauss_nodes(1)
    chambers4 = _chambers(4)
    qa = comp.cocycle_integral(smap4.vertices, smap4.centers, smap4.charts,
                               smap4.inv_charts, chambers4, nodes1, weights1,
                               2, 1e-5)
    qb = pure.cocycle_integral(smap4.vertices, smap4.centers, smap4.charts,
                               smap4.inv_charts, chambers4, nodes1, weights1,
                               2, 1e-5)
    assert qa == pytest.approx(qb, rel=1e-10, abs=1e-14)
