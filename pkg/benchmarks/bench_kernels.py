"""Benchmark: compiled vs pure kernels on the hot paths.

Usage::

    python benchmarks/bench_kernels.py [--n 2] [--order 6] [--repeat 5]

Times the primitive operations (distance, geodesic, projective action),
single simplex evaluations and the full cocycle quadrature, for every
available backend, and prints the speedup of the compiled kernels when
they are built.
"""

import argparse
import time

import numpy as np

from highertorsion.hyperbolic import CHPoint, random_isometry
from highertorsion.hyperbolic.backend import available_backends
from highertorsion.hyperbolic.core import SimplexMap, _chambers, _gauss_nodes, act


def time_call(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def build_inputs(n, seed=11):
    gen = np.random.default_rng(seed)
    elements = [random_isometry(n, gen, scale=0.25) for _ in range(3)]
    base = CHPoint.origin(n)
    pts = [act(g, base) for g in elements]
    smap = SimplexMap(pts, tol=1e-10)
    direction = gen.standard_normal(n) + 1j * gen.standard_normal(n)
    direction /= np.linalg.norm(direction)
    x = 0.3 * direction
    y = -0.45 * direction * 1j
    g = elements[0].matrix
    return smap, x, y, g


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=2)
    parser.add_argument("--order", type=int, default=6)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    backends = available_backends()
    smap, x, y, g = build_inputs(args.n)
    nodes, weights = _gauss_nodes(args.order)
    chambers = _chambers(smap.dimension)
    tsamples = np.random.default_rng(0).dirichlet(
        np.ones(smap.dimension + 1), size=200)

    rows = {}
    for name, kernels in backends.items():
        results = {}
        results["dist x10k"] = time_call(
            lambda: [kernels.dist(x, y) for _ in range(10_000)], args.repeat)
        results["geodesic x2k"] = time_call(
            lambda: [kernels.geodesic(x, y, 0.37) for _ in range(2_000)],
            args.repeat)
        results["act x10k"] = time_call(
            lambda: [kernels.act(g, x) for _ in range(10_000)], args.repeat)
        results["sigma_eval x200"] = time_call(
            lambda: [kernels.sigma_eval(smap.vertices, smap.centers,
                                        smap.charts, smap.inv_charts, t)
                     for t in tsamples], args.repeat)
        results[f"cocycle_integral (order {args.order})"] = time_call(
            lambda: kernels.cocycle_integral(
                smap.vertices, smap.centers, smap.charts, smap.inv_charts,
                chambers, nodes, weights, 1, 1e-5), args.repeat)
        rows[name] = results

    labels = list(next(iter(rows.values())))
    width = max(len(label) for label in labels)
    header = f"{'benchmark':<{width}}" + "".join(
        f"  {name:>12}" for name in rows)
    if len(rows) == 2:
        header += f"  {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for label in labels:
        line = f"{label:<{width}}"
        for name in rows:
            line += f"  {rows[name][label] * 1e3:>10.3f}ms"
        if len(rows) == 2:
            pure = rows["pure"][label]
            comp = rows["compiled"][label]
            line += f"  {pure / comp:>8.1f}x"
        print(line)
    if "compiled" not in rows:
        print("\ncompiled kernels not built; run "
              "`python setup.py build_ext --inplace` to compare")


if __name__ == "__main__":
    main()
