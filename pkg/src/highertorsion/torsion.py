"""Torsion series of representation spheres.

The generating series

    Q(x) = sum_{j >= 1} (4j+1)! / (2^(4j) ((2j)!)^2) * z_{2j+1} * x^(2j)

is stored as a jet in the normalized variable x (a weight over 4 pi^2).
The torsion series of a representation without zero weight is the sum of
m_alpha * Q(<alpha, v>) over its weight multiset; the same data organized
by orbit type gives the equivariant Euler characteristic, one orbit class
per distinct weight, and reassembling Q over the orbit classes recovers
the torsion series exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import List, Sequence, Tuple

from .errors import FixedPointError
from .reps import Representation, has_zero_weight
from .sympoly import GradedPoly, substitute
from .zetapoly import ZetaPoly

DEFAULT_MAX_DEGREE = 16


def series_coefficient(j: int) -> Fraction:
    """Rational coefficient of z_{2j+1} x^(2j) in the generating series."""
    if j < 1:
        raise ValueError(f"j must be >= 1, got {j}")
    return Fraction(factorial(4 * j + 1),
                    2 ** (4 * j) * factorial(2 * j) ** 2)


def q_series(max_deg: int = DEFAULT_MAX_DEGREE) -> GradedPoly:
    """The generating series Q as a rank-1 jet of order max_deg."""
    if max_deg < 2:
        raise ValueError(f"max_deg must be >= 2, got {max_deg}")
    terms = {}
    j = 1
    while 2 * j <= max_deg:
        terms[(2 * j,)] = ZetaPoly.zeta(2 * j + 1, coeff=series_coefficient(j))
        j += 1
    return GradedPoly(1, max_deg, terms)


def torsion_series(rep: Representation,
                   max_deg: int = DEFAULT_MAX_DEGREE) -> GradedPoly:
    """sum over weights of m_alpha * Q(<alpha, v>), truncated at max_deg."""
    if has_zero_weight(rep):
        raise FixedPointError()
    q = q_series(max_deg)
    out = GradedPoly.zero(rep.rank, max_deg)
    for weight in rep.sorted_weights():
        m = rep.multiplicity(weight)
        contribution = substitute(q, [list(weight)])
        out = out + (contribution if m == 1 else contribution.scale(m))
    return out


def homogeneous_component(t: GradedPoly, d: int) -> GradedPoly:
    """Degree-d part of a torsion series (zero for odd d)."""
    if d > t.max_degree:
        raise ValueError(f"degree {d} exceeds truncation order {t.max_degree}")
    return t.degree_component(d)


def circle_torsion(r: int, max_deg: int = DEFAULT_MAX_DEGREE) -> GradedPoly:
    """Torsion series of the circle R/Z acting on R/(1/r)Z: the rank-1
    representation with the single weight (r)."""
    if r < 1:
        raise ValueError(f"r must be a positive integer, got {r}")
    return torsion_series(Representation(1, {(r,): 1}), max_deg)


@dataclass(frozen=True)
class OrbitClass:
    """One-dimensional orbit type contributed by a weight.

    The quotient of the corresponding weight-vector sphere by the torus is
    a complex projective space of dimension multiplicity - 1, whose Euler
    number equals the multiplicity; the stabilizer is the corank-1 subtorus
    cut out by the weight, reported through an integer basis of its lattice
    kernel.
    """

    weight: Tuple[int, ...]
    multiplicity: int
    quotient: str = field(init=False)
    euler_number: int = field(init=False)
    stabilizer_corank: int = field(init=False, default=1)
    stabilizer_kernel: Tuple[Tuple[int, ...], ...] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "quotient", f"CP^{self.multiplicity - 1}")
        object.__setattr__(self, "euler_number", self.multiplicity)
        object.__setattr__(self, "stabilizer_kernel",
                           integer_kernel_basis(self.weight))


def integer_kernel_basis(weight: Sequence[int]) -> Tuple[Tuple[int, ...], ...]:
    """Basis of the lattice kernel {x in Z^r : <weight, x> = 0}.

    Builds a unimodular U with weight . U = (g, 0, ..., 0); the last r-1
    columns of U span the kernel.
    """
    r = len(weight)
    if all(w == 0 for w in weight):
        raise ValueError("zero weight has no corank-1 kernel")
    v = [int(w) for w in weight]
    cols = [[1 if i == j else 0 for i in range(r)] for j in range(r)]
    for i in range(1, r):
        a, b = v[0], v[i]
        if b == 0:
            continue
        g, s, t = _xgcd(a, b)
        c0, ci = cols[0], cols[i]
        new0 = [s * x + t * y for x, y in zip(c0, ci)]
        newi = [-(b // g) * x + (a // g) * y for x, y in zip(c0, ci)]
        cols[0], cols[i] = new0, newi
        v[0], v[i] = g, 0
    return tuple(tuple(c) for c in cols[1:])


def _xgcd(a: int, b: int):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def equivariant_euler(rep: Representation) -> List[OrbitClass]:
    """Orbit classes of the equivariant Euler characteristic: one per
    distinct weight, carrying its multiplicity."""
    if has_zero_weight(rep):
        raise FixedPointError()
    return [OrbitClass(weight=w, multiplicity=m)
            for w, m in sorted(rep.items())]


def tT_of_orbit(orbit: OrbitClass,
                max_deg: int = DEFAULT_MAX_DEGREE) -> GradedPoly:
    """Q evaluated at the orbit's weight form (no multiplicity factor)."""
    return substitute(q_series(max_deg), [list(orbit.weight)])
