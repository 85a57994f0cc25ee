"""Evaluation in the truncated cohomology ring of complex projective space.

Classes live in Q[zeta-symbols][H] / (H^(n+1)) with deg H = 2.  The Chern
character of the tangent bundle has components (n+1)/p! H^p, which is what
the torsion class of the unit sphere bundle is evaluated against; the
nonvanishing report records which degree-4j components survive, and a
parametric proportionality model transports the answer to compact
quotients of complex hyperbolic space.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Dict, List, Mapping, Optional

from .chernweil import CharClassExpr, sphere_class_coefficient
from .errors import InvalidModelError
from .zetapoly import ZetaPoly


class CPnClass:
    """Element sum a_p H^p of the truncated ring, 0 <= p <= n."""

    __slots__ = ("n", "_coeffs")

    def __init__(self, n: int, coeffs: Optional[Mapping[int, ZetaPoly]] = None):
        if n < 1:
            raise ValueError(f"n must be >= 1, got {n}")
        self.n = n
        data: Dict[int, ZetaPoly] = {}
        if coeffs:
            for p, c in coeffs.items():
                p = int(p)
                if p < 0:
                    raise ValueError(f"negative H power {p}")
                if p > n:
                    continue  # H^(n+1) = 0
                if isinstance(c, (int, Fraction)):
                    c = ZetaPoly.rational(c)
                if c:
                    data[p] = data.get(p, ZetaPoly.zero()) + c
        self._coeffs = {p: c for p, c in data.items() if c}

    def coefficient(self, p: int) -> ZetaPoly:
        return self._coeffs.get(p, ZetaPoly.zero())

    def items(self):
        return sorted(self._coeffs.items())

    def is_zero(self) -> bool:
        return not self._coeffs

    def __add__(self, other):
        if not isinstance(other, CPnClass):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"ring mismatch: CP^{self.n} vs CP^{other.n}")
        data = dict(self._coeffs)
        for p, c in other._coeffs.items():
            s = data.get(p)
            s = c if s is None else s + c
            if s:
                data[p] = s
            else:
                del data[p]
        out = CPnClass(self.n)
        out._coeffs = data
        return out

    def __mul__(self, other):
        if not isinstance(other, CPnClass):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"ring mismatch: CP^{self.n} vs CP^{other.n}")
        data: Dict[int, ZetaPoly] = {}
        for pa, ca in self._coeffs.items():
            for pb, cb in other._coeffs.items():
                p = pa + pb
                if p > self.n:
                    continue
                c = ca * cb
                s = data.get(p)
                s = c if s is None else s + c
                if s:
                    data[p] = s
                else:
                    del data[p]
        out = CPnClass(self.n)
        out._coeffs = data
        return out

    def scale(self, value) -> "CPnClass":
        c = value if isinstance(value, ZetaPoly) else ZetaPoly.rational(value)
        out = CPnClass(self.n)
        out._coeffs = {} if not c else {
            p: q for p, q in ((p, t * c) for p, t in self._coeffs.items()) if q}
        return out

    def __pow__(self, k: int):
        out = CPnClass(self.n, {0: ZetaPoly.one()})
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, CPnClass):
            return NotImplemented
        return self.n == other.n and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.n, frozenset(self._coeffs.items())))

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for p, c in self.items():
            cs = str(c)
            if len(c) > 1:
                cs = f"({cs})"
            if p == 0:
                parts.append(cs)
            else:
                mono = "H" if p == 1 else f"H^{p}"
                parts.append(f"{cs} * {mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"CPnClass(n={self.n}, {self})"


def hyperplane(n: int) -> CPnClass:
    return CPnClass(n, {1: ZetaPoly.one()})


def tangent_chern_character(n: int) -> List[CPnClass]:
    """Components of ch(T CP^n) by half-degree p: entry p is the part in
    cohomological degree 2p, namely n for p = 0 and (n+1)/p! H^p above."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    out = [CPnClass(n, {0: ZetaPoly.rational(n)})]
    for p in range(1, n + 1):
        out.append(CPnClass(n, {p: ZetaPoly.rational(Fraction(n + 1, factorial(p)))}))
    return out


def tangent_chern_class(n: int) -> CPnClass:
    """Total Chern class of T CP^n: the truncated binomial (1+H)^(n+1)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return CPnClass(n, {p: ZetaPoly.rational(comb(n + 1, p))
                        for p in range(0, n + 1)})


def evaluate_char_class(expr: CharClassExpr, n: Optional[int] = None) -> CPnClass:
    """Evaluate a Chern-class expression at the Chern classes of T CP^n,
    i.e. substitute c_k -> C(n+1, k) H^k and truncate."""
    if n is None:
        n = expr.rank
    if expr.rank != n:
        raise ValueError(f"expression has rank {expr.rank}, expected {n}")
    total = tangent_chern_class(n)
    out = CPnClass(n)
    for exps, coeff in expr.items():
        term = CPnClass(n, {0: coeff})
        for k, e in enumerate(exps, start=1):
            if e:
                ck = CPnClass(n, {k: total.coefficient(k)})
                term = term * ck ** e
        out = out + term
    return out


def evaluate_torsion_class(n: int, max_deg: Optional[int] = None) -> CPnClass:
    """Torsion class of the unit sphere bundle of CP^n: substitute the
    tangent Chern character into the closed form, truncated at H^(n+1)
    and cohomological degree 2*max_deg."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if max_deg is None:
        max_deg = n if n % 2 == 0 else n + 1
    ch = tangent_chern_character(n)
    out = CPnClass(n)
    j = 1
    while 2 * j <= max_deg:
        if 2 * j <= n:
            coeff = ZetaPoly.zeta(2 * j + 1, coeff=sphere_class_coefficient(j))
            out = out + ch[2 * j].scale(coeff)
        j += 1
    return out


def nonvanishing_report(n: int) -> Dict[int, bool]:
    """Map cohomological degree 4j (1 <= j <= n) to whether the torsion
    class of the sphere bundle of CP^n is nonzero in that degree."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    cls = evaluate_torsion_class(n, max_deg=2 * n)
    return {4 * j: (2 * j <= n and not cls.coefficient(2 * j).is_zero())
            for j in range(1, n + 1)}


class DualityModel:
    """Proportionality model for a compact quotient of complex hyperbolic
    space: each tangent Chern character component of the quotient is a
    nonzero rational multiple kappa_p of the compact-dual value, with an
    optional overall sign flip.  Only nonvanishing is ever consumed, so the
    scales' values are free parameters; zero scales are rejected.
    """

    __slots__ = ("n", "kappa", "sign_flip")

    def __init__(self, n: int, kappa: Optional[Mapping[int, Fraction]] = None,
                 sign_flip: bool = False):
        if n < 1:
            raise ValueError(f"n must be >= 1, got {n}")
        self.n = n
        scales: Dict[int, Fraction] = {}
        for p in range(1, n + 1):
            value = Fraction(kappa[p]) if kappa and p in kappa else Fraction(1)
            if value == 0:
                raise InvalidModelError(
                    f"proportionality scale kappa_{p} must be nonzero")
            scales[p] = value
        self.kappa = scales
        self.sign_flip = bool(sign_flip)

    def scale(self, p: int) -> Fraction:
        s = self.kappa[p]
        return -s if self.sign_flip else s


def locally_symmetric_report(model: DualityModel,
                             max_deg: int) -> Dict[int, bool]:
    """Nonvanishing of the torsion classes of the sphere bundle over a
    compact quotient of CH^n, inferred degree by degree.

    Degrees divisible by four inherit nonvanishing from the compact dual
    through the nonzero proportionality scales; degrees congruent to
    2 mod 4 are reported as vanishing.  Keys are the even cohomological
    degrees 2..2*max_deg.
    """
    if max_deg < 1:
        raise ValueError(f"max_deg must be >= 1, got {max_deg}")
    compact = nonvanishing_report(model.n)
    out: Dict[int, bool] = {}
    for degree in range(2, 2 * max_deg + 1, 2):
        if degree % 4:
            out[degree] = False
        else:
            ok = compact.get(degree, False)
            if ok:
                # scale kappa_{degree/2} is nonzero by model validation
                assert model.scale(degree // 2) != 0
            out[degree] = ok
    return out
