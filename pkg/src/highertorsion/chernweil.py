"""Characteristic-class expressions and the Chern-Weil translation.

A symmetric polynomial in the normalized weight variables, read as a
polynomial in Chern roots, becomes a polynomial in the Chern-class
generators c1..cn via the elementary-symmetric rewriting; a polynomial
degree j lands in cohomological degree 2j.  The degree-2k power sum over
k! is the degree-2k Chern character component, which is how the closed
form of the sphere-bundle torsion class is assembled.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Dict, Mapping, Optional, Union

from .errors import RankMismatchError
from .sympoly import (
    GradedPoly,
    SymExpr,
    format_terms,
    newton_rewrite,
    power_sum,
)
from .zetapoly import ZetaPoly


def sphere_class_coefficient(j: int) -> Fraction:
    """d_j = (4j+1)! / (2^(4j) (2j)!), the closed-form coefficient of
    z_{2j+1} ch^[4j]; equals (2j)! times the generating-series coefficient."""
    if j < 1:
        raise ValueError(f"j must be >= 1, got {j}")
    return Fraction(factorial(4 * j + 1), 2 ** (4 * j) * factorial(2 * j))


class CharClassExpr:
    """Polynomial in c1..cn with ZetaPoly coefficients, deg c_k = 2k.

    The c-basis dictionary is the canonical form used for equality; an
    optional presentation as a linear combination of Chern character
    components (keyed by cohomological degree) is carried when known.
    """

    __slots__ = ("rank", "_terms", "_ch")

    def __init__(self, rank: int, terms: Union[None, Mapping] = None,
                 ch_components: Optional[Mapping[int, ZetaPoly]] = None):
        if rank < 1:
            raise ValueError(f"rank must be positive, got {rank}")
        self.rank = rank
        data: dict = {}
        if terms:
            for exps, coeff in terms.items():
                exps = tuple(int(e) for e in exps)
                if len(exps) != rank:
                    raise RankMismatchError(len(exps), rank, "exponent length")
                if isinstance(coeff, (int, Fraction)):
                    coeff = ZetaPoly.rational(coeff)
                if coeff:
                    data[exps] = data.get(exps, ZetaPoly.zero()) + coeff
        self._terms = {e: c for e, c in data.items() if c}
        self._ch = dict(ch_components) if ch_components is not None else None

    @classmethod
    def from_sym_expr(cls, expr: SymExpr,
                      ch_components: Optional[Mapping[int, ZetaPoly]] = None
                      ) -> "CharClassExpr":
        return cls(expr.rank, dict(expr.items()), ch_components)

    def to_sym_expr(self) -> SymExpr:
        return SymExpr(self.rank, dict(self._terms))

    def items(self):
        return self._terms.items()

    def coefficient(self, exps) -> ZetaPoly:
        return self._terms.get(tuple(exps), ZetaPoly.zero())

    def is_zero(self) -> bool:
        return not self._terms

    @staticmethod
    def monomial_degree(exps) -> int:
        """Cohomological degree 2 * sum k * e_k of a c-monomial."""
        return 2 * sum((k + 1) * e for k, e in enumerate(exps))

    def cohomological_degrees(self):
        return sorted({self.monomial_degree(e) for e in self._terms})

    def component(self, degree: int) -> "CharClassExpr":
        """Part of the expression in one cohomological degree."""
        terms = {e: c for e, c in self._terms.items()
                 if self.monomial_degree(e) == degree}
        out = CharClassExpr(self.rank, terms)
        return out

    def components(self) -> Dict[int, "CharClassExpr"]:
        return {d: self.component(d) for d in self.cohomological_degrees()}

    def ch_presentation(self) -> Optional[Dict[int, ZetaPoly]]:
        """Coefficients of Chern character components by cohomological
        degree, when the expression is such a linear combination."""
        return dict(self._ch) if self._ch is not None else None

    def __add__(self, other):
        if not isinstance(other, CharClassExpr):
            return NotImplemented
        if self.rank != other.rank:
            raise RankMismatchError(self.rank, other.rank)
        data = dict(self._terms)
        for e, c in other._terms.items():
            s = data.get(e)
            s = c if s is None else s + c
            if s:
                data[e] = s
            else:
                del data[e]
        ch = None
        if self._ch is not None and other._ch is not None:
            ch = dict(self._ch)
            for d, c in other._ch.items():
                s = ch.get(d, ZetaPoly.zero()) + c
                if s:
                    ch[d] = s
                else:
                    ch.pop(d, None)
        out = CharClassExpr(self.rank)
        out._terms = data
        out._ch = ch
        return out

    def scale(self, value) -> "CharClassExpr":
        c = value if isinstance(value, ZetaPoly) else ZetaPoly.rational(value)
        out = CharClassExpr(self.rank)
        out._terms = {} if not c else {
            e: p for e, p in ((e, t * c) for e, t in self._terms.items()) if p}
        out._ch = None if self._ch is None else (
            {} if not c else {d: t * c for d, t in self._ch.items()})
        return out

    def __eq__(self, other):
        if not isinstance(other, CharClassExpr):
            return NotImplemented
        return self.rank == other.rank and self._terms == other._terms

    def __hash__(self):
        return hash((self.rank, frozenset(self._terms.items())))

    def __str__(self):
        return format_terms(self._terms, "c") or "0"

    def __repr__(self):
        return f"CharClassExpr(rank={self.rank}, {self})"


def cw_map(p: GradedPoly, n: int) -> CharClassExpr:
    """Chern-Weil translation of a symmetric polynomial jet.

    The variables are read as Chern roots, so the degree-j part lands in
    cohomological degree 2j and the result is expressed in c1..cn.  When
    every homogeneous part of p is a scalar multiple of a power sum, the
    image is also recorded as a combination of Chern character components
    (the degree-d power sum equals d! times ch^[2d]).
    """
    if p.rank != n:
        raise RankMismatchError(p.rank, n)
    expr = newton_rewrite(p, n)  # raises NotSymmetricError when violated
    ch = _power_sum_presentation(p)
    return CharClassExpr.from_sym_expr(expr, ch)


def _power_sum_presentation(p: GradedPoly):
    ch: Dict[int, ZetaPoly] = {}
    for d in p.degrees():
        if d == 0:
            return None
        part = p.degree_component(d)
        lead = [0] * p.rank
        lead[0] = d
        scalar = part.coefficient(tuple(lead))
        if not scalar or part != power_sum(d, p.rank, p.max_degree).scale(scalar):
            return None
        ch[2 * d] = scalar * Fraction(factorial(d))
    return ch


def ch_from_chern(n: int, k: int) -> CharClassExpr:
    """Chern character component ch^[2k] = p_k(roots)/k! in c1..cn."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    expr = newton_rewrite(power_sum(k, n, k), n).scale(Fraction(1, factorial(k)))
    return CharClassExpr.from_sym_expr(expr, {2 * k: ZetaPoly.one()})


def sphere_bundle_torsion_class(n: int, max_deg: int = 8) -> CharClassExpr:
    """Closed form of the torsion class of the unit sphere bundle of a
    rank-n hermitean bundle: sum of d_j z_{2j+1} ch^[4j], expressed in the
    Chern classes and truncated at cohomological degree 2*max_deg."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    out = CharClassExpr(n, ch_components={})
    j = 1
    while 2 * j <= max_deg:
        coeff = ZetaPoly.zeta(2 * j + 1, coeff=sphere_class_coefficient(j))
        component = ch_from_chern(n, 2 * j).scale(coeff)
        out = out + component
        j += 1
    return out
