"""Graded multivariate polynomials in normalized weight variables.

A :class:`GradedPoly` is a jet: a sparse polynomial in v1..vr with
:class:`~highertorsion.zetapoly.ZetaPoly` coefficients, truncated at an
explicit ``max_degree``.  The variable ``v_l`` stands for a weight divided
by 4 pi^2, which is what keeps every stored coefficient rational times
zeta symbols.

The module also provides the symmetric-function tooling: power sums,
elementary symmetric polynomials, the symmetry check, and the rewriting of
a symmetric polynomial in the elementary basis (:func:`newton_rewrite`),
whose output is a :class:`SymExpr`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .errors import NotSymmetricError, RankMismatchError, TruncationError
from .zetapoly import ZetaPoly

Scalar = Union[int, Fraction, ZetaPoly]


def _as_zp(value: Scalar) -> ZetaPoly:
    if isinstance(value, ZetaPoly):
        return value
    return ZetaPoly.rational(value)


class GradedPoly:
    """Sparse polynomial in v1..v_rank, truncated above ``max_degree``."""

    __slots__ = ("rank", "max_degree", "_terms")

    def __init__(self, rank: int, max_degree: int,
                 terms: Union[None, Mapping, Iterable] = None):
        if rank < 1:
            raise ValueError(f"rank must be positive, got {rank}")
        if max_degree < 0:
            raise ValueError(f"max_degree must be nonnegative, got {max_degree}")
        self.rank = rank
        self.max_degree = max_degree
        data: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for exps, coeff in items:
                exps = tuple(int(e) for e in exps)
                if len(exps) != rank:
                    raise RankMismatchError(len(exps), rank, "exponent length")
                if any(e < 0 for e in exps):
                    raise ValueError(f"negative exponent in {exps}")
                if sum(exps) > max_degree:
                    continue
                c = _as_zp(coeff)
                if not c:
                    continue
                prev = data.get(exps)
                c = c if prev is None else prev + c
                if c:
                    data[exps] = c
                else:
                    del data[exps]
        self._terms = data

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, rank: int, max_degree: int) -> "GradedPoly":
        return cls(rank, max_degree)

    @classmethod
    def constant(cls, value: Scalar, rank: int, max_degree: int) -> "GradedPoly":
        return cls(rank, max_degree, {(0,) * rank: _as_zp(value)})

    @classmethod
    def variable(cls, i: int, rank: int, max_degree: int) -> "GradedPoly":
        """The variable v_i (1-based)."""
        if not 1 <= i <= rank:
            raise ValueError(f"variable index {i} out of range for rank {rank}")
        exps = [0] * rank
        exps[i - 1] = 1
        return cls(rank, max_degree, {tuple(exps): ZetaPoly.one()})

    @classmethod
    def linear_form(cls, coeffs: Sequence[int], max_degree: int) -> "GradedPoly":
        rank = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                exps = [0] * rank
                exps[i] = 1
                terms[tuple(exps)] = ZetaPoly.rational(c)
        return cls(rank, max_degree, terms)

    # -- structure -------------------------------------------------------

    def items(self):
        return self._terms.items()

    def coefficient(self, exps) -> ZetaPoly:
        return self._terms.get(tuple(exps), ZetaPoly.zero())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def degrees(self):
        return sorted({sum(e) for e in self._terms})

    def degree_component(self, d: int) -> "GradedPoly":
        out = GradedPoly.__new__(GradedPoly)
        out.rank = self.rank
        out.max_degree = self.max_degree
        out._terms = {e: c for e, c in self._terms.items() if sum(e) == d}
        return out

    # -- arithmetic -------------------------------------------------------

    def _check_rank(self, other: "GradedPoly"):
        if self.rank != other.rank:
            raise RankMismatchError(self.rank, other.rank)

    def __add__(self, other):
        if not isinstance(other, GradedPoly):
            return NotImplemented
        self._check_rank(other)
        max_degree = min(self.max_degree, other.max_degree)
        out = GradedPoly(self.rank, max_degree, self._terms)
        for e, c in other._terms.items():
            if sum(e) > max_degree:
                continue
            s = out._terms.get(e)
            s = c if s is None else s + c
            if s:
                out._terms[e] = s
            else:
                del out._terms[e]
        return out

    def __neg__(self):
        out = GradedPoly.__new__(GradedPoly)
        out.rank = self.rank
        out.max_degree = self.max_degree
        out._terms = {e: -c for e, c in self._terms.items()}
        return out

    def __sub__(self, other):
        if not isinstance(other, GradedPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, ZetaPoly)):
            return self.scale(other)
        if not isinstance(other, GradedPoly):
            return NotImplemented
        self._check_rank(other)
        max_degree = min(self.max_degree, other.max_degree)
        data: dict = {}
        for ea, ca in self._terms.items():
            da = sum(ea)
            for eb, cb in other._terms.items():
                if da + sum(eb) > max_degree:
                    continue
                e = tuple(x + y for x, y in zip(ea, eb))
                c = ca * cb
                s = data.get(e)
                s = c if s is None else s + c
                if s:
                    data[e] = s
                else:
                    del data[e]
        out = GradedPoly.__new__(GradedPoly)
        out.rank = self.rank
        out.max_degree = max_degree
        out._terms = data
        return out

    __rmul__ = __mul__

    def scale(self, value: Scalar) -> "GradedPoly":
        c = _as_zp(value)
        out = GradedPoly.__new__(GradedPoly)
        out.rank = self.rank
        out.max_degree = self.max_degree
        out._terms = {} if not c else {
            e: p for e, p in ((e, t * c) for e, t in self._terms.items()) if p}
        return out

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = GradedPoly.constant(1, self.rank, self.max_degree)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, GradedPoly):
            return NotImplemented
        return self.rank == other.rank and self._terms == other._terms

    def __hash__(self):
        return hash((self.rank, frozenset(self._terms.items())))

    # -- output ------------------------------------------------------------

    def __str__(self):
        return format_terms(self._terms, "v") or "0"

    def __repr__(self):
        return f"GradedPoly(rank={self.rank}, max_degree={self.max_degree}, {self})"


def format_monomial(exps, varname: str) -> str:
    parts = []
    for i, e in enumerate(exps, start=1):
        if e == 1:
            parts.append(f"{varname}{i}")
        elif e:
            parts.append(f"{varname}{i}^{e}")
    return "*".join(parts)


def format_terms(terms: Mapping, varname: str) -> str:
    parts = []
    for exps in sorted(terms, key=lambda e: (sum(e), e)):
        coeff = terms[exps]
        mono = format_monomial(exps, varname)
        cs = str(coeff)
        if len(coeff) > 1:
            cs = f"({cs})"
        parts.append(f"{cs} * {mono}" if mono else cs)
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# Symmetric function tooling
# ---------------------------------------------------------------------------

def power_sum(j: int, rank: int, max_degree: int) -> GradedPoly:
    """p_j = v1^j + ... + v_rank^j."""
    if j < 1:
        raise ValueError(f"power sum index must be positive, got {j}")
    if j > max_degree:
        raise TruncationError(
            f"power sum degree {j} exceeds truncation order {max_degree}")
    terms = {}
    for i in range(rank):
        e = [0] * rank
        e[i] = j
        terms[tuple(e)] = ZetaPoly.one()
    return GradedPoly(rank, max_degree, terms)


def elementary(k: int, rank: int, max_degree: int) -> GradedPoly:
    """Elementary symmetric polynomial e_k in rank variables (e_0 = 1)."""
    from itertools import combinations

    if k < 0 or k > rank:
        raise ValueError(f"elementary index {k} out of range for rank {rank}")
    if k > max_degree:
        raise TruncationError(
            f"elementary degree {k} exceeds truncation order {max_degree}")
    terms = {}
    for subset in combinations(range(rank), k):
        e = [0] * rank
        for i in subset:
            e[i] = 1
        terms[tuple(e)] = ZetaPoly.one()
    return GradedPoly(rank, max_degree, terms)


def _violating_transposition(p: GradedPoly):
    # Adjacent transpositions generate the symmetric group, so checking
    # them suffices and any hit names a concrete violating swap.
    for i in range(p.rank - 1):
        for exps, coeff in p.items():
            swapped = list(exps)
            swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
            if p.coefficient(tuple(swapped)) != coeff:
                return (i + 1, i + 2)
    return None


def is_symmetric(p: GradedPoly) -> bool:
    return _violating_transposition(p) is None


def truncate(p: GradedPoly, d: int) -> GradedPoly:
    """Drop all monomials of total degree above d."""
    out = GradedPoly.__new__(GradedPoly)
    out.rank = p.rank
    out.max_degree = min(p.max_degree, d)
    out._terms = {e: c for e, c in p.items() if sum(e) <= d}
    return out


def substitute(p: GradedPoly, images: Sequence[Sequence[int]]) -> GradedPoly:
    """Substitute integer linear forms for the variables of p.

    ``images[i]`` lists the coefficients of the image of v_{i+1} over the
    target variables w1..w_s; all rows must have equal length s.  This is
    the pull-back along the torus homomorphism with matrix ``images``.
    """
    if len(images) != p.rank:
        raise RankMismatchError(len(images), p.rank, "images count")
    lengths = {len(row) for row in images}
    if len(lengths) > 1:
        raise RankMismatchError(min(lengths), max(lengths), "image length")
    new_rank = lengths.pop() if lengths else 0
    if new_rank < 1:
        raise ValueError("images must target at least one variable")
    forms = [GradedPoly.linear_form([int(c) for c in row], p.max_degree)
             for row in images]
    out = GradedPoly.zero(new_rank, p.max_degree)
    cache: dict = {}
    for exps, coeff in p.items():
        term = GradedPoly.constant(coeff, new_rank, p.max_degree)
        for i, e in enumerate(exps):
            if e:
                key = (i, e)
                if key not in cache:
                    cache[key] = forms[i] ** e
                term = term * cache[key]
        out = out + term
    return out


class SymExpr:
    """Polynomial in the elementary generators e1..e_n with deg(e_k) = k."""

    __slots__ = ("rank", "_terms")

    def __init__(self, rank: int, terms: Union[None, Mapping, Iterable] = None):
        if rank < 1:
            raise ValueError(f"rank must be positive, got {rank}")
        self.rank = rank
        data: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for exps, coeff in items:
                exps = tuple(int(e) for e in exps)
                if len(exps) != rank:
                    raise RankMismatchError(len(exps), rank, "exponent length")
                c = _as_zp(coeff)
                if not c:
                    continue
                prev = data.get(exps)
                c = c if prev is None else prev + c
                if c:
                    data[exps] = c
                else:
                    del data[exps]
        self._terms = data

    def items(self):
        return self._terms.items()

    def coefficient(self, exps) -> ZetaPoly:
        return self._terms.get(tuple(exps), ZetaPoly.zero())

    def is_zero(self) -> bool:
        return not self._terms

    def weighted_degrees(self):
        return sorted({sum((k + 1) * e for k, e in enumerate(exps))
                       for exps in self._terms})

    def __add__(self, other):
        if not isinstance(other, SymExpr):
            return NotImplemented
        if self.rank != other.rank:
            raise RankMismatchError(self.rank, other.rank)
        out = SymExpr(self.rank, self._terms)
        for e, c in other._terms.items():
            s = out._terms.get(e)
            s = c if s is None else s + c
            if s:
                out._terms[e] = s
            else:
                del out._terms[e]
        return out

    def scale(self, value: Scalar) -> "SymExpr":
        c = _as_zp(value)
        out = SymExpr.__new__(SymExpr)
        out.rank = self.rank
        out._terms = {} if not c else {
            e: p for e, p in ((e, t * c) for e, t in self._terms.items()) if p}
        return out

    def __eq__(self, other):
        if not isinstance(other, SymExpr):
            return NotImplemented
        return self.rank == other.rank and self._terms == other._terms

    def __hash__(self):
        return hash((self.rank, frozenset(self._terms.items())))

    def expand(self, max_degree: int) -> GradedPoly:
        """Substitute e_k -> elementary symmetric polynomial, as a jet."""
        out = GradedPoly.zero(self.rank, max_degree)
        for exps, coeff in self._terms.items():
            term = GradedPoly.constant(coeff, self.rank, max_degree)
            for k, e in enumerate(exps, start=1):
                for _ in range(e):
                    term = term * elementary(k, self.rank, max_degree)
            out = out + term
        return out

    def __str__(self):
        return format_terms(self._terms, "e") or "0"

    def __repr__(self):
        return f"SymExpr(rank={self.rank}, {self})"


def newton_rewrite(p: GradedPoly, n: int) -> SymExpr:
    """Rewrite a symmetric polynomial in the elementary basis e1..e_n.

    Classical leading-term elimination: the lex-leading exponent of a
    symmetric polynomial is a partition lambda, and the elementary monomial
    e1^(l1-l2) e2^(l2-l3) ... has the same leading term; subtracting its
    expansion strictly lowers the leading term, so the loop terminates with
    an exact representation (the final remainder is zero, which certifies
    that the output expands back to p).
    """
    if p.rank != n:
        raise RankMismatchError(p.rank, n)
    bad = _violating_transposition(p)
    if bad is not None:
        raise NotSymmetricError(bad)
    result = SymExpr(n)
    remainder = p
    while not remainder.is_zero():
        lead = max(remainder._terms)
        coeff = remainder._terms[lead]
        if list(lead) != sorted(lead, reverse=True):
            # cannot happen for a symmetric polynomial
            raise NotSymmetricError((1, 2))
        mu = [lead[k] - lead[k + 1] for k in range(n - 1)] + [lead[n - 1]]
        e_mono = SymExpr(n, {tuple(mu): coeff})
        result = result + e_mono
        remainder = remainder - e_mono.expand(p.max_degree)
    return result
