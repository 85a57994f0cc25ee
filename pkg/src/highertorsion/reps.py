"""Weight-multiset model of unitary representations of a rank-r torus.

A representation is just its multiset of weights: a map from integer
vectors in Z^r to positive multiplicities.  That is all the torsion
series consumes, so nothing else of the group is modeled; Weyl
invariance is checked downstream, not enforced here.
"""

from __future__ import annotations

from math import comb
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

from .errors import RankMismatchError

Weight = Tuple[int, ...]


class Representation:
    """Finite weight multiset of a rank-r torus representation."""

    __slots__ = ("rank", "_weights")

    def __init__(self, rank: int,
                 weights: Union[Mapping[Sequence[int], int],
                                Iterable[Tuple[Sequence[int], int]]]):
        if rank < 1:
            raise ValueError(f"rank must be positive, got {rank}")
        self.rank = rank
        data: Dict[Weight, int] = {}
        items = weights.items() if isinstance(weights, Mapping) else weights
        for w, m in items:
            w = tuple(int(x) for x in w)
            if len(w) != rank:
                raise RankMismatchError(len(w), rank, "weight length")
            m = int(m)
            if m < 1:
                raise ValueError(f"multiplicity must be >= 1, got {m} for {w}")
            data[w] = data.get(w, 0) + m
        self._weights = data

    @property
    def weights(self) -> Dict[Weight, int]:
        return dict(self._weights)

    @property
    def dim(self) -> int:
        return sum(self._weights.values())

    def items(self):
        return self._weights.items()

    def multiplicity(self, w: Sequence[int]) -> int:
        return self._weights.get(tuple(int(x) for x in w), 0)

    def sorted_weights(self):
        return sorted(self._weights)

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        return self.rank == other.rank and self._weights == other._weights

    def __hash__(self):
        return hash((self.rank, frozenset(self._weights.items())))

    def __repr__(self):
        inner = ", ".join(f"{w}:{m}" for w, m in sorted(self._weights.items()))
        return f"Representation(rank={self.rank}, {{{inner}}})"


def std_rep(n: int) -> Representation:
    """Standard representation of U(n) restricted to its diagonal torus:
    weights e_1..e_n, each with multiplicity one."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    weights = {}
    for i in range(n):
        w = [0] * n
        w[i] = 1
        weights[tuple(w)] = 1
    return Representation(n, weights)


def _check_ranks(a: Representation, b: Representation):
    if a.rank != b.rank:
        raise RankMismatchError(a.rank, b.rank)


def direct_sum(a: Representation, b: Representation) -> Representation:
    _check_ranks(a, b)
    data = dict(a._weights)
    for w, m in b.items():
        data[w] = data.get(w, 0) + m
    return Representation(a.rank, data)


def tensor(a: Representation, b: Representation) -> Representation:
    _check_ranks(a, b)
    data: Dict[Weight, int] = {}
    for wa, ma in a.items():
        for wb, mb in b.items():
            w = tuple(x + y for x, y in zip(wa, wb))
            data[w] = data.get(w, 0) + ma * mb
    return Representation(a.rank, data)


def dual(a: Representation) -> Representation:
    return Representation(a.rank,
                          {tuple(-x for x in w): m for w, m in a.items()})


def sym_power(a: Representation, k: int) -> Representation:
    """k-th symmetric power: multisets of k weights with repetition.

    Iterates over distinct weights with their multiplicities, never
    expanding to repeated entries: choosing c copies of a weight of
    multiplicity m contributes C(m + c - 1, c) basis monomials.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return _graded_power(a, k, lambda m, c: comb(m + c - 1, c), bounded=False)


def ext_power(a: Representation, k: int) -> Representation:
    """k-th exterior power: multisets of k weights without repetition."""
    if k < 0 or k > a.dim:
        raise ValueError(f"k must satisfy 0 <= k <= dim = {a.dim}, got {k}")
    return _graded_power(a, k, comb, bounded=True)


def _graded_power(a, k, count, bounded):
    items = sorted(a.items())
    data: Dict[Weight, int] = {}
    zero = (0,) * a.rank

    def distribute(idx, remaining, weight, factor):
        if remaining == 0:
            data[weight] = data.get(weight, 0) + factor
            return
        if idx == len(items):
            return
        w, m = items[idx]
        cap = min(remaining, m) if bounded else remaining
        for c in range(cap + 1):
            distribute(idx + 1, remaining - c,
                       tuple(x + c * y for x, y in zip(weight, w)),
                       factor * count(m, c))

    distribute(0, k, zero, 1)
    data = {w: m for w, m in data.items() if m}
    if not data:
        raise ValueError(f"power {k} of representation is zero")
    return Representation(a.rank, data)


def has_zero_weight(a: Representation) -> bool:
    return (0,) * a.rank in a._weights


def restrict(a: Representation, matrix: Sequence[Sequence[int]]) -> Representation:
    """Pull back along a torus homomorphism: each weight w maps to
    matrix . w (matrix is r' x r integer), merging multiplicities."""
    rows = [tuple(int(x) for x in row) for row in matrix]
    if not rows:
        raise ValueError("restriction matrix must have at least one row")
    for row in rows:
        if len(row) != a.rank:
            raise RankMismatchError(len(row), a.rank, "matrix row length")
    data: Dict[Weight, int] = {}
    for w, m in a.items():
        img = tuple(sum(r[i] * w[i] for i in range(a.rank)) for r in rows)
        data[img] = data.get(img, 0) + m
    return Representation(len(rows), data)
