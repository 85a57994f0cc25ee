"""Exact coefficient ring: rationals times formal odd zeta symbols.

Coefficients throughout the exact pipeline live in the commutative ring
Q[z3, z5, z7, ...], where the symbol ``z_k`` (k odd, k >= 3) stands for
the value of the Riemann zeta function at k.  Keeping the zeta values
formal makes every identity an exact equality of rational data; numbers
only appear when :func:`zeta_eval` / :func:`zp_eval` substitute certified
high-precision values at output time.
"""

from __future__ import annotations

import math
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Tuple, Union

RationalLike = Union[int, Fraction]

# A monomial in the zeta symbols: sorted tuple of (symbol index, exponent),
# with odd symbol indices >= 3 and positive exponents.  () is the constant.
ZetaKey = Tuple[Tuple[int, int], ...]

ONE_KEY: ZetaKey = ()


def _canonical_key(key) -> ZetaKey:
    items = {}
    for sym, exp in key:
        sym = int(sym)
        exp = int(exp)
        if sym < 3 or sym % 2 == 0:
            raise ValueError(f"zeta symbol index must be odd and >= 3, got {sym}")
        if exp < 0:
            raise ValueError(f"negative exponent {exp} for z{sym}")
        if exp:
            items[sym] = items.get(sym, 0) + exp
    return tuple(sorted(items.items()))


def _mul_keys(a: ZetaKey, b: ZetaKey) -> ZetaKey:
    if not a:
        return b
    if not b:
        return a
    merged = dict(a)
    for sym, exp in b:
        merged[sym] = merged.get(sym, 0) + exp
    return tuple(sorted(merged.items()))


def format_zeta_key(key: ZetaKey) -> str:
    """Render a zeta monomial, e.g. ``z3^2*z5``; the constant is ``1``."""
    if not key:
        return "1"
    parts = []
    for sym, exp in key:
        parts.append(f"z{sym}" if exp == 1 else f"z{sym}^{exp}")
    return "*".join(parts)


def parse_zeta_key(text: str) -> ZetaKey:
    """Inverse of :func:`format_zeta_key` (used for structured round trips)."""
    text = text.strip()
    if text == "1":
        return ONE_KEY
    items = []
    for factor in text.split("*"):
        factor = factor.strip()
        if not factor.startswith("z"):
            raise ValueError(f"bad zeta monomial factor: {factor!r}")
        if "^" in factor:
            base, exp = factor[1:].split("^", 1)
            items.append((int(base), int(exp)))
        else:
            items.append((int(factor[1:]), 1))
    return _canonical_key(items)


class ZetaPoly:
    """Element of Q[z3, z5, ...], stored sparsely with no zero terms.

    Immutable; all arithmetic returns new instances.  Equality and hashing
    are exact (term-by-term over ``Fraction`` coefficients).
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[None, Mapping, Iterable] = None):
        data: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, coeff in items:
                c = coeff if isinstance(coeff, Fraction) else Fraction(coeff)
                if not c:
                    continue
                k = _canonical_key(key)
                c = data.get(k, 0) + c
                if c:
                    data[k] = c
                else:
                    del data[k]
        self._terms = data

    # -- constructors ------------------------------------------------

    @classmethod
    def rational(cls, value: RationalLike) -> "ZetaPoly":
        p = cls.__new__(cls)
        v = Fraction(value)
        p._terms = {ONE_KEY: v} if v else {}
        return p

    @classmethod
    def zero(cls) -> "ZetaPoly":
        p = cls.__new__(cls)
        p._terms = {}
        return p

    @classmethod
    def one(cls) -> "ZetaPoly":
        return cls.rational(1)

    @classmethod
    def zeta(cls, k: int, power: int = 1, coeff: RationalLike = 1) -> "ZetaPoly":
        """coeff * z_k^power with k odd, k >= 3."""
        return cls({((k, power),): Fraction(coeff)})

    # -- structure ---------------------------------------------------

    def items(self):
        return self._terms.items()

    def coefficient(self, key) -> Fraction:
        return self._terms.get(_canonical_key(key), Fraction(0))

    @property
    def constant(self) -> Fraction:
        return self._terms.get(ONE_KEY, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        return not self._terms or set(self._terms) == {ONE_KEY}

    def symbols(self):
        """Sorted odd indices of all zeta symbols that occur."""
        out = set()
        for key in self._terms:
            for sym, _ in key:
                out.add(sym)
        return sorted(out)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # -- ring operations ----------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, ZetaPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return ZetaPoly.rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        data = dict(self._terms)
        for k, c in o._terms.items():
            s = data.get(k, 0) + c
            if s:
                data[k] = s
            else:
                del data[k]
        out = ZetaPoly.__new__(ZetaPoly)
        out._terms = data
        return out

    __radd__ = __add__

    def __neg__(self):
        out = ZetaPoly.__new__(ZetaPoly)
        out._terms = {k: -c for k, c in self._terms.items()}
        return out

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        data: dict = {}
        for ka, ca in self._terms.items():
            for kb, cb in o._terms.items():
                k = _mul_keys(ka, kb)
                s = data.get(k, 0) + ca * cb
                if s:
                    data[k] = s
                else:
                    del data[k]
        out = ZetaPoly.__new__(ZetaPoly)
        out._terms = data
        return out

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # -- output -------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for key in sorted(self._terms):
            c = self._terms[key]
            mono = format_zeta_key(key)
            if mono == "1":
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        out = " + ".join(parts)
        return out.replace("+ -", "- ")

    def __repr__(self):
        return f"ZetaPoly({self})"

    def eval_fraction(self, guard_digits: int) -> Fraction:
        """Substitute rational zeta approximations good to ``guard_digits``."""
        total = Fraction(0)
        for key, coeff in self._terms.items():
            value = coeff
            for sym, exp in key:
                value *= zeta_fraction(sym, guard_digits) ** exp
            total += value
        return total


def zp_add(a: ZetaPoly, b: ZetaPoly) -> ZetaPoly:
    return a + b


def zp_mul(a: ZetaPoly, b: ZetaPoly) -> ZetaPoly:
    return a * b


# ---------------------------------------------------------------------------
# Numeric evaluation of zeta at odd integers >= 3.
#
# Scheme: Borwein's alternating-series acceleration for the Dirichlet eta
# function, run in exact rational arithmetic.  With n acceleration terms the
# truncation error for real integer s >= 2 is bounded by
#
#     |error| <= 3 / ((3 + sqrt(8))^n * (1 - 2^(1-s)))  <=  6 * (3+sqrt(8))^-n,
#
# i.e. roughly 0.7656 decimal digits per term; we take n with a two-term
# safety margin.  Since s is an integer, every partial sum is an exact
# Fraction, so the bound above is the entire error.
# ---------------------------------------------------------------------------

_LOG10_RATE = math.log10(3 + math.sqrt(8))


@lru_cache(maxsize=None)
def _borwein_d(n: int) -> tuple:
    terms = []
    acc = Fraction(0)
    for i in range(n + 1):
        acc += Fraction(math.factorial(n + i - 1) * 4**i,
                        math.factorial(n - i) * math.factorial(2 * i))
        terms.append(n * acc)
    return tuple(terms)


@lru_cache(maxsize=None)
def zeta_fraction(k: int, digits: int) -> Fraction:
    """Rational approximation of zeta(k) with |error| <= 10**-digits."""
    if not isinstance(k, int) or k < 3 or k % 2 == 0:
        raise ValueError(f"zeta argument must be an odd integer >= 3, got {k!r}")
    if digits < 1:
        raise ValueError(f"digits must be positive, got {digits}")
    n = int((digits + 1) / _LOG10_RATE) + 3
    d = _borwein_d(n)
    s = Fraction(0)
    for i in range(n):
        term = Fraction(d[i] - d[n], (i + 1) ** k)
        s += -term if i % 2 else term
    return -s / (d[n] * (1 - Fraction(1, 2 ** (k - 1))))


def _round_significant(value: Fraction, digits: int) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = digits
        return +(Decimal(value.numerator) / Decimal(value.denominator))


def zeta_eval(k: int, digits: int) -> Decimal:
    """zeta(k) for odd k >= 3, rounded to ``digits`` significant digits."""
    if not isinstance(k, int) or k % 2 == 0 or k < 3:
        raise ValueError(
            f"zeta_eval is defined for odd integers >= 3 only, got {k!r}")
    if not isinstance(digits, int) or digits < 1:
        raise ValueError(f"digits must be a positive integer, got {digits!r}")
    return _round_significant(zeta_fraction(k, digits + 8), digits)


def zp_eval(p: ZetaPoly, digits: int) -> Decimal:
    """Numeric value of a ZetaPoly to ``digits`` significant digits.

    The rational parts stay exact; each zeta symbol is substituted by a
    certified rational approximation carrying ten guard digits, so the
    relative error of the result is below 10**(1 - digits).
    """
    if not isinstance(digits, int) or digits < 1:
        raise ValueError(f"digits must be a positive integer, got {digits!r}")
    return _round_significant(p.eval_fraction(digits + 10), digits)
