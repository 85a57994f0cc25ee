import random
from fractions import Fraction
from math import factorial

import pytest

from highertorsion.chernweil import (
    CharClassExpr,
    ch_from_chern,
    cw_map,
    sphere_bundle_torsion_class,
    sphere_class_coefficient,
)
from highertorsion.errors import NotSymmetricError
from highertorsion.reps import std_rep
from highertorsion.sympoly import GradedPoly, power_sum
from highertorsion.torsion import series_coefficient, torsion_series
from highertorsion.zetapoly import ZetaPoly


def test_cw_map_rank1_power_sum():
    out = cw_map(power_sum(2, 1, 4), 1)
    assert out == CharClassExpr(1, {(2,): 1})
    ch = out.ch_presentation()
    assert ch == {4: ZetaPoly.rational(2)}  # p_2 = 2! ch^[4]


def test_cw_map_newton_identity():
    for n in (2, 3, 5):
        out = cw_map(power_sum(2, n, 4), n)
        e1sq = [0] * n
        e1sq[0] = 2
        e2 = [0] * n
        e2[1] = 1
        assert out.coefficient(tuple(e1sq)) == ZetaPoly.one()
        assert out.coefficient(tuple(e2)) == ZetaPoly.rational(-2)


def test_cw_map_torsion_degree4_part():
    n = 3
    t = torsion_series(std_rep(n), 4)
    out = cw_map(t, n)
    comp = out.component(4)
    z3 = ZetaPoly.zeta(3, coeff=Fraction(15, 8))
    e1sq = (2, 0, 0)
    e2 = (0, 1, 0)
    assert comp.coefficient(e1sq) == z3
    assert comp.coefficient(e2) == z3 * (-2)


def test_cw_map_rejects_asymmetric():
    with pytest.raises(NotSymmetricError):
        cw_map(GradedPoly(2, 4, {(1, 0): 1}), 2)


def test_cw_map_linear_and_degree_doubling():
    n = 2
    a = power_sum(2, n, 6)
    b = power_sum(3, n, 6).scale(ZetaPoly.zeta(3))
    combined = cw_map(a + b, n)
    separate = cw_map(a, n) + cw_map(b, n)
    assert combined == separate
    assert combined.cohomological_degrees() == [4, 6]


def test_ch_from_chern():
    assert ch_from_chern(3, 1) == CharClassExpr(3, {(1, 0, 0): 1})
    got2 = ch_from_chern(3, 2)
    assert got2.coefficient((2, 0, 0)) == ZetaPoly.rational(Fraction(1, 2))
    assert got2.coefficient((0, 1, 0)) == ZetaPoly.rational(-1)
    # k = 3 against the brute-force Newton oracle p3 = e1^3 - 3 e1 e2 + 3 e3
    got3 = ch_from_chern(3, 3)
    sixth = Fraction(1, 6)
    assert got3.coefficient((3, 0, 0)) == ZetaPoly.rational(sixth)
    assert got3.coefficient((1, 1, 0)) == ZetaPoly.rational(-3 * sixth)
    assert got3.coefficient((0, 0, 1)) == ZetaPoly.rational(3 * sixth)


def test_sphere_class_coefficients():
    assert sphere_class_coefficient(1) == Fraction(15, 4)
    assert sphere_class_coefficient(2) == Fraction(945, 16)
    assert sphere_class_coefficient(3) == Fraction(135135, 64)
    for j in range(1, 5):
        assert sphere_class_coefficient(j) == factorial(2 * j) * series_coefficient(j)


def test_sphere_bundle_class_ch_presentation():
    cls = sphere_bundle_torsion_class(4, 8)
    ch = cls.ch_presentation()
    assert set(ch) == {4, 8, 12, 16}
    assert ch[4] == ZetaPoly.zeta(3, coeff=Fraction(15, 4))
    assert ch[8] == ZetaPoly.zeta(5, coeff=Fraction(945, 16))


def test_two_path_equality():
    # cw_map(torsion_series(std_rep(n))) vs the closed form, matched
    # truncation through cohomological degree 16
    for n in range(1, 7):
        lhs = cw_map(torsion_series(std_rep(n), 8), n)
        rhs = sphere_bundle_torsion_class(n, 8)
        assert lhs == rhs
        assert lhs.ch_presentation() == rhs.ch_presentation()


def test_only_degrees_divisible_by_four():
    for n in (1, 3, 5):
        cls = sphere_bundle_torsion_class(n, 8)
        for d in cls.cohomological_degrees():
            assert d % 4 == 0
        for d in (2, 6, 10, 14):
            assert cls.component(d).is_zero()
