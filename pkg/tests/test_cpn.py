from fractions import Fraction

import pytest

from highertorsion.chernweil import ch_from_chern, sphere_bundle_torsion_class
from highertorsion.cpn import (
    CPnClass,
    DualityModel,
    evaluate_char_class,
    evaluate_torsion_class,
    locally_symmetric_report,
    nonvanishing_report,
    tangent_chern_character,
    tangent_chern_class,
)
from highertorsion.errors import InvalidModelError
from highertorsion.zetapoly import ZetaPoly, zeta_fraction, zp_eval


def test_tangent_chern_character_values():
    ch = tangent_chern_character(2)
    assert ch[0] == CPnClass(2, {0: 2})
    assert ch[1] == CPnClass(2, {1: 3})
    assert ch[2] == CPnClass(2, {2: Fraction(3, 2)})
    assert len(ch) == 3  # H^3 = 0 truncates everything above p = n


def test_tangent_chern_class_values():
    assert tangent_chern_class(1) == CPnClass(1, {0: 1, 1: 2})
    assert tangent_chern_class(2) == CPnClass(2, {0: 1, 1: 3, 2: 3})


def test_chern_character_consistency_via_newton():
    # ch computed out of the total Chern class through the Newton pipeline
    # must reproduce the closed-form components.
    for n in (2, 3, 4):
        ch = tangent_chern_character(n)
        for k in range(1, n + 1):
            got = evaluate_char_class(ch_from_chern(n, k), n)
            assert got == ch[k]


def test_evaluate_torsion_class_values():
    t2 = evaluate_torsion_class(2)
    assert t2.items() == [(2, ZetaPoly.zeta(3, coeff=Fraction(45, 8)))]

    t4 = evaluate_torsion_class(4)
    assert t4.coefficient(4) == ZetaPoly.zeta(5, coeff=Fraction(1575, 128))

    assert evaluate_torsion_class(1).is_zero()


def test_pipeline_closure():
    # substituting the CP^n Chern data into the closed form reproduces
    # the direct evaluation, exactly, for n <= 8
    for n in range(1, 9):
        direct = evaluate_torsion_class(n, max_deg=8)
        via_chern = evaluate_char_class(sphere_bundle_torsion_class(n, 8), n)
        assert direct == via_chern


def test_all_coefficients_positive_single_zeta():
    for n in range(1, 9):
        for p, coeff in evaluate_torsion_class(n).items():
            assert len(coeff) == 1
            ((key, c),) = list(coeff.items())
            assert c > 0
            assert len(key) == 1


def test_nonvanishing_report_pattern():
    for n in range(1, 9):
        report = nonvanishing_report(n)
        assert set(report) == {4 * j for j in range(1, n + 1)}
        for j in range(1, n + 1):
            assert report[4 * j] == (0 < 2 * j <= n)
    assert nonvanishing_report(4) == {4: True, 8: True, 12: False, 16: False}
    r5 = nonvanishing_report(5)
    assert r5[4] and r5[8] and not r5[12]
    assert not any(nonvanishing_report(1).values())


def test_numeric_value_n2():
    coeff = evaluate_torsion_class(2).coefficient(2)
    value = Fraction(str(zp_eval(coeff, 16)))
    oracle = Fraction(45, 8) * zeta_fraction(3, 30)
    assert abs(value - oracle) <= Fraction(1, 10**9)
    assert f"{float(value):.6f}" == "6.761570"


def test_locally_symmetric_report():
    model = DualityModel(4)
    report = locally_symmetric_report(model, max_deg=5)
    assert report[4] and report[8]
    assert not report[2] and not report[6] and not report[10]
    flipped = locally_symmetric_report(DualityModel(4, sign_flip=True), 5)
    assert flipped == report
    scaled = locally_symmetric_report(
        DualityModel(4, kappa={1: Fraction(-7, 3)}), 5)
    assert scaled == report


def test_invalid_model_rejected():
    with pytest.raises(InvalidModelError):
        DualityModel(3, kappa={2: 0})


def test_ring_truncation():
    h = CPnClass(2, {1: 1})
    assert (h * h * h).is_zero()
    assert CPnClass(2, {3: 5}).is_zero()
