from fractions import Fraction

import pytest

from qspt.forms.eta import (
    EtaSpec,
    FractionalOffset,
    divisor_sums,
    eisenstein_e2,
    eta_quotient,
    pentagonal_series,
    qpoch_fin,
    qpoch_inf,
    sigma,
)
from qspt.forms.identities import rho_quadratic_check, t_construction_check
from qspt.forms.named import RHO, T, Z, NamedFunction, named_series
from qspt.series.laurent import ArithmeticMode


def test_pentagonal_number_theorem():
    assert list(pentagonal_series(1, 12).coeffs) == [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]


def test_dilated_pentagonal_series():
    assert list(pentagonal_series(2, 6).coeffs) == [1, 0, -1, 0, -1, 0, 0]


def test_offsets():
    assert T.q_offset == 1
    assert RHO.q_offset == 0
    assert Z.q_offset == 2
    assert EtaSpec(((1, 1),)).q_offset == Fraction(1, 24)
    assert (T * T).q_offset == 2
    assert (T ** -1).q_offset == -1


def test_fractional_offset_is_rejected():
    with pytest.raises(FractionalOffset):
        eta_quotient(EtaSpec(((1, 1),)), 10)


def test_t_expansion():
    t = eta_quotient(T, 10)
    assert t.leading_exponent() == 1
    assert t.coefficients(0, 4) == [0, 1, 2, 7, 14]


def test_rho_expansion():
    rho = eta_quotient(RHO, 10)
    assert rho[0] == 1
    assert rho[1] == 4


def test_z_expansion():
    z = eta_quotient(Z, 10)
    assert z.leading_exponent() == 2
    assert z.coefficients(2, 6) == [1, 0, 1, 0, 2]


def test_reduced_eta_quotient_agrees_with_exact():
    modulus = ArithmeticMode.REDUCED.modulus(3)
    exact = eta_quotient(RHO, 80)
    reduced = eta_quotient(RHO, 80, modulus)
    assert list(reduced.coeffs) == [c % modulus for c in exact.coeffs]


def test_qpoch():
    assert list(qpoch_fin(1, 2, 1, 5).coeffs) == [1, -1, 0, 0, 0, 0]
    assert list(qpoch_inf(1, 2, 1, 6).coeffs) == [1, -1, 0, -1, 1, -1, 1]
    assert qpoch_inf(1, 1, 1, 12) == pentagonal_series(1, 12)


def test_qpoch_inverse_pair():
    product = qpoch_inf(2, 2, 1, 100) * qpoch_inf(2, 2, -1, 100)
    assert product.coefficients(0, 100) == [1] + [0] * 100


def test_qpoch_rejects_nonconvergent_products():
    with pytest.raises(ValueError):
        qpoch_inf(0, 1, 1, 10)


def test_divisor_sums():
    assert divisor_sums(6) == (0, 1, 3, 4, 7, 6, 12)
    assert sigma(12) == 28
    assert sigma(0) == 0


def test_eisenstein_series():
    assert eisenstein_e2(1, 5).coefficients(0, 5) == [1, -24, -72, -96, -168, -144]
    assert eisenstein_e2(2, 4).coefficients(0, 4) == [1, 0, -24, 0, -72]


def test_f_and_l0():
    f = named_series(NamedFunction.F, 10)
    assert f.coefficients(0, 2) == [1, -1, -1]

    l0 = named_series(NamedFunction.L0, 10)
    assert l0.coefficients(0, 3) == [1, 24, 24, 96]


def test_omega():
    omega = named_series(NamedFunction.OMEGA, 10)
    assert omega.coefficients(0, 2) == [1, 2, 3]


def test_spt_generating_function():
    spt = named_series(NamedFunction.SPT_GEN, 10)
    assert spt.coefficients(1, 10) == [1, 3, 5, 10, 14, 26, 35, 57, 80, 119]


def test_spt_omega_generating_function():
    assert named_series(NamedFunction.SPT_OMEGA_GEN, 5).coefficients(1, 3) == [1, 3, 5]


def test_named_series_in_reduced_mode():
    modulus = ArithmeticMode.REDUCED.modulus(2)
    exact = named_series(NamedFunction.F, 60)
    reduced = named_series(NamedFunction.F, 60, modulus)
    assert exact.equal_upto(reduced, 60)


def test_rho_quadratic_identity():
    report = rho_quadratic_check(120)
    assert report.passed, report.failures


def test_t_construction_paths_agree():
    report = t_construction_check(120)
    assert report.passed, report.failures
