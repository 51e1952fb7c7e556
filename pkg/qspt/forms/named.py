import logging
from enum import Enum
from typing import Callable

from qspt.auxiliary.logs import VERBOSE
from qspt.auxiliary.time import Stopwatch
from qspt.forms.eta import EtaSpec, eisenstein_e2, eta_quotient, pentagonal_series, sigma_series
from qspt.series.laurent import Exponent, LaurentSeries, Modulus, series_divide


logger = logging.getLogger(__name__)


class NamedFunction(Enum):
    RHO = 'rho'
    T = 't'
    Z = 'Z'
    F = 'F'
    L0 = 'L0'
    OMEGA = 'omega'
    SPT_GEN = 'spt_gen'
    SPT_C5_GEN = 'sptC5_gen'
    SPT_OMEGA_GEN = 'sptomega_gen'


SeriesSource = Callable[[NamedFunction, Exponent], LaurentSeries]


RHO = EtaSpec(((2, 2), (5, 4), (1, -4), (10, -2)))
T = EtaSpec(((5, 2), (10, 2), (1, -2), (2, -2)))
Z = EtaSpec(((50, 1), (2, -1)))


def f_series(order: Exponent, modulus: Modulus = None) -> LaurentSeries:
    combination = (
        50 * eisenstein_e2(10, order)
        - 25 * eisenstein_e2(5, order)
        - 2 * eisenstein_e2(2, order)
        + eisenstein_e2(1, order)
    )
    return combination.exact_quotient(24).reduce(modulus)


def l0_series(order: Exponent, modulus: Modulus = None) -> LaurentSeries:
    return 2 * eisenstein_e2(2, order, modulus) - eisenstein_e2(1, order, modulus)


def omega_series(order: Exponent, modulus: Modulus = None) -> LaurentSeries:
    # sum over n >= 0 of q^(2n^2 + 2n) / (q; q^2)_(n+1)^2
    total = LaurentSeries.zero(order, modulus=modulus)
    reciprocal = LaurentSeries.one(order, modulus)
    n = 0
    while 2 * n * n + 2 * n <= order:
        reciprocal = reciprocal.divide_binomial(2 * n + 1, 2)
        total = total + reciprocal.shift(2 * n * n + 2 * n)
        n += 1
    return total


def _pentagonal_quotient(numerator: LaurentSeries, d: int) -> LaurentSeries:
    return series_divide(numerator, pentagonal_series(d, numerator.trunc, numerator.modulus), numerator.trunc)


def _appell_sum(order: Exponent, exponent: Callable[[int], int], step: int, modulus: Modulus) -> LaurentSeries:
    total = LaurentSeries.zero(order, modulus=modulus)
    n = 1
    while exponent(n) <= order:
        relative = order - exponent(n)
        term = LaurentSeries.one(relative, modulus)
        if step * n <= relative:
            term = term + LaurentSeries.monomial(step * n, relative)
        term = term.divide_binomial(step * n, 2)
        term = term.shift(exponent(n))
        total = total + term if n % 2 == 0 else total - term
        n += 1
    return total


def spt_generating(order: Exponent, modulus: Modulus = None) -> LaurentSeries:
    inner = sigma_series(1, order, modulus) + _appell_sum(order, lambda n: n * (3 * n + 1) // 2, 1, modulus)
    return _pentagonal_quotient(inner, 1)


def spt_omega_generating(order: Exponent, modulus: Modulus = None) -> LaurentSeries:
    inner = sigma_series(1, order, modulus) + _appell_sum(order, lambda n: n * (3 * n + 1), 2, modulus)
    return _pentagonal_quotient(inner, 2)


def spt_c5_generating(order: Exponent, modulus: Modulus = None) -> LaurentSeries:
    # 24 S_C5 = (L0 - E2(2 tau)) / (q^2; q^2)_inf
    numerator = (l0_series(order) - eisenstein_e2(2, order)).exact_quotient(24).reduce(modulus)
    return _pentagonal_quotient(numerator, 2)


def spt_c5_lambert(order: Exponent, modulus: Modulus = None) -> LaurentSeries:
    numerator = sigma_series(1, order, modulus) - sigma_series(2, order, modulus)
    return _pentagonal_quotient(numerator, 2)


def display_sum(order: Exponent, exponent: Callable[[int], int], smallest_power: int, modulus: Modulus = None) -> LaurentSeries:
    total = LaurentSeries.zero(order, modulus=modulus)
    n = 1
    while exponent(n) <= order:
        relative = order - exponent(n)
        term = LaurentSeries.one(relative, modulus).divide_binomial(n, smallest_power)
        for part in range(n + 1, min(2 * n, relative) + 1):
            term = term.divide_binomial(part)
        for part in range(2 * n + 2, relative + 1, 2):
            term = term.divide_binomial(part)
        total = total + term.shift(exponent(n))
        n += 1
    return total


def named_series(name: NamedFunction, order: Exponent, modulus: Modulus = None) -> LaurentSeries:
    with Stopwatch() as stopwatch:
        match name:
            case NamedFunction.RHO:
                series = eta_quotient(RHO, order, modulus)
            case NamedFunction.T:
                series = eta_quotient(T, order, modulus)
            case NamedFunction.Z:
                series = eta_quotient(Z, order, modulus)
            case NamedFunction.F:
                series = f_series(order, modulus)
            case NamedFunction.L0:
                series = l0_series(order, modulus)
            case NamedFunction.OMEGA:
                series = omega_series(order, modulus)
            case NamedFunction.SPT_GEN:
                series = spt_generating(order, modulus)
            case NamedFunction.SPT_C5_GEN:
                series = spt_c5_generating(order, modulus)
            case NamedFunction.SPT_OMEGA_GEN:
                series = spt_omega_generating(order, modulus)
            case _:
                raise ValueError(f'Unknown named function: {name}')

    logger.log(VERBOSE, f'Expanded {name.value} to order {order} in {stopwatch.elapsed().to_human_readable_format()}')
    return series
