import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing_extensions import Self

from qspt.auxiliary.errors import QsptError
from qspt.series.laurent import Exponent, LaurentSeries, Modulus, series_divide


logger = logging.getLogger(__name__)


Dilation = int


class FractionalOffset(QsptError):
    def __init__(self, offset: Fraction):
        super().__init__(f'Eta quotient has q-offset {offset}, which is not an integer')
        self.offset = offset


@dataclass(frozen=True)
class EtaSpec:
    factors: tuple[tuple[Dilation, int], ...]

    def __post_init__(self):
        for d, _ in self.factors:
            if d < 1:
                raise ValueError(f'Dilation must be positive, got {d}')

    @property
    def q_offset(self) -> Fraction:
        return Fraction(sum(d * e for d, e in self.factors), 24)

    def is_expandable(self) -> bool:
        return self.q_offset.denominator == 1

    def __mul__(self, other: Self) -> Self:
        exponents: dict[Dilation, int] = {}
        for d, e in self.factors + other.factors:
            exponents[d] = exponents.get(d, 0) + e
        return EtaSpec(tuple((d, e) for d, e in sorted(exponents.items()) if e))

    def __pow__(self, k: int) -> Self:
        return EtaSpec(tuple((d, e * k) for d, e in self.factors))


def pentagonal_series(d: Dilation, order: Exponent, modulus: Modulus = None) -> LaurentSeries:
    coeffs = [0] * (max(order, 0) + 1)
    coeffs[0] = 1
    k = 1
    while d * k * (3 * k - 1) // 2 <= order:
        sign = -1 if k % 2 else 1
        coeffs[d * k * (3 * k - 1) // 2] += sign
        if d * k * (3 * k + 1) // 2 <= order:
            coeffs[d * k * (3 * k + 1) // 2] += sign
        k += 1
    return LaurentSeries.from_coefficients(coeffs, modulus=modulus)


def _apply_power(series: LaurentSeries, factor: LaurentSeries, e: int) -> LaurentSeries:
    for _ in range(abs(e)):
        series = series * factor if e > 0 else series_divide(series, factor, series.trunc)
    return series


def eta_quotient(spec: EtaSpec, order: Exponent, modulus: Modulus = None) -> LaurentSeries:
    if not spec.is_expandable():
        raise FractionalOffset(spec.q_offset)
    offset = int(spec.q_offset)
    if order < offset:
        raise ValueError(f'Order {order} is below the q-offset {offset} of {spec}')

    relative = order - offset
    series = LaurentSeries.one(relative, modulus)
    for d, e in spec.factors:
        series = _apply_power(series, pentagonal_series(d, relative, modulus), e)
    return series.shift(offset)


def qpoch_inf(a: int, b: int, e: int, order: Exponent, modulus: Modulus = None) -> LaurentSeries:
    if a < 1 or b < 1:
        raise ValueError(f'(q^{a}; q^{b})_inf does not converge as a formal series')
    series = LaurentSeries.one(order, modulus)
    if a == b:
        return _apply_power(series, pentagonal_series(b, order, modulus), e)
    for exponent in range(a, order + 1, b):
        series = series.multiply_binomial(exponent, e) if e > 0 else series.divide_binomial(exponent, -e)
    return series


def qpoch_fin(a: int, b: int, n: int, order: Exponent, modulus: Modulus = None) -> LaurentSeries:
    if n < 0:
        raise ValueError(f'Finite q-Pochhammer symbol needs n >= 0, got {n}')
    series = LaurentSeries.one(order, modulus)
    for k in range(n):
        series = series.multiply_binomial(a + k * b)
    return series


@lru_cache(maxsize=8)
def divisor_sums(limit: int) -> tuple[int, ...]:
    sums = [0] * (limit + 1)
    for divisor in range(1, limit + 1):
        for multiple in range(divisor, limit + 1, divisor):
            sums[multiple] += divisor
    return tuple(sums)


def sigma(n: int) -> int:
    return divisor_sums(n)[n] if n > 0 else 0


def sigma_series(d: Dilation, order: Exponent, modulus: Modulus = None) -> LaurentSeries:
    coeffs = [0] * (order + 1)
    sums = divisor_sums(order // d)
    coeffs[d::d] = sums[1:]
    return LaurentSeries.from_coefficients(coeffs, modulus=modulus)


def eisenstein_e2(d: Dilation, order: Exponent, modulus: Modulus = None) -> LaurentSeries:
    return 1 - 24 * sigma_series(d, order, modulus)
