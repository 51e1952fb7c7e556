import random

import pytest

from qspt.forms.eta import pentagonal_series
from qspt.series.laurent import (
    INFINITY,
    ArithmeticMode,
    InexactDivision,
    InsufficientPrecision,
    LaurentSeries,
    NonUnitLeadingCoefficient,
    padic_valuation,
    series_divide,
    series_equal_upto,
    series_invert,
    series_mul,
    u_extract,
)


PARTITIONS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490, 627]


def naive_product(a: list[int], b: list[int], length: int) -> list[int]:
    return [sum(a[i] * b[k - i] for i in range(k + 1) if i < len(a) and k - i < len(b)) for k in range(length)]


def test_product_keeps_the_guaranteed_order():
    a = LaurentSeries.from_coefficients([1, 1, 1])
    product = series_mul(a, a.shift(1))

    assert (product.min_exp, product.trunc) == (1, 3)
    assert product.coefficients(1, 3) == [1, 2, 3]
    with pytest.raises(InsufficientPrecision):
        product[4]


def test_coefficients_below_the_lowest_exponent_are_zero():
    a = LaurentSeries.from_coefficients([3, 4], min_exp=2, trunc=5)
    assert a[0] == 0
    assert a[-7] == 0
    assert a.coefficients(2, 5) == [3, 4, 0, 0]


def test_sparse_and_dense_products_agree():
    sparse = pentagonal_series(1, 200)
    dense = LaurentSeries.from_coefficients(range(1, 202))
    expected = naive_product(list(sparse.coeffs), list(dense.coeffs), 201)

    assert list(series_mul(sparse, dense).coeffs) == expected
    assert list(series_mul(dense, sparse, block_size=7).coeffs) == expected


def test_inverse_of_one_minus_q():
    one_minus_q = LaurentSeries.one(10).multiply_binomial(1)
    assert list(series_invert(one_minus_q).coeffs) == [1] * 11


def test_inverse_of_euler_product_gives_partition_numbers():
    inverse = series_invert(pentagonal_series(1, 20))
    assert list(inverse.coeffs) == PARTITIONS


def test_inverse_of_series_with_a_simple_zero():
    a = LaurentSeries.from_coefficients([1, 2], min_exp=1, trunc=10)
    inverse = a.inverse()

    assert (inverse.min_exp, inverse.trunc) == (-1, 8)
    assert inverse.coefficients(-1, 2) == [1, -2, 4, -8]
    assert (a * inverse).equal_upto(LaurentSeries.one(9), 9)


def test_division_needs_a_unit_leading_coefficient():
    with pytest.raises(NonUnitLeadingCoefficient):
        series_divide(LaurentSeries.one(5), LaurentSeries.from_coefficients([2, 1], trunc=5))


def test_division_by_minus_one_leading_coefficient():
    quotient = series_divide(LaurentSeries.one(5), LaurentSeries.from_coefficients([-1, 1], trunc=5))
    assert list(quotient.coeffs) == [-1, -1, -1, -1, -1, -1]


def test_division_beyond_available_order():
    with pytest.raises(InsufficientPrecision):
        series_divide(LaurentSeries.one(5), pentagonal_series(1, 5), 6)


def test_u_extract():
    a = LaurentSeries.from_coefficients(range(21))
    assert list(u_extract(a, 5).coeffs) == [0, 5, 10, 15, 20]
    assert a.u(5).trunc == 4


def test_u_extract_with_negative_exponents():
    a = LaurentSeries.from_coefficients(range(1, 12), min_exp=-3)
    extracted = a.u(5)

    assert (extracted.min_exp, extracted.trunc) == (0, 1)
    assert list(extracted.coeffs) == [4, 9]


def test_equal_upto_reports_the_first_mismatch():
    a = LaurentSeries.from_coefficients([1, 2, 3, 4])
    b = LaurentSeries.from_coefficients([1, 2, 5, 4])

    comparison = series_equal_upto(a, b, 3)
    assert not comparison
    assert (comparison.exponent, comparison.left, comparison.right) == (2, 3, 5)
    assert series_equal_upto(a, b, 1)
    with pytest.raises(InsufficientPrecision):
        series_equal_upto(a, b, 4)


def test_binomial_factors_cancel():
    s = LaurentSeries.from_coefficients(range(1, 30))
    assert s.multiply_binomial(3, 2).divide_binomial(3, 2) == s


def test_exact_quotient():
    assert list(LaurentSeries.from_coefficients([24, 48]).exact_quotient(24).coeffs) == [1, 2]
    with pytest.raises(InexactDivision):
        LaurentSeries.from_coefficients([24, 5]).exact_quotient(24)


def test_integer_arithmetic():
    q = LaurentSeries.monomial(1, 4)
    assert list((1 - q).coeffs) == [1, -1, 0, 0, 0]
    assert list((3 * q + 2).coeffs) == [2, 3, 0, 0, 0]


def test_padic_valuation():
    assert padic_valuation(0) is INFINITY
    assert padic_valuation(250) == 3
    assert padic_valuation(-125) == 3
    assert padic_valuation(7) == 0
    assert padic_valuation(48, 2) == 4
    assert INFINITY >= 100
    assert not INFINITY < 3


def test_min_padic_valuation():
    a = LaurentSeries.from_coefficients([25, 50, 0, 125])
    assert a.min_valuation(0, 3) == 2
    assert a.min_valuation(2, 2) is INFINITY


def test_reduced_valuation_is_capped():
    a = LaurentSeries.from_coefficients([0, 0], modulus=5 ** 3)
    assert a.min_valuation(0, 1) == 3


def test_reduced_mode():
    modulus = ArithmeticMode.REDUCED.modulus()
    assert modulus == 5 ** 40
    assert ArithmeticMode.REDUCED.label() == 'reduced40'
    assert ArithmeticMode.EXACT.modulus() is None

    reduced = LaurentSeries.from_coefficients([5 ** 41, 3], modulus=modulus)
    assert list(reduced.coeffs) == [0, 3]

    exact = LaurentSeries.from_coefficients([5 ** 40 + 7, 3])
    assert series_equal_upto(exact, LaurentSeries.from_coefficients([7, 3], modulus=modulus), 1)


def test_reduced_products_match_exact_products_mod_the_modulus():
    modulus = 5 ** 4
    a = LaurentSeries.from_coefficients(range(100, 160))
    b = LaurentSeries.from_coefficients(range(7, 67))
    exact = a * b
    reduced = a.reduce(modulus) * b.reduce(modulus)

    assert reduced.modulus == modulus
    assert list(reduced.coeffs) == [c % modulus for c in exact.coeffs]


MODES = [ArithmeticMode.EXACT, ArithmeticMode.REDUCED]
SEEDS = [3, 17, 2024]


def random_series(rng: random.Random, mode: ArithmeticMode, length: int = 40, unit: bool = False) -> LaurentSeries:
    bound = 10 ** 30 if mode is ArithmeticMode.REDUCED else 50
    coeffs = [rng.randint(-bound, bound) for _ in range(length)]
    if unit:
        coeffs[0] = rng.choice([1, -1])
    return LaurentSeries.from_coefficients(coeffs, min_exp=rng.randint(-3, 3), modulus=mode.modulus())


def agree(a: LaurentSeries, b: LaurentSeries) -> bool:
    return bool(series_equal_upto(a, b, min(a.trunc, b.trunc)))


@pytest.mark.parametrize('mode', MODES)
@pytest.mark.parametrize('seed', SEEDS)
def test_ring_laws(mode, seed):
    rng = random.Random(seed)
    a, b, c = (random_series(rng, mode) for _ in range(3))

    assert a * b == b * a
    assert agree((a * b) * c, a * (b * c))
    assert agree(a * (b + c), a * b + a * c)
    assert agree(a + (b + c), (a + b) + c)
    assert agree(a - a, LaurentSeries.zero(a.trunc, modulus=mode.modulus()))
    assert agree(a * LaurentSeries.one(a.trunc - a.min_exp, mode.modulus()), a)


@pytest.mark.parametrize('mode', MODES)
@pytest.mark.parametrize('seed', SEEDS)
@pytest.mark.parametrize('m, n', [(2, 3), (5, 5), (3, 5)])
def test_u_operators_compose(mode, seed, m, n):
    a = random_series(random.Random(seed), mode, length=400)
    composed = u_extract(u_extract(a, m), n)
    direct = u_extract(a, m * n)

    assert composed.trunc == direct.trunc
    assert agree(composed, direct)


@pytest.mark.parametrize('mode', MODES)
@pytest.mark.parametrize('seed', SEEDS)
def test_u_operator_is_linear(mode, seed):
    rng = random.Random(seed)
    a, b = random_series(rng, mode, length=200), random_series(rng, mode, length=200)
    x, y = rng.randint(-9, 9), rng.randint(-9, 9)

    assert agree(u_extract(x * a + y * b, 5), x * u_extract(a, 5) + y * u_extract(b, 5))


@pytest.mark.parametrize('mode', MODES)
@pytest.mark.parametrize('seed', SEEDS)
def test_series_times_its_inverse_is_one(mode, seed):
    a = random_series(random.Random(seed), mode, unit=True)
    product = series_mul(a, series_invert(a))

    assert product.trunc == a.trunc - a.min_exp
    assert agree(product, LaurentSeries.one(product.trunc, mode.modulus()))


@pytest.mark.parametrize('mode', MODES)
@pytest.mark.parametrize('seed', SEEDS)
def test_valuation_does_not_drop_on_a_smaller_range(mode, seed):
    rng = random.Random(seed)
    a = random_series(rng, mode).scale(5 ** rng.randint(0, 3))
    for _ in range(20):
        lo, hi = sorted(rng.randint(a.min_exp, a.trunc) for _ in range(2))
        inner_lo, inner_hi = sorted(rng.randint(lo, hi) for _ in range(2))
        assert a.min_valuation(inner_lo, inner_hi) >= a.min_valuation(lo, hi)
