from __future__ import annotations

import logging
from bisect import bisect_right
from dataclasses import dataclass
from enum import Enum
from itertools import repeat
from math import gcd
from operator import add, mul, sub
from typing import Iterable, Sequence

from typing_extensions import Self

import gmpy2

from qspt.auxiliary.errors import QsptError
from qspt.auxiliary.logs import VERBOSE
from qspt.config.config import BLOCK_SIZE, REDUCED_EXPONENT


logger = logging.getLogger(__name__)


Exponent = int
Coefficient = int
Modulus = int | None

SPARSE_DENSITY = 4
LARGE_PRODUCT = 4000


class InsufficientPrecision(QsptError):
    def __init__(self, requested: Exponent, available: Exponent):
        super().__init__(f'Order {requested} requested, but the series is only known up to order {available}')
        self.requested = requested
        self.available = available


class NonUnitLeadingCoefficient(QsptError):
    def __init__(self, value: Coefficient):
        super().__init__(f'Leading coefficient {value} is not +1 or -1, exact inversion is impossible')
        self.value = value


class InexactDivision(QsptError):
    def __init__(self, divisor: int, exponent: Exponent, value: Coefficient):
        super().__init__(f'Coefficient {value} of q^{exponent} is not divisible by {divisor}')
        self.divisor = divisor
        self.exponent = exponent
        self.value = value


class ModulusMismatch(QsptError):
    def __init__(self, left: Modulus, right: Modulus):
        super().__init__(f'Cannot combine series reduced mod {left} and mod {right}')


class ArithmeticMode(Enum):
    EXACT = 'exact'
    REDUCED = 'reduced'

    def modulus(self, exponent: int = REDUCED_EXPONENT) -> Modulus:
        return None if self is ArithmeticMode.EXACT else 5 ** exponent

    def label(self, exponent: int = REDUCED_EXPONENT) -> str:
        return self.value if self is ArithmeticMode.EXACT else f'{self.value}{exponent}'


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return 'Infinity'

    def __eq__(self, other):
        return isinstance(other, _Infinity)

    def __hash__(self):
        return hash('Infinity')

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return isinstance(other, _Infinity)

    def __gt__(self, other):
        return not isinstance(other, _Infinity)

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        return self


INFINITY = _Infinity()
Valuation = int | _Infinity


def padic_valuation(x: int, p: int = 5) -> Valuation:
    if x == 0:
        return INFINITY
    return int(gmpy2.remove(abs(x), p)[1])


def _common_modulus(left: Modulus, right: Modulus) -> Modulus:
    if left is None:
        return right
    if right is None or left == right:
        return left
    return gcd(left, right)


def _reduce(coeffs: list[int], modulus: Modulus) -> list[int]:
    return coeffs if modulus is None else [c % modulus for c in coeffs]


def _is_sparse(coeffs: Sequence[int]) -> bool:
    return len(coeffs) > 16 and sum(1 for c in coeffs if c) * SPARSE_DENSITY <= len(coeffs)


def _convolve(a: Sequence[int], b: Sequence[int], length: int, modulus: Modulus, block_size: int) -> list[int]:
    a, b = list(a[:length]), list(b[:length])
    if not a or not b:
        return [0] * length

    if _is_sparse(b) and not _is_sparse(a):
        a, b = b, a

    if _is_sparse(a):
        result = [0] * length
        for i, ai in enumerate(a):
            if not ai:
                continue
            span = min(len(b), length - i)
            if span <= 0:
                break
            result[i:i + span] = map(add, result[i:i + span], map(mul, repeat(ai, span), b[:span]))
        return _reduce(result, modulus)

    la, lb = len(a), len(b)
    b_reversed = b[::-1]
    result = [0] * length
    for start in range(0, length, block_size):
        for k in range(start, min(start + block_size, length)):
            lo = max(0, k - lb + 1)
            hi = min(k, la - 1)
            if lo <= hi:
                result[k] = sum(map(mul, a[lo:hi + 1], b_reversed[lb - 1 - k + lo:lb - k + hi]))
        if modulus is not None:
            result[start:start + block_size] = [c % modulus for c in result[start:start + block_size]]
        if length >= LARGE_PRODUCT and start % (block_size * 64) == 0:
            logger.log(VERBOSE, f'Product of {la} x {lb} coefficients: {start} of {length} done')
    return result


@dataclass(frozen=True)
class Comparison:
    equal: bool
    order: Exponent
    exponent: Exponent | None = None
    left: Coefficient | None = None
    right: Coefficient | None = None

    def __bool__(self):
        return self.equal


@dataclass(frozen=True)
class LaurentSeries:
    min_exp: Exponent
    trunc: Exponent
    coeffs: tuple[Coefficient, ...]
    modulus: Modulus = None

    def __post_init__(self):
        if self.trunc < self.min_exp:
            raise ValueError(f'Truncation {self.trunc} is below the lowest exponent {self.min_exp}')
        if len(self.coeffs) != self.trunc - self.min_exp + 1:
            raise ValueError(f'Expected {self.trunc - self.min_exp + 1} coefficients, got {len(self.coeffs)}')

    @classmethod
    def from_coefficients(
            cls,
            coeffs: Iterable[int],
            min_exp: Exponent = 0,
            trunc: Exponent = None,
            modulus: Modulus = None,
    ) -> Self:
        coeffs = list(coeffs)
        if trunc is None:
            trunc = min_exp + len(coeffs) - 1
        length = trunc - min_exp + 1
        coeffs = coeffs[:length] + [0] * (length - len(coeffs))
        return cls(min_exp, trunc, tuple(_reduce(coeffs, modulus)), modulus)

    @classmethod
    def zero(cls, trunc: Exponent, min_exp: Exponent = 0, modulus: Modulus = None) -> Self:
        min_exp = min(min_exp, trunc)
        return cls(min_exp, trunc, (0,) * (trunc - min_exp + 1), modulus)

    @classmethod
    def monomial(cls, exponent: Exponent, trunc: Exponent, coefficient: int = 1, modulus: Modulus = None) -> Self:
        if exponent > trunc:
            return cls.zero(trunc, min_exp=trunc, modulus=modulus)
        return cls.from_coefficients([coefficient], min_exp=exponent, trunc=trunc, modulus=modulus)

    @classmethod
    def one(cls, trunc: Exponent, modulus: Modulus = None) -> Self:
        return cls.monomial(0, trunc, modulus=modulus)

    def __getitem__(self, exponent: Exponent) -> Coefficient:
        if exponent > self.trunc:
            raise InsufficientPrecision(exponent, self.trunc)
        if exponent < self.min_exp:
            return 0
        return self.coeffs[exponent - self.min_exp]

    def __len__(self):
        return len(self.coeffs)

    def __repr__(self):
        terms = [f'{c}*q^{e}' for e, c in self.items() if c][:8]
        return f'LaurentSeries({" + ".join(terms) or "0"} + O(q^{self.trunc + 1}))'

    def items(self) -> Iterable[tuple[Exponent, Coefficient]]:
        return zip(range(self.min_exp, self.trunc + 1), self.coeffs)

    def coefficients(self, lo: Exponent, hi: Exponent) -> list[Coefficient]:
        if hi > self.trunc:
            raise InsufficientPrecision(hi, self.trunc)
        return [self[e] for e in range(lo, hi + 1)]

    def leading_exponent(self) -> Exponent | None:
        for exponent, coefficient in self.items():
            if coefficient:
                return exponent
        return None

    def normalized(self) -> Self:
        leading = self.leading_exponent()
        if leading is None or leading == self.min_exp:
            return self
        return LaurentSeries(leading, self.trunc, self.coeffs[leading - self.min_exp:], self.modulus)

    def truncate(self, order: Exponent) -> Self:
        if order > self.trunc:
            raise InsufficientPrecision(order, self.trunc)
        if order < self.min_exp:
            return LaurentSeries.zero(order, min_exp=order, modulus=self.modulus)
        return LaurentSeries(self.min_exp, order, self.coeffs[:order - self.min_exp + 1], self.modulus)

    def reduce(self, modulus: Modulus) -> Self:
        modulus = _common_modulus(self.modulus, modulus)
        return LaurentSeries.from_coefficients(self.coeffs, self.min_exp, self.trunc, modulus)

    def __neg__(self) -> Self:
        return self.scale(-1)

    def scale(self, factor: int) -> Self:
        return LaurentSeries.from_coefficients([factor * c for c in self.coeffs], self.min_exp, self.trunc, self.modulus)

    def __add__(self, other: LaurentSeries | int) -> Self:
        if isinstance(other, int):
            if other == 0 or self.trunc < 0:
                return self
            other = LaurentSeries.one(self.trunc).scale(other)
        return series_add(self, other)

    __radd__ = __add__

    def __sub__(self, other: LaurentSeries | int) -> Self:
        return self + (-other)

    def __rsub__(self, other: int) -> Self:
        return (-self) + other

    def __mul__(self, other: LaurentSeries | int) -> Self:
        if isinstance(other, int):
            return self.scale(other)
        return series_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Self:
        if k < 0:
            return series_invert(self) ** (-k)
        result, base = None, self
        while True:
            if k & 1:
                result = base if result is None else result * base
            k >>= 1
            if not k:
                break
            base = base * base
        return result if result is not None else LaurentSeries.one(self.trunc - self.min_exp, self.modulus)

    def shift(self, k: Exponent) -> Self:
        return series_shift(self, k)

    def u(self, m: int) -> Self:
        return u_extract(self, m)

    def inverse(self, order: Exponent = None) -> Self:
        return series_invert(self, order)

    def multiply_binomial(self, m: int, power: int = 1) -> Self:
        coeffs = list(self.coeffs)
        for _ in range(power):
            if m >= len(coeffs):
                break
            coeffs[m:] = map(sub, coeffs[m:], coeffs[:len(coeffs) - m])
        return LaurentSeries.from_coefficients(coeffs, self.min_exp, self.trunc, self.modulus)

    def divide_binomial(self, m: int, power: int = 1) -> Self:
        coeffs = list(self.coeffs)
        for _ in range(power):
            for start in range(m, len(coeffs), m):
                coeffs[start:start + m] = map(add, coeffs[start:start + m], coeffs[start - m:start])
            if self.modulus is not None:
                coeffs = _reduce(coeffs, self.modulus)
        return LaurentSeries.from_coefficients(coeffs, self.min_exp, self.trunc, self.modulus)

    def exact_quotient(self, divisor: int) -> Self:
        quotients = []
        for exponent, coefficient in self.items():
            quotient, remainder = divmod(coefficient, divisor)
            if remainder:
                raise InexactDivision(divisor, exponent, coefficient)
            quotients.append(quotient)
        return LaurentSeries(self.min_exp, self.trunc, tuple(quotients), self.modulus)

    def equal_upto(self, other: LaurentSeries, order: Exponent) -> Comparison:
        return series_equal_upto(self, other, order)

    def min_valuation(self, lo: Exponent, hi: Exponent, p: int = 5) -> Valuation:
        return min_padic_valuation(self, lo, hi, p)


def series_add(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    modulus = _common_modulus(a.modulus, b.modulus)
    min_exp = min(a.min_exp, b.min_exp)
    trunc = min(a.trunc, b.trunc)
    coeffs = [a[e] + b[e] for e in range(min_exp, trunc + 1)]
    return LaurentSeries.from_coefficients(coeffs, min_exp, trunc, modulus)


def series_shift(a: LaurentSeries, k: Exponent) -> LaurentSeries:
    return LaurentSeries(a.min_exp + k, a.trunc + k, a.coeffs, a.modulus)


def series_mul(a: LaurentSeries, b: LaurentSeries, block_size: int = BLOCK_SIZE) -> LaurentSeries:
    modulus = _common_modulus(a.modulus, b.modulus)
    min_exp = a.min_exp + b.min_exp
    trunc = min(a.trunc + b.min_exp, b.trunc + a.min_exp)
    coeffs = _convolve(a.coeffs, b.coeffs, trunc - min_exp + 1, modulus, block_size)
    return LaurentSeries(min_exp, trunc, tuple(coeffs), modulus)


def series_divide(a: LaurentSeries, b: LaurentSeries, order: Exponent = None) -> LaurentSeries:
    modulus = _common_modulus(a.modulus, b.modulus)
    b = b.normalized()
    v = b.min_exp
    unit = b.coeffs[0]
    if modulus is not None:
        unit = (unit + 1) % modulus - 1
    # only a leading +1 or -1 keeps the quotient integral
    if unit not in (1, -1):
        raise NonUnitLeadingCoefficient(b.coeffs[0])

    min_exp = a.min_exp - v
    available = min(a.trunc - v, b.trunc + a.min_exp - 2 * v)
    if order is None:
        order = available
    elif order > available:
        raise InsufficientPrecision(order, available)
    if order < min_exp:
        return LaurentSeries.zero(order, min_exp=order, modulus=modulus)

    length = order - min_exp + 1
    numerator = [a[a.min_exp + i] for i in range(length)]
    divisor = list(b.coeffs[:length])
    quotient = [0] * length

    if _is_sparse(divisor):
        support = [(k, c) for k, c in enumerate(divisor) if c and k]
        ks = [k for k, _ in support]
        cs = [c for _, c in support]
        for idx in range(length):
            count = bisect_right(ks, idx)
            acc = numerator[idx] - sum(map(mul, cs[:count], [quotient[idx - k] for k in ks[:count]]))
            if modulus is not None:
                acc %= modulus
            quotient[idx] = acc if unit == 1 else -acc
    else:
        for idx in range(length):
            top = min(idx, len(divisor) - 1)
            acc = numerator[idx]
            if top:
                acc -= sum(map(mul, divisor[1:top + 1], quotient[idx - top:idx][::-1]))
            if modulus is not None:
                acc %= modulus
            quotient[idx] = acc if unit == 1 else -acc

    return LaurentSeries.from_coefficients(quotient, min_exp, order, modulus)


def series_invert(a: LaurentSeries, order: Exponent = None) -> LaurentSeries:
    b = a.normalized()
    v = b.min_exp
    available = b.trunc - 2 * v
    if order is None:
        order = available
    elif order > available:
        raise InsufficientPrecision(order, available)
    one = LaurentSeries.one(max(order + v, 0), a.modulus)
    return series_divide(one, b, order)


def u_extract(a: LaurentSeries, m: int) -> LaurentSeries:
    if m < 1:
        raise ValueError(f'U_m needs m >= 1, got {m}')
    if m == 1:
        return a
    trunc = a.trunc // m
    min_exp = min(-((-a.min_exp) // m), trunc)
    coeffs = [a[m * n] for n in range(min_exp, trunc + 1)]
    return LaurentSeries(min_exp, trunc, tuple(coeffs), a.modulus)


def series_equal_upto(a: LaurentSeries, b: LaurentSeries, order: Exponent, lo: Exponent = None) -> Comparison:
    available = min(a.trunc, b.trunc)
    if order > available:
        raise InsufficientPrecision(order, available)
    modulus = _common_modulus(a.modulus, b.modulus)
    start = min(a.min_exp, b.min_exp) if lo is None else lo
    for exponent in range(start, order + 1):
        left, right = a[exponent], b[exponent]
        if left != right and (modulus is None or (left - right) % modulus):
            return Comparison(False, order, exponent, left, right)
    return Comparison(True, order)


def min_padic_valuation(a: LaurentSeries, lo: Exponent, hi: Exponent, p: int = 5) -> Valuation:
    if hi > a.trunc:
        raise InsufficientPrecision(hi, a.trunc)
    valuation = min((padic_valuation(a[e], p) for e in range(lo, hi + 1)), default=INFINITY)
    # modulo p^K nothing finer than K is visible
    if a.modulus is not None:
        cap = padic_valuation(a.modulus, p)
        valuation = min(valuation, cap)
    return valuation
