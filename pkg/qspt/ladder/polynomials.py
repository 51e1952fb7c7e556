import logging
from dataclasses import dataclass
from typing import Iterable, Mapping

from typing_extensions import Self

from qspt.forms.named import NamedFunction, named_series
from qspt.series.laurent import InsufficientPrecision, LaurentSeries
from qspt.verify.report import ReportBuilder, VerificationReport


logger = logging.getLogger(__name__)


Degree = int


class Polynomial:
    __slots__ = ('_terms',)

    def __init__(self, terms: Mapping[Degree, int] | Iterable[tuple[Degree, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        collected: dict[Degree, int] = {}
        for degree, coefficient in items:
            collected[degree] = collected.get(degree, 0) + coefficient
        self._terms = {degree: c for degree, c in sorted(collected.items()) if c}

    @classmethod
    def constant(cls, value: int) -> Self:
        return cls({0: value})

    @classmethod
    def monomial(cls, degree: Degree, coefficient: int = 1) -> Self:
        return cls({degree: coefficient})

    def items(self):
        return self._terms.items()

    def __getitem__(self, degree: Degree) -> int:
        return self._terms.get(degree, 0)

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(other)
        return isinstance(other, Polynomial) and self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    @property
    def degree(self) -> Degree | None:
        return max(self._terms) if self._terms else None

    @property
    def low_degree(self) -> Degree | None:
        return min(self._terms) if self._terms else None

    def __add__(self, other: Self | int) -> Self:
        if isinstance(other, int):
            other = Polynomial.constant(other)
        return Polynomial(list(self.items()) + list(other.items()))

    __radd__ = __add__

    def __neg__(self) -> Self:
        return Polynomial({d: -c for d, c in self.items()})

    def __sub__(self, other: Self | int) -> Self:
        return self + (-other)

    def __rsub__(self, other: int) -> Self:
        return (-self) + other

    def __mul__(self, other: Self | int) -> Self:
        if isinstance(other, int):
            return Polynomial({d: c * other for d, c in self.items()})
        return Polynomial(
            (d1 + d2, c1 * c2)
            for d1, c1 in self.items()
            for d2, c2 in other.items()
        )

    __rmul__ = __mul__

    def shift(self, k: Degree) -> Self:
        return Polynomial({d + k: c for d, c in self.items()})

    def exact_quotient(self, divisor: int) -> Self:
        quotient = {}
        for degree, coefficient in self.items():
            q, r = divmod(coefficient, divisor)
            if r:
                raise ArithmeticError(f'Coefficient {coefficient} of t^{degree} is not divisible by {divisor}')
            quotient[degree] = q
        return Polynomial(quotient)

    def evaluate(self, powers) -> LaurentSeries:
        return sum((coefficient * powers(degree) for degree, coefficient in self.items()), start=0)

    def __repr__(self):
        if not self._terms:
            return '0'
        terms = []
        for degree, coefficient in self.items():
            match degree:
                case 0:
                    terms.append(f'{coefficient}')
                case 1:
                    terms.append(f'{coefficient}t')
                case _:
                    terms.append(f'{coefficient}t^{degree}')
        return ' + '.join(terms).replace('+ -', '- ')


T = Polynomial.monomial(1)


@dataclass(frozen=True)
class AjPolynomials:
    a0: Polynomial
    a1: Polynomial
    a2: Polynomial
    a3: Polynomial
    a4: Polynomial

    @classmethod
    def printed(cls) -> Self:
        return cls(
            a0=Polynomial({1: -1}),
            a1=Polynomial({1: -10, 2: -25}),
            a2=Polynomial({1: -55, 2: -250, 3: -625}),
            a3=Polynomial({1: -140, 2: -1375, 3: -6250, 4: -15625}),
            a4=Polynomial({1: -175, 2: -3500, 3: -34375, 4: -156250, 5: -390625}),
        )

    def __getitem__(self, j: int) -> Polynomial:
        return (self.a0, self.a1, self.a2, self.a3, self.a4)[j]

    def weights(self) -> dict[int, dict[Degree, int]]:
        return {d: {e: -c for e, c in self[5 - d].items()} for d in range(1, 6)}


CLOSED_FORMS = {
    1: Polynomial({0: -2, 1: -5}),
    2: Polynomial({0: -2, 2: -125}),
    3: Polynomial({0: 46, 3: -3125}),
    4: Polynomial({0: -210, 4: -78125}),
}


class TPowers:
    def __init__(self, t: LaurentSeries):
        self.t = t
        self._positive = {0: LaurentSeries.one(t.trunc, t.modulus), 1: t}
        self._negative = {0: self._positive[0], 1: t.inverse()}

    def __call__(self, j: int) -> LaurentSeries:
        cache, base = (self._positive, self.t) if j >= 0 else (self._negative, self._negative[1])
        k = abs(j)
        if k not in cache:
            cache[k] = self(j - 1 if j > 0 else j + 1) * base
        return cache[k]


def expand_in_t(series: LaurentSeries, powers: TPowers, order: int, max_degree: Degree) -> Polynomial | None:
    polynomial: dict[Degree, int] = {}
    remainder = series.truncate(order)
    while True:
        leading = remainder.leading_exponent()
        if leading is None:
            return Polynomial(polynomial)
        if leading > max_degree:
            return None
        coefficient = remainder[leading]
        polynomial[leading] = coefficient
        remainder = (remainder - coefficient * powers(leading)).truncate(order)


def newton_power_sums_to_elementary(power_sums: dict[int, Polynomial]) -> dict[int, Polynomial]:
    elementary = {0: Polynomial.constant(1)}
    for k in range(1, len(power_sums) + 1):
        total = Polynomial()
        for i in range(1, k + 1):
            term = elementary[k - i] * power_sums[i]
            total = total + (term if i % 2 else -term)
        elementary[k] = total.exact_quotient(k)
    return elementary


def newton_aj_check(order: int, t: LaurentSeries = None) -> VerificationReport:
    builder = ReportBuilder('lemmas.newton_aj', order=order)
    base_order = 5 * order + 25
    if t is None:
        t = named_series(NamedFunction.T, base_order)
    if t.trunc < base_order:
        raise InsufficientPrecision(base_order, t.trunc)

    powers = TPowers(t)
    short_powers = TPowers(t.truncate(order + 5))

    power_sums = {}
    for j, closed_form in CLOSED_FORMS.items():
        extracted = powers(-j).u(5)
        comparison = extracted.equal_upto(closed_form.evaluate(short_powers), order)
        builder.check(comparison.equal, f'U5(t^-{j}) at q^{comparison.exponent}', comparison.right, comparison.left)

        expansion = expand_in_t(extracted, short_powers, order, max_degree=j + 1)
        builder.check(expansion == closed_form, f'U5(t^-{j}) as a polynomial in t', closed_form, expansion)
        power_sums[j] = 5 * (expansion if expansion is not None else closed_form)

    elementary = newton_power_sums_to_elementary(power_sums)
    printed = AjPolynomials.printed()
    for j in range(5):
        sign = 1 if j % 2 == 0 else -1
        derived = elementary[j].shift(1) * -sign
        builder.check(derived == printed[j], f'a_{j}', printed[j], derived)
        builder.note(f's_{j} = {elementary[j]}')

    return builder.build(order, (0, order))
