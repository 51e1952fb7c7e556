import logging
from functools import cached_property
from typing import Mapping

from sympy import Matrix

from qspt.forms.named import NamedFunction, SeriesSource, named_series
from qspt.ladder.polynomials import Polynomial, TPowers
from qspt.ladder.tables import CoefficientTables, Family
from qspt.series.laurent import ArithmeticMode, LaurentSeries, Modulus
from qspt.verify.report import ReportBuilder, VerificationReport


logger = logging.getLogger(__name__)


SLACK = 40


def base_order_for(order: int, index: int = 0) -> int:
    return 5 * order + 5 * abs(min(index, 0)) + SLACK


class Basis:
    def __init__(self, order: int, mode: ArithmeticMode = ArithmeticMode.EXACT, source: SeriesSource = named_series):
        self.order = order
        self.mode = mode
        self.modulus: Modulus = mode.modulus()
        self.source = source
        self._multipliers: dict[Family, LaurentSeries] = {}

    def _named(self, name: NamedFunction) -> LaurentSeries:
        return self.source(name, self.order).reduce(self.modulus)

    @cached_property
    def f(self) -> LaurentSeries:
        return self._named(NamedFunction.F)

    @cached_property
    def rho(self) -> LaurentSeries:
        return self._named(NamedFunction.RHO)

    @cached_property
    def t(self) -> LaurentSeries:
        return self._named(NamedFunction.T)

    @cached_property
    def z(self) -> LaurentSeries:
        return self._named(NamedFunction.Z)

    @cached_property
    def t_powers(self) -> TPowers:
        return TPowers(self.t)

    def t_power(self, j: int) -> LaurentSeries:
        return self.t_powers(j)

    def multiplier(self, family: Family) -> LaurentSeries:
        if family not in self._multipliers:
            series = self.f
            if family.value.with_z:
                series = series * self.z
            if family.value.with_rho:
                series = series * self.rho
            self._multipliers[family] = series
        return self._multipliers[family]

    def combination(self, a: Mapping[int, int], b: Mapping[int, int], order: int) -> LaurentSeries:
        def polynomial_series(coefficients: Mapping[int, int]) -> LaurentSeries:
            total = LaurentSeries.zero(order, modulus=self.modulus)
            for j, coefficient in coefficients.items():
                if coefficient and j <= order:
                    total = total + coefficient * self.t_power(j)
            return total.truncate(order)

        low = min([j for j, c in list(a.items()) + list(b.items()) if c] + [0])
        f = self.f.truncate(order - low)
        result = f * polynomial_series(a)
        if any(b.values()):
            result = result + f * self.rho.truncate(order - low) * polynomial_series(b)
        return result.truncate(order)

    def u5(self, family: Family, i: int) -> LaurentSeries:
        return (self.multiplier(family) * self.t_power(i)).u(5)


def u5_basis_check(family: Family, i: int, order: int, tables: CoefficientTables, basis: Basis = None) -> VerificationReport:
    builder = ReportBuilder(f'basis.{family.value.name}({i})', family=family.value.name, i=i)
    if not tables.covers(i, i):
        tables = tables.extended(i, i)
    if basis is None:
        basis = Basis(base_order_for(order, i))

    a_kind, b_kind = family.value.a_kind, family.value.b_kind
    a_row = tables[a_kind].row(i)
    b_row = tables[b_kind].row(i) if b_kind is not None else {}

    direct = basis.u5(family, i)
    predicted = basis.combination(a_row, b_row, order)
    comparison = direct.equal_upto(predicted, order)
    builder.check(comparison.equal, f'q^{comparison.exponent}', comparison.right, comparison.left)
    builder.note(f'{a_kind.value.name}({i}, j) = {Polynomial(a_row)}')
    if b_kind is not None:
        builder.note(f'{b_kind.value.name}({i}, j) = {Polynomial(b_row)}')
    return builder.build(order, (min(direct.min_exp, 0), order))


def _solve_exact(matrix: Matrix, rhs: Matrix) -> Matrix | None:
    try:
        solution, free = matrix.gauss_jordan_solve(rhs)
    except ValueError:
        return None
    # free parameters mean the basis columns are dependent at this order
    return None if free.shape[0] else solution


def fit_f_rho_t(
        series: LaurentSeries,
        basis: Basis,
        j_range: tuple[int, int],
        order: int,
) -> tuple[Polynomial, Polynomial] | None:
    j_lo, j_hi = j_range
    degrees = list(range(j_lo, j_hi + 1))
    columns = (
        [basis.combination({j: 1}, {}, order) for j in degrees] +
        [basis.combination({}, {j: 1}, order) for j in degrees]
    )
    lo = min(min(c.min_exp for c in columns), series.min_exp)
    exponents = range(lo, order + 1)
    matrix = Matrix([[int(column[e]) for column in columns] for e in exponents])
    rhs = Matrix([int(series[e]) for e in exponents])

    solution = _solve_exact(matrix, rhs)
    if solution is None or not all(value.is_integer for value in solution):
        return None
    count = len(degrees)
    a = Polynomial({j: int(v) for j, v in zip(degrees, solution[:count])})
    b = Polynomial({j: int(v) for j, v in zip(degrees, solution[count:])})
    return a, b
