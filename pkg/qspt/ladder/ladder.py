import logging
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from qspt.config.config import REDUCED_EXPONENT
from qspt.forms.eta import pentagonal_series
from qspt.forms.named import NamedFunction, SeriesSource, named_series
from qspt.ladder.appendix import seed_tables
from qspt.ladder.basis import Basis
from qspt.ladder.tables import CoefficientTables, Kind
from qspt.sequences.tables import SequenceName, sequence
from qspt.series.laurent import ArithmeticMode, LaurentSeries, series_divide
from qspt.verify.report import ReportBuilder, VerificationReport


logger = logging.getLogger(__name__)


Row = Mapping[int, int]

# L_i = F (sum a(i, j) t^j + rho sum b(i, j) t^j); L_(2i-1) = U_5(Z L_(2i-2)), L_(2i) = U_5(L_(2i-1))
A1 = {1: 49 * 5, 2: 6 * 5 ** 4, 3: 5 ** 6}
B1 = {1: -5 ** 3, 2: -5 ** 5}


class Method(Enum):
    DIRECT = 'direct'
    LADDER = 'ladder'
    BOTH = 'both'


def subsequence_offset(i: int) -> int:
    # L_i over (q^10; q^10) for odd i, (q^2; q^2) for even i, is sum c(5^i n + offset) q^(n+1)
    power = 5 ** i
    return (7 * power + 1) // 12 if i % 2 else (11 * power + 1) // 12


@dataclass(frozen=True)
class LadderState:
    a: Mapping[int, Row]
    b: Mapping[int, Row]
    tables: CoefficientTables

    @property
    def i_max(self) -> int:
        return max(self.a)

    def representation(self, i: int) -> tuple[Row, Row]:
        return self.a[i], self.b[i]

    def series(self, i: int, basis: Basis, order: int) -> LaurentSeries:
        return basis.combination(*self.representation(i), order)


def _transfer(rows: list[tuple[Row, Kind]], tables: CoefficientTables) -> dict[int, int]:
    result: defaultdict[int, int] = defaultdict(int)
    for coefficients, kind in rows:
        table = tables[kind]
        for j, coefficient in coefficients.items():
            for k, value in table.row(j).items():
                result[k] += coefficient * value
    return {k: v for k, v in sorted(result.items()) if v}


def ab_tables(i_max: int, tables: CoefficientTables = None, auto_extend: bool = True) -> LadderState:
    if tables is None:
        tables = seed_tables()
    a, b = {1: dict(A1)}, {1: dict(B1)}

    for i in range(2, i_max + 1):
        previous_a, previous_b = a[i - 1], b[i - 1]
        needed = list(previous_a) + list(previous_b)
        if auto_extend and needed and not tables.covers(min(needed), max(needed)):
            tables = tables.extended(min(needed), max(needed))

        if i % 2 == 0:
            a[i] = _transfer([(previous_a, Kind.M), (previous_b, Kind.X0)], tables)
            b[i] = _transfer([(previous_b, Kind.X1)], tables)
        else:
            a[i] = _transfer([(previous_a, Kind.Y0), (previous_b, Kind.Z0)], tables)
            b[i] = _transfer([(previous_a, Kind.Y1), (previous_b, Kind.Z1)], tables)

        logger.debug(f'a({i}, j) supported on {min(a[i], default=None)}..{max(a[i], default=None)}')

    return LadderState(a, b, tables)


def direct_base_order(i: int, order: int) -> int:
    for _ in range(i):
        order = 5 * order + 4
    return order


def _direct(i: int, order: int, mode: ArithmeticMode, source: SeriesSource) -> LaurentSeries:
    modulus = mode.modulus()
    base = direct_base_order(i, order)
    current = source(NamedFunction.L0, base).reduce(modulus)
    z = source(NamedFunction.Z, base).reduce(modulus) if i else None
    for step in range(1, i + 1):
        if step % 2:
            current = (z.truncate(current.trunc) * current).u(5)
        else:
            current = current.u(5)
    return current.truncate(order)


def l_series(
        i: int,
        order: int,
        method: Method = Method.DIRECT,
        mode: ArithmeticMode = ArithmeticMode.EXACT,
        state: LadderState = None,
        source: SeriesSource = named_series,
) -> LaurentSeries:
    match method:
        case Method.DIRECT:
            return _direct(i, order, mode, source)
        case Method.LADDER:
            if i == 0:
                return source(NamedFunction.L0, order).reduce(mode.modulus())
            if state is None or state.i_max < i:
                state = ab_tables(i)
            return state.series(i, Basis(order, mode, source), order)
        case _:
            raise ValueError(f'l_series needs a single method, got {method}')


def subsequence_check(builder: ReportBuilder, i: int, direct: LaurentSeries, order: int, source: SeriesSource = named_series):
    normalizer = pentagonal_series(10 if i % 2 else 2, order, direct.modulus)
    quotient = series_divide(direct, normalizer, order)
    offset = subsequence_offset(i)
    c = sequence(SequenceName.C, 5 ** i * (order - 1) + offset, source)
    builder.check(quotient[0] == 0, f'L_{i} constant term', 0, quotient[0])
    for n in range(order):
        expected = c[5 ** i * n + offset]
        if direct.modulus is not None:
            expected %= direct.modulus
        builder.check(quotient[n + 1] == expected, f'c({5 ** i}n + {offset}) n={n}', expected, quotient[n + 1])


def check_ladder(
        i: int,
        order: int,
        method: Method = Method.BOTH,
        mode: ArithmeticMode = ArithmeticMode.EXACT,
        spot_check: int = 10,
        source: SeriesSource = named_series,
) -> VerificationReport:
    if i < 1:
        raise ValueError(f'The ladder starts at L_1, got i = {i}')
    builder = ReportBuilder(f'ladder.L{i}', i=i, method=method.value, mode=mode.label())

    direct = l_series(i, order, Method.DIRECT, mode, source=source) if method is not Method.LADDER else None
    ladder = l_series(i, order, Method.LADDER, mode, source=source) if method is not Method.DIRECT else None

    if direct is not None and ladder is not None:
        comparison = direct.equal_upto(ladder, order)
        builder.check(comparison.equal, f'direct vs ladder at q^{comparison.exponent}', comparison.left, comparison.right)

    if direct is not None:
        subsequence_check(builder, i, direct, order, source)
        if mode is ArithmeticMode.REDUCED:
            count = min(spot_check, order)
            exact = l_series(i, count, Method.DIRECT, ArithmeticMode.EXACT, source=source)
            for n in range(count + 1):
                builder.check((exact[n] - direct[n]) % 5 ** REDUCED_EXPONENT == 0, f'exact spot check q^{n}', exact[n], direct[n])
            builder.note(f'reduced mod 5^{REDUCED_EXPONENT}, first {count} coefficients recomputed exactly')

    if ladder is not None and i in (1, 2):
        a_row, b_row = ab_tables(i).representation(i)
        builder.note(f'a({i}, j): {dict(a_row)}')
        builder.note(f'b({i}, j): {dict(b_row)}')

    return builder.build(order, (0, order))
