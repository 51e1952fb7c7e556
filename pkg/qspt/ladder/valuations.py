import logging
from enum import Enum

from qspt.auxiliary.errors import QsptError
from qspt.ladder.appendix import seed_tables
from qspt.ladder.ladder import LadderState, ab_tables
from qspt.ladder.tables import WEIGHTS, CoefficientTables, Kind, SEEDED_RANGE
from qspt.series.laurent import INFINITY, Valuation, padic_valuation
from qspt.verify.report import ReportBuilder, VerificationReport


logger = logging.getLogger(__name__)


TIGHTEST_REPORTED = 5
# the tables are exact integers, no series truncation is involved
TABLE_ORDER = 0


class BoundViolation(QsptError):
    def __init__(self, kind: str, i: int, j: int, value: int, bound: int):
        super().__init__(f'{kind}({i}, {j}) = {value} has 5-adic order below {bound}')
        self.kind = kind
        self.i = i
        self.j = j
        self.value = value
        self.bound = bound


class LadderKind(Enum):
    A = 'a'
    B = 'b'

    def bound(self, i: int, j: int) -> int:
        match self, i % 2:
            case LadderKind.A, 1:
                return i + (5 * j - 5) // 3
            case LadderKind.A, 0:
                return i + (5 * j - 4) // 3
            case LadderKind.B, 1:
                return i + (5 * j - 3) // 3
            case LadderKind.B, 0:
                return i + 1 + (5 * j - 5) // 3


def _record(builder: ReportBuilder, tightest: list, name: str, i: int, j: int, value: int, bound: int, strict: bool = False):
    valuation = padic_valuation(value)
    if strict and valuation < bound:
        raise BoundViolation(name, i, j, value, bound)
    builder.check(valuation >= bound, f'{name}({i}, {j})', f'order >= {bound}', f'order {valuation} of {value}')
    if valuation is not INFINITY:
        tightest.append((valuation - bound, name, i, j, valuation))


def _tightest_notes(builder: ReportBuilder, tightest: list):
    for slack, name, i, j, valuation in sorted(tightest)[:TIGHTEST_REPORTED]:
        builder.note(f'tightest: {name}({i}, {j}) has order {valuation}, slack {slack}')


def valuation_check(
        kind: Kind,
        i_range: tuple[int, int],
        j_range: tuple[int, int] = None,
        tables: CoefficientTables = None,
        strict: bool = False,
) -> VerificationReport:
    i_lo, i_hi = i_range
    builder = ReportBuilder(f'valuations.{kind.value.name}', kind=kind.value.name, i_lo=i_lo, i_hi=i_hi)
    if j_range is not None:
        builder.params.update(j_lo=j_range[0], j_hi=j_range[1])
    tables = (tables or seed_tables()).extended(i_lo, i_hi)
    tightest = []
    for i, j, value in tables[kind].entries(i_lo, i_hi):
        if j_range is None or j_range[0] <= j <= j_range[1]:
            _record(builder, tightest, kind.value.name, i, j, value, kind.bound(i, j), strict)
        builder.check(j >= kind.lower_index(i), f'{kind.value.name}({i}, {j}) support', f'j >= {kind.lower_index(i)}', j)
    _tightest_notes(builder, tightest)
    return builder.build(TABLE_ORDER, i_range)


def ladder_valuation_check(kind: LadderKind, i_max: int, state: LadderState = None, strict: bool = False) -> VerificationReport:
    builder = ReportBuilder(f'valuations.{kind.value}', kind=kind.value, i_max=i_max)
    if state is None or state.i_max < i_max:
        state = ab_tables(i_max)
    rows = state.a if kind is LadderKind.A else state.b
    tightest = []
    for i in range(1, i_max + 1):
        for j, value in rows[i].items():
            _record(builder, tightest, kind.value, i, j, value, kind.bound(i, j), strict)
    _tightest_notes(builder, tightest)
    return builder.build(TABLE_ORDER, (1, i_max))


def implied_bound(kind: Kind, i: int, j: int) -> Valuation:
    lo, hi = SEEDED_RANGE
    if i > hi:
        terms = (
            (kind.bound(i - d, j - e) + padic_valuation(weight))
            for d, shifts in WEIGHTS.items()
            for e, weight in shifts.items()
        )
    elif i < lo:
        (shift, _), = WEIGHTS[5].items()
        terms = [kind.bound(i + 5, j + shift)] + [
            kind.bound(i + 5 - d, j + shift - e) + padic_valuation(weight)
            for d in range(1, 5)
            for e, weight in WEIGHTS[d].items()
        ]
    else:
        return kind.bound(i, j)
    return min(terms, default=INFINITY)


def induction_check(kind: Kind, i_range: tuple[int, int], tables: CoefficientTables = None) -> VerificationReport:
    i_lo, i_hi = i_range
    builder = ReportBuilder(f'induction.{kind.value.name}', kind=kind.value.name, i_lo=i_lo, i_hi=i_hi)
    tables = (tables or seed_tables()).extended(i_lo, i_hi)
    lo, hi = SEEDED_RANGE
    for i, j, value in tables[kind].entries(i_lo, i_hi):
        if lo <= i <= hi:
            continue
        implied = implied_bound(kind, i, j)
        builder.check(implied >= kind.bound(i, j), f'{kind.value.name}({i}, {j}) implied', f'>= {kind.bound(i, j)}', implied)
        builder.check(padic_valuation(value) >= implied, f'{kind.value.name}({i}, {j}) actual', f'>= {implied}', padic_valuation(value))
    return builder.build(TABLE_ORDER, i_range)
