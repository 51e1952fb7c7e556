import logging
from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping

from typing_extensions import Self

from qspt.auxiliary.errors import QsptError
from qspt.ladder.polynomials import AjPolynomials


logger = logging.getLogger(__name__)


Row = Mapping[int, int]


class SupportOverflow(QsptError):
    def __init__(self, kind: str, row: int):
        super().__init__(f'Row {row} of table {kind} is needed but has not been extended')
        self.kind = kind
        self.row = row


@dataclass(frozen=True)
class _KindValue:
    name: str
    gamma: int
    lower_shift: int


# U_5(u t^i) = F (sum g0(i, j) t^j + rho sum g1(i, j) t^j), one table per g
class Kind(Enum):
    M = _KindValue('m', gamma=0, lower_shift=0)
    X0 = _KindValue('x0', gamma=0, lower_shift=0)
    X1 = _KindValue('x1', gamma=2, lower_shift=0)
    Y0 = _KindValue('y0', gamma=-1, lower_shift=1)
    Y1 = _KindValue('y1', gamma=1, lower_shift=1)
    Z0 = _KindValue('z0', gamma=-2, lower_shift=2)
    Z1 = _KindValue('z1', gamma=1, lower_shift=2)

    @classmethod
    def from_name(cls, name: str) -> Self:
        for kind in cls:
            if kind.value.name == name:
                return kind
        raise ValueError(f'Unknown table kind: {name}')

    def lower_index(self, i: int) -> int:
        return -(-(i + self.value.lower_shift) // 5)

    def bound(self, i: int, j: int) -> int:
        return (5 * j - i + self.value.gamma) // 3


@dataclass(frozen=True)
class _FamilyValue:
    name: str
    group: str
    a_kind: Kind
    b_kind: Kind | None
    with_rho: bool
    with_z: bool


class Family(Enum):
    F = _FamilyValue('F', 'I', Kind.M, None, with_rho=False, with_z=False)
    F_RHO = _FamilyValue('Frho', 'II', Kind.X0, Kind.X1, with_rho=True, with_z=False)
    FZ = _FamilyValue('FZ', 'III', Kind.Y0, Kind.Y1, with_rho=False, with_z=True)
    FZ_RHO = _FamilyValue('FZrho', 'IV', Kind.Z0, Kind.Z1, with_rho=True, with_z=True)

    @classmethod
    def from_name(cls, name: str) -> Self:
        for family in cls:
            if family.value.name == name:
                return family
        raise ValueError(f'Unknown family: {name}')

    @property
    def kinds(self) -> tuple[Kind, ...]:
        return tuple(kind for kind in (self.value.a_kind, self.value.b_kind) if kind is not None)


WEIGHTS = AjPolynomials.printed().weights()
SEEDED_RANGE = (-4, 0)


def _forward_row(rows: Mapping[int, Row], i: int, weights=WEIGHTS) -> dict[int, int]:
    row: defaultdict[int, int] = defaultdict(int)
    for d, shifts in weights.items():
        for j, value in rows[i - d].items():
            for e, weight in shifts.items():
                row[j + e] += weight * value
    return {j: value for j, value in sorted(row.items()) if value}


def _backward_row(rows: Mapping[int, Row], i: int, weights=WEIGHTS) -> dict[int, int]:
    (leading_shift, leading), = weights[5].items()
    row: defaultdict[int, int] = defaultdict(int)
    for j, value in rows[i + 5].items():
        row[j - leading_shift] += value
    for d in range(1, 5):
        for j, value in rows[i + 5 - d].items():
            for e, weight in weights[d].items():
                row[j + e - leading_shift] -= weight * value

    result = {}
    for j, value in sorted(row.items()):
        quotient, remainder = divmod(value, leading)
        assert not remainder, f'backward step for row {i} leaves remainder {remainder} at j={j}'
        if quotient:
            result[j] = quotient
    return result


@dataclass(frozen=True)
class CoeffTable:
    kind: Kind
    rows: Mapping[int, Row]
    seeded_range: tuple[int, int] = SEEDED_RANGE

    def row(self, i: int) -> Row:
        if i not in self.rows:
            raise SupportOverflow(self.kind.value.name, i)
        return self.rows[i]

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self.row(i).get(j, 0)

    def has_row(self, i: int) -> bool:
        return i in self.rows

    @property
    def i_range(self) -> tuple[int, int]:
        return min(self.rows), max(self.rows)

    def support(self, i: int) -> tuple[int, int] | None:
        row = self.row(i)
        return (min(row), max(row)) if row else None

    def entries(self, i_lo: int = None, i_hi: int = None):
        lo, hi = self.i_range
        for i in range(lo if i_lo is None else i_lo, (hi if i_hi is None else i_hi) + 1):
            for j, value in self.row(i).items():
                yield i, j, value

    def extended(self, i_lo: int, i_hi: int) -> Self:
        rows = dict(self.rows)
        lo, hi = self.i_range
        for i in range(hi + 1, i_hi + 1):
            rows[i] = _forward_row(rows, i)
        for i in range(lo - 1, i_lo - 1, -1):
            rows[i] = _backward_row(rows, i)
        if i_hi > hi or i_lo < lo:
            logger.debug(f'Extended {self.kind.value.name} to rows {min(rows)}..{max(rows)}')
        return CoeffTable(self.kind, rows, self.seeded_range)


@dataclass(frozen=True)
class CoefficientTables:
    tables: Mapping[Kind, CoeffTable] = field(default_factory=dict)

    def __getitem__(self, kind: Kind) -> CoeffTable:
        return self.tables[kind]

    def __iter__(self):
        return iter(self.tables.values())

    @property
    def i_range(self) -> tuple[int, int]:
        return max(t.i_range[0] for t in self), min(t.i_range[1] for t in self)

    def covers(self, i_lo: int, i_hi: int) -> bool:
        lo, hi = self.i_range
        return lo <= i_lo and i_hi <= hi

    def extended(self, i_lo: int, i_hi: int) -> Self:
        return extend_tables(self, (i_lo, i_hi))


def extend_tables(tables: CoefficientTables, i_range: tuple[int, int]) -> CoefficientTables:
    i_lo, i_hi = i_range
    lo, hi = tables.i_range
    return CoefficientTables({
        table.kind: table.extended(min(i_lo, lo), max(i_hi, hi))
        for table in tables
    })
