import logging
from dataclasses import dataclass
from enum import Enum

import gmpy2

from qspt.forms.eta import divisor_sums, pentagonal_series
from qspt.forms.named import NamedFunction, SeriesSource, named_series
from qspt.series.laurent import LaurentSeries, series_divide


logger = logging.getLogger(__name__)


class Provenance(Enum):
    GENERATING_FUNCTION = 'generating_function'
    BRUTE_FORCE = 'brute_force'


class SequenceName(Enum):
    P = 'p'
    SIGMA = 'sigma'
    C = 'c'
    SPT = 'spt'
    SPT_OMEGA = 'spt_omega'
    SPT_C5 = 'spt_c5'
    P_OMEGA = 'p_omega'


@dataclass(frozen=True)
class SequenceTable:
    name: SequenceName
    values: tuple[int, ...]
    provenance: Provenance = Provenance.GENERATING_FUNCTION

    def __getitem__(self, n: int) -> int:
        if n < 0:
            return 0
        if n >= len(self.values):
            raise IndexError(f'{self.name.value}({n}) is past the end of a table of length {len(self.values)}')
        return self.values[n]

    def __len__(self):
        return len(self.values)

    @property
    def last(self) -> int:
        return len(self.values) - 1

    def at_half(self, n: int) -> int:
        return self[n // 2] if n % 2 == 0 else 0

    def first_disagreement(self, other: 'SequenceTable', start: int = 0) -> int | None:
        for n in range(start, min(len(self), len(other))):
            if self.values[n] != other.values[n]:
                return n
        return None


@dataclass(frozen=True)
class DeltaValue:
    k: int
    delta: int

    @property
    def modulus(self) -> int:
        return 5 ** self.k


def delta(k: int) -> DeltaValue:
    if k < 1:
        raise ValueError(f'delta_k needs k >= 1, got {k}')
    return DeltaValue(k, int(gmpy2.invert(24, 5 ** k)))


def p_table(order: int) -> SequenceTable:
    values = [1] + [0] * order
    for n in range(1, order + 1):
        total, k = 0, 1
        while k * (3 * k - 1) // 2 <= n:
            sign = 1 if k % 2 else -1
            total += sign * values[n - k * (3 * k - 1) // 2]
            if k * (3 * k + 1) // 2 <= n:
                total += sign * values[n - k * (3 * k + 1) // 2]
            k += 1
        values[n] = total
    return SequenceTable(SequenceName.P, tuple(values))


def _table(name: SequenceName, series: LaurentSeries, order: int) -> SequenceTable:
    return SequenceTable(name, tuple(series.coefficients(0, order)))


def sequence(name: SequenceName, order: int, source: SeriesSource = named_series) -> SequenceTable:
    match name:
        case SequenceName.P:
            return p_table(order)
        case SequenceName.SIGMA:
            return SequenceTable(name, divisor_sums(order))
        case SequenceName.C:
            l0 = source(NamedFunction.L0, order)
            return _table(name, series_divide(l0, pentagonal_series(2, order), order), order)
        case SequenceName.SPT:
            return _table(name, source(NamedFunction.SPT_GEN, order), order)
        case SequenceName.SPT_OMEGA:
            return _table(name, source(NamedFunction.SPT_OMEGA_GEN, order), order)
        case SequenceName.SPT_C5:
            return _table(name, source(NamedFunction.SPT_C5_GEN, order), order)
        case SequenceName.P_OMEGA:
            return _table(name, source(NamedFunction.OMEGA, order).shift(1), order)
        case _:
            raise ValueError(f'Unknown sequence: {name}')
