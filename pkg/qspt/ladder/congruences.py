import logging
from dataclasses import dataclass
from enum import Enum

from qspt.auxiliary.errors import QsptError
from qspt.forms.named import SeriesSource, named_series
from qspt.sequences.tables import SequenceName, SequenceTable, delta, sequence
from qspt.verify.report import ReportBuilder, VerificationReport


logger = logging.getLogger(__name__)


class CongruenceFailure(QsptError):
    def __init__(self, name: str, n: int, modulus: int):
        super().__init__(f'{name} fails to vanish mod {modulus} at n = {n}')
        self.name = name
        self.n = n
        self.modulus = modulus


class Parity(Enum):
    ODD_POWER = 'odd_power'
    EVEN_POWER = 'even_power'
    DELTA = 'delta'


@dataclass(frozen=True)
class Progression:
    multiplier: int
    offset: int
    modulus: int

    def argument(self, n: int) -> int:
        return self.multiplier * n + self.offset

    def __str__(self):
        return f'{self.multiplier}n + {self.offset} mod {self.modulus}'


def _ladder_progression(k: int, parity: Parity) -> Progression:
    if parity is Parity.ODD_POWER:
        power = 5 ** (2 * k - 1)
        return Progression(power, (7 * power + 1) // 12, power)
    power = 5 ** (2 * k)
    return Progression(power, (11 * power + 1) // 12, power)


def progression(name: SequenceName, k: int, parity: Parity) -> Progression:
    if k < 1:
        raise ValueError(f'Congruences are indexed by k >= 1, got {k}')

    match name, parity:
        case (SequenceName.C | SequenceName.SPT_C5), (Parity.ODD_POWER | Parity.EVEN_POWER):
            return _ladder_progression(k, parity)
        case SequenceName.SPT_OMEGA, (Parity.ODD_POWER | Parity.EVEN_POWER):
            ladder = _ladder_progression(k, parity)
            return Progression(2 * ladder.multiplier, ladder.offset, ladder.modulus)
        case SequenceName.SPT_OMEGA, Parity.DELTA:
            d = delta(k)
            return Progression(2 * d.modulus, 2 * d.delta, 5 ** ((k + 1) // 2))
        case SequenceName.SPT, Parity.DELTA:
            d = delta(k)
            return Progression(d.modulus, d.delta, 5 ** ((k + 1) // 2))
        case SequenceName.P, Parity.DELTA:
            d = delta(k)
            return Progression(d.modulus, d.delta, d.modulus)
        case _:
            raise ValueError(f'No congruence family for {name.value} with {parity.value}')


def congruence_scan(
        name: SequenceName,
        k: int,
        parity: Parity,
        n_max: int,
        source: SeriesSource = named_series,
        table: SequenceTable = None,
        strict: bool = False,
) -> VerificationReport:
    builder = ReportBuilder(f'congruence.{name.value}.{parity.value}', seq=name.value, k=k, parity=parity.value, nmax=n_max)
    return _scan(builder, name, progression(name, k, parity), n_max, source, table, strict)


def _scan(
        builder: ReportBuilder,
        name: SequenceName,
        scanned: Progression,
        n_max: int,
        source: SeriesSource,
        table: SequenceTable = None,
        strict: bool = False,
) -> VerificationReport:
    largest = scanned.argument(n_max)
    if table is None or table.last < largest:
        table = sequence(name, largest, source)

    for n in range(n_max + 1):
        argument = scanned.argument(n)
        residue = table[argument] % scanned.modulus
        builder.scan(n, argument, scanned.modulus, residue)
        if residue and strict:
            raise CongruenceFailure(name.value, n, scanned.modulus)
        builder.check(residue == 0, f'{name.value}({argument})', f'0 mod {scanned.modulus}', table[argument])

    builder.note(f'{name.value}({scanned}) for n <= {n_max}')
    return builder.build(largest, (0, n_max))


CLASSICAL_PROGRESSIONS = (
    (SequenceName.SPT, Progression(5, 4, 5)),
    (SequenceName.SPT_OMEGA, Progression(5, 3, 5)),
    (SequenceName.SPT_OMEGA, Progression(10, 7, 5)),
    (SequenceName.SPT_OMEGA, Progression(10, 9, 5)),
    (SequenceName.SPT_C5, Progression(5, 3, 5)),
)


def classical_scan(n_max: int, source: SeriesSource = named_series) -> list[VerificationReport]:
    reports = []
    for name, scanned in CLASSICAL_PROGRESSIONS:
        builder = ReportBuilder(
            f'congruence.{name.value}.{scanned.multiplier}n+{scanned.offset}',
            seq=name.value,
            multiplier=scanned.multiplier,
            offset=scanned.offset,
            nmax=n_max,
        )
        reports.append(_scan(builder, name, scanned, n_max, source))
    return reports


def garvan_scan(k: int, n_max: int, table: SequenceTable = None) -> VerificationReport:
    # spt(5^k n + delta_k) + 5 spt(5^(k-2) n + delta_(k-2)) = 0 mod 5^(2k-3)
    if k < 3:
        raise ValueError(f'The combined spt congruence needs k >= 3, got {k}')
    high, low = delta(k), delta(k - 2)
    modulus = 5 ** (2 * k - 3)
    builder = ReportBuilder('congruence.garvan', k=k, nmax=n_max)
    largest = high.modulus * n_max + high.delta
    if table is None or table.last < largest:
        table = sequence(SequenceName.SPT, largest)

    for n in range(n_max + 1):
        argument = high.modulus * n + high.delta
        combined = table[argument] + 5 * table[low.modulus * n + low.delta]
        builder.scan(n, argument, modulus, combined % modulus)
        builder.check(combined % modulus == 0, f'n={n}', f'0 mod {modulus}', combined)

    builder.note(f'spt({high.modulus}n + {high.delta}) + 5 spt({low.modulus}n + {low.delta}) mod {modulus}')
    return builder.build(largest, (0, n_max))
