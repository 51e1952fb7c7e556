import logging
from enum import Enum
from typing import Callable, Iterator

from qspt.auxiliary.errors import QsptError
from qspt.forms.named import SeriesSource, display_sum, named_series
from qspt.sequences.tables import Provenance, SequenceName, SequenceTable, sequence
from qspt.verify.report import ReportBuilder, VerificationReport


logger = logging.getLogger(__name__)


ENUMERATION_CAP = 60

Partition = tuple[int, ...]
PartFilter = Callable[[int], bool]


class BudgetExceeded(QsptError):
    def __init__(self, n: int, cap: int = ENUMERATION_CAP):
        super().__init__(f'Brute force is capped at n = {cap}, got n = {n}')
        self.n = n
        self.cap = cap


class Oracle(Enum):
    SPT = 'spt'
    P_OMEGA = 'p_omega'
    SPT_OMEGA = 'spt_omega'
    SPT_C5_DIRECT = 'spt_c5_direct'


def partitions(n: int, largest: int = None, allowed: PartFilter = None) -> Iterator[Partition]:
    largest = n if largest is None else min(largest, n)
    if n == 0:
        yield ()
        return
    for part in range(largest, 0, -1):
        if allowed is not None and not allowed(part):
            continue
        for rest in partitions(n - part, part, allowed):
            yield (part,) + rest


def omega_partitions(n: int, smallest: int) -> Iterator[Partition]:
    def allowed(part: int) -> bool:
        return part >= smallest and (part % 2 == 0 or part < 2 * smallest)

    if not allowed(smallest):
        return
    for rest in partitions(n - smallest, n - smallest, allowed):
        yield rest + (smallest,)


def smallest_part_count(partition: Partition) -> int:
    return partition.count(partition[-1]) if partition else 0


def brute_spt(n: int) -> int:
    return sum(smallest_part_count(partition) for partition in partitions(n))


def brute_p_omega(n: int) -> int:
    return sum(1 for smallest in range(1, n + 1) for _ in omega_partitions(n, smallest))


def brute_spt_omega(n: int) -> int:
    return sum(
        smallest_part_count(partition)
        for smallest in range(1, n + 1)
        for partition in omega_partitions(n, smallest)
    )


def spt_c5_direct(n: int) -> int:
    return display_sum(n, lambda k: k * (k + 1) // 2, smallest_power=2)[n]


def brute_force(name: Oracle, n: int) -> int:
    if n > ENUMERATION_CAP:
        raise BudgetExceeded(n)
    if n < 1:
        return 0
    match name:
        case Oracle.SPT:
            return brute_spt(n)
        case Oracle.P_OMEGA:
            return brute_p_omega(n)
        case Oracle.SPT_OMEGA:
            return brute_spt_omega(n)
        case Oracle.SPT_C5_DIRECT:
            return spt_c5_direct(n)
        case _:
            raise ValueError(f'Unknown oracle: {name}')


ORACLE_SEQUENCES = {
    Oracle.SPT: SequenceName.SPT,
    Oracle.P_OMEGA: SequenceName.P_OMEGA,
    Oracle.SPT_OMEGA: SequenceName.SPT_OMEGA,
    Oracle.SPT_C5_DIRECT: SequenceName.SPT_C5,
}


def brute_table(name: Oracle, n_max: int) -> SequenceTable:
    return SequenceTable(ORACLE_SEQUENCES[name], tuple(brute_force(name, n) for n in range(n_max + 1)), Provenance.BRUTE_FORCE)


def oracle_check(name: Oracle, n_max: int, source: SeriesSource = named_series) -> VerificationReport:
    if n_max > ENUMERATION_CAP and name is not Oracle.SPT_C5_DIRECT:
        raise BudgetExceeded(n_max)
    builder = ReportBuilder(f'oracle.{name.value}', oracle=name.value, nmax=n_max)
    brute = brute_table(name, n_max) if name is not Oracle.SPT_C5_DIRECT else SequenceTable(
        SequenceName.SPT_C5,
        tuple(display_sum(n_max, lambda k: k * (k + 1) // 2, smallest_power=2).coefficients(0, n_max)),
        Provenance.BRUTE_FORCE,
    )
    generated = sequence(ORACLE_SEQUENCES[name], n_max, source)
    for n in range(1, n_max + 1):
        builder.check(brute[n] == generated[n], f'n={n}', brute[n], generated[n])
    disagreement = brute.first_disagreement(generated, start=1)
    if disagreement is not None:
        builder.note(f'first disagreement at n={disagreement}')
    return builder.build(n_max, (1, n_max))
