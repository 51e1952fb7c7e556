import logging
from enum import Enum

from qspt.config.config import config
from qspt.forms.identities import rho_quadratic_check, t_construction_check
from qspt.forms.named import SeriesSource, named_series
from qspt.ladder.appendix import recurrence_check, verify_appendix
from qspt.ladder.congruences import Parity, classical_scan, congruence_scan, garvan_scan, progression
from qspt.ladder.polynomials import newton_aj_check
from qspt.ladder.tables import Family, Kind
from qspt.ladder.valuations import LadderKind, induction_check, ladder_valuation_check, valuation_check
from qspt.sequences.relations import RelationId, check_relation
from qspt.sequences.tables import SequenceName
from qspt.verify.tasks import Task


logger = logging.getLogger(__name__)


class Theorem(Enum):
    C = 'c'
    C5 = 'c5'
    OMEGA = 'omega'
    GARVAN = 'garvan'
    RELATIONS = 'relations'
    P = 'p'
    SPT = 'spt'
    CLASSICAL = 'classical'


FALLBACK_NMAX = 4


def scan_nmax(parity: Parity, k: int, nmax: int = None) -> int:
    if nmax is not None:
        return nmax
    if parity is Parity.DELTA:
        return config.getint('Theorems', 'delta_nmax', default=150)
    prefix = 'odd' if parity is Parity.ODD_POWER else 'even'
    return config.getint('Theorems', f'{prefix}_nmax_k{k}', default=FALLBACK_NMAX)


def appendix_tasks(order: int, source: SeriesSource = named_series) -> list[Task]:
    return [
        Task(f'appendix.{family.value.group}', verify_appendix, dict(order=order, source=source, families=(family,)))
        for family in Family
    ]


def lemma_tasks(order: int, source: SeriesSource = named_series) -> list[Task]:
    i_range = (
        config.getint('Theorems', 'lemma_index_min', default=-6),
        config.getint('Theorems', 'lemma_index_max', default=6),
    )
    basis_order = min(order, config.getint('Theorems', 'basis_order', default=100))
    ladder_max = config.getint('Theorems', 'ladder_index_max', default=4)

    tasks = [
        Task('lemmas.rho_quadratic', rho_quadratic_check, dict(order=order, source=source)),
        Task('lemmas.t_paths', t_construction_check, dict(order=order, source=source)),
        Task('lemmas.newton_aj', newton_aj_check, dict(order=order)),
        Task('relation.E2_DISSECT', check_relation, dict(relation=RelationId.E2_DISSECT, order=order, source=source)),
        Task('relation.SIGMA_DOUBLE', check_relation, dict(relation=RelationId.SIGMA_DOUBLE, order=order, source=source)),
    ]
    tasks += [
        Task(f'basis.{family.value.name}', recurrence_check, dict(family=family, i_range=i_range, order=basis_order, source=source))
        for family in Family
    ]
    for kind in Kind:
        tasks.append(Task(f'valuations.{kind.value.name}', valuation_check, dict(kind=kind, i_range=i_range)))
        tasks.append(Task(f'induction.{kind.value.name}', induction_check, dict(kind=kind, i_range=i_range)))
    tasks += [
        Task(f'valuations.{kind.value}', ladder_valuation_check, dict(kind=kind, i_max=ladder_max))
        for kind in LadderKind
    ]
    return tasks


def _scan_tasks(name: SequenceName, k: int, parities: tuple[Parity, ...], nmax: int, source: SeriesSource) -> list[Task]:
    return [
        Task(
            f'congruence.{name.value}.{parity.value}',
            congruence_scan,
            dict(name=name, k=k, parity=parity, n_max=scan_nmax(parity, k, nmax), source=source),
        )
        for parity in parities
    ]


def scan_reach(name: SequenceName, k: int, parities: tuple[Parity, ...], nmax: int = None) -> int:
    return max(progression(name, k, parity).argument(scan_nmax(parity, k, nmax)) for parity in parities)


def _relation_tasks(relations: tuple[RelationId, ...], order: int, source: SeriesSource) -> list[Task]:
    return [
        Task(f'relation.{relation.value}', check_relation, dict(relation=relation, order=order, source=source))
        for relation in relations
    ]


def theorem_tasks(which: Theorem, k: int, nmax: int = None, source: SeriesSource = named_series) -> list[Task]:
    relations_order = nmax if nmax is not None else config.getint('Theorems', 'relations_nmax', default=500)
    both = (Parity.ODD_POWER, Parity.EVEN_POWER)

    match which:
        case Theorem.C:
            return _scan_tasks(SequenceName.C, k, both, nmax, source)
        case Theorem.C5:
            # the E2 form scanned here is tied to c(n) over every argument the scans reach
            reach = scan_reach(SequenceName.SPT_C5, k, both, nmax)
            return (
                _scan_tasks(SequenceName.SPT_C5, k, both, nmax, source) +
                _relation_tasks((RelationId.C5_FROM_C,), max(relations_order, reach), source) +
                _relation_tasks((RelationId.C5_ROUTES, RelationId.C5_DIRECT), relations_order, source)
            )
        case Theorem.OMEGA:
            return (
                _scan_tasks(SequenceName.SPT_OMEGA, k, both + (Parity.DELTA,), nmax, source) +
                _relation_tasks((RelationId.C_ODD, RelationId.ODD_GEN, RelationId.ODD_EQUAL, RelationId.EVEN_SPLIT), relations_order, source)
            )
        case Theorem.GARVAN:
            n_max = nmax if nmax is not None else config.getint('Theorems', 'garvan_nmax', default=10)
            return [Task('congruence.garvan', garvan_scan, dict(k=k, n_max=n_max))]
        case Theorem.CLASSICAL:
            n_max = nmax if nmax is not None else config.getint('Theorems', 'classical_nmax', default=300)
            return [Task('congruence.classical', classical_scan, dict(n_max=n_max, source=source))]
        case Theorem.RELATIONS:
            return _relation_tasks(tuple(RelationId), relations_order, source)
        case Theorem.P:
            return _scan_tasks(SequenceName.P, k, (Parity.DELTA,), nmax, source)
        case Theorem.SPT:
            return _scan_tasks(SequenceName.SPT, k, (Parity.DELTA,), nmax, source)
        case _:
            raise ValueError(f'Unknown theorem: {which}')
