import pytest

from qspt.sequences.brute import (
    BudgetExceeded,
    Oracle,
    brute_force,
    brute_table,
    omega_partitions,
    oracle_check,
    partitions,
    smallest_part_count,
)
from qspt.sequences.relations import RelationId, check_relation
from qspt.sequences.tables import Provenance, SequenceName, SequenceTable, delta, p_table, sequence


def test_partition_numbers():
    assert list(p_table(20).values) == [
        1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490, 627,
    ]
    assert p_table(100)[100] == 190569292


def test_partition_numbers_are_positive():
    assert all(value >= 1 for value in p_table(300).values)


def test_delta():
    assert delta(1).delta == 4
    assert delta(2).delta == 24
    assert delta(3).delta == 99
    assert delta(3).modulus == 125
    for k in range(1, 8):
        assert 24 * delta(k).delta % 5 ** k == 1
    with pytest.raises(ValueError):
        delta(0)


def test_c_sequence():
    c = sequence(SequenceName.C, 10)
    assert list(c.values[:4]) == [1, 24, 25, 120]
    assert c[8] == 245


def test_sigma_sequence():
    assert list(sequence(SequenceName.SIGMA, 6).values) == [0, 1, 3, 4, 7, 6, 12]


def test_table_access():
    table = SequenceTable(SequenceName.P, (1, 1, 2, 3))
    assert table[-1] == 0
    assert table.last == 3
    assert table.at_half(2) == 1
    assert table.at_half(3) == 0
    with pytest.raises(IndexError):
        table[4]


def test_first_disagreement():
    left = SequenceTable(SequenceName.SPT, (0, 1, 3, 5))
    right = SequenceTable(SequenceName.SPT, (0, 1, 4, 5), Provenance.BRUTE_FORCE)
    assert left.first_disagreement(right) == 2
    assert left.first_disagreement(left) is None
    assert left.first_disagreement(right, start=3) is None


def test_partition_enumeration():
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert sum(1 for _ in partitions(15)) == 176
    assert smallest_part_count((3, 2, 2)) == 2


def test_omega_partitions():
    assert sorted(p for s in range(1, 4) for p in omega_partitions(3, s)) == [(1, 1, 1), (2, 1), (3,)]
    assert list(omega_partitions(5, 2)) == [(3, 2)]
    assert list(omega_partitions(7, 2)) == [(3, 2, 2)]


def test_brute_force_values():
    assert [brute_force(Oracle.SPT, n) for n in range(1, 7)] == [1, 3, 5, 10, 14, 26]
    assert [brute_force(Oracle.SPT_OMEGA, n) for n in range(1, 4)] == [1, 3, 5]
    assert [brute_force(Oracle.P_OMEGA, n) for n in range(1, 4)] == [1, 2, 3]
    assert brute_force(Oracle.SPT, 0) == 0


def test_brute_force_budget():
    with pytest.raises(BudgetExceeded):
        brute_force(Oracle.SPT, 61)


def test_brute_table_provenance():
    table = brute_table(Oracle.SPT, 5)
    assert table.provenance is Provenance.BRUTE_FORCE
    assert table.name is SequenceName.SPT
    assert table.first_disagreement(sequence(SequenceName.SPT, 5)) is None


@pytest.mark.parametrize('oracle', list(Oracle))
def test_oracles_agree_with_generating_functions(oracle):
    report = oracle_check(oracle, 25)
    assert report.passed, report.failures


@pytest.mark.slow
@pytest.mark.parametrize('oracle', [Oracle.SPT, Oracle.P_OMEGA, Oracle.SPT_OMEGA])
def test_oracles_agree_to_forty(oracle):
    assert oracle_check(oracle, 40).passed


@pytest.mark.parametrize('relation', list(RelationId))
def test_relations(relation):
    report = check_relation(relation, 120)
    assert report.passed, report.failures


@pytest.mark.slow
@pytest.mark.parametrize('relation', [RelationId.SPT_SPLIT, RelationId.C_ODD, RelationId.C5_DIRECT])
def test_relations_at_full_order(relation):
    assert check_relation(relation, 500).passed
