import pytest

from qspt.ladder.appendix import SEEDS, recurrence_check, seed_tables, verify_appendix
from qspt.ladder.basis import Basis, base_order_for, fit_f_rho_t, u5_basis_check
from qspt.ladder.congruences import (
    CongruenceFailure,
    Parity,
    Progression,
    classical_scan,
    congruence_scan,
    garvan_scan,
    progression,
)
from qspt.ladder.ladder import A1, B1, Method, ab_tables, check_ladder, direct_base_order, subsequence_offset
from qspt.ladder.polynomials import AjPolynomials, Polynomial, newton_aj_check
from qspt.ladder.tables import WEIGHTS, CoeffTable, CoefficientTables, Family, Kind, SupportOverflow
from qspt.ladder.valuations import BoundViolation, LadderKind, induction_check, ladder_valuation_check, valuation_check
from qspt.sequences.tables import SequenceName, SequenceTable
from qspt.series.laurent import ArithmeticMode, LaurentSeries


def test_printed_aj_polynomials():
    aj = AjPolynomials.printed()
    assert aj[0] == Polynomial({1: -1})
    assert aj[4][5] == -5 ** 8


def test_recurrence_weights():
    assert WEIGHTS[1] == {1: 175, 2: 3500, 3: 34375, 4: 156250, 5: 390625}
    assert WEIGHTS[5] == {1: 1}


def test_newton_chain():
    assert newton_aj_check(30).passed


def test_seed_values():
    tables = seed_tables()
    assert tables[Kind.M][0, 1] == 20
    assert tables[Kind.X1][-1, 1] == 25
    assert tables[Kind.Y0][0, 1] == -5
    assert tables[Kind.Y1].row(0) == {}
    assert tables.i_range == (-4, 0)
    assert set(SEEDS) == set(Kind)


def test_seeds_verified_on_request():
    assert seed_tables(verify_order=30).i_range == (-4, 0)


def test_rows_outside_the_seeds_need_extension():
    with pytest.raises(SupportOverflow):
        seed_tables()[Kind.M].row(1)
    extended = seed_tables().extended(-6, 3)
    assert extended.covers(-6, 3)
    assert extended[Kind.M].row(0) == SEEDS[Kind.M][0]


def test_kind_bounds():
    assert Kind.M.bound(0, 1) == 1
    assert Kind.X1.bound(0, 0) == 0
    assert Kind.Z0.bound(-4, 0) == 0
    assert Kind.M.lower_index(5) == 1
    assert Kind.Y0.lower_index(4) == 1
    assert Kind.Z0.lower_index(-4) == 0
    assert Kind.from_name('y1') is Kind.Y1
    with pytest.raises(ValueError):
        Kind.from_name('w')


def test_families():
    assert [family.value.group for family in Family] == ['I', 'II', 'III', 'IV']
    assert Family.F.kinds == (Kind.M,)
    assert Family.FZ_RHO.kinds == (Kind.Z0, Kind.Z1)
    assert Family.from_name('Frho') is Family.F_RHO


def test_appendix_identities():
    reports = verify_appendix(40)
    assert len(reports) == 20
    assert all(report.passed for report in reports), [r.task for r in reports if not r.passed]


@pytest.mark.parametrize('family', list(Family))
def test_seed_row_against_direct_expansion(family):
    assert u5_basis_check(family, -2, 30, seed_tables()).passed


@pytest.mark.parametrize('family', list(Family))
def test_recurrence_rows(family):
    reports = recurrence_check(family, (-6, 6), 30)
    assert len(reports) == 13
    assert all(report.passed for report in reports), [r.task for r in reports if not r.passed]


def test_fit_recovers_seed_row():
    basis = Basis(base_order_for(30, -1))
    a, b = fit_f_rho_t(basis.u5(Family.F, -1), basis, (-1, 3), 30)
    assert a == Polynomial({0: -3, 1: -75, 2: -125})
    assert not b


def test_fit_recovers_a_mixed_combination():
    basis = Basis(base_order_for(30, -1))
    target = basis.combination({-1: 2, 1: 7}, {2: -3}, 30)
    assert fit_f_rho_t(target, basis, (-1, 3), 30) == (Polynomial({-1: 2, 1: 7}), Polynomial({2: -3}))
    assert fit_f_rho_t(target + LaurentSeries.monomial(17, 30), basis, (-1, 3), 30) is None


def test_subsequence_offsets():
    assert [subsequence_offset(i) for i in range(1, 5)] == [3, 23, 73, 573]


def test_direct_base_order():
    assert direct_base_order(0, 10) == 10
    assert direct_base_order(2, 10) == 274


def test_ab_tables():
    state = ab_tables(3)
    assert state.a[1] == A1
    assert state.b[1] == B1
    assert state.i_max == 3
    assert all(value % 25 == 0 for j, value in state.a[2].items() if j >= 1)


def test_ladder_first_rungs():
    report = check_ladder(1, 30)
    assert report.passed
    assert f'a(1, j): {A1}' in report.notes
    assert f'b(1, j): {B1}' in report.notes
    assert check_ladder(2, 20).passed


def test_ladder_single_method():
    assert check_ladder(1, 20, Method.DIRECT).passed
    assert check_ladder(1, 20, Method.LADDER).passed


def test_ladder_rejects_index_zero():
    with pytest.raises(ValueError):
        check_ladder(0, 10)


@pytest.mark.slow
def test_ladder_longer_runs():
    assert check_ladder(1, 100).passed
    assert check_ladder(3, 60, mode=ArithmeticMode.REDUCED).passed


def test_ladder_kind_bounds():
    assert LadderKind.A.bound(1, 1) == 1
    assert LadderKind.A.bound(1, 2) == 2
    assert LadderKind.B.bound(1, 1) == 1
    assert LadderKind.A.bound(2, 1) == 2


@pytest.mark.parametrize('kind', list(Kind))
def test_table_valuations(kind):
    assert valuation_check(kind, (-6, 6)).passed
    assert induction_check(kind, (-6, 6)).passed


@pytest.mark.parametrize('kind', list(LadderKind))
def test_ladder_valuations(kind):
    report = ladder_valuation_check(kind, 4)
    assert report.passed
    assert any(note.startswith('tightest') for note in report.notes)


def test_valuation_reports_record_rows_not_orders():
    report = valuation_check(Kind.X0, (-2, 3), j_range=(0, 4))
    assert report.order_checked == 0
    assert report.range_checked == (-2, 3)
    assert (report.params['i_lo'], report.params['i_hi'], report.params['j_hi']) == (-2, 3, 4)
    assert induction_check(Kind.M, (-6, 6)).order_checked == 0
    assert ladder_valuation_check(LadderKind.B, 3).params['i_max'] == 3


def test_strict_valuation_raises():
    fake = CoefficientTables({Kind.M: CoeffTable(Kind.M, {0: {0: 1, 1: 4}})})
    assert not valuation_check(Kind.M, (0, 0), tables=fake).passed
    with pytest.raises(BoundViolation):
        valuation_check(Kind.M, (0, 0), tables=fake, strict=True)


def test_progressions():
    assert progression(SequenceName.C, 1, Parity.ODD_POWER) == Progression(5, 3, 5)
    assert progression(SequenceName.SPT_C5, 1, Parity.EVEN_POWER) == Progression(25, 23, 25)
    assert progression(SequenceName.SPT_OMEGA, 1, Parity.ODD_POWER) == Progression(10, 3, 5)
    assert progression(SequenceName.SPT_OMEGA, 1, Parity.DELTA) == Progression(10, 8, 5)
    assert progression(SequenceName.C, 2, Parity.EVEN_POWER) == Progression(625, 573, 25)
    assert progression(SequenceName.SPT_OMEGA, 2, Parity.ODD_POWER) == Progression(250, 73, 25)
    assert progression(SequenceName.SPT_OMEGA, 2, Parity.EVEN_POWER) == Progression(1250, 573, 25)
    assert progression(SequenceName.P, 2, Parity.DELTA) == Progression(25, 24, 25)
    assert progression(SequenceName.SPT, 3, Parity.DELTA) == Progression(125, 99, 25)
    with pytest.raises(ValueError):
        progression(SequenceName.C, 1, Parity.DELTA)
    with pytest.raises(ValueError):
        progression(SequenceName.C, 0, Parity.ODD_POWER)


def test_congruence_scans():
    report = congruence_scan(SequenceName.C, 1, Parity.ODD_POWER, 200)
    assert report.passed
    assert len(report.scanned) == 201
    assert congruence_scan(SequenceName.SPT_C5, 1, Parity.EVEN_POWER, 100).passed
    assert congruence_scan(SequenceName.SPT_OMEGA, 1, Parity.DELTA, 150).passed
    assert congruence_scan(SequenceName.P, 2, Parity.DELTA, 40).passed


@pytest.mark.slow
@pytest.mark.parametrize('name', [SequenceName.C, SequenceName.SPT_C5, SequenceName.SPT_OMEGA])
@pytest.mark.parametrize('parity, n_max', [(Parity.ODD_POWER, 20), (Parity.EVEN_POWER, 8)])
def test_second_power_scans(name, parity, n_max):
    report = congruence_scan(name, 2, parity, n_max)
    assert report.passed, report.failures
    assert report.order_checked == progression(name, 2, parity).argument(n_max)
    assert [point.modulus for point in report.scanned] == ['25'] * (n_max + 1)


def test_strict_scan_raises():
    fake = SequenceTable(SequenceName.C, tuple(range(20)))
    report = congruence_scan(SequenceName.C, 1, Parity.ODD_POWER, 2, table=fake)
    assert not report.passed
    with pytest.raises(CongruenceFailure):
        congruence_scan(SequenceName.C, 1, Parity.ODD_POWER, 2, table=fake, strict=True)


def test_classical_congruences():
    reports = classical_scan(100)
    assert len(reports) == 5
    assert all(report.passed for report in reports)
    assert reports[0].task == 'congruence.spt.5n+4'


def test_garvan_congruence():
    assert garvan_scan(3, 10).passed
    with pytest.raises(ValueError):
        garvan_scan(2, 10)
