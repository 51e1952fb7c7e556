import logging

from qspt.auxiliary.errors import QsptError
from qspt.forms.named import SeriesSource, named_series
from qspt.ladder.basis import Basis, base_order_for, fit_f_rho_t, u5_basis_check
from qspt.ladder.tables import CoeffTable, CoefficientTables, Family, Kind, SEEDED_RANGE
from qspt.verify.report import VerificationReport


logger = logging.getLogger(__name__)


class SeedVerificationFailure(QsptError):
    def __init__(self, group: str, row: int, exponent: int | None):
        super().__init__(f'Seed row {row} of group {group} disagrees with the direct expansion at q^{exponent}')
        self.group = group
        self.row = row
        self.exponent = exponent


SEEDS: dict[Kind, dict[int, dict[int, int]]] = {
    Kind.M: {
        0: {0: 1, 1: 4 * 5},
        -1: {0: -3, 1: -3 * 5 ** 2, 2: -5 ** 3},
        -2: {0: 1, 1: 5 ** 2, 3: -5 ** 5},
        -3: {0: 9 * 5, 1: 9 * 5 ** 3, 4: -5 ** 7},
        -4: {0: -51 * 5, 1: -51 * 5 ** 3, 5: -5 ** 9},
    },
    Kind.X0: {
        0: {1: 4 * 5},
        -1: {0: 1, 2: -5 ** 3},
        -2: {0: -7, 1: -7 * 5 ** 2, 2: -5 ** 4, 3: -5 ** 5},
        -3: {0: 5 ** 2, 1: 5 ** 4, 3: -5 ** 6, 4: -5 ** 7},
        -4: {0: -3 * 5, 1: -3 * 5 ** 3, 4: -5 ** 8, 5: -5 ** 9},
    },
    Kind.X1: {
        0: {0: 1},
        -1: {1: 5 ** 2},
        -2: {2: 5 ** 4},
        -3: {3: 5 ** 6},
        -4: {4: 5 ** 8},
    },
    Kind.Y0: {
        0: {1: -5},
        -1: {0: 1, 1: 7 * 5, 2: 5 ** 3},
        -2: {0: -4, 1: -5 ** 3, 2: -4 * 5 ** 3},
        -3: {0: 3, 1: 8 * 5 ** 2, 2: 6 * 5 ** 4, 3: 7 * 5 ** 5, 4: 5 ** 7},
        -4: {0: 12 * 5, 1: 22 * 5 ** 2, 2: -56 * 5 ** 4, 3: -22 * 5 ** 6, 4: -4 * 5 ** 8, 5: -5 ** 9},
    },
    Kind.Y1: {
        0: {},
        -1: {0: -1, 1: -5 ** 2},
        -2: {0: 5, 1: 4 * 5 ** 2, 2: -5 ** 4},
        -3: {0: -2 * 5, 1: -5 ** 3, 2: 5 ** 5},
        -4: {0: -8 * 5, 1: -4 * 5 ** 3, 2: 6 * 5 ** 5, 3: 12 * 5 ** 6, 4: 2 * 5 ** 8},
    },
    Kind.Z0: {
        0: {1: -2 * 5},
        -1: {1: 3 * 5, 2: 5 ** 3},
        -2: {0: 1, 1: 2 * 5, 2: -5 ** 3},
        -3: {0: -8, 1: -5 ** 3, 2: 4 * 5 ** 4, 3: 8 * 5 ** 5, 4: 5 ** 7},
        -4: {0: 31, 1: 9 * 5 ** 2, 2: -36 * 5 ** 4, 3: -86 * 5 ** 5, 4: -3 * 5 ** 8, 5: -5 ** 9},
    },
    Kind.Z1: {
        0: {1: 5 ** 2},
        -1: {1: -5 ** 2},
        -2: {1: 5 ** 2},
        -3: {0: 5, 2: -5 ** 5, 3: -5 ** 6},
        -4: {0: -7 * 5, 1: 5 ** 3, 2: 2 * 5 ** 6, 3: 12 * 5 ** 6, 4: 5 ** 8},
    },
}


def seed_tables(verify_order: int = None) -> CoefficientTables:
    if verify_order is not None:
        for report in verify_appendix(verify_order):
            if not report.passed:
                family = Family.from_name(report.params['family'])
                exponent = report.failures[0].location.removeprefix('q^')
                raise SeedVerificationFailure(
                    family.value.group,
                    int(report.params['i']),
                    int(exponent) if exponent.lstrip('-').isdigit() else None,
                )
    return CoefficientTables({
        kind: CoeffTable(kind, {i: dict(row) for i, row in rows.items()}, SEEDED_RANGE)
        for kind, rows in SEEDS.items()
    })


def verify_appendix(
        order: int,
        basis: Basis = None,
        source: SeriesSource = named_series,
        families: tuple[Family, ...] = tuple(Family),
) -> list[VerificationReport]:
    tables = seed_tables()
    lo, hi = SEEDED_RANGE
    if basis is None:
        basis = Basis(base_order_for(order, lo), source=source)

    reports = []
    for family in families:
        for i in range(hi, lo - 1, -1):
            report = u5_basis_check(family, i, order, tables, basis)
            report.task = f'appendix.{family.value.group}.{family.value.name}({i})'
            if not report.passed:
                fitted = fit_f_rho_t(basis.u5(family, i), basis, (min(0, i), 6), min(order, 60))
                if fitted is not None:
                    report.notes.append(f'direct expansion fits F(({fitted[0]}) + rho({fitted[1]}))')
            reports.append(report)
    return reports


def recurrence_check(
        family: Family,
        i_range: tuple[int, int],
        order: int,
        source: SeriesSource = named_series,
) -> list[VerificationReport]:
    i_lo, i_hi = i_range
    tables = seed_tables().extended(i_lo, i_hi)
    basis = Basis(base_order_for(order, i_lo) + 5 * max(i_hi, 0), source=source)
    return [u5_basis_check(family, i, order, tables, basis) for i in range(i_lo, i_hi + 1)]
