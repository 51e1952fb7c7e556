import logging
from enum import Enum

from qspt.forms.eta import eisenstein_e2, pentagonal_series, qpoch_inf, sigma_series
from qspt.forms.named import NamedFunction, SeriesSource, display_sum, named_series, spt_c5_lambert
from qspt.sequences.brute import spt_c5_direct
from qspt.sequences.tables import SequenceName, SequenceTable, p_table, sequence
from qspt.series.laurent import LaurentSeries, series_divide
from qspt.verify.report import ReportBuilder, VerificationReport


logger = logging.getLogger(__name__)


DIRECT_DISPLAY_LIMIT = 500


class RelationId(Enum):
    SPT_SPLIT = 'SPT_SPLIT'
    C5_FROM_C = 'C5_FROM_C'
    DISSECT_EVEN = 'DISSECT_EVEN'
    DISSECT_ODD = 'DISSECT_ODD'
    C_ODD = 'C_ODD'
    ODD_GEN = 'ODD_GEN'
    E2_SUM = 'E2_SUM'
    EVEN_SPLIT = 'EVEN_SPLIT'
    ODD_EQUAL = 'ODD_EQUAL'
    NP_DERIV = 'NP_DERIV'
    P_OMEGA_FORMS = 'P_OMEGA_FORMS'
    SIGMA_DOUBLE = 'SIGMA_DOUBLE'
    E2_DISSECT = 'E2_DISSECT'
    C5_ROUTES = 'C5_ROUTES'
    C5_DIRECT = 'C5_DIRECT'


def _compare_values(builder: ReportBuilder, label: str, lhs: list[int], rhs: list[int], start: int = 0):
    for n, (left, right) in enumerate(zip(lhs, rhs), start=start):
        builder.check(left == right, f'{label} n={n}', left, right)


def _compare_series(builder: ReportBuilder, label: str, lhs: LaurentSeries, rhs: LaurentSeries, order: int):
    _compare_values(builder, label, lhs.coefficients(0, order), rhs.coefficients(0, order))


def check_relation(relation: RelationId, order: int, source: SeriesSource = named_series) -> VerificationReport:
    builder = ReportBuilder(f'relation.{relation.value}', relation=relation.value)
    range_checked = (0, order)
    tables: dict[SequenceName, SequenceTable] = {}

    def table(name: SequenceName, length: int = order) -> SequenceTable:
        if name not in tables or tables[name].last < length:
            tables[name] = sequence(name, length, source)
        return tables[name]

    match relation:

        case RelationId.SPT_SPLIT:
            spt, omega, c5 = table(SequenceName.SPT, order // 2), table(SequenceName.SPT_OMEGA), table(SequenceName.SPT_C5)
            _compare_values(builder, 'spt(n/2) vs spt_omega(n) - spt_C5(n)',
                            [spt.at_half(n) for n in range(order + 1)],
                            [omega[n] - c5[n] for n in range(order + 1)])

        case RelationId.C5_FROM_C:
            c5, c, p = table(SequenceName.SPT_C5), table(SequenceName.C), p_table(order // 2)
            _compare_values(builder, '24 spt_C5(n) vs c(n) + (12n - 1) p(n/2)',
                            [24 * c5[n] for n in range(order + 1)],
                            [c[n] + (12 * n - 1) * p.at_half(n) for n in range(order + 1)])

        case RelationId.DISSECT_EVEN:
            c = table(SequenceName.C, 2 * order)
            l0_over_p = series_divide(source(NamedFunction.L0, order), pentagonal_series(1, order), order)
            _compare_values(builder, 'c(2n) vs L0/(q;q)', [c[2 * n] for n in range(order + 1)], l0_over_p.coefficients(0, order))

        case RelationId.DISSECT_ODD:
            c = table(SequenceName.C, 2 * order + 1)
            odd_sigma = LaurentSeries.from_coefficients(
                [24 * s for s in sigma_series(1, 2 * order + 1).coefficients(0, 2 * order + 1)[1::2]],
            )
            odd_part = series_divide(odd_sigma, pentagonal_series(1, order), order)
            _compare_values(builder, 'c(2n+1) vs 24 sum sigma(2n+1) q^n/(q;q)', [c[2 * n + 1] for n in range(order + 1)], odd_part.coefficients(0, order))

        case RelationId.C_ODD:
            c, omega = table(SequenceName.C, 2 * order + 1), table(SequenceName.SPT_OMEGA, 2 * order + 1)
            _compare_values(builder, 'c(2n+1) vs 24 spt_omega(2n+1)',
                            [c[2 * n + 1] for n in range(order + 1)],
                            [24 * omega[2 * n + 1] for n in range(order + 1)])

        case RelationId.ODD_GEN:
            omega = table(SequenceName.SPT_OMEGA, 2 * order + 1)
            quotient = qpoch_inf(2, 2, 8, order) * qpoch_inf(1, 1, -5, order)
            _compare_values(builder, 'spt_omega(2n+1) vs (q^2;q^2)^8/(q;q)^5',
                            [omega[2 * n + 1] for n in range(order + 1)], quotient.coefficients(0, order))

        case RelationId.E2_SUM:
            lhs = (eisenstein_e2(2, order) - eisenstein_e2(1, order)).exact_quotient(24)
            rhs = LaurentSeries.zero(order)
            for k in range(1, order + 1, 2):
                rhs = rhs + LaurentSeries.monomial(k, order).divide_binomial(k, 2)
            _compare_series(builder, '(E2(2 tau) - E2(tau))/24 vs sum q^(2n+1)/(1-q^(2n+1))^2', lhs, rhs, order)

        case RelationId.EVEN_SPLIT:
            spt, omega, c5 = table(SequenceName.SPT, order), table(SequenceName.SPT_OMEGA, 2 * order), table(SequenceName.SPT_C5, 2 * order)
            _compare_values(builder, 'spt_omega(2n) vs spt(n) + spt_C5(2n)',
                            [omega[2 * n] for n in range(order + 1)],
                            [spt[n] + c5[2 * n] for n in range(order + 1)])

        case RelationId.ODD_EQUAL:
            omega, c5 = table(SequenceName.SPT_OMEGA, 2 * order + 1), table(SequenceName.SPT_C5, 2 * order + 1)
            _compare_values(builder, 'spt_omega(2n+1) vs spt_C5(2n+1)',
                            [omega[2 * n + 1] for n in range(order + 1)],
                            [c5[2 * n + 1] for n in range(order + 1)])

        case RelationId.NP_DERIV:
            p = p_table(order)
            derivative = series_divide((1 - eisenstein_e2(1, order)).exact_quotient(24), pentagonal_series(1, order), order)
            _compare_values(builder, 'n p(n) vs (1 - E2)/(24 (q;q))', [n * p[n] for n in range(order + 1)], derivative.coefficients(0, order))

        case RelationId.P_OMEGA_FORMS:
            limit = min(order, DIRECT_DISPLAY_LIMIT)
            range_checked = (0, limit)
            p_omega = table(SequenceName.P_OMEGA, limit)
            direct = display_sum(limit, lambda n: n, smallest_power=1)
            _compare_values(builder, 'q omega(q) vs direct display', list(p_omega.values[:limit + 1]), direct.coefficients(0, limit))

        case RelationId.SIGMA_DOUBLE:
            sigma = table(SequenceName.SIGMA, 2 * order)
            _compare_values(builder, 'sigma(2n) vs 3 sigma(n) - 2 sigma(n/2)',
                            [sigma[2 * n] for n in range(1, order + 1)],
                            [3 * sigma[n] - 2 * sigma.at_half(n) for n in range(1, order + 1)],
                            start=1)

        case RelationId.E2_DISSECT:
            odd_sigma = LaurentSeries.from_coefficients(
                [s if n % 2 else 0 for n, s in enumerate(sigma_series(1, order).coefficients(0, order))],
            )
            rhs = 3 * eisenstein_e2(2, order) - 2 * eisenstein_e2(4, order) - 24 * odd_sigma
            _compare_series(builder, 'E2(tau) vs 3 E2(2 tau) - 2 E2(4 tau) - 24 sum sigma(2n+1) q^(2n+1)', eisenstein_e2(1, order), rhs, order)

        case RelationId.C5_ROUTES:
            _compare_series(builder, 'spt_C5 via E2 vs Lambert form', source(NamedFunction.SPT_C5_GEN, order), spt_c5_lambert(order), order)

        case RelationId.C5_DIRECT:
            limit = min(order, DIRECT_DISPLAY_LIMIT)
            range_checked = (0, limit)
            c5 = table(SequenceName.SPT_C5, limit)
            direct = display_sum(limit, lambda n: n * (n + 1) // 2, smallest_power=2)
            _compare_values(builder, 'spt_C5 generating function vs direct display', list(c5.values[:limit + 1]), direct.coefficients(0, limit))
            builder.check(spt_c5_direct(min(limit, 10)) == c5[min(limit, 10)], 'spot check', c5[min(limit, 10)], spt_c5_direct(min(limit, 10)))

        case _:
            raise ValueError(f'Unknown relation: {relation}')

    return builder.build(order, range_checked)
