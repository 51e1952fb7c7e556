import logging

from qspt.forms.eta import qpoch_inf
from qspt.forms.named import NamedFunction, SeriesSource, named_series
from qspt.series.laurent import Exponent
from qspt.verify.report import ReportBuilder, VerificationReport


logger = logging.getLogger(__name__)


def rho_quadratic_check(order: Exponent, source: SeriesSource = named_series) -> VerificationReport:
    builder = ReportBuilder('lemmas.rho_quadratic', order=order)
    rho, t = source(NamedFunction.RHO, order), source(NamedFunction.T, order)
    lhs = rho * rho
    rhs = rho + 5 * rho * t - t
    comparison = lhs.equal_upto(rhs, order)
    builder.check(comparison.equal, f'q^{comparison.exponent}', comparison.right, comparison.left)
    return builder.build(order, (0, order))


def t_construction_check(order: Exponent, source: SeriesSource = named_series) -> VerificationReport:
    builder = ReportBuilder('lemmas.t_paths', order=order)
    relative = order - 1
    products = (
        qpoch_inf(5, 5, 2, relative)
        * qpoch_inf(10, 10, 2, relative)
        * qpoch_inf(1, 1, -2, relative)
        * qpoch_inf(2, 2, -2, relative)
    ).shift(1)
    comparison = source(NamedFunction.T, order).equal_upto(products, order)
    builder.check(comparison.equal, f'q^{comparison.exponent}', comparison.right, comparison.left)
    builder.note(f't = {" + ".join(f"{c} q^{n}" for n, c in products.items() if 0 < n <= 4)} + ...')
    return builder.build(order, (0, order))
