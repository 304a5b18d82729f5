"""
rankdist: kernel-dimension law of a uniform matrix over F_q
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

import click

from ..config.logger import get_logger
from ..crs.distribution import MARGINAL_CSV_COLUMNS, marginal_csv_rows
from ..crs.samplers import intersection_dim_counts, intersection_dim_distribution, within_sigma
from ..qlinalg.counting import vtilde_vector
from ..qlinalg.field import get_field
from ..utils.errors import InvariantViolation
from ..utils.helpers import format_rational
from .output import ResultWriter
from .schemas import OutputFormat, RankDistResponse, RankRow, RunConfig

logger = get_logger(__name__)


@click.command('rankdist')
@click.option('--q', 'q', type=int, required=True, help='Field order (prime power)')
@click.option('--kappa', type=click.IntRange(min=0), required=True, help='Codomain dimension')
@click.option('--n', 'n', type=click.IntRange(min=0), required=True, help='Domain dimension')
@click.option('--exact', is_flag=True, help='Enumerate every matrix (default)')
@click.option('--samples', type=int, default=None, help='Monte Carlo sample count')
@click.pass_obj
def rankdist(run: RunConfig, q: int, kappa: int, n: int, exact: bool, samples: Optional[int]) -> None:
    """Law of dim Ker h for uniform h: F_q^n -> F_q^kappa"""
    if exact and samples is not None:
        raise click.UsageError("--exact and --samples are mutually exclusive")
    get_field(q)
    formula = vtilde_vector(n, kappa, q)

    rows = []
    if samples is None:
        enumerated = intersection_dim_distribution(q, kappa, n, cap=run.enumeration_cap)
        if enumerated != formula:
            raise InvariantViolation(f"closed form {formula} disagrees with enumeration {enumerated}")
        for k, probability in enumerate(formula):
            rows.append(RankRow(k=k, probability=format_rational(probability),
                                enumerated=format_rational(enumerated[k])))
        document = RankDistResponse(q=q, kappa=kappa, n=n, mode="exact", rows=rows)
        observed = enumerated
        columns = ["k", "probability", "enumerated"]
        table = [[row.k, row.probability, row.enumerated] for row in rows]
    else:
        counts = intersection_dim_counts(q, kappa, n, samples, run.seed, run.workers)
        observed = [Fraction(count, samples) for count in counts]
        for k, (probability, count) in enumerate(zip(formula, counts)):
            rows.append(RankRow(
                k=k,
                probability=format_rational(probability),
                empirical=format_rational(observed[k]),
                deviation=format_rational(observed[k] - probability),
                within_sigma=within_sigma(count, samples, probability),
            ))
        document = RankDistResponse(q=q, kappa=kappa, n=n, mode="monte_carlo",
                                    samples=samples, seed=run.seed, rows=rows)
        columns = ["k", "probability", "empirical", "deviation", "within_sigma"]
        table = [[r.k, r.probability, r.empirical, r.deviation, str(r.within_sigma).lower()] for r in rows]

    if run.format == OutputFormat.csv:
        columns, table = list(MARGINAL_CSV_COLUMNS), marginal_csv_rows(formula, observed)

    logger.debug(f"rankdist q={q} kappa={kappa} n={n} mode={document.mode}")
    ResultWriter(run).emit(
        document,
        columns,
        table,
        lines=[f"dim Ker h for uniform h: F_{q}^{n} -> F_{q}^{kappa}"],
    )
