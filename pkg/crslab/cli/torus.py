"""
torus: decomposition checks and the beta table on (Z/r)^2
"""

from __future__ import annotations

import click

from ..torus2.measures import beta_table, decompose_tau, haar_from_tau
from ..utils.helpers import format_rational
from .output import ResultWriter
from .schemas import BetaRowResponse, BetaTableResponse, DecompositionResponse, RunConfig


@click.group('torus')
def torus() -> None:
    """SL(2, Z)-invariant measures on torsion points of T^2"""


@torus.command('decompose')
@click.option('--r', 'r', type=int, required=True)
@click.option('--haar', is_flag=True, help='Check r^2 nu_r = sum beta(k) tau_k instead')
@click.pass_obj
def decompose(run: RunConfig, r: int, haar: bool) -> None:
    """Check tau_r = sum over k | r of alpha(k, r) nu_k at every point"""
    check = haar_from_tau if haar else decompose_tau
    report = check(r, run.enumeration_cap)
    document = DecompositionResponse.model_validate(report.to_dict())
    ResultWriter(run).emit(
        document,
        ["k", "coefficient"],
        [[c.k, c.coefficient] for c in document.coefficients],
        lines=[
            f"r {r}",
            f"points checked {report.points_checked}",
            f"residual {format_rational(report.residual)}",
        ],
    )


@torus.command('beta')
@click.option('--r-max', type=int, required=True)
@click.option('--no-brute', is_flag=True, help='Skip the generating-pair scan')
@click.pass_obj
def beta(run: RunConfig, r_max: int, no_brute: bool) -> None:
    """beta(r), beta(r)/r^2 and alpha(k, r) for r = 1..r_max"""
    rows = [
        BetaRowResponse.model_validate(row.to_dict())
        for row in beta_table(r_max, brute=not no_brute, cap=run.enumeration_cap)
    ]
    document = BetaTableResponse(r_max=r_max, rows=rows)
    ResultWriter(run).emit(
        document,
        ["r", "beta", "brute", "ratio", "alphas"],
        [[row.r, row.beta, row.brute, row.ratio, row.alphas] for row in rows],
    )
