"""
crs: parameter enumeration, sampling, exact laws and limits
"""

from __future__ import annotations

import json
from typing import List, Optional

import click
from pydantic import ValidationError

from ..config.logger import get_logger
from ..crs.distribution import to_json_dict
from ..crs.limits import classify_limit, elementary_tv_sequence
from ..crs.params import CrsParam, enumerate_params
from ..crs.samplers import exact_distribution, iter_samples
from ..crs.subgroups import TruncSubgroup
from ..finab.group import parse_group
from ..utils.errors import ParseError
from ..utils.helpers import format_rational
from .output import ResultWriter, to_json_line
from .schemas import (
    DistributionResponse,
    LimitResponse,
    OutputFormat,
    ParamListResponse,
    ParamResponse,
    RunConfig,
    SampleLine,
    SequenceDescriptorModel,
    Side,
    TvRow,
    TvWitnessResponse,
)

logger = get_logger(__name__)

SIDE_CHOICE = click.Choice([side.value for side in Side])


def gens_text(subgroup: TruncSubgroup) -> str:
    """Rows as "1 0;0 2", or "0" for the zero subgroup"""
    if subgroup.is_zero:
        return "0"
    return ";".join(" ".join(str(v) for v in row) for row in subgroup.gens)


def _param(n: int, m: int, group: str) -> CrsParam:
    return CrsParam(n, m, parse_group(group))


def _param_response(param: CrsParam) -> ParamResponse:
    return ParamResponse(n=param.ambient_n, m=param.m, group=param.group.to_text(), text=str(param))


@click.group('crs')
def crs() -> None:
    """Characteristic random subgroups"""


@crs.command('enum')
@click.option('--n', 'n', type=int, required=True, help='Ambient n (0 for Z^inf)')
@click.option('--max-order', type=int, required=True, help='Largest |F| listed')
@click.pass_obj
def enum_params(run: RunConfig, n: int, max_order: int) -> None:
    """List parameters (m, F) in canonical order"""
    params = [_param_response(p) for p in enumerate_params(n, max_order)]
    document = ParamListResponse(n=n, max_order=max_order, count=len(params), params=params)
    ResultWriter(run).emit(
        document,
        ["m", "group", "text"],
        [[p.m, p.group, p.text] for p in params],
        lines=[f"{len(params)} parameters for n={n}, |F| <= {max_order}"],
    )


def _side_options(func):
    func = click.option('--side', type=SIDE_CHOICE, default=Side.ker.value, show_default=True)(func)
    func = click.option('--coords', type=int, required=True, help='Truncation rank')(func)
    func = click.option('--group', 'group', default="0", show_default=True, help='F, e.g. "[2,4]"')(func)
    func = click.option('--m', 'm', type=int, required=True)(func)
    func = click.option('--n', 'n', type=int, required=True)(func)
    return func


@crs.command('sample')
@_side_options
@click.option('--samples', type=int, required=True)
@click.option('--seed', type=int, default=None, help='Overrides the global --seed')
@click.pass_obj
def sample(run: RunConfig, n: int, m: int, group: str, coords: int, side: str,
           samples: int, seed: Optional[int]) -> None:
    """Stream sampled subgroups; JSON format writes one object per line"""
    param = _param(n, m, group)
    seed = run.seed if seed is None else seed

    writer = ResultWriter(run)
    rows: List[list] = []
    try:
        for index, subgroup in enumerate(iter_samples(param, side, coords, samples, seed)):
            line = SampleLine(index=index, order=subgroup.order, gens=subgroup.to_rows())
            if writer.format == OutputFormat.json:
                writer.write(to_json_line(line))
            else:
                rows.append([index, subgroup.order, gens_text(subgroup)])
        if writer.format != OutputFormat.json:
            writer.emit(
                None,
                ["index", "order", "gens"],
                rows,
                lines=[f"{samples} samples of {param} ({side} side) in (Z/{n})^{coords}, seed {seed}"],
            )
    finally:
        writer.close()


@crs.command('exact')
@_side_options
@click.pass_obj
def exact(run: RunConfig, n: int, m: int, group: str, coords: int, side: str) -> None:
    """Exact law by enumerating every homomorphism"""
    param = _param(n, m, group)
    dist = exact_distribution(param, side, coords, run.enumeration_cap)
    document = DistributionResponse.model_validate(to_json_dict(dist))
    ResultWriter(run).emit(
        document,
        ["gens", "order", "prob"],
        [[gens_text(s), s.order, format_rational(p)] for s, p in dist.entries],
        lines=[f"{param} ({side} side) in (Z/{n})^{coords}: {len(dist)} subgroups"],
    )


@crs.command('limit')
@click.option('--descriptor', required=True, help='JSON regime, see `crslab schema descriptor`')
@click.pass_obj
def limit(run: RunConfig, descriptor: str) -> None:
    """Limit parameter of a sequence of untwisted parameters"""
    try:
        payload = json.loads(descriptor)
    except json.JSONDecodeError as e:
        raise ParseError(f"descriptor is not valid JSON ({e.msg})", descriptor) from None
    try:
        model = SequenceDescriptorModel.model_validate(payload)
    except ValidationError as e:
        raise ParseError(f"invalid descriptor: {e.errors()[0]['msg']}", descriptor) from None

    param = classify_limit(model.to_descriptor())
    document = LimitResponse(n=param.ambient_n, m=param.m, group=param.group.to_text(), text=str(param))
    ResultWriter(run).emit(
        document,
        ["m", "group", "text"],
        [[document.m, document.group, document.text]],
        lines=[document.text],
    )


@crs.command('tv')
@click.option('--k-max', type=int, default=6, show_default=True)
@click.option('--coords', type=int, default=2, show_default=True)
@click.pass_obj
def tv(run: RunConfig, k_max: int, coords: int) -> None:
    """TV distance of (1, (Z/2)^k) to the limit (2, trivial), k = 1..k_max"""
    distances = elementary_tv_sequence(k_max, coords, run.enumeration_cap)
    decreasing = all(a > b for a, b in zip(distances, distances[1:]))
    rows = [TvRow(k=k, tv=format_rational(d)) for k, d in enumerate(distances, start=1)]
    document = TvWitnessResponse(coords=coords, rows=rows, strictly_decreasing=decreasing)
    ResultWriter(run).emit(
        document,
        ["k", "tv"],
        [[row.k, row.tv] for row in rows],
        lines=[f"strictly decreasing: {str(decreasing).lower()}"],
    )
