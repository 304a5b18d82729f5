"""
Pydantic schemas for CLI input validation and machine-readable output

Every JSON document the CLI writes is one of the response models below;
``crslab schema NAME`` prints the JSON schema of the model registered
under NAME in ``SCHEMAS``.
"""

from __future__ import annotations

from enum import Enum
from typing import Dict, List, Optional, Type

from pydantic import BaseModel, Field, field_validator

from ..config.constants import (
    DEFAULT_OUTPUT_FORMAT,
    DEFAULT_SEED,
    DEFAULT_WORKERS,
    LOG_LEVELS,
    MAX_SEED,
)
from ..crs.limits import SequenceDescriptor
from ..finab.group import parse_group
from ..utils.helpers import parse_rational


# Enums
class OutputFormat(str, Enum):
    """Output formats"""
    json = "json"
    csv = "csv"
    plain = "plain"


class Side(str, Enum):
    """Which dual description of a random subgroup to sample"""
    ker = "ker"
    ann = "ann"


class Trend(str, Enum):
    diverges = "diverges"
    constant = "constant"


class MaxorderTrend(str, Enum):
    bounded = "bounded"
    diverges = "diverges"


# Request Schemas
class RunConfig(BaseModel):
    """Global options shared by every subcommand"""
    seed: int = Field(DEFAULT_SEED, ge=0, le=MAX_SEED)
    enumeration_cap: int = Field(..., gt=0)
    group_order_cap: int = Field(..., gt=0)
    format: OutputFormat = OutputFormat(DEFAULT_OUTPUT_FORMAT)
    output: Optional[str] = None
    workers: int = Field(DEFAULT_WORKERS, ge=1)
    log_level: str = "WARNING"
    json_logs: bool = False

    @field_validator('log_level')
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Normalize and check the level name"""
        level = v.upper()
        if level not in LOG_LEVELS:
            raise ValueError(f'Invalid log level. Must be one of: {", ".join(LOG_LEVELS)}')
        return level


class SequenceDescriptorModel(BaseModel):
    """JSON form of a parameter-sequence regime for ``crs limit``"""
    n_trend: Trend
    n: int = Field(0, ge=0)
    stable_part: str = "0"
    growing_blocks: List[int] = []
    maxorder_trend: MaxorderTrend = MaxorderTrend.bounded

    @field_validator('stable_part')
    @classmethod
    def validate_stable_part(cls, v: str) -> str:
        """Must parse as a finite abelian group"""
        parse_group(v)
        return v

    def to_descriptor(self) -> SequenceDescriptor:
        return SequenceDescriptor(
            n_trend=self.n_trend.value,
            n=self.n,
            stable_part=parse_group(self.stable_part),
            growing_blocks=tuple(self.growing_blocks),
            maxorder_trend=self.maxorder_trend.value,
        )


# Response Schemas
class RankRow(BaseModel):
    """One kernel dimension of the rank law"""
    k: int
    probability: str
    enumerated: Optional[str] = None
    empirical: Optional[str] = None
    deviation: Optional[str] = None
    within_sigma: Optional[bool] = None

    @field_validator('probability', 'enumerated', 'empirical', 'deviation')
    @classmethod
    def validate_rational(cls, v: Optional[str]) -> Optional[str]:
        """Rationals travel as "num/den" strings"""
        if v is not None:
            parse_rational(v)
        return v


class RankDistResponse(BaseModel):
    """Law of dim Ker h for uniform h: F_q^n -> F_q^kappa"""
    q: int
    kappa: int
    n: int
    mode: str
    samples: Optional[int] = None
    seed: Optional[int] = None
    rows: List[RankRow]


class ParamResponse(BaseModel):
    """One CRS parameter"""
    n: int
    m: int
    group: str
    text: str


class ParamListResponse(BaseModel):
    """Parameters for ambient n in canonical order"""
    n: int
    max_order: int
    count: int
    params: List[ParamResponse]


class SubgroupEntry(BaseModel):
    """Subgroup by its Howell-form generators, with its probability"""
    gens: List[List[int]]
    prob: str


class DistributionResponse(BaseModel):
    """Exact law of a random subgroup of (Z/modulus)^rank"""
    modulus: int
    rank: int
    entries: List[SubgroupEntry]


class SampleLine(BaseModel):
    """One sampled subgroup; ``crs sample`` writes one per line"""
    index: int
    order: int
    gens: List[List[int]]


class LimitResponse(BaseModel):
    """Limit parameter of a described sequence"""
    n: int
    m: int
    group: str
    text: str


class TvRow(BaseModel):
    k: int
    tv: str


class TvWitnessResponse(BaseModel):
    """TV distances of (1, (Z/2)^k) to their limit"""
    coords: int
    rows: List[TvRow]
    strictly_decreasing: bool


class Coefficient(BaseModel):
    k: int
    coefficient: str


class DecompositionResponse(BaseModel):
    """Pointwise identity check on (Z/r)^2"""
    r: int
    coefficients: List[Coefficient]
    points_checked: int
    residual: str


class BetaRowResponse(BaseModel):
    r: int
    beta: int
    brute: Optional[int] = None
    ratio: str
    alphas: str


class BetaTableResponse(BaseModel):
    """beta(r) table with the brute-force column"""
    r_max: int
    rows: List[BetaRowResponse]


class SchreierResponse(BaseModel):
    """Schreier graph summary and free basis words"""
    rank: int
    mode: str
    index: int
    basis_size: int
    basis: List[str]


class AdyanResponse(BaseModel):
    n: int
    p: int
    word: str
    length: int


class VerbalResponse(BaseModel):
    """Verbal subgroup of a permutation group"""
    group_order: int
    order: int
    normal: bool
    elements: List[str]


class ErrorResponse(BaseModel):
    """Error written to standard error with --format json"""
    error: str
    message: str
    exit_code: int


SCHEMAS: Dict[str, Type[BaseModel]] = {
    'run-config': RunConfig,
    'descriptor': SequenceDescriptorModel,
    'rankdist': RankDistResponse,
    'params': ParamListResponse,
    'distribution': DistributionResponse,
    'sample': SampleLine,
    'limit': LimitResponse,
    'tv-witness': TvWitnessResponse,
    'decomposition': DecompositionResponse,
    'beta-table': BetaTableResponse,
    'schreier': SchreierResponse,
    'adyan': AdyanResponse,
    'verbal': VerbalResponse,
    'error': ErrorResponse,
}
