# crslab/crs/samplers.py
"""
Haar samplers and exact truncated laws for CRS parameters

A homomorphism between (Z/n)^coords and F = ⊕ Z/d_i is stored as an
integer matrix h[i][j] (summand i, coordinate j, entry in [0, d_i)).
Embedding Z/d_i into Z/n by multiplication with n/d_i turns row i into
a vector w_i of (Z/n)^coords, and then

    kernel side:       m·(Z/n)^c ∩ Ker(h) = m·(Z/n)^c ∩ Ann(span w_i)
    annihilator side:  Ann(m·(Z/n)^c) + h(F) = Ann(m·(Z/n)^c) + span w_i

The kernel side draws the image of each coordinate generator in F; the
annihilator side draws the image of each summand of F in its torsion of
(Z/n)^c. Both are uniform on the same matrix space.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import product
from typing import Callable, Dict, Iterator, List, Optional, Sequence, TypeVar

import numpy as np

from ..config import resolve_cap
from ..config.constants import DEFAULT_SEED, DEFAULT_WORKERS, MONTE_CARLO_SIGMA, SAMPLES_PER_STREAM
from ..config.structured_logging import get_structured_logger
from ..qlinalg.enumeration import enumerate_matrices, sample_uniform_matrix
from ..qlinalg.field import get_field
from ..qlinalg.matrix import matrix_rank
from ..utils.errors import DomainError, UnsupportedParameterError, check_cap
from ..utils.rng import make_rng, stream_sizes
from .distribution import SubgroupDistribution, merge_counts
from .params import CrsParam
from .subgroups import (
    TruncSubgroup,
    ann_of_multiple,
    ann_sub,
    char_subgroup_truncation,
    intersect_sub,
    sum_sub,
)

logger = get_structured_logger(__name__)

KERNEL = "kernel"
ANNIHILATOR = "annihilator"
_SIDE_ALIASES = {"ker": KERNEL, "kernel": KERNEL, "ann": ANNIHILATOR, "annihilator": ANNIHILATOR}

T = TypeVar("T")


def normalize_side(side: str) -> str:
    try:
        return _SIDE_ALIASES[side.lower()]
    except KeyError:
        raise DomainError(f"side must be one of ker, ann, kernel, annihilator; got {side!r}") from None


def _require_samplable(param: CrsParam, coords: int) -> None:
    if not param.samplable:
        raise UnsupportedParameterError(
            f"parameter {param} has ambient n = 0: the infinite ambient group has no "
            f"finite truncation to sample; use CrsParam.with_ambient(n) for a finite n"
        )
    if coords < 1:
        raise DomainError(f"coords must be positive, got {coords}")


def _embedded_rows(param: CrsParam, hom: Sequence[Sequence[int]]) -> List[List[int]]:
    n = param.ambient_n
    return [
        [int(value) * (n // order) for value in row]
        for order, row in zip(param.group.summands, hom)
    ]


def subgroup_from_hom(param: CrsParam, side: str, coords: int, hom: Sequence[Sequence[int]]) -> TruncSubgroup:
    """The random subgroup attached to one homomorphism matrix"""
    n = param.ambient_n
    side = normalize_side(side)
    images = TruncSubgroup.span(n, coords, _embedded_rows(param, hom))
    if side == KERNEL:
        return intersect_sub(char_subgroup_truncation(param.m, n, coords), ann_sub(images))
    return sum_sub(ann_of_multiple(param.m, n, coords), images)


def sample_kernel_side(param: CrsParam, coords: int, rng: np.random.Generator) -> TruncSubgroup:
    """m·(Z/n)^c ∩ Ker(h) for Haar-random h: (Z/n)^c -> F"""
    _require_samplable(param, coords)
    orders = np.array(param.group.summands, dtype=np.int64)
    if orders.size == 0:
        return subgroup_from_hom(param, KERNEL, coords, [])
    # Row j is h(e_j) in F
    by_coordinate = rng.integers(0, orders, size=(coords, orders.size))
    return subgroup_from_hom(param, KERNEL, coords, by_coordinate.T.tolist())


def sample_annihilator_side(param: CrsParam, coords: int, rng: np.random.Generator) -> TruncSubgroup:
    """Ann(m·(Z/n)^c) + h(F) for Haar-random h: F -> (Z/n)^c"""
    _require_samplable(param, coords)
    orders = np.array(param.group.summands, dtype=np.int64)
    if orders.size == 0:
        return subgroup_from_hom(param, ANNIHILATOR, coords, [])
    by_summand = rng.integers(0, orders[:, None], size=(orders.size, coords))
    return subgroup_from_hom(param, ANNIHILATOR, coords, by_summand.tolist())


def sample_subgroup(param: CrsParam, side: str, coords: int, rng: np.random.Generator) -> TruncSubgroup:
    if normalize_side(side) == KERNEL:
        return sample_kernel_side(param, coords, rng)
    return sample_annihilator_side(param, coords, rng)


def hom_space_size(param: CrsParam, coords: int) -> int:
    """|F|^coords, the size of either Hom space"""
    return param.group.order ** coords


def exact_distribution(
        param: CrsParam,
        side: str,
        coords: int,
        cap: Optional[int] = None,
) -> SubgroupDistribution:
    """Enumerate every homomorphism with equal weight and aggregate"""
    _require_samplable(param, coords)
    side = normalize_side(side)
    total = hom_space_size(param, coords)
    check_cap(f"exact {side}-side law of {param} at {coords} coordinates", total, resolve_cap(cap))

    summands = param.group.summands
    ranges = [range(order) for order in summands for _ in range(coords)]
    counts: Counter = Counter()
    for flat in product(*ranges):
        hom = [flat[i * coords:(i + 1) * coords] for i in range(len(summands))]
        counts[subgroup_from_hom(param, side, coords, hom)] += 1
    logger.debug("exact distribution", param=str(param), side=side, homs=total, support=len(counts))
    return SubgroupDistribution.from_weights(param.ambient_n, coords, counts)


def run_streams(
        samples: int,
        seed: int,
        workers: int,
        chunk: Callable[[np.random.Generator, int], T],
        chunk_size: int = SAMPLES_PER_STREAM,
) -> List[T]:
    """Run ``chunk(rng, size)`` on stream i for each chunk i, results in stream order"""
    sizes = stream_sizes(samples, chunk_size)
    jobs = [(index, size) for index, size in enumerate(sizes)]
    run_log = logger.bind(seed=seed, workers=workers)

    def work(job):
        index, size = job
        result = chunk(make_rng(seed, index), size)
        run_log.debug("stream finished", stream=index, size=size)
        return result

    if workers <= 1 or len(jobs) <= 1:
        return [work(job) for job in jobs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(work, jobs))


def iter_samples(
        param: CrsParam,
        side: str,
        coords: int,
        samples: int,
        seed: int = DEFAULT_SEED,
        chunk_size: int = SAMPLES_PER_STREAM,
) -> Iterator[TruncSubgroup]:
    """Stream samples in stream order; the same (seed, samples) replays exactly"""
    _require_samplable(param, coords)
    for index, size in enumerate(stream_sizes(samples, chunk_size)):
        rng = make_rng(seed, index)
        for _ in range(size):
            yield sample_subgroup(param, side, coords, rng)


def monte_carlo_distribution(
        param: CrsParam,
        side: str,
        coords: int,
        samples: int,
        seed: int = DEFAULT_SEED,
        workers: int = DEFAULT_WORKERS,
) -> Dict[TruncSubgroup, int]:
    """Empirical counts of sampled subgroups merged across derived streams"""
    _require_samplable(param, coords)
    if samples < 1:
        raise DomainError(f"samples must be positive, got {samples}")
    logger.info("monte carlo run", param=str(param), side=side, coords=coords,
                samples=samples, seed=seed, workers=workers)

    def chunk(rng: np.random.Generator, size: int) -> Counter:
        return Counter(sample_subgroup(param, side, coords, rng) for _ in range(size))

    return merge_counts(run_streams(samples, seed, workers, chunk))


def intersection_dim_distribution(
        q: int,
        kappa: int,
        n: int,
        mode: str = "exact",
        samples: Optional[int] = None,
        seed: int = DEFAULT_SEED,
        workers: int = DEFAULT_WORKERS,
        cap: Optional[int] = None,
) -> List[Fraction]:
    """Law of dim Ker(h) for uniform h: F_q^n -> F_q^κ

    Entry k is the probability (exact mode, by enumeration) or empirical
    frequency (monte_carlo mode) of a k-dimensional kernel.
    """
    if mode == "monte_carlo":
        if samples is None:
            raise DomainError("monte_carlo mode needs a sample count")
        return empirical_frequencies(intersection_dim_counts(q, kappa, n, samples, seed, workers))
    if mode != "exact":
        raise DomainError(f"mode must be 'exact' or 'monte_carlo', got {mode!r}")
    field = get_field(q)
    counts = [0] * (n + 1)
    for matrix in enumerate_matrices(kappa, n, field, cap):
        counts[n - matrix_rank(matrix)] += 1
    total = q ** (kappa * n)
    return [Fraction(c, total) for c in counts]


def intersection_dim_counts(
        q: int,
        kappa: int,
        n: int,
        samples: int,
        seed: int = DEFAULT_SEED,
        workers: int = DEFAULT_WORKERS,
) -> List[int]:
    """Monte Carlo histogram of dim Ker(h) over ``samples`` uniform matrices"""
    if samples < 1:
        raise DomainError(f"samples must be positive, got {samples}")
    field = get_field(q)
    logger.info("monte carlo kernel dimensions", q=q, kappa=kappa, n=n,
                samples=samples, seed=seed, workers=workers)

    def chunk(rng: np.random.Generator, size: int) -> List[int]:
        counts = [0] * (n + 1)
        for _ in range(size):
            counts[n - matrix_rank(sample_uniform_matrix(kappa, n, field, rng))] += 1
        return counts

    totals = [0] * (n + 1)
    for counts in run_streams(samples, seed, workers, chunk):
        totals = [a + b for a, b in zip(totals, counts)]
    return totals


def empirical_frequencies(counts: Sequence[int]) -> List[Fraction]:
    total = sum(counts)
    return [Fraction(c, total) for c in counts]


def within_sigma(count: int, samples: int, probability: Fraction, sigma: int = MONTE_CARLO_SIGMA) -> bool:
    """|count - N p| <= sigma * sqrt(N p (1 - p)), compared exactly on squares"""
    p = Fraction(probability)
    deviation = Fraction(count) - samples * p
    return deviation * deviation <= sigma * sigma * samples * p * (1 - p)
