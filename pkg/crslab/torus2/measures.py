# crslab/torus2/measures.py
"""
SL(2, Z)-invariant measures on torsion points of the 2-torus

The r-torsion points of T² are identified with (Z/r)² via a/r <-> a.
``nu_measure(r)`` is Haar measure on that group, ``tau_measure(r)`` is
uniform on the pairs that generate Z/r, and ``embed_nu(k, r)`` places
Haar measure of (Z/k)² on the k-torsion of (Z/r)².
"""

from __future__ import annotations

import logging
from collections import defaultdict, deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Mapping, Optional, Tuple

import numpy as np
from sympy import primerange

from ..config import resolve_cap
from ..finab.numtheory import divisors, gcd, mobius, prime_divisors
from ..utils.errors import DomainError, InvariantViolation, check_cap
from ..utils.helpers import format_rational

logger = logging.getLogger(__name__)

Point = Tuple[int, int]


def _require_positive(name: str, value: int) -> None:
    if value < 1:
        raise DomainError(f"{name} must be positive, got {value}")


@dataclass(frozen=True)
class TorsionMeasure2:
    """Finitely supported measure on (Z/r)² with exact rational weights

    Signed weights are allowed only with ``signed=True``; the total mass
    is always exactly 1. Zero weights are dropped.
    """

    r: int
    weights: Tuple[Tuple[Point, Fraction], ...]
    signed: bool = False

    def __post_init__(self):
        _require_positive("r", self.r)
        cleaned = tuple(sorted((point, Fraction(w)) for point, w in self.weights if w != 0))
        object.__setattr__(self, "weights", cleaned)
        total = Fraction(0)
        for (x, y), weight in cleaned:
            if not (0 <= x < self.r and 0 <= y < self.r):
                raise DomainError(f"point {(x, y)} is not in (Z/{self.r})^2")
            if weight < 0 and not self.signed:
                raise DomainError(f"negative weight {weight} at {(x, y)} in a probability measure")
            total += weight
        if total != 1:
            raise DomainError(f"total mass is {total}, not 1")

    @classmethod
    def from_mapping(cls, r: int, weights: Mapping[Point, Fraction], signed: bool = False) -> "TorsionMeasure2":
        return cls(r, tuple(weights.items()), signed)

    def as_dict(self) -> Dict[Point, Fraction]:
        return dict(self.weights)

    def weight(self, point: Point) -> Fraction:
        return self.as_dict().get((point[0] % self.r, point[1] % self.r), Fraction(0))

    @property
    def support(self) -> List[Point]:
        return [point for point, _ in self.weights]


def beta(r: int) -> int:
    """Number of generating pairs of Z/r: Σ_{k|r} μ(r/k)·k²"""
    _require_positive("r", r)
    return sum(mobius(r // k) * k * k for k in divisors(r))


def alpha(k: int, r: int) -> Fraction:
    """Coefficient of ν_k in the expansion of τ_r"""
    _require_positive("r", r)
    if k < 1 or r % k:
        raise DomainError(f"alpha needs k | r, got k={k}, r={r}")
    return Fraction(mobius(r // k) * k * k, beta(r))


def _generating_mask(r: int) -> np.ndarray:
    x, y = np.meshgrid(np.arange(r), np.arange(r), indexing="ij")
    return np.gcd(np.gcd(x, y), r) == 1


def count_generating_pairs(r: int, cap: Optional[int] = None) -> int:
    """Count (x, y) in (Z/r)² with gcd(x, y, r) = 1 by scanning every pair"""
    _require_positive("r", r)
    check_cap(f"generating pair scan of (Z/{r})^2", r * r, resolve_cap(cap))
    return int(_generating_mask(r).sum())


def generating_pairs(r: int, cap: Optional[int] = None) -> List[Point]:
    _require_positive("r", r)
    check_cap(f"generating pair scan of (Z/{r})^2", r * r, resolve_cap(cap))
    xs, ys = np.nonzero(_generating_mask(r))
    return [(int(x), int(y)) for x, y in zip(xs, ys)]


def point_order(point: Point, r: int) -> int:
    """Order of (x, y) in (Z/r)²"""
    _require_positive("r", r)
    return r // gcd(point[0] % r, point[1] % r, r)


def nu_measure(r: int, cap: Optional[int] = None) -> TorsionMeasure2:
    _require_positive("r", r)
    check_cap(f"Haar measure on (Z/{r})^2", r * r, resolve_cap(cap))
    mass = Fraction(1, r * r)
    return TorsionMeasure2(r, tuple(((x, y), mass) for x in range(r) for y in range(r)))


def embed_nu(k: int, r: int, cap: Optional[int] = None) -> TorsionMeasure2:
    """Haar measure of (Z/k)² carried to the k-torsion of (Z/r)²"""
    _require_positive("r", r)
    if k < 1 or r % k:
        raise DomainError(f"embedding needs k | r, got k={k}, r={r}")
    check_cap(f"Haar measure on (Z/{k})^2", k * k, resolve_cap(cap))
    step = r // k
    mass = Fraction(1, k * k)
    return TorsionMeasure2(r, tuple(((a * step, b * step), mass) for a in range(k) for b in range(k)))


def tau_measure(r: int, cap: Optional[int] = None) -> TorsionMeasure2:
    pairs = generating_pairs(r, cap)
    mass = Fraction(1, len(pairs))
    return TorsionMeasure2(r, tuple((point, mass) for point in pairs))


def _embed_tau(k: int, r: int, cap: Optional[int]) -> Dict[Point, Fraction]:
    step = r // k
    return {(x * step, y * step): weight for (x, y), weight in tau_measure(k, cap).weights}


@dataclass(frozen=True)
class DecompositionReport:
    """Outcome of a pointwise identity check on (Z/r)²"""

    r: int
    coefficients: Tuple[Tuple[int, Fraction], ...]
    points_checked: int
    residual: Fraction

    @property
    def exact(self) -> bool:
        return self.residual == 0

    def to_dict(self) -> Dict[str, object]:
        return {
            "r": self.r,
            "coefficients": [{"k": k, "coefficient": format_rational(c)} for k, c in self.coefficients],
            "points_checked": self.points_checked,
            "residual": format_rational(self.residual),
        }


def _max_discrepancy(r: int, left: Mapping[Point, Fraction], right: Mapping[Point, Fraction]) -> Fraction:
    residual = Fraction(0)
    for x in range(r):
        for y in range(r):
            gap = abs(left.get((x, y), Fraction(0)) - right.get((x, y), Fraction(0)))
            residual = max(residual, gap)
    return residual


def decompose_tau(r: int, cap: Optional[int] = None) -> DecompositionReport:
    """Check τ_r = Σ_{k|r} α(k, r)·ν_k pointwise on (Z/r)²

    Raises:
        InvariantViolation: when any point disagrees
    """
    _require_positive("r", r)
    check_cap(f"pointwise check on (Z/{r})^2", r * r, resolve_cap(cap))
    coefficients = tuple((k, alpha(k, r)) for k in divisors(r))

    combined: Dict[Point, Fraction] = defaultdict(Fraction)
    for k, coefficient in coefficients:
        for point, weight in embed_nu(k, r, cap).weights:
            combined[point] += coefficient * weight
    # Validates total mass 1 of the signed combination
    TorsionMeasure2.from_mapping(r, combined, signed=True)

    residual = _max_discrepancy(r, combined, tau_measure(r, cap).as_dict())
    report = DecompositionReport(r, coefficients, r * r, residual)
    if not report.exact:
        raise InvariantViolation(f"tau_{r} decomposition is off by {residual}")
    logger.debug(f"tau_{r} decomposition verified over {r * r} points")
    return report


def haar_from_tau(r: int, cap: Optional[int] = None) -> DecompositionReport:
    """Check r²·ν_r = Σ_{k|r} β(k)·τ_k pointwise on (Z/r)²"""
    _require_positive("r", r)
    check_cap(f"pointwise check on (Z/{r})^2", r * r, resolve_cap(cap))
    coefficients = tuple((k, Fraction(beta(k))) for k in divisors(r))

    combined: Dict[Point, Fraction] = defaultdict(Fraction)
    for k, coefficient in coefficients:
        for point, weight in _embed_tau(k, r, cap).items():
            combined[point] += coefficient * weight
    scaled_haar = {point: weight * r * r for point, weight in nu_measure(r, cap).weights}

    residual = _max_discrepancy(r, combined, scaled_haar)
    report = DecompositionReport(r, coefficients, r * r, residual)
    if not report.exact:
        raise InvariantViolation(f"Haar measure on (Z/{r})^2 decomposition is off by {residual}")
    return report


def _prime_product(r: int) -> Fraction:
    product = Fraction(1)
    for p in prime_divisors(r):
        product *= 1 - Fraction(1, p * p)
    return product


def beta_product_ratio(r: int) -> Fraction:
    """β(r)/r², cross-checked against ∏_{p|r} (1 - p^-2)"""
    _require_positive("r", r)
    ratio = Fraction(beta(r), r * r)
    product = _prime_product(r)
    if ratio != product:
        raise InvariantViolation(f"beta({r})/{r}^2 = {ratio} but the prime product is {product}")
    return ratio


def partial_euler_product(limit: int) -> Fraction:
    """∏_{p <= limit} (1 - p^-2) over primes p"""
    product = Fraction(1)
    for p in primerange(2, limit + 1):
        product *= 1 - Fraction(1, int(p) ** 2)
    return product


def min_beta_ratio(r_max: int) -> Tuple[int, Fraction]:
    """The r <= r_max minimizing β(r)/r², and that minimum"""
    _require_positive("r_max", r_max)
    best_r, best = 1, Fraction(1)
    for r in range(2, r_max + 1):
        ratio = _prime_product(r)
        if ratio < best:
            best_r, best = r, ratio
    return best_r, best


def generating_tuple_count(m: int, k: int) -> int:
    """Number of k-tuples in (Z/m)^k generating Z/m: Σ_{d|m} μ(m/d)·d^k"""
    _require_positive("m", m)
    _require_positive("k", k)
    return sum(mobius(m // d) * d ** k for d in divisors(m))


def generating_tuple_ratio(m: int, k: int) -> Fraction:
    return Fraction(generating_tuple_count(m, k), m ** k)


def generating_ratio_lower_bound(m: int, k: int) -> Fraction:
    """1 - Σ_{d|m, d<m} (d/m)^k"""
    _require_positive("m", m)
    return 1 - sum((Fraction(d, m) ** k for d in divisors(m) if d < m), Fraction(0))


def generating_ratio_monotone(m: int, k_max: int) -> bool:
    """Ratios for k = 1..k_max never decrease and respect the lower bound"""
    _require_positive("k_max", k_max)
    previous = Fraction(0)
    for k in range(1, k_max + 1):
        ratio = generating_tuple_ratio(m, k)
        if ratio < previous or ratio < generating_ratio_lower_bound(m, k):
            logger.debug(f"generating ratio for m={m} fails at k={k}: {ratio}")
            return False
        previous = ratio
    return True


def sl2_orbit(point: Point, r: int) -> FrozenSet[Point]:
    """Orbit of a point of (Z/r)² under (x, y) -> (x + y, y) and (x, y) -> (x, x + y)"""
    _require_positive("r", r)
    start = (point[0] % r, point[1] % r)
    seen = {start}
    queue = deque([start])
    while queue:
        x, y = queue.popleft()
        for image in (((x + y) % r, y), (x, (x + y) % r)):
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return frozenset(seen)


def points_of_order(k: int, r: int) -> FrozenSet[Point]:
    """Points of (Z/r)² of order exactly k, i.e. embedded generating pairs of (Z/k)²"""
    _require_positive("r", r)
    if k < 1 or r % k:
        raise DomainError(f"order {k} does not divide {r}")
    step = r // k
    return frozenset((x * step, y * step) for x, y in generating_pairs(k))


@dataclass(frozen=True)
class BetaRow:
    r: int
    beta: int
    ratio: Fraction
    brute: Optional[int]
    alphas: Tuple[Tuple[int, Fraction], ...]

    def to_dict(self) -> Dict[str, object]:
        return {
            "r": self.r,
            "beta": self.beta,
            "brute": self.brute,
            "ratio": format_rational(self.ratio),
            "alphas": ";".join(f"{k}:{format_rational(a)}" for k, a in self.alphas),
        }


def beta_table(r_max: int, brute: bool = True, cap: Optional[int] = None) -> List[BetaRow]:
    """Rows r = 1..r_max of β(r), β(r)/r², the brute count and the α(k, r)"""
    _require_positive("r_max", r_max)
    rows = []
    for r in range(1, r_max + 1):
        value = beta(r)
        counted = count_generating_pairs(r, cap) if brute else None
        if counted is not None and counted != value:
            raise InvariantViolation(f"beta({r}) = {value} but {counted} generating pairs were counted")
        rows.append(BetaRow(
            r=r,
            beta=value,
            ratio=beta_product_ratio(r),
            brute=counted,
            alphas=tuple((k, alpha(k, r)) for k in divisors(r)),
        ))
    return rows


def alpha_sum(r: int) -> Fraction:
    return sum((alpha(k, r) for k in divisors(r)), Fraction(0))

