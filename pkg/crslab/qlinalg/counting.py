# crslab/qlinalg/counting.py
"""
q-combinatorial counts and rank probabilities

All values are exact ints or Fractions. q is treated as an integer here,
so any q >= 2 is accepted whether or not a field of that order exists.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import List

from ..utils.errors import DomainError


def _check(name: str, q: int, *values: int) -> None:
    if q < 2:
        raise DomainError(f"{name}: q must be >= 2, got {q}")
    for v in values:
        if v < 0:
            raise DomainError(f"{name}: arguments must be nonnegative, got {v}")


@lru_cache(maxsize=None)
def s_seq(n: int, q: int) -> int:
    """(q^n - 1)(q^(n-1) - 1)...(q - 1); 1 for n = 0"""
    _check("s_seq", q, n)
    result = 1
    for i in range(1, n + 1):
        result *= q ** i - 1
    return result


def t_seq(n: int, q: int) -> int:
    """(q^n - 1)(q^n - q)...(q^n - q^(n-1))"""
    _check("t_seq", q, n)
    result = 1
    for i in range(n):
        result *= q ** n - q ** i
    return result


def gl_order(n: int, q: int) -> int:
    """|GL_n(q)| in the factored form q^(n choose 2) * s_n"""
    _check("gl_order", q, n)
    return q ** (n * (n - 1) // 2) * s_seq(n, q)


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n"""
    _check("gaussian_binomial", q, n, k)
    if k > n:
        raise DomainError(f"gaussian_binomial: k = {k} exceeds n = {n}")
    return s_seq(n, q) // (s_seq(n - k, q) * s_seq(k, q))


def rank_count(kappa: int, n: int, r: int, q: int) -> int:
    """Number of κ × n matrices over F_q of rank r"""
    _check("rank_count", q, kappa, n, r)
    if r > min(kappa, n):
        raise DomainError(f"rank_count: rank {r} exceeds min({kappa}, {n})")
    numerator = q ** (r * (r - 1) // 2) * s_seq(kappa, q) * s_seq(n, q)
    denominator = s_seq(r, q) * s_seq(kappa - r, q) * s_seq(n - r, q)
    return numerator // denominator


def rank_count_orbit(kappa: int, n: int, r: int, q: int) -> int:
    """Rank-r count as an orbit of GL_κ × GL_n acting by (A, B)·M = A M B^-1

    The stabilizer of the normal form [[I_r, 0], [0, 0]] has order
    |GL_r| q^(r(κ-r)) |GL_(κ-r)| q^(r(n-r)) |GL_(n-r)|.
    """
    _check("rank_count_orbit", q, kappa, n, r)
    if r > min(kappa, n):
        raise DomainError(f"rank_count_orbit: rank {r} exceeds min({kappa}, {n})")
    group = gl_order(kappa, q) * gl_order(n, q)
    stabilizer = (
        gl_order(r, q)
        * q ** (r * (kappa - r)) * gl_order(kappa - r, q)
        * q ** (r * (n - r)) * gl_order(n - r, q)
    )
    return group // stabilizer


def vtilde(n: int, k: int, kappa: int, q: int) -> Fraction:
    """P(dim Ker h = k) for a uniform h: F_q^n -> F_q^κ; zero outside n >= k, κ >= n - k"""
    _check("vtilde", q, n, k, kappa)
    if k > n or kappa < n - k:
        return Fraction(0)
    return Fraction(rank_count(kappa, n, n - k, q), q ** (kappa * n))


def v_small(n: int, k: int, kappa: int, q: int) -> Fraction:
    """Probability of one fixed k-dimensional subspace: vtilde / d_(n,k)"""
    _check("v_small", q, n, k, kappa)
    if k > n:
        raise DomainError(f"v_small: k = {k} exceeds n = {n}")
    return vtilde(n, k, kappa, q) / gaussian_binomial(n, k, q)


def v_small_closed_form(n: int, k: int, kappa: int, q: int) -> Fraction:
    """q^((n-k)(n-k-1)/2 - κn) s_κ / s_(κ-n+k), valid when κ >= n - k"""
    _check("v_small_closed_form", q, n, k, kappa)
    if k > n or kappa < n - k:
        return Fraction(0)
    r = n - k
    exponent = r * (r - 1) // 2 - kappa * n
    return Fraction(q) ** exponent * Fraction(s_seq(kappa, q), s_seq(kappa - r, q))


def vtilde_vector(n: int, kappa: int, q: int) -> List[Fraction]:
    """[vtilde(n, 0), ..., vtilde(n, n)]"""
    _check("vtilde_vector", q, n, kappa)
    return [vtilde(n, k, kappa, q) for k in range(n + 1)]


def image_dim_distribution(q: int, kappa: int, n: int) -> List[Fraction]:
    """Law of dim h(F_q^κ) for uniform h: F_q^κ -> F_q^n

    Entry r is P(rank of a uniform n × κ matrix = r), r = 0..min(κ, n).
    """
    _check("image_dim_distribution", q, kappa, n)
    total = q ** (kappa * n)
    return [Fraction(rank_count(n, kappa, r, q), total) for r in range(min(kappa, n) + 1)]
