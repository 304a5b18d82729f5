# crslab/finab/numtheory.py
"""
Integer utilities: divisors, Möbius function, prime powers

Factorization and primality come from sympy; everything returned is a
plain Python int.
"""

from __future__ import annotations

import math
from functools import lru_cache, reduce
from typing import Dict, Iterable, List, Optional, Tuple

from sympy import divisors as _sympy_divisors
from sympy import factorint, isprime, totient

from ..utils.errors import DomainError


def _require_positive(name: str, n: int) -> None:
    if n <= 0:
        raise DomainError(f"{name} requires n >= 1, got {n}")


@lru_cache(maxsize=4096)
def factorize(n: int) -> Tuple[Tuple[int, int], ...]:
    """Prime factorization of n >= 1 as sorted (p, e) pairs"""
    _require_positive("factorize", n)
    return tuple(sorted((int(p), int(e)) for p, e in factorint(n).items()))


def divisors(n: int) -> List[int]:
    """Positive divisors of n in increasing order

    Args:
        n: Positive integer

    Returns:
        Sorted list of divisors
    """
    _require_positive("divisors", n)
    return [int(d) for d in _sympy_divisors(n)]


def mobius(n: int) -> int:
    """Möbius function: 0 on non-squarefree n, else (-1)^(number of primes)"""
    _require_positive("mobius", n)
    factors = factorize(n)
    if any(e > 1 for _, e in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def euler_phi(n: int) -> int:
    """Euler's totient"""
    _require_positive("euler_phi", n)
    return int(totient(n))


def gcd(*values: int) -> int:
    return math.gcd(*values)


def lcm(*values: int) -> int:
    """Least common multiple; lcm() of no values is 1"""
    return reduce(lambda a, b: a * b // math.gcd(a, b) if a and b else 0, values, 1)


def is_prime(p: int) -> bool:
    return p >= 2 and bool(isprime(p))


def prime_power(q: int) -> Optional[Tuple[int, int]]:
    """Return (p, e) when q = p^e with e >= 1, else None"""
    if q < 2:
        return None
    factors = factorize(q)
    if len(factors) != 1:
        return None
    return factors[0]


def require_prime(p: int) -> int:
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    return p


def require_prime_power(q: int) -> Tuple[int, int]:
    pe = prime_power(q)
    if pe is None:
        raise DomainError(f"{q} is not a prime power")
    return pe


def valuation(n: int, p: int) -> int:
    """Exponent of the prime p in n >= 1"""
    _require_positive("valuation", n)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def radical(n: int) -> int:
    """Product of the distinct primes dividing n >= 1"""
    return math.prod(p for p, _ in factorize(n))


def prime_divisors(n: int) -> List[int]:
    return [p for p, _ in factorize(n)]


def dirichlet_sum(values: Dict[int, int], n: int) -> int:
    """Σ_{d|n} values[d]"""
    return sum(values[d] for d in divisors(n))


def mobius_invert(summatory: Dict[int, int], n: int) -> int:
    """Recover f(n) from F(r) = Σ_{s|r} f(s) via Σ_{s|n} mobius(n/s) F(s)"""
    return sum(mobius(n // s) * summatory[s] for s in divisors(n))


def multiplicative_check(func, pairs: Iterable[Tuple[int, int]]) -> bool:
    """True when func(a*b) == func(a)*func(b) for every coprime pair given"""
    return all(
        func(a * b) == func(a) * func(b)
        for a, b in pairs
        if math.gcd(a, b) == 1
    )
