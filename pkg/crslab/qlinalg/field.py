# crslab/qlinalg/field.py
"""
Finite field arithmetic on integer codes

Elements of F_q are integers in [0, q). For prime q the code is the
residue. For q = p^e with e > 1 the code of a0 + a1*x + ... is
a0 + a1*p + a2*p^2 + ..., computed modulo the monic irreducible
polynomial of degree e over F_p whose lower coefficients have the
smallest such code (x^2+x+1 for F_4, x^3+x+1 for F_8, x^2+1 for F_9).
Extension fields are table driven and shipped up to q = 64.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Tuple

from sympy import Poly, symbols

from ..config.constants import MAX_ORACLE_FIELD_ORDER
from ..finab.numtheory import is_prime, prime_power
from ..utils.errors import DomainError, UnsupportedParameterError

logger = logging.getLogger(__name__)

_X = symbols('x')


def _digits(code: int, p: int, e: int) -> List[int]:
    out = []
    for _ in range(e):
        code, digit = divmod(code, p)
        out.append(digit)
    return out


def _code(digits: List[int], p: int) -> int:
    value = 0
    for digit in reversed(digits):
        value = value * p + digit
    return value


def find_irreducible(p: int, e: int) -> Tuple[int, ...]:
    """Lower coefficients (c0, ..., c_{e-1}) of the fixed modulus x^e + ..."""
    for code in range(p ** e):
        lower = _digits(code, p, e)
        coefficients = [1] + list(reversed(lower))
        if Poly(coefficients, _X, modulus=p).is_irreducible:
            return tuple(lower)
    raise DomainError(f"no irreducible polynomial of degree {e} over F_{p}")


def _poly_mulmod(a: List[int], b: List[int], modulus: Tuple[int, ...], p: int) -> List[int]:
    e = len(modulus)
    product = [0] * (2 * e - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                product[i + j] = (product[i + j] + ai * bj) % p
    # x^e = -(c0 + c1 x + ... + c_{e-1} x^{e-1})
    for degree in range(2 * e - 2, e - 1, -1):
        top = product[degree]
        if top:
            product[degree] = 0
            for i, c in enumerate(modulus):
                product[degree - e + i] = (product[degree - e + i] - top * c) % p
    return product[:e]


@dataclass(frozen=True)
class FieldSpec:
    """The field F_q, q = p^e"""

    p: int
    e: int = 1
    modulus: Tuple[int, ...] = field(default=(), compare=False, repr=False)
    add_table: Tuple[Tuple[int, ...], ...] = field(default=(), compare=False, repr=False)
    mul_table: Tuple[Tuple[int, ...], ...] = field(default=(), compare=False, repr=False)
    log_table: Tuple[int, ...] = field(default=(), compare=False, repr=False)
    exp_table: Tuple[int, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        if not is_prime(self.p):
            raise DomainError(f"field characteristic {self.p} is not prime")
        if self.e < 1:
            raise DomainError(f"field degree must be positive, got {self.e}")
        if self.e > 1 and not self.mul_table:
            raise DomainError("extension fields are built by get_field")

    @property
    def q(self) -> int:
        return self.p ** self.e

    @property
    def is_prime_field(self) -> bool:
        return self.e == 1

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        return self.add_table[a][b]

    def neg(self, a: int) -> int:
        if self.e == 1:
            return (-a) % self.p
        digits = _digits(a, self.p, self.e)
        return _code([(-d) % self.p for d in digits], self.p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a * b) % self.p
        return self.mul_table[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DomainError("zero has no inverse")
        if self.e == 1:
            return pow(a, -1, self.p)
        order = self.q - 1
        return self.exp_table[(order - self.log_table[a]) % order]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def elements(self) -> range:
        return range(self.q)

    def __str__(self) -> str:
        return f"F_{self.q}"


def _build_extension(p: int, e: int) -> FieldSpec:
    q = p ** e
    modulus = find_irreducible(p, e)
    digits = [_digits(code, p, e) for code in range(q)]
    add_table = tuple(
        tuple(_code([(x + y) % p for x, y in zip(digits[a], digits[b])], p) for b in range(q))
        for a in range(q)
    )
    mul_table = tuple(
        tuple(_code(_poly_mulmod(digits[a], digits[b], modulus, p), p) for b in range(q))
        for a in range(q)
    )

    # Discrete log tables over the first primitive element found
    exp_table: List[int] = []
    for g in range(2, q):
        powers = [1]
        while len(powers) < q - 1:
            powers.append(mul_table[powers[-1]][g])
        if len(set(powers)) == q - 1:
            exp_table = powers
            break
    log_table = [0] * q
    for exponent, value in enumerate(exp_table):
        log_table[value] = exponent

    logger.debug(f"Built F_{q} tables over modulus lower coefficients {modulus}")
    return FieldSpec(
        p=p,
        e=e,
        modulus=modulus,
        add_table=add_table,
        mul_table=mul_table,
        log_table=tuple(log_table),
        exp_table=tuple(exp_table),
    )


@lru_cache(maxsize=64)
def get_field(q: int) -> FieldSpec:
    """Return the field of order q

    Args:
        q: Prime power; extension fields need q <= 64

    Returns:
        FieldSpec for F_q
    """
    pe = prime_power(q)
    if pe is None:
        raise DomainError(f"field order {q} is not a prime power")
    p, e = pe
    if e == 1:
        return FieldSpec(p=p, e=1)
    if q > MAX_ORACLE_FIELD_ORDER:
        raise UnsupportedParameterError(
            f"extension field F_{q} exceeds the shipped table limit {MAX_ORACLE_FIELD_ORDER}"
        )
    return _build_extension(p, e)
