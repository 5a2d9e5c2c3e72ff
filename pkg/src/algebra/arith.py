"""
Number-theoretic helpers for the divisor sums and parity splits of the counting formulas.
All arithmetic is exact integer arithmetic.
"""

from functools import lru_cache
from math import gcd, isqrt
from typing import FrozenSet, List

from pydantic import BaseModel, ConfigDict, Field

from src.utils.error_handler import FormulaIntegrityError, InvalidInputError


class FlipSolutions(BaseModel):
    """Solutions x of 2x = -1 - a (mod n), the fixed coordinates of a shifted flip"""
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1)
    a: int = Field(..., ge=0)
    solutions: FrozenSet[int]


def _require_positive(n: int, what: str) -> None:
    if n < 1:
        raise InvalidInputError(f"{what} needs a positive integer, got {n}")


@lru_cache(maxsize=None)
def _divisors(n: int) -> tuple:
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return tuple(small + large[::-1])


def divisors(n: int) -> List[int]:
    """Positive divisors of n in ascending order."""
    _require_positive(n, "divisors")
    return list(_divisors(n))


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    """Number of k in 1..n coprime to n."""
    _require_positive(n, "euler_phi")
    result, rest = n, n
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            while rest % p == 0:
                rest //= p
            result -= result // p
        p += 1
    if rest > 1:
        result -= result // rest
    return result


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def flip_solutions(n: int, a: int) -> FlipSolutions:
    """
    Solve x = -1 - x - a (mod n).

    One solution for odd n, two for even n with odd a, none for even n
    with even a.
    """
    _require_positive(n, "flip_solutions")
    if not 0 <= a < n:
        raise InvalidInputError(f"shift {a} is not a residue mod {n}")

    target = (-1 - a) % n
    if n % 2 == 1:
        # 2 is invertible mod odd n
        sols = {(target * ((n + 1) // 2)) % n}
    elif target % 2 == 1:
        sols = set()
    else:
        half = n // 2
        sols = {target // 2, target // 2 + half}
    return FlipSolutions(n=n, a=a, solutions=frozenset(sols))


def minimal_order(a: int, n: int) -> int:
    """Least d >= 1 with d*a = 0 (mod n)."""
    _require_positive(n, "minimal_order")
    return n // gcd(a % n, n)


def exact_div(numerator: int, denominator: int, context: str = "") -> int:
    """Integer quotient that must be exact; a remainder means a formula bug."""
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        where = f" in {context}" if context else ""
        raise FormulaIntegrityError(
            f"{numerator} is not divisible by {denominator}{where}"
        )
    return quotient


def burnside_average(fixed_counts: List[int], group_order: int, context: str = "") -> int:
    """Orbit count from per-element fixed counts; integrality is asserted."""
    return exact_div(sum(fixed_counts), group_order, context or "Burnside average")
