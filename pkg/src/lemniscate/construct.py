"""Ruler-and-compass division of the lemniscate.

The lemniscate can be divided into ``n`` equal arcs exactly when
``n = 2^k p_1 ... p_m`` with distinct Fermat primes ``p_j``.  The
equivalent group-theoretic test asks whether ``|(Z[i]/n)^x|`` is a power
of two.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotOddInteger
from .gaussint import factor_integer, is_rational_prime, unit_group_order_integer


@dataclass(frozen=True)
class FermatDecomposition:
    k: int
    primes: tuple[int, ...]

    def __str__(self):
        parts = ([f"2^{self.k}"] if self.k else []) + [str(p) for p in self.primes]
        return " * ".join(parts) if parts else "1"


@dataclass(frozen=True)
class NotDecomposable:
    """Why ``n`` has no Fermat decomposition: ``reason`` names the offending prime."""

    n: int
    prime: int
    reason: str

    def __str__(self):
        return self.reason

    def __bool__(self):
        return False


def _is_power_of_two(m: int) -> bool:
    return m > 0 and m & (m - 1) == 0


def is_fermat_prime(p: int) -> bool:
    if p < 3 or not _is_power_of_two(p - 1):
        return False
    if not _is_power_of_two((p - 1).bit_length() - 1):
        return False
    return is_rational_prime(p)


def odd_part(n: int) -> tuple[int, int]:
    """Return ``(k, m)`` with ``n = 2^k m`` and ``m`` odd."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    k = (n & -n).bit_length() - 1
    return k, n >> k


def fermat_decomposition(n: int) -> FermatDecomposition | NotDecomposable:
    k, m = odd_part(int(n))
    primes = []
    for p, e in factor_integer(m):
        if not is_fermat_prime(p):
            return NotDecomposable(n, p, f"{p} is not a Fermat prime")
        if e > 1:
            return NotDecomposable(n, p, f"{p} divides {n} more than once")
        primes.append(p)
    return FermatDecomposition(k, tuple(primes))


def is_constructible(n: int) -> bool:
    return isinstance(fermat_decomposition(n), FermatDecomposition)


def power_of_two_test(n: int) -> bool:
    """True when the unit group of ``Z[i]/n`` has 2-power order (``n`` odd)."""
    if not isinstance(n, int) or n < 1 or n % 2 == 0:
        raise NotOddInteger(f"{n!r} is not an odd positive integer")
    return _is_power_of_two(unit_group_order_integer(n))
