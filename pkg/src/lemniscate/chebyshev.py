"""Chebyshev polynomials and the factors ``D_n`` of ``C_n(x) = 2 T_n(x/2)``.

For odd ``n`` the monic polynomial ``C_n`` factors as the product of
``D_k`` over the divisors ``k`` of ``n``, with ``D_1 = x``.  ``D_n`` is
obtained here by exact division, the same way lemnatomic polynomials are
peeled out of division polynomials.  Polynomials are :class:`ZiPoly`
values whose imaginary parts vanish.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .errors import InternalInconsistency, NotDivisible, NotOdd
from .gaussint import factor_integer
from .report import Check
from .zipoly import X, ZiPoly, exact_div


def _real(coeffs) -> ZiPoly:
    return ZiPoly.from_parts(list(coeffs))


@lru_cache(maxsize=None)
def _t_coeffs(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    if n == 1:
        return (0, 1)
    prev, cur = [1], [0, 1]
    for _ in range(n - 1):
        nxt = [0] + [2 * c for c in cur]
        for k, c in enumerate(prev):
            nxt[k] -= c
        prev, cur = cur, nxt
    return tuple(cur)


def chebyshev_T(n: int) -> ZiPoly:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _real(_t_coeffs(n))


def monic_C(n: int) -> ZiPoly:
    """``2 T_n(x/2)``: monic with integer coefficients for ``n >= 1``."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    for k, t in enumerate(_t_coeffs(n)):
        q, r = divmod(2 * t, 1 << k)
        if r:
            raise InternalInconsistency(f"2 T_{n}(x/2) has a non-integral coefficient")
        out.append(q)
    return _real(out)


def _require_odd_positive(n) -> int:
    if not isinstance(n, int) or n < 1 or n % 2 == 0:
        raise NotOdd(f"{n!r} is not an odd positive integer")
    return n


def _divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factor_integer(n):
        divs = [d * p**j for d in divs for j in range(e + 1)]
    return sorted(divs)


@lru_cache(maxsize=None)
def _D(k: int) -> ZiPoly:
    if k == 1:
        return X
    poly = monic_C(k)
    for d in _divisors(k)[:-1]:
        try:
            poly = exact_div(poly, _D(d))
        except NotDivisible as exc:
            raise InternalInconsistency(f"D_{d} does not divide C_{k}") from exc
    return poly


def factor_D(n: int) -> dict[int, ZiPoly]:
    """Map each divisor ``k`` of odd ``n`` to ``D_k``, in increasing ``k``."""
    n = _require_odd_positive(n)
    return {k: _D(k) for k in _divisors(n)}


def euler_phi(n: int) -> int:
    out = n
    for p, _ in factor_integer(n):
        out = out // p * (p - 1)
    return out


def expected_D_constant(n: int) -> int:
    facs = factor_integer(n)
    if len(facs) == 1:
        p = facs[0][0]
        return (-1) ** ((p - 1) // 2) * p
    return 1


def verify_D_constant(n: int) -> Check:
    n = _require_odd_positive(n)
    if n < 3:
        raise NotOdd("n must be at least 3")
    got = _D(n)[0].re
    want = expected_D_constant(n)
    return Check("D_constant", got == want, {"n": n, "observed": got, "expected": want})


def verify_factorization(n: int) -> Check:
    n = _require_odd_positive(n)
    parts = factor_D(n)
    prod = ZiPoly.constant(1)
    for d in parts.values():
        prod = prod * d
    degrees_ok = all(d.degree() == euler_phi(k) for k, d in parts.items())
    return Check(
        "D_factorization",
        prod == monic_C(n) and degrees_ok,
        {"n": n, "degrees": {k: d.degree() for k, d in parts.items()}},
    )


def sin_identity_check(n: int, thetas) -> float:
    """Max of ``|sin(n t) - (-1)^((n-1)/2) T_n(sin t)|`` over the sample angles."""
    n = _require_odd_positive(n)
    thetas = np.atleast_1d(np.asarray(thetas, dtype=float))
    coeffs = np.array([float(c) for c in _t_coeffs(n)][::-1])
    rhs = (-1) ** ((n - 1) // 2) * np.polyval(coeffs, np.sin(thetas))
    return float(np.max(np.abs(np.sin(n * thetas) - rhs)))


def c_roots(n: int) -> list[float]:
    """The roots ``2 sin(2 pi a / n)``, ``a = 0..n-1``, sorted."""
    return sorted(2 * math.sin(2 * math.pi * a / n) for a in range(n))
