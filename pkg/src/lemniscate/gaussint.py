"""Exact arithmetic and unique factorization in the Gaussian integers Z[i].

A Gaussian integer ``b`` is *odd* when it is coprime to ``1+i`` (equivalently
``re + im`` is odd).  Every odd ``b`` is congruent to exactly one unit
``i**e`` modulo ``2(1+i)``; the associate congruent to 1 is called
*normalized*.  Normalized primes are the canonical representatives used
throughout the package.
"""

from __future__ import annotations

import re as _re
from dataclasses import dataclass
from functools import lru_cache
from math import gcd as _int_gcd, isqrt
from typing import Iterable, Union

from .errors import BothZero, NotCoprime, NotOdd, ZeroInput

IntLike = Union[int, "GaussInt"]


def _round_half_down(a: int, b: int) -> int:
    """Nearest integer to a/b (b > 0); ties go toward -infinity."""
    return -((b - 2 * a) // (2 * b))


class GaussInt:
    """Immutable Gaussian integer ``re + im*i`` with arbitrary-precision parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: int = 0, im: int = 0):
        object.__setattr__(self, "re", int(re))
        object.__setattr__(self, "im", int(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussInt is immutable")

    @classmethod
    def coerce(cls, value: IntLike) -> "GaussInt":
        if isinstance(value, GaussInt):
            return value
        if isinstance(value, int):
            return cls(value, 0)
        if isinstance(value, str):
            return parse_gaussint(value)
        if isinstance(value, complex):
            if value.real != int(value.real) or value.imag != int(value.imag):
                raise ValueError(f"not a Gaussian integer: {value!r}")
            return cls(int(value.real), int(value.imag))
        raise TypeError(f"cannot interpret {value!r} as a Gaussian integer")

    # ring structure

    def __add__(self, other):
        if isinstance(other, int):
            return GaussInt(self.re + other, self.im)
        if isinstance(other, GaussInt):
            return GaussInt(self.re + other.re, self.im + other.im)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return GaussInt(-self.re, -self.im)

    def __sub__(self, other):
        if isinstance(other, int):
            return GaussInt(self.re - other, self.im)
        if isinstance(other, GaussInt):
            return GaussInt(self.re - other.re, self.im - other.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, int):
            return GaussInt(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            return GaussInt(self.re * other, self.im * other)
        if isinstance(other, GaussInt):
            a, b, c, d = self.re, self.im, other.re, other.im
            return GaussInt(a * c - b * d, a * d + b * c)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        other = GaussInt.coerce(other)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("Gaussian division by zero")
        num = self * other.conjugate()
        q = GaussInt(_round_half_down(num.re, n), _round_half_down(num.im, n))
        return q, self - q * other

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: IntLike) -> "GaussInt":
        """Return self/other, raising ArithmeticError unless the division is exact."""
        other = GaussInt.coerce(other)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("Gaussian division by zero")
        num = self * other.conjugate()
        if num.re % n or num.im % n:
            raise ArithmeticError(f"{other} does not divide {self}")
        return GaussInt(num.re // n, num.im // n)

    def divides(self, other: IntLike) -> bool:
        other = GaussInt.coerce(other)
        n = self.norm()
        if n == 0:
            return other.is_zero()
        num = other * self.conjugate()
        return num.re % n == 0 and num.im % n == 0

    def conjugate(self) -> "GaussInt":
        return GaussInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_unit(self) -> bool:
        return self.norm() == 1

    # comparison / hashing

    def __eq__(self, other):
        if isinstance(other, GaussInt):
            return self.re == other.re and self.im == other.im
        if isinstance(other, int):
            return self.im == 0 and self.re == other
        if isinstance(other, complex):
            return self.re == other.real and self.im == other.imag
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im)) if self.im else hash(self.re)

    def __bool__(self):
        return not self.is_zero()

    def sort_key(self) -> tuple:
        # conjugate pairs: positive imaginary part first
        return (self.norm(), self.re, -self.im)

    def __complex__(self):
        return complex(self.re, self.im)

    def __repr__(self):
        return f"GaussInt({self.re}, {self.im})"

    def __str__(self):
        return format_gaussint(self)

    def __reduce__(self):
        return (GaussInt, (self.re, self.im))

    def to_json(self) -> list:
        return [str(self.re), str(self.im)]

    @classmethod
    def from_json(cls, data) -> "GaussInt":
        re_, im_ = data
        return cls(int(re_), int(im_))


ZERO = GaussInt(0, 0)
ONE = GaussInt(1, 0)
I = GaussInt(0, 1)
ONE_PLUS_I = GaussInt(1, 1)
UNITS = (ONE, I, GaussInt(-1, 0), GaussInt(0, -1))  # UNITS[e] == i**e
TWO_ONE_PLUS_I = GaussInt(2, 2)


def unit_power(e: int) -> GaussInt:
    return UNITS[e % 4]


def format_gaussint(b: GaussInt) -> str:
    """Text form ``a+bi`` / ``a-bi``; pure reals and pure imaginaries shortened."""
    a, c = b.re, b.im
    if c == 0:
        return str(a)
    if c == 1:
        imag = "i"
    elif c == -1:
        imag = "-i"
    else:
        imag = f"{c}i"
    if a == 0:
        return imag
    return f"{a}{imag}" if imag.startswith("-") else f"{a}+{imag}"


_REAL = _re.compile(r"^[+-]?\d+$")
_IMAG = _re.compile(r"^([+-]?)(\d*)i$")
_BOTH = _re.compile(r"^([+-]?\d+)([+-])(\d*)i$")


def parse_gaussint(text: str) -> GaussInt:
    """Parse ``"3"``, ``"-1+2i"``, ``"- i"``, ``"2 - 3i"`` and similar forms."""
    s = "".join(text.split())
    if _REAL.match(s):
        return GaussInt(int(s), 0)
    m = _IMAG.match(s)
    if m:
        digits = int(m.group(2)) if m.group(2) else 1
        return GaussInt(0, -digits if m.group(1) == "-" else digits)
    m = _BOTH.match(s)
    if m:
        digits = int(m.group(3)) if m.group(3) else 1
        return GaussInt(int(m.group(1)), -digits if m.group(2) == "-" else digits)
    raise ValueError(f"cannot parse Gaussian integer from {text!r}")


# ---------------------------------------------------------------------------
# classification


def norm(b: IntLike) -> int:
    return GaussInt.coerce(b).norm()


def is_odd(b: IntLike) -> bool:
    b = GaussInt.coerce(b)
    return (b.re + b.im) % 2 == 1


def _require_odd(b: IntLike) -> GaussInt:
    b = GaussInt.coerce(b)
    if not is_odd(b):
        raise NotOdd(f"{b} is not odd")
    return b


def unit_class(b: IntLike) -> int:
    """The unique e in {0,1,2,3} with b = i**e mod 2(1+i)."""
    b = _require_odd(b)
    for e, u in enumerate(UNITS):
        if TWO_ONE_PLUS_I.divides(b - u):
            return e
    raise AssertionError("odd Gaussian integer without unit class")  # pragma: no cover


def normalize(b: IntLike) -> tuple[GaussInt, GaussInt]:
    """Return ``(u, u*b)`` with ``u*b`` the normalized associate of odd ``b``."""
    b = _require_odd(b)
    u = unit_power(-unit_class(b))
    return u, u * b


def normalized(b: IntLike) -> GaussInt:
    return normalize(b)[1]


def is_normalized(b: IntLike) -> bool:
    b = GaussInt.coerce(b)
    return is_odd(b) and TWO_ONE_PLUS_I.divides(b - ONE)


def canonical_associate(b: IntLike) -> GaussInt:
    """Canonical representative of the associate class of ``b``.

    Odd elements map to their normalized associate; even nonzero ones to
    ``(1+i)**k * normalized``; zero stays zero.
    """
    b = GaussInt.coerce(b)
    if b.is_zero():
        return b
    k = 0
    while not is_odd(b):
        b = b.exact_div(ONE_PLUS_I)
        k += 1
    return ONE_PLUS_I ** k * normalized(b)


def gcd(a: IntLike, b: IntLike) -> GaussInt:
    """Greatest common divisor, returned in canonical associate form."""
    a, b = GaussInt.coerce(a), GaussInt.coerce(b)
    if a.is_zero() and b.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, a % b
    return canonical_associate(a)


def gcd_many(values: Iterable[IntLike]) -> GaussInt:
    """gcd of a collection; zero when every element is zero."""
    g = ZERO
    for v in values:
        v = GaussInt.coerce(v)
        if v.is_zero():
            continue
        if g.is_zero():
            g = v
        else:
            while not v.is_zero():
                g, v = v, g % v
            if g.is_unit():
                return ONE
    return canonical_associate(g) if not g.is_zero() else ZERO


# ---------------------------------------------------------------------------
# rational-integer helpers


def _trial_factor_int(n: int) -> list[tuple[int, int]]:
    """Factor a positive integer by trial division; returns sorted (p, e)."""
    out = []
    if n < 1:
        raise ValueError("n must be positive")
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    d, step = 5, 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += step
        step = 6 - step
    if n > 1:
        out.append((n, 1))
    return out


def factor_integer(n: int) -> list[tuple[int, int]]:
    return _trial_factor_int(n)


def is_rational_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    d = 5
    while d * d <= n:
        if n % d == 0 or n % (d + 2) == 0:
            return False
        d += 6
    return True


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin with fixed bases; deterministic for n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def sqrt_minus_one(p: int) -> int:
    """A square root of -1 modulo a prime p = 1 mod 4."""
    if p % 4 != 1:
        raise ValueError(f"-1 is not a square modulo {p}")
    for c in range(2, p):
        if pow(c, (p - 1) // 2, p) == p - 1:
            return pow(c, (p - 1) // 4, p)
    raise ValueError(f"{p} is not prime")  # pragma: no cover


@lru_cache(maxsize=None)
def split_prime(p: int) -> GaussInt:
    """Normalized Gaussian prime of norm p for a rational prime p = 1 mod 4."""
    r = sqrt_minus_one(p)
    return normalized(gcd(GaussInt(p), GaussInt(r, 1)))


# ---------------------------------------------------------------------------
# primality and factorization


def is_prime(b: IntLike) -> bool:
    b = GaussInt.coerce(b)
    n = b.norm()
    if is_rational_prime(n):
        return True
    if b.re == 0 or b.im == 0:
        p = abs(b.re + b.im)
        return p % 4 == 3 and is_rational_prime(p)
    return False


@dataclass(frozen=True)
class GaussFactorization:
    """``value == unit * prod(p**e for p, e in factors)``."""

    unit: GaussInt
    factors: tuple[tuple[GaussInt, int], ...]

    def product(self) -> GaussInt:
        out = self.unit
        for p, e in self.factors:
            out = out * p ** e
        return out

    def __str__(self):
        if not self.factors:
            return f"unit {self.unit}, empty"
        parts = []
        for p, e in self.factors:
            s = f"({p})"
            parts.append(s if e == 1 else f"{s}^{e}")
        return f"unit {self.unit}, " + "".join(parts)

    def to_json(self) -> dict:
        return {
            "unit": self.unit.to_json(),
            "factors": [[p.to_json(), e] for p, e in self.factors],
        }


def _strip(b: GaussInt, pi: GaussInt) -> tuple[GaussInt, int]:
    k = 0
    while True:
        q, r = divmod(b, pi)
        if not r.is_zero():
            return b, k
        b, k = q, k + 1


def factor(b: IntLike) -> GaussFactorization:
    b = GaussInt.coerce(b)
    if b.is_zero():
        raise ZeroInput("cannot factor 0")
    found: list[tuple[GaussInt, int]] = []
    rest = b
    for p, _ in _trial_factor_int(b.norm()):
        if p == 2:
            candidates = [ONE_PLUS_I]
        elif p % 4 == 3:
            candidates = [GaussInt(-p)]
        else:
            pi = split_prime(p)
            candidates = [pi, normalized(pi.conjugate())]
        for pi in candidates:
            rest, k = _strip(rest, pi)
            if k:
                found.append((pi, k))
    if not rest.is_unit():
        raise AssertionError(f"incomplete factorization of {b}")  # pragma: no cover
    found.sort(key=lambda t: t[0].sort_key())
    return GaussFactorization(unit=rest, factors=tuple(found))


def prime_power_base(b: IntLike) -> GaussInt | None:
    """Normalized prime pi if b is a unit times pi**k with k >= 1, else None."""
    f = factor(b)
    if len(f.factors) == 1:
        return f.factors[0][0]
    return None


def normalized_divisors(b: IntLike) -> list[GaussInt]:
    b = _require_odd(b)
    if b.is_zero():
        raise NotOdd("0 is not odd")
    divs = [ONE]
    for pi, e in factor(b).factors:
        powers = [pi ** k for k in range(1, e + 1)]
        divs = divs + [d * q for d in divs for q in powers]
    return sorted(divs, key=GaussInt.sort_key)


def unit_group_order(b: IntLike) -> int:
    """|(Z[i]/bZ[i])^x| via the prime-power product formula."""
    b = _require_odd(b)
    out = 1
    for pi, k in factor(b).factors:
        q = pi.norm()
        out *= q ** (k - 1) * (q - 1)
    return out


def unit_group_order_integer(n: int) -> int:
    """The same order for a positive odd integer, from the rational product formula.

    ``n**2 * prod_{p | n} (1 - 1/p)(1 - (-1/p)/p)``, evaluated exactly.
    """
    if n < 1 or n % 2 == 0:
        raise NotOdd(f"{n} is not a positive odd integer")
    num, den = n * n, 1
    for p, _ in _trial_factor_int(n):
        chi = 1 if p % 4 == 1 else -1
        num *= (p - 1) * (p - chi)
        den *= p * p
    assert num % den == 0
    return num // den


def powmod(a: IntLike, k: int, m: IntLike) -> GaussInt:
    a, m = GaussInt.coerce(a), GaussInt.coerce(m)
    result = ONE % m
    base = a % m
    while k:
        if k & 1:
            result = (result * base) % m
        base = (base * base) % m
        k >>= 1
    return result


def is_congruent(a: IntLike, b: IntLike, m: IntLike) -> bool:
    return GaussInt.coerce(m).divides(GaussInt.coerce(a) - GaussInt.coerce(b))


def multiplicative_order(a: IntLike, b: IntLike) -> int:
    """Least t >= 1 with a**t = 1 mod b."""
    a, b = GaussInt.coerce(a), _require_odd(b)
    if not gcd(a, b).is_unit():
        raise NotCoprime(f"{a} and {b} are not coprime")
    h = unit_group_order(b)
    for q, _ in _trial_factor_int(h) if h > 1 else []:
        while h % q == 0 and is_congruent(powmod(a, h // q, b), ONE, b):
            h //= q
    return h


def residues(b: IntLike) -> list[GaussInt]:
    """A complete residue system modulo nonzero b (N(b) elements)."""
    b = GaussInt.coerce(b)
    n = b.norm()
    if n == 0:
        raise ZeroInput("residues modulo 0")
    seen = set()
    out = []
    # m + k*i with 0 <= m < n/g, 0 <= k < g is a transversal, g = gcd(re, im)
    g = _int_gcd(b.re, b.im)
    for k in range(g):
        for m in range(n // g):
            r = GaussInt(m, k) % b
            key = (r.re, r.im)
            if key not in seen:
                seen.add(key)
                out.append(r)
    if len(out) != n:
        raise AssertionError("residue enumeration failed")  # pragma: no cover
    return out


def unit_residues(b: IntLike) -> list[GaussInt]:
    """Representatives of (Z[i]/bZ[i])^x."""
    b = GaussInt.coerce(b)
    if b.is_unit():
        return [ZERO]
    return [r for r in residues(b) if not r.is_zero() and gcd(r, b).is_unit()]




def odd_gaussints_up_to_norm(max_norm: int, normalized_only: bool = True) -> list[GaussInt]:
    """Odd Gaussian integers with 1 <= N <= max_norm, sorted by (norm, re, im)."""
    r = isqrt(max_norm)
    out = []
    for a in range(-r, r + 1):
        for c in range(-r, r + 1):
            b = GaussInt(a, c)
            if 0 < b.norm() <= max_norm and is_odd(b):
                if not normalized_only or is_normalized(b):
                    out.append(b)
    return sorted(out, key=GaussInt.sort_key)


def normalized_primes(max_norm: int | None = None):
    """Normalized Gaussian primes in (norm, re, im) order; infinite if no bound."""
    n = 3
    while max_norm is None or n <= max_norm:
        if is_rational_prime(n):
            if n % 4 == 1:
                pi = split_prime(n)
                yield from sorted([pi, normalized(pi.conjugate())], key=GaussInt.sort_key)
        else:
            r = isqrt(n)
            if r * r == n and r % 4 == 3 and is_rational_prime(r):
                yield GaussInt(-r)
        n += 1
