"""Dense univariate polynomials over Z[i] and over the residue fields Z[i]/(pi).

A :class:`ZiPoly` stores the real and imaginary parts of its coefficients as
two tuples of Python ints (ascending degree, trimmed), which keeps the hot
loops on plain integers.  ``coeffs`` exposes the coefficients as
:class:`~lemniscate.gaussint.GaussInt` values.

Reduction modulo a normalized odd prime ``pi`` lands in :class:`FqPoly`,
whose arithmetic runs on the int64 kernels in :mod:`lemniscate.kernels`.
Polynomial gcds over Q(i) are computed by a modular algorithm on top of the
same kernels.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import NotDivisible, NotSquarefree, ZeroReduction
from .gaussint import (
    ONE,
    ZERO,
    GaussInt,
    canonical_associate,
    format_gaussint,
    gcd_many,
    is_probable_prime,
    norm,
    sqrt_minus_one,
)
from .gaussint import gcd as gauss_gcd

KARATSUBA_THRESHOLD = int(os.environ.get("LEMN_KARATSUBA_THRESHOLD", "32"))


def _trim(re: list, im: list) -> tuple[tuple, tuple]:
    n = len(re)
    while n and re[n - 1] == 0 and im[n - 1] == 0:
        n -= 1
    return tuple(re[:n]), tuple(im[:n])


class ZiPoly:
    __slots__ = ("re", "im")

    def __init__(self, coeffs: Iterable = ()):
        re, im = [], []
        for c in coeffs:
            c = GaussInt.coerce(c)
            re.append(c.re)
            im.append(c.im)
        self.re, self.im = _trim(re, im)

    @classmethod
    def from_parts(cls, re: Sequence[int], im: Sequence[int] | None = None) -> "ZiPoly":
        if im is None:
            im = [0] * len(re)
        p = cls.__new__(cls)
        p.re, p.im = _trim(list(re), list(im))
        return p

    @classmethod
    def monomial(cls, k: int, c=1) -> "ZiPoly":
        c = GaussInt.coerce(c)
        return cls.from_parts([0] * k + [c.re], [0] * k + [c.im])

    @classmethod
    def constant(cls, c) -> "ZiPoly":
        return cls.monomial(0, c)

    @property
    def coeffs(self) -> tuple[GaussInt, ...]:
        return tuple(GaussInt(a, b) for a, b in zip(self.re, self.im))

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.re) - 1

    def is_zero(self) -> bool:
        return not self.re

    def is_real(self) -> bool:
        return not any(self.im)

    def __len__(self):
        return len(self.re)

    def __getitem__(self, k: int) -> GaussInt:
        if 0 <= k < len(self.re):
            return GaussInt(self.re[k], self.im[k])
        return ZERO

    def lc(self) -> GaussInt:
        return self[len(self.re) - 1] if self.re else ZERO

    def is_monic(self) -> bool:
        return bool(self.re) and self.re[-1] == 1 and self.im[-1] == 0

    # arithmetic

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.re), len(other.re))
        re = [0] * n
        im = [0] * n
        for k, (a, b) in enumerate(zip(self.re, self.im)):
            re[k] = a
            im[k] = b
        for k, (a, b) in enumerate(zip(other.re, other.im)):
            re[k] += a
            im[k] += b
        return ZiPoly.from_parts(re, im)

    __radd__ = __add__

    def __neg__(self):
        return ZiPoly.from_parts([-a for a in self.re], [-b for b in self.im])

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, GaussInt)):
            return self.scale(other)
        if isinstance(other, ZiPoly):
            return mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = ZiPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c) -> "ZiPoly":
        c = GaussInt.coerce(c)
        a, b = c.re, c.im
        if b == 0:
            return ZiPoly.from_parts([a * x for x in self.re], [a * y for y in self.im])
        return ZiPoly.from_parts(
            [a * x - b * y for x, y in zip(self.re, self.im)],
            [a * y + b * x for x, y in zip(self.re, self.im)],
        )

    def exact_scalar_div(self, c) -> "ZiPoly":
        c = GaussInt.coerce(c)
        n = c.norm()
        a, b = c.re, -c.im
        re, im = [], []
        for x, y in zip(self.re, self.im):
            u, v = a * x - b * y, a * y + b * x
            if u % n or v % n:
                raise NotDivisible(f"{c} does not divide every coefficient")
            re.append(u // n)
            im.append(v // n)
        return ZiPoly.from_parts(re, im)

    def __eq__(self, other):
        if isinstance(other, ZiPoly):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, GaussInt)):
            return self == ZiPoly.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def derivative(self) -> "ZiPoly":
        return ZiPoly.from_parts(
            [k * a for k, a in enumerate(self.re)][1:], [k * b for k, b in enumerate(self.im)][1:]
        )

    def content(self) -> GaussInt:
        return gcd_many(self.coeffs)

    def primitive(self) -> "ZiPoly":
        if self.is_zero():
            return self
        c = self.content()
        return self if c == ONE else self.exact_scalar_div(c)

    def canonical(self) -> "ZiPoly":
        """Primitive part scaled by a unit so the leading coefficient is canonical."""
        if self.is_zero():
            return self
        p = self.primitive()
        lc = p.lc()
        u = canonical_associate(lc).exact_div(lc)
        return p if u == ONE else p.scale(u)

    def __call__(self, z):
        return evaluate(self, z)

    def __repr__(self):
        return f"ZiPoly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)

    def to_json(self) -> dict:
        return {"coeffs": [[str(a), str(b)] for a, b in zip(self.re, self.im)]}

    @classmethod
    def from_json(cls, data) -> "ZiPoly":
        return cls.from_parts([int(a) for a, _ in data["coeffs"]], [int(b) for _, b in data["coeffs"]])


def _as_poly(x):
    if isinstance(x, ZiPoly):
        return x
    if isinstance(x, (int, GaussInt)):
        return ZiPoly.constant(x)
    return NotImplemented


X = ZiPoly.from_parts([0, 1])
ONE_POLY = ZiPoly.from_parts([1])
ZERO_POLY = ZiPoly.from_parts([])


# ---------------------------------------------------------------------------
# multiplication


def _school(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b, i):
                out[j] += x * y
    return out


def _addto(acc: list[int], src: Sequence[int], shift: int) -> None:
    for k, v in enumerate(src, shift):
        acc[k] += v


def _kara(a: Sequence[int], b: Sequence[int], threshold: int) -> list[int]:
    na, nb = len(a), len(b)
    if na == 0 or nb == 0:
        return []
    if min(na, nb) < threshold:
        return _school(a, b)
    m = max(na, nb) // 2
    a0, a1 = a[:m], a[m:]
    b0, b1 = b[:m], b[m:]
    z0 = _kara(a0, b0, threshold)
    z2 = _kara(a1, b1, threshold)
    sa = [x + y for x, y in _zip_pad(a0, a1)]
    sb = [x + y for x, y in _zip_pad(b0, b1)]
    z1 = _kara(sa, sb, threshold)
    out = [0] * (na + nb - 1)
    _addto(out, z0, 0)
    _addto(out, z2, 2 * m)
    for k, v in enumerate(z1):
        out[m + k] += v - (z0[k] if k < len(z0) else 0) - (z2[k] if k < len(z2) else 0)
    return out


def _zip_pad(a, b):
    n = max(len(a), len(b))
    return zip(list(a) + [0] * (n - len(a)), list(b) + [0] * (n - len(b)))


def _gauss_mul(p: ZiPoly, q: ZiPoly, imul) -> ZiPoly:
    if p.is_zero() or q.is_zero():
        return ZERO_POLY
    p_real, q_real = p.is_real(), q.is_real()
    if p_real and q_real:
        return ZiPoly.from_parts(imul(p.re, q.re))
    if q_real:
        return ZiPoly.from_parts(imul(p.re, q.re), imul(p.im, q.re))
    if p_real:
        return ZiPoly.from_parts(imul(p.re, q.re), imul(p.re, q.im))
    t1 = imul(p.re, q.re)
    t2 = imul(p.im, q.im)
    t3 = imul([x + y for x, y in zip(p.re, p.im)], [x + y for x, y in zip(q.re, q.im)])
    re = [x - y for x, y in zip(t1, t2)]
    im = [z - x - y for x, y, z in zip(t1, t2, t3)]
    return ZiPoly.from_parts(re, im)


def mul_schoolbook(p: ZiPoly, q: ZiPoly) -> ZiPoly:
    return _gauss_mul(p, q, _school)


def mul_karatsuba(p: ZiPoly, q: ZiPoly, threshold: int | None = None) -> ZiPoly:
    t = max(2, threshold or KARATSUBA_THRESHOLD)
    return _gauss_mul(p, q, lambda a, b: _kara(a, b, t))


def mul(p: ZiPoly, q: ZiPoly) -> ZiPoly:
    if min(len(p), len(q)) < KARATSUBA_THRESHOLD:
        return mul_schoolbook(p, q)
    return mul_karatsuba(p, q)


def add(p: ZiPoly, q: ZiPoly) -> ZiPoly:
    return p + q


def sub(p: ZiPoly, q: ZiPoly) -> ZiPoly:
    return p - q


# ---------------------------------------------------------------------------
# division


def exact_div(p: ZiPoly, q: ZiPoly) -> ZiPoly:
    """Quotient r with q*r == p; raises NotDivisible unless q divides p in Z[i][x]."""
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return ZERO_POLY
    dq = q.degree()
    dp = p.degree()
    if dp < dq:
        raise NotDivisible("divisor has larger degree")
    rr, ri = list(p.re), list(p.im)
    qre, qim = q.re, q.im
    c = q.lc()
    cn = c.norm()
    ca, cb = c.re, -c.im  # conj(c)
    unit = cn == 1
    outr = [0] * (dp - dq + 1)
    outi = [0] * (dp - dq + 1)
    for k in range(dp - dq, -1, -1):
        x, y = rr[k + dq], ri[k + dq]
        if x == 0 and y == 0:
            continue
        u, v = x * ca - y * cb, x * cb + y * ca
        if unit:
            tr, ti = u, v
        else:
            if u % cn or v % cn:
                raise NotDivisible("leading coefficient division is not exact")
            tr, ti = u // cn, v // cn
        outr[k], outi[k] = tr, ti
        for j in range(dq + 1):
            a, b = qre[j], qim[j]
            if a or b:
                rr[k + j] -= tr * a - ti * b
                ri[k + j] -= tr * b + ti * a
    if any(rr[:dq]) or any(ri[:dq]):
        raise NotDivisible("nonzero remainder")
    return ZiPoly.from_parts(outr, outi)


def divides(q: ZiPoly, p: ZiPoly) -> bool:
    try:
        exact_div(p, q)
    except NotDivisible:
        return False
    return True


# ---------------------------------------------------------------------------
# structural operations


def reverse(p: ZiPoly, d: int) -> ZiPoly:
    """x**d * p(1/x); requires d >= deg p."""
    if d < p.degree():
        raise ValueError("reverse length shorter than the polynomial")
    re = list(p.re) + [0] * (d + 1 - len(p.re))
    im = list(p.im) + [0] * (d + 1 - len(p.im))
    return ZiPoly.from_parts(re[::-1], im[::-1])


def conjugate(p: ZiPoly) -> ZiPoly:
    return ZiPoly.from_parts(p.re, [-b for b in p.im])


def compose_xk(p: ZiPoly, k: int) -> ZiPoly:
    """p(x**k)."""
    if p.is_zero():
        return p
    n = (len(p.re) - 1) * k + 1
    re, im = [0] * n, [0] * n
    re[::k] = p.re
    im[::k] = p.im
    return ZiPoly.from_parts(re, im)


def compose_x4(p: ZiPoly) -> ZiPoly:
    return compose_xk(p, 4)


def shift(p: ZiPoly, k: int) -> ZiPoly:
    """x**k * p."""
    return ZiPoly.from_parts([0] * k + list(p.re), [0] * k + list(p.im))


def compose(p: ZiPoly, q: ZiPoly) -> ZiPoly:
    """p(q(x)) by Horner."""
    out = ZERO_POLY
    for c in reversed(p.coeffs):
        out = out * q + c
    return out


def evaluate(p: ZiPoly, z) -> GaussInt:
    """Exact Horner evaluation at a Gaussian integer."""
    z = GaussInt.coerce(z)
    zr, zi = z.re, z.im
    ar = ai = 0
    for a, b in zip(reversed(p.re), reversed(p.im)):
        ar, ai = ar * zr - ai * zi + a, ar * zi + ai * zr + b
    return GaussInt(ar, ai)


eval = evaluate  # noqa: A001 - public name used by callers


def eval_complex(p: ZiPoly, z, dps: int = 40):
    """Horner evaluation in mpmath complex arithmetic at ``dps`` digits.

    Returns ``(value, error_bound)`` where the bound is the classical Horner
    rounding bound ``2 n u sum |c_k| |z|**k`` with unit roundoff ``u``.
    """
    import mpmath

    with mpmath.workdps(dps):
        z = mpmath.mpc(z)
        az = abs(z)
        acc = mpmath.mpc(0)
        mag = mpmath.mpf(0)
        for a, b in zip(reversed(p.re), reversed(p.im)):
            acc = acc * z + mpmath.mpc(a, b)
            mag = mag * az + mpmath.sqrt(mpmath.mpf(a) ** 2 + mpmath.mpf(b) ** 2)
        u = mpmath.mpf(10) ** (-dps)
        bound = 2 * max(len(p.re), 1) * u * mag
        return +acc, +bound


# ---------------------------------------------------------------------------
# text form


def _mono(k: int) -> str:
    return "" if k == 0 else ("x" if k == 1 else f"x^{k}")


def format_poly(p: ZiPoly) -> str:
    if p.is_zero():
        return "0"
    terms: list[tuple[str, str]] = []
    for k in range(p.degree(), -1, -1):
        a, b = p.re[k], p.im[k]
        if a == 0 and b == 0:
            continue
        mono = _mono(k)
        if b == 0:
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            body = mono if (mag == 1 and k) else f"{mag}{mono}"
        else:
            sign = "+"
            c = GaussInt(a, b)
            if a == 0 and b in (1, -1) and k:
                sign, body = ("-" if b < 0 else "+"), f"i{mono}"
            else:
                body = f"({format_gaussint(c)}){mono}"
        terms.append((sign, body))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# Eisenstein shape


def is_eisenstein_at(p: ZiPoly, pi) -> bool:
    """Non-leading coefficients divisible by pi, constant term not by pi**2."""
    pi = GaussInt.coerce(pi)
    if p.degree() < 1:
        return False
    coeffs = p.coeffs
    if not all(pi.divides(c) for c in coeffs[:-1]):
        return False
    return not (pi * pi).divides(coeffs[0])


# ---------------------------------------------------------------------------
# residue fields


@dataclass(frozen=True)
class ResidueField:
    """Z[i]/(pi) for a normalized odd prime pi, realised as F_p or F_p[t]/(t^2+1)."""

    pi: GaussInt
    p: int
    degree: int  # 1 split, 2 inert
    i_image: int | None  # residue of i in F_p when split

    @property
    def size(self) -> int:
        return self.p ** self.degree


@lru_cache(maxsize=None)
def residue_field(pi) -> ResidueField:
    pi = GaussInt.coerce(pi)
    n = pi.norm()
    if pi.re == 0 or pi.im == 0:
        p = abs(pi.re + pi.im)
        if p * p != n or p % 4 != 3:
            raise ValueError(f"{pi} is not an odd Gaussian prime")
        if p >= 2 ** 31:
            raise ValueError("residue characteristic too large for int64 kernels")
        return ResidueField(pi, p, 2, None)
    if n % 2 == 0 or n >= 2 ** 31:
        raise ValueError(f"{pi} is not a usable odd Gaussian prime")
    # a + b*i = 0  =>  i = -a / b
    r = (-pi.re * pow(pi.im, -1, n)) % n
    return ResidueField(pi, n, 1, r)


class FqPoly:
    """Polynomial over a residue field Z[i]/(pi); immutable."""

    __slots__ = ("field", "c")

    def __init__(self, field: ResidueField, c: np.ndarray):
        self.field = field
        k = kernels.ACTIVE
        self.c = k.fp_trim(c) if field.degree == 1 else k.fp2_trim(c)

    @property
    def modulus(self) -> GaussInt:
        return self.field.pi

    def degree(self) -> int:
        return self.c.shape[0] - 1

    def is_zero(self) -> bool:
        return self.c.shape[0] == 0

    def _k(self, name):
        prefix = "fp_" if self.field.degree == 1 else "fp2_"
        return getattr(kernels.ACTIVE, prefix + name)

    def _wrap(self, c) -> "FqPoly":
        return FqPoly(self.field, c)

    def __mul__(self, other: "FqPoly") -> "FqPoly":
        return self._wrap(self._k("mul")(self.c, other.c, self.field.p))

    def __sub__(self, other: "FqPoly") -> "FqPoly":
        n = max(self.c.shape[0], other.c.shape[0])
        shape = (n,) if self.field.degree == 1 else (n, 2)
        out = np.zeros(shape, dtype=np.int64)
        out[: self.c.shape[0]] += self.c
        out[: other.c.shape[0]] -= other.c
        return self._wrap(out % self.field.p)

    def __divmod__(self, other: "FqPoly"):
        q, r = self._k("divmod")(self.c, other.c, self.field.p)
        return self._wrap(q), self._wrap(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def gcd(self, other: "FqPoly") -> "FqPoly":
        return self._wrap(self._k("gcd")(self.c, other.c, self.field.p))

    def powmod(self, e: int, f: "FqPoly") -> "FqPoly":
        return self._wrap(self._k("powmod")(self.c, e, f.c, self.field.p))

    def monic(self) -> "FqPoly":
        return self._wrap(self._k("monic")(self.c, self.field.p))

    def derivative(self) -> "FqPoly":
        if self.c.shape[0] <= 1:
            return self._wrap(self.c[:0])
        ks = np.arange(1, self.c.shape[0], dtype=np.int64) % self.field.p
        d = self.c[1:] * (ks if self.field.degree == 1 else ks[:, None]) % self.field.p
        return self._wrap(d)

    def x(self) -> "FqPoly":
        c = np.zeros(2 if self.field.degree == 1 else (2, 2), dtype=np.int64)
        c[1] = 1 if self.field.degree == 1 else (1, 0)
        return self._wrap(c)

    def one(self) -> "FqPoly":
        c = np.ones(1, dtype=np.int64) if self.field.degree == 1 else np.array([[1, 0]], dtype=np.int64)
        return self._wrap(c)

    def __eq__(self, other):
        return (
            isinstance(other, FqPoly)
            and self.field == other.field
            and np.array_equal(self.c, other.c)
        )

    def __hash__(self):
        return hash((self.field, self.c.tobytes()))

    def to_list(self) -> list:
        return self.c.tolist()

    def __repr__(self):
        return f"FqPoly(mod {self.field.pi}, {self.c.tolist()})"


def reduce_mod(p: ZiPoly, pi) -> FqPoly:
    """Image of p in (Z[i]/pi)[x]."""
    field = residue_field(pi)
    q = field.p
    if field.degree == 1:
        r = field.i_image
        arr = np.array([(a + b * r) % q for a, b in zip(p.re, p.im)], dtype=np.int64)
    else:
        arr = np.array([[a % q, b % q] for a, b in zip(p.re, p.im)], dtype=np.int64).reshape(-1, 2)
    return FqPoly(field, arr)


def is_separable_mod(p: ZiPoly, pi) -> bool:
    f = reduce_mod(p, pi)
    if f.is_zero():
        raise ZeroReduction(f"polynomial vanishes modulo {pi}")
    return f.gcd(f.derivative()).degree() == 0


def is_squarefree_fq(f: FqPoly) -> bool:
    return f.gcd(f.derivative()).degree() == 0


def distinct_degree_factorization(f: FqPoly) -> list[tuple[int, FqPoly]]:
    """Split a squarefree polynomial into products of its irreducible factors by degree.

    Returns ``[(d, g_d), ...]`` where ``g_d`` is the monic product of all
    irreducible factors of degree ``d``; empty buckets are omitted.
    """
    if f.degree() < 1:
        return []
    if not is_squarefree_fq(f):
        raise NotSquarefree("distinct-degree factorization needs a squarefree input")
    f = f.monic()
    q = f.field.size
    x = f.x()
    h = x % f
    out = []
    d = 0
    while f.degree() >= 2 * (d + 1):
        d += 1
        h = h.powmod(q, f)
        g = f.gcd(h - x)
        if g.degree() > 0:
            out.append((d, g))
            f = f // g
            h = h % f
    if f.degree() > 0:
        out.append((f.degree(), f))
    return out


def degree_pattern(buckets: list[tuple[int, FqPoly]]) -> list[int]:
    """Multiset of irreducible-factor degrees, ascending."""
    out = []
    for d, g in buckets:
        out.extend([d] * (g.degree() // d))
    return sorted(out)


# ---------------------------------------------------------------------------
# gcd over Q(i) by reduction modulo split primes


@lru_cache(maxsize=None)
def _modular_prime(index: int) -> tuple[int, int, GaussInt]:
    """index-th prime p = 1 mod 4 below 2**31, with sqrt(-1) mod p and pi | (i - r)."""
    if index == 0:
        p = 2 ** 31 - 1
    else:
        p = _modular_prime(index - 1)[0] - 1
    p -= (p - 1) % 4
    while not is_probable_prime(p):
        p -= 4
    r = sqrt_minus_one(p)
    pi = gauss_gcd(GaussInt(p), GaussInt(-r, 1))
    return p, r, pi


def _image(p: ZiPoly, q: int, r: int) -> np.ndarray:
    return np.array([(a + b * r) % q for a, b in zip(p.re, p.im)], dtype=np.int64)


def _symmetric_gauss(c: int, big_pi: GaussInt) -> GaussInt:
    return GaussInt(c) % big_pi


def gcd(a: ZiPoly, b: ZiPoly) -> ZiPoly:
    """Greatest common divisor over Q(i), returned primitive in Z[i][x] with canonical leading coefficient."""
    if a.is_zero():
        return b.canonical()
    if b.is_zero():
        return a.canonical()
    if a.degree() == 0 or b.degree() == 0:
        return ONE_POLY
    A, B = a.primitive(), b.primitive()
    gamma = gauss_gcd(A.lc(), B.lc())
    kern = kernels.ACTIVE
    best_deg = min(A.degree(), B.degree()) + 1
    residues: list[int] = []
    modulus, big_pi = 1, ONE
    previous = None
    idx = 0
    while True:
        q, r, pi = _modular_prime(idx)
        idx += 1
        la = (A.re[-1] + A.im[-1] * r) % q
        lb = (B.re[-1] + B.im[-1] * r) % q
        if la == 0 or lb == 0:
            continue
        g = kern.fp_gcd(_image(A, q, r), _image(B, q, r), q)
        d = g.shape[0] - 1
        if d == 0:
            return ONE_POLY
        if d > best_deg:
            continue
        g = g * ((gamma.re + gamma.im * r) % q) % q
        g = [int(v) for v in g]
        if d < best_deg:
            best_deg = d
            residues = g
            modulus, big_pi = q, pi
            previous = None
        else:
            inv = pow(modulus, -1, q)
            residues = [
                x + modulus * (((v - x) * inv) % q) for x, v in zip(residues, g)
            ]
            modulus *= q
            big_pi = big_pi * pi
        cand = ZiPoly(_symmetric_gauss(c, big_pi) for c in residues)
        if cand == previous:
            h = cand.primitive()
            if divides(h, A) and divides(h, B):
                return h.canonical()
        previous = cand
