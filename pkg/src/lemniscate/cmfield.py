"""Symbolic complex multiplication on the curve y^2 = 1 - x^4.

A point is a pair ``(X, Y)`` of elements of K(x)[y]/(y^2 - (1 - x^4)), where
``x = phi(z)`` and ``y = phi'(z)`` for the lemniscatic sine ``phi``; ``X`` and
``Y`` stand for ``phi(k z)`` and ``phi'(k z)``.  Points are combined with the
lemniscatic addition law, multiplied by ``i`` via ``(X, Y) -> (iX, Y)``, and
``phi(beta z)`` for odd ``beta = m + n i`` is assembled as
``m*base + n*(i*base)``.  The result is the multiplication map
``i**e * x * P(x^4) / Q(x^4)`` packaged as :class:`MultMap`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DegeneratePair, InternalInconsistency
from .gaussint import (
    ONE,
    GaussInt,
    canonical_associate,
    is_prime,
    norm,
    odd_gaussints_up_to_norm,
    split_prime,
    unit_class,
    unit_power,
    _require_odd,
)
from .zipoly import (
    ONE_POLY,
    ZERO_POLY,
    ZiPoly,
    compose_x4,
    exact_div,
    gcd,
    is_eisenstein_at,
    is_squarefree_fq,
    reduce_mod,
    reverse,
    shift,
)
from .report import Check


class RatFunc:
    """Reduced quotient ``num/den`` of polynomials over Z[i].

    Canonical form: gcd(num, den) = 1 over Q(i), the joint content of num and
    den is a unit, and the leading coefficient of den is in canonical
    associate form.  Equal rational functions therefore compare equal
    coefficientwise.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: ZiPoly, den: ZiPoly = ONE_POLY, *, coprime: bool = False):
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = ZERO_POLY, ONE_POLY
            return
        if not coprime and den.degree() > 0:
            g = gcd(num, den)
            if g.degree() > 0:
                num, den = exact_div(num, g), exact_div(den, g)
        self.num, self.den = _normalize_pair(num, den)

    @classmethod
    def _raw(cls, num: ZiPoly, den: ZiPoly) -> "RatFunc":
        r = cls.__new__(cls)
        r.num, r.den = num, den
        return r

    @classmethod
    def const(cls, c) -> "RatFunc":
        return cls(ZiPoly.constant(c))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den.degree() == 0

    def __add__(self, other: "RatFunc") -> "RatFunc":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        a, b, c, d = self.num, self.den, other.num, other.den
        if b == d:
            return RatFunc(a + c, b)
        g = gcd(b, d)
        if g.degree() == 0:
            return RatFunc(a * d + c * b, b * d, coprime=True)
        bg, dg = exact_div(b, g), exact_div(d, g)
        num = a * dg + c * bg
        den = bg * d
        h = gcd(num, g)
        if h.degree() > 0:
            num, den = exact_div(num, h), exact_div(den, h)
        return RatFunc(num, den, coprime=True)

    def __neg__(self) -> "RatFunc":
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        return self + (-other)

    def __mul__(self, other) -> "RatFunc":
        if isinstance(other, (int, GaussInt)):
            if GaussInt.coerce(other).is_zero():
                return RatFunc(ZERO_POLY)
            return RatFunc(self.num.scale(other), self.den, coprime=True)
        if self.is_zero() or other.is_zero():
            return RatFunc(ZERO_POLY)
        a, b, c, d = self.num, self.den, other.num, other.den
        g1 = gcd(a, d) if d.degree() > 0 else ONE_POLY
        g2 = gcd(c, b) if b.degree() > 0 else ONE_POLY
        if g1.degree() > 0:
            a, d = exact_div(a, g1), exact_div(d, g1)
        if g2.degree() > 0:
            c, b = exact_div(c, g2), exact_div(b, g2)
        return RatFunc(a * c, b * d, coprime=True)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.den, self.num, coprime=True)

    def __truediv__(self, other: "RatFunc") -> "RatFunc":
        return self * other.inverse()

    def __pow__(self, k: int) -> "RatFunc":
        return RatFunc(self.num ** k, self.den ** k, coprime=True)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFunc(({self.num}) / ({self.den}))"


def _normalize_pair(num: ZiPoly, den: ZiPoly) -> tuple[ZiPoly, ZiPoly]:
    from .gaussint import gcd_many

    c = gcd_many(num.coeffs + den.coeffs)
    if c != ONE:
        num, den = num.exact_scalar_div(c), den.exact_scalar_div(c)
    lc = den.lc()
    u = canonical_associate(lc).exact_div(lc)
    if u != ONE:
        num, den = num.scale(u), den.scale(u)
    return num, den


ONE_MINUS_X4 = RatFunc(ZiPoly.from_parts([1, 0, 0, 0, -1]))
RZERO = RatFunc(ZERO_POLY)
RONE = RatFunc(ONE_POLY)


@dataclass(frozen=True)
class FieldElem:
    """``a + b*y`` with ``y**2 = 1 - x**4``."""

    a: RatFunc
    b: RatFunc = RZERO

    def __add__(self, other: "FieldElem") -> "FieldElem":
        return FieldElem(self.a + other.a, self.b + other.b)

    def __neg__(self) -> "FieldElem":
        return FieldElem(-self.a, -self.b)

    def __sub__(self, other: "FieldElem") -> "FieldElem":
        return self + (-other)

    def __mul__(self, other) -> "FieldElem":
        if isinstance(other, (int, GaussInt)):
            return FieldElem(self.a * other, self.b * other)
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        if b1.is_zero() and b2.is_zero():
            return FieldElem(a1 * a2)
        if b1.is_zero():
            return FieldElem(a1 * a2, a1 * b2)
        if b2.is_zero():
            return FieldElem(a1 * a2, b1 * a2)
        re = a1 * a2 + b1 * b2 * ONE_MINUS_X4
        im = a1 * b2 + a2 * b1
        return FieldElem(re, im)

    __rmul__ = __mul__

    def norm(self) -> RatFunc:
        """``(a + b y)(a - b y) = a^2 - b^2 (1 - x^4)``."""
        if self.b.is_zero():
            return self.a * self.a
        return self.a * self.a - self.b * self.b * ONE_MINUS_X4

    def inverse(self) -> "FieldElem":
        if self.b.is_zero():
            return FieldElem(self.a.inverse())
        n = self.norm().inverse()
        return FieldElem(self.a * n, -(self.b * n))

    def __truediv__(self, other: "FieldElem") -> "FieldElem":
        return self * other.inverse()

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def __pow__(self, k: int) -> "FieldElem":
        out = FE_ONE
        for _ in range(k):
            out = out * self
        return out


FE_ZERO = FieldElem(RZERO)
FE_ONE = FieldElem(RONE)
FE_X = FieldElem(RatFunc(ZiPoly.from_parts([0, 1])))
FE_Y = FieldElem(RZERO, RONE)


@dataclass(frozen=True)
class CMPoint:
    """``(phi(k z), phi'(k z))`` expressed through ``x = phi(z)``, ``y = phi'(z)``."""

    X: FieldElem
    Y: FieldElem

    def curve_residual(self) -> FieldElem:
        """``Y^2 + X^4 - 1``; zero for every genuine point."""
        x2 = self.X * self.X
        return self.Y * self.Y + x2 * x2 - FE_ONE


IDENTITY = CMPoint(FE_ZERO, FE_ONE)


def point_base() -> CMPoint:
    return CMPoint(FE_X, FE_Y)


def point_neg(p: CMPoint) -> CMPoint:
    # phi is odd, phi' is even
    return CMPoint(-p.X, p.Y)


def point_i_mult(p: CMPoint) -> CMPoint:
    return CMPoint(p.X * GaussInt(0, 1), p.Y)


def _sum_parts(p: CMPoint, q: CMPoint):
    x1, y1, x2, y2 = p.X, p.Y, q.X, q.Y
    x1sq, x2sq = x1 * x1, x2 * x2
    den = FE_ONE + x1sq * x2sq
    if den.is_zero():
        raise DegeneratePair("addition-law denominator vanishes identically")
    num = x1 * y2 + x2 * y1
    return x1, y1, x2, y2, x1sq, x2sq, den, num


def point_add(p: CMPoint, q: CMPoint) -> CMPoint:
    """Sum by the addition law; the phi' coordinate is its u-derivative.

    With N = X1 Y2 + X2 Y1 and D = 1 + X1^2 X2^2, X3 = N/D and
    Y3 = (N_u D - N D_u)/D^2 where N_u = Y1 Y2 - 2 X1^3 X2 (phi'' = -2 phi^3)
    and D_u = 2 X1 Y1 X2^2.
    """
    if p.X.is_zero() and p.Y == FE_ONE:
        return q
    if q.X.is_zero() and q.Y == FE_ONE:
        return p
    x1, y1, x2, y2, x1sq, x2sq, den, num = _sum_parts(p, q)
    den_inv = den.inverse()
    X3 = num * den_inv
    n_u = y1 * y2 - x1sq * x1 * x2 * 2
    d_u = x1 * y1 * x2sq * 2
    Y3 = (n_u * den - num * d_u) * den_inv * den_inv
    return CMPoint(X3, Y3)


def _add_x_only(p: CMPoint, q: CMPoint) -> FieldElem:
    if p.X.is_zero() and p.Y == FE_ONE:
        return q.X
    if q.X.is_zero() and q.Y == FE_ONE:
        return p.X
    *_, den, num = _sum_parts(p, q)
    return num / den


@lru_cache(maxsize=None)
def _base_multiple(n: int) -> CMPoint:
    if n == 0:
        return IDENTITY
    if n == 1:
        return point_base()
    half = _base_multiple(n // 2)
    doubled = point_add(half, half)
    return point_add(doubled, point_base()) if n % 2 else doubled


def point_int_mult(n: int, p: CMPoint) -> CMPoint:
    """``n * p`` by double-and-add; ``0 * p`` is the identity ``(0, 1)``."""
    if n < 0:
        return point_neg(point_int_mult(-n, p))
    if p == point_base():
        return _base_multiple(n)
    result = IDENTITY
    addend = p
    while n:
        if n & 1:
            result = point_add(result, addend)
        n >>= 1
        if n:
            addend = point_add(addend, addend)
    return result


def point_gauss_mult(beta, p: CMPoint | None = None) -> CMPoint:
    """``beta * p`` for a Gaussian integer ``beta = m + n i`` (both coordinates)."""
    beta = GaussInt.coerce(beta)
    p = point_base() if p is None else p
    return point_add(point_int_mult(beta.re, p), point_i_mult(point_int_mult(beta.im, p)))


# ---------------------------------------------------------------------------
# multiplication maps


@dataclass(frozen=True)
class MultMap:
    """``phi(beta z) = i**epsilon * x * P(x^4) / Q(x^4)`` evaluated at ``x = phi(z)``."""

    beta: GaussInt
    epsilon: int
    P: ZiPoly
    Q: ZiPoly

    @property
    def degree(self) -> int:
        return self.P.degree()

    def numerator(self) -> ZiPoly:
        return shift(compose_x4(self.P), 1).scale(unit_power(self.epsilon))

    def denominator(self) -> ZiPoly:
        return compose_x4(self.Q)

    def as_ratfunc(self) -> RatFunc:
        return RatFunc(self.numerator(), self.denominator(), coprime=True)

    def division_poly(self) -> ZiPoly:
        return shift(compose_x4(self.P), 1)

    def to_json(self) -> dict:
        return {
            "beta": self.beta.to_json(),
            "epsilon": self.epsilon,
            "P": self.P.to_json(),
            "Q": self.Q.to_json(),
        }

    @classmethod
    def from_json(cls, data) -> "MultMap":
        return cls(
            GaussInt.from_json(data["beta"]),
            int(data["epsilon"]),
            ZiPoly.from_json(data["P"]),
            ZiPoly.from_json(data["Q"]),
        )


def _decompress(p: ZiPoly, offset: int) -> ZiPoly:
    """Coefficients at exponents offset, offset+4, ...; raises if any other is nonzero."""
    for k in range(len(p.re)):
        if k % 4 != offset and (p.re[k] or p.im[k]):
            raise InternalInconsistency(f"unexpected x^{k} term in multiplication map")
    return ZiPoly.from_parts(p.re[offset::4], p.im[offset::4])


def _squarefree_witness(f: ZiPoly, tries: int = 8) -> bool:
    """True once f is separable modulo some split prime (monic f => squarefree over Q(i))."""
    from .zipoly import _modular_prime

    for idx in range(tries):
        q = _modular_prime(idx)[0]
        if is_squarefree_fq(reduce_mod(f, split_prime(q))):
            return True
    return False


def check_multmap(m: MultMap) -> None:
    """Raise InternalInconsistency unless every structural property holds."""
    beta = m.beta
    d = (norm(beta) - 1) // 4
    eps = unit_class(beta)
    problems = []
    if m.epsilon != eps:
        problems.append(f"epsilon {m.epsilon} != unit class {eps}")
    if not m.P.is_monic():
        problems.append("P is not monic")
    if m.P.degree() != d or m.Q.degree() != d:
        problems.append(f"deg P = {m.P.degree()}, deg Q = {m.Q.degree()}, expected {d}")
    if m.Q != reverse(m.P, d):
        problems.append("Q is not the reversal of P")
    if m.P[0] != unit_power(-eps) * beta:
        problems.append(f"P(0) = {m.P[0]} != i^-e * beta")
    if gcd(m.P, m.Q).degree() != 0:
        problems.append("P and Q share a factor")
    if d > 0 and is_prime(beta) and not is_eisenstein_at(m.P, beta):
        problems.append("P is not Eisenstein at beta")
    if not _squarefree_witness(m.division_poly()):
        problems.append("division polynomial is not squarefree")
    if problems:
        raise InternalInconsistency(f"multiplication map for {beta}: " + "; ".join(problems))


@lru_cache(maxsize=None)
def _mult_map_cached(beta: GaussInt) -> MultMap:
    m, n = beta.re, beta.im
    first = point_int_mult(m, point_base())
    second = point_i_mult(point_int_mult(n, point_base()))
    X = _add_x_only(first, second)
    if not X.b.is_zero():
        raise InternalInconsistency(f"phi({beta} z) depends on phi'(z)")
    num, den = X.a.num, X.a.den
    lead = num.lc()
    if not lead.is_unit():
        raise InternalInconsistency(f"numerator of M_{beta} has non-unit leading coefficient")
    eps = [u for u in range(4) if unit_power(u) == lead][0]
    P = _decompress(num.scale(unit_power(-eps)), 1)
    Q = _decompress(den, 0)
    result = MultMap(beta, eps, P, Q)
    check_multmap(result)
    return result


def mult_map(beta) -> MultMap:
    beta = _require_odd(beta)
    return _mult_map_cached(beta)


def division_poly(beta) -> ZiPoly:
    """``x * P_beta(x^4)``, of degree N(beta)."""
    return mult_map(beta).division_poly()


def compose_maps(outer: MultMap, inner: MultMap) -> RatFunc:
    """Reduced rational function ``M_outer(M_inner(x))``."""
    n, d = inner.numerator(), inner.denominator()
    n4, d4 = n ** 4, d ** 4
    deg = outer.degree
    pw_n = [ONE_POLY]
    pw_d = [ONE_POLY]
    for _ in range(deg):
        pw_n.append(pw_n[-1] * n4)
        pw_d.append(pw_d[-1] * d4)
    top = ZERO_POLY
    bottom = ZERO_POLY
    for k in range(deg + 1):
        term = pw_n[k] * pw_d[deg - k]
        top = top + term * outer.P[k]
        bottom = bottom + term * outer.Q[k]
    return RatFunc(n * top * unit_power(outer.epsilon), d * bottom)


def verify_multmap(beta) -> Check:
    """Shape of ``M_beta``: monic ``P`` of degree ``(N-1)/4``, ``Q = reverse(P)``, Eisenstein at primes."""
    beta = _require_odd(beta)
    try:
        m = mult_map(beta)
        check_multmap(m)
    except InternalInconsistency as exc:
        return Check("multmap_shape", False, {"beta": str(beta), "error": str(exc)})
    return Check("multmap_shape", True, {"beta": str(beta), "epsilon": m.epsilon, "degree": m.degree})


def verify_composition(beta, gamma) -> Check:
    """``M_{beta gamma} = M_beta o M_gamma`` as reduced rational functions."""
    beta, gamma = _require_odd(beta), _require_odd(gamma)
    lhs = mult_map(beta * gamma).as_ratfunc()
    rhs = compose_maps(mult_map(beta), mult_map(gamma))
    return Check("composition", lhs == rhs, {"beta": str(beta), "gamma": str(gamma)})


def composition_pairs(max_norm: int = 200, count: int = 20) -> list[tuple[GaussInt, GaussInt]]:
    """``count`` pairs of normalized nonunits with ``N(beta gamma) <= max_norm``, spread over the range."""
    small = [b for b in odd_gaussints_up_to_norm(max_norm // 5) if not b.is_unit()]
    pairs = [(b, g) for b in small for g in small if b.norm() * g.norm() <= max_norm]
    if len(pairs) <= count:
        return pairs
    step = len(pairs) / count
    return [pairs[int(k * step)] for k in range(count)]
