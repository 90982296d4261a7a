"""High-precision evaluation of the lemniscatic sine and its derivative.

``varpi`` is computed twice, once by tanh-sinh quadrature of
``2 * int_0^1 dt / sqrt(1 - t^4)`` and once from ``pi / agm(1, sqrt 2)``;
the evaluator refuses to build if the two disagree.

On ``[0, varpi/4]`` the function is obtained by inverting the incomplete
integral ``F(r) = int_0^r dt / sqrt(1 - t^4)``, evaluated from its binomial
series, with a Newton iteration kept inside a shrinking bracket.  On
``[varpi/4, varpi/2]`` the complementary value ``w = phi(varpi/2 - s)`` is
inverted instead and ``phi(s)^2 = (1 - w^2) / (1 + w^2)``.  Everything else
follows from ``phi(s + varpi) = -phi(s)``, oddness, and the rectangular
formula for ``phi(x + iy)``.

Each evaluator owns a private mpmath context, so instances with different
precisions can be used side by side and from several threads.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass

import mpmath

from .cmfield import mult_map
from .errors import PoleError, PrecisionFailure
from .gaussint import GaussInt, odd_gaussints_up_to_norm, unit_residues
from .lemnatomic import lemnatomic
from .zipoly import ZiPoly

DEFAULT_DIGITS = 40
GUARD_DIGITS = 10


def default_digits() -> int:
    raw = os.environ.get("LEMN_DIGITS")
    return int(raw) if raw else DEFAULT_DIGITS


class PhiEvaluator:
    """Evaluator for ``phi`` and ``phi'`` at a fixed number of decimal digits.

    ``tolerance`` defaults to ``10**-(digits - 10)``, which is ``1e-30`` at
    the default 40 digits.  Arithmetic runs with ``GUARD_DIGITS`` extra
    digits.  Instances are not modified after construction.
    """

    def __init__(self, digits: int | None = None, tolerance: float | None = None):
        digits = default_digits() if digits is None else int(digits)
        if digits < 15:
            raise ValueError("digits must be at least 15")
        ctx = mpmath.MPContext()
        ctx.dps = digits + GUARD_DIGITS
        self.ctx = ctx
        self.digits = digits
        self.tolerance = ctx.mpf(10) ** -(digits - 10) if tolerance is None else ctx.mpf(tolerance)
        self.eps = ctx.mpf(10) ** -(ctx.dps - 2)
        self.pole_threshold = ctx.mpf(10) ** -(digits // 2)
        self.varpi_quadrature = self._varpi_tanh_sinh()
        self.varpi_agm = ctx.pi / self._agm(ctx.mpf(1), ctx.sqrt(2))
        if abs(self.varpi_quadrature - self.varpi_agm) >= self.tolerance:
            raise PrecisionFailure(
                f"quadrature and AGM values of varpi disagree by "
                f"{ctx.nstr(abs(self.varpi_quadrature - self.varpi_agm), 5)}"
            )
        self.varpi = self.varpi_agm
        self._half = self.varpi / 2
        self._quarter = self.varpi / 4
        # phi(varpi/4)^2 = sqrt(2) - 1; the bracket only has to contain it.
        self._r_max = ctx.sqrt(ctx.sqrt(2) - 1) * (1 + ctx.mpf(10) ** -8)

    # -- constants ---------------------------------------------------------

    def _agm(self, a, b):
        ctx = self.ctx
        for _ in range(200):
            if abs(a - b) <= self.eps * a:
                return (a + b) / 2
            a, b = (a + b) / 2, ctx.sqrt(a * b)
        raise PrecisionFailure("AGM iteration did not converge")

    def _varpi_tanh_sinh(self):
        ctx = self.ctx
        stop = ctx.mpf(10) ** -(ctx.dps - 5)
        t_max = ctx.asinh(2 * (ctx.dps + 5) * ctx.ln(10) / ctx.pi)

        def term(t):
            # u = 1 / (1 + exp(-pi sinh t)); 1 - u and 1 + u formed without cancellation
            e = ctx.exp(ctx.pi * ctx.sinh(t))
            u = e / (1 + e)
            one_minus_u = 1 / (1 + e)
            weight = ctx.pi * ctx.cosh(t) * u * one_minus_u
            return weight / ctx.sqrt(one_minus_u * (1 + u) * (1 + u * u))

        h = ctx.mpf(1)
        total = term(ctx.mpf(0))
        k = 1
        while k * h <= t_max:
            total += term(k * h) + term(-k * h)
            k += 1
        prev = total * h
        for _ in range(14):
            h /= 2
            k = 1
            while k * h <= t_max:
                total += term(k * h) + term(-k * h)
                k += 2
            cur = total * h
            if abs(cur - prev) <= stop:
                return 2 * cur
            prev = cur
        raise PrecisionFailure("tanh-sinh quadrature for varpi did not converge")

    # -- real line ---------------------------------------------------------

    def _incomplete(self, r):
        """``F(r) = sum_k binom(2k, k) 4^-k r^(4k+1) / (4k+1)`` for ``0 <= r < 1``."""
        r4 = r**4
        coef = self.ctx.mpf(1)
        power = r
        total = r
        k = 0
        while True:
            k += 1
            coef = coef * (2 * k - 1) / (2 * k)
            power *= r4
            term = coef * power / (4 * k + 1)
            total += term
            if term <= self.eps * total:
                return total

    def _invert(self, s):
        """The ``r`` in ``[0, phi(varpi/4)]`` with ``F(r) = s``."""
        ctx = self.ctx
        if s == 0:
            return ctx.mpf(0)
        lo, hi = ctx.mpf(0), self._r_max
        r = min(s, hi)
        for _ in range(400):
            f = self._incomplete(r) - s
            if f > 0:
                hi = r
            else:
                lo = r
            step = f * ctx.sqrt(1 - r**4)
            nxt = r - step
            if not lo < nxt < hi:
                nxt = (lo + hi) / 2
            if abs(nxt - r) <= self.eps * r:
                return nxt
            r = nxt
        raise PrecisionFailure(f"inversion of the arc-length integral failed at s={ctx.nstr(s, 10)}")

    def _pair_reduced(self, t):
        """``(phi(t), phi'(t))`` for ``0 <= t <= varpi/2``."""
        ctx = self.ctx
        if t <= self._quarter:
            u = self._invert(t)
            return u, ctx.sqrt(1 - u**4)
        w = self._invert(self._half - t)
        u2 = (1 - w * w) / (1 + w * w)
        return ctx.sqrt(u2), w * (1 + u2)

    def phi_pair_real(self, s):
        ctx = self.ctx
        s = ctx.mpf(s)
        q = int(ctx.floor(s / self.varpi + ctx.mpf(0.5)))
        s1 = s - q * self.varpi
        sign = -1 if q % 2 else 1
        odd = -1 if s1 < 0 else 1
        t = min(abs(s1), self._half)
        u, d = self._pair_reduced(t)
        return sign * odd * u, sign * d

    def phi_real(self, s):
        return self.phi_pair_real(s)[0]

    def phiprime_real(self, s):
        return self.phi_pair_real(s)[1]

    # -- complex plane -----------------------------------------------------

    def _to_mpc(self, z):
        if isinstance(z, GaussInt):
            return self.ctx.mpc(z.re, z.im)
        return self.ctx.mpc(z)

    def phi_pair_complex(self, z):
        """``(phi(z), phi'(z))``; raises :class:`PoleError` next to a pole."""
        ctx = self.ctx
        z = self._to_mpc(z)
        a, da = self.phi_pair_real(z.real)
        b, db = self.phi_pair_real(z.imag)
        den = 1 - a * a * b * b
        if abs(den) < self.pole_threshold:
            raise PoleError(f"phi has a pole near {ctx.nstr(z, 12)}")
        num = ctx.mpc(a * db, b * da)
        d2a = -2 * a**3
        num_x = ctx.mpc(da * db, b * d2a)
        den_x = -2 * a * da * b * b
        return num / den, (num_x * den - num * den_x) / (den * den)

    def phi_complex(self, z):
        return self.phi_pair_complex(z)[0]

    def phiprime_complex(self, z):
        return self.phi_pair_complex(z)[1]

    # -- helpers -----------------------------------------------------------

    def delta(self, beta):
        """The torsion generator ``(1+i) varpi / beta``."""
        beta = self._to_mpc(GaussInt.coerce(beta))
        return self.ctx.mpc(1, 1) * self.varpi / beta

    def eval_poly(self, poly: ZiPoly, x):
        ctx = self.ctx
        acc = ctx.mpc(0)
        for c in reversed(poly.coeffs):
            acc = acc * x + ctx.mpc(c.re, c.im)
        return acc


_evaluators: dict[int, PhiEvaluator] = {}


def evaluator(digits: int | None = None) -> PhiEvaluator:
    """Shared evaluator for the given precision (built once per precision)."""
    digits = default_digits() if digits is None else int(digits)
    ev = _evaluators.get(digits)
    if ev is None:
        ev = _evaluators.setdefault(digits, PhiEvaluator(digits))
    return ev


def _rel(ctx, lhs, rhs):
    return abs(lhs - rhs) / max(ctx.mpf(1), abs(lhs))


def verify_lemnatomic_roots(beta, ev: PhiEvaluator | None = None):
    """Largest ``|Lambda_beta(phi(alpha delta_beta))|`` over the units ``alpha`` mod ``beta``."""
    ev = ev or evaluator()
    beta = GaussInt.coerce(beta)
    poly = lemnatomic(beta).poly
    d = ev.delta(beta)
    worst = ev.ctx.mpf(0)
    for alpha in unit_residues(beta):
        root = ev.phi_complex(ev._to_mpc(alpha) * d)
        worst = max(worst, abs(ev.eval_poly(poly, root)))
    return worst


def _multmap_value(ev: PhiEvaluator, m, x):
    x4 = x**4
    return ev.ctx.mpc(0, 1) ** m.epsilon * x * ev.eval_poly(m.P, x4) / ev.eval_poly(m.Q, x4)


def verify_multmap_numeric(beta, samples: int = 20, seed: int = 0, ev: PhiEvaluator | None = None):
    """Largest relative gap between ``phi(beta z)`` and ``M_beta(phi(z))`` at random ``z``."""
    ev = ev or evaluator()
    ctx = ev.ctx
    beta = GaussInt.coerce(beta)
    m = mult_map(beta)
    b = ev._to_mpc(beta)
    rng = random.Random(seed)
    worst = ctx.mpf(0)
    done = 0
    while done < samples:
        z = ctx.mpc(rng.uniform(-1, 1), rng.uniform(-1, 1)) * ev.varpi
        try:
            x = ev.phi_complex(z)
            lhs = ev.phi_complex(b * z)
        except PoleError:
            continue
        if abs(ev.eval_poly(m.Q, x**4)) < ctx.mpf(10) ** -6:
            continue
        worst = max(worst, _rel(ctx, lhs, _multmap_value(ev, m, x)))
        done += 1
    return worst


@dataclass(frozen=True)
class IdentityResult:
    name: str
    max_residual: object
    samples: int

    def to_json(self) -> dict:
        return {"name": self.name, "max_residual": float(self.max_residual), "samples": self.samples}


def torsion_betas(count: int) -> list[GaussInt]:
    """The first ``count`` odd normalized nonunits in sort order."""
    bound = 16
    while True:
        betas = [b for b in odd_gaussints_up_to_norm(bound) if not b.is_unit()]
        if len(betas) >= count:
            return betas[:count]
        bound *= 2


def verify_identities(samples: int = 100, seed: int = 0, ev: PhiEvaluator | None = None) -> list[IdentityResult]:
    """Check the function identities at random real and complex points.

    Residuals are ``|lhs - rhs| / max(1, |lhs|)``; points within ``1e-3`` of
    a pole of either side are skipped and redrawn.  Half of each sample set
    is real and half complex.  The torsion identity
    ``phi(2 varpi / beta) = (1-i) phi(d) phi'(d) / (1 - phi(d)^4)`` with
    ``d = (1+i) varpi / beta`` is checked over the first ``samples`` odd
    nonunits ``beta``.
    """
    ev = ev or evaluator()
    ctx = ev.ctx
    rng = random.Random(seed)
    I = ctx.mpc(0, 1)
    near = ctx.mpf(10) ** -3

    def point(real: bool):
        x = rng.uniform(-2, 2) * ev.varpi
        y = 0 if real else rng.uniform(-1, 1) * ev.varpi
        return ctx.mpc(x, y)

    def addition(real):
        z, w = point(real), point(real)
        pz, dz = ev.phi_pair_complex(z)
        pw, dw = ev.phi_pair_complex(w)
        den = 1 + pz**2 * pw**2
        if abs(den) < near:
            return None
        return ev.phi_complex(z + w), (pz * dw + pw * dz) / den

    def duplication(real):
        z = point(real)
        p, d = ev.phi_pair_complex(z)
        den = 1 + p**4
        if abs(den) < near:
            return None
        return ev.phi_complex(2 * z), 2 * p * d / den

    def diffeq(real):
        p, d = ev.phi_pair_complex(point(real))
        return d * d, 1 - p**4

    def shifted_derivative(real):
        z = point(real)
        p = ev.phi_complex(z)
        den = 1 + p * p
        if abs(den) < near:
            return None
        return ev.phiprime_complex(z - ev._half), 2 * p / den

    results = []
    for name, fn in (
        ("addition", addition),
        ("duplication", duplication),
        ("diffeq", diffeq),
        ("shifted_derivative", shifted_derivative),
    ):
        worst = ctx.mpf(0)
        done = 0
        while done < samples:
            try:
                pair = fn(done % 2 == 0)
            except PoleError:
                continue
            if pair is None:
                continue
            worst = max(worst, _rel(ctx, *pair))
            done += 1
        results.append(IdentityResult(name, worst, done))

    worst = ctx.mpf(0)
    done = 0
    for beta in torsion_betas(samples):
        d = ev.delta(beta)
        p, dp = ev.phi_pair_complex(d)
        lhs = ev.phi_complex(2 * ev.varpi / ev._to_mpc(beta))
        worst = max(worst, _rel(ctx, lhs, (1 - I) * p * dp / (1 - p**4)))
        done += 1
    results.append(IdentityResult("torsion_doubling", worst, done))
    return results


def verify_constants(ev: PhiEvaluator | None = None) -> dict:
    """Residuals of the fixed values phi(0), phi(varpi/2), phi'(varpi/2), phi'(0)."""
    ev = ev or evaluator()
    p0, d0 = ev.phi_pair_real(0)
    ph, dh = ev.phi_pair_real(ev._half)
    return {
        "varpi_agreement": abs(ev.varpi_quadrature - ev.varpi_agm),
        "phi(0)": abs(p0),
        "phi(varpi/2)-1": abs(ph - 1),
        "phi'(varpi/2)": abs(dh),
        "phi'(0)-1": abs(d0 - 1),
    }


__all__ = [
    "DEFAULT_DIGITS",
    "PhiEvaluator",
    "IdentityResult",
    "default_digits",
    "evaluator",
    "torsion_betas",
    "verify_constants",
    "verify_identities",
    "verify_lemnatomic_roots",
    "verify_multmap_numeric",
]
