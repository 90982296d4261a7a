"""Invariant suites behind ``lemn verify`` and the acceptance tests.

Each suite returns a list of :class:`CaseResult`, sorted deterministically.
Numeric thresholds are tied to the working precision ``D``: ``10**-(D-10)``
for the two values of varpi, ``10**-(D-15)`` for function identities and
``10**-(D-22)`` for polynomial residuals.  At ``D = 40`` these are
``1e-30``, ``1e-25`` and ``1e-18``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import chebyshev, cmfield, numlem
from .lemnatomic import (
    CONSISTENT,
    PROVED,
    REFUTED,
    irreducibility_evidence,
    verify_conjugation,
    verify_constant_term,
    verify_decomposition,
    verify_degree,
)
from .gaussint import GaussInt, odd_gaussints_up_to_norm

SUITES = ("structural", "frobenius", "numeric", "chebyshev")
MULTMAP_NUMERIC_BETAS = (GaussInt(3), GaussInt(5), GaussInt(-1, 2), GaussInt(2, 3))


@dataclass
class CaseResult:
    suite: str
    check: str
    case: str
    passed: bool
    residual: float | None = None
    threshold: float | None = None
    detail: dict = field(default_factory=dict)
    fatal: bool = False

    def to_json(self) -> dict:
        out = {"suite": self.suite, "check": self.check, "case": self.case, "passed": self.passed}
        if self.residual is not None:
            out["residual"] = self.residual
            out["threshold"] = self.threshold
        if self.detail:
            out["detail"] = self.detail
        return out

    def line(self) -> str:
        text = f"{'PASS' if self.passed else 'FAIL'} {self.suite} {self.check} {self.case}"
        if self.residual is not None:
            text += f" residual={self.residual:.3e} threshold={self.threshold:.0e}"
        return text


def nonunits(max_norm: int) -> list[GaussInt]:
    return [b for b in odd_gaussints_up_to_norm(max_norm) if not b.is_unit()]


def _from_check(suite: str, case: str, chk) -> CaseResult:
    return CaseResult(suite, chk.name, case, chk.passed, detail=chk.detail if not chk.passed else {})


def structural(max_norm: int = 200, pairs: int = 20) -> list[CaseResult]:
    out = []
    for beta in nonunits(max_norm):
        for fn in (
            verify_degree,
            verify_constant_term,
            verify_decomposition,
            verify_conjugation,
            cmfield.verify_multmap,
        ):
            out.append(_from_check("structural", str(beta), fn(beta)))
    for beta, gamma in cmfield.composition_pairs(max_norm, pairs):
        out.append(_from_check("structural", f"{beta}*{gamma}", cmfield.verify_composition(beta, gamma)))
    return out


def frobenius(max_norm: int = 100, trials: int = 3) -> list[CaseResult]:
    out = []
    for beta in nonunits(max_norm):
        ev = irreducibility_evidence(beta, trials)
        ok = ev.status in (PROVED, CONSISTENT)
        out.append(
            CaseResult(
                "frobenius",
                "pattern",
                str(beta),
                ok,
                detail={"status": ev.status, **({} if ok else ev.to_json())},
                fatal=ev.status == REFUTED,
            )
        )
    return out


def numeric(digits: int | None = None, max_norm: int = 50, samples: int = 100) -> list[CaseResult]:
    ev = numlem.evaluator(digits)
    d = ev.digits
    tol_varpi = 10.0 ** -(d - 10)
    tol_ident = 10.0 ** -(d - 15)
    tol_poly = 10.0 ** -(d - 22)
    out = []

    def add(check, case, value, threshold):
        value = float(value)
        out.append(CaseResult("numeric", check, case, value < threshold, value, threshold))

    for name, value in numlem.verify_constants(ev).items():
        add("constants", name, value, tol_varpi)
    for res in numlem.verify_identities(samples, ev=ev):
        add("identity", f"{res.name}[{res.samples}]", res.max_residual, tol_ident)
    for beta in odd_gaussints_up_to_norm(min(max_norm, 50)):
        add("lemnatomic_roots", str(beta), numlem.verify_lemnatomic_roots(beta, ev), tol_poly)
    for beta in MULTMAP_NUMERIC_BETAS:
        add("multmap", str(beta), numlem.verify_multmap_numeric(beta, 20, ev=ev), tol_poly)
    return out


def chebyshev_suite(max_n: int = 99, sin_max_n: int = 15, seed: int = 0) -> list[CaseResult]:
    out = []
    for n in range(1, max_n + 1, 2):
        out.append(_from_check("chebyshev", str(n), chebyshev.verify_factorization(n)))
        if n >= 3:
            out.append(_from_check("chebyshev", str(n), chebyshev.verify_D_constant(n)))
    thetas = np.random.default_rng(seed).uniform(-np.pi, np.pi, 100)
    for n in range(1, sin_max_n + 1, 2):
        r = chebyshev.sin_identity_check(n, thetas)
        out.append(CaseResult("chebyshev", "sin_identity", str(n), r < 1e-10, r, 1e-10))
    return out


def run(suite: str = "all", max_norm: int = 200, digits: int | None = None) -> list[CaseResult]:
    names = SUITES if suite == "all" else (suite,)
    out = []
    for name in names:
        if name == "structural":
            out += structural(max_norm)
        elif name == "frobenius":
            out += frobenius(max_norm)
        elif name == "numeric":
            out += numeric(digits, min(max_norm, 50))
        elif name == "chebyshev":
            out += chebyshev_suite()
        else:
            raise ValueError(f"unknown suite {name!r}")
    return out
