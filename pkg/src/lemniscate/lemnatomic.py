"""Lemnatomic polynomials and checks of their structural properties.

``lemnatomic(beta)`` is obtained from the division polynomial
``x P_beta(x^4)`` by exactly dividing out ``Lambda_gamma`` for every proper
normalized divisor ``gamma`` of ``beta``; ``Lambda_1 = x``.  The ``verify_*``
helpers return a :class:`Check` rather than raising, so callers can
aggregate reports.  Frobenius checks reduce ``Lambda_beta`` modulo a
normalized prime ``pi`` and compare its distinct-degree pattern with the
order of ``pi`` in ``(Z[i]/beta)^x``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterator

from .cmfield import division_poly
from .errors import InternalInconsistency, NotCoprime, NotDivisible, NotSeparable, UnitInput
from .gaussint import (
    ONE,
    GaussInt,
    _require_odd,
    gcd as gauss_gcd,
    multiplicative_order,
    normalized,
    normalized_divisors,
    normalized_primes,
    prime_power_base,
    unit_group_order,
)
from .report import Check
from .zipoly import (
    X,
    ZiPoly,
    conjugate,
    degree_pattern,
    distinct_degree_factorization,
    exact_div,
    is_squarefree_fq,
    reduce_mod,
)


@dataclass(frozen=True)
class LemnatomicRecord:
    beta: GaussInt
    poly: ZiPoly
    degree: int
    constant_term: GaussInt

    def to_json(self, evidence: dict | None = None) -> dict:
        out = {
            "beta": self.beta.to_json(),
            "poly": self.poly.to_json(),
            "degree": self.degree,
            "constant_term": self.constant_term.to_json(),
        }
        if evidence is not None:
            out["evidence"] = evidence
        return out


_memo: dict[GaussInt, LemnatomicRecord] = {}
_memo_lock = threading.Lock()


def lemnatomic(beta) -> LemnatomicRecord:
    beta = normalized(_require_odd(beta))
    rec = _memo.get(beta)
    if rec is not None:
        return rec
    if beta == ONE:
        poly = X
    else:
        poly = division_poly(beta)
        for gamma in normalized_divisors(beta)[:-1]:
            try:
                poly = exact_div(poly, lemnatomic(gamma).poly)
            except NotDivisible as exc:
                raise InternalInconsistency(
                    f"Lambda_{gamma} does not divide the {beta}-division polynomial"
                ) from exc
    rec = LemnatomicRecord(beta, poly, poly.degree(), poly[0])
    with _memo_lock:
        _memo.setdefault(beta, rec)
    return _memo[beta]


def lemnatomic_poly(beta) -> ZiPoly:
    return lemnatomic(beta).poly


def expected_constant_term(beta) -> GaussInt:
    """pi when beta is a unit times pi**k, 1 otherwise (beta odd, nonunit)."""
    base = prime_power_base(beta)
    return base if base is not None else ONE


def _require_nonunit(beta) -> GaussInt:
    beta = _require_odd(beta)
    if beta.is_unit():
        raise UnitInput(f"{beta} is a unit")
    return beta


def verify_constant_term(beta) -> Check:
    beta = _require_nonunit(beta)
    got = lemnatomic(beta).constant_term
    want = expected_constant_term(beta)
    return Check("constant_term", got == want, {"beta": str(beta), "observed": str(got), "expected": str(want)})


def verify_degree(beta) -> Check:
    beta = _require_odd(beta)
    got = lemnatomic(beta).degree
    want = unit_group_order(beta)
    return Check("degree", got == want, {"beta": str(beta), "observed": got, "expected": want})


def verify_decomposition(beta) -> Check:
    beta = _require_odd(beta)
    prod = ZiPoly.constant(1)
    for gamma in normalized_divisors(beta):
        prod = prod * lemnatomic(gamma).poly
    target = division_poly(beta)
    return Check("decomposition", prod == target, {"beta": str(beta), "degree": target.degree()})


def verify_conjugation(beta) -> Check:
    beta = _require_odd(beta)
    lhs = conjugate(lemnatomic(beta).poly)
    rhs = lemnatomic(normalized(beta.conjugate())).poly
    return Check("conjugation", lhs == rhs, {"beta": str(beta)})


# ---------------------------------------------------------------------------
# Frobenius degree patterns


@dataclass(frozen=True)
class FrobeniusPattern:
    beta: GaussInt
    pi: GaussInt
    expected: int
    observed: tuple[int, ...]

    @property
    def matches(self) -> bool:
        return all(d == self.expected for d in self.observed)

    @property
    def single_factor(self) -> bool:
        return len(self.observed) == 1

    def to_json(self) -> dict:
        return {
            "pi": self.pi.to_json(),
            "expected": self.expected,
            "observed": list(self.observed),
            "matches": self.matches,
        }


def frobenius_pattern(beta, pi) -> FrobeniusPattern:
    beta = normalized(_require_odd(beta))
    pi = GaussInt.coerce(pi)
    if not gauss_gcd(pi, beta).is_unit():
        raise NotCoprime(f"{pi} divides {beta}")
    f = reduce_mod(lemnatomic(beta).poly, pi)
    if not is_squarefree_fq(f):
        raise NotSeparable(f"Lambda_{beta} is not separable modulo {pi}")
    expected = multiplicative_order(pi, beta)
    observed = tuple(degree_pattern(distinct_degree_factorization(f)))
    return FrobeniusPattern(beta, pi, expected, observed)


def admissible_primes(beta) -> Iterator[GaussInt]:
    """Normalized primes by norm that are coprime to beta and keep Lambda_beta separable."""
    beta = normalized(_require_odd(beta))
    poly = lemnatomic(beta).poly
    for pi in normalized_primes():
        if pi.divides(beta):
            continue
        if not is_squarefree_fq(reduce_mod(poly, pi)):
            continue
        yield pi


PROVED = "PROVED"
CONSISTENT = "CONSISTENT"
WARN = "WARN"
REFUTED = "REFUTED"


@dataclass(frozen=True)
class IrreducibilityEvidence:
    beta: GaussInt
    status: str
    patterns: tuple[FrobeniusPattern, ...]

    @property
    def mismatches(self) -> int:
        return sum(not p.matches for p in self.patterns)

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "primes_tested": [p.to_json() for p in self.patterns],
        }


def irreducibility_evidence(beta, trials: int = 3) -> IrreducibilityEvidence:
    """Frobenius-pattern evidence over the first ``trials`` admissible primes.

    PROVED when some prime leaves Lambda_beta irreducible; CONSISTENT when all
    patterns match the predicted orders; a mismatch on fewer than three
    primes is reported as WARN, three or more as REFUTED.
    """
    beta = _require_nonunit(beta)
    patterns = []
    primes = admissible_primes(beta)
    for _ in range(trials):
        patterns.append(frobenius_pattern(beta, next(primes)))
    bad = sum(not p.matches for p in patterns)
    if bad >= 3:
        status = REFUTED
    elif bad:
        status = WARN
    elif any(p.single_factor for p in patterns):
        status = PROVED
    else:
        status = CONSISTENT
    return IrreducibilityEvidence(normalized(beta), status, tuple(patterns))
