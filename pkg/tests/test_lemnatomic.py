import json

import pytest

from lemniscate.cmfield import division_poly
from lemniscate.errors import NotCoprime, NotOdd, NotSeparable, UnitInput
from lemniscate.gaussint import UNITS, GaussInt, normalized, odd_gaussints_up_to_norm
from lemniscate.lemnatomic import (
    CONSISTENT,
    PROVED,
    REFUTED,
    WARN,
    FrobeniusPattern,
    IrreducibilityEvidence,
    admissible_primes,
    frobenius_pattern,
    irreducibility_evidence,
    lemnatomic,
    verify_conjugation,
    verify_constant_term,
    verify_decomposition,
    verify_degree,
)
from lemniscate.zipoly import X, ZiPoly, conjugate, reduce_mod

G = GaussInt
LAMBDA5 = ZiPoly([1, 0, 0, 0, -12, 0, 0, 0, -26, 0, 0, 0, 52, 0, 0, 0, 1])


def test_examples():
    assert lemnatomic(1).poly == X
    assert lemnatomic(G(-1, 2)).poly == ZiPoly([G(-1, 2), 0, 0, 0, 1])
    assert lemnatomic(G(-1, -2)).poly == ZiPoly([G(-1, -2), 0, 0, 0, 1])
    assert lemnatomic(5).poly == LAMBDA5
    rec = lemnatomic(5)
    assert rec.degree == 16 and rec.constant_term == 1 and rec.beta == 5


def test_associates_share_record():
    for u in UNITS:
        assert lemnatomic(u * 5).poly == LAMBDA5
        assert lemnatomic(u * G(3, 2)).poly == lemnatomic(G(3, 2)).poly


def test_rejects_even():
    with pytest.raises(NotOdd):
        lemnatomic(G(1, 1))
    with pytest.raises(NotOdd):
        lemnatomic(0)


@pytest.mark.parametrize("beta, expected", [(9, G(-3)), (5, G(1)), (G(-1, -2), G(-1, -2)), (15, G(1)), (G(-3, 4), G(-1, -2))])
def test_constant_term(beta, expected):
    chk = verify_constant_term(beta)
    assert chk
    assert lemnatomic(beta).constant_term == expected


def test_constant_term_rejects_unit():
    with pytest.raises(UnitInput):
        verify_constant_term(G(0, 1))


@pytest.mark.parametrize("beta, deg", [(5, 16), (1, 1), (15, 128)])
def test_degree(beta, deg):
    chk = verify_degree(beta)
    assert chk and chk.detail["observed"] == deg


def test_decomposition_examples():
    assert verify_decomposition(5)
    pi = G(3, 2)
    assert X * lemnatomic(pi).poly == division_poly(pi)
    assert X * lemnatomic(-3).poly * lemnatomic(9).poly == division_poly(9)


def test_integer_beta_has_integer_coefficients():
    for n in (3, 5, 7, 9, 11, 15):
        assert lemnatomic(n).poly.is_real()


def test_conjugation():
    for beta in odd_gaussints_up_to_norm(100):
        assert verify_conjugation(beta)
        assert conjugate(lemnatomic(beta).poly) == lemnatomic(normalized(beta.conjugate())).poly


def test_frobenius_examples(kernel_backend):
    pat = frobenius_pattern(G(-1, 2), -3)
    assert pat.expected == 4 and pat.observed == (4,) and pat.matches and pat.single_factor
    with pytest.raises(NotCoprime):
        frobenius_pattern(5, G(-1, 2))


def test_frobenius_lambda5_norm13(kernel_backend):
    for pi in (G(3, 2), G(3, -2)):
        pat = frobenius_pattern(5, pi)
        assert pat.matches and sum(pat.observed) == 16


def test_reductions_separable_away_from_beta(kernel_backend):
    from lemniscate.gaussint import normalized_primes

    for beta in odd_gaussints_up_to_norm(50):
        for pi in normalized_primes(60):
            if pi.divides(beta):
                continue
            f = reduce_mod(lemnatomic(beta).poly, pi)
            assert f.gcd(f.derivative()).degree() == 0


def test_frobenius_not_separable(monkeypatch):
    import lemniscate.lemnatomic as mod

    fake = mod.LemnatomicRecord(G(5), X * X * (X + 1), 3, G(0))
    monkeypatch.setattr(mod, "lemnatomic", lambda beta: fake)
    with pytest.raises(NotSeparable):
        mod.frobenius_pattern(5, -3)


def test_admissible_primes_skip_divisors():
    primes = [p for p, _ in zip(admissible_primes(5), range(5))]
    assert G(-1, 2) not in primes and G(-1, -2) not in primes
    assert primes == sorted(primes, key=GaussInt.sort_key)


def test_evidence_examples(kernel_backend):
    assert irreducibility_evidence(5, 10).status in (PROVED, CONSISTENT)
    assert irreducibility_evidence(G(-1, 2), 1).status in (PROVED, CONSISTENT)
    assert irreducibility_evidence(3).status == PROVED
    with pytest.raises(UnitInput):
        irreducibility_evidence(1)


def test_evidence_status_rules():
    ok = FrobeniusPattern(G(5), G(-3), 4, (4, 4, 4, 4))
    bad = FrobeniusPattern(G(5), G(-3), 4, (8, 8))
    assert IrreducibilityEvidence(G(5), CONSISTENT, (ok, ok, ok)).mismatches == 0
    assert IrreducibilityEvidence(G(5), WARN, (ok, bad, ok)).mismatches == 1
    assert IrreducibilityEvidence(G(5), REFUTED, (bad, bad, bad)).mismatches == 3


def test_no_frobenius_mismatch_up_to_200():
    for beta in odd_gaussints_up_to_norm(200):
        if beta.is_unit():
            continue
        ev = irreducibility_evidence(beta, 3)
        assert ev.mismatches == 0, ev.to_json()


def test_json_record():
    rec = lemnatomic(G(-1, 2))
    ev = irreducibility_evidence(G(-1, 2))
    data = json.loads(json.dumps(rec.to_json(ev.to_json())))
    assert data["beta"] == ["-1", "2"]
    assert data["degree"] == 4
    assert data["constant_term"] == ["-1", "2"]
    assert data["poly"]["coeffs"][0] == ["-1", "2"]
    assert data["evidence"]["status"] == PROVED
    assert len(data["evidence"]["primes_tested"]) == 3
