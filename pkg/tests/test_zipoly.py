import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from lemniscate import kernels
from lemniscate.errors import NotDivisible, NotSquarefree, ZeroReduction
from lemniscate.gaussint import GaussInt
from lemniscate.zipoly import (
    X,
    FqPoly,
    ResidueField,
    ZiPoly,
    compose_x4,
    conjugate,
    degree_pattern,
    distinct_degree_factorization,
    evaluate,
    exact_div,
    format_poly,
    gcd,
    is_eisenstein_at,
    is_separable_mod,
    mul_karatsuba,
    mul_schoolbook,
    reduce_mod,
    reverse,
)

from strategies import gaussints

G = GaussInt
LAMBDA5 = ZiPoly([1, 0, 0, 0, -12, 0, 0, 0, -26, 0, 0, 0, 52, 0, 0, 0, 1])
DIV5 = ZiPoly.from_parts([0, 5, 0, 0, 0, -62, 0, 0, 0, -105, 0, 0, 0, 300, 0, 0, 0, -125, 0, 0, 0, 50, 0, 0, 0, 1])
polys = st.lists(gaussints, max_size=12).map(ZiPoly)


def lam(beta):
    return ZiPoly([beta, 0, 0, 0, 1])


def rand_poly(rng, deg, bound=10**6):
    return ZiPoly([G(rng.randint(-bound, bound), rng.randint(-bound, bound)) for _ in range(deg + 1)])


def test_mul_examples():
    assert (X + 1) * (X - 1) == X * X - 1
    assert lam(G(-1, 2)) * lam(G(-1, -2)) == ZiPoly([5, 0, 0, 0, -2, 0, 0, 0, 1])
    assert (X + 3) * ZiPoly() == ZiPoly()


def test_exact_div_examples():
    d = X * lam(G(-1, 2)) * lam(G(-1, -2))
    assert exact_div(DIV5, d) == LAMBDA5
    assert exact_div(LAMBDA5, ZiPoly([1])) == LAMBDA5
    with pytest.raises(NotDivisible):
        exact_div(X * X + 1, X + 2)


def test_reverse_examples():
    assert reverse(X + G(-1, 2), 1) == ZiPoly([1, G(-1, 2)])
    assert reverse(ZiPoly([1]), 0) == ZiPoly([1])
    assert reverse(ZiPoly([3, 2, 1]), 2) == ZiPoly([1, 2, 3])


def test_conjugate_and_compose():
    assert conjugate(lam(G(-1, 2))) == lam(G(-1, -2))
    assert conjugate(LAMBDA5) == LAMBDA5
    assert conjugate(ZiPoly()) == ZiPoly()
    assert compose_x4(X + G(-1, 2)) == lam(G(-1, 2))
    assert compose_x4(ZiPoly([1])) == ZiPoly([1])
    assert compose_x4(X * X) == ZiPoly.monomial(8)


def test_evaluate_examples():
    assert evaluate(LAMBDA5, 0) == 1
    assert evaluate(lam(G(-1, 2)), 0) == G(-1, 2)
    assert evaluate(X, 7) == 7


def test_format_and_json():
    assert format_poly(lam(G(-1, 2))) == "x^4 + (-1+2i)"
    assert format_poly(LAMBDA5) == "x^16 + 52x^12 - 26x^8 - 12x^4 + 1"
    assert format_poly(ZiPoly()) == "0"
    assert ZiPoly.from_json(LAMBDA5.to_json()) == LAMBDA5
    assert LAMBDA5.to_json()["coeffs"][0] == ["1", "0"]


def test_eisenstein_examples():
    assert is_eisenstein_at(X + G(-1, 2), G(-1, 2))
    assert not is_eisenstein_at(X * X + 1, 3)
    # pi = -1+2i divides 5 while pi^2 = -3-4i does not, so x + 5 is Eisenstein at pi
    assert is_eisenstein_at(X + 5, G(-1, 2))
    assert not is_eisenstein_at(X + 25, G(-1, 2))
    assert not is_eisenstein_at(X * X + 5 * X + 1, G(-1, 2))


def test_karatsuba_matches_schoolbook():
    rng = random.Random(1)
    for _ in range(500):
        a = rand_poly(rng, rng.randint(0, 256))
        b = rand_poly(rng, rng.randint(0, 256))
        assert mul_karatsuba(a, b, threshold=8) == mul_schoolbook(a, b)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert conjugate(conjugate(a)) == a
    assert conjugate(a * b) == conjugate(a) * conjugate(b)


@given(polys, polys)
def test_exact_div_inverts_mul(a, b):
    if not b.is_zero():
        assert exact_div(a * b, b) == a


@given(polys)
def test_reverse_involution(a):
    if not a.is_zero() and not a[0].is_zero():
        d = a.degree()
        assert reverse(reverse(a, d), d) == a


def test_ring_axioms_large_degree():
    rng = random.Random(2)
    a, b, c = (rand_poly(rng, 200, 1000) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_gcd_over_gaussian_rationals():
    a = lam(G(-1, 2)) * (X + G(2, -3))
    b = lam(G(-1, 2)) * (X * X + 7)
    g = gcd(a, b)
    assert g.degree() == 4
    assert exact_div(lam(G(-1, 2)), g).degree() == 0
    assert gcd(X + 1, X + 2).degree() == 0


def test_reduce_mod_examples(kernel_backend):
    assert reduce_mod(X * X - 1, -3).to_list() == [[-1 % 3, 0], [0, 0], [1, 0]]
    assert reduce_mod(5 * X + 1, G(-1, 2)).degree() == 0
    assert reduce_mod(X, G(-1, 2)).degree() == 1


def test_separability(kernel_backend):
    assert is_separable_mod(X * X - 1, -3)
    assert not is_separable_mod(X * X, G(3, 2))
    assert is_separable_mod(LAMBDA5, G(3, 2))
    with pytest.raises(ZeroReduction):
        is_separable_mod(5 * X, G(-1, 2))


def test_ddf_examples(kernel_backend):
    f5 = ResidueField(G(-1, 2), 5, 1, 2)
    buckets = distinct_degree_factorization(FqPoly(f5, np.array([4, 0, 1], dtype=np.int64)))
    assert [(d, g.degree()) for d, g in buckets] == [(1, 2)]
    f3 = ResidueField(G(3), 3, 1, None)  # bare F_3, for the classical example only
    buckets = distinct_degree_factorization(FqPoly(f3, np.array([1, 0, 1], dtype=np.int64)))
    assert [(d, g.degree()) for d, g in buckets] == [(2, 2)]
    with pytest.raises(NotSquarefree):
        distinct_degree_factorization(reduce_mod(X * X, G(3, 2)))


def test_ddf_lambda5_mod_norm13(kernel_backend):
    from lemniscate.gaussint import multiplicative_order

    for pi in (G(3, 2), G(3, -2)):
        t = multiplicative_order(pi, 5)
        pattern = degree_pattern(distinct_degree_factorization(reduce_mod(LAMBDA5, pi)))
        assert set(pattern) == {t} and sum(pattern) == 16


def test_ddf_buckets_multiply_back(kernel_backend):
    rng = random.Random(3)
    for pi in (G(-3), G(3, 2), G(-7), G(-1, 4)):
        done = 0
        while done < 10:
            p = rand_poly(rng, rng.randint(2, 30), 50)
            p = p + ZiPoly.monomial(p.degree() + 1)
            f = reduce_mod(p, pi)
            if f.gcd(f.derivative()).degree() != 0:
                continue
            buckets = distinct_degree_factorization(f)
            prod = f.one()
            for _, g in buckets:
                prod = prod * g
            assert prod == f.monic()
            assert sum(degree_pattern(buckets)) == f.degree()
            done += 1


@pytest.mark.skipif(not kernels.HAVE_NUMBA, reason="numba not installed")
def test_backends_agree():
    rng = np.random.default_rng(4)
    nb, npk = kernels.backend("numba"), kernels.backend("numpy")
    for p in (11, 2**31 - 1):
        for _ in range(30):
            a = rng.integers(0, p, int(rng.integers(1, 40)), dtype=np.int64)
            b = rng.integers(0, p, int(rng.integers(1, 40)), dtype=np.int64)
            b[-1] = 1
            for name in ("fp_mul", "fp_gcd"):
                assert np.array_equal(getattr(nb, name)(a, b, p), getattr(npk, name)(a, b, p))
            for x, y in zip(nb.fp_divmod(a, b, p), npk.fp_divmod(a, b, p)):
                assert np.array_equal(x, y)
            assert np.array_equal(nb.fp_powmod(a, 12345, b, p), npk.fp_powmod(a, 12345, b, p))
            a2 = rng.integers(0, p, (int(rng.integers(1, 20)), 2), dtype=np.int64)
            b2 = rng.integers(0, p, (int(rng.integers(1, 20)), 2), dtype=np.int64)
            b2[-1] = (1, 0)
            for name in ("fp2_mul", "fp2_gcd"):
                assert np.array_equal(getattr(nb, name)(a2, b2, p), getattr(npk, name)(a2, b2, p))
            assert np.array_equal(nb.fp2_powmod(a2, 999, b2, p), npk.fp2_powmod(a2, 999, b2, p))


def test_backend_env_flag(monkeypatch):
    monkeypatch.setenv("LEMN_NUMBA", "0")
    assert not kernels._flag_enabled()
    monkeypatch.setenv("LEMN_NUMBA", "1")
    assert kernels._flag_enabled()
    with pytest.raises(ValueError):
        kernels.backend("fortran")


def test_warm_up_runs_on_each_backend(kernel_backend):
    kernels.warm_up()
    assert kernels.ACTIVE.name == kernel_backend
