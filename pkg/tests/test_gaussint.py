import pytest
from hypothesis import given

from lemniscate.errors import BothZero, NotCoprime, NotOdd, ZeroInput
from lemniscate.gaussint import (
    TWO_ONE_PLUS_I,
    UNITS,
    GaussInt,
    factor,
    format_gaussint,
    gcd,
    is_odd,
    is_prime,
    multiplicative_order,
    norm,
    normalize,
    normalized,
    normalized_divisors,
    odd_gaussints_up_to_norm,
    parse_gaussint,
    residues,
    unit_class,
    unit_group_order,
    unit_group_order_integer,
    unit_residues,
)

from strategies import gaussints, nonzero_gaussints, odd_gaussints

G = GaussInt


@pytest.mark.parametrize("b, n", [(5, 25), (G(-1, 2), 5), (0, 0)])
def test_norm_examples(b, n):
    assert norm(b) == n


@pytest.mark.parametrize("b, odd", [(5, True), (G(3, 1), False), (G(1, 1), False), (0, False)])
def test_is_odd_examples(b, odd):
    assert is_odd(b) is odd


@pytest.mark.parametrize("b, eps", [(1, 0), (3, 2), (G(-1, 2), 0)])
def test_unit_class_examples(b, eps):
    assert unit_class(b) == eps


def test_unit_class_rejects_even_and_zero():
    for b in (0, 2, G(1, 1), G(3, 1)):
        with pytest.raises(NotOdd):
            unit_class(b)


@pytest.mark.parametrize("b, u, nb", [(G(-1, 2), 1, G(-1, 2)), (3, -1, G(-3)), (G(0, 1), G(0, -1), 1)])
def test_normalize_examples(b, u, nb):
    assert normalize(b) == (G.coerce(u), G.coerce(nb))


@pytest.mark.parametrize("a, b, g", [(5, G(-1, 2), G(-1, 2)), (G(3, 1), G(1, 1), G(1, 1)), (7, 1, 1)])
def test_gcd_examples(a, b, g):
    assert gcd(a, b) == G.coerce(g)


def test_gcd_both_zero():
    with pytest.raises(BothZero):
        gcd(0, 0)


@pytest.mark.parametrize("b, prime", [(G(-1, 2), True), (3, True), (5, False), (1, False), (G(1, 1), True)])
def test_is_prime_examples(b, prime):
    assert is_prime(b) is prime


def test_factor_examples():
    f5 = factor(5)
    assert f5.unit == 1 and f5.factors == ((G(-1, 2), 1), (G(-1, -2), 1))
    assert str(f5) == "unit 1, (-1+2i)(-1-2i)"
    f1 = factor(1)
    assert f1.unit == 1 and f1.factors == ()
    f9 = factor(9)
    assert f9.unit == 1 and f9.factors == ((G(-3), 2),)
    with pytest.raises(ZeroInput):
        factor(0)


def test_factor_even_input_uses_one_plus_i():
    f = factor(G(3, 1))
    assert f.product() == G(3, 1)
    assert any(p == G(1, 1) for p, _ in f.factors)


def test_factor_round_trip_exhaustive():
    for a in range(-40, 41):
        for b in range(-40, 41):
            beta = G(a, b)
            if beta.is_zero():
                continue
            f = factor(beta)
            assert f.product() == beta
            assert f.unit.is_unit()
            primes = [p for p, _ in f.factors]
            assert len(set(primes)) == len(primes)
            for p in primes:
                assert p == G(1, 1) or normalized(p) == p
                assert is_prime(p)


@pytest.mark.parametrize(
    "b, divs", [(5, [1, G(-1, 2), G(-1, -2), 5]), (G(-1, 2), [1, G(-1, 2)]), (9, [1, G(-3), 9])]
)
def test_normalized_divisors_examples(b, divs):
    assert normalized_divisors(b) == [G.coerce(d) for d in divs]


@pytest.mark.parametrize("b, n", [(5, 16), (1, 1), (15, 128)])
def test_unit_group_order_examples(b, n):
    assert unit_group_order(b) == n


@pytest.mark.parametrize("a, b, t", [(G(0, 1), 5, 4), (1, G(2, 3), 1), (3, G(-1, 2), 4)])
def test_multiplicative_order_examples(a, b, t):
    assert multiplicative_order(a, b) == t


def test_multiplicative_order_not_coprime():
    with pytest.raises(NotCoprime):
        multiplicative_order(G(-1, 2), 5)


def test_unit_group_order_matches_brute_force():
    for beta in odd_gaussints_up_to_norm(200):
        count = sum(1 for a in residues(beta) if gcd(a, beta).is_unit()) if not beta.is_unit() else 1
        assert unit_group_order(beta) == count
        assert len(unit_residues(beta)) == count


def test_integer_formula_matches_prime_power_formula():
    for n in range(1, 2000, 2):
        assert unit_group_order_integer(n) == unit_group_order(n)


def test_divisor_count():
    for beta in odd_gaussints_up_to_norm(200):
        expected = 1
        for _, k in factor(beta).factors:
            expected *= k + 1
        assert len(normalized_divisors(beta)) == expected


@given(nonzero_gaussints, nonzero_gaussints)
def test_division_remainder_shrinks(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.norm() < b.norm()


@given(gaussints, gaussints)
def test_norm_multiplicative(a, b):
    assert norm(a * b) == norm(a) * norm(b)


@given(odd_gaussints)
def test_normalize_associates(b):
    images = {normalize(u * b)[1] for u in UNITS}
    assert len(images) == 1
    nb = images.pop()
    assert (nb - 1) % TWO_ONE_PLUS_I == 0
    assert is_odd(b) and norm(b) % 2 == 1


@given(nonzero_gaussints, nonzero_gaussints)
def test_gcd_divides_both(a, b):
    g = gcd(a, b)
    assert g.divides(a) and g.divides(b)


@given(gaussints)
def test_text_round_trip(b):
    assert parse_gaussint(format_gaussint(b)) == b
    assert G.from_json(b.to_json()) == b


@pytest.mark.parametrize(
    "text, value",
    [("3", G(3)), ("-1+2i", G(-1, 2)), (" - 1 - 2 i ", G(-1, -2)), ("i", G(0, 1)), ("-i", G(0, -1)), ("4-i", G(4, -1))],
)
def test_parse(text, value):
    assert parse_gaussint(text) == value


@pytest.mark.parametrize("text", ["", "i3", "1+", "2ii", "x", "1.5"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_gaussint(text)
