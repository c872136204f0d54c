import random

import pytest

from rprime.polygf import (
    PolyModP,
    factor_mod_p,
    poly_add,
    poly_divmod,
    poly_eval,
    poly_from_int_coeffs,
    poly_gcd,
    poly_mul,
    poly_powmod,
    poly_sub,
    squarefree_decomposition,
)


def P(p, *coeffs):
    return poly_from_int_coeffs(p, list(coeffs))


X2P1_F5 = P(5, 1, 0, 1)  # x^2 + 1 over F_5


def test_coefficients_are_reduced_and_trimmed():
    f = PolyModP(5, (7, -2, 10, 0, 0))
    assert f.coeffs == (2, 3)
    assert f.degree == 1
    assert PolyModP(5, (0, 0)).is_zero()


def test_gcd_divisor_of_square_plus_one():
    assert poly_gcd(X2P1_F5, P(5, 2, 1)) == P(5, 2, 1)  # 3^2 + 1 = 0 mod 5


def test_gcd_coprime_is_one():
    assert poly_gcd(P(3, 1, 0, 1), P(3, 0, 1)) == P(3, 1)


def test_gcd_idempotent_and_monic():
    f = P(7, 3, 6, 2)
    g = poly_gcd(f, f)
    assert g.is_monic()
    lead_inv = pow(2, 5, 7)
    assert g == P(7, 3 * lead_inv, 6 * lead_inv, 1)


def test_gcd_of_zeros_is_zero():
    zero = P(5)
    assert poly_gcd(zero, zero).is_zero()


def test_gcd_mismatched_moduli():
    with pytest.raises(ValueError, match="mismatched"):
        poly_gcd(P(5, 1, 1), P(7, 1, 1))


def test_powmod_frobenius_example():
    x = P(5, 0, 1)
    assert poly_powmod(x, 5, X2P1_F5) == x  # x^2 = -1, so x^5 = x


def test_powmod_zero_exponent():
    assert poly_powmod(P(7, 4, 2, 1), 0, P(7, 1, 1)) == P(7, 1)


def test_powmod_x_squared_mod_x2p1_f3():
    assert poly_powmod(P(3, 0, 1), 2, P(3, 1, 0, 1)) == P(3, 2)


def test_powmod_zero_modulus():
    with pytest.raises(ZeroDivisionError):
        poly_powmod(P(5, 0, 1), 3, P(5))


def test_squarefree_char2_square():
    assert squarefree_decomposition(P(2, 1, 0, 1)) == [(P(2, 1, 1), 2)]


def test_squarefree_cubic_with_double_root():
    f = P(23, -1, -1, 0, 1)  # (x - 10)^2 (x - 3) over F_23
    assert squarefree_decomposition(f) == [(P(23, -3, 1), 1), (P(23, -10, 1), 2)]


def test_squarefree_already_squarefree():
    f = P(7, 6, 0, 1)
    assert squarefree_decomposition(f) == [(f, 1)]


def test_squarefree_rejects_zero():
    with pytest.raises(ValueError):
        squarefree_decomposition(P(5))


def test_factor_split_quadratic():
    assert factor_mod_p(X2P1_F5) == [(P(5, 2, 1), 1), (P(5, 3, 1), 1)]


def test_factor_irreducible_cubic():
    f = P(2, 1, 1, 0, 1)  # x^3 - x - 1 = x^3 + x + 1 over F_2, no roots
    assert factor_mod_p(f) == [(f, 1)]


def test_factor_cubic_with_multiplicity():
    f = P(23, -1, -1, 0, 1)
    assert factor_mod_p(f) == [(P(23, -10, 1), 2), (P(23, -3, 1), 1)]


def test_factor_rejects_constants():
    with pytest.raises(ValueError):
        factor_mod_p(P(5, 1))


def _random_monic(rng, p, degree):
    return PolyModP(p, tuple(rng.randrange(p) for _ in range(degree)) + (1,))


@pytest.mark.parametrize("p", [2, 3, 5, 7, 13, 31, 97])
def test_factor_reconstruction_random(p):
    rng = random.Random(12345 + p)
    for _ in range(40):
        degree = rng.randrange(1, 9)
        f = _random_monic(rng, p, degree)
        factors = factor_mod_p(f, seed=7)
        product = P(p, 1)
        total_degree = 0
        for g, mult in factors:
            assert g.is_monic()
            total_degree += mult * g.degree
            for _ in range(mult):
                product = poly_mul(product, g)
        assert product == f
        assert total_degree == f.degree


@pytest.mark.parametrize("p", [2, 5, 31, 97])
def test_factor_outputs_irreducible(p):
    rng = random.Random(999 + p)
    for _ in range(25):
        f = _random_monic(rng, p, rng.randrange(2, 9))
        for g, _ in factor_mod_p(f, seed=3):
            if g.degree <= 1:
                continue
            if g.degree <= 3:
                # an irreducible of degree 2 or 3 has no roots at all
                assert all(poly_eval(g, a) != 0 for a in range(p))
            else:
                # any factor of degree d < deg g would show up in
                # gcd(g, x^{p^d} - x)
                x = P(p, 0, 1)
                for d in range(1, g.degree):
                    frob = poly_powmod(x, p**d, g)
                    assert poly_gcd(poly_sub(frob, x), g) == P(p, 1)


def test_factor_determinism():
    f = P(31, 5, 1, 4, 1, 1, 0, 1)
    assert factor_mod_p(f, seed=42) == factor_mod_p(f, seed=42)
    # a different seed may explore differently but lands on the same
    # canonical list
    assert factor_mod_p(f, seed=42) == factor_mod_p(f, seed=43)


def test_factor_canonical_order():
    factors = factor_mod_p(P(7, 0, 3, 0, 1))  # x(x^2 + 3)
    keys = [g.sort_key() for g, _ in factors]
    assert keys == sorted(keys)


def test_divmod_roundtrip():
    rng = random.Random(4)
    for _ in range(30):
        p = rng.choice([3, 5, 11])
        a = PolyModP(p, tuple(rng.randrange(p) for _ in range(rng.randrange(1, 8))))
        b = _random_monic(rng, p, rng.randrange(1, 4))
        q, r = poly_divmod(a, b)
        assert r.degree < b.degree
        assert poly_add(poly_mul(q, b), r) == a
