"""Exactness checks for the cyclotomic field arithmetic."""

import random
from fractions import Fraction

import pytest

from gradedcover import Cyclotomic, cyclotomic_polynomial, euler_phi, root_of_unity


def test_known_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    assert euler_phi(64) == 32


def test_imaginary_unit_squares_to_minus_one():
    i = root_of_unity(4, 1)
    assert i * i == -1


def test_minus_one_as_second_root():
    assert root_of_unity(2, 1) == -1


def test_roots_have_the_right_order():
    for n in range(1, 25):
        for k in range(n):
            assert root_of_unity(n, k) ** n == 1


def test_sixth_roots_sum_to_zero():
    z = root_of_unity(6, 1)
    total = Cyclotomic.from_rational(0)
    for k in range(6):
        total = total + root_of_unity(6, k)
    # geometric series: (z - 1) * sum = z^6 - 1 = 0 with z != 1
    assert (z - 1) * total == z**6 - 1
    assert z != 1
    assert total == 0


def test_product_of_conjugate_pair():
    i = root_of_unity(4, 1)
    assert (1 + i) * (1 - i) == 2


def test_inverse_of_cube_root():
    z = root_of_unity(3, 1)
    inv = z.inverse()
    assert z * inv == 1
    assert inv == root_of_unity(3, 2)


def test_conjugation_inverts_roots():
    for n in (3, 4, 5, 8, 12):
        for k in range(n):
            assert root_of_unity(n, k).conjugate() == root_of_unity(n, n - k)


def test_division_by_zero_rejected():
    with pytest.raises(ZeroDivisionError):
        Cyclotomic.from_rational(0).inverse()


def test_conductor_must_be_positive():
    with pytest.raises(ValueError):
        root_of_unity(0, 1)
    with pytest.raises(ValueError):
        Cyclotomic([1], 0)


def test_embed_of_imaginary_unit():
    v = root_of_unity(4, 1).embed()
    assert abs(v - 1j) < 1e-12


def test_embed_of_cube_root():
    v = root_of_unity(3, 1).embed()
    assert abs(v.real + 0.5) < 1e-12
    assert abs(v.imag - 0.8660254037844386) < 1e-12


def test_embed_respects_multiplication():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.choice([3, 4, 6, 8, 12])
        a = root_of_unity(n, rng.randrange(n)) * Fraction(rng.randint(-5, 5), 3)
        b = root_of_unity(n, rng.randrange(n)) + rng.randint(-2, 2)
        assert abs((a * b).embed() - a.embed() * b.embed()) < 1e-10


def test_equality_is_canonical():
    # equal values have equal coefficient vectors once conductors agree
    a = root_of_unity(6, 2)
    b = root_of_unity(3, 1)
    assert a == b
    assert (a - b).is_zero()
    assert a.lift(6).coeffs == b.lift(6).coeffs


def test_rational_values_embed_as_constants():
    half = Cyclotomic.from_rational(Fraction(1, 2))
    assert half.is_rational()
    assert half.rational_value() == Fraction(1, 2)
    assert (half + half) == 1


def test_field_axioms_on_random_triples():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.choice([4, 6, 8, 12])

        def rand():
            c = root_of_unity(n, rng.randrange(n)) * Fraction(
                rng.randint(-3, 3), rng.choice([1, 2])
            )
            return c + rng.randint(-2, 2)

        a, b, c = rand(), rand(), rand()
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        if not a.is_zero():
            assert a * a.inverse() == 1


def test_mixed_conductor_arithmetic_lifts():
    z3 = root_of_unity(3, 1)
    i = root_of_unity(4, 1)
    prod = z3 * i
    assert prod.conductor == 12
    assert prod == root_of_unity(12, 4) * root_of_unity(12, 3)


def test_string_form_uses_i_for_conductor_four():
    i = root_of_unity(4, 1)
    assert str(i) == "i"
    assert str(-i) == "-i"
    assert str(i + 1) == "1 + i"
    assert str(Cyclotomic.from_rational(Fraction(-3, 2))) == "-3/2"
    z = root_of_unity(8, 1)
    assert "conductor=8" in str(z)


def test_polynomial_cache_fills_idempotently_under_threads():
    import threading

    import gradedcover.cyclotomic as cyc

    cyc._CYCLOTOMIC_POLY.clear()
    cyc._POWER_TABLE.clear()
    results = []

    def worker():
        results.append(cyclotomic_polynomial(36))

    threads = [threading.Thread(target=worker) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert len(set(results)) == 1
    assert results[0] == cyclotomic_polynomial(36)
