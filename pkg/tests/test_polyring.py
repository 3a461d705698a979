"""Polynomial arithmetic, parser, and printer."""

import random
from fractions import Fraction

import pytest

from hypersing import Monomial, PolyParseError, Polynomial, parse_poly
from hypersing.polyring import format_monomial, grlex_key, is_prime, primes_in_range

from oracles import random_poly, random_point

XYZ = ["x1", "x2", "x3"]


def test_primes_helpers():
    assert [p for p in range(60) if is_prime(p)] == [
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59,
    ]
    assert primes_in_range(2, 50) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]
    assert primes_in_range(4, 4) == []
    assert primes_in_range(-10, 2) == [2]


def test_monomial_equality_trims_trailing_zeros():
    assert Monomial((1, 2)) == Monomial((1, 2, 0, 0))
    assert hash(Monomial((1, 2))) == hash(Monomial((1, 2, 0)))
    assert Monomial((1, 2)) != Monomial((2, 1))
    assert Monomial((1, 2, 1)).total_degree == 4
    with pytest.raises(ValueError):
        Monomial((1, -1))


def test_grlex_order_degree_first_then_lex():
    assert grlex_key((0, 2)) < grlex_key((3, 0))
    assert grlex_key((1, 1)) < grlex_key((2, 0))
    assert grlex_key((2, 0)) > grlex_key((0, 2))


def test_parse_pinch_example():
    f = parse_poly("x1*x2^2 - x3^2", XYZ)
    assert f.coefficient((1, 2, 0)) == 1
    assert f.coefficient((0, 0, 2)) == -1
    assert f.term_count == 2


def test_parse_zero_and_binomial_square():
    assert parse_poly("0", XYZ).is_zero()
    f = parse_poly("(x1+x2)^2", XYZ)
    assert f == parse_poly("x1^2 + 2*x1*x2 + x2^2", XYZ)


def test_parse_unary_minus_and_constants():
    f = parse_poly("-x1 + 2", XYZ)
    assert f.coefficient((1, 0, 0)) == -1
    assert f.coefficient((0, 0, 0)) == 2
    assert parse_poly("-3", XYZ) == Polynomial.constant(3, -3)


def test_parse_errors_report_position():
    with pytest.raises(PolyParseError) as err:
        parse_poly("x1*(", XYZ)
    assert err.value.position == 4
    with pytest.raises(PolyParseError):
        parse_poly("x1 + y9", XYZ)
    with pytest.raises(PolyParseError):
        parse_poly("x1^x2", XYZ)
    with pytest.raises(PolyParseError):
        parse_poly("x1 x2", XYZ)
    with pytest.raises(PolyParseError):
        parse_poly("", XYZ)
    with pytest.raises(PolyParseError):
        parse_poly("x1 @ x2", XYZ)


def test_print_then_parse_round_trip():
    rng = random.Random(20260814)
    for _ in range(200):
        f = random_poly(rng, nvars=3, max_terms=5, allow_zero=True)
        assert parse_poly(f.to_string(), XYZ) == f


def test_print_descending_grlex():
    f = parse_poly("x3 + x1^2 + 1 + x2^2*x3", XYZ)
    assert f.to_string() == "x2^2*x3 + x1^2 + x3 + 1"
    assert format_monomial((0, 0, 0)) == "1"
    assert format_monomial((2, 1, 0), ("a", "b", "c")) == "a^2*b"


def test_add_cancellation_and_identity():
    f = parse_poly("x1 + x2", XYZ)
    assert f + parse_poly("-x2", XYZ) == parse_poly("x1", XYZ)
    assert f + Polynomial.zero(3) == f
    assert (f - f).is_zero()
    assert f + 1 == parse_poly("x1 + x2 + 1", XYZ)
    assert 1 - f == parse_poly("1 - x1 - x2", XYZ)


def test_char_p_addition():
    two_x = Polynomial(1, {(1,): 2}, char=3)
    one_x = Polynomial(1, {(1,): 1}, char=3)
    assert (two_x + one_x).is_zero()


def test_mul_examples():
    assert parse_poly("x1", XYZ) * parse_poly("x2", XYZ) == parse_poly("x1*x2", XYZ)
    diff_sq = parse_poly("(x1 - x2)*(x1 + x2)", XYZ)
    assert diff_sq == parse_poly("x1^2 - x2^2", XYZ)
    pinch = parse_poly("x1*x2^2 - x3^2", XYZ)
    vars4 = ["x1", "x2", "x3", "x4"]
    lifted = parse_poly("x1*x2^2 - x3^2", vars4)
    hyper = parse_poly("x4", vars4)
    assert lifted * hyper == parse_poly("x1*x2^2*x4 - x3^2*x4", vars4)
    assert pinch * 0 == Polynomial.zero(3)


def test_ring_axioms_random():
    rng = random.Random(99)
    for _ in range(60):
        f = random_poly(rng, allow_zero=True)
        g = random_poly(rng, allow_zero=True)
        h = random_poly(rng, allow_zero=True)
        assert f + g == g + f
        assert f * g == g * f
        assert (f + g) + h == f + (g + h)
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h


def test_ring_axioms_random_char_p():
    rng = random.Random(100)
    for p in (2, 3, 5):
        for _ in range(25):
            f = random_poly(rng, allow_zero=True).reduce_mod(p)
            g = random_poly(rng, allow_zero=True).reduce_mod(p)
            h = random_poly(rng, allow_zero=True).reduce_mod(p)
            assert (f + g) * h == f * h + g * h
            assert (f * g) * h == f * (g * h)


def test_mode_mismatch_errors():
    f = parse_poly("x1", XYZ)
    g = f.reduce_mod(3)
    with pytest.raises(ValueError):
        f + g
    with pytest.raises(ValueError):
        f * g
    with pytest.raises(ValueError):
        f + Polynomial.variable(2, 0)
    with pytest.raises(ValueError):
        g.reduce_mod(3)


def test_construction_validation():
    with pytest.raises(ValueError):
        Polynomial(2, {(1,): 1})
    with pytest.raises(ValueError):
        Polynomial(2, {(1, -1): 1})
    with pytest.raises(ValueError):
        Polynomial(2, {(1, 0): 1}, char=4)
    with pytest.raises(ValueError):
        Polynomial(2, {(1, 0): 0.5})
    with pytest.raises(ValueError):
        Polynomial(2, {(1, 0): Fraction(1, 2)}, char=3)
    assert Polynomial(2, {(1, 0): Fraction(4, 2)}).coefficient((1, 0)) == 2
    assert Polynomial(2, {(1, 0): 3}, char=3).is_zero()


def test_immutability():
    f = parse_poly("x1", XYZ)
    with pytest.raises(AttributeError):
        f.nvars = 5


def test_reduce_mod_examples():
    f = parse_poly("3*x1 + x2", XYZ)
    assert f.reduce_mod(3) == Polynomial(3, {(0, 1, 0): 1}, char=3)
    assert Polynomial.zero(3).reduce_mod(5).is_zero()
    minus_three = parse_poly("-3*x1", XYZ)
    assert minus_three.reduce_mod(5).coefficient((1, 0, 0)) == 2
    with pytest.raises(ValueError):
        f.reduce_mod(6)


def test_reduce_mod_commutes_with_ring_ops():
    rng = random.Random(7)
    for _ in range(40):
        f = random_poly(rng, allow_zero=True)
        g = random_poly(rng, allow_zero=True)
        for p in (2, 3, 5):
            assert (f + g).reduce_mod(p) == f.reduce_mod(p) + g.reduce_mod(p)
            assert (f * g).reduce_mod(p) == f.reduce_mod(p) * g.reduce_mod(p)


def test_translate_examples():
    x = Polynomial.variable(1, 0)
    assert (x ** 2).translate((1,)) == Polynomial(1, {(2,): 1, (1,): 2, (0,): 1})
    pinch = parse_poly("x1*x2^2 - x3^2", XYZ)
    assert pinch.translate((1, 0, 0)) == parse_poly("x1*x2^2 + x2^2 - x3^2", XYZ)
    assert pinch.translate((0, 0, 0)) == pinch


def test_translate_round_trip_and_evaluation():
    rng = random.Random(8)
    for _ in range(40):
        f = random_poly(rng)
        a = random_point(rng, 3)
        assert f.translate(a).translate(tuple(-c for c in a)) == f
        b = random_point(rng, 3)
        lhs = f.translate(a).evaluate(b)
        rhs = f.evaluate(tuple(x + y for x, y in zip(a, b)))
        assert lhs == rhs


def test_translate_rejects_char_p_and_bad_point():
    f = parse_poly("x1", XYZ).reduce_mod(3)
    with pytest.raises(ValueError):
        f.translate((1, 0, 0))
    with pytest.raises(ValueError):
        parse_poly("x1", XYZ).translate((1, 2))


def test_evaluate_examples_and_homomorphism():
    pinch = parse_poly("x1*x2^2 - x3^2", XYZ)
    assert pinch.evaluate((1, 1, 1)) == 0
    assert pinch.evaluate((2, 3, 1)) == 17
    rng = random.Random(9)
    for _ in range(40):
        f = random_poly(rng, allow_zero=True)
        g = random_poly(rng, allow_zero=True)
        a = random_point(rng, 3)
        assert (f * g).evaluate(a) == f.evaluate(a) * g.evaluate(a)
        assert (f + g).evaluate(a) == f.evaluate(a) + g.evaluate(a)
    mod = pinch.reduce_mod(5)
    assert mod.evaluate((2, 3, 1)) == 17 % 5


def test_total_degree_and_min_term():
    f = parse_poly("x1^2*x3 + x2", XYZ)
    assert f.total_degree() == 3
    assert Polynomial.zero(3).total_degree() == 0
    mono, coeff = f.min_term()
    assert mono == Monomial((0, 1, 0))
    assert coeff == 1
    with pytest.raises(ValueError):
        Polynomial.zero(3).min_term()


def test_permute_round_trip_and_iso():
    rng = random.Random(10)
    for _ in range(40):
        f = random_poly(rng)
        g = random_poly(rng)
        perm = list(range(3))
        rng.shuffle(perm)
        inverse = [perm.index(i) for i in range(3)]
        assert f.permute(perm).permute(inverse) == f
        assert (f * g).permute(perm) == f.permute(perm) * g.permute(perm)
    with pytest.raises(ValueError):
        f.permute((0, 0, 1))


def test_permute_moves_positions():
    f = parse_poly("x1^2*x2", XYZ)
    g = f.permute((2, 0, 1))  # x1 -> position 2, x2 -> position 0
    assert g == parse_poly("x3^2*x1", XYZ)


def test_diff_product_rule():
    rng = random.Random(11)
    for _ in range(30):
        f = random_poly(rng)
        g = random_poly(rng)
        for i in range(3):
            assert (f * g).diff(i) == f.diff(i) * g + f * g.diff(i)
    assert parse_poly("x1^3", XYZ).diff(0) == parse_poly("3*x1^2", XYZ)
    with pytest.raises(ValueError):
        f.diff(7)


def test_scale_and_divide_coefficients():
    f = parse_poly("2*x1 + 4*x2", XYZ)
    assert f.scale(3) == parse_poly("6*x1 + 12*x2", XYZ)
    assert f.divide_coefficients(2) == parse_poly("x1 + 2*x2", XYZ)
    half = f.divide_coefficients(4)
    assert half.coefficient((1, 0, 0)) == Fraction(1, 2)
    with pytest.raises(ZeroDivisionError):
        f.divide_coefficients(0)
    mod = f.reduce_mod(5)
    assert mod.divide_coefficients(2).scale(2) == mod


def test_pow_matches_repeated_multiplication():
    rng = random.Random(12)
    for _ in range(20):
        f = random_poly(rng, max_terms=3, max_degree=2)
        expected = Polynomial.constant(3, 1)
        for k in range(5):
            assert f ** k == expected
            expected = expected * f
    with pytest.raises(ValueError):
        f ** -1


def test_variables_used_and_coefficient_padding():
    f = parse_poly("x1*x3", XYZ)
    assert f.variables_used() == {0, 2}
    assert f.coefficient((1, 0, 1)) == 1
    g = parse_poly("x1", XYZ)
    assert g.coefficient((1,)) == 1  # short tuples pad with zeros
