"""Catalog equations against independently written expression oracles."""

import pytest

from hypersing import build_case, disjoint_factor_split, parse_poly, pinch_normalization_fixture
from hypersing.catalog import (
    BATTERY_LABELS,
    MIN_N,
    CatalogCase,
    case0,
    case1a,
    case1b,
    case2a,
    case2b,
    case2c,
    case3,
    case4,
    double_normal_crossing,
    pinch_point,
)

VARS6 = [f"x{i}" for i in range(1, 7)]

# The case equations at n = 5, written out by hand from their definitions.
EXPECTED_N5 = {
    ("0", 6): "x1*x2*x3*x4*x5*x6",
    ("1a", None): "x5^2 - x1^2*x6",
    ("1b", None): (
        "x5^3"
        " + x1^2*x3*x5 - x1^3*x6 + 2*x2*x3*x5^2 - 3*x1*x2*x5*x6"
        " + x2^2*x3^2*x5 - x1*x2^2*x3*x6 - x2^3*x6^2"
    ),
    ("2a", None): "x1*(x5^2 - x2^2*x6)",
    ("2b", None): (
        "x1*(x5^3"
        " + x2^2*x4*x5 - x2^3*x6 + 2*x3*x4*x5^2 - 3*x2*x3*x5*x6"
        " + x3^2*x4^2*x5 - x2*x3^2*x4*x6 - x3^3*x6^2)"
    ),
    ("2c", None): "(x5^2 - x1^2*x6)*(x3^2 - x2^2*x4)",
    ("3", None): "x1*x2*(x5^2 - x3^2*x6)",
    ("4", None): "x1*x2*x3*(x5^2 - x4^2*x6)",
}


def test_equations_match_expression_oracles_at_n5():
    for (label, d), text in EXPECTED_N5.items():
        case = build_case(label, 5, d=d)
        assert case.polynomial == parse_poly(text, VARS6), label
        assert case.label == label
        assert case.n == 5


def test_all_cases_vanish_and_are_singular_at_origin():
    for (label, d) in EXPECTED_N5:
        case = build_case(label, 5, d=d)
        origin = (0,) * 6
        assert case.polynomial.evaluate(origin) == 0
        assert case.singular
        for i in range(6):
            assert case.polynomial.diff(i).evaluate(origin) == 0


def test_case0_d1_is_smooth():
    case = case0(1, 5)
    assert case.polynomial == parse_poly("x1", VARS6)
    assert not case.singular
    assert case.d == 1


def test_case0_d_range():
    with pytest.raises(ValueError):
        case0(0, 5)
    with pytest.raises(ValueError):
        case0(7, 5)
    assert case0(6, 5).d == 6


def test_min_n_enforced():
    builders = {
        "1a": case1a,
        "1b": case1b,
        "2a": case2a,
        "2b": case2b,
        "2c": case2c,
        "3": case3,
        "4": case4,
    }
    for label, builder in builders.items():
        low = MIN_N[label] - 1
        with pytest.raises(ValueError):
            builder(low)
        case = builder(MIN_N[label])
        assert case.polynomial.nvars == MIN_N[label] + 1
        assert case.min_n == MIN_N[label]


def test_case1a_smallest_instance():
    case = case1a(2)
    assert case.polynomial == parse_poly("x2^2 - x1^2*x3", ["x1", "x2", "x3"])


def test_case1b_shape():
    f = case1b(5).polynomial
    assert f.term_count == 8
    degrees = sorted(sum(e) for e, _ in f.items())
    assert degrees == [3, 4, 4, 4, 4, 5, 5, 5]
    assert f.coefficient((1, 1, 0, 0, 1, 1)) == -3
    assert f.coefficient((0, 0, 0, 0, 3, 0)) == 1
    assert sorted(c for _, c in f.items()) == [-3, -1, -1, -1, 1, 1, 1, 2]


def test_case2b_cubic_factor_is_case1b_with_shifted_slots():
    factors = disjoint_factor_split(case2b(5).polynomial)
    assert len(factors) == 2
    hyperplane, cubic = sorted(factors, key=lambda g: g.total_degree())
    assert hyperplane == parse_poly("x1", VARS6)
    # slots (x1,x2,x3) move to (x2,x3,x4); x5, x6 stay put
    shifted = case1b(5).polynomial.permute((1, 2, 3, 0, 4, 5))
    assert cubic == shifted


def test_displayed_factor_structure():
    expected_supports = {
        "2a": [{0}, {1, 4, 5}],
        "2b": [{0}, {1, 2, 3, 4, 5}],
        "2c": [{0, 4, 5}, {1, 2, 3}],
        "3": [{0}, {1}, {2, 4, 5}],
        "4": [{0}, {1}, {2}, {3, 4, 5}],
    }
    for label, supports in expected_supports.items():
        factors = disjoint_factor_split(build_case(label, 5).polynomial)
        assert [set(g.variables_used()) for g in factors] == supports


def test_build_case_registry():
    assert BATTERY_LABELS == ("0", "1a", "1b", "2a", "2b", "2c", "3", "4")
    assert build_case("dnc", 5).polynomial == parse_poly("x1*x2", VARS6)
    assert build_case("pinch", 5).polynomial == build_case("1a", 5).polynomial
    assert build_case("0", 5).d == 6  # d defaults to n + 1
    with pytest.raises(ValueError):
        build_case("9z", 5)
    with pytest.raises(ValueError):
        build_case("1a", 5, d=3)
    assert isinstance(build_case("3", 5), CatalogCase)


def test_semismooth_fixtures():
    dnc = double_normal_crossing(5)
    assert dnc.label == "dnc"
    assert dnc.d == 2
    assert dnc.singular
    pinch = pinch_point(2)
    assert pinch.label == "pinch"
    assert pinch.polynomial == parse_poly("x2^2 - x1^2*x3", ["x1", "x2", "x3"])


def test_citations_are_descriptive():
    for (label, d) in EXPECTED_N5:
        case = build_case(label, 5, d=d)
        assert case.citation
        assert case.citation == case.citation.strip()


def test_pinch_normalization_fixture():
    fix = pinch_normalization_fixture()
    y1y2, y2, y1sq = fix.components
    assert y1y2.evaluate((1, 2)) == 2
    assert [g.evaluate((0, 0)) for g in fix.components] == [0, 0, 0]
    assert [g.evaluate((3, 5)) for g in fix.components] == [15, 5, 9]
    assert fix.conductor_variables == (0, 1)
    assert fix.equation == parse_poly("x1^2 - x2^2*x3", ["x1", "x2", "x3"])
    # the image of the map satisfies the pinch equation identically
    assert fix.pullback_of_equation().is_zero()
