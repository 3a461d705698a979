"""Local equations of generic-projection hypersurface singularities.

A generic linear projection of a smooth n-fold (n <= 5) onto a hypersurface
in (n+1)-space produces only a short list of local analytic normal forms,
labelled 0 through 4 here.  This module constructs those equations exactly,
as integer polynomials in x1..x_{n+1} parametrized by the target dimension
n, together with the two semismooth normal forms (double normal crossing
and pinch point) used as fixtures elsewhere.

Variable convention: x_k is position k-1; the classification's x_n and
x_{n+1} resolve to positions n-1 and n at construction time.  Each case
requires the displayed indices to be pairwise distinct, which gives its
minimum admissible n.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polyring import Polynomial

BATTERY_LABELS = ("0", "1a", "1b", "2a", "2b", "2c", "3", "4")

MIN_N = {
    "0": 1,
    "1a": 2,
    "1b": 4,
    "2a": 3,
    "2b": 5,
    "2c": 5,
    "3": 4,
    "4": 5,
    "dnc": 1,
    "pinch": 2,
}


@dataclass(frozen=True)
class CatalogCase:
    """A named local equation with its parameters.

    `singular` is False only for the degenerate one-sheet case (d = 1 of
    case 0), which is a smooth hyperplane; every other case vanishes at the
    origin with all first partials zero there.
    """

    label: str
    n: int
    d: int | None
    polynomial: Polynomial
    citation: str
    min_n: int
    singular: bool


def _finish(label: str, n: int, d: int | None, poly: Polynomial, citation: str) -> CatalogCase:
    origin = (0,) * poly.nvars
    if poly.evaluate(origin) != 0:
        raise AssertionError(f"catalog case {label} does not vanish at the origin")
    singular = all(poly.diff(i).evaluate(origin) == 0 for i in range(poly.nvars))
    return CatalogCase(
        label=label,
        n=n,
        d=d,
        polynomial=poly,
        citation=citation,
        min_n=MIN_N[label],
        singular=singular,
    )


def _mono(nvars: int, powers: dict[int, int], coeff: int = 1) -> Polynomial:
    return Polynomial.monomial(nvars, powers, coeff)


def _pinch_form(nvars: int, double: int, a: int, b: int) -> Polynomial:
    """x_double^2 - x_a^2 * x_b, the pinch normal form on three positions."""
    return _mono(nvars, {double: 2}) - _mono(nvars, {a: 2, b: 1})


def _phi4(nvars: int, a: int, b: int, c: int, u: int, v: int) -> Polynomial:
    return (
        _mono(nvars, {a: 2, c: 1, u: 1})
        - _mono(nvars, {a: 3, v: 1})
        + _mono(nvars, {b: 1, c: 1, u: 2}, 2)
        - _mono(nvars, {a: 1, b: 1, u: 1, v: 1}, 3)
    )


def _phi5(nvars: int, a: int, b: int, c: int, u: int, v: int) -> Polynomial:
    return (
        _mono(nvars, {b: 2, c: 2, u: 1})
        - _mono(nvars, {a: 1, b: 2, c: 1, v: 1})
        - _mono(nvars, {b: 3, v: 2})
    )


def _cubic_form(nvars: int, a: int, b: int, c: int, u: int, v: int) -> Polynomial:
    """x_u^3 plus the degree-4 and degree-5 correction forms on five slots."""
    return _mono(nvars, {u: 3}) + _phi4(nvars, a, b, c, u, v) + _phi5(nvars, a, b, c, u, v)


def _require_n(label: str, n: int) -> None:
    if n < MIN_N[label]:
        raise ValueError(
            f"case {label} needs n >= {MIN_N[label]} for distinct variable indices, got {n}"
        )


def case0(d: int, n: int) -> CatalogCase:
    """d coordinate hyperplanes through the origin: x1 * ... * xd."""
    _require_n("0", n)
    if not 1 <= d <= n + 1:
        raise ValueError(f"sheet count d must satisfy 1 <= d <= n+1, got d={d}, n={n}")
    nv = n + 1
    poly = _mono(nv, {i: 1 for i in range(d)})
    return _finish("0", n, d, poly, f"{d} smooth sheets meeting transversally (normal crossing)")


def case1a(n: int) -> CatalogCase:
    """Pinch point: x_n^2 - x1^2 * x_{n+1}."""
    _require_n("1a", n)
    nv = n + 1
    poly = _pinch_form(nv, n - 1, 0, n)
    return _finish("1a", n, None, poly, "pinch point (semismooth normal form)")


def case1b(n: int) -> CatalogCase:
    """The degree-5 cubic-core equation x_n^3 + corrections, eight terms."""
    _require_n("1b", n)
    nv = n + 1
    poly = _cubic_form(nv, 0, 1, 2, n - 1, n)
    return _finish("1b", n, None, poly, "cubic-core triple-point equation")


def case2a(n: int) -> CatalogCase:
    """Hyperplane times pinch: x1 * (x_n^2 - x2^2 * x_{n+1})."""
    _require_n("2a", n)
    nv = n + 1
    poly = _mono(nv, {0: 1}) * _pinch_form(nv, n - 1, 1, n)
    return _finish("2a", n, None, poly, "hyperplane times pinch point")


def case2b(n: int) -> CatalogCase:
    """Hyperplane times the cubic-core equation in shifted variables."""
    _require_n("2b", n)
    nv = n + 1
    poly = _mono(nv, {0: 1}) * _cubic_form(nv, 1, 2, 3, n - 1, n)
    return _finish("2b", n, None, poly, "hyperplane times cubic-core equation")


def case2c(n: int) -> CatalogCase:
    """Two pinch points in disjoint variables."""
    _require_n("2c", n)
    nv = n + 1
    poly = _pinch_form(nv, n - 1, 0, n) * _pinch_form(nv, n - 3, 1, n - 2)
    return _finish("2c", n, None, poly, "product of two pinch points")


def case3(n: int) -> CatalogCase:
    """Two hyperplanes times a pinch: x1 * x2 * (x_n^2 - x3^2 * x_{n+1})."""
    _require_n("3", n)
    nv = n + 1
    poly = _mono(nv, {0: 1, 1: 1}) * _pinch_form(nv, n - 1, 2, n)
    return _finish("3", n, None, poly, "two hyperplanes times pinch point")


def case4(n: int) -> CatalogCase:
    """Three hyperplanes times a pinch: x1 * x2 * x3 * (x_n^2 - x4^2 * x_{n+1})."""
    _require_n("4", n)
    nv = n + 1
    poly = _mono(nv, {0: 1, 1: 1, 2: 1}) * _pinch_form(nv, n - 1, 3, n)
    return _finish("4", n, None, poly, "three hyperplanes times pinch point")


def double_normal_crossing(n: int) -> CatalogCase:
    """Two smooth sheets meeting transversally: x1 * x2."""
    _require_n("dnc", n)
    nv = n + 1
    poly = _mono(nv, {0: 1, 1: 1})
    case = case0(2, n)
    return CatalogCase(
        label="dnc",
        n=n,
        d=2,
        polynomial=poly,
        citation="double normal crossing (semismooth normal form)",
        min_n=MIN_N["dnc"],
        singular=case.singular,
    )


def pinch_point(n: int) -> CatalogCase:
    """The pinch point under its fixture label."""
    base = case1a(n)
    return CatalogCase(
        label="pinch",
        n=n,
        d=None,
        polynomial=base.polynomial,
        citation=base.citation,
        min_n=MIN_N["pinch"],
        singular=base.singular,
    )


_BUILDERS = {
    "0": case0,
    "1a": case1a,
    "1b": case1b,
    "2a": case2a,
    "2b": case2b,
    "2c": case2c,
    "3": case3,
    "4": case4,
    "dnc": double_normal_crossing,
    "pinch": pinch_point,
}


def build_case(label: str, n: int, d: int | None = None) -> CatalogCase:
    """Construct a catalog case by label; d applies to case 0 only."""
    if label not in _BUILDERS:
        raise ValueError(f"unknown case label {label!r}; known: {sorted(_BUILDERS)}")
    if label == "0":
        return case0(n + 1 if d is None else d, n)
    if d is not None:
        raise ValueError(f"parameter d applies to case 0 only, not {label!r}")
    return _BUILDERS[label](n)


@dataclass(frozen=True)
class PinchNormalization:
    """The pinch point's normalization data, stored (not computed).

    The smooth parameter plane (y1, y2) maps onto the pinch hypersurface
    x1^2 = x2^2 * x3 by x1 -> y1*y2, x2 -> y2, x3 -> y1^2.  The conductor
    ideal downstairs is (x1, x2); its image upstairs is the ideal (y2).
    """

    components: tuple[Polynomial, Polynomial, Polynomial]
    conductor_variables: tuple[int, ...]
    equation: Polynomial
    parameter_names: tuple[str, str] = ("y1", "y2")

    def pullback_of_equation(self) -> Polynomial:
        """Substitute the map into the pinch equation (vanishes identically)."""
        result = Polynomial.zero(2)
        for exps, c in self.equation.items():
            term = Polynomial.constant(2, c)
            for g, e in zip(self.components, exps):
                if e:
                    term = term * g ** e
            result = result + term
        return result


def pinch_normalization_fixture() -> PinchNormalization:
    """Normalization map of the pinch point and its conductor data."""
    y1y2 = Polynomial.monomial(2, {0: 1, 1: 1})
    y2 = Polynomial.variable(2, 1)
    y1sq = Polynomial.monomial(2, {0: 2})
    equation = Polynomial.monomial(3, {0: 2}) - Polynomial.monomial(3, {1: 2, 2: 1})
    return PinchNormalization(
        components=(y1y2, y2, y1sq),
        conductor_variables=(0, 1),
        equation=equation,
    )
