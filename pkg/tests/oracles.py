"""Independent oracles and random generators shared by the test modules.

The oracles deliberately avoid the optimizations under test: the Frobenius
oracle expands f^(p-1) fully with no pruning and filters afterwards, and the
rank oracle searches for a largest nonsingular minor via cofactor
determinants.  Agreement between fast path and oracle is the point of the
tests that import these.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from hypersing import Polynomial


def naive_fedder_survivors(f: Polynomial, p: int) -> Polynomial:
    """f^(p-1) over F_p by full repeated multiplication, filtered at the end."""
    g = f.reduce_mod(p) if f.char == 0 else f
    power = Polynomial.constant(g.nvars, 1, p)
    for _ in range(p - 1):
        power = power * g
    kept = {e: c for e, c in power.items() if all(x < p for x in e)}
    return Polynomial(g.nvars, kept, p)


def naive_fedder_passes(f: Polynomial, p: int) -> bool:
    return not naive_fedder_survivors(f, p).is_zero()


def determinant(matrix) -> Fraction:
    """Cofactor expansion; fine for the tiny matrices used in tests."""
    n = len(matrix)
    if n == 1:
        return Fraction(matrix[0][0])
    total = Fraction(0)
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        sign = -1 if j % 2 else 1
        total += sign * Fraction(matrix[0][j]) * determinant(minor)
    return total


def minor_rank(matrix) -> int:
    """Rank as the largest size of a nonsingular square minor."""
    if not matrix or not matrix[0]:
        return 0
    nrows, ncols = len(matrix), len(matrix[0])
    for size in range(min(nrows, ncols), 0, -1):
        for rows in combinations(range(nrows), size):
            for cols in combinations(range(ncols), size):
                sub = [[matrix[i][j] for j in cols] for i in rows]
                if determinant(sub) != 0:
                    return size
    return 0


def random_exponents(rng, nvars: int, max_degree: int) -> tuple[int, ...]:
    degree = rng.randint(0, max_degree)
    exps = [0] * nvars
    for _ in range(degree):
        exps[rng.randrange(nvars)] += 1
    return tuple(exps)


def random_poly(
    rng,
    nvars: int = 3,
    max_terms: int = 4,
    max_degree: int = 4,
    coeff_bound: int = 3,
    allow_zero: bool = False,
) -> Polynomial:
    """Random small polynomial over ZZ; nonzero unless allow_zero."""
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            coeff = 0
            while coeff == 0:
                coeff = rng.randint(-coeff_bound, coeff_bound)
            exps = random_exponents(rng, nvars, max_degree)
            terms[exps] = terms.get(exps, 0) + coeff
        poly = Polynomial(nvars, terms)
        if allow_zero or not poly.is_zero():
            return poly


def random_point(rng, nvars: int, bound: int = 3, denominators=(1, 1, 2)):
    """Random exact rational point with small coordinates."""
    return tuple(
        Fraction(rng.randint(-bound, bound), rng.choice(denominators))
        for _ in range(nvars)
    )
