"""Multiplicity, blow-up discrepancy, and rank-drop bounds for hypersurfaces.

The multiplicity of a hypersurface f = 0 at a point is the minimal total
degree appearing in f after translating the point to the origin; this is
exact and deterministic, and agrees with the intersection-with-a-general-line
definition for hypersurfaces.  Blowing up a point of multiplicity mu on a
hypersurface of dimension n contributes the exceptional divisor with
coefficient n - mu, so mu > n + 1 (coefficient below -1) obstructs the
semi-log-canonical property.  Separately, a rank drop of i in the Jacobian
of a finite map forces multiplicity at least 2^i on the image; the rank is
computed by exact rational elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polyring import Polynomial

NOT_SLC = "not-slc"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class MultiplicityReport:
    """Order of vanishing of a polynomial at an exact point.

    mu = 0 exactly when the point is off the hypersurface; mu >= 2 exactly
    when the point is a singular point of it.
    """

    point: tuple
    mu: int


@dataclass(frozen=True)
class SlcObstruction:
    """Verdict of the multiplicity obstruction for a point on a hypersurface
    of dimension ambient_n in projective (ambient_n + 1)-space.

    discrepancy_coefficient = ambient_n - mu is the coefficient of the
    exceptional divisor on the blown-up hypersurface.  The verdict is
    NOT_SLC exactly when mu > ambient_n + 1, equivalently when the
    coefficient is below -1; the obstruction is one-directional, so
    everything else is INCONCLUSIVE.
    """

    mu: int
    ambient_n: int
    discrepancy_coefficient: int
    verdict: str

    def __post_init__(self) -> None:
        assert self.discrepancy_coefficient == self.ambient_n - self.mu
        assert (self.verdict == NOT_SLC) == (self.mu > self.ambient_n + 1)
        assert (self.verdict == NOT_SLC) == (self.discrepancy_coefficient < -1)


@dataclass(frozen=True)
class RankDropReport:
    """Jacobian rank of a polynomial map at a source point.

    drop = (source dimension) - rank; the image of the map has multiplicity
    at least 2^drop at the image point (a lower bound, never asserted as
    the exact value).
    """

    point: tuple
    jacobian_rank: int
    drop: int
    multiplicity_lower_bound: int


def multiplicity_at(f: Polynomial, point) -> MultiplicityReport:
    """Minimal total degree of f after translating `point` to the origin."""
    if f.is_zero():
        raise ValueError("multiplicity is undefined for the zero polynomial")
    pt = tuple(point)
    shifted = f.translate(pt)
    if shifted.is_zero():
        raise AssertionError("translation of a nonzero polynomial vanished")
    mu = min(sum(exps) for exps, _ in shifted.items())
    return MultiplicityReport(point=pt, mu=mu)


def discrepancy_coefficient(n: int, mu: int) -> int:
    """Coefficient n - mu of the exceptional divisor after blowing up a
    point of multiplicity mu on an n-dimensional hypersurface."""
    if n < 1:
        raise ValueError(f"hypersurface dimension must be at least 1, got {n}")
    if mu < 0:
        raise ValueError(f"multiplicity must be nonnegative, got {mu}")
    return n - mu


def slc_obstruction_from_mu(mu: int, n: int) -> SlcObstruction:
    """Assemble the obstruction verdict from a known multiplicity."""
    a = discrepancy_coefficient(n, mu)
    verdict = NOT_SLC if mu > n + 1 else INCONCLUSIVE
    return SlcObstruction(mu=mu, ambient_n=n, discrepancy_coefficient=a, verdict=verdict)


def slc_obstruction(f: Polynomial, point, n: int) -> SlcObstruction:
    """Run the multiplicity obstruction for f, a local equation of a
    hypersurface of dimension n in projective (n+1)-space."""
    if f.nvars != n + 1:
        raise ValueError(
            f"a dimension-{n} hypersurface needs a local equation in {n + 1} "
            f"variables, got {f.nvars}"
        )
    report = multiplicity_at(f, point)
    return slc_obstruction_from_mu(report.mu, n)


def restrict_to_line(f: Polynomial, point, direction) -> Polynomial:
    """The univariate polynomial t -> f(point + t * direction), exact."""
    if f.char != 0:
        raise ValueError("line restriction is defined in characteristic 0 only")
    pt = list(point)
    dirn = list(direction)
    if len(pt) != f.nvars or len(dirn) != f.nvars:
        raise ValueError("point and direction must match the variable count")
    t = Polynomial.variable(1, 0)
    lines = [Polynomial.constant(1, Fraction(a)) + t.scale(d) for a, d in zip(pt, dirn)]
    result = Polynomial.zero(1)
    for exps, c in f.items():
        term = Polynomial.constant(1, c)
        for line, e in zip(lines, exps):
            if e:
                term = term * line ** e
        result = result + term
    return result


def line_multiplicity_probe(f: Polynomial, point, rng, attempts: int = 6) -> int:
    """Vanishing order of f along random lines through the point.

    Each line gives an upper-bound sample of the order; the minimum over
    attempts equals the multiplicity for generic directions (lines lying
    inside the hypersurface are discarded).  This is the randomized
    cross-check for multiplicity_at, never the primary method.
    """
    if f.is_zero():
        raise ValueError("multiplicity is undefined for the zero polynomial")
    pt = tuple(point)
    best = None
    for _ in range(attempts):
        direction = [rng.randint(-50, 50) for _ in range(f.nvars)]
        if not any(direction):
            continue
        g = restrict_to_line(f, pt, direction)
        if g.is_zero():
            continue
        order = min(exps[0] for exps, _ in g.items())
        if best is None or order < best:
            best = order
    if best is None:
        raise ValueError("no usable line found; all sampled lines lie in the hypersurface")
    return best


def rational_matrix_rank(rows) -> int:
    """Rank of a matrix of ints/Fractions by elimination with full pivoting."""
    matrix = [[Fraction(entry) for entry in row] for row in rows]
    if not matrix:
        return 0
    ncols = len(matrix[0])
    if any(len(row) != ncols for row in matrix):
        raise ValueError("matrix rows must all have the same length")
    rank = 0
    r = 0
    cols = list(range(ncols))
    while r < len(matrix) and cols:
        # Full pivoting: largest remaining entry by absolute value.
        best = None
        for i in range(r, len(matrix)):
            for j in cols:
                if matrix[i][j] != 0 and (best is None or abs(matrix[i][j]) > abs(matrix[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        pi, pj = best
        matrix[r], matrix[pi] = matrix[pi], matrix[r]
        pivot = matrix[r][pj]
        for i in range(r + 1, len(matrix)):
            factor = matrix[i][pj] / pivot
            if factor:
                for j in cols:
                    matrix[i][j] -= factor * matrix[r][j]
        cols.remove(pj)
        rank += 1
        r += 1
    return rank


def jacobian_rank_at(maps, point) -> RankDropReport:
    """Rank of the Jacobian of (f1, ..., fm) at an exact rational point.

    The source dimension is the common variable count k; the report carries
    drop = k - rank and the multiplicity lower bound 2^drop for the image.
    """
    components = list(maps)
    if not components:
        raise ValueError("the map needs at least one component")
    k = components[0].nvars
    for g in components:
        if g.nvars != k:
            raise ValueError("map components must share one variable count")
        if g.char != 0:
            raise ValueError("Jacobian ranks are computed in characteristic 0")
    pt = tuple(point)
    if len(pt) != k:
        raise ValueError(f"point length {len(pt)} != source dimension {k}")
    rows = [[g.diff(i).evaluate(pt) for i in range(k)] for g in components]
    rank = rational_matrix_rank(rows)
    drop = k - rank
    return RankDropReport(
        point=pt,
        jacobian_rank=rank,
        drop=drop,
        multiplicity_lower_bound=2 ** drop,
    )
