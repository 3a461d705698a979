"""Coordinate-ideal crossings calculus and the Du Bois evidence lattice.

A generalized normal-crossings singularity is presented as an intersection
I_1 cap ... cap I_k of ideals, each generated by a subset of the coordinate
functions.  This module stores that intersection form directly, so products
over disjoint variable blocks are concatenation; the identity I*J = I cap J
for blocks with no shared variables is checked by brute-force monomial
enumeration against explicit monomial generators of the intersection
(iterated pairwise lcm).

Evidence objects record which sufficient criterion, if any, certifies the
Du Bois or semi-log-canonical property: a crossings presentation, a
semismooth normal form, a clean Frobenius prime scan up to a bound, and
products of certified factors all yield "yes"; everything else stays
"unknown".  No verdict here is ever a proof of failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .frobenius import EVIDENCE, FedderScanReport
from .polyring import Polynomial

YES = "yes"
UNKNOWN = "unknown"

REASON_GSNC = "gsnc"
REASON_SEMISMOOTH = "semismooth"
REASON_PRODUCT = "product"
REASON_SLC_UPGRADE = "gorenstein-hypersurface-upgrade"


def fedder_reason(prime_bound: int) -> str:
    return f"fedder-scan(p<={prime_bound})"


@dataclass(frozen=True)
class CoordinateIdeal:
    """The ideal generated by the coordinate functions at these positions."""

    variables: frozenset

    def __init__(self, variables):
        vs = frozenset(variables)
        if not vs:
            raise ValueError("a coordinate ideal needs at least one variable")
        if not all(isinstance(v, int) and v >= 0 for v in vs):
            raise ValueError("variable positions must be nonnegative integers")
        object.__setattr__(self, "variables", vs)

    def sorted_variables(self) -> tuple[int, ...]:
        return tuple(sorted(self.variables))

    def contains(self, f: Polynomial) -> bool:
        """True iff every monomial of f is divisible by some generator."""
        return all(
            any(exps[v] > 0 for v in self.variables) for exps, _ in f.items()
        )

    def shift(self, offset: int) -> "CoordinateIdeal":
        return CoordinateIdeal(v + offset for v in self.variables)

    def embed(self, positions) -> "CoordinateIdeal":
        """Reindex through positions[old] = new ambient position."""
        return CoordinateIdeal(positions[v] for v in self.variables)


@dataclass(frozen=True)
class GsncPresentation:
    """An intersection of coordinate ideals in a fixed ambient ring.

    Canonical form: components deduplicated, any component whose variable
    set contains another's removed (the smaller ideal wins in an
    intersection), remainder sorted.  Canonicalization preserves membership
    and is idempotent.
    """

    nvars: int
    components: tuple[CoordinateIdeal, ...]

    def __init__(self, nvars: int, components):
        if nvars < 1:
            raise ValueError("ambient variable count must be positive")
        comps = [
            c if isinstance(c, CoordinateIdeal) else CoordinateIdeal(c)
            for c in components
        ]
        if not comps:
            raise ValueError("a presentation needs at least one component ideal")
        for c in comps:
            if max(c.variables) >= nvars:
                raise ValueError(
                    f"component uses variable position {max(c.variables)} outside "
                    f"ambient of {nvars} variables"
                )
        kept = []
        for c in comps:
            if any(other.variables < c.variables for other in comps):
                continue
            if c not in kept:
                kept.append(c)
        kept.sort(key=lambda c: c.sorted_variables())
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "components", tuple(kept))

    def contains(self, f: Polynomial) -> bool:
        """Exact membership of f in the intersection ideal."""
        if f.nvars != self.nvars:
            raise ValueError(
                f"variable count mismatch: polynomial has {f.nvars}, ambient is {self.nvars}"
            )
        return all(c.contains(f) for c in self.components)

    def monomial_generators(self) -> tuple[tuple[int, ...], ...]:
        """Minimal monomial generators of the intersection.

        Intersections of monomial ideals are generated by pairwise lcms of
        the factors' generators; coordinate ideals start from bare
        variables, and redundant multiples are pruned at each step.
        """
        gens = [_unit_vector(self.nvars, v) for v in self.components[0].sorted_variables()]
        for comp in self.components[1:]:
            step = []
            for g in gens:
                for v in comp.sorted_variables():
                    step.append(_lcm_exps(g, _unit_vector(self.nvars, v)))
            gens = _minimalize(step)
        return tuple(sorted(gens))

    def to_string(self, names: tuple[str, ...] | None = None) -> str:
        def name(i: int) -> str:
            return names[i] if names is not None else f"x{i + 1}"

        parts = [
            "(" + ", ".join(name(v) for v in c.sorted_variables()) + ")"
            for c in self.components
        ]
        return " & ".join(parts)


def _unit_vector(n: int, position: int) -> tuple[int, ...]:
    return tuple(1 if i == position else 0 for i in range(n))


def _lcm_exps(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(max(x, y) for x, y in zip(a, b))


def _divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _minimalize(gens) -> list[tuple[int, ...]]:
    unique = sorted(set(gens))
    return [
        g
        for g in unique
        if not any(other != g and _divides(other, g) for other in unique)
    ]


def _resolve_blocks(a: GsncPresentation, b: GsncPresentation, a_block, b_block, ambient):
    """Shared embedding logic for product and the identity check.

    Defaults to concatenation: A keeps its positions, B is shifted past
    them.  Explicit blocks must be disjoint injections into the ambient.
    """
    if a_block is None and b_block is None and ambient is None:
        ambient = a.nvars + b.nvars
        a_block = tuple(range(a.nvars))
        b_block = tuple(range(a.nvars, ambient))
    elif a_block is None or b_block is None or ambient is None:
        raise ValueError("explicit embeddings need a_block, b_block, and ambient together")
    a_block = tuple(a_block)
    b_block = tuple(b_block)
    if len(a_block) != a.nvars or len(b_block) != b.nvars:
        raise ValueError("block lengths must match the factors' variable counts")
    if len(set(a_block)) != len(a_block) or len(set(b_block)) != len(b_block):
        raise ValueError("blocks must not repeat positions")
    if set(a_block) & set(b_block):
        raise ValueError(
            f"variable blocks overlap at positions {sorted(set(a_block) & set(b_block))}"
        )
    if not all(0 <= p < ambient for p in a_block + b_block):
        raise ValueError("block positions fall outside the ambient variable count")
    return a_block, b_block, ambient


def product(
    a: GsncPresentation,
    b: GsncPresentation,
    a_block=None,
    b_block=None,
    ambient: int | None = None,
) -> GsncPresentation:
    """Presentation of the product singularity over disjoint variable blocks.

    Concatenating the component lists presents I cap J, which equals the
    product ideal I*J because the blocks share no variables.
    """
    a_block, b_block, ambient = _resolve_blocks(a, b, a_block, b_block, ambient)
    components = [c.embed(a_block) for c in a.components]
    components += [c.embed(b_block) for c in b.components]
    return GsncPresentation(ambient, components)


def monomials_up_to_degree(nvars: int, bound: int):
    """All exponent tuples in nvars variables with total degree <= bound."""
    for d in range(bound + 1):
        for positions in combinations_with_replacement(range(nvars), d):
            exps = [0] * nvars
            for p in positions:
                exps[p] += 1
            yield tuple(exps)


def product_identity_check(
    a: GsncPresentation,
    b: GsncPresentation,
    degree_bound: int,
    a_block=None,
    b_block=None,
    ambient: int | None = None,
) -> bool:
    """Brute-force check that I*J and I cap J agree up to a degree bound.

    Membership in I*J is decided from explicit monomial generators (every
    pairwise product of a generator of I and one of J); membership in
    I cap J is decided by the concatenated presentation.  Returns true iff
    the two agree on every monomial of total degree <= degree_bound.
    """
    if degree_bound < 1:
        raise ValueError("degree bound must be at least 1")
    a_block, b_block, ambient = _resolve_blocks(a, b, a_block, b_block, ambient)
    combined = product(a, b, a_block, b_block, ambient)

    def lift(gens, block):
        lifted = []
        for g in gens:
            exps = [0] * ambient
            for old, e in enumerate(g):
                exps[block[old]] = e
            lifted.append(tuple(exps))
        return lifted

    gens_a = lift(a.monomial_generators(), a_block)
    gens_b = lift(b.monomial_generators(), b_block)
    product_gens = _minimalize(
        [tuple(x + y for x, y in zip(ga, gb)) for ga in gens_a for gb in gens_b]
    )
    for exps in monomials_up_to_degree(ambient, degree_bound):
        in_product = any(_divides(g, exps) for g in product_gens)
        in_intersection = combined.contains(
            Polynomial(ambient, {exps: 1})
        )
        if in_product != in_intersection:
            return False
    return True


# -- evidence lattice ----------------------------------------------------------


@dataclass(frozen=True)
class DuBoisEvidence:
    """Verdict of a sufficient criterion for Du Bois singularities.

    verdict is YES only when produced by one of the constructors below;
    UNKNOWN is the default and never means "no".
    """

    verdict: str
    reason: str | None = None

    def __post_init__(self) -> None:
        if self.verdict not in (YES, UNKNOWN):
            raise ValueError(f"verdict must be {YES!r} or {UNKNOWN!r}")
        if (self.verdict == YES) != (self.reason is not None):
            raise ValueError("YES needs a reason; UNKNOWN must not carry one")


@dataclass(frozen=True)
class SlcEvidence:
    """Verdict of the hypersurface upgrade from Du Bois to semi log canonical."""

    verdict: str
    reason: str | None = None

    def __post_init__(self) -> None:
        if self.verdict not in (YES, UNKNOWN):
            raise ValueError(f"verdict must be {YES!r} or {UNKNOWN!r}")
        if (self.verdict == YES) != (self.reason is not None):
            raise ValueError("YES needs a reason; UNKNOWN must not carry one")


DU_BOIS_UNKNOWN = DuBoisEvidence(UNKNOWN)
SLC_UNKNOWN = SlcEvidence(UNKNOWN)


def du_bois_from_gsnc(presentation: GsncPresentation) -> DuBoisEvidence:
    """Crossings of coordinate ideals are Du Bois."""
    if not isinstance(presentation, GsncPresentation):
        raise ValueError("expected a GsncPresentation")
    return DuBoisEvidence(YES, REASON_GSNC)


def du_bois_from_semismooth() -> DuBoisEvidence:
    """Semismooth normal forms (double crossing, pinch point) are Du Bois."""
    return DuBoisEvidence(YES, REASON_SEMISMOOTH)


def du_bois_from_fedder_scan(report: FedderScanReport) -> DuBoisEvidence:
    """A clean prime scan yields evidence bounded by the largest prime."""
    if report.conclusion == EVIDENCE and report.prime_bound is not None:
        return DuBoisEvidence(YES, fedder_reason(report.prime_bound))
    return DU_BOIS_UNKNOWN


def du_bois_product(e1: DuBoisEvidence, e2: DuBoisEvidence) -> DuBoisEvidence:
    """Products of Du Bois factors are Du Bois; anything weaker is unknown."""
    if e1.verdict == YES and e2.verdict == YES:
        return DuBoisEvidence(YES, REASON_PRODUCT)
    return DU_BOIS_UNKNOWN


def slc_from_du_bois(is_hypersurface: bool, e: DuBoisEvidence) -> SlcEvidence:
    """Du Bois hypersurfaces are semi log canonical (Gorenstein + seminormal)."""
    if is_hypersurface and e.verdict == YES:
        return SlcEvidence(YES, REASON_SLC_UPGRADE)
    return SLC_UNKNOWN
