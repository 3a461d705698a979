"""Exact symbolic tests for Du Bois and semi-log-canonical hypersurface
singularity criteria: Frobenius-power prime scans, the generic-projection
singularity catalog, multiplicity and blow-up discrepancy obstructions, and
the coordinate-crossings product calculus."""

__version__ = "0.1.0"

from .birational import (
    INCONCLUSIVE,
    NOT_SLC,
    MultiplicityReport,
    RankDropReport,
    SlcObstruction,
    discrepancy_coefficient,
    jacobian_rank_at,
    line_multiplicity_probe,
    multiplicity_at,
    rational_matrix_rank,
    slc_obstruction,
    slc_obstruction_from_mu,
)
from .catalog import (
    BATTERY_LABELS,
    CatalogCase,
    PinchNormalization,
    build_case,
    pinch_normalization_fixture,
)
from .frobenius import (
    EVIDENCE,
    NO_EVIDENCE,
    FedderScanReport,
    FedderVerdict,
    disjoint_factor_split,
    fedder_survivors,
    frobenius_power_test,
    in_frobenius_power,
    prune,
    scan_primes,
)
from .gsnc import (
    UNKNOWN,
    YES,
    CoordinateIdeal,
    DuBoisEvidence,
    GsncPresentation,
    SlcEvidence,
    du_bois_from_fedder_scan,
    du_bois_from_gsnc,
    du_bois_from_semismooth,
    du_bois_product,
    product,
    product_identity_check,
    slc_from_du_bois,
)
from .polyring import (
    Monomial,
    PolyParseError,
    Polynomial,
    parse_poly,
    primes_in_range,
)

__all__ = [
    "BATTERY_LABELS",
    "CatalogCase",
    "CoordinateIdeal",
    "DuBoisEvidence",
    "EVIDENCE",
    "FedderScanReport",
    "FedderVerdict",
    "GsncPresentation",
    "INCONCLUSIVE",
    "Monomial",
    "MultiplicityReport",
    "NOT_SLC",
    "NO_EVIDENCE",
    "PinchNormalization",
    "PolyParseError",
    "Polynomial",
    "RankDropReport",
    "SlcEvidence",
    "SlcObstruction",
    "UNKNOWN",
    "YES",
    "build_case",
    "discrepancy_coefficient",
    "disjoint_factor_split",
    "du_bois_from_fedder_scan",
    "du_bois_from_gsnc",
    "du_bois_from_semismooth",
    "du_bois_product",
    "fedder_survivors",
    "frobenius_power_test",
    "in_frobenius_power",
    "jacobian_rank_at",
    "line_multiplicity_probe",
    "multiplicity_at",
    "parse_poly",
    "pinch_normalization_fixture",
    "primes_in_range",
    "product",
    "product_identity_check",
    "prune",
    "rational_matrix_rank",
    "scan_primes",
    "slc_from_du_bois",
    "slc_obstruction",
    "slc_obstruction_from_mu",
]
