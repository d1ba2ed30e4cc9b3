"""Nonlocal characterization of two-qubit gates.

Local invariants, entangling power by independent routes, and
perfect-entangler classification over the Weyl chamber.
"""
from .canonical import (
    EdgeId,
    WeylPoint,
    canonical_gate,
    edge_point,
    in_weyl_chamber,
    mirror,
    random_chamber_points,
)
from .catalog import catalog_records, named_gate, verify_monte_carlo
from .classify import (
    GateRecord,
    PeVerdict,
    TheoremReport,
    classify_gate,
    is_pe_geometric,
    is_pe_invariant,
    verify_theorems,
)
from .epower import (
    EpEstimate,
    ep_closed_form,
    ep_from_g1_abs,
    ep_monte_carlo,
    ep_operator_exact,
    linear_entropy,
    verify_route_agreement,
)
from .errors import CatalogError, ConsistencyError, NonUnitaryError, TheoremViolationError
from .invariants import (
    LocalInvariants,
    g1_abs_closed,
    g1_complex_closed,
    g1_conjugate_check,
    g2_closed,
    g2_closed_product_form,
    invariants_at_point,
    invariants_from_matrix,
)
from .linalg import SWAP, apply, partial_trace, transposition_13

__version__ = "0.1.0"

__all__ = [
    "CatalogError",
    "ConsistencyError",
    "EdgeId",
    "EpEstimate",
    "GateRecord",
    "LocalInvariants",
    "NonUnitaryError",
    "PeVerdict",
    "SWAP",
    "TheoremReport",
    "TheoremViolationError",
    "WeylPoint",
    "apply",
    "canonical_gate",
    "catalog_records",
    "classify_gate",
    "edge_point",
    "ep_closed_form",
    "ep_from_g1_abs",
    "ep_monte_carlo",
    "ep_operator_exact",
    "g1_abs_closed",
    "g1_complex_closed",
    "g1_conjugate_check",
    "g2_closed",
    "g2_closed_product_form",
    "in_weyl_chamber",
    "invariants_at_point",
    "invariants_from_matrix",
    "is_pe_geometric",
    "is_pe_invariant",
    "linear_entropy",
    "mirror",
    "named_gate",
    "partial_trace",
    "random_chamber_points",
    "transposition_13",
    "verify_monte_carlo",
    "verify_route_agreement",
    "verify_theorems",
]
