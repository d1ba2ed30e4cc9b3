"""Perfect-entangler classification and exhaustive consistency checks.

A two-qubit gate is a perfect entangler when it can produce a maximally
entangled state from some product state. Two equivalent tests are
implemented:

  * geometric: after folding the chamber point into the half-chamber
    c1 <= pi/2 (mirror), require c1 + c2 >= pi/2 and c2 + c3 <= pi/2;
  * invariant-only: require |g1| <= 1/4 and -1 <= g2 <= 1.

Perfect entanglers occupy exactly the entangling-power window
[1/6, 2/9]. ``verify_theorems`` sweeps a chamber lattice and confirms
that the two tests agree and that the window holds.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .canonical import WeylPoint, canonical_gate, edge_tags, in_weyl_chamber, mirror
from .epower import ep_closed_form, ep_operator_exact
from .errors import TheoremViolationError
from .invariants import (
    LocalInvariants,
    g1_abs_closed,
    g2_closed,
    invariants_at_point,
    invariants_from_matrix,
)

__all__ = [
    "PE_EP_MAX",
    "PE_EP_MIN",
    "PE_TOL",
    "GateRecord",
    "PeVerdict",
    "TheoremReport",
    "classify_gate",
    "is_pe_geometric",
    "is_pe_invariant",
    "verify_theorems",
]

# slack on every perfect-entangler inequality; margins within this of zero
# mark a boundary case
PE_TOL = 1e-9

PE_EP_MIN = 1.0 / 6.0
PE_EP_MAX = 2.0 / 9.0

_HALF_PI = math.pi / 2


@dataclass(frozen=True)
class PeVerdict:
    """Outcome of one perfect-entangler test.

    margins holds the signed slack of each inequality (>= 0 inside);
    the verdict is true when every margin clears -PE_TOL.
    """

    is_pe: bool
    route: str
    margins: dict[str, float]

    @property
    def on_boundary(self) -> bool:
        return any(abs(m) <= PE_TOL for m in self.margins.values())


def is_pe_geometric(p: WeylPoint) -> PeVerdict:
    """Geometric perfect-entangler test at a chamber point."""
    if not in_weyl_chamber(p):
        raise ValueError(f"point outside the Weyl chamber: {p}")
    q = p if p.c1 <= _HALF_PI else mirror(p)
    margins = {
        "c1_plus_c2": q.c1 + q.c2 - _HALF_PI,
        "c2_plus_c3": _HALF_PI - (q.c2 + q.c3),
    }
    return PeVerdict(
        is_pe=all(m >= -PE_TOL for m in margins.values()),
        route="geometric",
        margins=margins,
    )


def is_pe_invariant(inv: LocalInvariants) -> PeVerdict:
    """Invariant-only perfect-entangler test."""
    margins = {
        "g1_abs": 0.25 - abs(inv.g1),
        "g2_low": inv.g2 + 1.0,
        "g2_high": 1.0 - inv.g2,
    }
    return PeVerdict(
        is_pe=all(m >= -PE_TOL for m in margins.values()),
        route="invariant",
        margins=margins,
    )


@dataclass(frozen=True)
class GateRecord:
    """Full characterization of one gate or local class."""

    name: str | None
    matrix: np.ndarray
    point: WeylPoint | None
    invariants: LocalInvariants
    ep: float
    pe_verdict: bool
    tags: frozenset[str]
    geometric: PeVerdict | None
    invariant: PeVerdict


def _value_tags(inv: LocalInvariants) -> set[str]:
    tags = set()
    if abs(inv.g1) < 1e-9:
        tags.add("SPE")
    if abs(1.0 - abs(inv.g1)) < 1e-9:
        tags.add("ZERO_EP")
    return tags


def classify_gate(target, name: str | None = None) -> GateRecord:
    """Classify a chamber point or an explicit 4x4 unitary.

    For a WeylPoint the invariants and entangling power come from the
    closed forms and the perfect-entangler verdict is computed by both
    routes; a disagreement away from the boundary raises
    TheoremViolationError. For a matrix only the invariant route applies.
    """
    if isinstance(target, WeylPoint):
        p = target
        if not in_weyl_chamber(p):
            raise ValueError(f"point outside the Weyl chamber: {p}")
        inv = invariants_at_point(p)
        geo = is_pe_geometric(p)
        ivd = is_pe_invariant(inv)
        if geo.is_pe != ivd.is_pe and not (geo.on_boundary or ivd.on_boundary):
            raise TheoremViolationError(p, geo.margins, ivd.margins)
        tags = _value_tags(inv) | edge_tags(p)
        return GateRecord(
            name=name,
            matrix=canonical_gate(p),
            point=p,
            invariants=inv,
            ep=ep_closed_form(p),
            pe_verdict=geo.is_pe,
            tags=frozenset(tags),
            geometric=geo,
            invariant=ivd,
        )
    u = np.asarray(target, dtype=complex)
    inv = invariants_from_matrix(u)
    ivd = is_pe_invariant(inv)
    return GateRecord(
        name=name,
        matrix=u,
        point=None,
        invariants=inv,
        ep=ep_operator_exact(u),
        pe_verdict=ivd.is_pe,
        tags=frozenset(_value_tags(inv)),
        geometric=None,
        invariant=ivd,
    )


@dataclass
class TheoremReport:
    """Result of the lattice sweep over the chamber.

    Violation lists are expected to stay empty; lattice points with any
    classification margin within PE_TOL of zero are exempted from the
    equality checks and recorded in boundary_points instead.
    """

    grid_n: int
    n_lattice: int = 0
    n_chamber: int = 0
    n_pe: int = 0
    n_boundary_exempt: int = 0
    boundary_points: list[WeylPoint] = field(default_factory=list)
    g2_bound_violations: list[str] = field(default_factory=list)
    g2_converse_violations: list[str] = field(default_factory=list)
    equivalence_violations: list[str] = field(default_factory=list)
    ep_range_violations: list[str] = field(default_factory=list)

    @property
    def n_violations(self) -> int:
        return (
            len(self.g2_bound_violations)
            + len(self.g2_converse_violations)
            + len(self.equivalence_violations)
            + len(self.ep_range_violations)
        )

    @property
    def passed(self) -> bool:
        return self.n_violations == 0


def verify_theorems(grid_n: int) -> TheoremReport:
    """Sweep a grid_n^3 lattice over the chamber and check both criteria.

    The lattice covers c1 in [0, pi], c2 and c3 in [0, pi/2]; points
    outside the chamber are skipped. At every chamber point four checks
    run: perfect entanglers satisfy -1 <= g2 <= 1; non-perfect entanglers
    with |g1| <= 1/4 have g2 strictly outside (-1, 1); the geometric and
    invariant verdicts coincide; and perfect entanglers have entangling
    power inside [1/6, 2/9]. All comparisons carry the PE_TOL slack.
    """
    if grid_n < 2:
        raise ValueError(f"grid_n must be at least 2, got {grid_n}")
    report = TheoremReport(grid_n=grid_n)
    report.n_lattice = grid_n**3
    c1s = np.linspace(0.0, math.pi, grid_n)
    c2s = np.linspace(0.0, _HALF_PI, grid_n)
    c3s = np.linspace(0.0, _HALF_PI, grid_n)
    for c1 in c1s:
        for c2 in c2s:
            for c3 in c3s:
                p = WeylPoint(float(c1), float(c2), float(c3))
                if not in_weyl_chamber(p):
                    continue
                report.n_chamber += 1
                geo = is_pe_geometric(p)
                g1a = g1_abs_closed(p)
                g2 = g2_closed(p)
                ivd = is_pe_invariant(LocalInvariants(complex(g1a), g2))
                if geo.is_pe:
                    report.n_pe += 1
                    if not -1.0 - PE_TOL <= g2 <= 1.0 + PE_TOL:
                        report.g2_bound_violations.append(
                            f"perfect entangler with g2 = {g2!r} at {p}"
                        )
                    ep = ep_closed_form(p)
                    if not PE_EP_MIN - PE_TOL <= ep <= PE_EP_MAX + PE_TOL:
                        report.ep_range_violations.append(
                            f"perfect entangler with e_p = {ep!r} at {p}"
                        )
                boundary = geo.on_boundary or ivd.on_boundary
                if boundary:
                    report.n_boundary_exempt += 1
                    report.boundary_points.append(p)
                    continue
                if not geo.is_pe and g1a <= 0.25 + PE_TOL:
                    if -1.0 + PE_TOL <= g2 <= 1.0 - PE_TOL:
                        report.g2_converse_violations.append(
                            f"non-perfect entangler with g2 = {g2!r} at {p}"
                        )
                if geo.is_pe != ivd.is_pe:
                    report.equivalence_violations.append(
                        f"geometric {geo.is_pe} vs invariant {ivd.is_pe} at {p}"
                    )
    return report
