"""Weyl-chamber geometry and the canonical two-qubit gate.

Every two-qubit gate is locally equivalent to a canonical gate labelled by
a point (c1, c2, c3) of the Weyl chamber

    c1 >= c2 >= c3 >= 0,   c1 + c2 <= pi

with all coordinates in radians. The chamber is a tetrahedron; its named
vertices are O = (0,0,0) (identity class), A1 = (pi,0,0) (also the identity
class), A2 = (pi/2,pi/2,0) and A3 = (pi/2,pi/2,pi/2) (SWAP class), and the
midpoint L = (pi/2,0,0) of O-A1 is the CNOT class. The polyhedron of
perfect entanglers sits between the planes c1 + c2 = pi/2, c1 - c2 = pi/2
and c2 + c3 = pi/2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import rng

__all__ = [
    "CHAMBER_TOL",
    "EdgeId",
    "WeylPoint",
    "canonical_gate",
    "edge_point",
    "edge_tags",
    "in_weyl_chamber",
    "mirror",
    "random_chamber_points",
]

# slack applied to every chamber inequality
CHAMBER_TOL = 1e-12

_HALF_PI = math.pi / 2


@dataclass(frozen=True)
class WeylPoint:
    """Chamber coordinates (c1, c2, c3), radians."""

    c1: float
    c2: float
    c3: float

    def __post_init__(self):
        for v in (self.c1, self.c2, self.c3):
            if not math.isfinite(v):
                raise ValueError(f"coordinates must be finite, got {v!r}")

    def __iter__(self):
        yield self.c1
        yield self.c2
        yield self.c3

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.c1, self.c2, self.c3)


def in_weyl_chamber(p: WeylPoint, tol: float = CHAMBER_TOL) -> bool:
    """True when c1 >= c2 >= c3 >= 0 and c1 + c2 <= pi, each up to tol."""
    return (
        p.c1 >= p.c2 - tol
        and p.c2 >= p.c3 - tol
        and p.c3 >= -tol
        and p.c1 + p.c2 <= math.pi + tol
    )


def mirror(p: WeylPoint) -> WeylPoint:
    """Image of a point under c1 -> pi - c1, re-sorted descending.

    The mirrored point labels the same gate up to single-qubit
    operations, so |g1|, g2 and the entangling power are unchanged.
    Accepts any ordered point with pi >= c1 >= c2 >= c3 >= 0; for a
    chamber point the result is again a chamber point.
    """
    # ordering only: the fold is defined for c1 up to pi, including
    # points that fail the c1 + c2 <= pi chamber cut
    tol = 1e-12
    ordered = (
        math.pi + tol >= p.c1
        and p.c1 + tol >= p.c2
        and p.c2 + tol >= p.c3
        and p.c3 >= -tol
    )
    if not ordered:
        raise ValueError(f"mirror expects pi >= c1 >= c2 >= c3 >= 0, got {p}")
    vals = sorted((math.pi - p.c1, p.c2, p.c3), reverse=True)
    return WeylPoint(*vals)


def canonical_gate(p: WeylPoint) -> np.ndarray:
    """Canonical 4x4 unitary of the local-equivalence class at p.

    The matrix equals exp(-i/2 (c1 XX + c2 YY + c3 ZZ)) in the
    computational basis |00>, |01>, |10>, |11>:

        [ e^{-ic3/2} c-   0               0              -i e^{-ic3/2} s- ]
        [ 0               e^{ic3/2} c+   -i e^{ic3/2} s+  0               ]
        [ 0              -i e^{ic3/2} s+  e^{ic3/2} c+    0               ]
        [-i e^{-ic3/2} s- 0               0               e^{-ic3/2} c-   ]

    with c± = cos((c1 ± c2)/2) and s± = sin((c1 ± c2)/2).
    """
    c1, c2, c3 = p
    cm = math.cos((c1 - c2) / 2)
    sm = math.sin((c1 - c2) / 2)
    cp = math.cos((c1 + c2) / 2)
    sp = math.sin((c1 + c2) / 2)
    em = complex(math.cos(c3 / 2), -math.sin(c3 / 2))
    ep = em.conjugate()
    return np.array(
        [
            [em * cm, 0, 0, -1j * em * sm],
            [0, ep * cp, -1j * ep * sp, 0],
            [0, -1j * ep * sp, ep * cp, 0],
            [-1j * em * sm, 0, 0, em * cm],
        ],
        dtype=complex,
    )


class EdgeId(Enum):
    """Named straight segments of the chamber with constant or simple |g1|."""

    QP = "QP"
    MN = "MN"
    PN = "PN"
    LQ = "LQ"
    LN = "LN"
    A2P = "A2P"


_QUARTER_PI = math.pi / 4


def edge_point(edge: EdgeId, t: float) -> WeylPoint:
    """Point at parameter t in [0, 1] along a named segment.

    QP, MN and PN run along the faces where |g1| = 1/4 (entangling power
    exactly 1/6); LQ, LN and A2P cross the perfect-entangler boundary with
    |g1| = (1/4) sin^2(pi t / 2).
    """
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"edge parameter must lie in [0, 1], got {t}")
    th = t * _QUARTER_PI
    if edge is EdgeId.QP:
        return WeylPoint(_QUARTER_PI, _QUARTER_PI, th)
    if edge is EdgeId.MN:
        return WeylPoint(3 * _QUARTER_PI, _QUARTER_PI, th)
    if edge is EdgeId.PN:
        return WeylPoint(_QUARTER_PI + t * _HALF_PI, _QUARTER_PI, _QUARTER_PI)
    if edge is EdgeId.LQ:
        return WeylPoint(_HALF_PI - th, th, 0.0)
    if edge is EdgeId.LN:
        return WeylPoint(_HALF_PI + th, th, th)
    if edge is EdgeId.A2P:
        return WeylPoint(_HALF_PI - th, _HALF_PI - th, th)
    raise ValueError(f"unknown edge {edge!r}")


def edge_tags(p: WeylPoint, tol: float = 1e-9) -> set[str]:
    """EDGE_* labels for every named segment passing through p."""
    c1, c2, c3 = p
    tags = set()
    if abs(c1 - _QUARTER_PI) <= tol and abs(c2 - _QUARTER_PI) <= tol and -tol <= c3 <= _QUARTER_PI + tol:
        tags.add("EDGE_QP")
    if abs(c1 - 3 * _QUARTER_PI) <= tol and abs(c2 - _QUARTER_PI) <= tol and -tol <= c3 <= _QUARTER_PI + tol:
        tags.add("EDGE_MN")
    if abs(c2 - _QUARTER_PI) <= tol and abs(c3 - _QUARTER_PI) <= tol and _QUARTER_PI - tol <= c1 <= 3 * _QUARTER_PI + tol:
        tags.add("EDGE_PN")
    if abs(c3) <= tol and abs(c1 + c2 - _HALF_PI) <= tol and _QUARTER_PI - tol <= c1 <= _HALF_PI + tol:
        tags.add("EDGE_LQ")
    if abs(c2 - c3) <= tol and abs(c1 - _HALF_PI - c2) <= tol and -tol <= c2 <= _QUARTER_PI + tol:
        tags.add("EDGE_LN")
    if abs(c1 - c2) <= tol and abs(c1 + c3 - _HALF_PI) <= tol and -tol <= c3 <= _QUARTER_PI + tol:
        tags.add("EDGE_A2P")
    return tags


def random_chamber_points(seed: int, count: int) -> list[WeylPoint]:
    """Deterministic uniform sample of chamber points.

    Draws (c1, c2, c3) uniformly from [0, pi] x [0, pi/2] x [0, pi/2]
    using the documented stream for ``seed`` (three uniforms per attempt,
    consumed in index order) and keeps points inside the chamber.
    """
    points: list[WeylPoint] = []
    start = 0
    while len(points) < count:
        us = rng.uniform_stream(seed, start, 3 * 128)
        start += 3 * 128
        for k in range(128):
            u1, u2, u3 = us[3 * k : 3 * k + 3]
            p = WeylPoint(math.pi * u1, _HALF_PI * u2, _HALF_PI * u3)
            if in_weyl_chamber(p):
                points.append(p)
                if len(points) == count:
                    break
    return points
