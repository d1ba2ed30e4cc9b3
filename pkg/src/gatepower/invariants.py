"""Local invariants (g1, g2) of two-qubit gates.

A pair of gates is equivalent up to single-qubit operations exactly when
their invariants match. Both a closed form in chamber coordinates and a
direct matrix route are provided; they agree on canonical gates.

Closed forms at a chamber point (c1, c2, c3):

    |g1| = cos^2 c1 cos^2 c2 cos^2 c3 + sin^2 c1 sin^2 c2 sin^2 c3
    g2   = cos 2c1 + cos 2c2 + cos 2c3

The matrix route conjugates the gate into the magic (Bell) basis, where
local gates become real orthogonal: with u_m = Q† u Q and m = u_mᵀ u_m,

    g1 = tr^2(m) / (16 det u)
    g2 = (tr^2(m) - tr(m^2)) / (4 det u)
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .canonical import WeylPoint
from .errors import ConsistencyError
from .linalg import INGEST_UNITARY_TOL, det4, require_unitary

__all__ = [
    "G2_IMAG_TOL",
    "MAGIC_BASIS",
    "LocalInvariants",
    "g1_abs_closed",
    "g1_complex_closed",
    "g1_conjugate_check",
    "g2_closed",
    "g2_closed_product_form",
    "invariants_at_point",
    "invariants_from_matrix",
]

# Imaginary residue on g2 below this is attributed to floating point;
# above it the input is flagged as inconsistent instead of truncated.
G2_IMAG_TOL = 1e-9

_RANGE_TOL = 1e-9

#: Columns are the magic-basis (Bell-like) states expressed in the
#: computational basis.
MAGIC_BASIS = (1.0 / math.sqrt(2)) * np.array(
    [
        [1, 0, 0, 1j],
        [0, 1j, 1, 0],
        [0, 1j, -1, 0],
        [1, 0, 0, -1j],
    ],
    dtype=complex,
)


@dataclass(frozen=True)
class LocalInvariants:
    """Invariant pair of a local-equivalence class.

    g1 is complex with |g1| <= 1; g2 is real in [-3, 3].
    """

    g1: complex
    g2: float

    def __post_init__(self):
        if not (math.isfinite(self.g1.real) and math.isfinite(self.g1.imag)):
            raise ValueError(f"g1 must be finite, got {self.g1!r}")
        if not math.isfinite(self.g2):
            raise ValueError(f"g2 must be finite, got {self.g2!r}")
        if abs(self.g1) > 1.0 + _RANGE_TOL:
            raise ValueError(f"|g1| = {abs(self.g1)!r} exceeds 1")
        if abs(self.g2) > 3.0 + _RANGE_TOL:
            raise ValueError(f"g2 = {self.g2!r} lies outside [-3, 3]")


def g1_abs_closed(p: WeylPoint) -> float:
    """|g1| at a chamber point."""
    c1, c2, c3 = p
    a = (math.cos(c1) * math.cos(c2) * math.cos(c3)) ** 2
    b = (math.sin(c1) * math.sin(c2) * math.sin(c3)) ** 2
    return a + b


def g1_complex_closed(p: WeylPoint) -> complex:
    """Complex g1 at a chamber point.

    The real part is cos^2 c1 cos^2 c2 cos^2 c3 - sin^2 c1 sin^2 c2 sin^2 c3
    and the imaginary part -(1/4) sin 2c1 sin 2c2 sin 2c3, matching the
    magic-basis matrix route on canonical gates. The modulus identity
    (a - b)^2 + 4ab = (a + b)^2 makes |g1_complex_closed| equal
    g1_abs_closed exactly.
    """
    c1, c2, c3 = p
    a = (math.cos(c1) * math.cos(c2) * math.cos(c3)) ** 2
    b = (math.sin(c1) * math.sin(c2) * math.sin(c3)) ** 2
    imag = -0.25 * math.sin(2 * c1) * math.sin(2 * c2) * math.sin(2 * c3)
    return complex(a - b, imag)


def g2_closed(p: WeylPoint) -> float:
    """g2 at a chamber point, as a sum of cosines."""
    c1, c2, c3 = p
    return math.cos(2 * c1) + math.cos(2 * c2) + math.cos(2 * c3)


def g2_closed_product_form(p: WeylPoint) -> float:
    """g2 via the algebraically equivalent product form.

    4 cos^2 c1 cos^2 c2 cos^2 c3 - 4 sin^2 c1 sin^2 c2 sin^2 c3
    - cos 2c1 cos 2c2 cos 2c3. Kept separate so tests can compare the
    two expressions rather than assume the identity.
    """
    c1, c2, c3 = p
    a = (math.cos(c1) * math.cos(c2) * math.cos(c3)) ** 2
    b = (math.sin(c1) * math.sin(c2) * math.sin(c3)) ** 2
    return 4 * a - 4 * b - math.cos(2 * c1) * math.cos(2 * c2) * math.cos(2 * c3)


def invariants_at_point(p: WeylPoint) -> LocalInvariants:
    """Invariants of the local class at a chamber point, via closed forms."""
    return LocalInvariants(g1_complex_closed(p), g2_closed(p))


def _real_checked(z: complex, tol: float, what: str) -> float:
    if abs(z.imag) >= tol:
        raise ConsistencyError(
            f"{what} should be real, got imaginary residue {z.imag:.3e} (>= {tol:.1e})"
        )
    return z.real


def invariants_from_matrix(u) -> LocalInvariants:
    """Invariants computed directly from a 4x4 unitary.

    Normalizing by the determinant makes the result insensitive to global
    phase, so inputs need not have unit determinant.
    """
    m4 = require_unitary(u, INGEST_UNITARY_TOL)
    if m4.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {m4.shape}")
    um = MAGIC_BASIS.conj().T @ m4 @ MAGIC_BASIS
    m = um.T @ um
    det = det4(um)
    tr = complex(np.trace(m))
    g1 = tr * tr / (16.0 * det)
    g2 = _real_checked((tr * tr - complex(np.trace(m @ m))) / (4.0 * det), G2_IMAG_TOL, "g2")
    return LocalInvariants(g1, g2)


def g1_conjugate_check(u, tol: float = 1e-9) -> bool:
    """True when g1 of the inverse gate equals the conjugate of g1(u)."""
    m4 = require_unitary(u, INGEST_UNITARY_TOL)
    g_fwd = invariants_from_matrix(m4).g1
    g_inv = invariants_from_matrix(m4.conj().T).g1
    return abs(g_inv - g_fwd.conjugate()) <= tol
