"""Entangling power of two-qubit gates.

The entangling power of a gate u is the average linear entropy that u
generates when applied to uniformly random product states. Three
independent routes are provided:

  * closed form in chamber coordinates,
  * the affine map from |g1|:  e_p = (2/9)(1 - |g1|),
  * an exact operator average over two copies of the gate.

All routes return values in [0, 2/9]; the maximum 2/9 is attained exactly
by the special perfect entanglers (|g1| = 0), and gates in the identity or
SWAP class give 0.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import rng
from .canonical import WeylPoint
from .errors import ConsistencyError
from .linalg import SWAP, hs_inner, kron, partial_trace, require_unitary, transposition_13

__all__ = [
    "EP_MAX",
    "EpEstimate",
    "RouteAgreementReport",
    "ep_closed_form",
    "ep_from_g1_abs",
    "ep_monte_carlo",
    "ep_operator_exact",
    "linear_entropy",
    "verify_route_agreement",
]

EP_MAX = 2.0 / 9.0

_RANGE_TOL = 1e-9
# the two equivalent two-trace / single-trace operator expressions must agree
_OPERATOR_FORM_TOL = 1e-10
_TRACE_IMAG_TOL = 1e-9

_T13 = transposition_13()
_S2 = kron(SWAP, SWAP)
_R = _T13 + _S2.conj().T @ _T13 @ _S2

# samples per block; each block draws from its own substream so results do
# not depend on how blocks are assigned to workers
_BLOCK = 1024

# mean and standard error are snapped at 1e-12 to flush accumulated float
# noise, so non-entangling gates report exactly 0
_SNAP_DECIMALS = 12


def linear_entropy(psi) -> float:
    """Linear entropy 1 - tr(rho_A^2) of a normalized two-qubit pure state.

    Ranges over [0, 1/2]; 0 exactly for product states, 1/2 for maximally
    entangled ones. Symmetric in the choice of traced-out qubit.
    """
    rho = partial_trace(psi, "A")
    purity = float(np.sum(np.abs(rho) ** 2))
    return 1.0 - purity


def ep_from_g1_abs(g1_abs: float) -> float:
    """Entangling power from the invariant modulus: (2/9)(1 - |g1|)."""
    if not -_RANGE_TOL <= g1_abs <= 1.0 + _RANGE_TOL:
        raise ValueError(f"|g1| must lie in [0, 1], got {g1_abs!r}")
    return (2.0 / 9.0) * (1.0 - g1_abs)


def ep_closed_form(p: WeylPoint) -> float:
    """Entangling power of the canonical gate at a chamber point.

    (1/18)[3 - (cos 2c1 cos 2c2 + cos 2c2 cos 2c3 + cos 2c3 cos 2c1)]
    """
    c1, c2, c3 = p
    x1 = math.cos(2 * c1)
    x2 = math.cos(2 * c2)
    x3 = math.cos(2 * c3)
    return (3.0 - (x1 * x2 + x2 * x3 + x3 * x1)) / 18.0


def _real_trace(z: complex, what: str) -> float:
    if abs(z.imag) >= _TRACE_IMAG_TOL:
        raise ConsistencyError(
            f"{what} should be real, got imaginary residue {z.imag:.3e}"
        )
    return z.real


def ep_operator_exact(u) -> float:
    """Entangling power as an exact operator average over two gate copies.

    With A = u (x) u, T the qubit-1/qubit-3 transposition and
    S = SWAP (x) SWAP:

        e_p = 5/9 - (1/36) Re[ tr(A† T A T) + tr(A† S† T S A T) ]

    The same value is recomputed from the grouped single-trace expression
    5/9 - (1/36) tr(A† (T + S† T S) A T) and both must agree to 1e-10.
    """
    m4 = require_unitary(u)
    if m4.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {m4.shape}")
    a = kron(m4, m4)
    at = a @ _T13
    term1 = _real_trace(hs_inner(a, _T13 @ at), "tr(A† T A T)")
    term2 = _real_trace(hs_inner(a, _S2.conj().T @ _T13 @ _S2 @ at), "tr(A† S† T S A T)")
    value = 5.0 / 9.0 - (term1 + term2) / 36.0
    single = 5.0 / 9.0 - _real_trace(hs_inner(a, _R @ at), "tr(A† R A T)") / 36.0
    if abs(value - single) > _OPERATOR_FORM_TOL:
        raise ConsistencyError(
            f"operator forms disagree: {value!r} vs {single!r}"
        )
    return value


@dataclass(frozen=True)
class EpEstimate:
    """Monte-Carlo estimate of entangling power."""

    mean: float
    std_err: float
    n_samples: int
    seed: int


def _block_entropy_sums(u_t: np.ndarray, seed: int, block: int, count: int) -> tuple[float, float]:
    """Sum and sum of squares of linear entropies for one sample block.

    Sample s of block b consumes uniforms 8*(s mod BLOCK) .. +7 of the
    substream keyed by block_key(seed, b): four Box-Muller pairs giving
    the two complex amplitudes of each qubit's Haar-random state.
    """
    key = rng.block_key(seed, block)
    us = rng.uniform_stream(key, 0, 8 * count).reshape(count, 8)
    za0, za1 = rng.box_muller(us[:, 0], us[:, 1])
    za2, za3 = rng.box_muller(us[:, 2], us[:, 3])
    zb0, zb1 = rng.box_muller(us[:, 4], us[:, 5])
    zb2, zb3 = rng.box_muller(us[:, 6], us[:, 7])
    a = np.stack([za0 + 1j * za1, za2 + 1j * za3], axis=1)
    b = np.stack([zb0 + 1j * zb1, zb2 + 1j * zb3], axis=1)
    a /= np.linalg.norm(a, axis=1, keepdims=True)
    b /= np.linalg.norm(b, axis=1, keepdims=True)
    psi = np.einsum("ni,nj->nij", a, b).reshape(count, 4)
    out = psi @ u_t
    m = out.reshape(count, 2, 2)
    rho = m @ m.conj().swapaxes(1, 2)
    purity = np.sum(np.abs(rho) ** 2, axis=(1, 2))
    e = 1.0 - purity
    return float(np.sum(e)), float(np.sum(e * e))


def _snap(x: float) -> float:
    return float(np.round(x, _SNAP_DECIMALS) + 0.0)


def ep_monte_carlo(u, n_samples: int, seed: int) -> EpEstimate:
    """Estimate entangling power by sampling random product states.

    Applies u to products of independent Haar-random single-qubit states
    and averages the linear entropy of the output. The sample index space
    is split into fixed blocks of 1024; block b draws from the substream
    block_key(seed, b) (see the rng module), so the estimate is a pure
    function of (u, n_samples, seed) regardless of evaluation order.
    Per-block sums use numpy pairwise summation and are combined with
    exact (fsum) accumulation.
    """
    m4 = require_unitary(u)
    if m4.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {m4.shape}")
    if n_samples < 100:
        raise ValueError(f"n_samples must be at least 100, got {n_samples}")
    u_t = m4.T.copy()
    sums: list[float] = []
    sqs: list[float] = []
    done = 0
    block = 0
    while done < n_samples:
        count = min(_BLOCK, n_samples - done)
        s, s2 = _block_entropy_sums(u_t, seed, block, count)
        sums.append(s)
        sqs.append(s2)
        done += count
        block += 1
    total = math.fsum(sums)
    total2 = math.fsum(sqs)
    mean = total / n_samples
    var = max(0.0, total2 - n_samples * mean * mean) / (n_samples - 1)
    std_err = math.sqrt(var / n_samples)
    return EpEstimate(_snap(mean), _snap(std_err), n_samples, seed)


@dataclass(frozen=True)
class RouteAgreementReport:
    """Largest discrepancies between independent e_p and g2 routes."""

    n_points: int
    seed: int
    max_closed_vs_g1: float
    max_closed_vs_operator: float
    max_g2_forms: float
    violations: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.violations


def verify_route_agreement(n_points: int, seed: int) -> RouteAgreementReport:
    """Compare all e_p routes and both g2 forms on random chamber points."""
    from .canonical import canonical_gate, random_chamber_points
    from .invariants import g1_abs_closed, g2_closed, g2_closed_product_form

    points = random_chamber_points(seed, n_points)
    worst_g1 = 0.0
    worst_op = 0.0
    worst_g2 = 0.0
    violations: list[str] = []
    for p in points:
        closed = ep_closed_form(p)
        via_g1 = ep_from_g1_abs(g1_abs_closed(p))
        via_op = ep_operator_exact(canonical_gate(p))
        d_g1 = abs(closed - via_g1)
        d_op = abs(closed - via_op)
        d_g2 = abs(g2_closed(p) - g2_closed_product_form(p))
        worst_g1 = max(worst_g1, d_g1)
        worst_op = max(worst_op, d_op)
        worst_g2 = max(worst_g2, d_g2)
        if d_g1 > 1e-12:
            violations.append(f"closed vs |g1| route: {d_g1:.3e} at {p}")
        if d_op > 1e-10:
            violations.append(f"closed vs operator route: {d_op:.3e} at {p}")
        if d_g2 > 1e-12:
            violations.append(f"g2 forms: {d_g2:.3e} at {p}")
    return RouteAgreementReport(
        n_points=n_points,
        seed=seed,
        max_closed_vs_g1=worst_g1,
        max_closed_vs_operator=worst_op,
        max_g2_forms=worst_g2,
        violations=tuple(violations),
    )
