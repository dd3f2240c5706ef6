"""XY-model operator factory: Pauli matrices, the two-site exchange
Hamiltonian and the positive edge operator K = exp(beta * H).

H acts on span{|01>, |10>} as the swap and annihilates |00>, |11>, so its
powers collapse (H^{2m} = H^2, H^{2m-1} = H) and exp(beta*H) has the closed
form  I + sinh(beta) * H + (cosh(beta) - 1) * H^2  with eigenvalues
{1, 1, e^beta, e^{-beta}}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError, SiteError
from .linalg import SiteOperator, expm_hermitian, opnorm
from .tree import TreeCoordinate

PAULI = {
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
}

IDENTITY_2 = np.eye(2, dtype=complex)


def pauli(axis: str, site: TreeCoordinate = ()) -> SiteOperator:
    """Pauli spin operator at a single site (default: the root)."""
    try:
        mat = PAULI[axis]
    except KeyError:
        raise ParameterError(f"axis must be one of x, y, z; got {axis!r}") from None
    return SiteOperator((site,), mat)


def h_edge(u: TreeCoordinate, v: TreeCoordinate) -> SiteOperator:
    """Exchange Hamiltonian (sx sx + sy sy)/2 on the ordered site pair (u, v)."""
    if u == v:
        raise SiteError("edge endpoints must differ")
    mat = 0.5 * (np.kron(PAULI["x"], PAULI["x"]) + np.kron(PAULI["y"], PAULI["y"]))
    return SiteOperator((u, v), mat)


def k_edge_matrix(beta: float) -> np.ndarray:
    """Closed-form 4x4 edge operator: I + sinh(b)*H + (cosh(b)-1)*H^2."""
    if beta <= 0:
        raise ParameterError(f"beta must be positive, got {beta}")
    h = 0.5 * (np.kron(PAULI["x"], PAULI["x"]) + np.kron(PAULI["y"], PAULI["y"]))
    return (
        np.eye(4, dtype=complex)
        + math.sinh(beta) * h
        + (math.cosh(beta) - 1.0) * (h @ h)
    )


@dataclass(frozen=True)
class EdgeOperator:
    """exp(beta * H) on one tree edge; self-adjoint, positive definite."""

    edge: tuple[TreeCoordinate, TreeCoordinate]
    beta: float
    matrix: SiteOperator


def k_edge(u: TreeCoordinate, v: TreeCoordinate, beta: float) -> EdgeOperator:
    if u == v:
        raise SiteError("edge endpoints must differ")
    return EdgeOperator((u, v), beta, SiteOperator((u, v), k_edge_matrix(beta)))


def verify_power_identities(m_max: int, beta_grid=(0.1, 0.5, 1.0, 2.0, 3.0)) -> dict:
    """Check H^{2m} = H^2 and H^{2m-1} = H up to m_max, and the closed-form
    edge operator against the eigendecomposition exponential on beta_grid.

    Returns a report with the maximal residuals; passes at 1e-12.
    """
    if m_max < 1:
        raise ParameterError(f"m_max must be >= 1, got {m_max}")
    h = h_edge((), (1,))
    h2 = h @ h
    power = h
    max_even = 0.0
    max_odd = opnorm((power - h).entries)
    for m in range(1, m_max + 1):
        power = power @ h  # H^{2m}
        max_even = max(max_even, opnorm((power - h2).entries))
        power = power @ h  # H^{2m+1}
        if m < m_max:
            max_odd = max(max_odd, opnorm((power - h).entries))
    max_closed = 0.0
    for beta in beta_grid:
        closed = k_edge_matrix(beta)
        via_expm = expm_hermitian(h, beta).entries
        max_closed = max(max_closed, opnorm(closed - via_expm))
    tol = 1e-12
    return {
        "m_max": m_max,
        "max_even_residual": max_even,
        "max_odd_residual": max_odd,
        "max_closed_form_residual": max_closed,
        "tol": tol,
        "passed": max(max_even, max_odd, max_closed) <= tol,
    }
