"""Dense complex operators attached to ordered collections of two-level sites.

Conventions used throughout the package:

* A site is any hashable label (the tree module uses digit tuples).
* Leg order is big-endian: the first site in the list is the most
  significant qubit, i.e. the basis index of ``|b_0 b_1 ... b_{m-1}>`` is
  ``sum(b_i * 2**(m-1-i))``.
* ``normalized_trace`` divides by the full dimension, ``normalized_partial_trace``
  divides by ``2**(#traced sites)``, so the identity always maps to 1 / identity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

import numpy as np

from .errors import HermiticityError, SiteError

Site = Hashable

#: default relative tolerance for hermiticity / positivity predicates
DEFAULT_TOL = 1e-10


def opnorm(m: np.ndarray) -> float:
    """Spectral norm (largest singular value)."""
    return float(np.linalg.norm(np.asarray(m), 2))


@dataclass(frozen=True)
class SiteOperator:
    """A dense complex matrix acting on an ordered list of two-level sites."""

    sites: tuple[Site, ...]
    entries: np.ndarray = field(repr=False)

    def __post_init__(self):
        sites = tuple(self.sites)
        if len(set(sites)) != len(sites):
            raise SiteError(f"duplicate sites in {sites}")
        entries = np.asarray(self.entries, dtype=complex)
        dim = 2 ** len(sites)
        if entries.shape != (dim, dim):
            raise SiteError(
                f"matrix shape {entries.shape} does not match 2^{len(sites)} sites"
            )
        object.__setattr__(self, "sites", sites)
        object.__setattr__(self, "entries", entries)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @property
    def n_sites(self) -> int:
        return len(self.sites)

    def adjoint(self) -> "SiteOperator":
        return SiteOperator(self.sites, self.entries.conj().T)

    def is_hermitian(self, tol: float = DEFAULT_TOL) -> bool:
        scale = max(opnorm(self.entries), 1.0)
        return opnorm(self.entries - self.entries.conj().T) <= tol * scale

    def is_positive(self, tol: float = DEFAULT_TOL) -> bool:
        """All eigenvalues >= -tol * ||M|| (requires hermiticity first)."""
        if not self.is_hermitian(tol):
            return False
        w = np.linalg.eigvalsh(0.5 * (self.entries + self.entries.conj().T))
        scale = max(opnorm(self.entries), 1.0)
        return bool(w.min() >= -tol * scale)

    def __matmul__(self, other: "SiteOperator") -> "SiteOperator":
        if self.sites != other.sites:
            raise SiteError("operands must share the same site list; embed first")
        return SiteOperator(self.sites, self.entries @ other.entries)

    def __add__(self, other: "SiteOperator") -> "SiteOperator":
        if self.sites != other.sites:
            raise SiteError("operands must share the same site list; embed first")
        return SiteOperator(self.sites, self.entries + other.entries)

    def __sub__(self, other: "SiteOperator") -> "SiteOperator":
        if self.sites != other.sites:
            raise SiteError("operands must share the same site list; embed first")
        return SiteOperator(self.sites, self.entries - other.entries)

    def __mul__(self, scalar: complex) -> "SiteOperator":
        return SiteOperator(self.sites, self.entries * scalar)

    __rmul__ = __mul__


def identity(sites: Iterable[Site]) -> SiteOperator:
    sites = tuple(sites)
    return SiteOperator(sites, np.eye(2 ** len(sites), dtype=complex))


def tensor(a: SiteOperator, b: SiteOperator) -> SiteOperator:
    """Tensor product on the concatenated site list (a's sites first)."""
    overlap = set(a.sites) & set(b.sites)
    if overlap:
        raise SiteError(f"tensor factors share sites {overlap}")
    return SiteOperator(a.sites + b.sites, np.kron(a.entries, b.entries))


def permute_sites(a: SiteOperator, new_order: Sequence[Site]) -> SiteOperator:
    """Reorder tensor legs; new_order must be a permutation of a.sites."""
    new_order = tuple(new_order)
    if set(new_order) != set(a.sites) or len(new_order) != len(a.sites):
        raise SiteError(f"{new_order} is not a permutation of {a.sites}")
    if new_order == a.sites:
        return a
    n = a.n_sites
    pos = {s: i for i, s in enumerate(a.sites)}
    perm = [pos[s] for s in new_order]
    t = a.entries.reshape((2,) * (2 * n))
    t = t.transpose(perm + [n + p for p in perm])
    return SiteOperator(new_order, np.ascontiguousarray(t.reshape(2**n, 2**n)))


def embed(a: SiteOperator, target_sites: Sequence[Site]) -> SiteOperator:
    """Tensor identities onto missing sites and permute legs to target order."""
    target = tuple(target_sites)
    if len(set(target)) != len(target):
        raise SiteError(f"duplicate sites in target {target}")
    if not set(a.sites) <= set(target):
        raise SiteError(f"sites {set(a.sites) - set(target)} missing from target")
    missing = tuple(s for s in target if s not in set(a.sites))
    if missing:
        a = tensor(a, identity(missing))
    return permute_sites(a, target)


def normalized_trace(a: SiteOperator) -> complex:
    """Trace divided by the full dimension; identity maps to 1."""
    return complex(np.trace(a.entries)) / a.dim


def normalized_partial_trace(a: SiteOperator, keep: Sequence[Site]) -> SiteOperator:
    """Trace out sites(a) \\ keep, dividing by 2**(#traced sites).

    The result's site order is the order of ``keep`` as given.
    """
    keep = tuple(keep)
    if len(set(keep)) != len(keep):
        raise SiteError(f"duplicate sites in keep {keep}")
    if not set(keep) <= set(a.sites):
        raise SiteError(f"keep sites {set(keep) - set(a.sites)} not present")
    n = a.n_sites
    keep_set = set(keep)
    keep_idx = [i for i, s in enumerate(a.sites) if s in keep_set]
    n_traced = n - len(keep_idx)
    t = a.entries.reshape((2,) * (2 * n))
    # integer einsum labels: row leg i -> i; col leg i -> n+i if kept, i if traced
    in_labels = list(range(n)) + [n + i if i in set(keep_idx) else i for i in range(n)]
    out_labels = keep_idx + [n + i for i in keep_idx]
    reduced = np.einsum(t, in_labels, out_labels)
    d = 2 ** len(keep_idx)
    result = SiteOperator(
        tuple(a.sites[i] for i in keep_idx), reduced.reshape(d, d) / 2**n_traced
    )
    return permute_sites(result, keep)


def expm_hermitian(a: SiteOperator, scale: float = 1.0, tol: float = DEFAULT_TOL) -> SiteOperator:
    """exp(scale * a) for Hermitian a, via eigendecomposition.

    Result is re-hermitized, hence exactly self-adjoint and positive definite.
    """
    if not a.is_hermitian(tol):
        raise HermiticityError("expm_hermitian requires a Hermitian operator")
    h = 0.5 * (a.entries + a.entries.conj().T)
    w, v = np.linalg.eigh(h)
    m = (v * np.exp(scale * w)) @ v.conj().T
    return SiteOperator(a.sites, 0.5 * (m + m.conj().T))


def psd_sqrt(mat: np.ndarray, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Square root of a positive semidefinite Hermitian matrix (plain array).

    Eigenvalues below -tol*||m|| raise; small negative rounding is clipped to 0.
    """
    mat = np.asarray(mat, dtype=complex)
    scale = max(opnorm(mat), 1.0)
    if opnorm(mat - mat.conj().T) > tol * scale:
        raise HermiticityError("psd_sqrt requires a Hermitian matrix")
    w, v = np.linalg.eigh(0.5 * (mat + mat.conj().T))
    if w.min() < -tol * scale:
        raise ValueError(f"matrix is not positive semidefinite (min eig {w.min()})")
    s = (v * np.sqrt(np.clip(w, 0.0, None))) @ v.conj().T
    return 0.5 * (s + s.conj().T)
