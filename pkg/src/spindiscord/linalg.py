"""Dense Hermitian linear algebra and entropy primitives.

All entropies are in nats. The trace norm carries no 1/2 factor, so two
orthogonal pure states are at distance 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionError, NotAStateError, ValidationError

HERMITIAN_ATOL = 1e-12
TRACE_ATOL = 1e-12
PSD_ATOL = 1e-10


def _as_complex_matrix(m) -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {a.shape}")
    return a


@dataclass(frozen=True)
class DensityMatrix:
    """Dense Hermitian unit-trace PSD matrix with a subsystem factorization.

    Validated on construction: Hermitian and unit trace within 1e-12
    elementwise/absolute, eigenvalues >= -1e-10.
    """

    entries: np.ndarray
    subsystem_dims: tuple[int, ...]
    _eigenvalues: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        entries = _as_complex_matrix(self.entries)
        dims = tuple(int(d) for d in self.subsystem_dims)
        if not dims or any(d < 1 for d in dims):
            raise ValidationError(f"subsystem dims must be positive, got {dims}")
        if math.prod(dims) != entries.shape[0]:
            raise DimensionError(
                f"subsystem dims {dims} do not factor dimension {entries.shape[0]}"
            )
        if not np.allclose(entries, entries.conj().T, rtol=0.0, atol=HERMITIAN_ATOL):
            raise NotAStateError("matrix is not Hermitian within 1e-12")
        tr = entries.trace()
        if abs(tr - 1.0) > TRACE_ATOL:
            raise NotAStateError(f"trace is {tr}, not 1 within 1e-12")
        entries = 0.5 * (entries + entries.conj().T)
        entries.flags.writeable = False
        evals = np.linalg.eigvalsh(entries)
        if evals[0] < -PSD_ATOL:
            raise NotAStateError(f"negative eigenvalue {evals[0]} below -1e-10")
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "subsystem_dims", dims)
        object.__setattr__(self, "_eigenvalues", evals)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @property
    def n_subsystems(self) -> int:
        return len(self.subsystem_dims)

    def eigenvalues(self) -> np.ndarray:
        """Spectrum, ascending (cached from validation)."""
        return self._eigenvalues


def from_state_vector(psi, subsystem_dims: Sequence[int]) -> DensityMatrix:
    """Projector onto a normalized pure state."""
    v = np.asarray(psi, dtype=complex).ravel()
    n = np.linalg.norm(v)
    if n == 0:
        raise ValidationError("zero state vector")
    v = v / n
    return DensityMatrix(np.outer(v, v.conj()), tuple(subsystem_dims))


def maximally_mixed(subsystem_dims: Sequence[int]) -> DensityMatrix:
    dims = tuple(int(d) for d in subsystem_dims)
    d = math.prod(dims)
    return DensityMatrix(np.eye(d, dtype=complex) / d, dims)


def product_state(a: DensityMatrix, b: DensityMatrix) -> DensityMatrix:
    return DensityMatrix(
        np.kron(a.entries, b.entries), a.subsystem_dims + b.subsystem_dims
    )


def eigvalsh(m, atol: float = HERMITIAN_ATOL) -> np.ndarray:
    """Eigenvalues of the Hermitian part (M + M^dag)/2, ascending.

    Rejects non-square input and matrices that are not Hermitian within
    ``atol`` elementwise.
    """
    a = _as_complex_matrix(m)
    if not np.allclose(a, a.conj().T, rtol=0.0, atol=atol):
        raise ValidationError("matrix is not Hermitian within tolerance")
    return np.linalg.eigvalsh(0.5 * (a + a.conj().T))


def entropy_from_eigenvalues(evals: np.ndarray) -> float:
    """-sum lam ln lam with the 0 ln 0 = 0 convention.

    Eigenvalues in [-1e-10, 0) are treated as exact zeros; anything below
    -1e-10 is rejected as not a state.
    """
    evals = np.asarray(evals, dtype=float)
    if evals.size and evals.min() < -PSD_ATOL:
        raise NotAStateError(f"negative eigenvalue {evals.min()} below -1e-10")
    pos = evals[evals > 0.0]
    if pos.size == 0:
        return 0.0
    return float(-np.sum(pos * np.log(pos)))


def von_neumann_entropy(rho) -> float:
    """S(rho) = -tr rho ln rho in nats."""
    if isinstance(rho, DensityMatrix):
        return entropy_from_eigenvalues(rho.eigenvalues())
    return entropy_from_eigenvalues(eigvalsh(rho))


def _resolve_keep(n: int, keep: Iterable[int], *, proper: bool = True) -> tuple[int, ...]:
    idx = tuple(sorted({int(k) for k in keep}))
    if any(k < 0 or k >= n for k in idx):
        raise ValidationError(f"subsystem indices {idx} out of range for {n} subsystems")
    if not idx:
        raise ValidationError("subsystem index set must be nonempty")
    if proper and len(idx) == n:
        raise ValidationError("subsystem index set must be a proper subset")
    return idx


def partial_trace(rho: DensityMatrix, keep: Iterable[int]) -> DensityMatrix:
    """Trace out every subsystem not in ``keep``; kept order is preserved."""
    dims = rho.subsystem_dims
    n = len(dims)
    idx = _resolve_keep(n, keep)
    tensor = rho.entries.reshape(dims + dims)
    traced = [k for k in range(n) if k not in idx]
    for offset, k in enumerate(traced):
        ax = k - offset  # earlier traces shrink the index list
        nleft = tensor.ndim // 2
        tensor = np.trace(tensor, axis1=ax, axis2=ax + nleft)
    kept_dims = tuple(dims[k] for k in idx)
    d = math.prod(kept_dims)
    return DensityMatrix(tensor.reshape(d, d), kept_dims)


def permute_subsystems(rho: DensityMatrix, order: Sequence[int]) -> DensityMatrix:
    """Reorder tensor factors so that new position k holds old subsystem order[k]."""
    dims = rho.subsystem_dims
    n = len(dims)
    order = tuple(int(k) for k in order)
    if sorted(order) != list(range(n)):
        raise ValidationError(f"{order} is not a permutation of 0..{n - 1}")
    tensor = rho.entries.reshape(dims + dims)
    perm = order + tuple(k + n for k in order)
    new_dims = tuple(dims[k] for k in order)
    d = math.prod(new_dims)
    return DensityMatrix(tensor.transpose(perm).reshape(d, d), new_dims)


def trace_distance(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    """||rho - sigma||_1 = sum |eigenvalues|, with no 1/2 factor."""
    if rho.subsystem_dims != sigma.subsystem_dims:
        raise DimensionError(
            f"dimension mismatch: {rho.subsystem_dims} vs {sigma.subsystem_dims}"
        )
    diff = rho.entries - sigma.entries
    return float(np.abs(np.linalg.eigvalsh(diff)).sum())


def mutual_information(rho: DensityMatrix, part_a: Iterable[int]) -> float:
    """I = S(rho_A) + S(rho_B) - S(rho) for the bipartition (A, complement)."""
    n = rho.n_subsystems
    idx_a = _resolve_keep(n, part_a)
    idx_b = tuple(k for k in range(n) if k not in idx_a)
    s_a = von_neumann_entropy(partial_trace(rho, idx_a))
    s_b = von_neumann_entropy(partial_trace(rho, idx_b))
    s_ab = von_neumann_entropy(rho)
    mi = s_a + s_b - s_ab
    if mi < -1e-9:
        raise NotAStateError(f"mutual information {mi} below numeric floor")
    return max(mi, 0.0)
