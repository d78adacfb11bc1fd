"""Density matrices, reductions, purity and von Neumann entropy.

Purity and the reduced matrices stay on the exact path; entropy is the one
float quantity (its eigenvalue logs are irrational), computed with the
0 * log 0 := 0 convention since every octet state has a rank-deficient
reduction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatchError,
    ModeMismatchError,
    NegativeEigenvalueError,
    NotHermitianError,
    NotNormalizedError,
)
from .exactnum import ExactScalar
from .linalg import Matrix, Mode, StateVector, outer, partial_trace

PSD_TOL = 1e-10


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, unit-trace, positive semidefinite operator."""

    matrix: Matrix
    dims: tuple[int, ...]

    def __post_init__(self) -> None:
        m = self.matrix
        expected = 1
        for d in self.dims:
            expected *= d
        if not m.is_square or m.rows != expected:
            raise DimensionMismatchError(
                f"{m.rows}x{m.cols} matrix does not match dims {self.dims}"
            )
        if not m.is_hermitian():
            raise NotHermitianError("density matrix must be Hermitian")
        trace = m.trace()
        if m.mode is Mode.EXACT:
            if trace.real_part() != ExactScalar(1):
                raise NotNormalizedError(f"trace is {trace}, not 1")
        elif abs(trace - 1.0) > 1e-12:
            raise NotNormalizedError(f"trace is {trace}, not 1")
        w = np.linalg.eigvalsh(m.to_numpy())
        if w.min() < -PSD_TOL:
            raise NegativeEigenvalueError(f"eigenvalue {w.min()} below -{PSD_TOL}")

    @property
    def is_bipartite(self) -> bool:
        return len(self.dims) == 2


def density_of(s: StateVector, dims: tuple[int, ...] | None = None) -> DensityMatrix:
    """Projector |s><s| of a normalized state."""
    if not s.is_normalized():
        raise NotNormalizedError(f"state has squared norm {s.norm2()}")
    if dims is None:
        root = math.isqrt(s.dim)
        dims = (root, root) if root * root == s.dim and root > 1 else (s.dim,)
    return DensityMatrix(outer(s, s), dims)


def reduce(rho: DensityMatrix, keep: str) -> DensityMatrix:
    """Partial trace onto subsystem ``keep`` ("A" or "B")."""
    if not rho.is_bipartite:
        raise DimensionMismatchError("reduction needs a bipartite density matrix")
    reduced = partial_trace(rho.matrix, keep, rho.dims)  # type: ignore[arg-type]
    kept_dim = rho.dims[0] if keep == "A" else rho.dims[1]
    return DensityMatrix(reduced, (kept_dim,))


def purity(rho: DensityMatrix) -> ExactScalar:
    """Tr[rho^2], exact."""
    if rho.matrix.mode is not Mode.EXACT:
        raise ModeMismatchError("purity is an exact-path quantity")
    return (rho.matrix @ rho.matrix).trace().real_part()


def entropy(rho: DensityMatrix, base: float = 2.0) -> float:
    """Von Neumann entropy -sum w_i log_base(w_i) over float eigenvalues."""
    w = np.linalg.eigvalsh(rho.matrix.to_numpy())
    if w.min() < -PSD_TOL:
        raise NegativeEigenvalueError(f"eigenvalue {w.min()} below -{PSD_TOL}")
    total = 0.0
    for value in w:
        if value > 0.0:
            total -= value * math.log(value, base)
    return total


def eigenvalues_float(rho: DensityMatrix) -> tuple[float, ...]:
    """Float spectrum in descending order (for reports and Schmidt checks)."""
    w = np.linalg.eigvalsh(rho.matrix.to_numpy())
    return tuple(float(x) for x in sorted(w, reverse=True))
