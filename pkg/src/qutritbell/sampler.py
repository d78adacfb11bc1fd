"""Seeded Monte Carlo estimation of correlation expectations.

The estimator mirrors the physical two-party protocol: each term of the
operator's tensor-product generator expansion is measured locally, i.e. both
observables are eigendecomposed on their own site, a joint outcome pair is
drawn from the Born distribution, and the product of the two eigenvalues is
averaged.  Degenerate eigenvalues are handled projector-style: the outcome
is the eigenvalue, with probability summed over its whole eigenspace.

Randomness comes from the Philox counter-based generator keyed by
(seed, term index), so results are bit-reproducible and independent of
execution order; shards derive their keys from seed XOR shard-number, which
lets shards run concurrently and still merge into one deterministic result.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .correlations import CorrelationOperator, generator_decomposition
from .errors import DimensionMismatchError, NotNormalizedError, ShotsZeroError
from .exactnum import ExactScalar
from .generators import generator_set
from .linalg import Matrix, StateVector

_MASK64 = (1 << 64) - 1
_DEGENERACY_DECIMALS = 10


@dataclass(frozen=True)
class MeasurementTerm:
    coefficient: ExactScalar
    obs_a: Matrix
    obs_b: Matrix


@dataclass(frozen=True)
class MeasurementPlan:
    """Local-measurement realization of a correlation operator."""

    terms: tuple[MeasurementTerm, ...]
    dims: tuple[int, int]


@dataclass(frozen=True)
class SampleResult:
    estimate: float
    stderr: float
    shots_per_term: int
    seed: int

    def to_json(self) -> dict:
        return {
            "estimate": self.estimate,
            "stderr": self.stderr,
            "shots_per_term": self.shots_per_term,
            "seed": self.seed,
        }


def plan_from_operator(op: CorrelationOperator) -> MeasurementPlan:
    """One term per nonzero generator-decomposition coefficient."""
    coeffs = generator_decomposition(op)
    gens = generator_set(op.group).elements
    d = op.group.site_dim
    terms = []
    for l, row in enumerate(coeffs):
        for m, c in enumerate(row):
            if c:
                terms.append(MeasurementTerm(c.real_part(), gens[l], gens[m]))
    plan = MeasurementPlan(tuple(terms), (d, d))
    assert _plan_reconstruction(plan, d) == op.matrix
    return plan


def _plan_reconstruction(plan: MeasurementPlan, d: int) -> Matrix:
    from .linalg import Mode, kron

    total = Matrix.zeros(d * d, d * d, Mode.EXACT)
    for term in plan.terms:
        total = total + kron(term.obs_a, term.obs_b).scale(term.coefficient)
    return total


def _eigensystem(obs: Matrix) -> tuple[np.ndarray, np.ndarray]:
    """Distinct (rounded) eigenvalues and the unitary of eigencolumns."""
    w, v = np.linalg.eigh(obs.to_numpy())
    return w, v


def _joint_distribution(
    term: MeasurementTerm, state: np.ndarray, dims: tuple[int, int]
) -> tuple[np.ndarray, np.ndarray]:
    """Outcome values (eigenvalue products) and their Born probabilities."""
    d_a, d_b = dims
    w_a, v_a = _eigensystem(term.obs_a)
    w_b, v_b = _eigensystem(term.obs_b)
    amp = v_a.conj().T @ state.reshape(d_a, d_b) @ v_b.conj()
    prob = np.abs(amp) ** 2
    # Merge eigenvector indices that share an eigenvalue (projector rule).
    ua, inv_a = np.unique(np.round(w_a, _DEGENERACY_DECIMALS), return_inverse=True)
    ub, inv_b = np.unique(np.round(w_b, _DEGENERACY_DECIMALS), return_inverse=True)
    grouped = np.zeros((ua.size, ub.size))
    for i in range(d_a):
        for j in range(d_b):
            grouped[inv_a[i], inv_b[j]] += prob[i, j]
    values = np.outer(ua, ub).ravel()
    probs = grouped.ravel()
    return values, probs


def _term_rng(seed: int, term_index: int) -> np.random.Generator:
    key = np.array([seed & _MASK64, term_index & _MASK64], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def estimate(
    plan: MeasurementPlan, s: StateVector, shots: int, seed: int
) -> SampleResult:
    """Sample every plan term ``shots`` times and combine.

    Deterministic: identical (plan, state, shots, seed) give a bit-identical
    result.  The standard error combines the per-term sample errors in
    quadrature with the plan coefficients.
    """
    if shots < 1:
        raise ShotsZeroError("shots must be >= 1")
    if not s.is_normalized():
        raise NotNormalizedError(f"state has squared norm {s.norm2()}")
    d_a, d_b = plan.dims
    if s.dim != d_a * d_b:
        raise DimensionMismatchError(f"state dim {s.dim}, plan expects {d_a * d_b}")
    state = s.to_numpy()
    total = 0.0
    variance = 0.0
    for index, term in enumerate(plan.terms):
        values, probs = _joint_distribution(term, state, plan.dims)
        cum = np.cumsum(probs)
        cum[-1] = 1.0
        rng = _term_rng(seed, index)
        draws = values[np.searchsorted(cum, rng.random(shots), side="right")]
        coeff = term.coefficient.to_float()
        total += coeff * float(draws.mean())
        if shots > 1:
            variance += coeff**2 * float(draws.var(ddof=1)) / shots
    return SampleResult(total, float(np.sqrt(variance)), shots, seed)


def merge_results(results: Sequence[SampleResult], seed: int) -> SampleResult:
    """Average shard results in the given (fixed) order."""
    if not results:
        raise ValueError("nothing to merge")
    n = len(results)
    est = sum(r.estimate for r in results) / n
    stderr = float(np.sqrt(sum(r.stderr**2 for r in results))) / n
    shots = sum(r.shots_per_term for r in results)
    return SampleResult(est, stderr, shots, seed)


def estimate_sharded(
    plan: MeasurementPlan,
    s: StateVector,
    shots_per_shard: int,
    seed: int,
    shards: int,
) -> SampleResult:
    """Split the work over ``shards`` independently seeded runs.

    Shard k uses seed XOR k, so the shards may be computed concurrently (or
    on different machines) and merged afterwards; the merged result is the
    same either way.
    """
    if shards < 1:
        raise ValueError("shards must be >= 1")
    results = [
        estimate(plan, s, shots_per_shard, seed ^ k) for k in range(1, shards + 1)
    ]
    return merge_results(results, seed)
