"""Correlation operators for the Bell and qutrit state families.

Two operators are built here:

* the 4x4 CHSH combination Q(x)S + R(x)S + R(x)T - Q(x)T of the standard
  detector observables, whose Bell-state expectations reach +-2*sqrt2;
* the 9x9 qutrit analogue, constructed from its projector resolution over
  the nine entangled states (never from a hard-coded matrix; the published
  literal ships only as a frozen JSON reference that the construction is
  checked against).

Both admit two exact decompositions: over state projectors and over the
tensor-product generator basis.  The projector coefficients are obtained by
projection a_i = <psi_i|C|psi_i> after explicitly checking that the basis
diagonalizes the operator, which turns a silent assumption into a tested
precondition.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from importlib import resources
from typing import Sequence

from .errors import (
    DimensionMismatchError,
    NotDiagonalizedByBasisError,
    NotHermitianError,
)
from .exactnum import ExactComplex, ExactScalar, SQRT2, TWO_SQRT2, ZERO
from .generators import Group, hs_project, pauli
from .linalg import Matrix, Mode, StateVector, gram_matrix, kron, outer
from .states import LabeledState, bell_states, qutrit_states


@dataclass(frozen=True)
class DetectorSetting:
    """The four 2x2 Hermitian observables entering the CHSH combination."""

    q: Matrix
    r: Matrix
    s: Matrix
    t: Matrix

    def __post_init__(self) -> None:
        for name, obs in (("q", self.q), ("r", self.r), ("s", self.s), ("t", self.t)):
            if (obs.rows, obs.cols) != (2, 2):
                raise DimensionMismatchError(f"observable {name} must be 2x2")
            if not obs.is_hermitian():
                raise NotHermitianError(f"observable {name} must be Hermitian")


def default_detector_setting() -> DetectorSetting:
    """Q = s3, S = -(s3+s1)/sqrt2, R = s1, T = (s3-s1)/sqrt2."""
    inv_sqrt2 = SQRT2.invert()
    return DetectorSetting(
        q=pauli(3),
        r=pauli(1),
        s=(pauli(3) + pauli(1)).scale(-inv_sqrt2),
        t=(pauli(3) - pauli(1)).scale(inv_sqrt2),
    )


@dataclass(frozen=True)
class CorrelationOperator:
    matrix: Matrix
    group: Group

    def __post_init__(self) -> None:
        if not self.matrix.is_hermitian():
            raise NotHermitianError("correlation operator must be Hermitian")


def chsh_operator(setting: DetectorSetting | None = None) -> CorrelationOperator:
    """Q(x)S + R(x)S + R(x)T - Q(x)T as an exact 4x4 operator."""
    canonical = setting is None
    if setting is None:
        setting = default_detector_setting()
    m = (
        kron(setting.q, setting.s)
        + kron(setting.r, setting.s)
        + kron(setting.r, setting.t)
        - kron(setting.q, setting.t)
    )
    op = CorrelationOperator(m, Group.SU2)
    if canonical:
        _assert_real_symmetric_traceless(op)
    return op


# Projector weights of the canonical operators over their state families.
CHSH_PROJECTOR_WEIGHTS: dict[str, ExactScalar] = {
    "phi+": -TWO_SQRT2,
    "psi+": ZERO,
    "psi-": TWO_SQRT2,
    "phi-": ZERO,
}
QUTRIT_PROJECTOR_WEIGHTS: dict[str, ExactScalar] = {
    "psi00": TWO_SQRT2,
    "psi21+": ZERO,
    "psi21-": -TWO_SQRT2,
    "psi11": SQRT2,
    "psi20+": ZERO,
    "psi20-": -TWO_SQRT2,
    "psi10+": ZERO,
    "psi10-": TWO_SQRT2,
    "psi22": -SQRT2,
}


@lru_cache(maxsize=None)
def qutrit_operator() -> CorrelationOperator:
    """The 9x9 correlation operator, built from its projector resolution."""
    m = Matrix.zeros(9, 9, Mode.EXACT)
    for state in qutrit_states():
        weight = QUTRIT_PROJECTOR_WEIGHTS[state.label]
        if weight:
            m = m + outer(state.vector, state.vector).scale(weight)
    op = CorrelationOperator(m, Group.SU3)
    _assert_real_symmetric_traceless(op)
    return op


def _assert_real_symmetric_traceless(op: CorrelationOperator) -> None:
    m = op.matrix
    assert m == m.transpose()
    assert all(not x.im for row in m.entries for x in row)
    assert m.trace() == ExactComplex()


@lru_cache(maxsize=None)
def _reference_matrix(filename: str) -> Matrix:
    payload = resources.files("qutritbell.data").joinpath(filename).read_text()
    return Matrix.from_json(json.loads(payload))


def reference_qutrit_matrix() -> Matrix:
    """The published 9x9 literal, shipped as a frozen exact-JSON fixture.

    Used only to cross-check :func:`qutrit_operator`; it is never the
    construction source.
    """
    return _reference_matrix("qutrit_correlation_reference.json")


def reference_chsh_matrix() -> Matrix:
    """The published 4x4 literal, frozen the same way."""
    return _reference_matrix("chsh_correlation_reference.json")


def expectation(op: CorrelationOperator, s: StateVector) -> ExactScalar:
    """Exact <s|C|s>; real because C is Hermitian (checked, not assumed)."""
    if s.dim != op.matrix.rows:
        raise DimensionMismatchError(
            f"state dim {s.dim} vs operator dim {op.matrix.rows}"
        )
    return s.inner(op.matrix.apply(s)).real_part()


@dataclass(frozen=True)
class ProjectorDecomposition:
    """Weights a_i with C = sum_i a_i |psi_i><psi_i| (exact)."""

    coefficients: dict[str, ExactScalar]


def solve_projector_coefficients(
    op: CorrelationOperator, basis: Sequence[LabeledState]
) -> ProjectorDecomposition:
    """Solve C = sum_i a_i |psi_i><psi_i| over an orthonormal basis.

    Because the basis is orthonormal and required to diagonalize C, each
    weight is the exact diagonal element a_i = <psi_i|C|psi_i>.  Every
    off-diagonal <psi_i|C|psi_j> is checked to vanish; a nonzero one means
    the basis is wrong for this operator and raises
    :class:`NotDiagonalizedByBasisError`.
    """
    dim = op.matrix.rows
    if len(basis) != dim:
        raise NotDiagonalizedByBasisError(
            f"basis has {len(basis)} states, operator needs {dim}"
        )
    vectors = [state.vector for state in basis]
    if gram_matrix(vectors) != Matrix.identity(dim, Mode.EXACT):
        raise NotDiagonalizedByBasisError("basis is not orthonormal")
    images = [op.matrix.apply(v) for v in vectors]
    coeffs: dict[str, ExactScalar] = {}
    for i, state in enumerate(basis):
        for j in range(dim):
            if i == j:
                continue
            off = vectors[i].inner(images[j])
            if off:
                raise NotDiagonalizedByBasisError(
                    f"<{basis[i].label}|C|{basis[j].label}> = {off} != 0"
                )
        coeffs[state.label] = vectors[i].inner(images[i]).real_part()
    reconstruction = Matrix.zeros(dim, dim, Mode.EXACT)
    for state in basis:
        w = coeffs[state.label]
        if w:
            reconstruction = reconstruction + outer(state.vector, state.vector).scale(w)
    assert reconstruction == op.matrix
    return ProjectorDecomposition(coeffs)


class BoundClass(Enum):
    TWO_SQRT2 = "2√2"
    SQRT2 = "√2"
    ZERO = "0"

    @property
    def bound(self) -> ExactScalar:
        return {"2√2": TWO_SQRT2, "√2": SQRT2, "0": ZERO}[self.value]


_CLASS_ORDER = (BoundClass.ZERO, BoundClass.SQRT2, BoundClass.TWO_SQRT2)


@dataclass(frozen=True)
class BoundEntry:
    label: str
    expectation: ExactScalar
    bound_class: BoundClass
    saturated: bool


@dataclass(frozen=True)
class BoundReport:
    entries: tuple[BoundEntry, ...]

    def by_class(self, cls: BoundClass) -> tuple[str, ...]:
        return tuple(e.label for e in self.entries if e.bound_class is cls)


def classify_bounds(
    op: CorrelationOperator, states: Sequence[LabeledState]
) -> BoundReport:
    """Assign each state the tightest of the 0 / sqrt2 / 2*sqrt2 tiers that
    exactly bounds |<C>|, flagging saturation (exact equality)."""
    entries = []
    for state in states:
        value = expectation(op, state.vector)
        magnitude = abs(value)
        for cls in _CLASS_ORDER:
            if (magnitude - cls.bound).sign() <= 0:
                entries.append(
                    BoundEntry(state.label, value, cls, magnitude == cls.bound)
                )
                break
        else:
            raise ValueError(
                f"|<C>| = {magnitude} exceeds the 2*sqrt2 tier for {state.label}"
            )
    return BoundReport(tuple(entries))


def generator_decomposition(
    op: CorrelationOperator,
) -> tuple[tuple[ExactComplex, ...], ...]:
    """Exact tensor-product generator coefficients of the operator."""
    return hs_project(op.matrix, op.group)


def basis_for(group: Group) -> tuple[LabeledState, ...]:
    return bell_states() if group is Group.SU2 else qutrit_states()


def canonical_operator(group: Group) -> CorrelationOperator:
    return chsh_operator() if group is Group.SU2 else qutrit_operator()
