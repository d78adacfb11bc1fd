"""The 4 Bell states, the 9 entangled qutrit states, and their machinery.

The qutrit family is defined by its explicit ket expansion (the same one
recovered by diagonalizing the 9x9 correlation operator); the generator each
state is conventionally paired with is carried only as metadata, because the
pairing is a labeling convention rather than a computation: vectorizing
lambda_1 directly gives (|01> + |10>)/sqrt2, yet the state filed under
lambda_1 is (|21> + |12>)/sqrt2.

Swap classification follows the sign a state picks up when two of the
single-site basis flavors occurring in it are exchanged on both subsystems
at once (|xy> -> |tau(x) tau(y)|).  Under that rule the nine qutrit states
fall into 4 symmetric, 4 antisymmetric and one unclassifiable state, the
singlet-partner built on the hypercharge generator.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .errors import (
    DimensionMismatchError,
    ModeMismatchError,
    NotNormalizedError,
    UnknownLabelError,
    ZeroMatrixError,
)
from .exactnum import ExactComplex, ExactScalar
from .generators import Group, gellmann, pauli
from .linalg import Matrix, Mode, StateVector, outer

_HALF_SQRT2 = ExactScalar(0, Fraction(1, 2))       # 1/sqrt2
_THIRD_SQRT3 = ExactScalar(0, 0, Fraction(1, 3))   # 1/sqrt3
_SIXTH_SQRT6 = ExactScalar(0, 0, 0, Fraction(1, 6))  # 1/sqrt6


class SwapSymmetry(Enum):
    SYMMETRIC = "symmetric"
    ANTISYMMETRIC = "antisymmetric"
    NEITHER = "neither"


class AmplitudeBasis(Enum):
    COMPUTATIONAL = "computational"
    SU3 = "su3"


@dataclass(frozen=True)
class LabeledState:
    label: str
    group: Group
    vector: StateVector
    generator_index: int
    swap_symmetry: SwapSymmetry


BELL_LABELS = ("phi+", "psi+", "psi-", "phi-")
QUTRIT_LABELS = (
    "psi00",
    "psi21+",
    "psi21-",
    "psi11",
    "psi20+",
    "psi20-",
    "psi10+",
    "psi10-",
    "psi22",
)

# Occasional transposed-subscript spellings map onto the canonical labels.
_QUTRIT_ALIASES = {
    "psi12+": "psi21+",
    "psi12-": "psi21-",
    "psi02+": "psi20+",
    "psi02-": "psi20-",
    "psi01+": "psi10+",
    "psi01-": "psi10-",
}

# Ket expansions: {flat index i*d + j: amplitude}.
_BELL_KETS = {
    "phi+": {0: _HALF_SQRT2, 3: _HALF_SQRT2},
    "psi+": {1: _HALF_SQRT2, 2: _HALF_SQRT2},
    "psi-": {1: _HALF_SQRT2, 2: -_HALF_SQRT2},
    "phi-": {0: _HALF_SQRT2, 3: -_HALF_SQRT2},
}
_QUTRIT_KETS = {
    "psi00": {0: _THIRD_SQRT3, 4: _THIRD_SQRT3, 8: _THIRD_SQRT3},
    "psi21+": {7: _HALF_SQRT2, 5: _HALF_SQRT2},
    "psi21-": {7: _HALF_SQRT2, 5: -_HALF_SQRT2},
    "psi11": {4: -_HALF_SQRT2, 8: _HALF_SQRT2},
    "psi20+": {6: _HALF_SQRT2, 2: _HALF_SQRT2},
    "psi20-": {6: _HALF_SQRT2, 2: -_HALF_SQRT2},
    "psi10+": {3: _HALF_SQRT2, 1: _HALF_SQRT2},
    "psi10-": {3: _HALF_SQRT2, 1: -_HALF_SQRT2},
    "psi22": {0: _SIXTH_SQRT6 * -2, 4: _SIXTH_SQRT6, 8: _SIXTH_SQRT6},
}


def normalize_label(label: str, group: Group) -> str:
    if group is Group.SU2:
        if label in BELL_LABELS:
            return label
    else:
        label = _QUTRIT_ALIASES.get(label, label)
        if label in QUTRIT_LABELS:
            return label
    raise UnknownLabelError(f"unknown {group.value} state label {label!r}")


def _ket_vector(kets: dict[int, ExactScalar], dim: int) -> StateVector:
    amps: list[ExactComplex] = [ExactComplex()] * dim
    for idx, coeff in kets.items():
        amps[idx] = ExactComplex(coeff)
    return StateVector.from_amplitudes(amps, Mode.EXACT)


def bell_state(label: str) -> LabeledState:
    return _bell_state(normalize_label(label, Group.SU2))


@lru_cache(maxsize=None)
def _bell_state(label: str) -> LabeledState:
    vec = _ket_vector(_BELL_KETS[label], 4)
    return LabeledState(
        label=label,
        group=Group.SU2,
        vector=vec,
        generator_index=BELL_LABELS.index(label),
        swap_symmetry=swap_class(vec, (2, 2)),
    )


def qutrit_state(label: str) -> LabeledState:
    return _qutrit_state(normalize_label(label, Group.SU3))


@lru_cache(maxsize=None)
def _qutrit_state(label: str) -> LabeledState:
    vec = _ket_vector(_QUTRIT_KETS[label], 9)
    return LabeledState(
        label=label,
        group=Group.SU3,
        vector=vec,
        generator_index=QUTRIT_LABELS.index(label),
        swap_symmetry=swap_class(vec, (3, 3)),
    )


def bell_states() -> tuple[LabeledState, ...]:
    return tuple(bell_state(lbl) for lbl in BELL_LABELS)


def qutrit_states() -> tuple[LabeledState, ...]:
    return tuple(qutrit_state(lbl) for lbl in QUTRIT_LABELS)


def states_of(group: Group) -> tuple[LabeledState, ...]:
    return bell_states() if group is Group.SU2 else qutrit_states()


def promoted_generator(group: Group, i: int) -> Matrix:
    """The matrix actually promoted for slot i: the generator itself, with
    the purely imaginary ones premultiplied by i so the result is real."""
    g = generator_matrix(group, i)
    imaginary_slots = (2,) if group is Group.SU2 else (2, 5, 7)
    if i in imaginary_slots:
        return g.scale(ExactComplex(0, 1))
    return g


def generator_matrix(group: Group, i: int) -> Matrix:
    return pauli(i) if group is Group.SU2 else gellmann(i)


def vectorize(m: Matrix) -> StateVector:
    """Promote a d x d matrix to the unit ket sum_ij M_ij |ij>."""
    if m.mode is not Mode.EXACT:
        raise ModeMismatchError("vectorize expects an exact matrix")
    flat = [x for row in m.entries for x in row]
    if not any(flat):
        raise ZeroMatrixError("cannot vectorize the zero matrix")
    return StateVector.from_amplitudes(flat, Mode.EXACT).normalized()


def swap_class(s: StateVector, dims: tuple[int, int]) -> SwapSymmetry:
    """Sign of the state under pairwise exchange of its occurring flavors.

    For every pair (x, y) of single-site basis labels present in the state's
    support, apply |ij> -> |tau(i) tau(j)> with tau the transposition (x y).
    All exchanges fixing the state gives SYMMETRIC, all flipping its sign
    ANTISYMMETRIC, anything else NEITHER.
    """
    d_a, d_b = dims
    if d_a * d_b != s.dim:
        raise DimensionMismatchError(f"dims {dims} do not factor dimension {s.dim}")
    if d_a != d_b:
        raise DimensionMismatchError("swap classification needs equal subsystem dimensions")
    d = d_a
    flavors = sorted(
        {
            part
            for idx, amp in enumerate(s.amplitudes)
            if amp
            for part in (idx // d, idx % d)
        }
    )
    zero = ExactComplex() if s.mode is Mode.EXACT else 0j
    signs = set()
    for x, y in combinations(flavors, 2):
        tau = list(range(d))
        tau[x], tau[y] = y, x
        amps: list[object] = [zero] * s.dim
        for idx, amp in enumerate(s.amplitudes):
            amps[tau[idx // d] * d + tau[idx % d]] = amp
        swapped = StateVector(s.dim, tuple(amps), s.mode)
        if swapped == s:
            signs.add(1)
        elif swapped == -s:
            signs.add(-1)
        else:
            return SwapSymmetry.NEITHER
        if len(signs) > 1:
            return SwapSymmetry.NEITHER
    if signs == {-1}:
        return SwapSymmetry.ANTISYMMETRIC
    return SwapSymmetry.SYMMETRIC


@dataclass(frozen=True)
class AmplitudeSet:
    """Nine exact amplitudes of a two-qutrit state in one of the two bases.

    Computational order: c_00, c_01, c_02, c_10, ..., c_22 (flat |ij>).
    SU(3) order follows ``QUTRIT_LABELS``.
    """

    basis: AmplitudeBasis
    values: tuple[ExactComplex, ...]

    def __post_init__(self) -> None:
        if len(self.values) != 9:
            raise DimensionMismatchError("amplitude set needs exactly 9 entries")
        total = ExactScalar()
        for v in self.values:
            total = total + v.abs2()
        if total != ExactScalar(1):
            raise NotNormalizedError(f"squared amplitudes sum to {total}, not 1")

    @classmethod
    def computational(cls, values) -> AmplitudeSet:
        return cls(AmplitudeBasis.COMPUTATIONAL, tuple(ExactComplex.coerce(v) for v in values))

    @classmethod
    def su3(cls, values) -> AmplitudeSet:
        return cls(AmplitudeBasis.SU3, tuple(ExactComplex.coerce(v) for v in values))

    def to_state(self) -> StateVector:
        if self.basis is not AmplitudeBasis.COMPUTATIONAL:
            return from_su3_basis(self).to_state()
        return StateVector.from_amplitudes(self.values, Mode.EXACT)

    def to_json(self) -> dict:
        return {"basis": self.basis.value, "values": [v.to_json() for v in self.values]}

    @classmethod
    def from_json(cls, obj: dict) -> AmplitudeSet:
        return cls(
            AmplitudeBasis(obj["basis"]),
            tuple(ExactComplex.from_json(v) for v in obj["values"]),
        )


def to_su3_basis(c: AmplitudeSet) -> AmplitudeSet:
    """Project computational amplitudes onto the nine entangled states.

    The coefficients are the exact inner products <psi_k|Psi>; because the
    nine states are an orthonormal basis this is the unique expansion and
    the output is exactly normalized.
    """
    if c.basis is not AmplitudeBasis.COMPUTATIONAL:
        raise ValueError("input must be in the computational basis")
    out = []
    for state in qutrit_states():
        b = ExactComplex()
        for amp, comp in zip(state.vector.amplitudes, c.values):
            if amp and comp:
                b = b + amp.conjugate() * comp
        out.append(b)
    return AmplitudeSet(AmplitudeBasis.SU3, tuple(out))


def from_su3_basis(b: AmplitudeSet) -> AmplitudeSet:
    """Expand SU(3)-basis amplitudes back into computational ones."""
    if b.basis is not AmplitudeBasis.SU3:
        raise ValueError("input must be in the su3 basis")
    acc = [ExactComplex()] * 9
    for coeff, state in zip(b.values, qutrit_states()):
        if not coeff:
            continue
        for idx, amp in enumerate(state.vector.amplitudes):
            if amp:
                acc[idx] = acc[idx] + coeff * amp
    return AmplitudeSet(AmplitudeBasis.COMPUTATIONAL, tuple(acc))


def purity_check(s: StateVector) -> bool:
    """True iff |s><s| is an exact projector (the pure-state condition)."""
    rho = outer(s, s)
    return (rho @ rho) == rho
