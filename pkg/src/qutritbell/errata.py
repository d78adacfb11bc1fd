"""Documented discrepancies between published values and the exact oracles.

Each erratum pairs a transcription of what the published source prints with
the value this package computes from first principles (partial traces,
orthonormal projections, Hilbert-Schmidt coefficients).  The oracle side is
always computed live, never copied, so a regression in the oracles would
surface here as a changed report rather than a silently wrong table.

Exactness is the whole point of these reports; they have no float mode.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .correlations import (
    BoundClass,
    classify_bounds,
    generator_decomposition,
    qutrit_operator,
)
from .density import density_of, purity, reduce
from .exactnum import ExactComplex, ExactScalar
from .linalg import Matrix, Mode
from .states import QUTRIT_LABELS, qutrit_state, qutrit_states


@dataclass(frozen=True)
class Erratum:
    key: str
    summary: str
    published: str
    oracle: str
    details: tuple[str, ...] = field(default_factory=tuple)

    def to_json(self) -> dict:
        return {
            "key": self.key,
            "summary": self.summary,
            "published": self.published,
            "oracle": self.oracle,
            "details": list(self.details),
        }


def _fmt_matrix(m: Matrix) -> str:
    rows = ["[" + ", ".join(str(x) for x in row) + "]" for row in m.entries]
    return "[" + "; ".join(rows) + "]"


# -- 1: reduced density matrices ------------------------------------------

# Published reduced matrices for the two-term states, printed as traceless
# off-diagonal ket-bra combinations (transcribed verbatim).
_PUBLISHED_REDUCTIONS = {
    "psi10+": "(|0><1| + |1><0|)/2",
    "psi10-": "(|0><1| + |1><0|)/2",
    "psi20+": "(|0><2| + |2><0|)/2",
    "psi20-": "(|0><2| + |2><0|)/2",
    "psi21+": "(|1><2| + |2><1|)/2",
    "psi21-": "(|1><2| + |2><1|)/2",
    "psi11": "(|1><2| + |2><1|)/2",
}


def reduced_density_erratum() -> Erratum:
    details = []
    for label, published in _PUBLISHED_REDUCTIONS.items():
        rho = reduce(density_of(qutrit_state(label).vector, (3, 3)), "A")
        details.append(
            f"{label}: published {published} (trace 0, not a density matrix); "
            f"partial trace gives {_fmt_matrix(rho.matrix)} "
            f"(trace 1, purity {purity(rho)})"
        )
    return Erratum(
        key="reduced-density-offdiagonal",
        summary=(
            "Reduced density matrices of the two-term entangled states are "
            "printed as pure off-diagonal operators with trace zero; the "
            "partial-trace oracle yields the diagonal matrices whose "
            "entropies match the quoted values."
        ),
        published="off-diagonal ket-bra forms, e.g. (|0><1| + |1><0|)/2",
        oracle="diagonal reductions, e.g. diag(1/2, 1/2, 0)",
        details=tuple(details),
    )


# -- 2: basis-change closed forms ------------------------------------------

_HALF_SQRT2 = ExactScalar(0, Fraction(1, 2))
_THIRD_SQRT3 = ExactScalar(0, 0, Fraction(1, 3))
_SIXTH_SQRT6 = ExactScalar(0, 0, 0, Fraction(1, 6))
_THIRD_SQRT6 = ExactScalar(0, 0, 0, Fraction(1, 3))

# Published closed-form coefficients b_k = sum_ij U'[k][ij] c_ij, transcribed
# row by row; columns are flat computational indices 3i + j.
_PUBLISHED_BASIS_ROWS: dict[str, dict[int, ExactScalar]] = {
    "psi00": {0: _THIRD_SQRT3, 8: -_THIRD_SQRT6},
    "psi21+": {1: _HALF_SQRT2, 2: _HALF_SQRT2},
    "psi21-": {1: _HALF_SQRT2, 2: -_HALF_SQRT2},
    "psi11": {6: _THIRD_SQRT3, 2: -_HALF_SQRT2, 8: _SIXTH_SQRT6},
    "psi20+": {6: _HALF_SQRT2, 7: _HALF_SQRT2},
    "psi20-": {6: _HALF_SQRT2, 7: -_HALF_SQRT2},
    "psi10+": {4: _HALF_SQRT2, 5: _HALF_SQRT2},
    "psi10-": {4: _HALF_SQRT2, 5: -_HALF_SQRT2},
    "psi22": {0: _THIRD_SQRT3, 3: _HALF_SQRT2, 8: _SIXTH_SQRT6},
}


def published_basis_change_matrix() -> Matrix:
    """The printed closed-form coefficient table as a 9x9 exact matrix."""
    rows = []
    for label in QUTRIT_LABELS:
        coeffs = _PUBLISHED_BASIS_ROWS[label]
        rows.append([coeffs.get(j, 0) for j in range(9)])
    return Matrix.from_rows(rows, Mode.EXACT)


def oracle_basis_change_matrix() -> Matrix:
    """Projection coefficients <psi_k| applied to the computational basis."""
    rows = []
    for state in qutrit_states():
        rows.append([amp.conjugate() for amp in state.vector.amplitudes])
    return Matrix.from_rows(rows, Mode.EXACT)


def basis_change_erratum() -> Erratum:
    published = published_basis_change_matrix()
    oracle = oracle_basis_change_matrix()
    details = []
    for k, label in enumerate(QUTRIT_LABELS):
        for j in range(9):
            p = published.entry(k, j)
            o = oracle.entry(k, j)
            if p != o:
                c_label = f"c{j // 3}{j % 3}"
                details.append(
                    f"b[{label}] coefficient of {c_label}: published {p}, "
                    f"projection oracle {o}"
                )
    return Erratum(
        key="basis-change-closed-forms",
        summary=(
            "The printed closed-form basis-change coefficients disagree with "
            "orthonormal projection onto the nine entangled states (several "
            "terms are permuted or rescaled); projection is authoritative."
        ),
        published="closed-form table, e.g. b_00 = (c00 - sqrt2 c22)/sqrt3",
        oracle="b_k = <psi_k|Psi>, e.g. b_00 = (c00 + c11 + c22)/sqrt3",
        details=tuple(details),
    )


# -- 3: conflicting tensor-basis coefficient --------------------------------

# The identity (x) diagonal-generator-3 coefficient is printed twice with
# different values.
_PUBLISHED_COEFF_MAIN = ExactScalar(0, Fraction(-1, 6))       # -1/(3 sqrt2)
_PUBLISHED_COEFF_VARIANT = ExactScalar(0, 0, Fraction(-1, 6))  # -1/(2 sqrt3)


def tensor_coefficient_erratum() -> Erratum:
    coeffs = generator_decomposition(qutrit_operator())
    oracle = coeffs[0][3].real_part()
    details = []
    for name, value in (
        ("main decomposition", _PUBLISHED_COEFF_MAIN),
        ("restated decomposition", _PUBLISHED_COEFF_VARIANT),
    ):
        verdict = "matches" if value == oracle else "DISAGREES with"
        details.append(f"{name}: prints {value} ({value.to_float():+.10f}); {verdict} the oracle")
    assert coeffs[0][3] == coeffs[3][0]
    return Erratum(
        key="tensor-coefficient-conflict",
        summary=(
            "The (identity, lambda_3) tensor coefficient of the 9x9 operator "
            "is printed twice with different values; Hilbert-Schmidt "
            "projection decides between them."
        ),
        published="-1/(3 sqrt2) in one place, -1/(2 sqrt3) in the other",
        oracle=f"{oracle} ({oracle.to_float():+.10f})",
        details=tuple(details),
    )


# -- 4: duplicated label in the bound-tier listing ---------------------------

_PUBLISHED_TIER_LIST = ("psi00", "psi12-", "psi20-", "psi20-")


def bound_tier_erratum() -> Erratum:
    report = classify_bounds(qutrit_operator(), qutrit_states())
    oracle_members = report.by_class(BoundClass.TWO_SQRT2)
    return Erratum(
        key="bound-tier-duplicate-label",
        summary=(
            "The published membership list of the 2*sqrt2 tier repeats one "
            "state label and omits another; the exact expectation table "
            "fixes the set."
        ),
        published="{" + ", ".join(_PUBLISHED_TIER_LIST) + "} (one label twice)",
        oracle="{" + ", ".join(oracle_members) + "}",
        details=(
            "expectations: "
            + ", ".join(
                f"{e.label}: {e.expectation}" for e in report.entries
            ),
        ),
    )


# -- 5: generator product identity normalization -----------------------------


def product_identity_erratum() -> Erratum:
    from .generators import product_expand

    s11, _ = product_expand(1, 1)
    _, c12 = product_expand(1, 2)
    return Erratum(
        key="generator-product-identity",
        summary=(
            "The quoted product identity for the traceless generators omits "
            "the 2/3 on the identity coefficient and the imaginary unit on "
            "the antisymmetric term."
        ),
        published="g_l g_m = delta_lm + d_lmn g_n + f_lmp g_p",
        oracle="g_l g_m = (2/3) delta_lm I + (d_lmn + i f_lmn) g_n",
        details=(
            f"l=m=1: identity coefficient is {s11}, not 1",
            f"l=1, m=2: coefficient of g_3 is {c12[2]}, not {c12[2].im}",
        ),
    )


def build_errata() -> tuple[Erratum, ...]:
    return (
        reduced_density_erratum(),
        basis_change_erratum(),
        tensor_coefficient_erratum(),
        bound_tier_erratum(),
        product_identity_erratum(),
    )
