import random
from fractions import Fraction

import pytest

from qutritbell.errors import (
    DimensionMismatchError,
    NotNormalizedError,
    UnknownLabelError,
    ZeroMatrixError,
)
from qutritbell.exactnum import ExactComplex, ExactScalar
from qutritbell.exactrand import random_unit_state
from qutritbell.generators import gellmann, pauli
from qutritbell.linalg import Matrix, Mode, StateVector, gram_matrix
from qutritbell.states import (
    AmplitudeSet,
    BELL_LABELS,
    QUTRIT_LABELS,
    SwapSymmetry,
    bell_state,
    bell_states,
    from_su3_basis,
    purity_check,
    qutrit_state,
    qutrit_states,
    swap_class,
    to_su3_basis,
    vectorize,
)

H = ExactScalar(0, Fraction(1, 2))       # 1/sqrt2
T = ExactScalar(0, 0, Fraction(1, 3))    # 1/sqrt3
S = ExactScalar(0, 0, 0, Fraction(1, 6))  # 1/sqrt6


def ket(dim, entries):
    amps = [ExactComplex()] * dim
    for idx, value in entries.items():
        amps[idx] = ExactComplex(value)
    return StateVector.from_amplitudes(amps)


class TestBellStates:
    def test_literal_vectors(self):
        assert bell_state("phi+").vector == ket(4, {0: H, 3: H})
        assert bell_state("psi+").vector == ket(4, {1: H, 2: H})
        assert bell_state("psi-").vector == ket(4, {1: H, 2: -H})
        assert bell_state("phi-").vector == ket(4, {0: H, 3: -H})

    def test_orthonormal_basis(self):
        assert gram_matrix([s.vector for s in bell_states()]) == Matrix.identity(4)

    def test_unknown_label(self):
        with pytest.raises(UnknownLabelError):
            bell_state("phi0")


class TestQutritStates:
    def test_literal_vectors(self):
        assert qutrit_state("psi00").vector == ket(9, {0: T, 4: T, 8: T})
        assert qutrit_state("psi21+").vector == ket(9, {7: H, 5: H})
        assert qutrit_state("psi21-").vector == ket(9, {7: H, 5: -H})
        assert qutrit_state("psi11").vector == ket(9, {4: -H, 8: H})
        assert qutrit_state("psi20+").vector == ket(9, {6: H, 2: H})
        assert qutrit_state("psi20-").vector == ket(9, {6: H, 2: -H})
        assert qutrit_state("psi10+").vector == ket(9, {3: H, 1: H})
        assert qutrit_state("psi10-").vector == ket(9, {3: H, 1: -H})
        assert qutrit_state("psi22").vector == ket(9, {0: -2 * S, 4: S, 8: S})

    def test_orthonormal_basis(self):
        assert gram_matrix([s.vector for s in qutrit_states()]) == Matrix.identity(9)

    def test_aliases(self):
        assert qutrit_state("psi12-") is qutrit_state("psi21-")
        assert qutrit_state("psi02-") is qutrit_state("psi20-")
        assert qutrit_state("psi01+") is qutrit_state("psi10+")

    def test_generator_index_follows_label_order(self):
        for i, label in enumerate(QUTRIT_LABELS):
            assert qutrit_state(label).generator_index == i

    def test_all_normalized(self):
        for s in qutrit_states() + bell_states():
            assert s.vector.is_normalized()


class TestVectorize:
    def test_pauli_promotion_reproduces_bell_states(self):
        assert vectorize(pauli(0)) == bell_state("phi+").vector
        assert vectorize(pauli(1)) == bell_state("psi+").vector
        assert vectorize(pauli(2).scale(ExactComplex(0, 1))) == bell_state("psi-").vector
        assert vectorize(pauli(3)) == bell_state("phi-").vector

    def test_identity_promotion_gives_singlet(self):
        assert vectorize(gellmann(0)) == qutrit_state("psi00").vector

    def test_promoted_pairing_is_a_convention(self):
        # Direct vectorization of the first off-diagonal generator gives the
        # (0,1)-flavor state, not the (2,1)-flavor state filed under it.
        promoted = vectorize(gellmann(1))
        assert promoted == ket(9, {1: H, 3: H})
        assert promoted != qutrit_state("psi21+").vector

    def test_zero_matrix(self):
        with pytest.raises(ZeroMatrixError):
            vectorize(Matrix.zeros(2, 2))

    def test_result_normalized(self):
        m = Matrix.from_rows([[1, 2], [0, 1]])
        assert vectorize(m).is_normalized()


class TestSwapClass:
    def test_published_table(self):
        expected = {
            "psi00": SwapSymmetry.SYMMETRIC,
            "psi21+": SwapSymmetry.SYMMETRIC,
            "psi21-": SwapSymmetry.ANTISYMMETRIC,
            "psi11": SwapSymmetry.ANTISYMMETRIC,
            "psi20+": SwapSymmetry.SYMMETRIC,
            "psi20-": SwapSymmetry.ANTISYMMETRIC,
            "psi10+": SwapSymmetry.SYMMETRIC,
            "psi10-": SwapSymmetry.ANTISYMMETRIC,
            "psi22": SwapSymmetry.NEITHER,
        }
        for label, symmetry in expected.items():
            assert qutrit_state(label).swap_symmetry is symmetry

    def test_class_counts(self):
        classes = [s.swap_symmetry for s in qutrit_states()]
        assert classes.count(SwapSymmetry.SYMMETRIC) == 4
        assert classes.count(SwapSymmetry.ANTISYMMETRIC) == 4
        assert classes.count(SwapSymmetry.NEITHER) == 1

    def test_bell_classes(self):
        assert bell_state("phi+").swap_symmetry is SwapSymmetry.SYMMETRIC
        assert bell_state("psi+").swap_symmetry is SwapSymmetry.SYMMETRIC
        assert bell_state("phi-").swap_symmetry is SwapSymmetry.ANTISYMMETRIC
        assert bell_state("psi-").swap_symmetry is SwapSymmetry.ANTISYMMETRIC

    def test_product_kets(self):
        assert swap_class(ket(9, {0: ExactScalar(1)}), (3, 3)) is SwapSymmetry.SYMMETRIC
        assert swap_class(ket(9, {1: ExactScalar(1)}), (3, 3)) is SwapSymmetry.NEITHER

    def test_dimension_errors(self):
        with pytest.raises(DimensionMismatchError):
            swap_class(ket(9, {0: ExactScalar(1)}), (2, 4))
        with pytest.raises(DimensionMismatchError):
            swap_class(ket(6, {0: ExactScalar(1)}), (2, 3))


class TestBasisChange:
    def test_e00_projection(self):
        c = AmplitudeSet.computational([1, 0, 0, 0, 0, 0, 0, 0, 0])
        b = to_su3_basis(c)
        assert b.values[0] == ExactComplex(T)            # 1/sqrt3 on psi00
        assert b.values[8] == ExactComplex(-2 * S)       # -2/sqrt6 on psi22
        assert all(not b.values[k] for k in range(1, 8))

    def test_basis_state_maps_to_unit_coordinate(self):
        c = AmplitudeSet.computational(qutrit_state("psi10-").vector.amplitudes)
        b = to_su3_basis(c)
        index = QUTRIT_LABELS.index("psi10-")
        assert b.values[index] == ExactComplex(1)
        assert all(not v for k, v in enumerate(b.values) if k != index)

    def test_round_trip_random_states(self):
        rng = random.Random(71)
        for _ in range(30):
            state = random_unit_state(9, rng)
            c = AmplitudeSet.computational(state.amplitudes)
            assert from_su3_basis(to_su3_basis(c)).values == c.values

    def test_output_exactly_normalized(self):
        rng = random.Random(73)
        state = random_unit_state(9, rng)
        b = to_su3_basis(AmplitudeSet.computational(state.amplitudes))
        total = ExactScalar()
        for v in b.values:
            total = total + v.abs2()
        assert total == ExactScalar(1)

    def test_inverse_of_e00_image(self):
        b_values = [ExactComplex()] * 9
        b_values[0] = ExactComplex(T)
        b_values[8] = ExactComplex(-2 * S)
        c = from_su3_basis(AmplitudeSet.su3(b_values))
        assert c.values[0] == ExactComplex(1)
        assert all(not c.values[k] for k in range(1, 9))

    def test_not_normalized_rejected(self):
        with pytest.raises(NotNormalizedError):
            AmplitudeSet.computational([1, 1, 0, 0, 0, 0, 0, 0, 0])

    def test_wrong_basis_rejected(self):
        c = AmplitudeSet.computational([1, 0, 0, 0, 0, 0, 0, 0, 0])
        with pytest.raises(ValueError):
            from_su3_basis(c)

    def test_json_round_trip(self):
        c = AmplitudeSet.computational([0, 1, 0, 0, 0, 0, 0, 0, 0])
        assert AmplitudeSet.from_json(c.to_json()).values == c.values


class TestPurityCheck:
    def test_entangled_states_are_pure(self):
        assert purity_check(qutrit_state("psi00").vector)
        for label in BELL_LABELS:
            assert purity_check(bell_state(label).vector)

    def test_unnormalized_vector_fails(self):
        doubled = StateVector.from_amplitudes(
            [ExactComplex(2), ExactComplex(), ExactComplex(), ExactComplex()]
        )
        assert not purity_check(doubled)
