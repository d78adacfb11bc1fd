import math
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import pytest

from qutritbell.correlations import (
    CorrelationOperator,
    chsh_operator,
    expectation,
    qutrit_operator,
)
from qutritbell.errors import (
    DimensionMismatchError,
    NotNormalizedError,
    ShotsZeroError,
)
from qutritbell.exactnum import ExactComplex, ExactScalar, SQRT2
from qutritbell.generators import Group, pauli
from qutritbell.linalg import Matrix, StateVector
from qutritbell.sampler import (
    estimate,
    estimate_sharded,
    merge_results,
    plan_from_operator,
)
from qutritbell.states import bell_state, qutrit_state

TWO_SQRT2_F = 2.8284271247461903


class TestPlan:
    def test_chsh_plan_terms(self):
        plan = plan_from_operator(chsh_operator())
        assert len(plan.terms) == 2
        observed = {
            (term.obs_a, term.obs_b): term.coefficient for term in plan.terms
        }
        assert observed == {
            (pauli(1), pauli(1)): -SQRT2,
            (pauli(3), pauli(3)): -SQRT2,
        }

    def test_qutrit_plan_has_twelve_terms(self):
        plan = plan_from_operator(qutrit_operator())
        assert len(plan.terms) == 12

    def test_zero_operator_gives_empty_plan(self):
        op = CorrelationOperator(Matrix.zeros(4, 4), Group.SU2)
        plan = plan_from_operator(op)
        assert plan.terms == ()

    def test_empty_plan_estimates_zero(self):
        op = CorrelationOperator(Matrix.zeros(4, 4), Group.SU2)
        plan = plan_from_operator(op)
        result = estimate(plan, bell_state("phi+").vector, 100, 7)
        assert result.estimate == 0.0
        assert result.stderr == 0.0


class TestEstimate:
    def test_bell_estimate_is_deterministic_and_sharp(self):
        # both CHSH terms have definite outcomes on phi+, so any seed gives
        # the exact value with zero sampling error
        plan = plan_from_operator(chsh_operator())
        result = estimate(plan, bell_state("phi+").vector, 10_000, 42)
        assert abs(result.estimate - (-TWO_SQRT2_F)) < 1e-12
        assert result.stderr == 0.0

    def test_qutrit_estimate_converges(self):
        plan = plan_from_operator(qutrit_operator())
        state = qutrit_state("psi00")
        exact = expectation(qutrit_operator(), state.vector).to_float()
        result = estimate(plan, state.vector, 200_000, 42)
        assert abs(result.estimate - exact) < 0.02
        assert 0.0 < result.stderr < 0.02

    def test_vanishing_expectation(self):
        plan = plan_from_operator(qutrit_operator())
        result = estimate(plan, qutrit_state("psi10+").vector, 100_000, 123)
        assert abs(result.estimate) < 0.05

    def test_bit_identical_repetition(self):
        plan = plan_from_operator(qutrit_operator())
        state = qutrit_state("psi11").vector
        a = estimate(plan, state, 5_000, 99)
        b = estimate(plan, state, 5_000, 99)
        assert a == b

    def test_seed_changes_draws(self):
        plan = plan_from_operator(qutrit_operator())
        state = qutrit_state("psi11").vector
        a = estimate(plan, state, 5_000, 1)
        b = estimate(plan, state, 5_000, 2)
        assert a.estimate != b.estimate

    def test_unbiased_over_twenty_seeds(self):
        plan = plan_from_operator(qutrit_operator())
        state = qutrit_state("psi00")
        exact = expectation(qutrit_operator(), state.vector).to_float()
        results = [estimate(plan, state.vector, 20_000, seed) for seed in range(20)]
        mean = sum(r.estimate for r in results) / len(results)
        combined_se = math.sqrt(sum(r.stderr**2 for r in results)) / len(results)
        assert abs(mean - exact) < 5 * combined_se

    def test_stderr_scale_matches_binomial(self):
        # single-term plan: sigma3 (x) sigma3 on psi+ gives outcomes -1/+1
        # with p(-1) = 1, hence zero variance; on (|00>+|01>)/sqrt2 the
        # a-side is fixed and the b-side is a fair coin, so the exact
        # per-shot variance is 1.
        op = CorrelationOperator(
            Matrix.from_rows(
                [[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, 1]]
            ),
            Group.SU2,
        )
        plan = plan_from_operator(op)
        half = ExactScalar(0, Fraction(1, 2))
        state = StateVector.from_amplitudes(
            [ExactComplex(half), ExactComplex(half), ExactComplex(), ExactComplex()]
        )
        shots = 40_000
        result = estimate(plan, state, shots, 3)
        assert abs(result.stderr - 1.0 / math.sqrt(shots)) < 0.1 / math.sqrt(shots)

    def test_errors(self):
        plan = plan_from_operator(chsh_operator())
        good = bell_state("phi+").vector
        with pytest.raises(ShotsZeroError):
            estimate(plan, good, 0, 1)
        doubled = StateVector.from_amplitudes(
            [ExactComplex(2), ExactComplex(), ExactComplex(), ExactComplex()]
        )
        with pytest.raises(NotNormalizedError):
            estimate(plan, doubled, 10, 1)
        with pytest.raises(DimensionMismatchError):
            estimate(plan, qutrit_state("psi00").vector, 10, 1)


class TestSharding:
    def test_sharded_equals_manual_merge(self):
        plan = plan_from_operator(qutrit_operator())
        state = qutrit_state("psi00").vector
        seed, shards, shots = 7, 4, 2_000
        merged = estimate_sharded(plan, state, shots, seed, shards)
        manual = merge_results(
            [estimate(plan, state, shots, seed ^ k) for k in range(1, shards + 1)],
            seed,
        )
        assert merged == manual

    def test_order_independent_computation(self):
        plan = plan_from_operator(qutrit_operator())
        state = qutrit_state("psi00").vector
        seed, shards, shots = 11, 4, 2_000
        forward = [estimate(plan, state, shots, seed ^ k) for k in range(1, shards + 1)]
        backward = [
            estimate(plan, state, shots, seed ^ k) for k in range(shards, 0, -1)
        ]
        assert merge_results(forward, seed) == merge_results(backward[::-1], seed)

    def test_concurrent_execution_matches_serial(self):
        plan = plan_from_operator(qutrit_operator())
        state = qutrit_state("psi00").vector
        seed, shards, shots = 13, 4, 2_000
        serial = estimate_sharded(plan, state, shots, seed, shards)
        with ThreadPoolExecutor(max_workers=4) as pool:
            futures = [
                pool.submit(estimate, plan, state, shots, seed ^ k)
                for k in range(1, shards + 1)
            ]
            concurrent = merge_results([f.result() for f in futures], seed)
        assert serial == concurrent

    def test_shot_accounting(self):
        plan = plan_from_operator(chsh_operator())
        state = bell_state("phi+").vector
        merged = estimate_sharded(plan, state, 500, 21, 4)
        assert merged.shots_per_term == 2_000
        assert merged.seed == 21
