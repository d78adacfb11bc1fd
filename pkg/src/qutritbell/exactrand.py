"""Seeded generators of random exact scalars, matrices and unit states.

Unit states are built by composing exact plane rotations with Pythagorean
cosine/sine pairs and quarter-turn phases, so the squared norm is exactly 1
by construction (no square roots needed).  Used by the property tests and by
the self-check battery.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .exactnum import ExactComplex, ExactScalar
from .linalg import Matrix, Mode, StateVector

# (cos, sin) pairs with cos^2 + sin^2 = 1 exactly.
_PYTHAGOREAN = (
    (Fraction(3, 5), Fraction(4, 5)),
    (Fraction(5, 13), Fraction(12, 13)),
    (Fraction(8, 17), Fraction(15, 17)),
    (Fraction(20, 29), Fraction(21, 29)),
    (Fraction(7, 25), Fraction(24, 25)),
)

_PHASES = (
    ExactComplex(1),
    ExactComplex(-1),
    ExactComplex(0, 1),
    ExactComplex(0, -1),
)


def random_rational(rng: random.Random, span: int = 6) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def random_exact_scalar(
    rng: random.Random, span: int = 6, zero_weight: float = 0.4
) -> ExactScalar:
    comps = [
        Fraction(0) if rng.random() < zero_weight else random_rational(rng, span)
        for _ in range(4)
    ]
    return ExactScalar(*comps)


def random_exact_complex(rng: random.Random, span: int = 6) -> ExactComplex:
    return ExactComplex(random_exact_scalar(rng, span), random_exact_scalar(rng, span))


def random_exact_matrix(
    rows: int, cols: int, rng: random.Random, span: int = 4
) -> Matrix:
    data = [[random_exact_complex(rng, span) for _ in range(cols)] for _ in range(rows)]
    return Matrix.from_rows(data, Mode.EXACT)


def random_unit_state(dim: int, rng: random.Random, rounds: int | None = None) -> StateVector:
    """Exactly normalized state with Gaussian-rational amplitudes."""
    amps: list[ExactComplex] = [ExactComplex()] * dim
    amps[rng.randrange(dim)] = ExactComplex(1)
    if rounds is None:
        rounds = 3 * dim
    for _ in range(rounds):
        i, j = rng.sample(range(dim), 2)
        cos, sin = rng.choice(_PYTHAGOREAN)
        x, y = amps[i], amps[j]
        amps[i] = x * cos - y * sin
        amps[j] = x * sin + y * cos
        k = rng.randrange(dim)
        amps[k] = amps[k] * rng.choice(_PHASES)
    return StateVector.from_amplitudes(amps, Mode.EXACT)
