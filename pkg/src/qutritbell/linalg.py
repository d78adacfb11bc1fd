"""Dense vectors and matrices over the exact field or double-precision complex.

Everything in the analysis is at most 9x9, so storage is plain tuples and the
algorithms are the textbook ones.  Each object carries a ``Mode`` tag:

* ``Mode.EXACT`` entries are :class:`~qutritbell.exactnum.ExactComplex`;
  arithmetic, equality and traces are exact.
* ``Mode.FLOAT`` entries are built-in ``complex``; this path exists for the
  Hermitian eigensolver and entropy evaluation only.

The composite index convention is fixed globally: the bipartite ket |ij> maps
to row i*dB + j (second factor fastest).  All tensor-product and partial-trace
code relies on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import (
    DimensionMismatchError,
    ModeMismatchError,
    NotHermitianError,
)
from .exactnum import ExactComplex, ExactScalar

EntryLike = Union[int, Fraction, ExactScalar, ExactComplex, complex, float]

HERMITIAN_TOL = 1e-12
EIG_RECONSTRUCTION_TOL = 1e-10


class Mode(Enum):
    EXACT = "exact"
    FLOAT = "float"


def _cast_entry(value: EntryLike, mode: Mode):
    if mode is Mode.EXACT:
        if isinstance(value, (complex, float)):
            raise ModeMismatchError("float value in an exact container")
        return ExactComplex.coerce(value)
    if isinstance(value, ExactComplex):
        return value.to_complex()
    if isinstance(value, ExactScalar):
        return complex(value.to_float(), 0.0)
    return complex(value)


def _zero(mode: Mode):
    return ExactComplex() if mode is Mode.EXACT else 0j


def _require_same_mode(a: Mode, b: Mode) -> Mode:
    if a is not b:
        raise ModeMismatchError(f"mixed modes {a.value} and {b.value}")
    return a


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix; ``entries[i][j]`` is row i, column j."""

    rows: int
    cols: int
    entries: tuple[tuple[object, ...], ...]
    mode: Mode

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[EntryLike]], mode: Mode = Mode.EXACT
    ) -> Matrix:
        data = tuple(tuple(_cast_entry(v, mode) for v in row) for row in rows)
        n_rows = len(data)
        n_cols = len(data[0]) if data else 0
        if any(len(row) != n_cols for row in data):
            raise DimensionMismatchError("ragged rows")
        return cls(n_rows, n_cols, data, mode)

    @classmethod
    def zeros(cls, rows: int, cols: int, mode: Mode = Mode.EXACT) -> Matrix:
        z = _zero(mode)
        return cls(rows, cols, tuple((z,) * cols for _ in range(rows)), mode)

    @classmethod
    def identity(cls, n: int, mode: Mode = Mode.EXACT) -> Matrix:
        one = ExactComplex(1) if mode is Mode.EXACT else 1 + 0j
        z = _zero(mode)
        return cls(
            n, n, tuple(tuple(one if i == j else z for j in range(n)) for i in range(n)), mode
        )

    def entry(self, i: int, j: int):
        return self.entries[i][j]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def _check_same_shape(self, other: Matrix) -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatchError(
                f"{self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def __add__(self, other: Matrix) -> Matrix:
        _require_same_mode(self.mode, other.mode)
        self._check_same_shape(other)
        return Matrix(
            self.rows,
            self.cols,
            tuple(
                tuple(x + y for x, y in zip(r1, r2))
                for r1, r2 in zip(self.entries, other.entries)
            ),
            self.mode,
        )

    def __sub__(self, other: Matrix) -> Matrix:
        return self + (-other)

    def __neg__(self) -> Matrix:
        return Matrix(
            self.rows,
            self.cols,
            tuple(tuple(-x for x in row) for row in self.entries),
            self.mode,
        )

    def scale(self, s: EntryLike) -> Matrix:
        factor = _cast_entry(s, self.mode)
        return Matrix(
            self.rows,
            self.cols,
            tuple(tuple(factor * x for x in row) for row in self.entries),
            self.mode,
        )

    def __mul__(self, s: EntryLike) -> Matrix:
        return self.scale(s)

    __rmul__ = __mul__

    def __matmul__(self, other: Matrix) -> Matrix:
        _require_same_mode(self.mode, other.mode)
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        cols = tuple(zip(*other.entries))
        z = _zero(self.mode)
        data = tuple(
            tuple(
                sum((x * y for x, y in zip(row, col) if x and y), z)
                for col in cols
            )
            for row in self.entries
        )
        return Matrix(self.rows, other.cols, data, self.mode)

    def transpose(self) -> Matrix:
        return Matrix(self.cols, self.rows, tuple(zip(*self.entries)), self.mode)

    def conjugate(self) -> Matrix:
        return Matrix(
            self.rows,
            self.cols,
            tuple(tuple(x.conjugate() for x in row) for row in self.entries),
            self.mode,
        )

    def adjoint(self) -> Matrix:
        return self.transpose().conjugate()

    def trace(self):
        if not self.is_square:
            raise DimensionMismatchError("trace of a non-square matrix")
        z = _zero(self.mode)
        return sum((self.entries[i][i] for i in range(self.rows)), z)

    def apply(self, v: StateVector) -> StateVector:
        _require_same_mode(self.mode, v.mode)
        if self.cols != v.dim:
            raise DimensionMismatchError(f"{self.rows}x{self.cols} applied to dim {v.dim}")
        z = _zero(self.mode)
        amps = tuple(
            sum((x * a for x, a in zip(row, v.amplitudes) if x and a), z)
            for row in self.entries
        )
        return StateVector(self.rows, amps, self.mode)

    def is_hermitian(self, tol: float = HERMITIAN_TOL) -> bool:
        if not self.is_square:
            return False
        if self.mode is Mode.EXACT:
            return self == self.adjoint()
        return max_abs_diff(self, self.adjoint()) <= tol

    def to_float(self) -> Matrix:
        if self.mode is Mode.FLOAT:
            return self
        return Matrix(
            self.rows,
            self.cols,
            tuple(tuple(x.to_complex() for x in row) for row in self.entries),
            Mode.FLOAT,
        )

    def to_numpy(self) -> np.ndarray:
        m = self.to_float()
        return np.array(m.entries, dtype=complex)

    def to_json(self) -> dict:
        if self.mode is Mode.EXACT:
            rows = [[x.to_json() for x in row] for row in self.entries]
        else:
            rows = [[{"re": x.real, "im": x.imag} for x in row] for row in self.entries]
        return {"rows": self.rows, "cols": self.cols, "mode": self.mode.value, "entries": rows}

    @classmethod
    def from_json(cls, obj: dict) -> Matrix:
        mode = Mode(obj["mode"])
        if mode is Mode.EXACT:
            data = [[ExactComplex.from_json(x) for x in row] for row in obj["entries"]]
        else:
            data = [[complex(x["re"], x["im"]) for x in row] for row in obj["entries"]]
        m = cls.from_rows(data, mode)
        if (m.rows, m.cols) != (obj["rows"], obj["cols"]):
            raise DimensionMismatchError("matrix JSON shape disagrees with entries")
        return m


@dataclass(frozen=True)
class StateVector:
    """Immutable dense ket; amplitudes indexed like the matrix rows."""

    dim: int
    amplitudes: tuple[object, ...]
    mode: Mode

    @classmethod
    def from_amplitudes(
        cls, values: Sequence[EntryLike], mode: Mode = Mode.EXACT
    ) -> StateVector:
        amps = tuple(_cast_entry(v, mode) for v in values)
        return cls(len(amps), amps, mode)

    @classmethod
    def basis_vector(cls, dim: int, k: int, mode: Mode = Mode.EXACT) -> StateVector:
        values: list[EntryLike] = [0] * dim
        values[k] = 1
        return cls.from_amplitudes(values, mode)

    def __add__(self, other: StateVector) -> StateVector:
        _require_same_mode(self.mode, other.mode)
        if self.dim != other.dim:
            raise DimensionMismatchError(f"dim {self.dim} vs {other.dim}")
        return StateVector(
            self.dim,
            tuple(x + y for x, y in zip(self.amplitudes, other.amplitudes)),
            self.mode,
        )

    def __sub__(self, other: StateVector) -> StateVector:
        return self + (-other)

    def __neg__(self) -> StateVector:
        return StateVector(self.dim, tuple(-x for x in self.amplitudes), self.mode)

    def scale(self, s: EntryLike) -> StateVector:
        factor = _cast_entry(s, self.mode)
        return StateVector(self.dim, tuple(factor * x for x in self.amplitudes), self.mode)

    def __mul__(self, s: EntryLike) -> StateVector:
        return self.scale(s)

    __rmul__ = __mul__

    def inner(self, other: StateVector):
        """Hermitian inner product <self|other> (conjugate-linear on self)."""
        _require_same_mode(self.mode, other.mode)
        if self.dim != other.dim:
            raise DimensionMismatchError(f"dim {self.dim} vs {other.dim}")
        z = _zero(self.mode)
        return sum(
            (x.conjugate() * y for x, y in zip(self.amplitudes, other.amplitudes) if x and y),
            z,
        )

    def norm2(self):
        """Squared norm; an ``ExactScalar`` on the exact path."""
        if self.mode is Mode.EXACT:
            total = ExactScalar()
            for x in self.amplitudes:
                if x:
                    total = total + x.abs2()
            return total
        return sum(abs(x) ** 2 for x in self.amplitudes)

    def is_normalized(self, tol: float = 1e-12) -> bool:
        n2 = self.norm2()
        if self.mode is Mode.EXACT:
            return n2 == ExactScalar(1)
        return abs(n2 - 1.0) <= tol

    def normalized(self) -> StateVector:
        n2 = self.norm2()
        if self.mode is Mode.FLOAT:
            return self.scale(1.0 / np.sqrt(n2))
        root = n2.sqrt()
        return self.scale(root.invert())

    def to_float(self) -> StateVector:
        if self.mode is Mode.FLOAT:
            return self
        return StateVector(
            self.dim, tuple(x.to_complex() for x in self.amplitudes), Mode.FLOAT
        )

    def to_numpy(self) -> np.ndarray:
        return np.array(self.to_float().amplitudes, dtype=complex)

    def to_json(self) -> dict:
        if self.mode is Mode.EXACT:
            amps = [x.to_json() for x in self.amplitudes]
        else:
            amps = [{"re": x.real, "im": x.imag} for x in self.amplitudes]
        return {"dim": self.dim, "mode": self.mode.value, "amplitudes": amps}

    @classmethod
    def from_json(cls, obj: dict) -> StateVector:
        mode = Mode(obj["mode"])
        if mode is Mode.EXACT:
            data = [ExactComplex.from_json(x) for x in obj["amplitudes"]]
        else:
            data = [complex(x["re"], x["im"]) for x in obj["amplitudes"]]
        return cls.from_amplitudes(data, mode)


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product with the global |ij> -> i*dB + j index convention."""
    mode = _require_same_mode(a.mode, b.mode)
    rows = a.rows * b.rows
    cols = a.cols * b.cols
    data = tuple(
        tuple(
            a.entries[i // b.rows][j // b.cols] * b.entries[i % b.rows][j % b.cols]
            for j in range(cols)
        )
        for i in range(rows)
    )
    return Matrix(rows, cols, data, mode)


def outer(u: StateVector, v: StateVector) -> Matrix:
    """Rank-one operator |u><v|."""
    mode = _require_same_mode(u.mode, v.mode)
    data = tuple(
        tuple(x * y.conjugate() for y in v.amplitudes) for x in u.amplitudes
    )
    return Matrix(u.dim, v.dim, data, mode)


def partial_trace(rho: Matrix, keep: str, dims: tuple[int, int]) -> Matrix:
    """Reduce a bipartite operator to subsystem ``keep`` ("A" or "B")."""
    d_a, d_b = dims
    if not rho.is_square or rho.rows != d_a * d_b:
        raise DimensionMismatchError(
            f"operator is {rho.rows}x{rho.cols}, dims say {d_a}*{d_b}"
        )
    if keep not in ("A", "B"):
        raise ValueError("keep must be 'A' or 'B'")
    z = _zero(rho.mode)
    if keep == "A":
        data = tuple(
            tuple(
                sum((rho.entries[i * d_b + k][j * d_b + k] for k in range(d_b)), z)
                for j in range(d_a)
            )
            for i in range(d_a)
        )
        return Matrix(d_a, d_a, data, rho.mode)
    data = tuple(
        tuple(
            sum((rho.entries[k * d_b + i][k * d_b + j] for k in range(d_a)), z)
            for j in range(d_b)
        )
        for i in range(d_b)
    )
    return Matrix(d_b, d_b, data, rho.mode)


def eig_hermitian(m: Matrix) -> tuple[tuple[float, ...], tuple[StateVector, ...]]:
    """Eigenvalues (descending) and orthonormal eigenvectors of a Hermitian
    float-mode matrix.

    The exact path never eigensolves; it verifies candidate eigenpairs with
    :func:`verify_eigenpair` instead.
    """
    if m.mode is not Mode.FLOAT:
        raise ModeMismatchError("eig_hermitian needs a float-mode matrix; cast with to_float()")
    arr = m.to_numpy()
    if arr.shape[0] != arr.shape[1]:
        raise DimensionMismatchError("eigendecomposition of a non-square matrix")
    if np.max(np.abs(arr - arr.conj().T)) > HERMITIAN_TOL:
        raise NotHermitianError("matrix is not Hermitian within 1e-12")
    w, v = np.linalg.eigh(arr)
    order = np.argsort(-w, kind="stable")
    w = w[order]
    v = v[:, order]
    vectors = tuple(
        StateVector.from_amplitudes(v[:, k], Mode.FLOAT) for k in range(v.shape[1])
    )
    return tuple(float(x) for x in w), vectors


def verify_eigenpair(m: Matrix, value: ExactScalar, vec: StateVector) -> bool:
    """Exact check that ``m @ vec == value * vec``."""
    return m.apply(vec) == vec.scale(value)


def gram_matrix(vectors: Sequence[StateVector]) -> Matrix:
    """Matrix of pairwise inner products <u_i|u_j>."""
    if not vectors:
        raise DimensionMismatchError("gram matrix of an empty family")
    mode = vectors[0].mode
    data = tuple(tuple(u.inner(v) for v in vectors) for u in vectors)
    return Matrix(len(vectors), len(vectors), data, mode)


def max_abs_diff(a: Matrix, b: Matrix) -> float:
    """Entrywise max |a - b| after casting both operands to floats."""
    return float(np.max(np.abs(a.to_numpy() - b.to_numpy()))) if a.rows else 0.0


def vec_max_abs_diff(a: StateVector, b: StateVector) -> float:
    return float(np.max(np.abs(a.to_numpy() - b.to_numpy())))
