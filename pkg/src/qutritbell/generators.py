"""Pauli and Gell-Mann generator sets and Hilbert-Schmidt projections.

The SU(3) set follows the convention in which index 0 is the plain 3x3
identity (not the normalized u(3) generator), so the squared HS norms are
stored per element (2 for every Pauli, 3 for the identity and 2 for the
eight traceless Gell-Mann matrices) rather than assumed uniform.

Structure constants are always recomputed from the trace formulas

    f_lmn = Tr([g_l, g_m] g_n) / (4i)      (totally antisymmetric)
    d_lmn = Tr({g_l, g_m} g_n) / 4         (totally symmetric)

which doubles as a consistency check on the generator matrices themselves.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import DimensionMismatchError, ModeMismatchError
from .exactnum import ExactComplex, ExactScalar
from .linalg import Matrix, Mode

_I = ExactComplex(0, 1)
_NEG_I = ExactComplex(0, -1)
_INV_SQRT3 = ExactScalar(0, 0, Fraction(1, 3))


class Group(Enum):
    SU2 = "su2"
    SU3 = "su3"

    def __str__(self) -> str:
        return self.value

    @property
    def site_dim(self) -> int:
        return 2 if self is Group.SU2 else 3

    @property
    def n_generators(self) -> int:
        return 4 if self is Group.SU2 else 9


@lru_cache(maxsize=None)
def pauli(i: int) -> Matrix:
    """Pauli matrix sigma_i, with sigma_0 the 2x2 identity."""
    if i not in (0, 1, 2, 3):
        raise IndexError(f"Pauli index {i} out of range 0..3")
    rows = (
        ((1, 0), (0, 1)),
        ((0, 1), (1, 0)),
        ((0, _NEG_I), (_I, 0)),
        ((1, 0), (0, -1)),
    )[i]
    return Matrix.from_rows(rows, Mode.EXACT)


@lru_cache(maxsize=None)
def gellmann(i: int) -> Matrix:
    """Gell-Mann matrix lambda_i, with lambda_0 the 3x3 identity."""
    if i not in range(9):
        raise IndexError(f"Gell-Mann index {i} out of range 0..8")
    t = _INV_SQRT3
    rows = (
        ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
        ((0, 1, 0), (1, 0, 0), (0, 0, 0)),
        ((0, _NEG_I, 0), (_I, 0, 0), (0, 0, 0)),
        ((1, 0, 0), (0, -1, 0), (0, 0, 0)),
        ((0, 0, 1), (0, 0, 0), (1, 0, 0)),
        ((0, 0, _NEG_I), (0, 0, 0), (_I, 0, 0)),
        ((0, 0, 0), (0, 0, 1), (0, 1, 0)),
        ((0, 0, 0), (0, 0, _NEG_I), (0, _I, 0)),
        ((t, 0, 0), (0, t, 0), (0, 0, t * -2)),
    )[i]
    return Matrix.from_rows(rows, Mode.EXACT)


def generator(group: Group, i: int) -> Matrix:
    return pauli(i) if group is Group.SU2 else gellmann(i)


@dataclass(frozen=True)
class GeneratorSet:
    """Ordered generator family with its measured HS norms Tr[g_i^2]."""

    group: Group
    elements: tuple[Matrix, ...]
    hs_norms: tuple[ExactScalar, ...]


@lru_cache(maxsize=None)
def generator_set(group: Group) -> GeneratorSet:
    elements = tuple(generator(group, i) for i in range(group.n_generators))
    norms = tuple((g @ g).trace().real_part() for g in elements)
    return GeneratorSet(group, elements, norms)


def _trace_product(a: Matrix, b: Matrix) -> ExactComplex:
    """Tr[a @ b] without forming the product matrix."""
    total = ExactComplex()
    for i in range(a.rows):
        row = a.entries[i]
        for j in range(a.cols):
            x = row[j]
            y = b.entries[j][i]
            if x and y:
                total = total + x * y
    return total


@dataclass(frozen=True)
class StructureConstants:
    """Symmetric (d) and antisymmetric (f) tensors, 1-based indices 1..8."""

    d: tuple[tuple[tuple[ExactScalar, ...], ...], ...]
    f: tuple[tuple[tuple[ExactScalar, ...], ...], ...]

    def d_tensor(self, l: int, m: int, n: int) -> ExactScalar:
        return self.d[l - 1][m - 1][n - 1]

    def f_tensor(self, l: int, m: int, n: int) -> ExactScalar:
        return self.f[l - 1][m - 1][n - 1]


@lru_cache(maxsize=None)
def structure_constants() -> StructureConstants:
    """SU(3) structure constants from the trace formulas (never tabulated)."""
    lam = [gellmann(i) for i in range(1, 9)]
    prod = [[lam[l] @ lam[m] for m in range(8)] for l in range(8)]
    d_rows = []
    f_rows = []
    for l in range(8):
        d_mid = []
        f_mid = []
        for m in range(8):
            d_inner = []
            f_inner = []
            for n in range(8):
                t_lm = _trace_product(prod[l][m], lam[n])
                t_ml = _trace_product(prod[m][l], lam[n])
                sym = t_lm + t_ml
                anti = t_lm - t_ml
                # {g_l,g_m}g_n has a real trace, [g_l,g_m]g_n a purely
                # imaginary one; both facts are enforced, not assumed.
                d_inner.append(sym.real_part() / 4)
                if anti.re:
                    raise ArithmeticError("commutator trace is not purely imaginary")
                f_inner.append(anti.im / 4)
            d_mid.append(tuple(d_inner))
            f_mid.append(tuple(f_inner))
        d_rows.append(tuple(d_mid))
        f_rows.append(tuple(f_mid))
    return StructureConstants(tuple(d_rows), tuple(f_rows))


def product_expand(l: int, m: int) -> tuple[ExactComplex, tuple[ExactComplex, ...]]:
    """Expand lambda_l @ lambda_m = s*I + sum_n c_n lambda_n by HS projection.

    Returns ``(s, (c_1, ..., c_8))``.  The result is checked against the
    standard identity s = (2/3) delta_lm, c_n = d_lmn + i f_lmn.
    """
    if l not in range(1, 9) or m not in range(1, 9):
        raise IndexError("generator indices must be in 1..8")
    p = gellmann(l) @ gellmann(m)
    s = p.trace() / 3
    coeffs = tuple(_trace_product(p, gellmann(n)) / 2 for n in range(1, 9))
    sc = structure_constants()
    expected_s = ExactComplex(ExactScalar(Fraction(2, 3)) if l == m else 0)
    assert s == expected_s
    for n in range(1, 9):
        assert coeffs[n - 1] == ExactComplex(sc.d_tensor(l, m, n), sc.f_tensor(l, m, n))
    return s, coeffs


@lru_cache(maxsize=None)
def _sparse_kron_basis(group: Group) -> tuple[tuple[tuple[tuple[int, int, ExactComplex], ...], ...], ...]:
    """Nonzero entries of g_l (x) g_m for every generator pair, as
    ``(row, col, value)`` triples.  The generator matrices are sparse, so
    this keeps projections and reconstructions cheap."""
    gens = generator_set(group).elements
    d = group.site_dim
    table = []
    for gl in gens:
        row_entries = []
        for gm in gens:
            nz = []
            for i1 in range(d):
                for j1 in range(d):
                    x = gl.entries[i1][j1]
                    if not x:
                        continue
                    for i2 in range(d):
                        for j2 in range(d):
                            y = gm.entries[i2][j2]
                            if y:
                                nz.append((i1 * d + i2, j1 * d + j2, x * y))
            row_entries.append(tuple(nz))
        table.append(tuple(row_entries))
    return tuple(table)


def hs_project(m: Matrix, group: Group) -> tuple[tuple[ExactComplex, ...], ...]:
    """Coefficients c[l][m] = Tr[(g_l (x) g_m) M] / (N_l N_m) of the operator
    in the tensor-product generator basis; reconstruction is exact."""
    if m.mode is not Mode.EXACT:
        raise ModeMismatchError("hs_project works on exact matrices")
    dim = group.site_dim**2
    if (m.rows, m.cols) != (dim, dim):
        raise DimensionMismatchError(
            f"expected a {dim}x{dim} matrix for {group.value}, got {m.rows}x{m.cols}"
        )
    norms = generator_set(group).hs_norms
    basis = _sparse_kron_basis(group)
    coeffs = []
    for l in range(group.n_generators):
        row = []
        for k in range(group.n_generators):
            total = ExactComplex()
            for i, j, v in basis[l][k]:
                x = m.entries[j][i]
                if x:
                    total = total + v * x
            row.append(total / (norms[l] * norms[k]))
        coeffs.append(tuple(row))
    return tuple(coeffs)


def hs_reconstruct(
    coeffs: Sequence[Sequence[ExactComplex]], group: Group
) -> Matrix:
    """Rebuild sum c[l][m] g_l (x) g_m from projection coefficients."""
    dim = group.site_dim**2
    basis = _sparse_kron_basis(group)
    acc = [[ExactComplex() for _ in range(dim)] for _ in range(dim)]
    for l in range(group.n_generators):
        for k in range(group.n_generators):
            c = ExactComplex.coerce(coeffs[l][k])
            if not c:
                continue
            for i, j, v in basis[l][k]:
                acc[i][j] = acc[i][j] + c * v
    return Matrix.from_rows(acc, Mode.EXACT)
