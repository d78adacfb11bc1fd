"""Exact arithmetic in the real field Q(sqrt2, sqrt3) and its complexification.

Every number that occurs in the Bell / qutrit correlation analysis lives in
the degree-4 extension Q(sqrt2, sqrt3) with basis {1, sqrt2, sqrt3, sqrt6}.
``ExactScalar`` stores the four rational coordinates, so equality is decidable
and all field operations are exact.  ``ExactComplex`` is a plain Gaussian
pair over that field; no larger tower is ever needed.

Rationals are ``fractions.Fraction`` (arbitrary precision, always canonical:
positive denominator, gcd-reduced).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import total_ordering
from math import isqrt
from typing import Union

Rational = Fraction

RationalLike = Union[int, Fraction]
ScalarLike = Union[int, Fraction, "ExactScalar"]

_SQRT2 = math.sqrt(2.0)
_SQRT3 = math.sqrt(3.0)
_SQRT6 = math.sqrt(6.0)

# Products of basis radicals: _BASIS_MUL[i][j] = (k, n) means
# basis_i * basis_j = n * basis_k, with basis order (1, sqrt2, sqrt3, sqrt6).
_BASIS_MUL = (
    ((0, 1), (1, 1), (2, 1), (3, 1)),
    ((1, 1), (0, 2), (3, 1), (2, 2)),
    ((2, 1), (3, 1), (0, 3), (1, 3)),
    ((3, 1), (2, 2), (1, 3), (0, 6)),
)

# Radical value of each basis slot (basis_k = sqrt of this).
_BASIS_RADICAND = (1, 2, 3, 6)


def _coerce_rational(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")


def _sqrt_bounds(n: int, digits: int) -> tuple[Fraction, Fraction]:
    """Rational lower/upper bounds on sqrt(n) with error < 10**-digits."""
    q = 10**digits
    p = isqrt(n * q * q)
    return Fraction(p, q), Fraction(p + 1, q)


@total_ordering
class ExactScalar:
    """Element a + b*sqrt2 + c*sqrt3 + d*sqrt6 with rational a, b, c, d."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(
        self,
        a: RationalLike = 0,
        b: RationalLike = 0,
        c: RationalLike = 0,
        d: RationalLike = 0,
    ) -> None:
        object.__setattr__(self, "a", _coerce_rational(a))
        object.__setattr__(self, "b", _coerce_rational(b))
        object.__setattr__(self, "c", _coerce_rational(c))
        object.__setattr__(self, "d", _coerce_rational(d))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("ExactScalar is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rational(cls, p: RationalLike, q: RationalLike = 1) -> ExactScalar:
        return cls(Fraction(_coerce_rational(p), _coerce_rational(q)))

    @classmethod
    def coerce(cls, x: ScalarLike) -> ExactScalar:
        if isinstance(x, ExactScalar):
            return x
        return cls(_coerce_rational(x))

    # -- basic protocol ----------------------------------------------------

    @property
    def components(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    def __bool__(self) -> bool:
        return bool(self.a or self.b or self.c or self.d)

    def is_zero(self) -> bool:
        return not self

    def is_rational(self) -> bool:
        return not (self.b or self.c or self.d)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = ExactScalar(other)
        if isinstance(other, ExactScalar):
            return self.components == other.components
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.components)

    def __repr__(self) -> str:
        return f"ExactScalar({self.a!r}, {self.b!r}, {self.c!r}, {self.d!r})"

    def __str__(self) -> str:
        return format_exact(self)

    # -- field arithmetic --------------------------------------------------

    def __add__(self, other: ScalarLike) -> ExactScalar:
        if isinstance(other, (int, Fraction)):
            other = ExactScalar(other)
        if not isinstance(other, ExactScalar):
            return NotImplemented
        return ExactScalar(
            self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d
        )

    __radd__ = __add__

    def __sub__(self, other: ScalarLike) -> ExactScalar:
        if isinstance(other, (int, Fraction)):
            other = ExactScalar(other)
        if not isinstance(other, ExactScalar):
            return NotImplemented
        return ExactScalar(
            self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d
        )

    def __rsub__(self, other: ScalarLike) -> ExactScalar:
        return (-self) + other

    def __neg__(self) -> ExactScalar:
        return ExactScalar(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, other: ScalarLike) -> ExactScalar:
        if isinstance(other, (int, Fraction)):
            q = _coerce_rational(other)
            return ExactScalar(self.a * q, self.b * q, self.c * q, self.d * q)
        if not isinstance(other, ExactScalar):
            return NotImplemented
        acc = [Fraction(0)] * 4
        left = self.components
        right = other.components
        for i in range(4):
            x = left[i]
            if not x:
                continue
            row = _BASIS_MUL[i]
            for j in range(4):
                y = right[j]
                if not y:
                    continue
                k, n = row[j]
                acc[k] += x * y * n
        return ExactScalar(*acc)

    __rmul__ = __mul__

    def __truediv__(self, other: ScalarLike) -> ExactScalar:
        if isinstance(other, (int, Fraction)):
            q = _coerce_rational(other)
            if q == 0:
                raise ZeroDivisionError("division by zero")
            return ExactScalar(self.a / q, self.b / q, self.c / q, self.d / q)
        if not isinstance(other, ExactScalar):
            return NotImplemented
        return self * other.invert()

    def __rtruediv__(self, other: ScalarLike) -> ExactScalar:
        return ExactScalar.coerce(other) * self.invert()

    def invert(self) -> ExactScalar:
        """Multiplicative inverse, from the 4x4 rational system x*y = 1.

        Multiplication by ``self`` is a linear map on the coordinate space;
        its matrix is inverted by Gaussian elimination over the rationals.
        """
        if not self:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        a, b, c, d = self.components
        # Column k of m is the coordinate vector of self * basis_k.
        m = [
            [a, 2 * b, 3 * c, 6 * d],
            [b, a, 3 * d, 3 * c],
            [c, 2 * d, a, 2 * b],
            [d, c, b, a],
        ]
        rhs = [Fraction(1), Fraction(0), Fraction(0), Fraction(0)]
        for col in range(4):
            pivot = next(r for r in range(col, 4) if m[r][col] != 0)
            m[col], m[pivot] = m[pivot], m[col]
            rhs[col], rhs[pivot] = rhs[pivot], rhs[col]
            inv = 1 / m[col][col]
            m[col] = [v * inv for v in m[col]]
            rhs[col] *= inv
            for r in range(4):
                if r != col and m[r][col]:
                    f = m[r][col]
                    m[r] = [v - f * w for v, w in zip(m[r], m[col])]
                    rhs[r] -= f * rhs[col]
        return ExactScalar(*rhs)

    def square(self) -> ExactScalar:
        return self * self

    def sqrt(self) -> ExactScalar:
        """Exact square root, when one exists inside the field.

        Supported inputs are nonnegative rationals whose squarefree part is
        1, 2, 3 or 6 (these cover every normalization constant that arises
        from the generator-promoted states).  Anything else raises
        ``ValueError``.
        """
        if not self:
            return ExactScalar()
        if not self.is_rational():
            raise ValueError(f"square root of {self} is not representable")
        q = self.a
        if q < 0:
            raise ValueError("square root of a negative value")
        for idx, radicand in enumerate(_BASIS_RADICAND):
            reduced = q / radicand
            num, den = reduced.numerator, reduced.denominator
            rn, rd = isqrt(num), isqrt(den)
            if rn * rn == num and rd * rd == den:
                comps = [Fraction(0)] * 4
                comps[idx] = Fraction(rn, rd)
                return ExactScalar(*comps)
        raise ValueError(f"square root of {self} is not representable")

    # -- order and conversion ----------------------------------------------

    def sign(self) -> int:
        """Exact sign via rational interval refinement of the radicals."""
        if not self:
            return 0
        if self.is_rational():
            return 1 if self.a > 0 else -1
        digits = 8
        while True:
            lo = self.a
            hi = self.a
            for coeff, n in ((self.b, 2), (self.c, 3), (self.d, 6)):
                if not coeff:
                    continue
                lo_r, hi_r = _sqrt_bounds(n, digits)
                if coeff > 0:
                    lo += coeff * lo_r
                    hi += coeff * hi_r
                else:
                    lo += coeff * hi_r
                    hi += coeff * lo_r
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            digits *= 2

    def __lt__(self, other: ScalarLike) -> bool:
        if isinstance(other, (int, Fraction)):
            other = ExactScalar(other)
        if not isinstance(other, ExactScalar):
            return NotImplemented
        return (self - other).sign() < 0

    def __abs__(self) -> ExactScalar:
        return -self if self.sign() < 0 else self

    def to_float(self) -> float:
        return (
            float(self.a)
            + float(self.b) * _SQRT2
            + float(self.c) * _SQRT3
            + float(self.d) * _SQRT6
        )

    __float__ = to_float

    # -- JSON --------------------------------------------------------------

    def to_json(self) -> dict[str, str]:
        return {
            key: f"{frac.numerator}/{frac.denominator}"
            for key, frac in zip("abcd", self.components)
        }

    @classmethod
    def from_json(cls, obj: dict[str, str]) -> ExactScalar:
        return cls(*(Fraction(obj[key]) for key in "abcd"))


ZERO = ExactScalar()
ONE = ExactScalar(1)
SQRT2 = ExactScalar(0, 1)
SQRT3 = ExactScalar(0, 0, 1)
SQRT6 = ExactScalar(0, 0, 0, 1)
INV_SQRT2 = ExactScalar(0, Fraction(1, 2))
INV_SQRT3 = ExactScalar(0, 0, Fraction(1, 3))
INV_SQRT6 = ExactScalar(0, 0, 0, Fraction(1, 6))
TWO_SQRT2 = ExactScalar(0, 2)


def format_exact(x: ExactScalar) -> str:
    """Human-readable rendering such as ``2√2``, ``-√2/4`` or ``1 + √3/3``."""
    radicals = ("", "√2", "√3", "√6")
    terms: list[tuple[int, str]] = []
    for coeff, radical in zip(x.components, radicals):
        if not coeff:
            continue
        num, den = abs(coeff.numerator), coeff.denominator
        if radical:
            body = radical if num == 1 else f"{num}{radical}"
        else:
            body = str(num)
        if den != 1:
            body += f"/{den}"
        terms.append((1 if coeff > 0 else -1, body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] < 0 else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += (" + " if sign > 0 else " - ") + body
    return out


ComplexLike = Union[int, Fraction, ExactScalar, "ExactComplex"]


class ExactComplex:
    """Complex number with ``ExactScalar`` real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: ScalarLike = 0, im: ScalarLike = 0) -> None:
        object.__setattr__(self, "re", ExactScalar.coerce(re))
        object.__setattr__(self, "im", ExactScalar.coerce(im))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("ExactComplex is immutable")

    @classmethod
    def coerce(cls, x: ComplexLike) -> ExactComplex:
        if isinstance(x, ExactComplex):
            return x
        return cls(ExactScalar.coerce(x))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return not self.im

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, ExactScalar)):
            other = ExactComplex(other)
        if isinstance(other, ExactComplex):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __repr__(self) -> str:
        return f"ExactComplex({self.re!r}, {self.im!r})"

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        im_str = str(self.im)
        if " " in im_str:
            im_str = f"({im_str})"
        if im_str == "1":
            im_str = ""
        elif im_str == "-1":
            im_str = "-"
        if not self.re:
            return f"{im_str}i"
        joiner = " - " if im_str.startswith("-") else " + "
        return f"{self.re}{joiner}{im_str.lstrip('-')}i"

    def __add__(self, other: ComplexLike) -> ExactComplex:
        other = _as_complex(other)
        if other is None:
            return NotImplemented
        return ExactComplex(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other: ComplexLike) -> ExactComplex:
        other = _as_complex(other)
        if other is None:
            return NotImplemented
        return ExactComplex(self.re - other.re, self.im - other.im)

    def __rsub__(self, other: ComplexLike) -> ExactComplex:
        return (-self) + other

    def __neg__(self) -> ExactComplex:
        return ExactComplex(-self.re, -self.im)

    def __mul__(self, other: ComplexLike) -> ExactComplex:
        other = _as_complex(other)
        if other is None:
            return NotImplemented
        if not other.im:
            s = other.re
            return ExactComplex(self.re * s, self.im * s)
        if not self.im:
            s = self.re
            return ExactComplex(s * other.re, s * other.im)
        return ExactComplex(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: ComplexLike) -> ExactComplex:
        other = _as_complex(other)
        if other is None:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("division by zero")
        if not other.im:
            inv = other.re.invert()
            return ExactComplex(self.re * inv, self.im * inv)
        inv_norm = other.abs2().invert()
        return (self * other.conjugate()) * inv_norm

    def __rtruediv__(self, other: ComplexLike) -> ExactComplex:
        return ExactComplex.coerce(other) / self

    def conjugate(self) -> ExactComplex:
        return ExactComplex(self.re, -self.im)

    conj = conjugate

    def abs2(self) -> ExactScalar:
        return self.re * self.re + self.im * self.im

    def real_part(self) -> ExactScalar:
        """Real part, insisting that the imaginary part vanish exactly."""
        if self.im:
            raise ValueError(f"{self} has a nonzero imaginary part")
        return self.re

    def to_complex(self) -> complex:
        return complex(self.re.to_float(), self.im.to_float())

    __complex__ = to_complex

    def to_json(self) -> dict[str, dict[str, str]]:
        return {"re": self.re.to_json(), "im": self.im.to_json()}

    @classmethod
    def from_json(cls, obj: dict[str, dict[str, str]]) -> ExactComplex:
        return cls(ExactScalar.from_json(obj["re"]), ExactScalar.from_json(obj["im"]))


def _as_complex(x: object) -> ExactComplex | None:
    if isinstance(x, ExactComplex):
        return x
    if isinstance(x, (int, Fraction, ExactScalar)):
        return ExactComplex(x)
    return None


C_ZERO = ExactComplex()
C_ONE = ExactComplex(1)
C_I = ExactComplex(0, 1)
