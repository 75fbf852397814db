"""Scalar backends for the linear-algebra layer.

Two interchangeable backends are provided:

* ``FLOAT`` -- double-precision complex numbers stored in ``complex128``
  numpy arrays.  Comparisons are tolerance-based (default 1e-12 absolute).
* ``EXACT`` -- complex numbers with exact rational real and imaginary
  parts (``ExactComplex``), stored in object-dtype numpy arrays.  All
  arithmetic is closed; identities that hold, hold with residual exactly
  zero.

The exact backend can only take square roots of perfect rational squares,
so exact verification requires the smearing ratio delta to be the square
of a rational (e.g. delta = 1/4).
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

DEFAULT_TOL = 1e-12


class ExactSqrtError(ValueError):
    """Raised when an exact square root of a non-square rational is requested."""


def rational_sqrt(x) -> Fraction:
    """Exact square root of a nonnegative rational, or ExactSqrtError."""
    x = Fraction(x)
    if x < 0:
        raise ExactSqrtError(f"negative radicand: {x}")
    num = math.isqrt(x.numerator)
    den = math.isqrt(x.denominator)
    if num * num != x.numerator or den * den != x.denominator:
        raise ExactSqrtError(f"{x} is not the square of a rational")
    return Fraction(num, den)


class ExactComplex:
    """Complex number with rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def _coerce(other):
        if isinstance(other, ExactComplex):
            return other
        if isinstance(other, (int, Fraction)):
            return ExactComplex(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExactComplex(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExactComplex(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExactComplex(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = o.re * o.re + o.im * o.im
        if d == 0:
            raise ZeroDivisionError("division by exact zero")
        return ExactComplex(
            (self.re * o.re + self.im * o.im) / d,
            (self.im * o.re - self.re * o.im) / d,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return ExactComplex(-self.re, -self.im)

    def __pos__(self):
        return self

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ExactComplex(other)
        if isinstance(other, ExactComplex):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def conjugate(self):
        return ExactComplex(self.re, -self.im)

    def abs2(self) -> Fraction:
        """Squared magnitude, exact."""
        return self.re * self.re + self.im * self.im

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"ExactComplex({self.re!r}, {self.im!r})"


class FloatBackend:
    """complex128 arithmetic with tolerance-based comparison."""

    name = "float"
    tol = DEFAULT_TOL

    def scalar(self, re, im=0):
        return complex(float(re), float(im))

    def real(self, x):
        return float(x)

    def sqrt(self, x):
        x = float(x)
        if x < 0:
            raise ValueError(f"negative radicand: {x}")
        return math.sqrt(x)

    def array(self, rows):
        return np.array(rows, dtype=complex)

    def zeros(self, shape):
        return np.zeros(shape, dtype=complex)

    def eye(self, n):
        return np.eye(n, dtype=complex)


class ExactBackend:
    """Rational-complex arithmetic; every operation is exact."""

    name = "exact"
    tol = 0.0

    def scalar(self, re, im=0):
        return ExactComplex(re, im)

    def real(self, x):
        return Fraction(x)

    def sqrt(self, x):
        return rational_sqrt(x)

    def array(self, rows):
        out = np.empty((len(rows), len(rows[0])), dtype=object)
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                out[i, j] = v if isinstance(v, ExactComplex) else ExactComplex(v)
        return out

    def zeros(self, shape):
        out = np.empty(shape, dtype=object)
        out[...] = ExactComplex(0)
        return out.copy()

    def eye(self, n):
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = ExactComplex(1)
        return out


FLOAT = FloatBackend()
EXACT = ExactBackend()

_BACKENDS = {"float": FLOAT, "exact": EXACT}


def get_backend(name: str):
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ValueError(f"unknown backend {name!r}; expected 'float' or 'exact'")


def backend_of(arr: np.ndarray):
    """Infer the backend an array belongs to from its dtype."""
    return EXACT if arr.dtype == object else FLOAT
