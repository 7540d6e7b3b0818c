"""Exact real scalars: rationals, real quadratic numbers a + b*sqrt(d), floats.

A specialization parameter is one of

* ``Fraction``  -- exact rational,
* :class:`QuadNum` -- exact element of a real quadratic field Q(sqrt d),
* ``float``     -- numerical value.

Arithmetic between an exact kind and a float silently produces a float; that
is how an expression's exactness degrades to the weakest of its inputs.
:func:`kind` reports which level a value (or a collection of values) sits at.

>>> phi2 = QuadNum(Fraction(3, 2), Fraction(1, 2), 5)
>>> phi2 * galois_conjugate(phi2)
Fraction(1, 1)
>>> parse_scalar("q(3/2,1/2,5)") == phi2
True
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, total_ordering
from typing import Iterable, Union

from .errors import IncompatibleFieldError, PreconditionError

RATIONAL = "rational"
QUADRATIC = "quadratic"
FLOAT = "float"


SQUAREFREE_LIMIT = 10 ** 12


@lru_cache(maxsize=1024)
def is_squarefree(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % (f * f) == 0:
            return False
        f += 1
    return True


def _squarefree_decomposition(n: int) -> tuple[int, int]:
    """Write n > 0 as f**2 * d with d squarefree; return (f, d)."""
    f, d = 1, 1
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        f *= p ** (e // 2)
        d *= p ** (e % 2)
        p += 1
    return f, d * n


def _rational_sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


@total_ordering
class QuadNum:
    """The real number ``a + b*sqrt(d)`` with rational ``a``, ``b``.

    ``d`` must be a squarefree integer >= 2.  Values with ``b == 0`` are
    rationals embedded in the field; they compare and hash like the
    corresponding ``Fraction`` and may be combined with any field.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        if not is_squarefree(d):
            raise PreconditionError(f"d={d} must be a squarefree integer >= 2")
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = int(d)

    # -- coercion helpers -------------------------------------------------
    def _coerce(self, other) -> QuadNum | None:
        if isinstance(other, QuadNum):
            if other.d != self.d and self.b and other.b:
                raise IncompatibleFieldError(
                    f"cannot combine Q(sqrt {self.d}) with Q(sqrt {other.d})")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadNum(other, 0, self.d)
        return None

    def _field(self, other: QuadNum) -> int:
        return self.d if self.b else other.d

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, float):
            return float(self) + other
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadNum(self.a + o.a, self.b + o.b, self._field(o))

    __radd__ = __add__

    def __neg__(self):
        return QuadNum(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, float):
            return float(self) * other
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self._field(o)
        return QuadNum(self.a * o.a + self.b * o.b * d,
                       self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """Field norm ``x * sigma(x) = a**2 - d*b**2``."""
        return self.a * self.a - self.d * self.b * self.b

    def inverse(self) -> QuadNum:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return QuadNum(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        if isinstance(other, float):
            return float(self) / other
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        if isinstance(other, float):
            return other / float(self)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = QuadNum(1, 0, self.d)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- order -------------------------------------------------------------
    def sign(self) -> int:
        """Exact sign of a + b*sqrt(d) by rational case analysis."""
        sa, sb = _rational_sign(self.a), _rational_sign(self.b)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare a^2 with b^2 d
        lhs, rhs = self.a * self.a, self.b * self.b * self.d
        if lhs == rhs:
            return 0
        return sa if lhs > rhs else sb

    def __eq__(self, other):
        if isinstance(other, float):
            return float(self) == other
        try:
            o = self._coerce(other)
        except IncompatibleFieldError:
            return False
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __lt__(self, other):
        if isinstance(other, float):
            return float(self) < other
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __float__(self):
        return _quad_to_float(self)

    def __repr__(self):
        return f"QuadNum({self.a!r}, {self.b!r}, {self.d})"

    def __str__(self):
        return format_scalar(self)

    @property
    def is_rational(self) -> bool:
        return self.b == 0


Scalar = Union[Fraction, QuadNum, float]


def _quad_to_float(x: QuadNum, bits: int = 256) -> float:
    if x.b == 0:
        return float(x.a)
    # sqrt(d) to `bits` fractional bits with integer arithmetic, then a single
    # correctly rounded Fraction -> float conversion
    root = Fraction(math.isqrt(x.d << (2 * bits)), 1 << bits)
    return float(x.a + x.b * root)


def as_scalar(x) -> Scalar:
    """Normalize ints (and bools) to ``Fraction``; pass other kinds through."""
    if isinstance(x, (QuadNum, float, Fraction)):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not a real scalar: {x!r}")


def kind(*values) -> str:
    """Exactness level of one or more scalars (the weakest one wins).

    Nested iterables (rows of a matrix) are flattened.  Mixing quadratic
    numbers from different fields raises :class:`IncompatibleFieldError`.
    """
    level = RATIONAL
    field = None
    stack = list(values)
    while stack:
        v = stack.pop()
        if isinstance(v, (list, tuple)):
            stack.extend(v)
        elif isinstance(v, float):
            return FLOAT
        elif isinstance(v, QuadNum):
            if v.b:
                if field is not None and field != v.d:
                    raise IncompatibleFieldError(
                        f"Q(sqrt {field}) mixed with Q(sqrt {v.d})")
                field = v.d
                level = QUADRATIC
        elif not isinstance(v, (int, Fraction)):
            raise TypeError(f"not a real scalar: {v!r}")
    return level


def is_exact(*values) -> bool:
    return kind(*values) != FLOAT


def field_of(*values) -> int | None:
    """The d of the common quadratic field, or None when everything is rational."""
    for v in values:
        if isinstance(v, (list, tuple)):
            d = field_of(*v)
            if d is not None:
                return d
        elif isinstance(v, QuadNum) and v.b:
            return v.d
    return None


def sign(x: Scalar) -> int:
    if isinstance(x, QuadNum):
        return x.sign()
    return (x > 0) - (x < 0)


def compare(x: Scalar, y: Scalar) -> int:
    """-1, 0, 1 as x <, ==, > y; exact whenever both operands are exact."""
    return sign(as_scalar(x) - as_scalar(y))


def reciprocal(x: Scalar) -> Scalar:
    x = as_scalar(x)
    if x == 0:
        raise ZeroDivisionError("reciprocal of zero")
    if isinstance(x, QuadNum):
        return x.inverse()
    return 1 / x


def to_float(x: Scalar) -> float:
    return float(x)


def galois_conjugate(x: Scalar) -> Scalar:
    """The nontrivial automorphism of Q(sqrt d): a + b sqrt d -> a - b sqrt d."""
    if isinstance(x, QuadNum):
        return QuadNum(x.a, -x.b, x.d)
    if isinstance(x, float):
        raise PreconditionError("Galois conjugation needs an exact scalar")
    return as_scalar(x)


def simplify(x: Scalar) -> Scalar:
    """Collapse an embedded rational QuadNum to a Fraction."""
    if isinstance(x, QuadNum) and x.b == 0:
        return x.a
    return x


def exact_sqrt(x: Scalar) -> Scalar | None:
    """Square root of a nonnegative exact scalar, or None if it leaves Q(sqrt d).

    Rationals may produce a QuadNum in a new field; a genuine QuadNum only has
    a root when that root lies in its own field.
    """
    if isinstance(x, float):
        raise PreconditionError("exact_sqrt needs an exact scalar")
    x = simplify(as_scalar(x))
    if sign(x) < 0:
        raise PreconditionError("square root of a negative number")
    if isinstance(x, Fraction):
        p, q = x.numerator, x.denominator
        if p == 0:
            return Fraction(0)
        r = math.isqrt(p * q)
        if r * r == p * q:
            return Fraction(r, q)
        if p * q > SQUAREFREE_LIMIT:
            return None  # factoring by trial division would be too slow
        f, d = _squarefree_decomposition(p * q)
        if d == 1:
            return Fraction(f, q)
        return QuadNum(0, Fraction(f, q), d)
    # (u + v sqrt d)^2 = a + b sqrt d  with  u^2 + d v^2 = a, 2uv = b
    r = exact_sqrt(x.norm()) if x.norm() >= 0 else None
    if not isinstance(r, Fraction):
        return None
    for u2 in ((x.a + r) / 2, (x.a - r) / 2):
        u = exact_sqrt(u2) if u2 > 0 else None
        if isinstance(u, Fraction) and u:
            return QuadNum(u, x.b / (2 * u), x.d)
    return None


@dataclass(frozen=True)
class QuadraticIntegerReport:
    """Algebraic-integer data of an exact quadratic (or rational) number."""

    value: Scalar
    minimal_polynomial: tuple[Fraction, ...]  # ascending coefficients, monic
    algebraic_integer: bool
    norm: Fraction
    unit_norm_one: bool
    note: str


def quadratic_integer_report(x: Scalar) -> QuadraticIntegerReport:
    x = as_scalar(x)
    if isinstance(x, float):
        raise PreconditionError("algebraic-integer test needs an exact scalar")
    if isinstance(x, QuadNum) and x.b:
        trace = 2 * x.a
        norm = x.norm()
        poly = (norm, -trace, Fraction(1))
    else:
        a = x.a if isinstance(x, QuadNum) else x
        norm = a
        poly = (-a, Fraction(1))
    integral = all(c.denominator == 1 for c in poly)
    unit1 = integral and norm == 1 and isinstance(x, QuadNum) and bool(x.b)
    if not integral:
        note = "not an algebraic integer"
    elif not (isinstance(x, QuadNum) and x.b):
        note = "rational, not a quadratic irrationality"
    elif norm == 1:
        note = "norm 1: Galois conjugate equals the inverse"
    elif norm == -1:
        note = "norm -1: Galois conjugate equals minus the inverse"
    else:
        note = f"norm {norm}: not a unit"
    return QuadraticIntegerReport(x, poly, integral, norm, unit1, note)


def is_unit_quadratic_integer(x: Scalar) -> bool:
    """True iff x is a quadratic algebraic integer with x * sigma(x) = 1."""
    return quadratic_integer_report(x).unit_norm_one


# -- text format ------------------------------------------------------------

_QUAD = re.compile(r"q\(\s*([^,()]+?)\s*,\s*([^,()]+?)\s*,\s*(\d+)\s*\)")
_RATIONAL = re.compile(r"[+-]?\d+(?:/\d+)?")
_DECIMAL = re.compile(r"[+-]?(?:\d+\.\d*|\.\d+|\d+(?:\.\d*)?[eE][+-]?\d+)")


def _parse_rational(text: str) -> Fraction:
    if not _RATIONAL.fullmatch(text.strip()):
        raise PreconditionError(f"expected a rational p/q, got {text!r}")
    value = Fraction(text.strip())
    return value


def parse_scalar(text: str) -> Scalar:
    """Parse ``p/q``, ``q(a,b,d)`` (meaning a + b sqrt d) or a decimal literal.

    Decimal literals are the only way to obtain a float.
    """
    s = text.strip()
    m = _QUAD.fullmatch(s)
    if m:
        a, b = _parse_rational(m.group(1)), _parse_rational(m.group(2))
        return QuadNum(a, b, int(m.group(3)))
    if _RATIONAL.fullmatch(s):
        try:
            return Fraction(s)
        except ZeroDivisionError:
            raise PreconditionError(f"zero denominator in {text!r}") from None
    if _DECIMAL.fullmatch(s):
        return float(s)
    raise PreconditionError(
        f"cannot parse scalar {text!r}; use p/q, q(a,b,d) or a decimal")


def _fmt_fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_scalar(x: Scalar) -> str:
    """Text form accepted by :func:`parse_scalar`; rational QuadNums print as p/q."""
    if isinstance(x, QuadNum) and x.b:
        return f"q({_fmt_fraction(x.a)},{_fmt_fraction(x.b)},{x.d})"
    if isinstance(x, float):
        return repr(x)
    if isinstance(x, QuadNum):
        return _fmt_fraction(x.a)
    return _fmt_fraction(Fraction(x))


def scalar_to_json(x: Scalar):
    """JSON value for a scalar: exact kinds as strings, floats as numbers."""
    if isinstance(x, float):
        return x
    return format_scalar(x)


def all_exact(values: Iterable) -> bool:
    return kind(*values) != FLOAT
