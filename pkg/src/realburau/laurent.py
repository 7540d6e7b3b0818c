"""Integer Laurent polynomials, matrices over them, and real-root isolation.

``LaurentPoly`` is the coefficient ring Z[t, 1/t] of the Burau matrices; all
coefficients are Python ints, so nothing overflows.  ``IntPoly`` is an
ordinary integer polynomial (lowest degree 0) used for root work, with
Sturm-sequence isolation of its real roots into :class:`RootInterval` s.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import PreconditionError


class LaurentPoly:
    """Sparse-looking, densely stored element of Z[t, 1/t].

    Stored as ``low`` (lowest degree) plus a tuple of coefficients from that
    degree upwards with no zero at either end.  Immutable and hashable.
    """

    __slots__ = ("low", "coeffs")

    def __init__(self, coeffs: dict[int, int] | None = None):
        coeffs = {k: v for k, v in (coeffs or {}).items() if v}
        if not coeffs:
            self.low, self.coeffs = 0, ()
            return
        lo, hi = min(coeffs), max(coeffs)
        self.low = lo
        self.coeffs = tuple(coeffs.get(k, 0) for k in range(lo, hi + 1))

    @classmethod
    def _raw(cls, low: int, coeffs: Sequence[int]) -> LaurentPoly:
        start, end = 0, len(coeffs)
        while start < end and coeffs[start] == 0:
            start += 1
        while end > start and coeffs[end - 1] == 0:
            end -= 1
        p = cls.__new__(cls)
        if start == end:
            p.low, p.coeffs = 0, ()
        else:
            p.low, p.coeffs = low + start, tuple(coeffs[start:end])
        return p

    @classmethod
    def monomial(cls, c: int, k: int) -> LaurentPoly:
        return cls._raw(k, (c,))

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls._raw(0, (c,))

    # -- structure ---------------------------------------------------------
    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def as_dict(self) -> dict[int, int]:
        return {self.low + i: c for i, c in enumerate(self.coeffs) if c}

    def __getitem__(self, k: int) -> int:
        i = k - self.low
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def is_monomial_unit(self) -> bool:
        """True for the units of Z[t,1/t], i.e. +-t^k."""
        return len(self.coeffs) == 1 and abs(self.coeffs[0]) == 1

    # -- ring operations -----------------------------------------------------
    def __add__(self, other):
        other = _lp(other)
        if other is NotImplemented:
            return other
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.low, other.low)
        hi = max(self.high, other.high)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.low - lo + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.low - lo + i] += c
        return LaurentPoly._raw(lo, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.low, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = _lp(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _lp(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return ZERO
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return LaurentPoly._raw(self.low + other.low, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial_unit():
                raise PreconditionError("only units +-t^k have Laurent inverses")
            return self.unit_inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def unit_inverse(self) -> LaurentPoly:
        if not self.is_monomial_unit():
            raise PreconditionError(f"{self} is not a unit of Z[t, 1/t]")
        return LaurentPoly._raw(-self.low, self.coeffs)

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by t^k."""
        return LaurentPoly._raw(self.low + k, self.coeffs)

    def bar(self) -> LaurentPoly:
        """Substitute t -> 1/t."""
        return LaurentPoly._raw(-self.high, self.coeffs[::-1])

    def substitute_power(self, m: int) -> LaurentPoly:
        """Substitute t -> t^m (m >= 1), e.g. t = s^2 with m = 2."""
        return LaurentPoly({m * k: c for k, c in self.as_dict().items()})

    def __call__(self, x):
        return evaluate(self, x)

    # -- comparison / printing -------------------------------------------------
    def __eq__(self, other):
        other = _lp(other)
        if other is NotImplemented:
            return other
        return self.low == other.low and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.low, self.coeffs))

    def __repr__(self):
        return f"LaurentPoly({self.as_dict()!r})"

    def __str__(self):
        return self.format()

    def format(self, var: str = "t") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k, c in sorted(self.as_dict().items()):
            mono = var if k == 1 else f"{var}^{k}"
            if k == 0:
                body = str(abs(c))
            else:
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)


def _lp(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    return NotImplemented


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
T = LaurentPoly.monomial(1, 1)
T_INV = LaurentPoly.monomial(1, -1)


def laurent(*terms: tuple[int, int]) -> LaurentPoly:
    """Build from ``(coefficient, degree)`` pairs, e.g. laurent((-1, 1), (1, 0))."""
    out: dict[int, int] = {}
    for c, k in terms:
        out[k] = out.get(k, 0) + c
    return LaurentPoly(out)


def evaluate(p: LaurentPoly, x):
    """Evaluate at a scalar x != 0 by Horner's rule on each side of degree 0."""
    if p.is_zero():
        return 0 * x
    inv = None
    if p.low < 0:
        if x == 0:
            raise ZeroDivisionError("Laurent polynomial with negative powers at 0")
        inv = 1 / x
    acc = 0 * x
    # nonnegative part, descending
    for k in range(p.high, max(p.low, 0) - 1, -1):
        acc = acc * x + p[k]
    if p.low > 0:
        acc = acc * x ** p.low
    if p.low < 0:
        neg = 0 * x
        for k in range(p.low, 0):
            neg = neg * inv + p[k]
        neg = neg * inv
        acc = acc + neg
    return acc


# ---------------------------------------------------------------------------
# Generic small square matrices


class SquareMatrix:
    """Square matrix over any commutative ring whose elements support + - *.

    Sizes in this package are 2 and 3, so determinants and adjugates are
    computed by cofactor expansion.
    """

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise PreconditionError("matrix must be square and nonempty")
        self.rows = rows

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __iter__(self):
        return iter(self.rows)

    def _new(self, rows):
        return type(self)(rows)

    def __matmul__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        n = self.size
        if other.size != n:
            raise PreconditionError("matrix size mismatch")
        cols = list(zip(*other.rows))
        rows = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = r[0] * c[0]
                for k in range(1, n):
                    acc = acc + r[k] * c[k]
                row.append(acc)
            rows.append(row)
        return self._new(rows)

    __mul__ = __matmul__

    def __add__(self, other):
        return self._new([[a + b for a, b in zip(r, s)]
                          for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return self._new([[a - b for a, b in zip(r, s)]
                          for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return self._new([[-a for a in r] for r in self.rows])

    def scale(self, c):
        return self._new([[c * a for a in r] for r in self.rows])

    def map(self, f):
        return self._new([[f(a) for a in r] for r in self.rows])

    def transpose(self):
        return self._new(zip(*self.rows))

    @property
    def T(self):
        return self.transpose()

    def trace(self):
        acc = self.rows[0][0]
        for i in range(1, self.size):
            acc = acc + self.rows[i][i]
        return acc

    def det(self):
        m = self.rows
        if self.size == 1:
            return m[0][0]
        if self.size == 2:
            return m[0][0] * m[1][1] - m[0][1] * m[1][0]
        if self.size == 3:
            return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                    - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                    + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
        raise PreconditionError("determinant only implemented up to 3x3")

    def adjugate(self):
        m = self.rows
        n = self.size
        if n == 2:
            return self._new([[m[1][1], -m[0][1]], [-m[1][0], m[0][0]]])
        if n != 3:
            raise PreconditionError("adjugate only implemented for 2x2 and 3x3")

        def minor(i, j):
            r = [k for k in range(3) if k != i]
            c = [k for k in range(3) if k != j]
            return m[r[0]][c[0]] * m[r[1]][c[1]] - m[r[0]][c[1]] * m[r[1]][c[0]]

        cof = [[minor(i, j) if (i + j) % 2 == 0 else -minor(i, j)
                for j in range(3)] for i in range(3)]
        return self._new(zip(*cof))

    def __eq__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"{type(self).__name__}({[list(r) for r in self.rows]!r})"


class LaurentMatrix(SquareMatrix):
    """Square matrix with :class:`LaurentPoly` entries."""

    __slots__ = ()

    def __init__(self, rows):
        super().__init__([[_coerce_entry(a) for a in r] for r in rows])

    @classmethod
    def identity(cls, n: int) -> LaurentMatrix:
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    def is_identity(self) -> bool:
        return self == LaurentMatrix.identity(self.size)

    def bar(self) -> LaurentMatrix:
        return self.map(LaurentPoly.bar)

    def star(self) -> LaurentMatrix:
        """M* = M(1/t)^T."""
        return self.bar().transpose()

    def inverse(self) -> LaurentMatrix:
        d = self.det()
        if not d.is_monomial_unit():
            raise PreconditionError(
                f"determinant {d} is not a unit +-t^k; no inverse over Z[t,1/t]")
        u = d.unit_inverse()
        return self.adjugate().scale(u)

    def __pow__(self, k: int) -> LaurentMatrix:
        if k < 0:
            return self.inverse() ** (-k)
        result, base = LaurentMatrix.identity(self.size), self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def evaluate(self, x):
        return [[evaluate(a, x) for a in r] for r in self.rows]

    def format(self, var: str = "t") -> list[list[str]]:
        return [[a.format(var) for a in r] for r in self.rows]


def _coerce_entry(a) -> LaurentPoly:
    if isinstance(a, LaurentPoly):
        return a
    if isinstance(a, int):
        return LaurentPoly.const(a)
    raise TypeError(f"Laurent matrix entries must be LaurentPoly or int, got {a!r}")


# ---------------------------------------------------------------------------
# Ordinary integer polynomials and real roots


class IntPoly:
    """Integer polynomial with ascending coefficients ``c[0] + c[1] t + ...``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int]):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)!r})"

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            body = str(abs(c)) if k == 0 else f"{abs(c)}*t^{k}"
            sgn = "-" if c < 0 else "+"
            terms.append(body if not terms and c > 0 else
                         (f"-{body}" if not terms else f"{sgn} {body}"))
        return " ".join(terms)

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive(self) -> IntPoly:
        """Divide by the content and make the leading coefficient positive."""
        if self.is_zero():
            return self
        g = self.content()
        if self.leading < 0:
            g = -g
        return IntPoly([c // g for c in self.coeffs])

    def derivative(self) -> IntPoly:
        return IntPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def to_laurent(self) -> LaurentPoly:
        return LaurentPoly._raw(0, self.coeffs)

    def __mul__(self, other: IntPoly) -> IntPoly:
        return IntPoly(_dense(self.to_laurent() * other.to_laurent()))


def _dense(p: LaurentPoly) -> list[int]:
    if p.is_zero():
        return []
    return [0] * p.low + list(p.coeffs)


# Rational-coefficient helpers: polynomials as lists of Fractions, ascending.

def _qstrip(c: list[Fraction]) -> list[Fraction]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _qdivmod(a: Sequence, b: Sequence) -> tuple[list[Fraction], list[Fraction]]:
    a = [Fraction(x) for x in a]
    b = _qstrip([Fraction(x) for x in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    _qstrip(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        f = a[-1] / lead
        q[shift] = f
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        a.pop()
        _qstrip(a)
    return q, a


def _to_primitive_int(c: Sequence[Fraction], keep_sign: bool = True) -> IntPoly:
    """Scale a rational polynomial by a positive constant to a primitive IntPoly."""
    c = [Fraction(x) for x in c]
    if not any(c):
        return IntPoly([])
    den = 1
    for x in c:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in c]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    if not keep_sign and ints[-1] < 0:
        ints = [-x for x in ints]
    return IntPoly(ints)


def poly_gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    """Primitive gcd over Q with positive leading coefficient."""
    a, b = list(f.coeffs), list(g.coeffs)
    while b and any(b):
        _, r = _qdivmod(a, b)
        a, b = b, r
    return _to_primitive_int(a, keep_sign=False)


def poly_divmod(f: IntPoly, g: IntPoly) -> tuple[list[Fraction], list[Fraction]]:
    return _qdivmod(f.coeffs, g.coeffs)


def divides(f: IntPoly, g: IntPoly) -> bool:
    """True iff f divides g exactly over Q."""
    if f.is_zero():
        raise PreconditionError("divisibility by the zero polynomial")
    if g.is_zero():
        return True
    _, r = _qdivmod(g.coeffs, f.coeffs)
    return not r


def squarefree_part(f: IntPoly) -> IntPoly:
    if f.degree <= 0:
        return f.primitive()
    g = poly_gcd(f, f.derivative())
    q, r = _qdivmod(f.coeffs, g.coeffs)
    assert not r
    return _to_primitive_int(q, keep_sign=False)


def normalize_to_intpoly(p: LaurentPoly) -> tuple[IntPoly, int]:
    """Write p = q(t) * t**shift with q(0) != 0; integer content is kept."""
    if p.is_zero():
        raise PreconditionError("cannot normalize the zero polynomial")
    return IntPoly(p.coeffs), p.low


def sturm_sequence(f: IntPoly) -> list[IntPoly]:
    """Sturm chain f, f', -rem(...), each scaled by a positive constant."""
    seq = [f, f.derivative()]
    while not seq[-1].is_zero() and seq[-1].degree > 0:
        _, r = _qdivmod(seq[-2].coeffs, seq[-1].coeffs)
        if not r:
            break
        seq.append(_to_primitive_int([-x for x in r]))
    return [p for p in seq if not p.is_zero()]


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def sign_variations(seq: Sequence[IntPoly], x: Fraction | None,
                    at: str = "finite") -> int:
    """Sign changes of the chain at x, or at +-infinity via ``at='+inf'/'-inf'``."""
    if at == "+inf":
        signs = [_sign(p.leading) for p in seq]
    elif at == "-inf":
        signs = [_sign(p.leading) * (-1) ** p.degree for p in seq]
    else:
        signs = [_sign(p(x)) for p in seq]
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(f: IntPoly, lo: Fraction | None = None,
                     hi: Fraction | None = None) -> int:
    """Number of distinct real roots in (lo, hi]; None means infinite."""
    if f.is_zero():
        raise PreconditionError("zero polynomial has infinitely many roots")
    seq = sturm_sequence(squarefree_part(f))
    va = sign_variations(seq, None, "-inf") if lo is None else sign_variations(seq, lo)
    vb = sign_variations(seq, None, "+inf") if hi is None else sign_variations(seq, hi)
    return va - vb


@dataclass(frozen=True)
class RootInterval:
    """An open interval (lo, hi) isolating exactly one real root of ``polynomial``.

    When ``lo == hi`` the root is the rational number ``lo`` itself.
    ``polynomial`` is squarefree, so its sign differs at the two endpoints.
    """

    lo: Fraction
    hi: Fraction
    polynomial: IntPoly

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __float__(self) -> float:
        return float(self.midpoint)

    def refine(self, width) -> RootInterval:
        """Bisect until ``hi - lo <= width``; exact rational hits collapse the interval."""
        width = Fraction(width)
        if width <= 0:
            raise PreconditionError("refinement width must be positive")
        lo, hi, f = self.lo, self.hi, self.polynomial
        if lo == hi:
            return self
        slo = _sign(f(lo))
        while hi - lo > width:
            mid = (lo + hi) / 2
            sm = _sign(f(mid))
            if sm == 0:
                return RootInterval(mid, mid, f)
            if sm == slo:
                lo = mid
            else:
                hi = mid
        return RootInterval(lo, hi, f)

    def compare_point(self, x: Fraction) -> int:
        """-1 / 1 if the root is certainly below / above x, 0 if it equals x.

        Refines as needed; never terminates wrongly because x is rational and
        the root is either x itself or separated from it.
        """
        x = Fraction(x)
        iv = self
        while True:
            if iv.is_exact:
                return _sign(iv.lo - x)
            if x <= iv.lo:
                return 1
            if x >= iv.hi:
                return -1
            if iv.polynomial(x) == 0:
                return 0
            iv = iv.refine(iv.width / 2)


def cauchy_bound(f: IntPoly) -> Fraction:
    lead = abs(f.leading)
    return 1 + max(Fraction(abs(c), lead) for c in f.coeffs[:-1]) if f.degree > 0 else Fraction(1)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _rational_root_in(f: IntPoly, lo: Fraction, hi: Fraction) -> Fraction | None:
    """A rational root of f in the open interval (lo, hi), if any.

    Relies on the interval being narrower than 1/|lead|, so for every
    admissible denominator q at most one candidate p/q lies inside.
    """
    lead = abs(f.leading)
    if lead > 10 ** 6:
        return None
    for q in _divisors(lead):
        p = (lo * q).__floor__() + 1
        cand = Fraction(p, q)
        if lo < cand < hi and f(cand) == 0:
            return cand
    return None


def isolate_real_roots(q: IntPoly) -> list[RootInterval]:
    """All real roots of q, isolated by Sturm bisection, sorted ascending.

    Rational roots come back as degenerate intervals ``lo == hi``.
    """
    if q.is_zero():
        raise PreconditionError("zero polynomial has infinitely many roots")
    f = squarefree_part(q)
    if f.degree <= 0:
        return []
    seq = sturm_sequence(f)
    bound = cauchy_bound(f)

    def var(x):
        return sign_variations(seq, x)

    out: list[RootInterval] = []
    # open intervals whose endpoints are not roots; V(lo) - V(hi) counts roots inside
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        n = var(lo) - var(hi)
        if n == 0:
            continue
        if n == 1:
            out.append(RootInterval(lo, hi, f))
            continue
        mid = (lo + hi) / 2
        if f(mid) != 0:
            stack.extend([(lo, mid), (mid, hi)])
            continue
        out.append(RootInterval(mid, mid, f))
        # step off the rational root on both sides without skipping a neighbour
        delta = (hi - lo) / 4
        while (f(mid - delta) == 0 or f(mid + delta) == 0
               or var(mid - delta) - var(mid + delta) != 1):
            delta /= 2
        stack.extend([(lo, mid - delta), (mid + delta, hi)])
    out.sort(key=lambda r: r.lo)

    lead = abs(f.leading)
    final = []
    for r in out:
        if not r.is_exact:
            narrow = r.refine(Fraction(1, 2 * lead))
            if narrow.is_exact:
                r = narrow
            else:
                cand = _rational_root_in(f, narrow.lo, narrow.hi)
                r = RootInterval(cand, cand, f) if cand is not None else narrow
        final.append(r)
    return final


def random_laurent(rng: random.Random, max_terms: int = 4, span: int = 3,
                   coeff: int = 5) -> LaurentPoly:
    """Small random Laurent polynomial, for property tests."""
    return LaurentPoly({rng.randint(-span, span): rng.randint(-coeff, coeff)
                        for _ in range(rng.randint(0, max_terms))})
