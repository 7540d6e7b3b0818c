"""Reduced Burau representations of B3 and B4 over Z[t, 1/t].

Generators follow the usual reduced convention: ``sigma_i`` acts as the
identity except on row ``i``, which reads ``(.., t, -t, 1, ..)`` centred on
the diagonal.  For B3 this gives::

    sigma_1 -> [[-t, 1], [0, 1]]      sigma_2 -> [[1, 0], [t, -t]]

Squier's form J (with M* J M = J for every image M, M* = M(1/t)^T) is not
hard-coded: :func:`derive_squier_form` solves the defining linear system in
the auxiliary variable s with t = s^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .braid import BraidWord
from .errors import InvariantError, PreconditionError, ZeroSpecializationError
from .laurent import ONE, ZERO, LaurentMatrix, LaurentPoly, SquareMatrix, T, evaluate
from .scalars import (FLOAT, Scalar, as_scalar, format_scalar, galois_conjugate,
                      kind)

NEG_T = -T
T_INV = LaurentPoly.monomial(1, -1)


@lru_cache(maxsize=None)
def generator_matrix(index: int, strands: int) -> LaurentMatrix:
    """rho_n(sigma_index) as an (n-1) x (n-1) Laurent matrix."""
    if strands not in (3, 4):
        raise PreconditionError(f"Burau images only for B3 and B4, not B{strands}")
    if not 1 <= index < strands:
        raise PreconditionError(f"no generator sigma_{index} in B{strands}")
    m = strands - 1
    r = index - 1
    rows = [[ONE if i == j else ZERO for j in range(m)] for i in range(m)]
    if r >= 1:
        rows[r][r - 1] = T
    rows[r][r] = NEG_T
    if r + 1 < m:
        rows[r][r + 1] = ONE
    return LaurentMatrix(rows)


@lru_cache(maxsize=None)
def _generator_power(index: int, strands: int, power: int) -> LaurentMatrix:
    return generator_matrix(index, strands) ** power


def burau(w: BraidWord) -> LaurentMatrix:
    """The Laurent matrix rho_n(w), n = w.strands."""
    result = LaurentMatrix.identity(w.strands - 1)
    for index, power in w.letters:
        result = result @ _generator_power(index, w.strands, power)
    return result


IOTA = LaurentMatrix([[1, 0], [0, -1]])


def conjugated_generators() -> tuple[LaurentMatrix, LaurentMatrix]:
    """The pair (x, y) = (iota rho(a2) iota, iota rho(a1) iota), iota = diag(1, -1).

    Both have determinant 1 and trace -1/t + 1 - t.
    """
    from .braid import named_word

    a1 = burau(named_word("a1", 3))
    a2 = burau(named_word("a2", 3))
    # iota is its own inverse
    return IOTA @ a2 @ IOTA, IOTA @ a1 @ IOTA


# ---------------------------------------------------------------------------
# Squier's form


def to_s(M: LaurentMatrix) -> LaurentMatrix:
    """Rewrite a matrix in t as a matrix in s via t = s^2."""
    return M.map(lambda p: p.substitute_power(2))


@dataclass(frozen=True)
class SquierForm:
    """A nonsingular J over Z[s, 1/s] with star(rho(w)) J rho(w) = J, t = s^2.

    ``solution_dimension`` is the rational dimension of the solution space
    found for the ansatz, which fixed ``J`` as its simplest nonsingular member.
    """

    size: int
    J: LaurentMatrix
    ansatz: str
    degree_window: int
    solution_dimension: int

    def t_form(self) -> tuple[int, LaurentMatrix] | None:
        """Split J = s^k * J_t(t) with J_t a matrix in t, when all s-degrees share a parity.

        Since the defining relation is linear in J, J_t satisfies it as well;
        J_t is what gets evaluated at a real t0 without needing sqrt(t0).
        """
        parities = {k % 2 for row in self.J for p in row for k in p.as_dict()}
        if len(parities) != 1:
            return None
        k = parities.pop()
        Jt = self.J.map(lambda p: LaurentPoly(
            {(d - k) // 2: c for d, c in p.as_dict().items()}))
        return k, Jt

    def format(self) -> list[list[str]]:
        return self.J.format("s")


def _rref_nullspace(rows: list[list[int]], ncols: int) -> list[list[Fraction]]:
    """Basis of the rational nullspace, one vector per free column (ascending)."""
    A = [[Fraction(x) for x in r] for r in rows if any(r)]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * ncols
        v[fcol] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -A[i][fcol]
        basis.append(v)
    return basis


def _primitive_integer(v: list[Fraction]) -> list[int]:
    from math import gcd, lcm

    den = 1
    for x in v:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    first = next(x for x in ints if x)
    return [-x for x in ints] if first < 0 else ints


def _solve_squier(strands: int, window: int, tridiagonal: bool):
    m = strands - 1
    gens = [to_s(generator_matrix(i, strands)) for i in range(1, strands)]
    cells = [(i, j) for i in range(m) for j in range(m)
             if not tridiagonal or abs(i - j) <= 1]
    variables = [(i, j, k) for (i, j) in cells for k in range(-window, window + 1)]

    def basis_matrix(i, j, k):
        rows = [[ZERO] * m for _ in range(m)]
        rows[i][j] = LaurentPoly.monomial(1, k)
        return LaurentMatrix(rows)

    # columns of the linear map J -> (R* J R - J) for every generator R
    columns = []
    for (i, j, k) in variables:
        E = basis_matrix(i, j, k)
        col = {}
        for g, R in enumerate(gens):
            img = R.star() @ E @ R - E
            for a in range(m):
                for b in range(m):
                    for deg, c in img[a, b].as_dict().items():
                        col[(g, a, b, deg)] = c
        columns.append(col)
    keys = sorted({key for col in columns for key in col})
    rows = [[col.get(key, 0) for col in columns] for key in keys]
    basis = _rref_nullspace(rows, len(variables))

    def build(vec):
        mat = [[ZERO] * m for _ in range(m)]
        for (i, j, k), c in zip(variables, vec):
            if c:
                mat[i][j] = mat[i][j] + LaurentPoly.monomial(c, k)
        return LaurentMatrix(mat)

    for vec in basis:
        J = build(_primitive_integer(vec))
        if not J.det().is_zero():
            return J, len(basis)
    return None, len(basis)


@lru_cache(maxsize=None)
def derive_squier_form(strands: int, max_window: int = 4) -> SquierForm:
    """Solve star(R) J R = J for all generators R, smallest degree window first.

    A tridiagonal ansatz is tried before a full one.  Among the nullspace basis
    vectors (ordered by their free coordinate) the first giving a nonsingular J
    is chosen and scaled to a primitive integer vector with positive leading
    entry.
    """
    if strands not in (3, 4):
        raise PreconditionError(f"Squier form only for B3 and B4, not B{strands}")
    for tridiagonal in (True, False):
        for window in range(0, max_window + 1):
            J, dim = _solve_squier(strands, window, tridiagonal)
            if J is not None:
                form = SquierForm(strands - 1, J,
                                  "tridiagonal" if tridiagonal else "full",
                                  window, dim)
                for i in range(1, strands):
                    if not squier_relation_holds(form, generator_matrix(i, strands)):
                        raise InvariantError("derived Squier form fails verification")
                return form
    raise InvariantError(f"no Squier form found for B{strands}")


def squier_relation_holds(form: SquierForm, M: LaurentMatrix) -> bool:
    """star(M) J M == J, computed in s."""
    Ms = to_s(M)
    return Ms.star() @ form.J @ Ms == form.J


def verify_squier(w: BraidWord) -> bool:
    return squier_relation_holds(derive_squier_form(w.strands), burau(w))


def verify_duality(w: BraidWord) -> bool:
    """M(1/t) is conjugate to (M^-1)^T by J^T, for M = rho(w).

    From M* J M = J one gets M(1/t) = (J^T)^-1 (M^-1)^T J^T; the identity is
    checked in the cleared form J^T M(1/t) = (M^-1)^T J^T, exactly in s.
    """
    J = derive_squier_form(w.strands).J
    Ms = to_s(burau(w))
    JT = J.transpose()
    return JT @ Ms.bar() == Ms.inverse().transpose() @ JT


# ---------------------------------------------------------------------------
# Specialization


class RealMatrix(SquareMatrix):
    """Square matrix of real scalars (Fraction, QuadNum or float)."""

    __slots__ = ()

    def __init__(self, rows):
        super().__init__([[as_scalar(a) for a in r] for r in rows])

    @classmethod
    def identity(cls, n: int) -> RealMatrix:
        return cls([[Fraction(i == j) for j in range(n)] for i in range(n)])

    @property
    def kind(self) -> str:
        return kind(*self.rows)

    @property
    def is_exact(self) -> bool:
        return self.kind != FLOAT

    def inverse(self) -> RealMatrix:
        d = self.det()
        if d == 0:
            raise PreconditionError("singular matrix")
        inv = 1 / d
        return self.adjugate().scale(inv)

    def is_identity(self, tol: float = 0.0) -> bool:
        n = self.size
        if self.is_exact:
            return all(self[i, j] == (1 if i == j else 0)
                       for i in range(n) for j in range(n))
        return all(abs(float(self[i, j]) - (1.0 if i == j else 0.0)) <= tol
                   for i in range(n) for j in range(n))

    def is_scalar_identity(self) -> int:
        """1 if M = I, -1 if M = -I, else 0 (exact kinds only)."""
        for s in (1, -1):
            if all(self[i, j] == (s if i == j else 0)
                   for i in range(self.size) for j in range(self.size)):
                return s
        return 0

    def conjugate(self) -> RealMatrix:
        """Entrywise Galois conjugation a + b sqrt d -> a - b sqrt d."""
        return self.map(galois_conjugate)

    def __pow__(self, k: int) -> RealMatrix:
        if k < 0:
            return self.inverse() ** (-k)
        result, base = RealMatrix.identity(self.size), self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def format(self) -> list[list[str]]:
        return [[format_scalar(a) for a in r] for r in self.rows]

    def to_float(self) -> list[list[float]]:
        return [[float(a) for a in r] for r in self.rows]


def specialize(M: LaurentMatrix, t0: Scalar) -> RealMatrix:
    """Evaluate every entry at t = t0 (t0 != 0)."""
    t0 = as_scalar(t0)
    if t0 == 0:
        raise ZeroSpecializationError(
            "t0 = 0 is not a specialization: det rho(sigma_i) = -t vanishes")
    return RealMatrix([[evaluate(a, t0) for a in r] for r in M.rows])


def specialize_word(w: BraidWord, t0: Scalar) -> RealMatrix:
    return specialize(burau(w), t0)


def evaluate_t_form(form: SquierForm, t0: Scalar) -> RealMatrix:
    """J_t(t0) for the parity-reduced form; the scalar s^k factor is dropped."""
    split = form.t_form()
    if split is None:
        raise PreconditionError("Squier form mixes s-parities; cannot evaluate in t")
    return specialize(split[1], t0)
