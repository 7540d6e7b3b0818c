"""SL2(R) acting on the upper half-plane and its boundary R u {oo}.

Everything here works with exact scalars when it can (rationals and real
quadratic numbers) and degrades to floats otherwise; results carry the
exactness of their inputs.

Elliptic rotation angles use the convention -2 cos(theta) = trace, which for
the conjugated Burau generators reads -2 cos(theta) = 1 - t - 1/t.  The
literal eigenvalue angle of the matrix is pi - theta; :class:`RotationData`
reports the directly computed matrix order alongside.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Union

import numpy as np

from .burau import RealMatrix, conjugated_generators, specialize
from .errors import IncompatibleFieldError, InvariantError, PreconditionError
from .laurent import LaurentPoly, T
from .scalars import (FLOAT, QuadNum, Scalar, as_scalar, exact_sqrt,
                      format_scalar, is_exact, kind, reciprocal, sign)

HYPERBOLIC = "hyperbolic"
PARABOLIC = "parabolic"
ELLIPTIC = "elliptic"
SCALAR = "scalar"


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "oo"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()

BoundaryPoint = Union[Scalar, _Infinity]


def format_point(p) -> str:
    if p is INF:
        return "oo"
    if isinstance(p, InteriorPoint):
        return f"{format_scalar(p.re)} + i*{format_scalar(p.im)}"
    return format_scalar(p)


def point_to_json(p):
    if p is INF:
        return "oo"
    if isinstance(p, float):
        return p
    return format_scalar(p)


@dataclass(frozen=True)
class InteriorPoint:
    """A point re + i*im of the upper half-plane (im > 0)."""

    re: Scalar
    im: Scalar

    def __complex__(self):
        return complex(float(self.re), float(self.im))


@dataclass(frozen=True)
class IsometryClass:
    kind: str
    trace: Scalar
    cos_theta: Scalar | None = None  # elliptic only: -trace/2

    def __str__(self):
        return self.kind


def _check_det_one(M: RealMatrix):
    if M.size != 2:
        raise PreconditionError("Moebius maps are 2x2 matrices")
    det = M.det()
    if M.is_exact:
        if det != 1:
            raise PreconditionError(f"determinant {format_scalar(det)} != 1")
    elif abs(float(det) - 1.0) >= 1e-9:
        raise PreconditionError(f"determinant {float(det)} not within 1e-9 of 1")


def classify_isometry(M: RealMatrix) -> IsometryClass:
    """Hyperbolic / parabolic / elliptic by comparing trace^2 with 4."""
    _check_det_one(M)
    tr = M.trace()
    if M.is_exact and M.is_scalar_identity():
        return IsometryClass(SCALAR, tr)
    if not M.is_exact and np.allclose(np.abs(np.array(M.to_float())),
                                      np.eye(2), atol=1e-12, rtol=0) \
            and abs(float(M[0, 1])) < 1e-12 and abs(float(M[1, 0])) < 1e-12:
        return IsometryClass(SCALAR, tr)
    s = sign(tr * tr - 4)
    if s > 0:
        return IsometryClass(HYPERBOLIC, tr)
    if s == 0:
        return IsometryClass(PARABOLIC, tr)
    return IsometryClass(ELLIPTIC, tr, -tr / 2)


def mobius_apply(M: RealMatrix, p: BoundaryPoint) -> BoundaryPoint:
    """(a p + b) / (c p + d) on R u {oo}."""
    a, b, c, d = M[0, 0], M[0, 1], M[1, 0], M[1, 1]
    if p is INF:
        return INF if c == 0 else a / c
    num = a * p + b
    den = c * p + d
    if den == 0:
        return INF
    return num / den


def apply_complex(M: RealMatrix, z: complex) -> complex:
    a, b, c, d = (float(v) for v in (M[0, 0], M[0, 1], M[1, 0], M[1, 1]))
    return (a * z + b) / (c * z + d)


def _sqrt_any(x: Scalar, exact_ok: bool):
    """sqrt of x >= 0: exact if representable and allowed, else float."""
    if exact_ok:
        r = exact_sqrt(x)
        if r is not None:
            return r
    return math.sqrt(float(x))


def fixed_points(M: RealMatrix) -> list:
    """Fixed points: two boundary points (hyperbolic), one (parabolic),
    or a single :class:`InteriorPoint` (elliptic).

    Boundary points are the slopes of real eigenvectors, exact whenever the
    square root of trace^2 - 4 stays in the field of the entries.
    """
    cls = classify_isometry(M)
    if cls.kind == SCALAR:
        raise PreconditionError("+-identity fixes everything")
    a, b, c, d = M[0, 0], M[0, 1], M[1, 0], M[1, 1]
    disc = cls.trace * cls.trace - 4
    exact = M.is_exact

    def finish(values):
        try:
            kind(*values, *M.rows)
            return values
        except IncompatibleFieldError:
            return [float(v) if v is not INF else v for v in values]

    if cls.kind == PARABOLIC:
        if c == 0:
            return [INF]
        return finish([(a - d) / (2 * c)])
    if cls.kind == HYPERBOLIC:
        r = _sqrt_any(disc, exact)
        if isinstance(r, float):
            a, b, c, d = (float(v) for v in (a, b, c, d))
        if c == 0:
            # fixes oo and b/(d-a)
            return finish([INF, b / (d - a)])
        pts = [(a - d + r) / (2 * c), (a - d - r) / (2 * c)]
        return finish(pts)
    r = _sqrt_any(-disc, exact)
    if isinstance(r, float):
        a, b, c, d = (float(v) for v in (a, b, c, d))
    re = (a - d) / (2 * c)
    im = r / (2 * abs(c))
    try:
        kind(re, im)
    except IncompatibleFieldError:
        re, im = float(re), float(im)
    return [InteriorPoint(re, im)]


def attracting_fixed_point(M: RealMatrix):
    """For hyperbolic M: the fixed point whose eigenvalue has the larger modulus."""
    pts = fixed_points(M)
    best, best_val = None, None
    for p in pts:
        if p is INF:
            lam = M[0, 0]
        else:
            lam = M[1, 0] * p + M[1, 1]
        # eigenvector (p, 1) has eigenvalue c p + d; attracting <=> |lambda| > 1
        val = abs(lam) if not isinstance(lam, float) else abs(lam)
        if best_val is None or val > best_val:
            best, best_val = p, val
    return best


# ---------------------------------------------------------------------------
# Rotation data


def _cos_table():
    """Exact cos(2 pi k/m) for every k/m in [0, 1/2] of algebraic degree <= 2.

    Degree of cos(2 pi k/m) is phi(m)/2, so only m in {1,2,3,4,5,6,8,10,12}.
    """
    r5 = QuadNum(0, 1, 5)
    table = {
        Fraction(0): Fraction(1),
        Fraction(1, 2): Fraction(-1),
        Fraction(1, 3): Fraction(-1, 2),
        Fraction(1, 4): Fraction(0),
        Fraction(1, 5): (r5 - 1) / 4,
        Fraction(2, 5): (-r5 - 1) / 4,
        Fraction(1, 6): Fraction(1, 2),
        Fraction(1, 8): QuadNum(0, Fraction(1, 2), 2),
        Fraction(3, 8): QuadNum(0, Fraction(-1, 2), 2),
        Fraction(1, 10): (r5 + 1) / 4,
        Fraction(3, 10): (1 - r5) / 4,
        Fraction(1, 12): QuadNum(0, Fraction(1, 2), 3),
        Fraction(5, 12): QuadNum(0, Fraction(-1, 2), 3),
    }
    return table


QUADRATIC_COS_TABLE = _cos_table()

RATIONAL_ROTATION = "rational"
IRRATIONAL_ROTATION = "irrational"
UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class RotationData:
    """Rotation of an elliptic element in the -2 cos(theta) = trace convention.

    ``rotation_number`` is theta / (2 pi) as a reduced fraction k/m when the
    rotation was recognised as rational.  ``certified`` is True when the
    verdict came from exact arithmetic.  ``matrix_order`` is the least k with
    M^k = I (searched up to ``order_search``), or None.
    """

    cos_theta: Scalar
    order_class: str
    rotation_number: Fraction | None
    certified: bool
    matrix_order: int | None
    detail: str = ""

    @property
    def triangle_order(self) -> int | None:
        if self.order_class == RATIONAL_ROTATION and self.rotation_number.numerator == 1:
            return self.rotation_number.denominator
        return None


def _matrix_order(M: RealMatrix, limit: int, tol: float = 1e-9) -> int | None:
    P = M
    for k in range(1, limit + 1):
        if P.is_identity(tol):
            return k
        P = P @ M
    return None


def rotation_data(M: RealMatrix, t0: Scalar | None = None, *,
                  epsilon: float = 1e-9, n_max: int = 1000,
                  order_search: int = 24) -> RotationData:
    """Rotation data of an elliptic M; t0, if given, must agree with its trace.

    Exact inputs: cos(theta) is matched against the finite table of
    cosines of rational angles with degree <= 2 over Q; no match means the
    angle is an irrational multiple of pi (an exact scalar has degree <= 2).
    Float inputs: theta/2pi is matched by continued fractions with
    denominator <= n_max and tolerance epsilon.
    """
    cls = classify_isometry(M)
    if cls.kind != ELLIPTIC:
        raise PreconditionError(f"rotation data needs an elliptic element, got {cls.kind}")
    c = cls.cos_theta
    if t0 is not None:
        t0 = as_scalar(t0)
        expected = (t0 + reciprocal(t0) - 1) / 2
        if is_exact(t0, c) and expected != c:
            raise PreconditionError("t0 does not match the trace of M")
    order = _matrix_order(M, order_search)
    if is_exact(c):
        for frac, value in QUADRATIC_COS_TABLE.items():
            if value == c:
                return RotationData(c, RATIONAL_ROTATION, frac, True, order,
                                    f"cos(theta) = cos(2 pi * {frac}) exactly")
        return RotationData(c, IRRATIONAL_ROTATION, None, True, order,
                            "cos(theta) has degree <= 2 but matches no cos(2 pi k/m) "
                            "of degree <= 2, so theta/pi is irrational")
    cf = float(c)
    ratio = math.acos(max(-1.0, min(1.0, cf))) / (2 * math.pi)
    frac = Fraction(ratio).limit_denominator(n_max)
    err = abs(math.cos(2 * math.pi * float(frac)) - cf)
    if err < epsilon:
        return RotationData(c, RATIONAL_ROTATION, frac, False, order,
                            f"numerical match cos(2 pi * {frac}), error {err:.3g}")
    return RotationData(c, UNDETERMINED, None, False, order,
                        f"no k/m with m <= {n_max} within {epsilon:g} "
                        f"(best {frac}, error {err:.3g})")


# ---------------------------------------------------------------------------
# Symbolic commutator trace


@dataclass(frozen=True)
class CommutatorTraceReport:
    trace: LaurentPoly
    expected_times_t3: LaurentPoly
    symbolic_equal: bool
    samples: list = field(default_factory=list)  # (t, value, value > 2)


def commutator_trace_check(samples=(3, 4, 10, Fraction(27, 10),
                                    QuadNum(Fraction(5, 2), Fraction(1, 2), 5))):
    """tr([x^-1, y]) == (1 + t^2)(1 - t^2 + t^4) / t^3 as Laurent polynomials.

    Also evaluates the trace at the given exact sample points, recording
    whether it exceeds 2 there (all defaults lie above (3 + sqrt 5)/2).
    """
    x, y = conjugated_generators()
    xi = x.inverse()
    comm = xi @ y @ x @ y.inverse()
    tr = comm.trace()
    one = LaurentPoly.const(1)
    expected = (one + T ** 2) * (one - T ** 2 + T ** 4)
    equal = tr.shift(3) == expected
    rows = []
    for t0 in samples:
        v = tr(as_scalar(t0))
        rows.append((as_scalar(t0), v, v > 2))
    return CommutatorTraceReport(tr, expected, equal, rows)


# ---------------------------------------------------------------------------
# Orbits


def hyperbolic_distance(z: complex, w: complex) -> float:
    return float(np.arccosh(1 + abs(z - w) ** 2 / (2 * z.imag * w.imag)))


@dataclass(frozen=True)
class OrbitEvidence:
    """``min_distance`` is over all orbit pairs; ``min_distinct_distance`` over
    pairs of distinct points (after clustering at ``cluster_tol``), and it is
    the latter that decides ``accumulating``: a finite orbit repeats points but
    does not accumulate."""

    t0: float
    iterations: int
    min_distance: float
    min_distinct_distance: float
    distinct_points: int
    threshold: float
    accumulating: bool | None
    fixed_point_x: complex


def _window_contains(t0) -> bool:
    """(3 - sqrt 5)/2 < t0 < (3 + sqrt 5)/2, i.e. t0^2 - 3 t0 + 1 < 0."""
    return sign(t0 * t0 - 3 * t0 + 1) < 0


def orbit_accumulation_test(t0, iterations: int = 200, threshold=0.05,
                            cluster_tol: float = 1e-9) -> OrbitEvidence:
    """Iterate y on the elliptic fixed point of x and look for near-collisions.

    Works in double precision.  ``accumulating`` is True when the minimal
    pairwise hyperbolic distance falls below ``threshold``, None otherwise.
    """
    t0 = as_scalar(t0)
    if t0 == 0 or not _window_contains(t0):
        raise PreconditionError("orbit test needs t0 in the elliptic window")
    if iterations < 2:
        raise PreconditionError("need at least two orbit points")
    tf = float(t0)
    x, y = conjugated_generators()
    X = specialize(x, tf)
    Y = specialize(y, tf)
    (xf,) = fixed_points(X)
    z = complex(xf)
    a, b, c, d = (float(v) for v in (Y[0, 0], Y[0, 1], Y[1, 0], Y[1, 1]))
    pts = np.empty(iterations, dtype=complex)
    for i in range(iterations):
        pts[i] = z
        z = (a * z + b) / (c * z + d)
    diff = np.abs(pts[:, None] - pts[None, :]) ** 2
    ims = pts.imag
    arg = 1 + diff / (2 * np.outer(ims, ims))
    dist = np.arccosh(np.maximum(arg, 1.0))
    iu = np.triu_indices(iterations, k=1)
    dmin = float(dist[iu].min())
    # cluster by hyperbolic distance
    reps: list[complex] = []
    for p in pts:
        if all(hyperbolic_distance(p, q) > cluster_tol for q in reps):
            reps.append(p)
    thr = float(threshold)
    dd = [hyperbolic_distance(p, q) for p, q in combinations(reps, 2)]
    ddmin = min(dd) if dd else math.inf
    return OrbitEvidence(tf, iterations, dmin, ddmin, len(reps), thr,
                         True if ddmin < thr else None, complex(xf))


# ---------------------------------------------------------------------------
# Ping-pong / side-pairing certificates


def _key(p):
    return (1, 0) if p is INF else (0, p)


def _lt(p, q) -> bool:
    if p is INF:
        return False
    if q is INF:
        return True
    return sign(q - p) > 0


def _eq(p, q) -> bool:
    if p is INF or q is INF:
        return p is q
    return sign(q - p) == 0 if not isinstance(q - p, float) else q == p


def in_open_arc(a, b, p) -> bool:
    """p lies strictly inside the arc running in the increasing direction from a to b."""
    if _eq(p, a) or _eq(p, b):
        return False
    if _lt(a, b):
        return _lt(a, p) and _lt(p, b)
    return _lt(a, p) or _lt(p, b)


def arc_sample(a, b):
    """A point strictly inside the increasing arc from a to b."""
    if a is INF:
        return b - 1
    if b is INF:
        return a + 1
    if _lt(a, b):
        return (a + b) / 2
    return INF


def _cyclically_ordered(pts) -> bool:
    """The points run around the circle in this order, in either direction."""
    n = len(pts)

    def forward(seq):
        return all(in_open_arc(seq[i], seq[(i + 2) % n], seq[(i + 1) % n])
                   for i in range(n))

    return forward(pts) or forward(pts[::-1])


@dataclass
class PairingCheck:
    generator: str
    source_side: tuple[int, int]
    target_side: tuple[int, int]
    endpoints_ok: bool
    outer_sample_ok: bool
    inner_sample_ok: bool
    orientation_ok: bool
    images: dict

    @property
    def ok(self) -> bool:
        return (self.endpoints_ok and self.outer_sample_ok
                and self.inner_sample_ok and self.orientation_ok)


@dataclass
class PingPongCertificate:
    case_id: int
    t0: Scalar
    exactness: str
    labels: list[str]
    vertices: list
    extra_points: dict
    distinct: bool
    cyclic_order: bool
    pairings: list[PairingCheck]

    @property
    def ok(self) -> bool:
        return self.distinct and self.cyclic_order and all(p.ok for p in self.pairings)


def _arc_of_side(v, j):
    """Open arc cut off by side (v_j, v_j+1), i.e. the one avoiding other vertices."""
    n = len(v)
    a, b = v[j], v[(j + 1) % n]
    other = v[(j + 2) % n]
    return (a, b) if not in_open_arc(a, b, other) else (b, a)


def _check_pairing(name, g: RealMatrix, v, i, j) -> PairingCheck:
    n = len(v)
    src = (v[i], v[(i + 1) % n])
    tgt = (v[j], v[(j + 1) % n])
    img = [mobius_apply(g, p) for p in src]
    endpoints_ok = ((_eq(img[0], tgt[0]) and _eq(img[1], tgt[1]))
                    or (_eq(img[0], tgt[1]) and _eq(img[1], tgt[0])))
    A_i = _arc_of_side(v, i)
    A_j = _arc_of_side(v, j)
    outer = v[(i + 2) % n]
    outer_img = mobius_apply(g, outer)
    outer_ok = in_open_arc(*A_j, outer_img)
    inner = arc_sample(*A_i)
    inner_img = mobius_apply(g, inner)
    inner_ok = not (in_open_arc(*A_j, inner_img) or _eq(inner_img, A_j[0])
                    or _eq(inner_img, A_j[1]))
    orient_ok = sign(g.det()) > 0
    return PairingCheck(name, (i, (i + 1) % n), (j, (j + 1) % n), endpoints_ok,
                        outer_ok, inner_ok, orient_ok,
                        {"side": [point_to_json(p) for p in img],
                         "outer_sample": [point_to_json(outer), point_to_json(outer_img)],
                         "inner_sample": [point_to_json(inner), point_to_json(inner_img)]})


def case_regime(t0) -> int | None:
    """1 for t0 < 0, 2 for t0 = (3+sqrt5)/2, 3 for t0 > (3+sqrt5)/2, else None."""
    t0 = as_scalar(t0)
    if sign(t0) < 0:
        return 1
    if sign(t0 - 1) > 0:
        g = sign(t0 * t0 - 3 * t0 + 1)
        if g == 0:
            return 2
        if g > 0:
            return 3
    return None


def _distinct(pts) -> bool:
    return all(not _eq(p, q) for p, q in combinations(pts, 2))


def pingpong_certificate(t0, case_id: int) -> PingPongCertificate:
    """Check the side-pairing schedule of the fundamental-domain pictures.

    Case 1 (t0 < 0): ideal quadrilateral on y^-1(oo), x y^-1(oo), x(oo), oo;
    x pairs side (oo, y^-1 oo) with (x y^-1 oo, x oo) and y pairs
    (y^-1 oo, x y^-1 oo) with (x oo, oo).

    Cases 2 and 3 (t0 = (3+sqrt5)/2, t0 > (3+sqrt5)/2): quadrilateral on a
    fixed point X of x^-1, a fixed point Z of y x^-1, a fixed point Y of y and
    x^-1(Z); x^-1 fixes X and pairs its two sides, y fixes Y and pairs its two
    sides.  In Case 3 the fixed points used are found by search and recorded.

    Each pairing g: side i -> side j is certified by endpoint images, one
    sample outside the arc behind side i (must land in the arc behind side j),
    one sample inside it (must land outside), and det g > 0 (the boundary
    action preserves cyclic order, so those samples decide whole arcs).
    """
    t0 = as_scalar(t0)
    if case_id not in (1, 2, 3):
        raise PreconditionError(f"unknown case {case_id}; expected 1, 2 or 3")
    if case_regime(t0) != case_id:
        raise PreconditionError(
            f"t0 = {format_scalar(t0)} is not in the regime of case {case_id}")
    x, y = conjugated_generators()
    X = specialize(x, t0)
    Y = specialize(y, t0)
    Xi = X.inverse()
    Yi = Y.inverse()
    exactness = X.kind

    if case_id == 1:
        p = INF
        v = [mobius_apply(Yi, p), mobius_apply(X @ Yi, p), mobius_apply(X, p), p]
        alt = mobius_apply(Y @ X @ Yi, p)
        labels = ["y^-1(oo)", "x y^-1(oo)", "x(oo)", "oo"]
        extra = {"y x y^-1(oo)": alt}
        if not _eq(alt, v[2]):
            raise InvariantError("y x y^-1(oo) != x(oo): commutator does not fix oo")
        pairings = [_check_pairing("x", X, v, 3, 1), _check_pairing("y", Y, v, 0, 2)]
        cert = PingPongCertificate(1, t0, exactness, labels, v, extra,
                                   _distinct(v), _cyclically_ordered(v), pairings)
    else:
        Z_mat = Y @ Xi
        fx, fy, fz = fixed_points(Xi), fixed_points(Y), fixed_points(Z_mat)
        six = fx + fy + fz
        extra = {"fix(x^-1)": fx, "fix(y)": fy, "fix(y x^-1)": fz}
        if not _distinct(six):
            raise InvariantError("fixed points of x^-1, y, y x^-1 coincide")
        cert = None
        for a in fx:
            for b in fy:
                for c in fz:
                    v = [a, c, b, mobius_apply(Xi, c)]
                    pairings = [_check_pairing("x^-1", Xi, v, 0, 3),
                                _check_pairing("y", Y, v, 2, 1)]
                    cand = PingPongCertificate(
                        case_id, t0, kind(*v) if all(p is not INF for p in v) else exactness,
                        ["X = fix(x^-1)", "Z = fix(y x^-1)", "Y = fix(y)", "x^-1(Z)"],
                        v, extra, _distinct(v), _cyclically_ordered(v), pairings)
                    if cand.ok:
                        cert = cand
                        break
                    if cert is None:
                        cert = cand
                if cert is not None and cert.ok:
                    break
            if cert is not None and cert.ok:
                break
        if case_id == 3 and cert.ok:
            cert.extra_points["choice"] = {
                "X attracting for x^-1": _eq(cert.vertices[0], attracting_fixed_point(Xi)),
                "Y attracting for y": _eq(cert.vertices[2], attracting_fixed_point(Y)),
                "Z attracting for y x^-1": _eq(cert.vertices[1], attracting_fixed_point(Z_mat)),
            }
    if not cert.distinct:
        raise InvariantError("certificate vertices coincide")
    return cert
