"""Discreteness and faithfulness of real specializations of the B3 Burau image.

The real line splits at 0, -1, 1 and the two roots (3 -+ sqrt 5)/2 of
t^2 - 3t + 1.  Outside the window between those roots the conjugated
generators x, y are hyperbolic or parabolic and the image is discrete and
faithful; inside it x is elliptic and the answer depends on the rotation
angle of x.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .burau import conjugated_generators, specialize
from .errors import PreconditionError
from .moebius import (ELLIPTIC, HYPERBOLIC, PARABOLIC, RATIONAL_ROTATION,
                      classify_isometry, rotation_data)
from .scalars import (FLOAT, Scalar, as_scalar, format_scalar, kind, reciprocal,
                      scalar_to_json, sign)

NEGATIVE_HYPERBOLIC = "NegativeHyperbolic"
POSITIVE_OUTER = "PositiveOuter"
PARABOLIC_BOUNDARY = "ParabolicBoundary"
ELLIPTIC_WINDOW = "EllipticWindow"
EXCLUDED_ZERO = "ExcludedZero"
MINUS_ONE = "MinusOne"
ONE = "One"

YES = "Yes"
NO = "No"
NUMERICAL_NO = "NumericalNo"
NUMERICAL_UNDETERMINED = "NumericalUndetermined"
UNDETERMINED = "Undetermined"

CERTIFIED = "Certified"
NUMERICAL = "Numerical"

BOUNDARY_TOL = 1e-12
_BOUNDARIES = (0.0, -1.0, 1.0, (3 - 5 ** 0.5) / 2, (3 + 5 ** 0.5) / 2)


def triangle_group(n: int) -> str:
    return f"TriangleGroup({n})"


def triangle_order_of(discrete: str | None) -> int | None:
    if discrete and discrete.startswith("TriangleGroup("):
        return int(discrete[len("TriangleGroup("):-1])
    return None


@dataclass(frozen=True)
class Evidence:
    name: str
    status: str
    detail: str

    def to_json(self):
        return [self.name, self.status, self.detail]


@dataclass(frozen=True)
class SpecializationVerdict:
    t_input: Scalar
    regime: str
    discrete: str | None
    faithful: str | None
    exactness: str
    evidence: list[Evidence] = field(default_factory=list)

    @property
    def triangle_order(self) -> int | None:
        return triangle_order_of(self.discrete)

    def to_json(self) -> dict:
        return {
            "t_input": scalar_to_json(self.t_input),
            "regime": self.regime,
            "discrete": self.discrete,
            "faithful": self.faithful,
            "exactness": self.exactness,
            "evidence": [e.to_json() for e in self.evidence],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def regime_of(t0: Scalar) -> str:
    """Exact regime of t0; floats are classified by their exact binary value."""
    if isinstance(t0, float):
        t0 = Fraction(t0)
    if t0 == 0:
        return EXCLUDED_ZERO
    if t0 == -1:
        return MINUS_ONE
    if t0 == 1:
        return ONE
    if sign(t0) < 0:
        return NEGATIVE_HYPERBOLIC
    g = sign(t0 * t0 - 3 * t0 + 1)
    if g == 0:
        return PARABOLIC_BOUNDARY
    return POSITIVE_OUTER if g > 0 else ELLIPTIC_WINDOW


def _near_boundary(t0: float) -> bool:
    return any(abs(t0 - b) < BOUNDARY_TOL for b in _BOUNDARIES)


_EXPECTED_CLASS = {
    NEGATIVE_HYPERBOLIC: HYPERBOLIC,
    MINUS_ONE: HYPERBOLIC,
    POSITIVE_OUTER: HYPERBOLIC,
    PARABOLIC_BOUNDARY: PARABOLIC,
    ELLIPTIC_WINDOW: ELLIPTIC,
    ONE: ELLIPTIC,
}


def classify(t0, epsilon: float = 1e-9, n_max: int = 1000) -> SpecializationVerdict:
    """Verdict for the specialization t -> t0 of the B3 Burau representation.

    t0 = 0 is not an error here: it yields regime ExcludedZero with null
    discrete/faithful fields, since -t = det rho(sigma_i) vanishes there.
    """
    t0 = as_scalar(t0)
    exact = kind(t0) != FLOAT
    exactness = CERTIFIED if exact else NUMERICAL
    regime = regime_of(t0)
    ev: list[Evidence] = []
    if regime == EXCLUDED_ZERO:
        ev.append(Evidence("specialization", "undefined",
                           "det rho(sigma_i) = -t vanishes at t = 0"))
        return SpecializationVerdict(t0, regime, None, None, exactness, ev)

    x, _ = conjugated_generators()
    X = specialize(x, t0)
    cls = classify_isometry(X)
    expected = _EXPECTED_CLASS[regime]
    ev.append(Evidence("trace class", cls.kind,
                       f"tr x = {format_scalar(cls.trace)}; expected {expected}"))
    partner = regime_of(reciprocal(t0))
    ev.append(Evidence("duality partner", partner,
                       f"1/t0 = {format_scalar(reciprocal(t0))}"))

    if not exact and _near_boundary(float(t0)):
        ev.append(Evidence("boundary", "too close",
                           f"within {BOUNDARY_TOL:g} of a regime boundary"))
        return SpecializationVerdict(t0, regime, NUMERICAL_UNDETERMINED, UNDETERMINED,
                                     exactness, ev)
    if cls.kind != expected:
        # a float can land on the wrong side of the trace test only near a boundary
        ev.append(Evidence("consistency", "mismatch", "trace class disagrees with regime"))
        return SpecializationVerdict(t0, regime, NUMERICAL_UNDETERMINED, UNDETERMINED,
                                     exactness, ev)

    if regime in (NEGATIVE_HYPERBOLIC, POSITIVE_OUTER, PARABOLIC_BOUNDARY):
        return SpecializationVerdict(t0, regime, YES, YES, exactness, ev)
    if regime == MINUS_ONE:
        ev.append(Evidence("integer entries", "discrete",
                           "image lies in SL2(Z); reported discrete although t = -1 "
                           "is excluded from the negative-t family"))
        ev.append(Evidence("faithfulness", "no", "Burau is unfaithful at t = -1"))
        return SpecializationVerdict(t0, regime, YES, NO, exactness, ev)

    rot = rotation_data(X, t0, epsilon=epsilon, n_max=n_max)
    ev.append(Evidence("rotation data", rot.order_class,
                       f"cos(theta) = {format_scalar(rot.cos_theta)}; "
                       f"matrix order {rot.matrix_order}; {rot.detail}"))
    if regime == ONE:
        ev.append(Evidence("center", "not faithful",
                           "(s1 s2)^3 -> t^3 I = I at t = 1, a nontrivial kernel element"))
    if not exact:
        n = rot.triangle_order
        if rot.order_class == RATIONAL_ROTATION and n is not None and n >= 6:
            return SpecializationVerdict(t0, regime, NUMERICAL_UNDETERMINED, UNDETERMINED,
                                         exactness, ev)
        return SpecializationVerdict(t0, regime, NUMERICAL_NO, UNDETERMINED, exactness, ev)

    n = rot.triangle_order
    if n is not None and n >= 6:
        return SpecializationVerdict(t0, regime, triangle_group(n), NO, exactness, ev)
    faithful = NO if regime == ONE else UNDETERMINED
    return SpecializationVerdict(t0, regime, NO, faithful, exactness, ev)


def duality_check(t0) -> bool:
    """classify(t0) and classify(1/t0) agree on the discrete and faithful fields."""
    t0 = as_scalar(t0)
    if kind(t0) == FLOAT:
        raise PreconditionError("duality check needs an exact t0")
    if t0 == 0:
        raise PreconditionError("t0 = 0 has no reciprocal")
    a, b = classify(t0), classify(reciprocal(t0))
    return a.discrete == b.discrete and a.faithful == b.faithful
