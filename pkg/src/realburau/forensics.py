"""Certificates of unfaithfulness and of discreteness.

* Roots of the lower-left (2-1) entry of rho3(w) give specializations where
  rho3(w) and rho3(s1) are both upper triangular, hence generate a solvable
  group, which is impossible for a faithful image of B3.
* The B4 pair omega1, omega2 has distinct Burau images that agree at
  t = (3 + sqrt 5)/2.
* A kernel element of a B3 specialization, pushed into B4, has unitriangular
  image; iterated commutators then reach the identity.
* At a quadratic unit alpha with norm 1, Galois conjugation acts like
  t -> 1/t, which together with Squier's form pins down bounded heights.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce

from .braid import BraidWord, inverse, named_word, print_word, sigma
from .burau import (RealMatrix, burau, derive_squier_form, generator_matrix,
                    specialize)
from .errors import InvariantError, PreconditionError
from .laurent import (IntPoly, RootInterval, divides, isolate_real_roots,
                      normalize_to_intpoly, poly_gcd, squarefree_part)
from .scalars import (FLOAT, QuadNum, Scalar, as_scalar, exact_sqrt,
                      format_scalar, galois_conjugate, kind, quadratic_integer_report,
                      reciprocal, scalar_to_json, sign)

WINDOW_POLY = IntPoly([1, -3, 1])  # t^2 - 3t + 1, negative exactly on the window
GOLDEN_SQUARE = QuadNum(Fraction(3, 2), Fraction(1, 2), 5)  # (3 + sqrt 5)/2
MAX_LETTERS = 10 ** 4


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


# ---------------------------------------------------------------------------
# 2-1 entries


def entry21(w: BraidWord):
    if w.strands != 3:
        raise PreconditionError("2-1 entries are taken in B3")
    if w.uses_only(1):
        raise PreconditionError(
            f"{print_word(w)} is a power of s1; its 2-1 entry vanishes identically")
    e = burau(w)[1, 0]
    if e.is_zero():
        raise PreconditionError(f"the 2-1 entry of rho3({print_word(w)}) is identically zero")
    return e


def entry21_polynomial(w: BraidWord) -> IntPoly:
    """The 2-1 entry of rho3(w) with its power of t divided out."""
    return normalize_to_intpoly(entry21(w))[0]


def _quadratic_root(f: IntPoly, iv: RootInterval) -> QuadNum | None:
    """The root in ``iv`` as an exact a + b sqrt d, if it has degree 2 over Q.

    Candidate factors a t^2 + b t + c have a | lead(f) and c | f(0); b is then
    forced by the numerical root and everything is confirmed exactly.
    """
    lead, const = abs(f.leading), abs(f.coeffs[0])
    if f.degree < 2 or lead > 10 ** 6 or const > 10 ** 6 or const == 0:
        return None
    fine = iv.refine(Fraction(1, 10 ** 15))
    if fine.is_exact:
        return None
    r = float(fine.midpoint)
    divs = [d for d in range(1, max(lead, const) + 1)]
    for a in (d for d in divs if lead % d == 0):
        for c0 in (d for d in divs if const % d == 0):
            for c in (c0, -c0):
                b = round(-(a * r * r + c) / r)
                disc = b * b - 4 * a * c
                if disc <= 0 or math.isqrt(disc) ** 2 == disc:
                    continue
                q = IntPoly([c, b, a])
                if not divides(q, f):
                    continue
                root_disc = exact_sqrt(Fraction(disc))
                for s in (1, -1):
                    cand = (-b + s * root_disc) / (2 * a)
                    if fine.lo < cand < fine.hi:
                        return cand
    return None


@dataclass(frozen=True)
class UnfaithfulnessCertificate:
    """A positive real root t_w of the 2-1 entry of rho3(w), inside the window.

    ``root`` is exact (Fraction or QuadNum) when the root has degree <= 2,
    otherwise a RootInterval of ``factor``.  ``window_interval`` is an
    isolating interval with both endpoints strictly inside the window.
    """

    word: BraidWord
    factor: IntPoly
    root: object
    window_interval: RootInterval
    checks: dict = field(default_factory=dict)

    def root_float(self) -> float:
        return float(self.root)

    def to_json(self) -> dict:
        if isinstance(self.root, RootInterval):
            root = {"interval": [format_scalar(self.root.lo), format_scalar(self.root.hi)],
                    "approx": float(self.root)}
        else:
            root = {"exact": scalar_to_json(self.root), "approx": float(self.root)}
        return {
            "word": print_word(self.word),
            "factor": list(self.factor.coeffs),
            "root": root,
            "window_interval": [format_scalar(self.window_interval.lo),
                                format_scalar(self.window_interval.hi)],
            "checks": self.checks,
        }


def _inside_window(iv: RootInterval, max_steps: int = 400) -> tuple[bool, RootInterval]:
    """Decide whether the isolated root lies in the open window.

    Refines until both endpoints share a sign of t^2 - 3t + 1; the window is
    an interval, so two negative endpoints put the whole interval inside.
    """
    if iv.is_exact:
        return WINDOW_POLY(iv.lo) < 0, iv
    if count_shared_root(iv):
        return False, iv
    for _ in range(max_steps):
        a, b = _sgn(WINDOW_POLY(iv.lo)), _sgn(WINDOW_POLY(iv.hi))
        if a < 0 and b < 0:
            return True, iv
        if a > 0 and b > 0 and not (iv.lo < Fraction(3, 2) < iv.hi):
            return False, iv
        iv = iv.refine(iv.width / 2)
        if iv.is_exact:
            return WINDOW_POLY(iv.lo) < 0, iv
    raise InvariantError("window test did not settle")


def count_shared_root(iv: RootInterval) -> bool:
    """True iff the isolated root is itself a root of t^2 - 3t + 1."""
    g = poly_gcd(iv.polynomial, WINDOW_POLY)
    if g.degree <= 0:
        return False
    # g = t^2 - 3t + 1 (irreducible); its roots are the window endpoints
    return any(iv.lo < r < iv.hi or r in (iv.lo, iv.hi)
               for r in (QuadNum(Fraction(3, 2), Fraction(-1, 2), 5), GOLDEN_SQUARE))


def hunt_unfaithful(w: BraidWord, refine_width=Fraction(1, 10 ** 6)
                    ) -> list[UnfaithfulnessCertificate]:
    """One certificate per positive real root of the 2-1 entry of rho3(w)."""
    entry = entry21(w)
    poly, _ = normalize_to_intpoly(entry)
    factor = squarefree_part(poly)
    M = burau(w)
    S1 = generator_matrix(1, 3)
    certs = []
    for iv in isolate_real_roots(factor):
        if iv.compare_point(Fraction(0)) <= 0:
            continue
        inside, win_iv = _inside_window(iv)
        if not inside:
            raise InvariantError(
                f"root near {float(iv):.9g} of the 2-1 entry of {print_word(w)} "
                "lies outside the elliptic window")
        fine = win_iv.refine(Fraction(refine_width))
        root: object = fine
        if iv.is_exact:
            root = iv.lo
        else:
            q = _quadratic_root(factor, fine)
            if q is not None:
                root = q
        checks: dict = {}
        if isinstance(root, RootInterval):
            g = poly_gcd(factor, poly)
            checks["entry21_vanishes"] = {
                "value": divides(factor, poly) and g.degree > 0,
                "method": "isolating polynomial divides the normalized entry"}
            checks["upper_triangular_pair"] = checks["entry21_vanishes"]["value"]
        else:
            A = specialize(M, root)
            B = specialize(S1, root)
            vanishes = A[1, 0] == 0
            checks["entry21_vanishes"] = {"value": vanishes,
                                          "method": "exact evaluation at the root"}
            checks["upper_triangular_pair"] = vanishes and B[1, 0] == 0
        checks["window"] = {
            "value": True,
            "method": "t^2 - 3t + 1 < 0 at both ends of an isolating interval"}
        certs.append(UnfaithfulnessCertificate(w, factor, root, win_iv, checks))
    return certs


# ---------------------------------------------------------------------------
# B4 kernel pair


def specialize_by_generators(w: BraidWord, t0) -> RealMatrix:
    """S_t0(w) as a product of specialized generators; avoids Laurent growth."""
    t0 = as_scalar(t0)
    n = w.strands - 1
    gens = {}
    out = RealMatrix.identity(n)
    for index, power in w.letters:
        if index not in gens:
            g = specialize(generator_matrix(index, w.strands), t0)
            gens[index] = (g, g.inverse())
        g, gi = gens[index]
        out = out @ ((g if power > 0 else gi) ** abs(power))
    return out


@dataclass(frozen=True)
class KernelPairReport:
    symbolic_unequal: bool
    equal_at_t0: bool
    quotient_identity_at_t0: bool
    quotient_symbolic_identity: bool
    unequal_at_probe: bool
    t0: Scalar
    probe: Scalar

    def to_json(self) -> dict:
        return {"symbolic_unequal": self.symbolic_unequal,
                "equal_at_t0": self.equal_at_t0,
                "quotient_identity_at_t0": self.quotient_identity_at_t0,
                "quotient_symbolic_identity": self.quotient_symbolic_identity,
                "unequal_at_probe": self.unequal_at_probe,
                "t0": scalar_to_json(self.t0), "probe": scalar_to_json(self.probe)}


def b4_kernel_pair_check(t0=GOLDEN_SQUARE, probe=Fraction(2)) -> KernelPairReport:
    w1, w2 = named_word("omega1", 4), named_word("omega2", 4)
    R1, R2 = burau(w1), burau(w2)
    q = w1 * inverse(w2)
    Rq = R1 @ R2.inverse()
    S1, S2 = specialize(R1, t0), specialize(R2, t0)
    return KernelPairReport(
        symbolic_unequal=R1 != R2,
        equal_at_t0=S1 == S2,
        quotient_identity_at_t0=specialize_by_generators(q, t0).is_identity(),
        quotient_symbolic_identity=Rq.is_identity(),
        unequal_at_probe=specialize(R1, probe) != specialize(R2, probe),
        t0=as_scalar(t0), probe=as_scalar(probe))


# ---------------------------------------------------------------------------
# Unitriangular extension


def commutator(a: BraidWord, b: BraidWord) -> BraidWord:
    return a * b * inverse(a) * inverse(b)


def is_upper_unitriangular(M: RealMatrix) -> bool:
    n = M.size
    return all(M[i, j] == (1 if i == j else 0)
               for i in range(n) for j in range(n) if j <= i)


@dataclass(frozen=True)
class ExtensionReport:
    word: BraidWord
    t0: Scalar
    b3_identity: bool
    b4_unitriangular: bool
    depth: int
    kernel_element: BraidWord | None
    kernel_symbolically_nontrivial: bool | None
    chain: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"word": print_word(self.word), "t0": scalar_to_json(self.t0),
                "b3_identity": self.b3_identity,
                "b4_unitriangular": self.b4_unitriangular, "depth": self.depth,
                "kernel_element": (print_word(self.kernel_element)
                                   if self.kernel_element is not None else None),
                "kernel_symbolically_nontrivial": self.kernel_symbolically_nontrivial,
                "chain": self.chain}


def unipotent_extension_check(w: BraidWord, t0) -> ExtensionReport:
    """Push a kernel element of the B3 specialization into B4 and commute it down.

    The chain starts from w and a conjugate g w g^-1 (g a B3 generator or its
    inverse, the first choice whose commutator with w has non-identity Burau
    image).  Each step replaces the pair by (commutator, previous) until the
    specialized B4 image is the identity; ``depth`` counts the steps.
    """
    t0 = as_scalar(t0)
    if kind(t0) == FLOAT:
        raise PreconditionError("unipotent extension check needs an exact t0")
    if w.strands != 3:
        raise PreconditionError("the kernel element must be a B3 word")
    if not specialize_by_generators(w, t0).is_identity():
        raise PreconditionError(
            f"{print_word(w)} is not in the kernel of the B3 specialization at "
            f"t = {format_scalar(t0)}")
    W = w.embed(4)
    A = specialize_by_generators(W, t0)
    uni = is_upper_unitriangular(A)
    if not uni:
        raise InvariantError("B4 image of a B3 kernel element is not unitriangular")
    if A.is_identity():
        nontriv = None if w.is_empty else not burau(W).is_identity()
        return ExtensionReport(w, t0, True, True, 0, None if w.is_empty else W,
                               nontriv, [print_word(W)])
    partner = None
    for g in (sigma(1, 4), sigma(2, 4), sigma(1, 4, -1), sigma(2, 4, -1)):
        cand = g * W * inverse(g)
        if not burau(commutator(W, cand)).is_identity():
            partner = cand
            break
    if partner is None:
        partner = sigma(1, 4) * W * sigma(1, 4, -1)
    a, b = W, partner
    chain = [print_word(a), print_word(b)]
    depth = 0
    while True:
        c = commutator(a, b)
        depth += 1
        if len(c) > MAX_LETTERS:
            raise InvariantError(f"commutator chain exceeded {MAX_LETTERS} letters")
        chain.append(print_word(c))
        C = specialize_by_generators(c, t0)
        if C.is_identity():
            return ExtensionReport(w, t0, True, True, depth, c,
                                   not burau(c).is_identity(), chain)
        if depth >= 2:
            raise InvariantError("3x3 unitriangular commutators must vanish by depth 2")
        a, b = c, a


# ---------------------------------------------------------------------------
# Galois certificates


@dataclass(frozen=True)
class GaloisCertificate:
    alpha: QuadNum
    words_checked: list[BraidWord]
    relation_verified: bool
    per_word: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"alpha": scalar_to_json(self.alpha),
                "words_checked": [print_word(w) for w in self.words_checked],
                "relation_verified": self.relation_verified,
                "per_word": self.per_word}


def galois_discreteness_certificate(alpha, words: list[BraidWord],
                                    strands: int) -> GaloisCertificate:
    """Check (A^sigma)^T = J A^-1 J^-1 for A = S_alpha(w), w in ``words``.

    J is the Squier form with its s-power split off, evaluated at alpha; the
    relation is homogeneous in J, so the split-off scalar does not matter.
    """
    alpha = as_scalar(alpha)
    if not isinstance(alpha, QuadNum) or not alpha.b:
        raise PreconditionError("alpha must be a quadratic irrationality")
    rep = quadratic_integer_report(alpha)
    if not rep.unit_norm_one:
        raise PreconditionError(
            f"alpha = {format_scalar(alpha)} is outside the hypothesis: {rep.note}")
    if strands not in (3, 4):
        raise PreconditionError("strands must be 3 or 4")
    split = derive_squier_form(strands).t_form()
    if split is None:
        raise InvariantError("Squier form does not reduce to a matrix in t")
    J = specialize(split[1], alpha)
    Ji = J.inverse()
    results = []
    ok_all = True
    for w in words:
        if w.strands != strands:
            raise PreconditionError(f"{print_word(w)} is not a B{strands} word")
        A = specialize_by_generators(w, alpha)
        As = A.conjugate()
        rel = As.transpose() == J @ A.inverse() @ Ji
        bar_ok = As == specialize_by_generators(w, reciprocal(alpha))
        ok_all = ok_all and rel and bar_ok
        results.append({"word": print_word(w), "relation": rel,
                        "conjugate_is_reciprocal_specialization": bar_ok,
                        "A": A.format(), "A_sigma": As.format()})
    return GaloisCertificate(alpha, list(words), ok_all, results)
