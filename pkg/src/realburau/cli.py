"""Command-line front end.

Every subcommand prints one JSON document (or a flat text rendering of it) on
standard output.  Exit status: 0 success, 2 bad input, 1 failed invariant.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from .braid import BraidWord, named_word, parse_word, print_word
from .burau import (burau, conjugated_generators, derive_squier_form, specialize,
                    squier_relation_holds, generator_matrix, verify_duality)
from .classifier import classify
from .errors import InvariantError, PreconditionError
from .figures import build_disk_figure
from .forensics import (b4_kernel_pair_check, entry21, galois_discreteness_certificate,
                        hunt_unfaithful, unipotent_extension_check, WINDOW_POLY)
from .laurent import isolate_real_roots, normalize_to_intpoly, squarefree_part
from .moebius import (ELLIPTIC, SCALAR, InteriorPoint, classify_isometry,
                      fixed_points, orbit_accumulation_test, pingpong_certificate,
                      point_to_json, rotation_data)
from .scalars import format_scalar, parse_scalar, scalar_to_json


def _matrix_json(M) -> list[list]:
    return [[scalar_to_json(a) for a in row] for row in M.rows]


def _word(text: str, strands: int) -> BraidWord:
    text = text.strip()
    if text.startswith("@"):
        return named_word(text[1:], strands)
    return parse_word(text, strands)


def _fixed_json(p):
    if isinstance(p, InteriorPoint):
        return {"re": scalar_to_json(p.re), "im": scalar_to_json(p.im)}
    return point_to_json(p)


# -- subcommands -------------------------------------------------------------

def cmd_classify(args):
    return classify(parse_scalar(args.t), args.epsilon, args.n_max).to_json()


def cmd_burau(args):
    w = _word(args.word, args.n)
    return {"strands": args.n, "word": print_word(w),
            "matrix": burau(w).format("t")}


def cmd_specialize(args):
    w = _word(args.word, args.n)
    t0 = parse_scalar(args.t)
    M = specialize(burau(w), t0)
    return {"strands": args.n, "word": print_word(w), "t": scalar_to_json(t0),
            "kind": M.kind, "matrix": _matrix_json(M)}


def cmd_isometry(args):
    t0 = parse_scalar(args.t)
    x, y = conjugated_generators()
    L = {"x": x, "y": y, "yx-inv": y @ x.inverse()}[args.gen]
    M = specialize(L, t0)
    cls = classify_isometry(M)
    doc = {"t": scalar_to_json(t0), "gen": args.gen, "matrix": _matrix_json(M),
           "class": cls.kind, "trace": scalar_to_json(cls.trace)}
    if cls.kind != SCALAR:
        doc["fixed_points"] = [_fixed_json(p) for p in fixed_points(M)]
    if cls.kind == ELLIPTIC:
        rd = rotation_data(M, epsilon=args.epsilon, n_max=args.n_max)
        doc["rotation"] = {
            "cos_theta": scalar_to_json(rd.cos_theta), "order_class": rd.order_class,
            "rotation_number": (f"{rd.rotation_number.numerator}/"
                                f"{rd.rotation_number.denominator}"
                                if rd.rotation_number is not None else None),
            "certified": rd.certified, "matrix_order": rd.matrix_order,
            "detail": rd.detail}
    return doc


def cmd_roots(args):
    w = _word(args.word, 3)
    poly, shift = normalize_to_intpoly(entry21(w))
    sf = squarefree_part(poly)
    width = Fraction(args.refine_width)
    roots = []
    for iv in isolate_real_roots(sf):
        fine = iv.refine(width)
        positive = fine.compare_point(Fraction(0)) > 0
        lo_in, hi_in = WINDOW_POLY(fine.lo) < 0, WINDOW_POLY(fine.hi) < 0
        roots.append({"interval": [format_scalar(fine.lo), format_scalar(fine.hi)],
                      "approx": float(fine), "exact": fine.is_exact,
                      "positive": positive,
                      "in_window": True if lo_in and hi_in else
                      (False if not lo_in and not hi_in and not
                       (fine.lo < Fraction(3, 2) < fine.hi) else None)})
    return {"word": print_word(w), "entry21": {"polynomial": list(poly.coeffs),
                                               "t_shift": shift},
            "squarefree": list(sf.coeffs), "roots": roots}


def cmd_hunt(args):
    w = _word(args.word, 3)
    certs = hunt_unfaithful(w, Fraction(args.refine_width))
    return {"word": print_word(w), "certificates": [c.to_json() for c in certs]}


def _random_word(rng: random.Random, strands: int, length: int) -> BraidWord:
    letters = [(rng.randint(1, strands - 1), rng.choice((1, -1)))
               for _ in range(length)]
    return BraidWord(strands, tuple(letters))


def cmd_verify(args):
    what = args.what
    if what == "squier":
        out = {}
        for n in (3, 4):
            form = derive_squier_form(n)
            out[f"B{n}"] = {
                "J": form.format(), "ansatz": form.ansatz,
                "degree_window": form.degree_window,
                "solution_dimension": form.solution_dimension,
                "generators_verified": all(
                    squier_relation_holds(form, generator_matrix(i, n))
                    for i in range(1, n))}
        return {"check": "squier", "forms": out}
    if what == "duality":
        n = args.n or 3
        if args.word is not None:
            words = [_word(args.word, n)]
        else:
            rng = random.Random(args.seed)
            words = [_random_word(rng, n, rng.randint(0, 10)) for _ in range(args.count)]
        results = [{"word": print_word(w), "holds": verify_duality(w)} for w in words]
        return {"check": "duality", "strands": n,
                "identity": "J^T bar(M) = (M^-1)^T J^T",
                "all_hold": all(r["holds"] for r in results), "words": results}
    if what == "b4-pair":
        return {"check": "b4-pair", **b4_kernel_pair_check().to_json()}
    if what == "pingpong":
        if args.t is None or args.case is None:
            raise PreconditionError("verify pingpong needs --t and --case")
        cert = pingpong_certificate(parse_scalar(args.t), args.case)
        return {"check": "pingpong", "case": cert.case_id, "t": scalar_to_json(cert.t0),
                "ok": cert.ok, "exactness": cert.exactness,
                "labels": cert.labels,
                "vertices": [point_to_json(v) for v in cert.vertices],
                "distinct": cert.distinct, "cyclic_order": cert.cyclic_order,
                "pairings": [{"generator": p.generator, "source_side": list(p.source_side),
                              "target_side": list(p.target_side), "ok": p.ok,
                              "images": p.images} for p in cert.pairings]}
    if what == "galois":
        n = args.n or 3
        alpha = parse_scalar(args.alpha or "q(3/2,1/2,5)")
        if args.word:
            words = [_word(w, n) for w in args.word_list]
        else:
            defaults = {3: ["s1", "s2", "@a1", "@center3"], 4: ["s1 s3^-1", "@omega1"]}
            words = [_word(w, n) for w in defaults[n]]
        return {"check": "galois", "strands": n,
                **galois_discreteness_certificate(alpha, words, n).to_json()}
    if what == "unipotent":
        w = _word(args.word or "", 3)
        return {"check": "unipotent",
                **unipotent_extension_check(w, parse_scalar(args.t or "1")).to_json()}
    raise PreconditionError(f"unknown verification {what!r}")


def cmd_figure(args):
    fig = build_disk_figure(parse_scalar(args.t), args.case)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(fig.svg)
    return {"figure": args.out, "case": args.case, "t": scalar_to_json(fig.certificate.t0),
            "labels": fig.labels,
            "disk_points": [[round(z.real, 12), round(z.imag, 12)] for z in fig.points]}


def cmd_orbit(args):
    ev = orbit_accumulation_test(parse_scalar(args.t), args.iters, args.threshold)
    return {"t": ev.t0, "iterations": ev.iterations, "min_distance": ev.min_distance,
            "min_distinct_distance": (ev.min_distinct_distance
                                      if ev.distinct_points > 1 else None),
            "distinct_points": ev.distinct_points, "threshold": ev.threshold,
            "accumulating": ev.accumulating,
            "fixed_point_x": [ev.fixed_point_x.real, ev.fixed_point_x.imag]}


# -- parser ------------------------------------------------------------------

def _common(suppress: bool) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--format", choices=("json", "text"), default=d("json"))
    p.add_argument("--epsilon", type=float, default=d(1e-9))
    p.add_argument("--n-max", type=int, default=d(1000))
    p.add_argument("--refine-width", type=Fraction, default=d(Fraction(1, 10 ** 6)))
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="realburau", parents=[_common(False)],
        description="Burau representations of B3/B4 and their real specializations. "
                    "Scalars: p/q, q(a,b,d) for a + b sqrt d, or a decimal (float mode).")
    sub = parser.add_subparsers(dest="command", required=True)
    common = [_common(True)]

    p = sub.add_parser("classify", parents=common, help="verdict for a specialization")
    p.add_argument("--t", required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("burau", parents=common, help="symbolic Burau image")
    p.add_argument("--n", type=int, choices=(3, 4), required=True)
    p.add_argument("--word", required=True, help='e.g. "s1 s2^-1"; @name for named words')
    p.set_defaults(func=cmd_burau)

    p = sub.add_parser("specialize", parents=common, help="Burau image at t = t0")
    p.add_argument("--n", type=int, choices=(3, 4), required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--t", required=True)
    p.set_defaults(func=cmd_specialize)

    p = sub.add_parser("isometry", parents=common, help="classify x, y or y x^-1 at t0")
    p.add_argument("--t", required=True)
    p.add_argument("--gen", choices=("x", "y", "yx-inv"), required=True)
    p.set_defaults(func=cmd_isometry)

    p = sub.add_parser("roots", parents=common, help="real roots of a 2-1 entry")
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("hunt", parents=common, help="unfaithfulness certificates")
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_hunt)

    p = sub.add_parser("verify", parents=common, help="exact identity checks")
    p.add_argument("what", choices=("squier", "duality", "b4-pair", "pingpong",
                                    "galois", "unipotent"))
    p.add_argument("--n", type=int, choices=(3, 4))
    p.add_argument("--word", action="append", dest="word_list")
    p.add_argument("--t")
    p.add_argument("--case", type=int)
    p.add_argument("--alpha")
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("figure", parents=common, help="SVG of a fundamental domain")
    p.add_argument("--t", required=True)
    p.add_argument("--case", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("orbit", parents=common, help="orbit accumulation test")
    p.add_argument("--t", required=True)
    p.add_argument("--iters", type=int, default=200)
    p.add_argument("--threshold", type=float, default=0.05)
    p.set_defaults(func=cmd_orbit)
    return parser


def _text(doc, prefix="") -> list[str]:
    lines = []
    if isinstance(doc, dict):
        for k in sorted(doc):
            lines += _text(doc[k], f"{prefix}{k}.")
    elif isinstance(doc, list) and doc and isinstance(doc[0], (dict, list)):
        for i, v in enumerate(doc):
            lines += _text(v, f"{prefix}{i}.")
    else:
        lines.append(f"{prefix[:-1]}: {json.dumps(doc)}")
    return lines


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "verify":
        args.word = args.word_list[0] if args.word_list else None
    try:
        doc = args.func(args)
    except PreconditionError as exc:
        print(f"realburau: error: {exc}", file=stderr)
        return 2
    except InvariantError as exc:
        print(f"realburau: invariant failure: {exc}", file=stderr)
        return 1
    except OSError as exc:
        print(f"realburau: I/O error: {exc}", file=stderr)
        return 2
    except Exception as exc:  # a bug, but never a traceback on the console
        print(f"realburau: internal error: {type(exc).__name__}: {exc}", file=stderr)
        return 1
    if args.format == "json":
        stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    else:
        stdout.write("\n".join(_text(doc)) + "\n")
    return 0


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
