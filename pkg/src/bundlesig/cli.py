"""Command-line front end.

Exit status: 0 on success, 1 for malformed input or missing data, 2 when a
mathematical check fails (for instance a relator that is not trivial).
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import bundles, relations
from .bundles import (
    BundleError,
    IdentityCheckFailed,
    MonodromyData,
    NotARelator,
    Piece,
    SubtractionInconsistent,
    TwistMismatch,
)
from .document import ConstraintViolation, Document, DocumentError
from .linalg import Matrix
from .meyer import cochain_c, tau
from .relations import ConstructionUnavailable, RelatorNotTrivial
from .symplectic import NotSymplectic, SymplecticError, evaluate
from .words import IDENTITY, Word, WordError, mapping

MATH_ERRORS = (
    IdentityCheckFailed,
    NotARelator,
    TwistMismatch,
    RelatorNotTrivial,
    ConstraintViolation,
    NotSymplectic,
    SubtractionInconsistent,
)
INPUT_ERRORS = (DocumentError, ConstructionUnavailable, BundleError, SymplecticError, WordError, KeyError)


class UsageError(Exception):
    pass


HOMOLOGY_ONLY = "note: relators were checked in Sp(2g, Z) only; Torelli factors are not seen\n"


def _flag_homology_only() -> None:
    sys.stderr.write(HOMOLOGY_ONLY)


def _out(line: str = "") -> None:
    sys.stdout.write(line + "\n")


def _element(doc: Document, name: str) -> Matrix:
    """Matrix of a named word, mapping or curve (the twist about it)."""
    if name in doc.words:
        return evaluate(doc.words[name], doc.genus)
    if name in doc.mappings:
        return doc.mappings[name].matrix
    if name in doc.curves:
        return evaluate(Word.of(doc.curves[name]), doc.genus)
    raise UsageError(f"no word, mapping or curve named {name!r}")


def _matrix_lines(m: Matrix) -> list[str]:
    cells = [[str(x) for x in row] for row in m]
    width = max(len(c) for row in cells for c in row)
    return ["[" + " ".join(c.rjust(width) for c in row) + "]" for row in cells]


def _factorization(doc: Document, key: str):
    if key not in doc.factorizations:
        raise UsageError(f"no factorization named {key!r}")
    rec = doc.factorizations[key]
    kind = rec.get("kind")
    if kind == "lefschetz":
        return relations.fibration_from(doc, key)
    if kind == "bundle":
        handles = tuple((doc.word(a), doc.word(b)) for a, b in rec.get("handles", []))
        boundary = tuple(doc.word(c) for c in rec.get("boundary", []))
        return MonodromyData(doc.genus, handles, boundary)
    raise DocumentError(f"factorization {key!r} has unknown kind {kind!r}")


def _print_terms(terms, indent: str = "  ") -> None:
    for t in terms:
        _out(f"{indent}{t}")


def _twist_summary(lf: bundles.LefschetzFibration) -> str:
    blocks = []
    for grp in lf.group_twists():
        blocks.append(str(Word.of(*grp)))
    return " | ".join(blocks) if blocks else "none"


# -- commands -----------------------------------------------------------------


def cmd_tau(args) -> int:
    doc = Document.load(args.file)
    _out(str(tau(_element(doc, args.a), _element(doc, args.b))))
    return 0


def cmd_eval_word(args) -> int:
    doc = Document.load(args.file)
    for line in _matrix_lines(_element(doc, args.word)):
        _out(line)
    return 0


def cmd_verify_relation(args) -> int:
    doc = Document.load(args.file)
    names = [args.word] if args.word else doc.relators
    if not names:
        raise UsageError("document lists no relators; pass --word")
    ok = True
    for name in names:
        w = doc.word(name)
        trivial = relations.verify_symplectic_identity(w, doc.genus)
        ok &= trivial
        status = "trivial" if trivial else "NOT trivial"
        _out(f"{name}: {status} on homology, c = {cochain_c(w, doc.genus)}")
    return 0 if ok else 2


def cmd_sig_bundle(args) -> int:
    doc = Document.load(args.file)
    if args.word:
        _out(f"sigma = {bundles.signature_via_cochain(doc.word(args.word), doc.genus)}")
        return 0
    fact = _factorization(doc, args.factorization)
    m = fact.complement() if isinstance(fact, bundles.LefschetzFibration) else fact
    terms = bundles.signature_terms(m)
    if args.explain:
        _print_terms(terms)
    _out(f"sigma = {sum(t.contribution for t in terms)}")
    _flag_homology_only()
    return 0


def cmd_sig_lf(args) -> int:
    doc = Document.load(args.file)
    lf = _factorization(doc, args.factorization)
    if not isinstance(lf, bundles.LefschetzFibration):
        raise UsageError(f"{args.factorization!r} is not a Lefschetz fibration")
    terms = bundles.signature_terms(lf.complement())
    if args.explain:
        _print_terms(terms)
    comp = sum(t.contribution for t in terms)
    nbhd = [bundles.neighborhood_signature(g, lf.genus) for g in lf.group_twists()]
    _out(f"sigma(complement) = {comp}")
    _out(f"sigma(neighborhoods) = {' + '.join(map(str, nbhd)) if nbhd else 0}")
    _out(f"sigma = {comp + sum(nbhd)}")
    _out(f"euler characteristic = {bundles.euler_characteristic(lf)}")
    _flag_homology_only()
    return 0


def _parse_piece(tokens: Sequence[str]) -> Piece:
    if len(tokens) not in (3, 4):
        raise UsageError("--piece takes GROUP FILE FACTORIZATION [GLUING-MAP]")
    try:
        group = int(tokens[0]) - 1
    except ValueError:
        raise UsageError(f"bad group index {tokens[0]!r}") from None
    doc = Document.load(tokens[1])
    lf = _factorization(doc, tokens[2])
    if not isinstance(lf, bundles.LefschetzFibration):
        raise UsageError(f"{tokens[2]!r} is not a Lefschetz fibration")
    glue = IDENTITY
    if len(tokens) == 4:
        if tokens[3] not in doc.mappings:
            raise UsageError(f"no mapping named {tokens[3]!r} in {tokens[1]}")
        glue = mapping(doc.mappings[tokens[3]])
    return Piece(group, lf, glue)


def _report_subtraction(res: bundles.Subtraction, explain: bool) -> None:
    parts = " + ".join(str(s) for s in (res.complement_signature,) + res.piece_signatures)
    _out(f"closed bundle: fiber genus {res.fiber_genus}, base genus {res.base_genus}")
    if explain:
        _print_terms(bundles.signature_terms(res.bundle))
    _out(f"sigma = {parts} = {res.signature}")
    _out(f"direct evaluation: {bundles.bundle_signature(res.bundle)}")
    _out(f"cochain: -c(relator) = {bundles.signature_via_cochain(res.bundle.relator(), res.fiber_genus)}")


def cmd_subtract(args) -> int:
    doc = Document.load(args.file)
    x = _factorization(doc, args.factorization)
    if not isinstance(x, bundles.LefschetzFibration):
        raise UsageError(f"{args.factorization!r} is not a Lefschetz fibration")
    pieces = [_parse_piece(p) for p in args.piece or []]
    _report_subtraction(bundles.subtract(x, pieces), args.explain)
    _flag_homology_only()
    return 0


def cmd_cover(args) -> int:
    sigma, base = bundles.pullback_cover(args.sigma, args.base, args.degree)
    _out(f"signature {sigma}, base genus {base}")
    return 0


def cmd_bounds(args) -> int:
    rep = bundles.genus_bounds(args.fiber, args.n)
    _out(str(rep))
    _out(f"G_{rep.f} ≤ {rep.asymptotic_upper}")
    return 0


# -- reproduction -------------------------------------------------------------


def _describe(label: str, c: relations.Construction, explain: bool) -> int:
    lf = c.fibration
    terms = c.terms()
    comp = sum(t.contribution for t in terms)
    _out(f"{label} ({c.id}): fiber genus {lf.genus}, base genus {lf.base_genus}, twists {_twist_summary(lf)}")
    _print_terms(terms)
    _out(f"  sigma(complement) = {comp}")
    if explain:
        for name, value in c.cochains().items():
            _out(f"  c({name}) = {value}")
    return comp


def reproduce_a(explain: bool) -> int:
    X = relations.load_construction("P35")
    Y1 = relations.load_construction("P31a")
    Y2 = relations.load_construction("P31b")
    _describe("X", X, explain)
    for label, c in (("Y1", Y1), ("Y2", Y2)):
        _describe(label, c, explain)
        _out(f"  sigma(fibration) = {bundles.lf_signature(c.fibration)}")
    res = bundles.subtract(X.fibration, [Piece(0, Y2.fibration), Piece(1, Y1.fibration)])
    _out("X - Y1 - Y2")
    _report_subtraction(res, explain)
    return 0


def reproduce_b(explain: bool) -> int:
    Z = relations.load_construction("P36")
    Y3 = relations.load_construction("P33")
    _describe("Z", Z, explain)
    _describe("Y3", Y3, explain)
    glue = mapping(Y3.document.mappings["glue"])
    res = bundles.subtract(Z.fibration, [Piece(0, Y3.fibration, glue)])
    _out("Z - Y3")
    _report_subtraction(res, explain)
    rel = relations.spliced_relator(Z.document.word("R"), Y3.document.word("R"), glue)
    _out(f"relator route: -c(R_Z * R_Y3^g) = {bundles.signature_via_cochain(rel, Z.genus)}")
    return 0


def reproduce_c(explain: bool) -> int:
    relations.load_construction("P37")
    relations.load_construction("P34")
    raise UsageError("no reproduction recipe for these data files")


REPRODUCERS = {"thm1.2a": reproduce_a, "thm1.2b": reproduce_b, "thm1.2c": reproduce_c}


def cmd_reproduce(args) -> int:
    return REPRODUCERS[args.case](args.explain)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bundlesig", description="Signatures of surface bundles from monodromy words.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("tau", help="Meyer cocycle of two named elements")
    s.add_argument("--file", required=True)
    s.add_argument("--a", required=True)
    s.add_argument("--b", required=True)
    s.set_defaults(func=cmd_tau)

    s = sub.add_parser("eval-word", help="symplectic matrix of a word")
    s.add_argument("--file", required=True)
    s.add_argument("--word", required=True)
    s.set_defaults(func=cmd_eval_word)

    s = sub.add_parser("verify-relation", help="check relators act trivially on homology")
    s.add_argument("--file", required=True)
    s.add_argument("--word")
    s.set_defaults(func=cmd_verify_relation)

    s = sub.add_parser("sig-bundle", help="signature of a surface bundle")
    s.add_argument("--file", required=True)
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--factorization")
    g.add_argument("--word", help="closed relator word, evaluated through the cochain")
    s.add_argument("--explain", action="store_true")
    s.set_defaults(func=cmd_sig_bundle)

    s = sub.add_parser("sig-lf", help="signature of a Lefschetz fibration")
    s.add_argument("--file", required=True)
    s.add_argument("--factorization", required=True)
    s.add_argument("--explain", action="store_true")
    s.set_defaults(func=cmd_sig_lf)

    s = sub.add_parser("subtract", help="cut matching fibrations out of every group")
    s.add_argument("--file", required=True)
    s.add_argument("--factorization", required=True)
    s.add_argument("--piece", nargs="+", action="append", metavar="ARG",
                   help="GROUP FILE FACTORIZATION [GLUING-MAP]; groups count from 1")
    s.add_argument("--explain", action="store_true")
    s.set_defaults(func=cmd_subtract)

    s = sub.add_parser("cover", help="pull back along an unramified cover of the base")
    s.add_argument("--sigma", type=int, required=True)
    s.add_argument("--base", type=int, required=True)
    s.add_argument("--degree", type=int, required=True)
    s.set_defaults(func=cmd_cover)

    s = sub.add_parser("bounds", help="bounds on the minimal base genus")
    s.add_argument("--fiber", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("reproduce", help="rerun a shipped signature-4 construction")
    s.add_argument("case", choices=sorted(REPRODUCERS))
    s.add_argument("--explain", action="store_true")
    s.set_defaults(func=cmd_reproduce)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        return args.func(args)
    except MATH_ERRORS as exc:
        sys.stderr.write(f"check failed: {exc}\n")
        return 2
    except (UsageError, *INPUT_ERRORS) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
