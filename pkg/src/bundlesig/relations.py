"""Relation templates and the shipped constructions.

The construction files live in ``bundlesig/data`` (override with the
``BUNDLESIG_DATA`` environment variable).  Loading one checks every mapping
against its homology constraints, every listed relator for triviality under
the symplectic representation, and the monodromy factorizations themselves.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path

from .bundles import LefschetzFibration, Term, signature_terms
from .document import ConstraintViolation, Document, DocumentError
from .meyer import cochain_c
from .symplectic import NotSymplectic, evaluate, is_identity
from .words import Curve, Word, commutator, inverse, product, twist

__all__ = [
    "ConstraintViolation",
    "NotSymplectic",
    "RelatorNotTrivial",
    "DuplicateCurve",
    "ConstructionUnavailable",
    "Construction",
    "lantern_word",
    "star_word",
    "verify_symplectic_identity",
    "data_dir",
    "load_construction",
]

CONSTRUCTIONS = ("P31a", "P31b", "P33", "P34", "P35", "P36", "P37")


class RelatorNotTrivial(ValueError):
    pass


class DuplicateCurve(ValueError):
    pass


class ConstructionUnavailable(FileNotFoundError):
    """No data file ships for this construction."""


def _distinct(curves) -> None:
    seen = set()
    for c in curves:
        if c in seen:
            raise DuplicateCurve(f"curve {c.name} appears twice")
        seen.add(c)


def lantern_word(a: Curve, b: Curve, c: Curve, d: Curve, x: Curve, y: Curve, z: Curve) -> Word:
    """``t_d^-1 t_c^-1 t_b^-1 t_a^-1 t_z t_y t_x`` for boundary a..d and interior x, y, z."""
    _distinct((a, b, c, d, x, y, z))
    return product([twist(k, -1) for k in (d, c, b, a)] + [twist(k) for k in (z, y, x)])


def star_word(a1: Curve, a2: Curve, a3: Curve, b: Curve, d1: Curve, d2: Curve, d3: Curve) -> Word:
    """``t_d3^-1 t_d2^-1 t_d1^-1 (t_a1 t_a2 t_a3 t_b)^3`` on a three-holed torus."""
    _distinct((a1, a2, a3, b, d1, d2, d3))
    chain = product([twist(k) for k in (a1, a2, a3, b)])
    return product([twist(d3, -1), twist(d2, -1), twist(d1, -1), chain, chain, chain])


def verify_symplectic_identity(w: Word, g: int | None = None) -> bool:
    """Whether w acts trivially on homology.

    Necessary for w to be a relation in the mapping class group, but not
    sufficient: the Torelli group is invisible here.
    """
    if g is None and w.genus is None:
        return True
    return is_identity(evaluate(w, g))


def data_dir() -> Path:
    env = os.environ.get("BUNDLESIG_DATA")
    return Path(env) if env else Path(__file__).resolve().parent / "data"


@dataclass
class Construction:
    id: str
    document: Document
    fibrations: dict[str, LefschetzFibration] = field(default_factory=dict)

    @property
    def genus(self) -> int:
        return self.document.genus

    @property
    def fibration(self) -> LefschetzFibration:
        (lf,) = self.fibrations.values()
        return lf

    def relators(self) -> dict[str, Word]:
        return {name: self.document.word(name) for name in self.document.relators}

    def terms(self) -> list[Term]:
        """The signature formula summands for the fibration's complement."""
        return signature_terms(self.fibration.complement())

    def commutator_word(self) -> Word:
        """The vanishing twists written as a product of commutators.

        From prod [f_k, g_k] * T = 1 one gets T = prod over reversed k of [g_k, f_k].
        """
        return product([commutator(g_, f_) for f_, g_ in reversed(self.fibration.handles)])

    def cochains(self) -> dict[str, int]:
        return {name: cochain_c(w, self.genus) for name, w in self.relators().items()}


def fibration_from(doc: Document, key: str) -> LefschetzFibration:
    rec = doc.factorizations[key]
    if rec.get("kind") != "lefschetz":
        raise DocumentError(f"factorization {key!r} is not a Lefschetz fibration")
    try:
        handles = [(doc.word(a), doc.word(b)) for a, b in rec.get("handles", [])]
    except (TypeError, ValueError):
        raise DocumentError(f"factorization {key!r}: handles must be [a, b] pairs") from None
    twists = [doc.curve(c) for c in rec.get("twists", [])]
    base = rec.get("base_genus", len(handles))
    if base != len(handles):
        raise DocumentError(f"factorization {key!r}: base_genus {base} but {len(handles)} handles")
    return LefschetzFibration(doc.genus, tuple(handles), tuple(twists), tuple(rec.get("groups", ())))


def load_construction(ident: str, source: Document | str | Path | None = None) -> Construction:
    """Load and validate one of the shipped constructions (or a given document)."""
    if isinstance(source, Document):
        doc = source
    else:
        path = Path(source) if source is not None else data_dir() / f"{ident}.json"
        if not path.exists():
            raise ConstructionUnavailable(f"no data file for {ident} at {path}")
        doc = Document.load(path)
    for name in doc.relators:
        if not verify_symplectic_identity(doc.word(name), doc.genus):
            raise RelatorNotTrivial(f"{ident}: relator {name} is not trivial on homology")
    fibs = {key: fibration_from(doc, key) for key, rec in doc.factorizations.items() if rec.get("kind") == "lefschetz"}
    return Construction(ident, doc, fibs)


def spliced_relator(outer: Word, inner: Word, gluing: Word) -> Word:
    """``outer * inner^gluing``: two relators joined after moving one by a mapping."""
    return product([outer, inverse(gluing), inner, gluing])
