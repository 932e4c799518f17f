"""JSON documents holding curves, mappings, words and factorizations.

A document looks like::

    {
      "format_version": "1",
      "genus": 3,
      "curves": {"a": {"homology": [1, 0, 0, 0, 0, 0]},
                 "s": {"image_of": "b", "under": [{"curve": "a", "exp": -1}]},
                 "y": {"separating": true}},
      "mappings": {"phi": {"matrix": [[...]], "constraints": [["a", "b"]]}},
      "words": {"w": [{"curve": "a", "exp": 2}, {"map": "phi", "exp": -1}]},
      "factorizations": {...},
      "relators": ["w"]
    }

Word nodes are ``{"curve", "exp"}``, ``{"map", "exp"}``, ``{"word", "exp"}``
(a reference to a named word, raised to a power) or
``{"op": "conj" | "comm" | "pow" | "inv", "args": [...]}`` where each
argument is itself a list of nodes; ``pow`` also carries ``"n"``.
A constraint ``[src, dst]`` names curves or gives literal vectors.

Documents keep the raw JSON next to the resolved objects, so
``Document.from_dict(doc.to_dict())`` gives back an equal document.
"""

from __future__ import annotations

import copy
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from . import symplectic
from .words import (
    Curve,
    Mapping,
    Word,
    WordError,
    commutator,
    conjugate,
    inverse,
    mapping,
    power,
    product,
    twist,
)

FORMAT_VERSION = "1"

_ARITY = {"conj": 2, "comm": 2, "pow": 1, "inv": 1}


class DocumentError(ValueError):
    """Malformed or inconsistent document."""


class ConstraintViolation(DocumentError):
    """A mapping does not send a declared source class to its target."""


class _Unresolved(Exception):
    pass


@dataclass(eq=False)
class Document:
    genus: int
    curves: dict[str, Curve] = field(default_factory=dict)
    mappings: dict[str, Mapping] = field(default_factory=dict)
    words: dict[str, Word] = field(default_factory=dict)
    raw: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_dict(cls, data: dict[str, Any], check: bool = True) -> "Document":
        if not isinstance(data, dict):
            raise DocumentError("document must be a JSON object")
        version = data.get("format_version")
        if version != FORMAT_VERSION:
            raise DocumentError(f"unsupported format_version {version!r}")
        g = data.get("genus")
        if not isinstance(g, int) or isinstance(g, bool) or g < 1:
            raise DocumentError("document needs a positive integer 'genus'")
        doc = cls(genus=g, raw=copy.deepcopy(data))
        doc._resolve(check)
        return doc

    @classmethod
    def load(cls, path: str | Path, check: bool = True) -> "Document":
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise DocumentError(f"cannot read {path}: {exc}") from None
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"{path}: invalid JSON ({exc})") from None
        return cls.from_dict(data, check)

    def to_dict(self) -> dict[str, Any]:
        return copy.deepcopy(self.raw)

    def dumps(self) -> str:
        return dumps(self.raw)

    def __eq__(self, other):
        return isinstance(other, Document) and self.raw == other.raw

    @property
    def name(self) -> str:
        return self.raw.get("id", "")

    @property
    def factorizations(self) -> dict[str, Any]:
        return self.raw.get("factorizations", {})

    @property
    def relators(self) -> list[str]:
        return list(self.raw.get("relators", []))

    def curve(self, name: str) -> Curve:
        try:
            return self.curves[name]
        except (KeyError, TypeError):
            raise DocumentError(f"undefined curve {name!r}") from None

    def word(self, spec) -> Word:
        """A named word, or an inline node list."""
        if isinstance(spec, str):
            if self.words.get(spec) is None:
                raise DocumentError(f"undefined word {spec!r}")
            return self.words[spec]
        return self.parse_word(spec)

    def vector(self, spec) -> tuple[int, ...]:
        """A homology vector given by curve name or literal list."""
        if isinstance(spec, str):
            return self.curve(spec).homology
        try:
            v = tuple(int(x) for x in spec)
        except (TypeError, ValueError):
            raise DocumentError(f"bad vector {spec!r}") from None
        if len(v) != 2 * self.genus:
            raise DocumentError(f"vector {list(v)} has length {len(v)}, expected {2 * self.genus}")
        return v

    # -- resolution -------------------------------------------------------

    def _resolve(self, check: bool) -> None:
        for section in ("curves", "mappings", "words", "factorizations"):
            if not isinstance(self.raw.get(section, {}), dict):
                raise DocumentError(f"'{section}' must be an object")
        for name, rec in self.raw.get("mappings", {}).items():
            if not isinstance(rec, dict) or "matrix" not in rec:
                raise DocumentError(f"mapping {name!r} has no matrix")
            try:
                self.mappings[name] = Mapping(name, self.genus, rec["matrix"])
            except (WordError, TypeError, ValueError) as exc:
                raise DocumentError(f"mapping {name!r}: {exc}") from None
        self._resolve_curves()
        for name in self.raw.get("words", {}):
            if self.words.get(name) is None:
                self.words[name] = self.parse_word(self.raw["words"][name], (name,))
        if check:
            self.check_mappings()

    def _resolve_curves(self) -> None:
        pending = dict(self.raw.get("curves", {}))
        while pending:
            progress = False
            for name, rec in list(pending.items()):
                try:
                    self.curves[name] = self._make_curve(name, rec)
                except _Unresolved:
                    continue
                del pending[name]
                progress = True
            if not progress:
                raise DocumentError(f"cannot resolve curves {sorted(pending)}")

    def _make_curve(self, name: str, rec) -> Curve:
        g = self.genus
        if not isinstance(rec, dict):
            raise DocumentError(f"curve {name!r} must be an object")
        try:
            if rec.get("separating"):
                return Curve.separating_curve(name, g)
            if "homology" in rec:
                return Curve(name, g, self.vector(rec["homology"]))
            if "image_of" in rec:
                under = rec.get("under", [])
                names = [n.get("curve") for n in under if isinstance(n, dict)]
                if rec["image_of"] not in self.curves or any(n not in self.curves for n in names):
                    if rec["image_of"] not in self.raw.get("curves", {}):
                        raise DocumentError(f"curve {name!r} is the image of unknown {rec['image_of']!r}")
                    raise _Unresolved
                w = self.parse_word(under, curves_only=True)
                m = symplectic.evaluate(w, g)
                return Curve(name, g, symplectic.apply(m, self.curves[rec["image_of"]].homology))
        except WordError as exc:
            raise DocumentError(str(exc)) from None
        raise DocumentError(f"curve {name!r} needs 'homology', 'image_of' or 'separating'")

    def parse_word(self, nodes, _stack: tuple = (), curves_only: bool = False) -> Word:
        if not isinstance(nodes, list):
            raise DocumentError(f"a word must be a list of nodes, got {nodes!r}")
        return product([self._node(node, _stack, curves_only) for node in nodes])

    def _node(self, node, stack, curves_only) -> Word:
        if not isinstance(node, dict):
            raise DocumentError(f"bad word node {node!r}")
        exp = node.get("exp", 1)
        if not isinstance(exp, int) or isinstance(exp, bool) or exp == 0:
            raise DocumentError(f"bad exponent in {node!r}")
        if "curve" in node:
            return twist(self.curve(node["curve"]), exp)
        if curves_only:
            raise DocumentError("only twist letters are allowed here")
        if "map" in node:
            name = node["map"]
            if name not in self.mappings:
                raise DocumentError(f"undefined mapping {name!r}")
            return mapping(self.mappings[name], exp)
        if "word" in node:
            name = node["word"]
            if name in stack:
                raise DocumentError(f"word {name!r} refers to itself")
            if self.words.get(name) is None:
                if name not in self.raw.get("words", {}):
                    raise DocumentError(f"undefined word {name!r}")
                self.words[name] = self.parse_word(self.raw["words"][name], stack + (name,))
            return power(self.words[name], exp)
        op, args = node.get("op"), node.get("args")
        if op not in _ARITY or not isinstance(args, list):
            raise DocumentError(f"bad word node {node!r}")
        if len(args) != _ARITY[op]:
            raise DocumentError(f"{op} takes {_ARITY[op]} argument(s)")
        ws = [self.parse_word(a, stack) for a in args]
        if op == "conj":
            out = conjugate(ws[0], ws[1])
        elif op == "comm":
            out = commutator(ws[0], ws[1])
        elif op == "inv":
            out = inverse(ws[0])
        else:
            n = node.get("n")
            if not isinstance(n, int) or isinstance(n, bool):
                raise DocumentError("pow needs an integer 'n'")
            out = power(ws[0], n)
        return power(out, exp)

    def check_mappings(self) -> None:
        """Every mapping is symplectic and honours its constraints."""
        for name, m in self.mappings.items():
            symplectic.check_symplectic(m.matrix, name)
            for pair in self.raw["mappings"][name].get("constraints", []):
                if not isinstance(pair, list) or len(pair) != 2:
                    raise DocumentError(f"{name}: constraint must be a [source, target] pair")
                src, dst = self.vector(pair[0]), self.vector(pair[1])
                got = symplectic.apply(m.matrix, src)
                if got != dst:
                    raise ConstraintViolation(f"{name} sends {pair[0]} to {list(got)}, not {pair[1]}")


def dumps(data: dict[str, Any]) -> str:
    """Deterministic JSON text; short values stay on one line."""
    return _fmt(data, 0) + "\n"


def _fmt(value, depth: int, width: int = 96) -> str:
    flat = json.dumps(value, sort_keys=True)
    if len(flat) + depth <= width or not isinstance(value, (dict, list)) or not value:
        return flat
    pad = " " * (depth + 1)
    if isinstance(value, dict):
        items = [f"{pad}{json.dumps(k)}: {_fmt(value[k], depth + 1, width)}" for k in sorted(value)]
        return "{\n" + ",\n".join(items) + "\n" + " " * depth + "}"
    items = [pad + _fmt(v, depth + 1, width) for v in value]
    return "[\n" + ",\n".join(items) + "\n" + " " * depth + "]"


def word_nodes(w: Word) -> list[dict]:
    """Flat node list spelling out a word letter by letter."""
    out = []
    for let in w:
        key = "curve" if let.is_twist else "map"
        out.append({key: let.generator.name, "exp": let.exponent})
    return out
