"""Regenerate the shipped construction files in src/bundlesig/data/.

Curve classes are written down from the surface models described in each
file's ``provenance`` field.  The matrices of the mappings are solved for
from their homology constraints; everything else is plain word data.

    python3 tools/build_data.py [outdir]
"""

from __future__ import annotations

import sys
from pathlib import Path

from bundlesig.document import FORMAT_VERSION, Document, dumps
from bundlesig.symplectic import map_with_constraints

OUT = Path(__file__).resolve().parent.parent / "src" / "bundlesig" / "data"


# -- small helpers for word nodes --------------------------------------------

def t(name, e=1):
    return {"curve": name, "exp": e}


def m(name, e=1):
    return {"map": name, "exp": e}


def w(name, e=1):
    return {"word": name, "exp": e}


def conj(a, b):
    return {"op": "conj", "args": [a, b]}


def pw(a, n):
    return {"op": "pow", "args": [a], "n": n}


def basis(g):
    def e(*idx):
        v = [0] * (2 * g)
        for i in idx:
            v[abs(i) - 1] += 1 if i > 0 else -1
        return v

    def f(i):
        v = [0] * (2 * g)
        v[g + i - 1] = 1
        return v

    return e, f


def homology(doc: Document, name: str):
    return list(doc.curve(name).homology)


def solve(doc_data: dict, name: str, pairs: list[tuple], extra: dict | None = None):
    """Add mapping ``name`` sending each source curve class to its target."""
    doc = Document.from_dict(doc_data, check=False)
    vec = lambda s: doc.vector(s)
    src = [(vec(a), None) for a, _ in pairs]
    dst = [(vec(b), None) for _, b in pairs]
    matrix = map_with_constraints(src, dst, doc.genus)
    rec = {"matrix": [list(r) for r in matrix], "constraints": [[a, b] for a, b in pairs]}
    if extra:
        rec.update(extra)
    doc_data.setdefault("mappings", {})[name] = rec


def header(ident, g, provenance):
    return {
        "format_version": FORMAT_VERSION,
        "id": ident,
        "genus": g,
        "provenance": provenance,
        "curves": {},
        "mappings": {},
        "words": {},
        "factorizations": {},
        "relators": [],
    }


# -- the three-holed torus fibration over a genus-3 base ------------------------

def build_x():
    e, f = basis(3)
    d = header(
        "P35",
        3,
        "Genus-3 fiber containing a three-holed torus.  alpha_1..alpha_3 are "
        "parallel curves e1, e1+e2, e1+e2+e3 cut off one hole at a time, beta = f1 "
        "meets each alpha once, delta_1..delta_3 are the boundary curves.  The "
        "lantern curves sigma_i are twist images of beta; gamma_1, gamma_2 bound "
        "the remaining pairs of holes.",
    )
    d["curves"] = {
        "al1": {"homology": e(1)},
        "al2": {"homology": e(1, 2)},
        "al3": {"homology": e(1, 2, 3)},
        "be": {"homology": f(1)},
        "d1": {"homology": e(-2, -3)},
        "d2": {"homology": e(2)},
        "d3": {"homology": e(3)},
        "s1": {"image_of": "be", "under": [t("be", -1), t("al2", -1), t("al1"), t("al3", -1)]},
        "s2": {"image_of": "be", "under": [t("be", -1), t("al1", -1), t("al3", -1), t("al2")]},
        "s1p": {"image_of": "s1", "under": [t("al1", -1)]},
        "s2p": {"image_of": "s2", "under": [t("al2", -1)]},
        "g1": {"homology": e(3)},
        "g2": {"homology": e(2, 3)},
    }
    chain = [t("al1"), t("al2"), t("al3"), t("be")]
    d["words"] = {
        "E": [t("d3", -1), t("d2", -1), t("d1", -1), pw(chain, 3)],
        "L1": [t("al3", -1), t("al2", -1), t("d1", -1), t("d2", -1), t("s1"), t("al1"), t("g1")],
        "L2": [t("al3", -1), t("al1", -1), t("d2", -1), t("d3", -1), t("s2"), t("al2"), t("g2")],
        "W0": [t("be"), pw(chain, 2)],
        "W1": [t("be")] + chain,
        "W2": [t("be")],
        "R": [w("E"), conj([w("L1")], [w("W0")]), conj([w("L1")], [w("W1")]), conj([w("L2")], [w("W2")])],
        "u1": [t("d1", -1), t("s1p"), t("d2", -1)],
        "u3": [t("d2", -1), t("s2p"), t("d3", -1)],
        "k1": [t("al1", -2)],
        "k2": [t("al1", -4)],
        "k3": [t("al1", -4), t("al2", -2)],
    }
    solve(d, "phi1", [("d1", "be"), ("s1p", "d1"), ("d2", "g1")])
    solve(d, "phi2", [("d1", "be"), ("s1p", "d2"), ("d2", "g1")])
    solve(d, "phi3", [("d2", "be"), ("s2p", "d3"), ("d3", "g2")])
    d["factorizations"] = {
        "X": {
            "kind": "lefschetz",
            "base_genus": 3,
            "handles": [
                [[conj([w("u1")], [w("k1")])], [conj([m("phi1")], [w("k1")])]],
                [[conj([w("u1")], [w("k2")])], [conj([m("phi2")], [w("k2")])]],
                [[conj([w("u3")], [w("k3")])], [conj([m("phi3")], [w("k3")])]],
            ],
            "twists": ["al1"] * 4 + ["al2"] * 2,
            "groups": [4, 2],
        }
    }
    d["relators"] = ["E", "L1", "L2", "R"]
    return d


# -- the two small genus-3 fibrations ---------------------------------------------

def build_y1():
    e, f = basis(3)
    d = header(
        "P31a",
        3,
        "Genus-3 fiber; a = e1+e2 is the doubled vanishing cycle.  b and c are "
        "distinct disjoint curves in the class e3 which, together with a, bound "
        "a four-holed sphere; x = a+e3 and z = a-e3 are its lantern curves.",
    )
    d["curves"] = {
        "a": {"homology": e(1, 2)},
        "b": {"homology": e(3)},
        "c": {"homology": e(3)},
        "x": {"homology": e(1, 2, 3)},
        "z": {"homology": e(1, 2, -3)},
    }
    solve(d, "phib", [("b", "x")])
    solve(d, "phic", [("c", "z")])
    d["factorizations"] = {
        "Y1": {
            "kind": "lefschetz",
            "base_genus": 2,
            "handles": [[[t("b")], [m("phib")]], [[t("c")], [m("phic")]]],
            "twists": ["a", "a"],
            "groups": [2],
        }
    }
    return d


def build_y2():
    e, f = basis(3)
    d = header(
        "P31b",
        3,
        "Genus-3 fiber; a = e1 is the vanishing cycle of all four singular "
        "fibers.  Each handle pairs a twist t_u with a mapping sending u to a "
        "curve v with the same intersection with a.",
    )
    d["curves"] = {
        "a": {"homology": e(1)},
        "u1": {"homology": e(2)},
        "v1": {"homology": e(1, 1, 2)},
        "u2": {"homology": e(1, 2)},
        "v2": {"homology": e(3)},
        "u3": {"homology": e(3)},
        "v3": {"homology": e(1, -2)},
    }
    for k in (1, 2, 3):
        solve(d, f"phi{k}", [(f"u{k}", f"v{k}")])
    d["factorizations"] = {
        "Y2": {
            "kind": "lefschetz",
            "base_genus": 3,
            "handles": [[[t(f"u{k}")], [m(f"phi{k}")]] for k in (1, 2, 3)],
            "twists": ["a"] * 4,
            "groups": [4],
        }
    }
    return d


# -- the four-holed torus fibration over a genus-4 base ----------------------------

def build_z():
    e, f = basis(5)
    d = header(
        "P36",
        5,
        "Genus-5 fiber containing a four-holed torus.  alpha_1..alpha_4 are the "
        "parallel curves e1, e1+e2, e1+e2+e3, e1+..+e4, beta = f1, delta_1..delta_4 "
        "the boundary curves, sigma_2 and sigma_3 twist images of beta, gamma_2 "
        "and gamma_3 bound adjacent pairs of holes.",
    )
    d["curves"] = {
        "al1": {"homology": e(1)},
        "al2": {"homology": e(1, 2)},
        "al3": {"homology": e(1, 2, 3)},
        "al4": {"homology": e(1, 2, 3, 4)},
        "be": {"homology": f(1)},
        "d1": {"homology": e(-2, -3, -4)},
        "d2": {"homology": e(2)},
        "d3": {"homology": e(3)},
        "d4": {"homology": e(4)},
        "s2": {"image_of": "be", "under": [t("be", -1), t("al1", -1), t("al3", -1), t("al2")]},
        "s3": {"image_of": "be", "under": [t("be", -1), t("al2", -1), t("al4", -1), t("al3")]},
        "s2p": {"image_of": "s2", "under": [t("al2", -1)]},
        "s3p": {"image_of": "s3", "under": [t("al3", -1)]},
        "g2": {"homology": e(2, 3)},
        "g3": {"homology": e(3, 4)},
    }
    blk = [t("al1"), t("al3"), t("be"), t("al2"), t("al4"), t("be")]
    d["words"] = {
        "E2": [t("d4", -1), t("d3", -1), t("d2", -1), t("d1", -1), pw(blk, 2)],
        "L5": [t("al3", -1), t("al1", -1), t("d2", -1), t("d3", -1), t("s2"), t("al2"), t("g2")],
        "L6": [t("al4", -1), t("al2", -1), t("d3", -1), t("d4", -1), t("s3"), t("al3"), t("g3")],
        "w1": [t("be"), t("al2"), t("al4"), t("be"), t("al1"), t("al3"), t("be"), t("al2"), t("al4"), t("be")],
        "w2": [t("be"), t("al1"), t("al3"), t("be"), t("al2"), t("al4"), t("be")],
        "w3": [t("be"), t("al2"), t("al4"), t("be")],
        "R": [
            w("E2"),
            conj([w("L5")], [w("w1")]),
            conj([w("L6")], [w("w2")]),
            conj([w("L5")], [w("w3")]),
            conj([w("L6")], [t("be")]),
        ],
        "u2": [t("d2", -1), t("s2p"), t("d3", -1)],
        "u3": [t("d3", -1), t("s3p"), t("d4", -1)],
        "k1": [t("al2", -1)],
        "k2": [t("al3", -1), t("al2", -1)],
        "k3": [t("al3", -1), t("al2", -2)],
        "k4": [t("al3", -2), t("al2", -2)],
    }
    solve(d, "phi1", [("d2", "be"), ("s2p", "d1"), ("d3", "g2")])
    solve(d, "phi2", [("d3", "be"), ("s3p", "d4"), ("d4", "g3")])
    solve(d, "phi3", [("d2", "be"), ("s2p", "d2"), ("d3", "g2")])
    solve(d, "phi4", [("d3", "be"), ("s3p", "d3"), ("d4", "g3")])
    us = ["u2", "u3", "u2", "u3"]
    d["factorizations"] = {
        "Z": {
            "kind": "lefschetz",
            "base_genus": 4,
            "handles": [
                [[conj([w(u)], [w(f"k{i}")])], [conj([m(f"phi{i}")], [w(f"k{i}")])]]
                for i, u in enumerate(us, start=1)
            ],
            "twists": ["al2", "al2", "al3", "al3"],
            "groups": [4],
        }
    }
    d["relators"] = ["E2", "L5", "L6", "R"]
    return d


# -- the genus-5 commutator factorization of t_b^2 t_c^2 ----------------------------

def build_y3():
    e, f = basis(5)
    d = header(
        "P33",
        5,
        "Genus-5 fiber cut into two four-holed spheres.  The first has boundary "
        "d1, a2, c1, b and the second d2, a3, c2, b, with d1 = e1, a2 = e2, "
        "c1 = -e1-e2, d2 = e3, a3 = e4, c2 = e5, so b = e3+e4+e5.  Capital "
        "letters are the lantern curves of the smaller spheres.",
    )
    parts = {"d1": e(1), "a2": e(2), "c1": e(-1, -2), "d2": e(3), "a3": e(4), "c2": e(5)}

    def s(*names):
        return [sum(parts[n][i] for n in names) for i in range(10)]

    d["curves"] = {name: {"homology": v} for name, v in parts.items()}
    d["curves"].update(
        {
            "b": {"homology": s("d1", "a2", "c1", "d2", "a3", "c2")},
            "c": {"homology": s("c1", "c2")},
            "d": {"homology": s("d1", "d2")},
            "a": {"homology": s("a2", "a3")},
            "x": {"homology": s("a2", "a3", "c1", "c2")},
            "y": {"homology": s("d1", "d2", "c1", "c2")},
            "z": {"homology": s("d1", "d2", "a2", "a3")},
            "D1": {"homology": s("d2", "c1", "c2")},
            "D2": {"homology": s("d1", "c1", "c2")},
            "A2": {"homology": s("a3", "c1", "c2")},
            "A3": {"homology": s("a2", "c1", "c2")},
            "C1": {"homology": s("c2", "d1", "d2", "a2", "a3")},
            "C2": {"homology": s("c1", "d1", "d2", "a2", "a3")},
        }
    )
    d["words"] = {
        "L1": [t("a", -1), t("b", -1), t("c", -1), t("d", -1), t("y"), t("x"), t("z")],
        "L2": [t("d"), t("D2"), t("D1"), t("d1", -1), t("d2", -1), t("c", -1), t("y", -1)],
        "L3": [t("x", -1), t("a2", -1), t("a3", -1), t("c", -1), t("a"), t("A3"), t("A2")],
        "L4": [t("z", -1), t("c1", -1), t("c2", -1), t("b", -1), t("c"), t("C2"), t("C1")],
        "R": [w("L1"), conj([w("L2")], [t("y"), t("x"), t("z")]), conj([w("L3")], [t("z")]), w("L4")],
        "K1": [t("D2"), t("d2", -1)],
        "K2": [t("A3"), t("a3", -1)],
        "K3": [t("C2"), t("c2", -1)],
        "v2": [t("b", -1)],
        "v1": [t("c", -1), t("b", -1)],
    }
    solve(d, "phi1", [("d2", "D1"), ("D2", "d1")])
    solve(d, "phi2", [("a3", "A2"), ("A3", "a2")])
    solve(d, "phi3", [("c2", "C1"), ("C2", "c1")])
    # Identifies this fiber with the genus-5 fiber of P36: it carries the P36
    # classes al3 = e1+e2+e3 and al2 = e1+e2 to b and c.
    solve(d, "glue", [([1, 1, 1, 0, 0, 0, 0, 0, 0, 0], "b"), ([1, 1, 0, 0, 0, 0, 0, 0, 0, 0], "c")])
    d["factorizations"] = {
        "Y3": {
            "kind": "lefschetz",
            "base_genus": 3,
            "handles": [
                [[m("phi3")], [w("K3")]],
                [[conj([m("phi2")], [w("v2")])], [conj([w("K2")], [w("v2")])]],
                [[conj([m("phi1")], [w("v1")])], [conj([w("K1")], [w("v1")])]],
            ],
            "twists": ["b", "b", "c", "c"],
            "groups": [4],
        }
    }
    d["relators"] = ["L1", "L2", "L3", "L4", "R"]
    return d


BUILDERS = {"P35": build_x, "P31a": build_y1, "P31b": build_y2, "P36": build_z, "P33": build_y3}


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    out = Path(argv[0]) if argv else OUT
    out.mkdir(parents=True, exist_ok=True)
    for ident, build in BUILDERS.items():
        data = build()
        Document.from_dict(data)  # validates constraints and symplecticity
        (out / f"{ident}.json").write_text(dumps(data))
        print(f"wrote {out / (ident + '.json')}")


if __name__ == "__main__":
    main()
