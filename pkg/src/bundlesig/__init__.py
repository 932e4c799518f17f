"""Signatures of surface bundles and Lefschetz fibrations via Meyer's cocycle."""

from .meyer import cochain_c, tau
from .symplectic import evaluate, transvection
from .words import Curve, Mapping, Word, commutator, conjugate, inverse, twist

__all__ = [
    "Curve",
    "Mapping",
    "Word",
    "cochain_c",
    "commutator",
    "conjugate",
    "evaluate",
    "inverse",
    "tau",
    "transvection",
    "twist",
]
