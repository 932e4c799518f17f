"""Free-group words in Dehn-twist generators.

A generator is either a :class:`Curve` (its letter is a Dehn twist, right
handed for a positive exponent) or a :class:`Mapping`, a mapping class that
is only known through its action on first homology.  Words are immutable
and kept freely reduced.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator, Sequence, Union


class WordError(ValueError):
    pass


class ZeroExponent(WordError):
    pass


class InvalidCurve(WordError):
    pass


@dataclass(frozen=True)
class Curve:
    """A simple closed curve, recorded by its class in H_1(Sigma_g; Z).

    The homology vector uses the basis (e_1..e_g, f_1..f_g).  Separating
    curves are null-homologous; nonseparating ones have primitive classes.
    """

    name: str
    genus: int
    homology: tuple[int, ...]
    separating: bool = False

    def __post_init__(self):
        h = tuple(int(x) for x in self.homology)
        object.__setattr__(self, "homology", h)
        if len(h) != 2 * self.genus:
            raise InvalidCurve(f"{self.name}: homology has length {len(h)}, expected {2 * self.genus}")
        content = 0
        for x in h:
            content = gcd(content, x)
        if self.separating and content != 0:
            raise InvalidCurve(f"{self.name}: a separating curve must be null-homologous")
        if not self.separating and content != 1:
            raise InvalidCurve(f"{self.name}: nonseparating class must be nonzero and primitive")

    @classmethod
    def separating_curve(cls, name: str, genus: int) -> "Curve":
        return cls(name, genus, (0,) * (2 * genus), True)

    def __repr__(self):
        return f"Curve({self.name!r})"


@dataclass(frozen=True)
class Mapping:
    """A mapping class given only by its symplectic matrix."""

    name: str
    genus: int
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        m = tuple(tuple(int(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", m)
        n = 2 * self.genus
        if len(m) != n or any(len(r) != n for r in m):
            raise WordError(f"{self.name}: matrix must be {n}x{n}")

    def __repr__(self):
        return f"Mapping({self.name!r})"


Generator = Union[Curve, Mapping]


@dataclass(frozen=True)
class Letter:
    generator: Generator
    exponent: int = 1

    def __post_init__(self):
        if self.exponent == 0:
            raise ZeroExponent("letter exponent must be nonzero")

    @property
    def curve(self) -> Curve:
        if not isinstance(self.generator, Curve):
            raise WordError(f"{self.generator.name} is not a Dehn twist")
        return self.generator

    @property
    def is_twist(self) -> bool:
        return isinstance(self.generator, Curve)

    def inverse(self) -> "Letter":
        return Letter(self.generator, -self.exponent)

    def __str__(self):
        prefix = "t_" if self.is_twist else ""
        name = f"{prefix}{self.generator.name}"
        return name if self.exponent == 1 else f"{name}^{self.exponent}"


def free_reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    """Merge adjacent powers of the same generator and drop zero powers."""
    out: list[Letter] = []
    for let in letters:
        if out and out[-1].generator == let.generator:
            e = out[-1].exponent + let.exponent
            out.pop()
            if e:
                out.append(Letter(let.generator, e))
        else:
            out.append(let)
    return tuple(out)


@dataclass(frozen=True)
class Word:
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", free_reduce(self.letters))

    @classmethod
    def of(cls, *items: Union[Generator, Letter, tuple]) -> "Word":
        """Build a word from generators, letters or ``(generator, exp)`` pairs."""
        letters = []
        for item in items:
            if isinstance(item, Letter):
                letters.append(item)
            elif isinstance(item, tuple):
                letters.append(Letter(item[0], item[1]))
            else:
                letters.append(Letter(item, 1))
        return cls(tuple(letters))

    def __len__(self):
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __invert__(self) -> "Word":
        return inverse(self)

    def __pow__(self, n: int) -> "Word":
        return power(self, n)

    def __str__(self):
        return " ".join(str(x) for x in self.letters) if self.letters else "1"

    def expanded(self) -> Iterator[Letter]:
        """Letters with |exponent| = 1, left to right."""
        for let in self.letters:
            step = 1 if let.exponent > 0 else -1
            for _ in range(abs(let.exponent)):
                yield Letter(let.generator, step)

    def generators(self) -> list[Generator]:
        seen: dict = {}
        for let in self.letters:
            seen.setdefault(let.generator, None)
        return list(seen)

    @property
    def genus(self) -> int | None:
        gs = {let.generator.genus for let in self.letters}
        if len(gs) > 1:
            raise WordError(f"word mixes genera {sorted(gs)}")
        return gs.pop() if gs else None


IDENTITY = Word()


def twist(c: Curve, e: int = 1) -> Word:
    if e == 0:
        raise ZeroExponent("twist exponent must be nonzero")
    return Word((Letter(c, e),))


def mapping(m: Mapping, e: int = 1) -> Word:
    if e == 0:
        raise ZeroExponent("exponent must be nonzero")
    return Word((Letter(m, e),))


def product(words: Sequence[Word]) -> Word:
    letters: list[Letter] = []
    for w in words:
        letters.extend(w.letters)
    return Word(tuple(letters))


def inverse(w: Word) -> Word:
    return Word(tuple(let.inverse() for let in reversed(w.letters)))


def power(w: Word, n: int) -> Word:
    base = w if n >= 0 else inverse(w)
    return product([base] * abs(n))


def conjugate(w1: Word, w2: Word) -> Word:
    """``w1^w2 = w2^-1 w1 w2``."""
    return product([inverse(w2), w1, w2])


def commutator(w1: Word, w2: Word) -> Word:
    """``[w1, w2] = w1 w2 w1^-1 w2^-1``."""
    return product([w1, w2, inverse(w1), inverse(w2)])
