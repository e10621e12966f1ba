"""
Band words and Artin words on n strands.

A band generator a(t,s), t > s, is the positive half-twist band joining strands
s and t in front of the strands between them. In classical generators,

    a(t,s) = (s_{t-1} ... s_{s+1}) s_s (s_{s+1}^-1 ... s_{t-1}^-1),

so a(s+1,s) is just s_s. Band words here are always positive; inverse letters
only exist at the Artin layer.

Conventions used throughout the package:
  - strands are numbered 1..n;
  - a word acts on strands left to right (the first letter acts first), so the
    permutation of a(2,1) a(3,1) sends 1 -> 2 -> 2, i.e. 1 |-> 2;
  - generators are numbered by the ordinal g(t,s) = (t-1)(t-2)/2 + (s-1), which
    enumerates a(2,1), a(3,1), a(3,2), a(4,1), ... and does not depend on n.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    IndexOrderError,
    NegativeLetterError,
    OutOfRangeError,
    WordSyntaxError,
)


@dataclass(frozen=True, order=False)
class BandGenerator:
    t: int
    s: int

    def __post_init__(self):
        if self.t <= self.s:
            raise IndexOrderError(f"a({self.t},{self.s}) needs t > s")
        if self.s < 1:
            raise OutOfRangeError(f"a({self.t},{self.s}) needs s >= 1")

    @property
    def ordinal(self) -> int:
        return (self.t - 1) * (self.t - 2) // 2 + (self.s - 1)

    @property
    def is_adjacent(self) -> bool:
        return self.t == self.s + 1

    def __lt__(self, other: BandGenerator) -> bool:
        return self.ordinal < other.ordinal

    def __str__(self) -> str:
        return f"a({self.t},{self.s})"

    def __repr__(self) -> str:
        return f"a({self.t},{self.s})"


def make_generator(t: int, s: int, n: int) -> BandGenerator:
    """Return a(t,s) as a generator of B_n, validating n >= t > s >= 1."""
    if t <= s:
        raise IndexOrderError(f"a({t},{s}) needs t > s")
    if s < 1 or t > n:
        raise OutOfRangeError(f"a({t},{s}) is not a band on {n} strands")
    return BandGenerator(t, s)


def generator_count(n: int) -> int:
    return n * (n - 1) // 2


@functools.lru_cache(maxsize=None)
def generators(n: int) -> tuple[BandGenerator, ...]:
    """All band generators of B_n, indexed by ordinal."""
    return tuple(BandGenerator(t, s) for t in range(2, n + 1) for s in range(1, t))


def generator_from_ordinal(g: int) -> BandGenerator:
    # invert g = (t-1)(t-2)/2 + (s-1)
    t = 2
    while (t - 1) * t // 2 <= g:
        t += 1
    return BandGenerator(t, g - (t - 1) * (t - 2) // 2 + 1)


@dataclass(frozen=True)
class ArtinLetter:
    index: int
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        if self.index < 1:
            raise OutOfRangeError(f"s{self.index} is not an Artin generator")

    def inverse(self) -> ArtinLetter:
        return ArtinLetter(self.index, -self.sign)

    def __str__(self) -> str:
        return f"s{self.index}" if self.sign > 0 else f"s{self.index}^-1"


@dataclass(frozen=True)
class BandWord:
    strands: int
    letters: tuple[BandGenerator, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise OutOfRangeError(f"a braid needs at least one strand, got {self.strands}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for a in self.letters:
            if a.t > self.strands:
                raise OutOfRangeError(f"{a} is not a band on {self.strands} strands")

    @classmethod
    def from_ordinals(cls, n: int, ordinals: Iterable[int]) -> BandWord:
        gens = generators(n)
        try:
            return cls(n, tuple(gens[g] for g in ordinals))
        except IndexError:
            raise OutOfRangeError(f"ordinal out of range for {n} strands") from None

    @property
    def ordinals(self) -> tuple[int, ...]:
        return tuple(a.ordinal for a in self.letters)

    @property
    def exponent_sum(self) -> int:
        return len(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __add__(self, other: BandWord) -> BandWord:
        if other.strands != self.strands:
            raise ValueError("cannot concatenate words on different strand counts")
        return BandWord(self.strands, self.letters + other.letters)

    def __str__(self) -> str:
        return format_band_word(self)


@dataclass(frozen=True)
class ArtinWord:
    strands: int
    letters: tuple[ArtinLetter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for x in self.letters:
            if not 1 <= x.index <= self.strands - 1:
                raise OutOfRangeError(f"{x} is not an Artin letter on {self.strands} strands")

    @classmethod
    def from_ints(cls, n: int, letters: Iterable[int]) -> ArtinWord:
        """Build from signed indices: 2 is s2, -2 is s2^-1."""
        return cls(n, tuple(ArtinLetter(abs(i), 1 if i > 0 else -1) for i in letters))

    def to_ints(self) -> tuple[int, ...]:
        return tuple(x.index * x.sign for x in self.letters)

    @property
    def exponent_sum(self) -> int:
        return sum(x.sign for x in self.letters)

    def inverse(self) -> ArtinWord:
        return ArtinWord(self.strands, tuple(x.inverse() for x in reversed(self.letters)))

    def __add__(self, other: ArtinWord) -> ArtinWord:
        if other.strands != self.strands:
            raise ValueError("cannot concatenate words on different strand counts")
        return ArtinWord(self.strands, self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.letters)


@dataclass(frozen=True)
class Permutation:
    """A permutation of 1..n; ``images[i - 1]`` is the image of strand i."""

    n: int
    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if len(self.images) != self.n or sorted(self.images) != list(range(1, self.n + 1)):
            raise ValueError(f"{self.images} is not a permutation of 1..{self.n}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> Permutation:
        images = list(range(1, n + 1))
        images[a - 1], images[b - 1] = b, a
        return cls(n, tuple(images))

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def then(self, other: Permutation) -> Permutation:
        """Apply self first, then other."""
        return Permutation(self.n, tuple(other.images[j - 1] for j in self.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, j in enumerate(self.images, 1):
            inv[j - 1] = i
        return Permutation(self.n, tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = []
            i = start
            while i not in seen:
                seen.add(i)
                cyc.append(i)
                i = self(i)
            out.append(tuple(cyc))
        return out

    def cycle_count(self) -> int:
        return len(self.cycles())

    def is_full_cycle(self) -> bool:
        return self.cycle_count() == 1

    def __str__(self) -> str:
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Left-to-right product: p acts first, then q."""
    return p.then(q)


@dataclass(frozen=True)
class ClosureInvariants:
    components: int
    euler: int
    exponent_sum: int


def band_to_artin(w: BandWord) -> ArtinWord:
    out: list[ArtinLetter] = []
    for a in w.letters:
        up = range(a.t - 1, a.s, -1)
        out.extend(ArtinLetter(i, 1) for i in up)
        out.append(ArtinLetter(a.s, 1))
        out.extend(ArtinLetter(i, -1) for i in reversed(up))
    return ArtinWord(w.strands, tuple(out))


def positive_artin_to_band(w: ArtinWord) -> BandWord:
    for pos, x in enumerate(w.letters):
        if x.sign < 0:
            raise NegativeLetterError(f"letter {pos} ({x}) is negative")
    return BandWord(w.strands, tuple(BandGenerator(x.index + 1, x.index) for x in w.letters))


def permutation(w: BandWord) -> Permutation:
    images = list(range(1, w.strands + 1))
    # images[i-1] tracks where strand i has been sent so far
    for a in w.letters:
        for j, x in enumerate(images):
            if x == a.t:
                images[j] = a.s
            elif x == a.s:
                images[j] = a.t
    return Permutation(w.strands, tuple(images))


def artin_permutation(w: ArtinWord) -> Permutation:
    """Permutation induced by an Artin word, with s_i acting as (i i+1)."""
    images = list(range(1, w.strands + 1))
    for x in w.letters:
        i = x.index
        for j, y in enumerate(images):
            if y == i:
                images[j] = i + 1
            elif y == i + 1:
                images[j] = i
    return Permutation(w.strands, tuple(images))


def closure_invariants(w: BandWord) -> ClosureInvariants:
    k = len(w)
    return ClosureInvariants(
        components=permutation(w).cycle_count(),
        euler=w.strands - k,
        exponent_sum=k,
    )


def is_unknot_presentation(w: BandWord) -> bool:
    """
    True when the Bennequin surface of the closure is a disc: n - 1 bands
    joining n discs with connected boundary. The closure is then the unknot.
    """
    return len(w) == w.strands - 1 and permutation(w).is_full_cycle()


_TOKEN = re.compile(r"a\((\d+),(\d+)\)|s(\d+)")


def parse_band_word(text: str, n: int) -> BandWord:
    """
    Parse ``a(t,s)`` and ``s<i>`` items separated by whitespace. ``s<i>``
    stands for the positive Artin letter, i.e. the band a(i+1,i). A blank
    string is the empty word.
    """
    letters = []
    pos = 0
    end = len(text)
    while True:
        start = pos
        while pos < end and text[pos].isspace():
            pos += 1
        if pos == end:
            break
        if letters and pos == start:
            raise WordSyntaxError("expected whitespace between items", pos)
        m = _TOKEN.match(text, pos)
        if m is None:
            raise WordSyntaxError(f"unexpected {text[pos]!r}", pos)
        if m.group(3) is not None:
            i = int(m.group(3))
            if not 1 <= i <= n - 1:
                raise OutOfRangeError(f"s{i} is not an Artin generator on {n} strands (offset {pos})")
            letters.append(BandGenerator(i + 1, i))
        else:
            letters.append(make_generator(int(m.group(1)), int(m.group(2)), n))
        pos = m.end()
    return BandWord(n, tuple(letters))


def format_band_word(w: BandWord) -> str:
    return " ".join(str(a) for a in w.letters)


def format_artin_word(w: ArtinWord) -> str:
    return str(w)


def all_words(n: int, k: int) -> Iterable[BandWord]:
    """Every positive band word of length k on n strands, in ordinal-lex order."""
    from itertools import product

    for ords in product(range(generator_count(n)), repeat=k):
        yield BandWord.from_ordinals(n, ords)


def word(n: int, *pairs: Sequence[int]) -> BandWord:
    """Shorthand used in tests and docs: ``word(3, (3, 2), (2, 1))``."""
    return BandWord(n, tuple(make_generator(t, s, n) for t, s in pairs))
