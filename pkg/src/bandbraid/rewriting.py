"""
The band relations as a length-preserving rewriting system on positive words.

Two relation families act on an adjacent pair of letters:

  commutation  a(t,s) a(r,q) = a(r,q) a(t,s)     when (t-r)(t-q)(s-r)(s-q) > 0
  triple       a(t,s) a(s,r) = a(s,r) a(t,r) = a(t,r) a(t,s)     for t > s > r

Cycling (moving the leading letter to the end) is kept apart from these: it
preserves the closed braid but not the braid itself.

Moves serialize as ``C@i``, ``T@i>0``, ``T@i>1`` and ``R``.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from typing import Union

from .core import BandGenerator, BandWord, generator_count, generators
from .errors import EmptyWordError, InapplicableMoveError, WordSyntaxError


@dataclass(frozen=True)
class Commute:
    position: int

    def __str__(self) -> str:
        return f"C@{self.position}"


@dataclass(frozen=True)
class Triple:
    position: int
    target: int

    def __post_init__(self):
        if self.target not in (0, 1):
            raise ValueError(f"triple target must be 0 or 1, got {self.target}")

    def __str__(self) -> str:
        return f"T@{self.position}>{self.target}"


@dataclass(frozen=True)
class Cycle:
    def __str__(self) -> str:
        return "R"


Move = Union[Commute, Triple, Cycle]

_MOVE = re.compile(r"C@(\d+)|T@(\d+)>([01])|R")


def parse_move(text: str) -> Move:
    m = _MOVE.fullmatch(text.strip())
    if m is None:
        raise WordSyntaxError(f"not a move: {text.strip()!r}", 0)
    if m.group(1) is not None:
        return Commute(int(m.group(1)))
    if m.group(2) is not None:
        return Triple(int(m.group(2)), int(m.group(3)))
    return Cycle()


def format_move(m: Move) -> str:
    return str(m)


def r1_commutes(x: BandGenerator, y: BandGenerator) -> bool:
    t, s, r, q = x.t, x.s, y.t, y.s
    return (t - r) * (t - q) * (s - r) * (s - q) > 0


def _triple_forms(x: BandGenerator, y: BandGenerator):
    """Return (forms, index of (x, y) among them), or None if no triple relation matches."""
    # a(t,s) a(s,r)
    if x.s == y.t:
        t, s, r = x.t, x.s, y.s
        return _forms(t, s, r), 0
    # a(s,r) a(t,r)
    if x.s == y.s and y.t > x.t:
        t, s, r = y.t, x.t, x.s
        return _forms(t, s, r), 1
    # a(t,r) a(t,s)
    if x.t == y.t and x.s < y.s:
        t, s, r = x.t, y.s, x.s
        return _forms(t, s, r), 2
    return None


def _forms(t: int, s: int, r: int):
    ts, sr, tr = BandGenerator(t, s), BandGenerator(s, r), BandGenerator(t, r)
    return ((ts, sr), (sr, tr), (tr, ts))


def r2_variants(x: BandGenerator, y: BandGenerator) -> list[tuple[BandGenerator, BandGenerator]]:
    """
    The two alternatives to the product x y under the triple relation, in the
    order the three forms are listed in the module docstring, or [] when x y
    is not one of those forms.
    """
    found = _triple_forms(x, y)
    if found is None:
        return []
    forms, idx = found
    return [f for i, f in enumerate(forms) if i != idx]


@functools.lru_cache(maxsize=None)
def pair_table(n: int) -> tuple[tuple[tuple[tuple[int, int], ...], ...], ...]:
    """
    table[x][y] lists the replacement ordinal pairs for the adjacent pair (x, y):
    one entry for a commutation, two (targets 0 and 1) for a triple relation.
    """
    gens = generators(n)
    size = generator_count(n)
    table = []
    for x in range(size):
        row = []
        for y in range(size):
            gx, gy = gens[x], gens[y]
            if r1_commutes(gx, gy):
                row.append(((y, x),))
            else:
                row.append(tuple((a.ordinal, b.ordinal) for a, b in r2_variants(gx, gy)))
        table.append(tuple(row))
    return tuple(table)


def key_neighbors(n: int, word: tuple[int, ...]) -> list[tuple[Move, tuple[int, ...]]]:
    """neighbors() on ordinal tuples; this is the search hot path."""
    table = pair_table(n)
    out = []
    for i in range(len(word) - 1):
        subs = table[word[i]][word[i + 1]]
        if not subs:
            continue
        if len(subs) == 1:
            a, b = subs[0]
            out.append((Commute(i), word[:i] + (a, b) + word[i + 2:]))
        else:
            for target, (a, b) in enumerate(subs):
                out.append((Triple(i, target), word[:i] + (a, b) + word[i + 2:]))
    return out


def neighbors(w: BandWord) -> list[tuple[Move, BandWord]]:
    """Every relation move applicable to w, with the rewritten word."""
    return [
        (m, BandWord.from_ordinals(w.strands, v))
        for m, v in key_neighbors(w.strands, w.ordinals)
    ]


def cycle(w: BandWord) -> BandWord:
    if not w.letters:
        raise EmptyWordError("cannot cycle the empty word")
    return BandWord(w.strands, w.letters[1:] + w.letters[:1])


def apply_move(w: BandWord, m: Move) -> BandWord:
    if isinstance(m, Cycle):
        if not w.letters:
            raise InapplicableMoveError("cannot cycle the empty word")
        return cycle(w)
    i = m.position
    if not 0 <= i < len(w) - 1:
        raise InapplicableMoveError(f"no adjacent pair in a word of length {len(w)}", i)
    x, y = w.letters[i], w.letters[i + 1]
    if isinstance(m, Commute):
        if not r1_commutes(x, y):
            raise InapplicableMoveError(f"{x} {y} do not commute", i)
        new = (y, x)
    elif isinstance(m, Triple):
        variants = r2_variants(x, y)
        if not variants:
            raise InapplicableMoveError(f"{x} {y} is not a triple-relation form", i)
        new = variants[m.target]
    else:
        raise TypeError(f"not a move: {m!r}")
    return BandWord(w.strands, w.letters[:i] + new + w.letters[i + 2:])
