"""
Finite reachability over positive band words of fixed length.

Relation moves and cycling both preserve the word length k, so on n strands the
graph has at most (n(n-1)/2)^k vertices and breadth-first search is exact. Words
are handled as tuples of generator ordinals; a ``WordKey`` packs them in base
n(n-1)/2 with the first letter most significant.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .artin import artin_equal
from .core import BandWord, band_to_artin, generator_count
from .errors import BudgetExhaustedError
from .rewriting import key_neighbors

DEFAULT_BUDGET = 10**6


@dataclass(frozen=True, order=True)
class WordKey:
    n: int
    ordinals: tuple[int, ...]

    @property
    def value(self) -> int:
        base = generator_count(self.n)
        v = 0
        for g in self.ordinals:
            v = v * base + g
        return v

    @classmethod
    def from_value(cls, n: int, k: int, value: int) -> WordKey:
        base = generator_count(n)
        digits = []
        for _ in range(k):
            value, g = divmod(value, base)
            digits.append(g)
        if value:
            raise ValueError("value too large for the given length")
        return cls(n, tuple(reversed(digits)))

    def decode(self) -> BandWord:
        return BandWord.from_ordinals(self.n, self.ordinals)


@dataclass(frozen=True)
class OrbitReport:
    representative: BandWord
    size: int
    budget_exhausted: bool
    keys: frozenset = field(default=frozenset(), repr=False, compare=False)

    @property
    def exact(self) -> bool:
        return not self.budget_exhausted

    @property
    def members(self) -> list[BandWord]:
        n = self.representative.strands
        return [BandWord.from_ordinals(n, k) for k in sorted(self.keys)]


def canonical_key(w: BandWord) -> WordKey:
    return WordKey(w.strands, w.ordinals)


def explore(
    start: tuple[int, ...],
    expand: Callable[[tuple[int, ...]], Iterable[tuple[int, ...]]],
    budget: int,
) -> tuple[set[tuple[int, ...]], bool]:
    """Breadth-first closure of ``start``; returns (visited, exhausted)."""
    if budget < 1:
        raise ValueError("budget must be at least 1")
    visited = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for u in expand(v):
            if u not in visited:
                if len(visited) >= budget:
                    return visited, True
                visited.add(u)
                queue.append(u)
    return visited, False


def relation_expander(n: int):
    def expand(v):
        return [u for _, u in key_neighbors(n, v)]
    return expand


def conjugacy_expander(n: int):
    def expand(v):
        out = [u for _, u in key_neighbors(n, v)]
        if v:
            out.append(v[1:] + v[:1])
        return out
    return expand


def _report(n: int, visited: set, exhausted: bool) -> OrbitReport:
    rep = min(visited)
    return OrbitReport(
        representative=BandWord.from_ordinals(n, rep),
        size=len(visited),
        budget_exhausted=exhausted,
        keys=frozenset(visited),
    )


def equality_class(w: BandWord, budget: int = DEFAULT_BUDGET) -> OrbitReport:
    """All words reachable from w by relation moves (its class in the band monoid)."""
    visited, exhausted = explore(w.ordinals, relation_expander(w.strands), budget)
    return _report(w.strands, visited, exhausted)


def conjugacy_orbit(w: BandWord, budget: int = DEFAULT_BUDGET) -> OrbitReport:
    """All words reachable from w by relation moves and cycling."""
    visited, exhausted = explore(w.ordinals, conjugacy_expander(w.strands), budget)
    return _report(w.strands, visited, exhausted)


def monoid_equal(u: BandWord, v: BandWord, budget: int = DEFAULT_BUDGET) -> bool:
    """
    Whether u and v are connected by relation moves. Raises BudgetExhaustedError
    when the class of u outgrows the budget before v turns up.
    """
    if u.strands != v.strands:
        raise ValueError("words live in different braid groups")
    if len(u) != len(v):
        return False
    target = v.ordinals
    if u.ordinals == target:
        return True
    n = u.strands
    visited = {u.ordinals}
    queue = deque([u.ordinals])
    while queue:
        x = queue.popleft()
        for _, y in key_neighbors(n, x):
            if y == target:
                return True
            if y not in visited:
                if len(visited) >= budget:
                    raise BudgetExhaustedError(budget)
                visited.add(y)
                queue.append(y)
    return False


def min_orbit_key(w: BandWord, budget: int = DEFAULT_BUDGET) -> tuple[WordKey, bool]:
    """Least key over the conjugacy orbit of w, and whether the orbit was explored exactly."""
    visited, exhausted = explore(w.ordinals, conjugacy_expander(w.strands), budget)
    return WordKey(w.strands, min(visited)), not exhausted


def artin_equal_bands(u: BandWord, v: BandWord) -> bool:
    """Group equality of two band words, decided by the Artin-level oracle."""
    return artin_equal(band_to_artin(u), band_to_artin(v))


def format_orbit(report: OrbitReport) -> str:
    """Orbit dump: header line, then one word per line sorted by key."""
    k = len(report.representative)
    n = report.representative.strands
    lines = [f"n={n} k={k} size={report.size} exact={str(report.exact).lower()}"]
    lines.extend(str(m) for m in report.members)
    return "\n".join(lines) + "\n"
