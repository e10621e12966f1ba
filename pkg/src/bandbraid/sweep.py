"""
Sweep search: the combinatorial test for mutual braiding.

A sweep of a positive band word w of length k is a sequence of relation moves
interleaved with exactly k cyclings that returns to w itself. Each cycling
passes the leading band across the axis, and is only allowed when a
``SweepPredicate`` admits the current (word, step) pair. The search runs over
states (word, step) with 0 <= step <= k:

  - a relation move keeps the step;
  - a cycling sends step i to i + 1, if the predicate admits (word, i).

The word is accepted when (w, k) is reachable. For fixed n and k the state
space is finite, so within the budget the verdict is exact. Breadth-first order
with edges expanded in sorted order of their serialized moves makes the emitted
certificate the shortest one, ties broken lexicographically.
"""

from __future__ import annotations

import math
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, Union

from .core import (
    BandWord,
    ClosureInvariants,
    closure_invariants,
    format_band_word,
    generators,
    parse_band_word,
)
from .errors import (
    CycleCountMismatchError,
    EmptyWordError,
    InadmissibleCycleError,
    InapplicableMoveError,
    WordSyntaxError,
)
from .graph import DEFAULT_BUDGET as ORBIT_BUDGET
from .graph import conjugacy_expander, explore
from .rewriting import Cycle, Move, apply_move, key_neighbors, parse_move

DECIDE_BUDGET = 10**7


def _admit_any(word: BandWord, step: int) -> bool:
    return True


def _admit_never(word: BandWord, step: int) -> bool:
    return False


def _admit_adjacent_first(word: BandWord, step: int) -> bool:
    return word.letters[0].is_adjacent


def _adjacent_ordinals(n: int) -> frozenset[int]:
    return frozenset(g.ordinal for g in generators(n) if g.is_adjacent)


@dataclass(frozen=True)
class SweepPredicate:
    """
    Decides whether the leading band of ``word`` may be cycled at sweep step
    ``step``. ``test`` must be deterministic and depend on nothing else.
    Pickling a predicate for parallel census runs requires ``test`` to be a
    module-level function.
    """

    name: str
    test: Callable[[BandWord, int], bool]

    def __call__(self, word: BandWord, step: int) -> bool:
        return bool(self.test(word, step))


ANY = SweepPredicate("any", _admit_any)
ADJACENT_FIRST = SweepPredicate("adjacent-first", _admit_adjacent_first)
NEVER = SweepPredicate("never", _admit_never)

PRESETS = {p.name: p for p in (ANY, ADJACENT_FIRST, NEVER)}


def get_predicate(name: str) -> SweepPredicate:
    try:
        return PRESETS[name]
    except KeyError:
        raise ValueError(
            f"unknown predicate {name!r}; choose from {', '.join(sorted(PRESETS))}"
        ) from None


def custom_predicate(test: Callable[[BandWord, int], bool], name: str = "custom") -> SweepPredicate:
    return SweepPredicate(name, test)


def _key_admits(p: SweepPredicate, n: int) -> Callable[[tuple[int, ...], int], bool]:
    # presets get an ordinal-level test so the search never builds BandWords
    if p.test is _admit_any:
        return lambda word, step: True
    if p.test is _admit_never:
        return lambda word, step: False
    if p.test is _admit_adjacent_first:
        adjacent = _adjacent_ordinals(n)
        return lambda word, step: word[0] in adjacent
    return lambda word, step: p(BandWord.from_ordinals(n, word), step)


@dataclass(frozen=True)
class SweepCertificate:
    initial: BandWord
    moves: tuple[Move, ...]
    predicate: str = "custom"

    @property
    def cycles(self) -> int:
        return sum(isinstance(m, Cycle) for m in self.moves)


@dataclass(frozen=True)
class MutuallyBraided:
    certificate: SweepCertificate
    states_explored: int

    kind = "mutually-braided"


@dataclass(frozen=True)
class NotMutuallyBraided:
    states_explored: int

    kind = "not-mutually-braided"


@dataclass(frozen=True)
class Indeterminate:
    budget: int
    states_explored: int

    kind = "indeterminate"


Verdict = Union[MutuallyBraided, NotMutuallyBraided, Indeterminate]


def decide(
    w: BandWord,
    predicate: SweepPredicate = ANY,
    budget: int = DECIDE_BUDGET,
) -> Verdict:
    """Search for a sweep of w; see the module docstring for the state graph."""
    k = len(w)
    if k == 0:
        raise EmptyWordError("a sweep needs at least one band")
    if budget < 1:
        raise ValueError("budget must be at least 1")
    n = w.strands
    admits = _key_admits(predicate, n)
    cyc = Cycle()

    start = (w.ordinals, 0)
    goal = (w.ordinals, k)
    parent: dict = {start: None}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        word, step = state
        edges = [(str(m), m, (u, step)) for m, u in key_neighbors(n, word)]
        if step < k and admits(word, step):
            edges.append(("R", cyc, (word[1:] + word[:1], step + 1)))
        edges.sort(key=lambda e: e[0])
        for _, move, nxt in edges:
            if nxt in parent:
                continue
            if len(parent) >= budget:
                return Indeterminate(budget, len(parent))
            parent[nxt] = (state, move)
            if nxt == goal:
                moves = []
                s = nxt
                while parent[s] is not None:
                    s, m = parent[s]
                    moves.append(m)
                cert = SweepCertificate(w, tuple(reversed(moves)), predicate.name)
                return MutuallyBraided(cert, len(parent))
            queue.append(nxt)
    return NotMutuallyBraided(len(parent))


def trace(
    cert: SweepCertificate, predicate: SweepPredicate | None = None
) -> Iterator[tuple[int, Move, BandWord, BandWord, int]]:
    """
    Step through a certificate, yielding (index, move, before, after, step)
    where step counts the cyclings done before the move.
    """
    word = cert.initial
    step = 0
    for index, move in enumerate(cert.moves):
        if isinstance(move, Cycle) and predicate is not None and not predicate(word, step):
            raise InadmissibleCycleError(
                f"predicate {predicate.name!r} rejects cycling {word} at step {step}",
                index=index,
            )
        try:
            after = apply_move(word, move)
        except InapplicableMoveError as exc:
            raise InapplicableMoveError(exc.reason, exc.position, index) from None
        yield index, move, word, after, step
        if isinstance(move, Cycle):
            step += 1
        word = after


def replay(cert: SweepCertificate, predicate: SweepPredicate | None = None) -> BandWord:
    """
    Apply every move of ``cert`` and return the final word. The certificate is
    valid iff this equals ``cert.initial``. When ``predicate`` is given, every
    cycling is re-checked against it.
    """
    word = cert.initial
    for _, _, _, word, _ in trace(cert, predicate):
        pass
    k = len(cert.initial)
    if cert.cycles != k:
        raise CycleCountMismatchError(k, cert.cycles)
    return word


def verify(cert: SweepCertificate, predicate: SweepPredicate | None = None) -> bool:
    return replay(cert, predicate) == cert.initial


def format_certificate(cert: SweepCertificate, valid: bool = False) -> str:
    lines = [f"n={cert.initial.strands}", format_band_word(cert.initial), cert.predicate]
    lines.extend(str(m) for m in cert.moves)
    if valid:
        lines.append("VALID")
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> SweepCertificate:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if lines and lines[-1].strip() == "VALID":
        lines.pop()
    if len(lines) < 3:
        raise WordSyntaxError("certificate needs n=, word and predicate lines", 0)
    head = lines[0].strip()
    if not head.startswith("n=") or not head[2:].isdigit():
        raise WordSyntaxError(f"bad strand line {head!r}", 0)
    n = int(head[2:])
    initial = parse_band_word(lines[1], n)
    moves = tuple(parse_move(line) for line in lines[3:] if line.strip())
    return SweepCertificate(initial, moves, lines[2].strip())


# -- census of minimal unknot presentations ---------------------------------


def census_size(n: int) -> int:
    """Number of factorizations of an n-cycle into n - 1 transpositions."""
    return math.factorial(n - 1) * n ** (n - 2)


def unknot_words(n: int) -> list[tuple[int, ...]]:
    """
    Ordinal tuples of all positive band words of length n - 1 whose permutation
    is an n-cycle, in lexicographic order. A product of n - 1 transpositions is
    an n-cycle exactly when every factor joins two different cycles, so the
    bands must form a spanning tree on the strands, built up one join at a time.
    """
    gens = generators(n)
    out: list[tuple[int, ...]] = []
    prefix: list[int] = []

    def extend(label: list[int]):
        if len(prefix) == n - 1:
            out.append(tuple(prefix))
            return
        for g in gens:
            a, b = label[g.t - 1], label[g.s - 1]
            if a == b:
                continue
            merged = [a if x == b else x for x in label]
            prefix.append(g.ordinal)
            extend(merged)
            prefix.pop()

    if n >= 1:
        extend(list(range(n)))
    return out


@dataclass(frozen=True)
class CensusRecord:
    representative: BandWord
    orbit_size: int
    verdict: Verdict
    invariants: ClosureInvariants
    orbit_exact: bool = True


@dataclass
class Census:
    n: int
    predicate: str
    words: int
    records: list[CensusRecord] = field(default_factory=list)


def _decide_task(args):
    n, ords, predicate, budget = args
    return decide(BandWord.from_ordinals(n, ords), predicate, budget)


def census(
    n: int,
    predicate: SweepPredicate = ANY,
    budget: int = DECIDE_BUDGET,
    orbit_budget: int = ORBIT_BUDGET,
    workers: int = 1,
) -> Census:
    """
    Partition the minimal unknot presentations on n strands into conjugacy
    orbits and decide each orbit's least word. Records come back sorted by
    representative key whatever ``workers`` is.
    """
    if n < 2:
        raise ValueError("census needs n >= 2")
    words = unknot_words(n)
    expand = conjugacy_expander(n)
    seen: set[tuple[int, ...]] = set()
    orbits = []
    # words are in key order and orbits are closed, so the first unseen word
    # of each orbit is its least member
    for ords in words:
        if ords in seen:
            continue
        members, exhausted = explore(ords, expand, orbit_budget)
        seen |= members
        orbits.append((min(members), len(members), not exhausted))

    tasks = [(n, rep, predicate, budget) for rep, _, _ in orbits]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            verdicts = list(pool.map(_decide_task, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
    else:
        verdicts = [_decide_task(t) for t in tasks]

    records = []
    for (rep, size, exact), verdict in zip(orbits, verdicts):
        w = BandWord.from_ordinals(n, rep)
        records.append(CensusRecord(w, size, verdict, closure_invariants(w), exact))
    records.sort(key=lambda r: r.representative.ordinals)
    return Census(n, predicate.name, len(words), records)


def format_census(c: Census) -> str:
    lines = [f"# n={c.n} predicate={c.predicate} words={c.words} orbits={len(c.records)}"]
    for r in c.records:
        lines.append(
            "\t".join(
                [
                    format_band_word(r.representative),
                    str(r.orbit_size),
                    r.verdict.kind,
                    str(r.invariants.components),
                    str(r.invariants.euler),
                ]
            )
        )
    return "\n".join(lines) + "\n"


def orbit_outcomes(
    orbit: list[BandWord], predicate: SweepPredicate = ANY, budget: int = DECIDE_BUDGET
) -> dict[BandWord, str]:
    return {w: decide(w, predicate, budget).kind for w in orbit}


def orbit_decide_consistency(
    orbit: list[BandWord], predicate: SweepPredicate = ANY, budget: int = DECIDE_BUDGET
) -> bool:
    """True iff decide gives the same outcome kind on every member of ``orbit``."""
    return len(set(orbit_outcomes(orbit, predicate, budget).values())) <= 1

