import itertools

import pytest

from bandbraid.core import BandWord, all_words, closure_invariants, parse_band_word, word
from bandbraid.errors import BudgetExhaustedError
from bandbraid.graph import (
    WordKey,
    artin_equal_bands,
    canonical_key,
    conjugacy_orbit,
    equality_class,
    format_orbit,
    min_orbit_key,
    monoid_equal,
)
from bandbraid.rewriting import cycle, neighbors

W = word(3, (3, 2), (2, 1))


def dfs_closure(w, with_cycle):
    """Depth-first closure with reversed move order, via the public API only."""
    seen = {w}
    stack = [w]
    while stack:
        v = stack.pop()
        nxt = [u for _, u in reversed(neighbors(v))]
        if with_cycle and len(v):
            nxt.insert(0, cycle(v))
        for u in nxt:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return seen


class TestEqualityClass:
    def test_triple_class(self):
        report = equality_class(W)
        assert report.size == 3 and report.exact
        assert set(report.members) == {
            W,
            word(3, (2, 1), (3, 1)),
            word(3, (3, 1), (3, 2)),
        }
        assert report.representative == word(3, (2, 1), (3, 1))

    def test_reversed_product(self):
        assert equality_class(word(3, (2, 1), (3, 2))).size == 1

    def test_empty(self):
        assert equality_class(BandWord(3)).size == 1

    def test_budget_flag(self):
        report = equality_class(W, budget=2)
        assert report.budget_exhausted and report.size == 2

    def test_budget_exact_at_class_size(self):
        assert equality_class(W, budget=3).exact

    @pytest.mark.parametrize("n, max_k", [(3, 3), (4, 2)])
    def test_partition(self, n, max_k):
        for k in range(max_k + 1):
            words = list(all_words(n, k))
            classes = {w: frozenset(equality_class(w).members) for w in words}
            for w, cls in classes.items():
                assert w in cls
                for u in cls:
                    assert classes[u] == cls

    @pytest.mark.parametrize("n, k", [(3, 3), (4, 3), (5, 2)])
    def test_order_independent(self, n, k):
        for w in all_words(n, k):
            assert set(equality_class(w).members) == dfs_closure(w, False)


class TestMonoidEqual:
    def test_same_class(self):
        assert monoid_equal(W, word(3, (3, 1), (3, 2)))

    def test_distinct_classes(self):
        v = word(3, (2, 1), (3, 2))
        assert not monoid_equal(W, v)
        assert not artin_equal_bands(W, v)

    def test_reflexive(self):
        assert monoid_equal(W, W, budget=1)

    def test_different_lengths(self):
        assert not monoid_equal(W, word(3, (3, 2)))

    def test_budget_is_not_false(self):
        u = word(4, (2, 1), (4, 3), (3, 2), (2, 1))
        v = equality_class(u).members[-1]
        assert monoid_equal(u, v)
        with pytest.raises(BudgetExhaustedError):
            monoid_equal(u, v, budget=1)

    def test_agrees_with_artin_oracle(self):
        for k in range(4):
            words = list(all_words(3, k))
            for u, v in itertools.combinations(words, 2):
                assert monoid_equal(u, v) == artin_equal_bands(u, v)


class TestConjugacyOrbit:
    def test_unknot_orbit(self):
        report = conjugacy_orbit(W)
        assert report.size == 6
        expected = {w for w in all_words(3, 2) if len(set(w.letters)) == 2}
        assert set(report.members) == expected

    def test_fixed_word(self):
        assert conjugacy_orbit(word(3, (2, 1), (2, 1))).size == 1

    def test_single_letter(self):
        assert conjugacy_orbit(word(2, (2, 1))).size == 1

    @pytest.mark.parametrize("n, k", [(3, 3), (4, 3)])
    def test_order_independent(self, n, k):
        done = set()
        for w in all_words(n, k):
            if w in done:
                continue
            members = set(conjugacy_orbit(w).members)
            assert members == dfs_closure(w, True)
            done |= members

    @pytest.mark.parametrize("n, k", [(3, 3), (4, 3), (5, 2)])
    def test_invariants_constant(self, n, k):
        for w in all_words(n, k):
            inv = closure_invariants(w)
            assert all(closure_invariants(u) == inv for u in conjugacy_orbit(w).members)


class TestKeys:
    def test_single_generator(self):
        assert canonical_key(word(3, (2, 1))).ordinals == (0,)

    def test_two_letters(self):
        key = canonical_key(word(3, (3, 1), (3, 2)))
        assert key.ordinals == (1, 2)
        assert key.value == 1 * 3 + 2

    def test_min_orbit_key(self):
        key, exact = min_orbit_key(word(3, (3, 1), (3, 2)))
        assert exact
        assert key == canonical_key(word(3, (2, 1), (3, 1)))
        assert key.ordinals == (0, 1)

    @pytest.mark.parametrize("n, k", [(3, 3), (4, 2), (5, 2)])
    def test_packing_injective(self, n, k):
        values = {}
        for w in all_words(n, k):
            key = canonical_key(w)
            assert key.value not in values
            values[key.value] = w
            assert WordKey.from_value(n, k, key.value) == key
            assert key.decode() == w

    def test_value_order_matches_key_order(self):
        keys = [canonical_key(w) for w in all_words(4, 2)]
        assert sorted(keys) == sorted(keys, key=lambda x: x.value)


def test_orbit_dump():
    text = format_orbit(conjugacy_orbit(W))
    lines = text.splitlines()
    assert lines[0] == "n=3 k=2 size=6 exact=true"
    parsed = [parse_band_word(line, 3) for line in lines[1:]]
    assert [canonical_key(w) for w in parsed] == sorted(canonical_key(w) for w in parsed)
    assert len(parsed) == 6
