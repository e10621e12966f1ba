import itertools

import pytest
from hypothesis import given, strategies as st

from bandbraid.core import BandWord, Permutation, all_words, closure_invariants, generators, permutation, word
from bandbraid.errors import EmptyWordError, InapplicableMoveError, WordSyntaxError
from bandbraid.graph import artin_equal_bands
from bandbraid.rewriting import (
    Commute,
    Cycle,
    Triple,
    apply_move,
    cycle,
    neighbors,
    parse_move,
    r1_commutes,
    r2_variants,
)
from bandbraid.core import BandGenerator as G


@st.composite
def words(draw, min_n=2, max_n=5, max_k=7):
    n = draw(st.integers(min_n, max_n))
    ords = draw(st.lists(st.integers(0, n * (n - 1) // 2 - 1), max_size=max_k))
    return BandWord.from_ordinals(n, ords)


class TestR1:
    def test_disjoint(self):
        assert r1_commutes(G(2, 1), G(4, 3))

    def test_nested(self):
        assert r1_commutes(G(4, 1), G(3, 2))

    def test_interleaved(self):
        assert not r1_commutes(G(3, 1), G(4, 2))

    def test_shared_index(self):
        assert not r1_commutes(G(3, 1), G(2, 1))
        assert not r1_commutes(G(2, 1), G(2, 1))

    def test_symmetric(self):
        for x, y in itertools.product(generators(6), repeat=2):
            assert r1_commutes(x, y) == r1_commutes(y, x)


class TestR2:
    def test_instance(self):
        assert r2_variants(G(3, 2), G(2, 1)) == [(G(2, 1), G(3, 1)), (G(3, 1), G(3, 2))]

    def test_reversed_product(self):
        assert r2_variants(G(2, 1), G(3, 2)) == []

    def test_no_shared_index(self):
        assert r2_variants(G(2, 1), G(4, 3)) == []

    @pytest.mark.parametrize("t, s, r", [(3, 2, 1), (5, 3, 1), (6, 4, 2)])
    def test_three_forms_cycle_among_themselves(self, t, s, r):
        forms = [(G(t, s), G(s, r)), (G(s, r), G(t, r)), (G(t, r), G(t, s))]
        for i, f in enumerate(forms):
            assert r2_variants(*f) == [g for j, g in enumerate(forms) if j != i]
        for x, y in forms:
            assert r2_variants(y, x) == []

    def test_r1_and_r2_exclusive(self):
        for x, y in itertools.product(generators(6), repeat=2):
            assert not (r1_commutes(x, y) and r2_variants(x, y))


class TestNeighbors:
    def test_triple_site(self):
        out = neighbors(word(3, (3, 2), (2, 1)))
        assert out == [
            (Triple(0, 0), word(3, (2, 1), (3, 1))),
            (Triple(0, 1), word(3, (3, 1), (3, 2))),
        ]

    def test_commute_site(self):
        assert neighbors(word(4, (2, 1), (4, 3))) == [(Commute(0), word(4, (4, 3), (2, 1)))]

    def test_interleaved(self):
        assert neighbors(word(4, (3, 1), (4, 2))) == []

    def test_positions_ascend(self):
        w = word(4, (2, 1), (4, 3), (3, 2), (2, 1))
        moves = [m for m, _ in neighbors(w)]
        assert moves == [Commute(0), Triple(1, 0), Triple(1, 1), Triple(2, 0), Triple(2, 1)]

    @given(words())
    def test_invariants_preserved(self, w):
        p = permutation(w)
        for m, v in neighbors(w):
            assert len(v) == len(w)
            assert permutation(v) == p
            assert not isinstance(m, Cycle)

    @given(words())
    def test_symmetric(self, w):
        for _, v in neighbors(w):
            assert w in [u for _, u in neighbors(v)]

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_sound_on_all_pairs(self, n):
        for w in all_words(n, 2):
            for _, v in neighbors(w):
                assert artin_equal_bands(w, v)


class TestApplyMove:
    def test_triple(self):
        assert apply_move(word(3, (3, 2), (2, 1)), Triple(0, 0)) == word(3, (2, 1), (3, 1))

    def test_cycle(self):
        assert apply_move(word(3, (2, 1), (3, 1)), Cycle()) == word(3, (3, 1), (2, 1))

    def test_commute_at_shared_index(self):
        with pytest.raises(InapplicableMoveError) as info:
            apply_move(word(3, (2, 1), (3, 1)), Commute(0))
        assert info.value.position == 0

    def test_triple_at_commute_site(self):
        with pytest.raises(InapplicableMoveError):
            apply_move(word(4, (2, 1), (4, 3)), Triple(0, 1))

    def test_position_out_of_range(self):
        with pytest.raises(InapplicableMoveError):
            apply_move(word(3, (2, 1), (3, 1)), Commute(1))

    def test_cycle_empty(self):
        with pytest.raises(InapplicableMoveError):
            apply_move(BandWord(3), Cycle())

    @given(words())
    def test_neighbors_agree_with_apply(self, w):
        for m, v in neighbors(w):
            assert apply_move(w, m) == v


class TestCycle:
    def test_rotation(self):
        assert cycle(word(3, (2, 1), (3, 2))) == word(3, (3, 2), (2, 1))

    def test_single_letter(self):
        w = word(3, (3, 1))
        assert cycle(w) == w

    def test_empty(self):
        with pytest.raises(EmptyWordError):
            cycle(BandWord(2))

    @given(words())
    def test_order_divides_length(self, w):
        if not len(w):
            return
        v = w
        for _ in range(len(w)):
            v = cycle(v)
        assert v == w

    @given(words())
    def test_conjugates_permutation(self, w):
        if not len(w):
            return
        a = w.letters[0]
        tau = Permutation.transposition(w.strands, a.t, a.s)
        expected = tau.then(permutation(w)).then(tau)
        assert permutation(cycle(w)) == expected
        assert closure_invariants(cycle(w)) == closure_invariants(w)


class TestSerialization:
    @pytest.mark.parametrize("m", [Commute(0), Commute(12), Triple(3, 0), Triple(0, 1), Cycle()])
    def test_round_trip(self, m):
        assert parse_move(str(m)) == m

    def test_formats(self):
        assert [str(m) for m in (Commute(2), Triple(1, 1), Cycle())] == ["C@2", "T@1>1", "R"]

    @pytest.mark.parametrize("text", ["C2", "T@1>2", "X", "R@0"])
    def test_bad(self, text):
        with pytest.raises(WordSyntaxError):
            parse_move(text)
