import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ncrewrite import (
    AlphabetError,
    compare_nilp,
    compare_zd,
    height,
    nilpotency_order,
    parse_word,
    weighted_degree,
    zerodivisor_order,
)
from ncrewrite.orders import EQUAL, GREATER, LESS


def brute_height(w):
    # independent oracle: split on t, then sum 2^i * block length
    blocks = "|".join(w).split("t")
    blocks = [[x for x in b.split("|") if x] for b in blocks]
    return sum(2**i * len(b) for i, b in enumerate(blocks))


class TestHeight:
    @pytest.mark.parametrize("text,expected", [
        ("t t", 0),
        ("R a0", 2),
        ("t R a0", 4),
        ("eps", 0),
        ("t", 0),
    ])
    def test_examples(self, text, expected):
        assert height(parse_word(text)) == expected

    def test_rejects_psi_letters(self):
        with pytest.raises(AlphabetError):
            height(("s",))
        with pytest.raises(AlphabetError):
            height(("L",))

    @given(st.lists(st.sampled_from(["t", "a0", "a1", "Q2", "P3", "R"]), max_size=10))
    def test_matches_brute_force(self, letters):
        w = tuple(letters)
        assert height(w) == brute_height(w)

    @given(st.lists(st.sampled_from(["t", "a0", "Q1", "R"]), max_size=8))
    def test_t_multiplication_laws(self, letters):
        w = tuple(letters)
        assert height(("t",) + w) == 2 * height(w)
        assert height(w + ("t",)) == height(w)


class TestWeightedDegree:
    def test_paper_example(self):
        assert weighted_degree(parse_word("t R L")) == 4

    def test_empty(self):
        assert weighted_degree(()) == 0

    def test_mixed(self):
        assert weighted_degree(parse_word("t a0 Q1 P2")) == 5


class TestCompareNilp:
    def test_height_tiebreak(self):
        assert compare_nilp(parse_word("t R a1"), parse_word("R t a1")) == GREATER

    def test_reflexive(self):
        w = parse_word("t R a1 Q2 P3 R")
        assert compare_nilp(w, w) == EQUAL

    def test_deg_t_dominates_length(self):
        assert compare_nilp(parse_word("t"), parse_word("R R R R R")) == GREATER

    def test_rejects_s(self):
        with pytest.raises(AlphabetError):
            compare_nilp(("s",), ("t",))


class TestCompareZd:
    def test_lex_tiebreak(self):
        assert compare_zd(parse_word("t L a2"), parse_word("L t a2")) == GREATER

    def test_reflexive(self):
        w = parse_word("t L Q0 P2 R s")
        assert compare_zd(w, w) == EQUAL

    def test_weight_dominates(self):
        # td3 lhs vs rhs: weights 5 vs 4
        assert compare_zd(parse_word("t a0 Q0 P0"), parse_word("Q0 P0 a0 s")) == GREATER


@pytest.mark.parametrize("order,letters", [
    (nilpotency_order(), ("t", "a0", "R")),
    (zerodivisor_order(), ("t", "s", "L")),
])
def test_totality_and_minimality_small(order, letters):
    words = [()]
    for n in (1, 2, 3):
        words.extend(itertools.product(letters, repeat=n))
    for w1 in words:
        for w2 in words:
            c = order.compare(w1, w2)
            if w1 == w2:
                assert c == EQUAL
            else:
                assert c in (LESS, GREATER)
                assert order.compare(w2, w1) == -c
    for w in words:
        if w:
            assert order.compare((), w) == LESS


@given(
    st.lists(st.sampled_from(["t", "s", "a0", "a1", "L", "R"]), max_size=7),
    st.lists(st.sampled_from(["t", "s", "a0", "a1", "L", "R"]), max_size=7),
    st.sampled_from(["t", "s", "a0", "a1", "L", "R"]),
)
def test_zd_compatibility_random(l1, l2, x):
    order = zerodivisor_order()
    w1, w2 = tuple(l1), tuple(l2)
    c = order.compare(w1, w2)
    assert order.compare((x,) + w1, (x,) + w2) == c
    assert order.compare(w1 + (x,), w2 + (x,)) == c


@given(
    st.lists(st.sampled_from(["t", "a0", "a1", "Q0", "R"]), max_size=7),
    st.lists(st.sampled_from(["t", "a0", "a1", "Q0", "R"]), max_size=7),
    st.sampled_from(["t", "a0", "a1", "Q0", "R"]),
)
def test_nilp_compatibility_random(l1, l2, x):
    order = nilpotency_order()
    w1, w2 = tuple(l1), tuple(l2)
    c = order.compare(w1, w2)
    assert order.compare((x,) + w1, (x,) + w2) == c
    assert order.compare(w1 + (x,), w2 + (x,)) == c
