import pytest
from hypothesis import given
from hypothesis import strategies as st

from matchnet.words import Word, all_words, dual_word, leq_H, leq_S, leq_SH

words = st.lists(st.sampled_from([0, 1]), min_size=0, max_size=10).map(
    lambda b: Word(tuple(b))
)


def word_pairs(m):
    ws = all_words(m)
    return [(u, v) for u in ws for v in ws]


def test_basic_attributes():
    u = Word((1, 1, 0, 1))
    assert u.m == 4
    assert u.support == (1, 2, 4)
    assert u.weight == 3
    assert u.rank == 7
    assert u.width == 8
    assert u.length == 2
    assert str(u) == "1101"
    assert Word.from_string("1101") == u
    assert Word.from_int(u.to_int(), 4) == u


def test_validation():
    with pytest.raises(ValueError):
        Word((0, 2))
    with pytest.raises(ValueError):
        Word.from_string("01x")
    with pytest.raises(ValueError):
        Word.from_int(8, 3)


def test_all_words_lexicographic():
    ws = [str(u) for u in all_words(3)]
    assert ws == ["000", "001", "010", "011", "100", "101", "110", "111"]
    assert len(all_words(0)) == 1


def test_leq_S_is_support_inclusion():
    assert leq_S(Word((0, 1, 0)), Word((1, 1, 0)))
    assert not leq_S(Word((0, 1, 0)), Word((1, 0, 1)))


def test_leq_H_examples():
    # support (1,3) moves right to (2,3) but not to (2, 2)... weights differ
    assert leq_H(Word((1, 0, 1)), Word((0, 1, 1)))
    assert not leq_H(Word((0, 1, 1)), Word((1, 0, 1)))
    with pytest.raises(ValueError):
        leq_H(Word((1, 0, 0)), Word((1, 1, 0)))


def test_leq_SH_mixes_both():
    assert leq_SH(Word((1, 0, 0)), Word((1, 0, 1)))  # support inclusion
    assert leq_SH(Word((1, 0, 1)), Word((0, 1, 1)))  # shift at equal weight
    assert not leq_SH(Word((1, 1, 0)), Word((0, 0, 1)))


@given(words)
def test_dual_word_is_involution(u):
    assert dual_word(dual_word(u)) == u
    assert dual_word(u).weight == u.m - u.weight


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_leq_SH_is_partial_order(m):
    ws = all_words(m)
    for u in ws:
        assert leq_SH(u, u)
    for u, v in word_pairs(m):
        if leq_SH(u, v) and leq_SH(v, u):
            assert u == v
    for u, v in word_pairs(m):
        if not leq_SH(u, v):
            continue
        for t in ws:
            if leq_SH(v, t):
                assert leq_SH(u, t)


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_rank_grades_the_order(m):
    for u, v in word_pairs(m):
        if u != v and leq_SH(u, v):
            assert u.rank < v.rank
