from math import comb

import pytest

from matchnet import caps
from matchnet.posets import (
    antichain_at_rank,
    asymptotic_middle_ratio,
    build_poset,
    dilworth_number,
    incomparable_pairs,
    max_chain,
    middle_element,
    middle_maxima,
    middle_rank_indices,
    rank_profile,
    square_middle_stats,
    total_rank,
)
from matchnet.words import all_words, leq_SH


def test_build_sh_poset_m3():
    poset = build_poset(3)
    assert len(poset.elements) == 8
    assert poset.ranks == [u.rank for u in poset.elements]
    # covers form the transitive reduction: reachability must regenerate succ
    n = len(poset.elements)
    adj = [[j for i2, j in poset.covers if i2 == i] for i in range(n)]
    for i in range(n):
        seen = 0
        stack = list(adj[i])
        while stack:
            j = stack.pop()
            if not (seen >> j) & 1:
                seen |= 1 << j
                stack.extend(adj[j])
        assert seen == poset.succ[i]


def test_cover_is_minimal():
    poset = build_poset(4)
    succ = poset.succ
    # no intermediate element strictly between the ends of a cover
    for i, j in poset.covers:
        assert (succ[i] >> j) & 1
        pred_j = [k for k in range(len(succ)) if (succ[k] >> j) & 1]
        assert all(not (succ[i] >> k) & 1 for k in pred_j)


def test_pointwise_poset_m4_total():
    poset = build_poset(4, order="pointwise")
    assert poset.incomparable == []
    n = len(poset.elements)
    in_class = {i for cls in poset.equal_classes for i in cls}
    for i in range(n):
        for j in range(i + 1, n):
            comparable = poset.leq(i, j) or poset.leq(j, i)
            assert comparable or (i in in_class and j in in_class)


def test_incomparable_pairs_small_m():
    assert incomparable_pairs(3) == []
    assert incomparable_pairs(4) == []
    assert len(incomparable_pairs(5)) >= 3


def test_poset_caps():
    with pytest.raises(caps.CapExceededError):
        build_poset(caps.POSET_SH_M + 1)
    with pytest.raises(caps.CapExceededError):
        build_poset(caps.POSET_POINTWISE_M + 1, order="pointwise")
    with pytest.raises(ValueError):
        build_poset(3, order="bogus")


@pytest.mark.parametrize("m", range(1, 11))
def test_max_chain_properties(m):
    chain = max_chain(m)
    r = total_rank(m)
    assert len(chain) == r == comb(m + 1, 2)
    assert [u.rank for u in chain] == list(range(1, r + 1))
    for u, v in zip(chain, chain[1:]):
        assert leq_SH(u, v) and u != v


def test_middle_rank_indices():
    assert middle_rank_indices(4) == (5,)
    assert middle_rank_indices(5) == (7, 8)
    assert middle_rank_indices(6) == (10, 11)
    assert middle_rank_indices(8) == (18,)


@pytest.mark.parametrize("m", range(1, 21))
def test_middle_element_hits_middle_rank(m):
    u = middle_element(m)
    assert u.m == m
    assert u.rank in middle_rank_indices(m)
    assert u.complement().rank in middle_rank_indices(m)


def test_antichain_m5_rank7():
    got = {u.support for u in antichain_at_rank(5, 7)}
    assert got == {(1, 2, 4), (3, 4), (2, 5)}
    assert len(antichain_at_rank(5, 8)) == 3


def test_antichain_is_antichain():
    for rho in middle_rank_indices(6):
        words = antichain_at_rank(6, rho)
        for u in words:
            for v in words:
                if u != v:
                    assert not leq_SH(u, v)


def test_antichain_bounds():
    with pytest.raises(ValueError):
        antichain_at_rank(4, 11)
    assert [u.support for u in antichain_at_rank(4, 0)] == [()]


def test_rank_profile_m4():
    assert rank_profile(4) == [1, 1, 1, 2, 2, 2, 2, 2, 1, 1, 1]


@pytest.mark.parametrize("m", range(1, 14))
def test_rank_profile_symmetric_unimodal(m):
    prof = rank_profile(m)
    assert len(prof) == total_rank(m) + 1
    assert sum(prof) == 2 ** m
    assert prof == prof[::-1]
    mid = max(range(len(prof)), key=lambda i: prof[i])
    assert all(prof[i] <= prof[i + 1] for i in range(mid))
    assert all(prof[i] >= prof[i + 1] for i in range(mid, len(prof) - 1))


def test_antichain_sizes_match_profile():
    for m in (4, 5, 6):
        prof = rank_profile(m)
        for rho in range(len(prof)):
            assert len(antichain_at_rank(m, rho)) == prof[rho]


def test_middle_maxima_and_dilworth():
    assert [middle_maxima(m) for m in range(0, 11)] == [
        1, 1, 1, 2, 2, 3, 5, 8, 14, 23, 40,
    ]
    assert dilworth_number(8) == 14


def test_square_middle_stats():
    s = square_middle_stats(8)
    assert s.total_compositions == 256
    assert s.square_compositions == 70
    assert s.middle_counts == (14,)
    assert s.square_middle_counts == (8,)
    assert s.ratio == pytest.approx(8 / 70)
    with pytest.raises(ValueError):
        square_middle_stats(5)


def test_asymptotic_ratio():
    r8 = asymptotic_middle_ratio(8)
    assert r8 == pytest.approx(14 * 8 ** 1.5 / 256)
    assert 1.0 < r8 < 1.3821
    with pytest.raises(caps.CapExceededError):
        asymptotic_middle_ratio(caps.ASYMPTOTIC_M + 1)
