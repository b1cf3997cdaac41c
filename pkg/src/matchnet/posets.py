"""The poset of series/parallel compositions.

Covers the combinatorial structure under the support/shift order (leq_SH)
and under the exact pointwise reliability order: rank partition, Hasse
covers, maximum chains and antichains, middle elements, Dilworth number,
and the square-composition statistics.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from . import caps
from .compare import EQ, GE, INCOMPARABLE, LE, compare_on_unit_interval
from .polynomials import compose_rel
from .words import Word, all_words, leq_SH


@dataclass
class Poset:
    order: str  # "sh" or "pointwise"
    m: int
    elements: list[Word]
    # strict successor sets as bitmasks over element indices
    succ: list[int]
    covers: list[tuple[int, int]]
    ranks: list[int] | None = None  # SH order only
    incomparable: list[tuple[int, int]] = field(default_factory=list)
    equal_classes: list[tuple[int, ...]] = field(default_factory=list)

    def leq(self, i: int, j: int) -> bool:
        return i == j or bool(self.succ[i] >> j & 1)

    def rank_classes(self) -> list[list[int]]:
        if self.ranks is None:
            raise ValueError("rank partition exists only for the SH order")
        r = max(self.ranks)
        classes: list[list[int]] = [[] for _ in range(r + 1)]
        for i, rho in enumerate(self.ranks):
            classes[rho].append(i)
        return classes


def _transitive_reduction(succ: list[int]) -> list[tuple[int, int]]:
    """Hasse covers: pairs i < j with no strict element in between."""
    n = len(succ)
    pred = [0] * n
    for i in range(n):
        s = succ[i]
        k = 0
        while s:
            if s & 1:
                pred[k] |= 1 << i
            s >>= 1
            k += 1
    covers = []
    for i in range(n):
        si = succ[i]
        for j in range(n):
            if si >> j & 1 and si & pred[j] == 0:
                covers.append((i, j))
    return covers


def build_poset(m: int, order: str = "sh") -> Poset:
    if order == "sh":
        caps.check("m for SH poset", m, caps.POSET_SH_M)
        elements = all_words(m)
        n = len(elements)
        succ = [0] * n
        for i, u in enumerate(elements):
            for j, v in enumerate(elements):
                if i != j and leq_SH(u, v):
                    succ[i] |= 1 << j
        covers = _transitive_reduction(succ)
        return Poset("sh", m, elements, succ, covers, ranks=[u.rank for u in elements])

    if order == "pointwise":
        caps.check("m for pointwise poset", m, caps.POSET_POINTWISE_M)
        elements = all_words(m)
        polys = [compose_rel(u) for u in elements]
        n = len(elements)
        succ = [0] * n
        incomparable = []
        equal: dict[int, list[int]] = {}
        for i in range(n):
            for j in range(i + 1, n):
                res = compare_on_unit_interval(polys[i], polys[j])
                if res.verdict == LE:
                    succ[i] |= 1 << j
                elif res.verdict == GE:
                    succ[j] |= 1 << i
                elif res.verdict == EQ:
                    equal.setdefault(i, [i]).append(j)
                else:
                    incomparable.append((i, j))
        covers = _transitive_reduction(succ)
        return Poset(
            "pointwise", m, elements, succ, covers,
            incomparable=incomparable,
            equal_classes=[tuple(v) for v in equal.values()],
        )

    raise ValueError(f"unknown order {order!r}; expected 'sh' or 'pointwise'")


def incomparable_pairs(m: int) -> list[tuple[Word, Word]]:
    """All unordered word pairs the exact comparator declares incomparable."""
    caps.check("m for pointwise comparison", m, caps.POSET_POINTWISE_M)
    elements = all_words(m)
    polys = [compose_rel(u) for u in elements]
    out = []
    for i in range(len(elements)):
        for j in range(i + 1, len(elements)):
            if compare_on_unit_interval(polys[i], polys[j]).verdict == INCOMPARABLE:
                out.append((elements[i], elements[j]))
    return out


def max_chain(m: int) -> list[Word]:
    """Maximum-length SH chain hitting ranks 1..m(m+1)/2 exactly once.

    k = 0; for j = 1..m append k + 2^i for i = 0..m-j, then add 2^(m-j)
    to k. Integers decode with bit 2^i mapped to word index i+1.
    """
    values = []
    k = 0
    for j in range(1, m + 1):
        for i in range(m - j + 1):
            values.append(k + (1 << i))
        k += 1 << (m - j)
    return [Word.from_int(v, m) for v in values]  # ranks already ascend 1, 2, ...


def total_rank(m: int) -> int:
    return m * (m + 1) // 2


def middle_rank_indices(m: int) -> tuple[int, ...]:
    """One middle rank when m(m+1)/2 is even, its two neighbours otherwise."""
    r = total_rank(m)
    if r % 2 == 0:
        return (r // 2,)
    return (r // 2, r // 2 + 1)


def middle_element(m: int) -> Word:
    """A middle-rank word from the m mod 4 case table (search below m = 4)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if m < 4:
        targets = middle_rank_indices(m)
        for u in all_words(m):
            if u.rank in targets:
                return u
        raise AssertionError("unreachable")
    k, rem = divmod(m, 4)
    if rem == 0:
        bits = (0,) * k + (1,) * (2 * k) + (0,) * k
    elif rem == 1:
        bits = (0,) * (k + 1) + (1,) * (2 * k) + (0,) * k
    elif rem == 2:
        bits = (0,) * k + (1,) * (2 * k) + (0,) * (k + 1) + (1,)
    else:
        bits = (0,) * k + (1,) * (2 * k + 2) + (0,) * (k + 1)
    return Word(bits)


def antichain_at_rank(m: int, rho: int) -> list[Word]:
    """All words whose support sums to rho; pairwise SH-incomparable."""
    if not 0 <= rho <= total_rank(m):
        raise ValueError(f"rank {rho} out of range 0..{total_rank(m)}")
    out: list[Word] = []

    def rec(index: int, remaining: int, bits: list[int]):
        if remaining == 0:
            out.append(Word(tuple(bits + [0] * (m - len(bits)))))
            return
        # prune when indices index..m cannot reach the remaining sum
        if index > m or remaining > (index + m) * (m - index + 1) // 2:
            return
        rec(index + 1, remaining, bits + [0])
        if index <= remaining:
            rec(index + 1, remaining - index, bits + [1])

    rec(1, rho, [])
    return sorted(out, key=str)


def rank_profile(m: int) -> list[int]:
    """#P_0..#P_r: coefficients of prod_{k=1..m} (1 + x^k)."""
    caps.check("m for rank profile", m, caps.RANK_PROFILE_M)
    return _rank_profile_unchecked(m)


def _rank_profile_unchecked(m: int) -> list[int]:
    prof = [1]
    for k in range(1, m + 1):
        nxt = prof + [0] * k
        for i, c in enumerate(prof):
            nxt[i + k] += c
        prof = nxt
    return prof


def middle_maxima(m: int) -> int:
    """Largest rank-class size; equals the middle-rank cardinality."""
    return max(rank_profile(m))


def dilworth_number(m: int) -> int:
    """Minimum number of chains partitioning the SH poset (Dilworth)."""
    return middle_maxima(m)


def _weighted_profile(m: int) -> list[list[int]]:
    """table[s][w] = number of weight-w subsets of {1..m} with sum s."""
    table = [[0] * (m + 1) for _ in range(total_rank(m) + 1)]
    table[0][0] = 1
    for k in range(1, m + 1):
        for s in range(total_rank(m), k - 1, -1):
            row = table[s - k]
            dst = table[s]
            for w in range(m, 0, -1):
                dst[w] += row[w - 1]
    return table


@dataclass(frozen=True)
class SquareMiddleStats:
    m: int
    total_compositions: int
    square_compositions: int
    middle_counts: tuple[int, ...]
    square_middle_counts: tuple[int, ...]
    ratio: float


def square_middle_stats(m: int) -> SquareMiddleStats:
    """Counts of square (w = l) compositions in the middle of the poset."""
    if m % 2:
        raise ValueError("square compositions require even m")
    caps.check("m for rank profile", m, caps.RANK_PROFILE_M)
    prof = rank_profile(m)
    table = _weighted_profile(m)
    mids = middle_rank_indices(m)
    middle_counts = tuple(prof[i] for i in mids)
    square_middle = tuple(table[i][m // 2] for i in mids)
    return SquareMiddleStats(
        m=m,
        total_compositions=1 << m,
        square_compositions=comb(m, m // 2),
        middle_counts=middle_counts,
        square_middle_counts=square_middle,
        ratio=sum(square_middle) / comb(m, m // 2),
    )


def asymptotic_middle_ratio(m: int) -> float:
    """#P_mid * m^(3/2) / 2^m; tends to sqrt(6/pi) ~ 1.3820 as m grows."""
    caps.check("m for asymptotic ratio", m, caps.ASYMPTOTIC_M)
    prof = _rank_profile_unchecked(m)
    count = max(prof[i] for i in middle_rank_indices(m))
    return count * m ** 1.5 / 2 ** m
