"""Binary composition words and the support-based partial orders.

A word u = (u_1, ..., u_m) encodes the iterated composition where bit 0
stands for two devices in series and bit 1 for two devices in parallel.
Indexing is 1-based throughout: the support of (1,1,0,1) is {1, 2, 4}.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Word:
    bits: tuple[int, ...]

    def __post_init__(self):
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError(f"word bits must be 0 or 1, got {self.bits}")

    @classmethod
    def from_string(cls, s: str) -> "Word":
        if any(c not in "01" for c in s):
            raise ValueError(f"word string must consist of '0'/'1' characters: {s!r}")
        return cls(tuple(int(c) for c in s))

    @classmethod
    def from_int(cls, value: int, m: int) -> "Word":
        """Decode an integer with bit 2^i mapped to index i+1 (LSB = u_1)."""
        if not 0 <= value < (1 << m):
            raise ValueError(f"integer {value} does not fit in {m} bits")
        return cls(tuple((value >> i) & 1 for i in range(m)))

    def to_int(self) -> int:
        return sum(b << i for i, b in enumerate(self.bits))

    @property
    def m(self) -> int:
        return len(self.bits)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, b in enumerate(self.bits) if b)

    @property
    def weight(self) -> int:
        return sum(self.bits)

    @property
    def width(self) -> int:
        return 1 << self.weight

    @property
    def length(self) -> int:
        return 1 << (self.m - self.weight)

    @property
    def rank(self) -> int:
        return sum(self.support)

    def complement(self) -> "Word":
        return Word(tuple(1 - b for b in self.bits))

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)


def _check_lengths(u: Word, v: Word) -> None:
    if u.m != v.m:
        raise ValueError(f"word length mismatch: {u.m} != {v.m}")


def leq_S(u: Word, v: Word) -> bool:
    """Support inclusion: supp(u) is a subset of supp(v)."""
    _check_lengths(u, v)
    return u.to_int() & ~v.to_int() == 0


def leq_H(u: Word, v: Word) -> bool:
    """Sorted supports compare componentwise (equal weights only)."""
    _check_lengths(u, v)
    if u.weight != v.weight:
        raise ValueError(f"Hamming weight mismatch: {u.weight} != {v.weight}")
    return all(s <= t for s, t in zip(u.support, v.support))


def leq_SH(u: Word, v: Word) -> bool:
    """The order generated by support inclusion and the shift order.

    The raw union of the two relations is not transitive (e.g. {2} shifts
    to {3} which is contained in {1,3}, yet {2} is neither contained in
    nor shifts into {1,3} directly). Its transitive closure is the poset
    of partitions into distinct summands: u <= v iff weight(u) <= weight(v)
    and the i-th largest support element of u is <= the i-th largest of v.
    """
    _check_lengths(u, v)
    su, sv = u.support, v.support
    if len(su) > len(sv):
        return False
    off = len(sv) - len(su)
    return all(s <= sv[off + i] for i, s in enumerate(su))


def rank(u: Word) -> int:
    """Sum of support indices; grades the SH poset from 0 to m(m+1)/2."""
    return u.rank


def dual_word(u: Word) -> Word:
    """Bitwise complement; encodes the dual network of the composition."""
    return u.complement()


def all_words(m: int):
    """All 2^m words in lexicographic order of their bit strings."""
    return [Word(bits) for bits in _lex_bits(m)]


def _lex_bits(m: int):
    if m == 0:
        yield ()
        return
    for head in (0, 1):
        for tail in _lex_bits(m - 1):
            yield (head,) + tail
