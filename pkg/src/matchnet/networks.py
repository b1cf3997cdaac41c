"""Matchstick minimal networks (MMNs).

An MMN of width w and length l is a parallel-of-series skeleton of
n = w*l devices with vertical matchsticks placed between adjacent rows.
For w, l >= 2 the placement is recorded in a (w-1) x (l-1) binary
incidence matrix; the degenerate all-series (w=1) and all-parallel (l=1)
networks carry no matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import caps
from .words import Word

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class MMN:
    w: int
    l: int
    matchsticks: Matrix | None

    def __post_init__(self):
        if self.w < 1 or self.l < 1:
            raise ValueError(f"width and length must be >= 1, got {self.w}x{self.l}")
        if self.w < 2 or self.l < 2:
            if self.matchsticks is not None:
                raise ValueError(
                    "degenerate networks (w=1 or l=1) do not admit a matchstick matrix"
                )
            return
        m = self.matchsticks
        if m is None:
            raise ValueError(f"a {self.w}x{self.l} MMN requires a matchstick matrix")
        if len(m) != self.w - 1 or any(len(row) != self.l - 1 for row in m):
            raise ValueError(
                f"matchstick matrix must be {self.w - 1}x{self.l - 1}"
            )
        if any(e not in (0, 1) for row in m for e in row):
            raise ValueError("matchstick entries must be 0 or 1")

    @property
    def size(self) -> int:
        return self.w * self.l

    def to_dict(self) -> dict:
        return {
            "w": self.w,
            "l": self.l,
            "matchsticks": None
            if self.matchsticks is None
            else [list(row) for row in self.matchsticks],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "MMN":
        m = d["matchsticks"]
        return mmn_from_matrix(
            d["w"], d["l"], None if m is None else tuple(tuple(row) for row in m)
        )


@dataclass(frozen=True)
class GraphRealization:
    """Quotient graph of the PoS skeleton; one edge per device, labels 1..n."""

    node_count: int
    edges: tuple[tuple[int, int], ...]  # edges[k] realizes device k+1
    source: int
    terminus: int


def mmn_from_matrix(w: int, l: int, matchsticks=None) -> MMN:
    if matchsticks is not None:
        matchsticks = tuple(tuple(row) for row in matchsticks)
    return MMN(w, l, matchsticks)


def _grid(n: MMN) -> list[tuple[int, ...]]:
    """Matchstick entries as a (w-1) x (l-1) row list; empty dims allowed."""
    if n.matchsticks is not None:
        return list(n.matchsticks)
    return [()] * (n.w - 1) if n.l == 1 else []


def _from_grid(w: int, l: int, rows: list[list[int]]) -> MMN:
    if w < 2 or l < 2:
        return MMN(w, l, None)
    return MMN(w, l, tuple(tuple(row) for row in rows))


def pos(w: int, l: int) -> MMN:
    """Parallel-of-series: no matchsticks."""
    return _from_grid(w, l, [[0] * (l - 1) for _ in range(w - 1)])


def sop(w: int, l: int) -> MMN:
    """Series-of-parallel: all matchsticks present."""
    return _from_grid(w, l, [[1] * (l - 1) for _ in range(w - 1)])


def hammock(w: int, l: int, variant: str = "H") -> MMN:
    """Brick-wall MMN.

    Variant "H" places a matchstick at (i, j) iff i+j is odd, "H+" iff
    i+j is even; "H+" exists only when both w and l are even.
    """
    if variant not in ("H", "H+"):
        raise ValueError(f"unknown hammock variant {variant!r}")
    if variant == "H+" and (w % 2 or l % 2):
        raise ValueError("the H+ hammock requires both w and l even")
    want = 1 if variant == "H" else 0
    return _from_grid(
        w, l,
        [[1 if (i + j) % 2 == want else 0 for j in range(1, l)] for i in range(1, w)],
    )


def compose(n1: MMN, n2: MMN) -> MMN:
    """Replace every device of n1 by a copy of n2.

    The matchstick matrix interleaves copies of n2's matrix with all-ones
    junction columns and junction rows carrying n1's entries; degenerate
    widths/lengths simply contribute empty blocks.
    """
    g1, g2 = _grid(n1), _grid(n2)
    rows: list[list[int]] = []
    for a in range(n1.w):
        for r in range(n2.w - 1):
            row: list[int] = []
            for b in range(n1.l):
                row.extend(g2[r])
                if b < n1.l - 1:
                    row.append(1)
            rows.append(row)
        if a < n1.w - 1:
            row = []
            for b in range(n1.l):
                row.extend([0] * (n2.l - 1))
                if b < n1.l - 1:
                    row.append(g1[a][b])
            rows.append(row)
    return _from_grid(n1.w * n2.w, n1.l * n2.l, rows)


def single_device() -> MMN:
    return MMN(1, 1, None)


def two_in_series() -> MMN:
    return MMN(1, 2, None)


def two_in_parallel() -> MMN:
    return MMN(2, 1, None)


def mmn_from_word(u: Word) -> MMN:
    """Left fold of compose; u_1 is the outermost network."""
    net = single_device()
    for b in u.bits:
        net = compose(net, two_in_parallel() if b else two_in_series())
    return net


def dual(n: MMN) -> MMN:
    """Complement-transpose of the matchstick matrix; swaps w and l."""
    if n.matchsticks is None:
        return MMN(n.l, n.w, None)
    g = n.matchsticks
    transposed = tuple(
        tuple(1 - g[i][j] for i in range(n.w - 1)) for j in range(n.l - 1)
    )
    return MMN(n.l, n.w, transposed)


def count_mmns(w: int, l: int) -> int:
    if w < 1 or l < 1:
        raise ValueError("width and length must be >= 1")
    return 1 << ((w - 1) * (l - 1))


def count_mmns_of_size(n: int) -> int:
    if n < 1:
        raise ValueError("size must be >= 1")
    return sum(count_mmns(w, n // w) for w in range(1, n + 1) if n % w == 0)


def enumerate_mmns(w: int, l: int, cap: int = caps.ENUM_CELLS):
    """All MMNs of the given dimensions, in lexicographic matrix order."""
    cells = (w - 1) * (l - 1)
    caps.check("(w-1)*(l-1)", cells, cap)
    if cells == 0:
        yield MMN(w, l, None)
        return
    for code in range(1 << cells):
        rows = []
        for i in range(w - 1):
            row = []
            for j in range(l - 1):
                shift = cells - 1 - (i * (l - 1) + j)  # row-major, first cell is MSB
                row.append((code >> shift) & 1)
            rows.append(row)
        yield _from_grid(w, l, rows)


def enumerate_mmns_of_size(n: int, cap: int = caps.ENUM_CELLS):
    for w in range(1, n + 1):
        if n % w == 0:
            yield from enumerate_mmns(w, n // w, cap)


def graph_realization(n: MMN) -> GraphRealization:
    """Build the PoS skeleton and merge terminals and matchstick node pairs."""
    w, l = n.w, n.l
    idx = {}
    for i in range(1, w + 1):
        for j in range(l + 1):
            idx[(i, j)] = len(idx)
    parent = list(range(len(idx)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    for i in range(2, w + 1):
        union(idx[(1, 0)], idx[(i, 0)])
        union(idx[(1, l)], idx[(i, l)])
    g = _grid(n)
    for i in range(1, w):
        for j in range(1, l):
            if g[i - 1][j - 1]:
                union(idx[(i, j)], idx[(i + 1, j)])

    relabel: dict[int, int] = {}

    def node(i, j):
        root = find(idx[(i, j)])
        return relabel.setdefault(root, len(relabel))

    edges = []
    for i in range(1, w + 1):
        for j in range(1, l + 1):  # device (i, j) has index (i-1)*l + j
            edges.append((node(i, j - 1), node(i, j)))
    return GraphRealization(
        node_count=len(relabel),
        edges=tuple(edges),
        source=node(1, 0),
        terminus=node(1, l),
    )


def leq_M(n1: MMN, n2: MMN) -> bool:
    """Matchstick-inclusion order on a fixed (w, l) class, both dims >= 2."""
    if (n1.w, n1.l) != (n2.w, n2.l):
        raise ValueError("networks must have identical width and length")
    if n1.matchsticks is None or n2.matchsticks is None:
        raise ValueError("matchstick order requires w >= 2 and l >= 2")
    return all(
        a <= b
        for r1, r2 in zip(n1.matchsticks, n2.matchsticks)
        for a, b in zip(r1, r2)
    )
