"""Pure-Python fallback for the 2^n state-enumeration kernel.

Functionally identical to the compiled extension in _statecount.pyx;
kept dependency-free so the package still works without a C toolchain.
"""

IMPLEMENTATION = "python"


def count_connecting(node_count: int, edges, source: int, terminus: int) -> list[int]:
    """For each i, count the i-subsets of edges connecting source to terminus.

    Enumerates all 2^len(edges) working/failed states with a small
    union-find per state. Exact; result fits machine integers for n <= 24.
    """
    n = len(edges)
    eu = [e[0] for e in edges]
    ev = [e[1] for e in edges]
    counts = [0] * (n + 1)
    base = list(range(node_count))
    for mask in range(1 << n):
        parent = base[:]
        for k in range(n):
            if mask >> k & 1:
                x = eu[k]
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                y = ev[k]
                while parent[y] != y:
                    parent[y] = parent[parent[y]]
                    y = parent[y]
                if x != y:
                    parent[y] = x
        x = source
        while parent[x] != x:
            x = parent[x]
        y = terminus
        while parent[y] != y:
            y = parent[y]
        if x == y:
            counts[mask.bit_count()] += 1
    return counts
