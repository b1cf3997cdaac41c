# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled state-enumeration kernel.

Mirrors _statecount_py.count_connecting; see there for the contract.
"""

IMPLEMENTATION = "cython"

DEF MAX_EDGES = 30
DEF MAX_NODES = 64


def count_connecting(int node_count, edges, int source, int terminus):
    cdef int n = len(edges)
    if n > MAX_EDGES or node_count > MAX_NODES:
        raise ValueError("problem too large for the compiled kernel")

    cdef int eu[MAX_EDGES]
    cdef int ev[MAX_EDGES]
    cdef int parent[MAX_NODES]
    cdef long long counts[MAX_EDGES + 1]
    cdef int k, x, y, bits
    cdef unsigned long long mask, total = 1ULL << n

    for k in range(n):
        eu[k] = edges[k][0]
        ev[k] = edges[k][1]
    for k in range(n + 1):
        counts[k] = 0

    for mask in range(total):
        for k in range(node_count):
            parent[k] = k
        bits = 0
        for k in range(n):
            if (mask >> k) & 1:
                bits += 1
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
            counts[bits] += 1

    return [counts[k] for k in range(n + 1)]
