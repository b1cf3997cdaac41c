"""Brute-force reliability oracle over the full device state space.

Selects the compiled enumeration kernel at import time and falls back to
the pure-Python implementation when the extension is unavailable (or when
MATCHNET_PURE=1 is set).
"""

from __future__ import annotations

import os

from . import caps
from .networks import MMN, dual, graph_realization
from .polynomials import NForm, Poly, add, mul, nform_to_standard, sub

if os.environ.get("MATCHNET_PURE") == "1":
    from . import _statecount_py as _kernel
else:
    try:
        from . import _statecount as _kernel  # type: ignore[attr-defined]
    except ImportError:
        from . import _statecount_py as _kernel

KERNEL = _kernel.IMPLEMENTATION


def brute_force_rel(n: MMN, cap: int = caps.BRUTE_FORCE_SIZE) -> NForm:
    """Exact N-form by enumerating all 2^n working/failed device states."""
    caps.check("network size n", n.size, cap)
    g = graph_realization(n)
    counts = _kernel.count_connecting(g.node_count, g.edges, g.source, g.terminus)
    return NForm(n.size, tuple(int(c) for c in counts))


def brute_force_poly(n: MMN, cap: int = caps.BRUTE_FORCE_SIZE) -> Poly:
    return nform_to_standard(brute_force_rel(n, cap))


def dual_reliability_check(n: MMN, cap: int = caps.BRUTE_FORCE_SIZE) -> bool:
    """Verify Rel(N; p) + Rel(dual(N); 1-p) = 1 as an exact identity."""
    f = brute_force_poly(n, cap)
    g = brute_force_poly(dual(n), cap)
    # substitute p -> 1-p in g
    gt: tuple[int, ...] = (0,)
    one_minus_p = (1, -1)
    power = (1,)
    for c in g.coeffs:
        if c:
            gt = add(gt, tuple(c * x for x in power))
        power = mul(power, one_minus_p)
    return sub(add(f.coeffs, gt), (1,)) == (0,)
