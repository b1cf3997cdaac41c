"""Exact pointwise comparison of integer polynomials on [0,1].

The decision is a proof, not a numeric estimate: the difference d = g - f
is reduced to its square-free part, all real roots of d in (0,1) are
isolated with Sturm-sequence bisection over rationals, and d's sign is
sampled exactly between consecutive roots. Incomparable verdicts come
with two rational witness intervals carrying opposite strict signs.

A cheap sufficient certificate (nonnegativity of d's coefficients in the
basis p^i (1-p)^(n-i), optionally degree-elevated) short-circuits most
comparable pairs before any root isolation happens.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

from .polynomials import Poly, evaluate, is_zero, sub, trim

Interval = tuple[Fraction, Fraction]

LE = "LE"
GE = "GE"
EQ = "EQ"
INCOMPARABLE = "INCOMPARABLE"


@dataclass(frozen=True)
class ComparisonResult:
    verdict: str
    # number of distinct roots of g - f inside (0,1); None when a
    # certificate decided the verdict without isolating roots
    interior_roots: int | None = None
    witnesses: tuple[Interval, Interval] | None = None

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "interior_roots": self.interior_roots,
            "witnesses": None
            if self.witnesses is None
            else [[str(w[0]), str(w[1])] for w in self.witnesses],
        }


# --- integer polynomial helpers ------------------------------------------

def _deriv(c):
    return trim([i * c[i] for i in range(1, len(c))]) if len(c) > 1 else (0,)


def _content(c) -> int:
    g = 0
    for x in c:
        g = gcd(g, abs(x))
    return g or 1


def _primitive(c):
    g = _content(c)
    return tuple(x // g for x in c)


def _pseudo_rem(f, g):
    """Remainder of f by g scaled by a strictly positive integer."""
    r = list(trim(f))
    dg = len(g) - 1
    c = g[-1]
    steps = 0
    while len(r) - 1 >= dg and any(r):
        s = r[-1]
        if s == 0:
            r.pop()
            continue
        r = [c * x for x in r]
        shift = len(r) - 1 - dg
        for i in range(len(g)):
            r[shift + i] -= s * g[i]
        r.pop()
        steps += 1
    if c < 0 and steps % 2 == 1:
        r = [-x for x in r]
    return trim(r)


def _gcd_poly(f, g):
    a, b = _primitive(trim(f)), _primitive(trim(g))
    if is_zero(a):
        return b
    while not is_zero(b):
        a, b = b, _primitive(_pseudo_rem(a, b))
    if a[-1] < 0:
        a = tuple(-x for x in a)
    return a


def _div_exact(f, g):
    """Exact polynomial quotient f / g (raises if not exact)."""
    rem = [Fraction(x) for x in f]
    q = [Fraction(0)] * (len(f) - len(g) + 1)
    for k in reversed(range(len(q))):
        coef = rem[k + len(g) - 1] / g[-1]
        q[k] = coef
        for i in range(len(g)):
            rem[k + i] -= coef * g[i]
    if any(rem):
        raise ArithmeticError("polynomial division was not exact")
    if any(x.denominator != 1 for x in q):
        raise ArithmeticError("expected an integer quotient")
    return trim(int(x) for x in q)


def _square_free(c):
    c = _primitive(trim(c))
    d = _deriv(c)
    if is_zero(d):
        return c
    return _primitive(_div_exact(c, _gcd_poly(c, d)))


# --- Sturm sequences -------------------------------------------------------

def _sturm_chain(p):
    chain = [_primitive(trim(p)), _primitive(_deriv(p))]
    while len(chain[-1]) > 1:
        r = _pseudo_rem(chain[-2], chain[-1])
        if is_zero(r):
            break
        chain.append(tuple(-x for x in _primitive(r)))
    return chain


def _sign_at(c, a: Fraction) -> int:
    # homogeneous integer evaluation: sign of sum c_i p^i q^(n-i)
    p, q = a.numerator, a.denominator
    acc = 0
    pw = 1
    qw = q ** (len(c) - 1)
    for x in c:
        acc += x * pw * qw
        pw *= p
        if qw:
            qw //= q
    return (acc > 0) - (acc < 0)


def _variations(chain, a: Fraction) -> int:
    signs = [s for s in (_sign_at(c, a) for c in chain) if s != 0]
    return sum(1 for x, y in zip(signs, signs[1:]) if x != y)


def _count_roots(chain, a: Fraction, b: Fraction) -> int:
    """Distinct roots in (a, b]; requires chain[0](a) != 0."""
    return _variations(chain, a) - _variations(chain, b)


def _nonroot_point(sf, lo: Fraction, hi: Fraction) -> Fraction:
    span = hi - lo
    k = 2
    while True:
        for i in range(1, k):
            t = lo + span * Fraction(i, k)
            if _sign_at(sf, t) != 0:
                return t
        k += 1


def isolate_unit_roots(sf) -> list[Interval]:
    """Disjoint ordered open intervals, one distinct root of sf each.

    Requires sf square-free with sf(0) != 0 and sf(1) != 0. The first
    interval starts strictly above 0 and the last ends strictly below 1,
    so interval endpoints are valid sign-sample points.
    """
    chain = _sturm_chain(sf)
    zero, one = Fraction(0), Fraction(1)
    out: list[Interval] = []
    stack = [(zero, one, _count_roots(chain, zero, one))]
    while stack:
        a, b, cnt = stack.pop()
        if cnt == 0:
            continue
        if cnt == 1:
            out.append((a, b))
            continue
        t = _nonroot_point(sf, a, b)
        left = _count_roots(chain, a, t)
        stack.append((a, t, left))
        stack.append((t, b, cnt - left))
    out.sort()

    def shrink(iv: Interval) -> Interval:
        t = _nonroot_point(sf, iv[0], iv[1])
        if _count_roots(chain, iv[0], t) == 1:
            return (iv[0], t)
        return (t, iv[1])

    if out:
        while out[0][0] == 0:
            out[0] = shrink(out[0])
        while out[-1][1] == 1:
            out[-1] = shrink(out[-1])
    # open up a gap between touching neighbours so that witness intervals
    # strictly between roots always exist
    for i in range(1, len(out)):
        while out[i][0] == out[i - 1][1]:
            out[i] = shrink(out[i])
    return out


# --- certificates and the main comparator ---------------------------------

def _bernstein_nonneg(d, size: int) -> bool:
    """True if all coefficients of d in the p^i (1-p)^(size-i) basis are >= 0."""
    c = list(d) + [0] * (size + 1 - len(d))
    for i in range(size + 1):
        if sum(comb(size - k, i - k) * c[k] for k in range(i + 1)) < 0:
            return False
    return True


def _certificate_sign(d) -> int:
    """+1 / -1 if degree elevation certifies a sign for d on [0,1], else 0."""
    deg = len(d) - 1
    for size in (deg, deg + 16, deg + 64):
        if _bernstein_nonneg(d, size):
            return 1
        if _bernstein_nonneg([-x for x in d], size):
            return -1
    return 0


def _deflate_endpoints(sf):
    """Strip the roots at p = 0 and p = 1 (at most one each; sf square-free)."""
    sf = list(sf)
    if sf[0] == 0:
        sf = sf[1:]
    if sum(sf) == 0:  # p = 1 is a root
        sf = list(_div_exact(sf, (-1, 1)))
    return trim(sf)


def compare_coeffs(fc, gc, fast: bool = True) -> ComparisonResult:
    d = sub(gc, fc)
    if is_zero(d):
        return ComparisonResult(EQ)

    if fast:
        s = _certificate_sign(d)
        if s > 0:
            return ComparisonResult(LE)
        if s < 0:
            return ComparisonResult(GE)

    sf = _deflate_endpoints(_square_free(d))
    intervals = isolate_unit_roots(sf)

    samples: list[Fraction] = []
    if not intervals:
        samples.append(Fraction(1, 2))
    else:
        samples.append(intervals[0][0])
        for lo, hi in intervals:
            samples.append(hi)
    signs = []
    for s in samples:
        v = evaluate(d, s)
        assert v != 0, "sample point unexpectedly hit a root"
        signs.append(1 if v > 0 else -1)

    if all(s > 0 for s in signs):
        return ComparisonResult(LE, interior_roots=len(intervals))
    if all(s < 0 for s in signs):
        return ComparisonResult(GE, interior_roots=len(intervals))

    i_pos = signs.index(1)
    i_neg = signs.index(-1)
    w_pos = _witness_interval(intervals, i_pos)
    w_neg = _witness_interval(intervals, i_neg)
    return ComparisonResult(
        INCOMPARABLE,
        interior_roots=len(intervals),
        witnesses=(w_pos, w_neg),
    )


def _witness_interval(intervals: list[Interval], region: int) -> Interval:
    """A rational interval strictly inside (0,1) within sign region `region`."""
    if region == 0:
        lo1 = intervals[0][0]
        return (lo1 / 2, lo1)
    hi = intervals[region - 1][1]
    if region < len(intervals):
        return (hi, intervals[region][0])
    return (hi, (hi + 1) / 2)


def compare_on_unit_interval(f: Poly, g: Poly, fast: bool = True) -> ComparisonResult:
    """Exact pointwise order of f and g on [0,1]."""
    return compare_coeffs(f.coeffs, g.coeffs, fast=fast)


def strictly_below(f: Poly, g: Poly) -> bool:
    """True iff f < g at every p strictly inside (0,1)."""
    res = compare_coeffs(f.coeffs, g.coeffs, fast=False)
    return res.verdict == LE and res.interior_roots == 0
