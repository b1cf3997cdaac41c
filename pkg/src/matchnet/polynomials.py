"""Exact reliability-polynomial arithmetic.

Polynomials live in the standard power basis with arbitrary-precision
integer coefficients and carry the size n of the network they came from.
The N-form is the expansion Rel(p) = sum_i N_i p^i (1-p)^(n-i), with N_i
counting the i-subsets of devices that connect source to terminus.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import caps
from .words import Word

Coeffs = tuple[int, ...]


def trim(c) -> Coeffs:
    c = list(c)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return tuple(c)


def add(a, b) -> Coeffs:
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def sub(a, b) -> Coeffs:
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def mul(a, b) -> Coeffs:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def scale(a, k: int) -> Coeffs:
    return trim([k * x for x in a])


def evaluate(c, p: Fraction) -> Fraction:
    acc = Fraction(0)
    for x in reversed(c):
        acc = acc * p + x
    return acc


def is_zero(c) -> bool:
    return all(x == 0 for x in c)


@dataclass(frozen=True)
class Poly:
    """Integer polynomial in p with a declared network size n (degree <= n)."""

    coeffs: Coeffs
    n: int

    def __post_init__(self):
        object.__setattr__(self, "coeffs", trim(self.coeffs))
        if len(self.coeffs) - 1 > self.n:
            raise ValueError(
                f"degree {len(self.coeffs) - 1} exceeds declared size {self.n}"
            )

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, p) -> Fraction:
        return evaluate(self.coeffs, Fraction(p))

    def to_dict(self) -> dict:
        return {"n": self.n, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_dict(cls, d: dict) -> "Poly":
        return cls(tuple(int(c) for c in d["coeffs"]), d["n"])


@dataclass(frozen=True)
class NForm:
    """Counts N_0..N_n of connecting device subsets by cardinality."""

    n: int
    counts: Coeffs

    def __post_init__(self):
        if len(self.counts) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} counts, got {len(self.counts)}")

    def to_dict(self) -> dict:
        return {"n": self.n, "counts": [str(c) for c in self.counts]}

    @classmethod
    def from_dict(cls, d: dict) -> "NForm":
        return cls(d["n"], tuple(int(c) for c in d["counts"]))


def base_series() -> Poly:
    """Two devices in series: p^2."""
    return Poly((0, 0, 1), 2)


def base_parallel() -> Poly:
    """Two devices in parallel: 1 - (1-p)^2 = 2p - p^2."""
    return Poly((0, 2, -1), 2)


def identity_poly() -> Poly:
    return Poly((0, 1), 1)


def compose_rel(u: Word, cap: int = caps.COMPOSE_M) -> Poly:
    """Functional composition of the base polynomials, u_1 outermost."""
    caps.check("composition length m", u.m, cap)
    r: Coeffs = (0, 1)
    for b in reversed(u.bits):
        sq = mul(r, r)
        r = sq if b == 0 else sub(scale(r, 2), sq)
    return Poly(r, max(1 << u.m, 1))


def nform_to_standard(x: NForm) -> Poly:
    n = x.n
    out = [0] * (n + 1)
    for i, ni in enumerate(x.counts):
        if ni:
            # N_i p^i (1-p)^(n-i)
            for j in range(n - i + 1):
                out[i + j] += ni * ((-1) ** j) * comb(n - i, j)
    return Poly(tuple(out), n)


def standard_to_nform(f: Poly, n: int | None = None) -> NForm:
    if n is None:
        n = f.n
    if f.degree > n:
        raise ValueError(f"degree {f.degree} exceeds declared size {n}")
    c = list(f.coeffs) + [0] * (n + 1 - len(f.coeffs))
    counts = tuple(sum(comb(n - k, i - k) * c[k] for k in range(i + 1)) for i in range(n + 1))
    return NForm(n, counts)


def nform_dominates(x: NForm, y: NForm) -> bool:
    """Componentwise N_i(x) <= N_i(y); implies pointwise Rel order on [0,1]."""
    if x.n != y.n:
        raise ValueError(f"size mismatch: {x.n} != {y.n}")
    return all(a <= b for a, b in zip(x.counts, y.counts))
