"""Serialization helpers: JSON, CSV curves, DOT Hasse diagrams.

All output is deterministic (sorted keys, fixed field order, exact
rational arithmetic truncated to a fixed number of decimals) so repeated
runs produce byte-identical files.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .compare import ComparisonResult
from .networks import MMN
from .polynomials import NForm, Poly
from .posets import Poset


def to_json(obj) -> str:
    if hasattr(obj, "to_dict"):
        obj = obj.to_dict()
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def parse_grid(spec: str) -> list[Fraction]:
    """Parse "start:stop:step" into an exact rational grid (inclusive)."""
    parts = spec.split(":")
    if len(parts) != 3:
        raise ValueError(f"grid must be start:stop:step, got {spec!r}")
    start, stop, step = (Fraction(p) for p in parts)
    if step <= 0 or stop < start:
        raise ValueError(f"invalid grid {spec!r}")
    grid = []
    k = 0
    while start + k * step <= stop:
        grid.append(start + k * step)
        k += 1
    return grid


def format_decimal(x: Fraction, digits: int = 12) -> str:
    """Exact decimal expansion of x truncated (not rounded) to `digits`."""
    sign = "-" if x < 0 else ""
    x = abs(x)
    whole, rem = divmod(x.numerator, x.denominator)
    frac_digits = []
    for _ in range(digits):
        rem *= 10
        d, rem = divmod(rem, x.denominator)
        frac_digits.append(str(d))
    s = f"{sign}{whole}." + "".join(frac_digits)
    return s.rstrip("0").rstrip(".") or "0"


def curve_csv(polys: dict[str, Poly], grid: list[Fraction], digits: int = 12) -> str:
    """CSV with one p column and one reliability column per labelled poly."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    labels = list(polys)
    writer.writerow(["p"] + labels)
    for p in grid:
        row = [format_decimal(p, digits)]
        for label in labels:
            row.append(format_decimal(polys[label](p), digits))
        writer.writerow(row)
    return buf.getvalue()


def hasse_dot(poset: Poset) -> str:
    """Graphviz DOT of the Hasse diagram, edges from smaller to larger."""
    lines = [
        "digraph hasse {",
        "  rankdir=BT;",
        '  node [shape=box, fontname="monospace"];',
    ]
    for i, u in enumerate(poset.elements):
        label = str(u) if poset.m else "()"
        if poset.ranks is not None:
            label += f"\\nrank {poset.ranks[i]}"
        lines.append(f'  n{i} [label="{label}"];')
    for i, j in sorted(poset.covers):
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_json(poset: Poset) -> str:
    data = {
        "order": poset.order,
        "m": poset.m,
        "elements": [str(u) for u in poset.elements],
        "covers": sorted(poset.covers),
        "ranks": poset.ranks,
        "incomparable": sorted(poset.incomparable),
        "equal_classes": sorted(list(c) for c in poset.equal_classes),
    }
    return to_json(data)


def rel_report(network: MMN | None, word, poly: Poly, nform: NForm) -> dict:
    report = {
        "word": None if word is None else str(word),
        "network": None if network is None else network.to_dict(),
        "polynomial": poly.to_dict(),
        "nform": nform.to_dict(),
    }
    return report


def comparison_report(u_label: str, v_label: str, result: ComparisonResult) -> dict:
    return {"left": u_label, "right": v_label, **result.to_dict()}
