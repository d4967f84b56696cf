"""Interval, permutation-segment, and function-curve representations.

Endpoints are exact rationals throughout: the interval constructions place
endpoints at values like mu - (1 - i/n) and rely on single-point touchings,
which floating point cannot decide. Intervals are closed, and touching at one
point counts as intersecting.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .graphs import Graph, bits
from .orders import Poset, hasse_edges, to_dot_hasse


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class Discrepancy:
    """First pair on which a representation and a graph disagree."""

    u: int
    v: int
    kind: str  # "edge_not_realized" or "nonedge_realized"


class IntervalKRep:
    """Closed rational intervals partitioned into classes 0..k-1."""

    __slots__ = ("k", "intervals", "classes", "labels")

    def __init__(self, k: int, intervals, classes, labels=None):
        intervals = tuple((_frac(l), _frac(r)) for l, r in intervals)
        classes = tuple(classes)
        if k < 1:
            raise ValueError("class count must be >= 1")
        if len(intervals) != len(classes):
            raise ValueError("interval and class counts differ")
        for i, (l, r) in enumerate(intervals):
            if l > r:
                raise ValueError(f"interval {i} has l > r")
        for i, c in enumerate(classes):
            if not 0 <= c < k:
                raise ValueError(f"class index {c} of vertex {i} outside 0..{k-1}")
        self.k = k
        self.intervals = intervals
        self.classes = classes
        self.labels = tuple(labels) if labels is not None else None

    @property
    def n(self) -> int:
        return len(self.intervals)

    def left(self, v: int) -> Fraction:
        return self.intervals[v][0]

    def right(self, v: int) -> Fraction:
        return self.intervals[v][1]

    def label_of(self, v: int) -> str:
        return self.labels[v] if self.labels else f"v{v}"

    def intersects(self, u: int, v: int) -> bool:
        lu, ru = self.intervals[u]
        lv, rv = self.intervals[v]
        return lu <= rv and lv <= ru

    def with_k(self, k: int) -> "IntervalKRep":
        """Same intervals viewed with a larger class budget (classes may be empty)."""
        if k < self.k:
            raise ValueError("cannot shrink the class budget")
        return IntervalKRep(k, self.intervals, self.classes, self.labels)

    def __eq__(self, other):
        return (
            isinstance(other, IntervalKRep)
            and (self.k, self.intervals, self.classes) == (other.k, other.intervals, other.classes)
        )

    def __repr__(self):
        items = ", ".join(
            f"{self.label_of(v)}:[{l},{r}]#{c}"
            for v, ((l, r), c) in enumerate(zip(self.intervals, self.classes))
        )
        return f"IntervalKRep(k={self.k}, {items})"


def realizes(rep: IntervalKRep, g: Graph) -> tuple[bool, Optional[Discrepancy]]:
    """Edge iff intervals intersect and classes differ, over all pairs."""
    if rep.n != g.n:
        raise ValueError("vertex counts differ")
    for u in range(g.n):
        for v in range(u + 1, g.n):
            touching = rep.classes[u] != rep.classes[v] and rep.intersects(u, v)
            if touching != g.has_edge(u, v):
                kind = "edge_not_realized" if g.has_edge(u, v) else "nonedge_realized"
                return False, Discrepancy(u, v, kind)
    return True, None


def realized_graph(rep: IntervalKRep, labels=None) -> Graph:
    rows = [0] * rep.n
    for u in range(rep.n):
        for v in range(u + 1, rep.n):
            if rep.classes[u] != rep.classes[v] and rep.intersects(u, v):
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(rep.n, rows, labels if labels is not None else rep.labels)


def _contains_properly(rep: IntervalKRep, u: int, v: int) -> bool:
    """Interval of u contains interval of v as a strict subset."""
    lu, ru = rep.intervals[u]
    lv, rv = rep.intervals[v]
    return lu <= lv and rv <= ru and (lu, ru) != (lv, rv)


def is_class_proper(rep: IntervalKRep) -> tuple[bool, Optional[tuple[int, int]]]:
    """No interval strictly contains another from its own class."""
    for u in range(rep.n):
        for v in range(rep.n):
            if u != v and rep.classes[u] == rep.classes[v] and _contains_properly(rep, u, v):
                return False, (u, v)
    return True, None


def is_proper(rep: IntervalKRep) -> tuple[bool, Optional[tuple[int, int]]]:
    """No interval strictly contains another, classes notwithstanding."""
    for u in range(rep.n):
        for v in range(rep.n):
            if u != v and _contains_properly(rep, u, v):
                return False, (u, v)
    return True, None


def is_unit(rep: IntervalKRep) -> bool:
    lengths = {r - l for l, r in rep.intervals}
    return len(lengths) <= 1


# -- permutation (two-channel segment) representations ------------------------


class PermutationRep:
    """One segment per vertex between two channels; edges are crossings."""

    __slots__ = ("top", "bottom", "labels")

    def __init__(self, top, bottom, labels=None):
        top = tuple(_frac(x) for x in top)
        bottom = tuple(_frac(x) for x in bottom)
        if len(top) != len(bottom):
            raise ValueError("channel position counts differ")
        self.top = top
        self.bottom = bottom
        self.labels = tuple(labels) if labels is not None else None

    @property
    def n(self) -> int:
        return len(self.top)

    def crosses(self, u: int, v: int) -> bool:
        return (self.top[u] - self.top[v]) * (self.bottom[u] - self.bottom[v]) < 0


def permutation_realizes(rep: PermutationRep, g: Graph) -> bool:
    if rep.n != g.n:
        raise ValueError("vertex counts differ")
    if len(set(rep.top)) != rep.n or len(set(rep.bottom)) != rep.n:
        raise ValueError("duplicate positions on a channel")
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if rep.crosses(u, v) != g.has_edge(u, v):
                return False
    return True


def permutation_realized_graph(rep: PermutationRep) -> Graph:
    if len(set(rep.top)) != rep.n or len(set(rep.bottom)) != rep.n:
        raise ValueError("duplicate positions on a channel")
    rows = [0] * rep.n
    for u in range(rep.n):
        for v in range(u + 1, rep.n):
            if rep.crosses(u, v):
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(rep.n, rows, rep.labels)


# -- function-curve representations --------------------------------------------


class FunctionRep:
    """Piecewise-linear curves over k+1 horizontal levels at heights 0..k.

    Curve v is given by its abscissae at the levels; between consecutive
    levels it is the straight segment joining them.
    """

    __slots__ = ("k", "curves", "labels")

    def __init__(self, k: int, curves, labels=None):
        if k < 1:
            raise ValueError("need at least two levels")
        curves = tuple(tuple(_frac(x) for x in curve) for curve in curves)
        for i, curve in enumerate(curves):
            if len(curve) != k + 1:
                raise ValueError(f"curve {i} must have {k + 1} breakpoints")
        self.k = k
        self.curves = curves
        self.labels = tuple(labels) if labels is not None else None

    @property
    def n(self) -> int:
        return len(self.curves)

    def meets(self, u: int, v: int) -> bool:
        """Curves share a point: a zero or a sign change of the difference."""
        prev = 0
        for i in range(self.k + 1):
            d = self.curves[u][i] - self.curves[v][i]
            if d == 0:
                return True
            s = 1 if d > 0 else -1
            if prev and s != prev:
                return True
            prev = s
        return False

    def strictly_left(self, u: int, v: int) -> bool:
        return all(self.curves[u][i] < self.curves[v][i] for i in range(self.k + 1))


def function_realizes(rep: FunctionRep, g: Graph) -> bool:
    if rep.n != g.n:
        raise ValueError("vertex counts differ")
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if rep.meets(u, v) != g.has_edge(u, v):
                return False
    return True


def function_realized_graph(rep: FunctionRep) -> Graph:
    rows = [0] * rep.n
    for u in range(rep.n):
        for v in range(u + 1, rep.n):
            if rep.meets(u, v):
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(rep.n, rows, rep.labels)


# -- text file format ------------------------------------------------------------


def write_rep_text(rep: IntervalKRep) -> str:
    """Header "k n", then one "label class l_num/l_den r_num/r_den" per vertex."""
    lines = [f"{rep.k} {rep.n}"]
    for v in range(rep.n):
        l, r = rep.intervals[v]
        lines.append(
            f"{rep.label_of(v)} {rep.classes[v]} "
            f"{l.numerator}/{l.denominator} {r.numerator}/{r.denominator}"
        )
    return "\n".join(lines) + "\n"


def _parse_frac(tok: str) -> Fraction:
    if "/" in tok:
        num, den = tok.split("/")
        return Fraction(int(num), int(den))
    return Fraction(int(tok))


def parse_rep_text(text: str) -> IntervalKRep:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty representation text")
    k, n = map(int, lines[0].split())
    if len(lines) != n + 1:
        raise ValueError(f"expected {n} vertex lines, got {len(lines) - 1}")
    labels, classes, intervals = [], [], []
    for ln in lines[1:]:
        label, cls, l, r = ln.split()
        labels.append(label)
        classes.append(int(cls))
        intervals.append((_parse_frac(l), _parse_frac(r)))
    return IntervalKRep(k, intervals, classes, labels)


# -- rendering --------------------------------------------------------------------

_PALETTE = ("#1b6ca8", "#c9502c", "#3a7d44", "#8452a1", "#b8860b", "#666666")


def _svg_num(x: Fraction) -> str:
    return f"{float(x):.4f}"


def render_intervals(rep: IntervalKRep, fmt: str = "ascii") -> str:
    """Intervals drawn per class on stacked tracks; byte-stable output."""
    if fmt not in ("ascii", "svg"):
        raise ValueError("format must be 'ascii' or 'svg'")
    by_class: list[list[int]] = [[] for _ in range(rep.k)]
    for v in range(rep.n):
        by_class[rep.classes[v]].append(v)
    if fmt == "ascii":
        lines = []
        for c in range(rep.k):
            lines.append(f"class {c}:")
            for v in by_class[c]:
                l, r = rep.intervals[v]
                lines.append(f"  {rep.label_of(v)}: [{l}, {r}]")
        return "\n".join(lines) + "\n"
    if rep.n == 0:
        return '<svg xmlns="http://www.w3.org/2000/svg" width="100" height="20"/>\n'
    lo = min(l for l, _ in rep.intervals)
    hi = max(r for _, r in rep.intervals)
    span = hi - lo if hi > lo else Fraction(1)
    width = Fraction(640)
    row_h = 22
    out = []
    height = row_h * (rep.n + rep.k) + 10
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{int(width) + 120}" height="{height}">'
    )
    y = row_h
    for c in range(rep.k):
        color = _PALETTE[c % len(_PALETTE)]
        out.append(f'<text x="4" y="{y}" font-size="12">class {c}</text>')
        y += row_h
        for v in by_class[c]:
            l, r = rep.intervals[v]
            x1 = 100 + (l - lo) * width / span
            x2 = 100 + (r - lo) * width / span
            out.append(
                f'<line x1="{_svg_num(x1)}" y1="{y - 8}" x2="{_svg_num(x2)}" y2="{y - 8}" '
                f'stroke="{color}" stroke-width="4" stroke-linecap="round"/>'
            )
            out.append(f'<text x="{_svg_num(x1)}" y="{y + 6}" font-size="10">{rep.label_of(v)}</text>')
            y += row_h
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_hasse(p: Poset) -> str:
    return to_dot_hasse(p)


def render_curves(rep: FunctionRep) -> str:
    """SVG polylines, one per curve, levels drawn as horizontal guides."""
    if rep.n == 0:
        return '<svg xmlns="http://www.w3.org/2000/svg" width="100" height="20"/>\n'
    xs = [x for curve in rep.curves for x in curve]
    lo, hi = min(xs), max(xs)
    span = hi - lo if hi > lo else Fraction(1)
    width = Fraction(640)
    level_h = 60
    height = level_h * rep.k + 40
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{int(width) + 120}" height="{height}">']
    for i in range(rep.k + 1):
        y = 20 + level_h * (rep.k - i)
        out.append(
            f'<line x1="60" y1="{y}" x2="{int(width) + 80}" y2="{y}" stroke="#cccccc" stroke-width="1"/>'
        )
        out.append(f'<text x="4" y="{y + 4}" font-size="10">L{i}</text>')
    for v in range(rep.n):
        color = _PALETTE[v % len(_PALETTE)]
        pts = []
        for i, x in enumerate(rep.curves[v]):
            px = 80 + (x - lo) * width / span
            py = 20 + level_h * (rep.k - i)
            pts.append(f"{_svg_num(px)},{py}")
        out.append(
            f'<polyline points="{" ".join(pts)}" fill="none" stroke="{color}" stroke-width="2"/>'
        )
        out.append(f'<text x="{pts[0].split(",")[0]}" y="{height - 6}" font-size="10">{rep.label_of(v)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
