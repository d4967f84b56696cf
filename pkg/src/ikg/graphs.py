"""Finite simple graphs on up to 64 vertices, stored as bitset adjacency rows.

Vertices are integers 0..n-1 and every adjacency row is a Python int used as a
bit vector, which keeps the inner loops of the exhaustive searches branch-light.
Also home to graph6 I/O, isomorph-free enumeration, exact coloring, and the
small structural predicates the rest of the package leans on.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import factorial, gcd
from typing import Callable, Iterable, Iterator, Optional

MAX_VERTICES = 64

# Caps for the exhaustive operations; beyond these the search spaces are no
# longer desk-scale.
CANONICAL_MAX = 10
ENUMERATE_MAX = 8
CHROMATIC_MAX = 16
WEAKLY_CHORDAL_MAX = 12


class GraphDecodeError(ValueError):
    """Malformed graph6 record; `offset` is the character position at fault."""

    def __init__(self, message: str, offset: Optional[int] = None):
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)
        self.offset = offset


def bits(mask: int) -> Iterator[int]:
    """Iterate set bit positions of `mask` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple graph; equality and hashing ignore vertex labels."""

    __slots__ = ("n", "rows", "labels")

    def __init__(self, n: int, rows: Iterable[int], labels=None):
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        rows = tuple(rows)
        if len(rows) != n:
            raise ValueError("adjacency row count does not match n")
        full = (1 << n) - 1
        for i, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {i} has bits at positions >= n")
            if (row >> i) & 1:
                raise ValueError(f"loop at vertex {i}")
        for i in range(n):
            for j in bits(rows[i]):
                if not (rows[j] >> i) & 1:
                    raise ValueError(f"adjacency not symmetric at ({i},{j})")
        self.n = n
        self.rows = rows
        self.labels = tuple(labels) if labels is not None else None

    # -- basic queries ----------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def neighbors(self, v: int) -> int:
        return self.rows[v]

    def closed_neighborhood(self, v: int) -> int:
        return self.rows[v] | (1 << v)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u]) if u < v]

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def label_of(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    def vertex_by_label(self, name: str) -> int:
        if self.labels is None:
            return int(name)
        return self.labels.index(name)

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.rows[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == self.full_mask()

    def is_bipartite(self) -> Optional[tuple[int, int]]:
        """Two-color if possible; returns the (side0, side1) masks."""
        color = [-1] * self.n
        for s in range(self.n):
            if color[s] >= 0:
                continue
            color[s] = 0
            queue = [s]
            while queue:
                u = queue.pop()
                for w in bits(self.rows[u]):
                    if color[w] < 0:
                        color[w] = 1 - color[u]
                        queue.append(w)
                    elif color[w] == color[u]:
                        return None
        side0 = mask_of(v for v in range(self.n) if color[v] == 0)
        return side0, self.full_mask() & ~side0

    # -- derived graphs ---------------------------------------------------

    def complement(self) -> "Graph":
        full = self.full_mask()
        rows = tuple((full & ~self.rows[v]) & ~(1 << v) for v in range(self.n))
        return Graph(self.n, rows, self.labels)

    def induced(self, sub: int) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on the vertex mask `sub`, plus new->old index map."""
        if sub & ~self.full_mask():
            raise ValueError("vertex mask has bits outside the graph")
        keep = tuple(bits(sub))
        pos = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            row = 0
            for w in bits(self.rows[v] & sub):
                row |= 1 << pos[w]
            rows.append(row)
        labels = tuple(self.label_of(v) for v in keep) if self.labels else None
        return Graph(len(keep), rows, labels), keep

    def permuted(self, order: tuple[int, ...]) -> "Graph":
        """Relabel so new vertex t is old vertex order[t]."""
        pos = {v: i for i, v in enumerate(order)}
        rows = []
        for v in order:
            row = 0
            for w in bits(self.rows[v]):
                row |= 1 << pos[w]
            rows.append(row)
        labels = tuple(self.label_of(v) for v in order) if self.labels else None
        return Graph(self.n, rows, labels)

    def with_labels(self, labels) -> "Graph":
        return Graph(self.n, self.rows, labels)

    # -- dunder -----------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]], labels=None) -> Graph:
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop edge ({u},{v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows, labels)


def labeled_graph(names: str | list[str], edge_spec: Iterable[tuple[str, str]]) -> Graph:
    """Build a graph from label pairs; `names` fixes the vertex order."""
    names = list(names)
    idx = {name: i for i, name in enumerate(names)}
    return graph_from_edges(len(names), [(idx[a], idx[b]) for a, b in edge_spec], names)


# -- small stock graphs ----------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def path_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return graph_from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_multipartite_graph(sizes: Iterable[int]) -> Graph:
    sizes = list(sizes)
    n = sum(sizes)
    edges = []
    start = 0
    blocks = []
    for s in sizes:
        blocks.append(range(start, start + s))
        start += s
    for a, b in combinations(range(len(blocks)), 2):
        edges.extend((u, v) for u in blocks[a] for v in blocks[b])
    return graph_from_edges(n, edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    rows = list(g.rows) + [row << g.n for row in h.rows]
    labels = None
    if g.labels and h.labels:
        labels = g.labels + h.labels
    return Graph(g.n + h.n, rows, labels)


def c6bar() -> Graph:
    """Complement of the 6-cycle: two triangles {0,2,4},{1,3,5} plus 03,14,25."""
    return cycle_graph(6).complement()


def two_p3bar() -> Graph:
    """Complement of two disjoint 3-vertex paths 0-1-2 and 3-4-5."""
    return disjoint_union(path_graph(3), path_graph(3)).complement()


# -- graph6 ----------------------------------------------------------------

GRAPH6_HEADER = ">>graph6<<"


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 record (strict: canonical size field, zero padding)."""
    s = line.rstrip("\n")
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise GraphDecodeError("empty graph6 record", 0)
    for k, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphDecodeError(f"character {ch!r} outside graph6 alphabet", k)
    if s[0] == "~":
        if len(s) < 4 or s[1] == "~":
            raise GraphDecodeError("vertex count exceeds supported 64", 0)
        n = ((ord(s[1]) - 63) << 12) | ((ord(s[2]) - 63) << 6) | (ord(s[3]) - 63)
        if n <= 62:
            raise GraphDecodeError("non-canonical long size field", 0)
        body_at = 4
    else:
        n = ord(s[0]) - 63
        body_at = 1
    if n == 0:
        raise GraphDecodeError("graph6 record with zero vertices", 0)
    if n > MAX_VERTICES:
        raise GraphDecodeError(f"vertex count {n} exceeds supported {MAX_VERTICES}", 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(s) < body_at + need:
        raise GraphDecodeError("truncated graph6 record", len(s))
    if len(s) > body_at + need:
        raise GraphDecodeError("trailing garbage after graph6 record", body_at + need)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            group = ord(s[body_at + k // 6]) - 63
            if (group >> (5 - k % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    # Padding bits must be zero for the encoding to round-trip.
    while k < 6 * need:
        group = ord(s[body_at + k // 6]) - 63
        if (group >> (5 - k % 6)) & 1:
            raise GraphDecodeError("nonzero padding bit", body_at + k // 6)
        k += 1
    return Graph(n, rows)


def write_graph6(g: Graph) -> str:
    if g.n == 0:
        raise ValueError("graph6 requires at least one vertex")
    if g.n <= 62:
        out = [chr(63 + g.n)]
    else:
        out = ["~", chr(63 + (g.n >> 12)), chr(63 + ((g.n >> 6) & 63)), chr(63 + (g.n & 63))]
    group = 0
    filled = 0
    for j in range(1, g.n):
        for i in range(j):
            group = (group << 1) | ((g.rows[i] >> j) & 1)
            filled += 1
            if filled == 6:
                out.append(chr(63 + group))
                group = 0
                filled = 0
    if filled:
        out.append(chr(63 + (group << (6 - filled))))
    return "".join(out)


def read_graph6_stream(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield parse_graph6(line)


# -- canonical form and enumeration ----------------------------------------


def _min_order(n: int, code_of: Callable[[list[int], int], int], seed: list[int]) -> tuple[int, ...]:
    """Vertex order minimizing the concatenated column codes.

    `code_of(chosen, v)` must give the comparison code of placing v after the
    prefix `chosen`; codes at equal depth must have equal bit width.
    """
    if n <= 1:
        return tuple(range(n))
    chosen: list[int] = []
    cols: list[int] = [0] * n
    in_use = [False] * n
    # Greedy first descent seeds the incumbent.
    for depth in range(n):
        best_v, best_c = -1, None
        for v in seed:
            if in_use[v]:
                continue
            c = code_of(chosen, v)
            if best_c is None or c < best_c:
                best_v, best_c = v, c
        chosen.append(best_v)
        in_use[best_v] = True
        cols[depth] = best_c
    best_cols = cols[:]
    best_order = tuple(chosen)
    chosen.clear()
    in_use = [False] * n

    def dfs(depth: int) -> None:
        nonlocal best_cols, best_order
        prefix = cols[:depth]
        rel_best = best_cols[:depth]
        if prefix > rel_best:
            return
        tight = prefix == rel_best
        cands = []
        for v in range(n):
            if not in_use[v]:
                c = code_of(chosen, v)
                if not (tight and c > best_cols[depth]):
                    cands.append((c, v))
        cands.sort()
        for c, v in cands:
            if tight and c > best_cols[depth]:
                break
            cols[depth] = c
            chosen.append(v)
            in_use[v] = True
            if depth + 1 == n:
                if cols < best_cols:
                    best_cols = cols[:]
                    best_order = tuple(chosen)
            else:
                dfs(depth + 1)
            in_use[v] = False
            chosen.pop()

    dfs(0)
    return best_order


def canonical_order(g: Graph) -> tuple[int, ...]:
    """Vertex order whose column-wise adjacency bit string is minimal."""
    if g.n > CANONICAL_MAX:
        raise ValueError(f"canonical form capped at {CANONICAL_MAX} vertices")
    rows = g.rows

    def code_of(chosen: list[int], v: int) -> int:
        row = rows[v]
        c = 0
        for u in chosen:
            c = (c << 1) | ((row >> u) & 1)
        return c

    seed = sorted(range(g.n), key=lambda v: (rows[v].bit_count(), v))
    return _min_order(g.n, code_of, seed)


def canonical_form(g: Graph) -> str:
    """Isomorphism-invariant string: graph6 of the minimizing relabeling."""
    h = g.permuted(canonical_order(g))
    return write_graph6(Graph(h.n, h.rows))


_ENUM_CACHE: dict[int, tuple[str, ...]] = {}


def _enumerate_forms(n: int) -> tuple[str, ...]:
    if n in _ENUM_CACHE:
        return _ENUM_CACHE[n]
    if n == 1:
        forms: tuple[str, ...] = (write_graph6(empty_graph(1)),)
    else:
        seen: set[str] = set()
        for form in _enumerate_forms(n - 1):
            base = parse_graph6(form)
            for nb in range(1 << (n - 1)):
                rows = list(base.rows) + [nb]
                for v in bits(nb):
                    rows[v] |= 1 << (n - 1)
                seen.add(canonical_form(Graph(n, rows)))
        forms = tuple(sorted(seen))
    _ENUM_CACHE[n] = forms
    return forms


def enumerate_graphs(n: int, predicate: Optional[Callable[[Graph], bool]] = None) -> Iterator[Graph]:
    """One representative per isomorphism class, in a fixed order."""
    if not 1 <= n <= ENUMERATE_MAX:
        raise ValueError(f"built-in enumeration supports 1..{ENUMERATE_MAX} vertices")
    for form in _enumerate_forms(n):
        g = parse_graph6(form)
        if predicate is None or predicate(g):
            yield g


def _partitions(n: int, least: int = 1) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for part in range(least, n + 1):
        for rest in _partitions(n - part, part):
            yield (part,) + rest


def count_graphs_by_orbit(n: int) -> int:
    """Number of isomorphism classes via the cycle index of the pair action."""
    total = 0
    for parts in _partitions(n):
        mult: dict[int, int] = {}
        for c in parts:
            mult[c] = mult.get(c, 0) + 1
        z = 1
        for length, m in mult.items():
            z *= length**m * factorial(m)
        pair_cycles = sum(c // 2 for c in parts)
        pair_cycles += sum(gcd(a, b) for a, b in combinations(parts, 2))
        total += (factorial(n) // z) * (1 << pair_cycles)
    return total // factorial(n)


# -- coloring ----------------------------------------------------------------


def _colorable(rows: tuple[int, ...], order: list[int], k: int) -> Optional[list[int]]:
    n = len(order)
    colors = [-1] * len(rows)

    def place(t: int, used: int) -> bool:
        if t == n:
            return True
        v = order[t]
        limit = min(k, used + 1)
        for c in range(limit):
            ok = True
            for w in bits(rows[v]):
                if colors[w] == c:
                    ok = False
                    break
            if ok:
                colors[v] = c
                if place(t + 1, max(used, c + 1)):
                    return True
                colors[v] = -1
        return False

    return colors if place(0, 0) else None


def chromatic_number(g: Graph, return_coloring: bool = False):
    """Exact chromatic number via iterated k-colorability."""
    if g.n > CHROMATIC_MAX:
        raise ValueError(f"exact coloring capped at {CHROMATIC_MAX} vertices")
    if g.n == 0:
        return (0, []) if return_coloring else 0
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    for k in range(1, g.n + 1):
        coloring = _colorable(g.rows, order, k)
        if coloring is not None:
            return (k, coloring) if return_coloring else k
    raise AssertionError("unreachable: n colors always suffice")


# -- complete multipartite structure -----------------------------------------


@dataclass(frozen=True)
class PartiteStructure:
    """Partition of the vertices into independent classes (bit masks)."""

    classes: tuple[int, ...]

    def class_of(self, v: int) -> int:
        for i, c in enumerate(self.classes):
            if (c >> v) & 1:
                return i
        raise ValueError(f"vertex {v} not covered")

    def class_vector(self, n: int) -> list[int]:
        vec = [-1] * n
        for i, c in enumerate(self.classes):
            for v in bits(c):
                vec[v] = i
        return vec

    def validate(self, g: Graph) -> None:
        union = 0
        for c in self.classes:
            if union & c:
                raise ValueError("classes are not disjoint")
            union |= c
            for v in bits(c):
                if g.rows[v] & c:
                    raise ValueError(f"class containing {v} is not independent")
        if union != g.full_mask():
            raise ValueError("classes do not cover all vertices")


def partition_from_coloring(coloring: list[int]) -> PartiteStructure:
    k = max(coloring) + 1 if coloring else 0
    masks = [0] * k
    for v, c in enumerate(coloring):
        masks[c] |= 1 << v
    return PartiteStructure(tuple(masks))


def _components(rows, universe: int) -> list[int]:
    comps = []
    left = universe
    while left:
        start = left & -left
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= rows[v] & universe
            frontier = nxt & ~seen
            seen |= frontier
        comps.append(seen)
        left &= ~seen
    return comps


def is_complete_multipartite(g: Graph) -> Optional[PartiteStructure]:
    """The unique independent-class partition with all cross edges, if any.

    Equivalent to non-adjacency being transitive: the classes are the
    components of the complement, and each must be independent.
    """
    if g.n == 0:
        return PartiteStructure(())
    comp = g.complement()
    classes = _components(comp.rows, g.full_mask())
    for c in classes:
        for v in bits(c):
            if g.rows[v] & c:
                return None
    classes.sort(key=lambda c: c & -c)
    return PartiteStructure(tuple(classes))


# -- induced subgraph search --------------------------------------------------


def find_induced(g: Graph, pattern: Graph) -> Optional[tuple[int, ...]]:
    """Injective map emb[p] -> g vertex under which `pattern` is induced in g."""
    if pattern.n > g.n:
        raise ValueError("pattern has more vertices than the host graph")
    if pattern.n == 0:
        return ()
    # Order pattern vertices to keep early candidates constrained.
    order = [max(range(pattern.n), key=lambda v: (pattern.degree(v), -v))]
    placed = 1 << order[0]
    while len(order) < pattern.n:
        nxt = max(
            (v for v in range(pattern.n) if not (placed >> v) & 1),
            key=lambda v: ((pattern.rows[v] & placed).bit_count(), pattern.degree(v), -v),
        )
        order.append(nxt)
        placed |= 1 << nxt

    emb = [-1] * pattern.n
    used = 0

    def extend(t: int) -> bool:
        nonlocal used
        if t == pattern.n:
            return True
        p = order[t]
        for w in range(g.n):
            if (used >> w) & 1:
                continue
            ok = True
            for s in range(t):
                q = order[s]
                if pattern.has_edge(p, q) != g.has_edge(w, emb[q]):
                    ok = False
                    break
            if ok:
                emb[p] = w
                used |= 1 << w
                if extend(t + 1):
                    return True
                used &= ~(1 << w)
                emb[p] = -1
        return False

    return tuple(emb) if extend(0) else None


# -- weak chordality -----------------------------------------------------------


@dataclass(frozen=True)
class HoleCertificate:
    """An induced cycle of length >= 5, in the graph or in its complement."""

    in_complement: bool
    cycle: tuple[int, ...]


def _induced_long_cycle(g: Graph) -> Optional[tuple[int, ...]]:
    rows = g.rows
    for sub in range(1 << g.n):
        size = sub.bit_count()
        if size < 5:
            continue
        ok = True
        for v in bits(sub):
            if (rows[v] & sub).bit_count() != 2:
                ok = False
                break
        if not ok:
            continue
        if len(_components(rows, sub)) != 1:
            continue
        start = (sub & -sub).bit_length() - 1
        cycle = [start]
        prev = -1
        cur = start
        while True:
            nxt = min(w for w in bits(rows[cur] & sub) if w != prev)
            if nxt == start:
                break
            cycle.append(nxt)
            prev, cur = cur, nxt
        return tuple(cycle)
    return None


def is_weakly_chordal(g: Graph) -> tuple[bool, Optional[HoleCertificate]]:
    """No induced cycle of length >= 5 in the graph or its complement."""
    if g.n > WEAKLY_CHORDAL_MAX:
        raise ValueError(f"weak chordality check capped at {WEAKLY_CHORDAL_MAX} vertices")
    cyc = _induced_long_cycle(g)
    if cyc is not None:
        return False, HoleCertificate(False, cyc)
    cyc = _induced_long_cycle(g.complement())
    if cyc is not None:
        return False, HoleCertificate(True, cyc)
    return True, None


# -- rendering -----------------------------------------------------------------


def to_dot(g: Graph) -> str:
    lines = ["graph G {"]
    for v in range(g.n):
        lines.append(f'  {v} [label="{g.label_of(v)}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
