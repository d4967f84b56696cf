"""Strict partial orders, incomparability graphs, chains and chain covers.

The relation is stored fully transitively closed (one successor bitmask per
element) so comparability queries are O(1); the query-heavy searches elsewhere
dominate the cost of closing once at construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional

from .graphs import Graph, bits, mask_of

ENUMERATE_POSETS_MAX = 7


class CycleError(ValueError):
    """Input relation closes to a cycle; `cycle` is a witness element list."""

    def __init__(self, cycle: list[int]):
        super().__init__("relation has a cycle: " + " < ".join(map(str, cycle)))
        self.cycle = cycle


class Poset:
    """Immutable strict order on elements 0..n-1; `up[i]` is the mask of j with i < j."""

    __slots__ = ("n", "up", "down", "labels")

    def __init__(self, n: int, up: Iterable[int], labels=None):
        up = tuple(up)
        if len(up) != n:
            raise ValueError("successor row count does not match n")
        full = (1 << n) - 1
        down = [0] * n
        for i, mask in enumerate(up):
            if mask & ~full:
                raise ValueError(f"row {i} has bits at positions >= n")
            if (mask >> i) & 1:
                raise ValueError(f"element {i} below itself")
            for j in bits(mask):
                down[j] |= 1 << i
        for i in range(n):
            for j in bits(up[i]):
                if up[j] & ~up[i]:
                    raise ValueError(f"relation not transitive at {i} < {j}")
                if (up[j] >> i) & 1:
                    raise ValueError(f"antisymmetry violated at ({i},{j})")
        self.n = n
        self.up = up
        self.down = tuple(down)
        self.labels = tuple(labels) if labels is not None else None

    def less(self, i: int, j: int) -> bool:
        return bool((self.up[i] >> j) & 1)

    def comparable(self, i: int, j: int) -> bool:
        return i != j and (self.less(i, j) or self.less(j, i))

    def incomparable(self, i: int, j: int) -> bool:
        return i != j and not self.comparable(i, j)

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def label_of(self, i: int) -> str:
        return self.labels[i] if self.labels else str(i)

    def minimal_elements(self, within: Optional[int] = None) -> int:
        within = self.full_mask() if within is None else within
        return mask_of(i for i in bits(within) if not self.down[i] & within)

    def maximal_elements(self, within: Optional[int] = None) -> int:
        within = self.full_mask() if within is None else within
        return mask_of(i for i in bits(within) if not self.up[i] & within)

    def comparability_graph(self) -> Graph:
        rows = tuple(self.up[i] | self.down[i] for i in range(self.n))
        return Graph(self.n, rows, self.labels)

    def incomparability_graph(self) -> Graph:
        full = self.full_mask()
        rows = tuple(
            full & ~(self.up[i] | self.down[i] | (1 << i)) for i in range(self.n)
        )
        return Graph(self.n, rows, self.labels)

    def __eq__(self, other):
        return isinstance(other, Poset) and self.n == other.n and self.up == other.up

    def __hash__(self):
        return hash((self.n, self.up))

    def __repr__(self):
        rels = [(i, j) for i in range(self.n) for j in bits(self.up[i])]
        return f"Poset(n={self.n}, lt={rels})"


def poset_from_pairs(n: int, pairs: Iterable[tuple[int, int]], labels=None) -> Poset:
    """Transitive closure of the given strict pairs; CycleError on any cycle."""
    direct = [0] * n
    for i, j in pairs:
        if i == j:
            raise CycleError([i, i])
        direct[i] |= 1 << j
    up = list(direct)
    for k in range(n):
        kbit = 1 << k
        for i in range(n):
            if up[i] & kbit:
                up[i] |= up[k]
    for i in range(n):
        if (up[i] >> i) & 1:
            raise CycleError(_witness_cycle(direct, i))
    return Poset(n, up, labels)


def _witness_cycle(direct: list[int], start: int) -> list[int]:
    path = [start]
    on_path = {start}
    def dfs(v: int) -> Optional[list[int]]:
        for w in bits(direct[v]):
            if w == start:
                return path + [start]
            if w not in on_path:
                path.append(w)
                on_path.add(w)
                found = dfs(w)
                if found:
                    return found
                on_path.discard(w)
                path.pop()
        return None
    return dfs(start) or [start, start]


def crown_poset(k: int = 3) -> Poset:
    """Height-2 order: minima a1..ak, maxima b1..bk, ai < bj iff i != j."""
    pairs = [(i, k + j) for i in range(k) for j in range(k) if i != j]
    labels = [f"a{i+1}" for i in range(k)] + [f"b{i+1}" for i in range(k)]
    return poset_from_pairs(2 * k, pairs, labels)


def incomparability_graph(p: Poset) -> Graph:
    return p.incomparability_graph()


def incomparables(p: Poset, x: int) -> int:
    """Mask of elements incomparable with x; x itself is excluded."""
    return p.full_mask() & ~(p.up[x] | p.down[x] | (1 << x))


def restrict(p: Poset, remove: Iterable[int]) -> tuple[Poset, tuple[int, ...]]:
    """Induced suborder after deleting `remove`; returns it with new->old map."""
    gone = 0
    for v in remove:
        if not 0 <= v < p.n or (gone >> v) & 1:
            raise ValueError(f"bad element to remove: {v}")
        gone |= 1 << v
    return restrict_to_mask(p, p.full_mask() & ~gone)


def restrict_to_mask(p: Poset, keep_mask: int) -> tuple[Poset, tuple[int, ...]]:
    keep = tuple(bits(keep_mask))
    pos = {v: i for i, v in enumerate(keep)}
    up = []
    for v in keep:
        row = 0
        for w in bits(p.up[v] & keep_mask):
            row |= 1 << pos[w]
        up.append(row)
    labels = tuple(p.label_of(v) for v in keep) if p.labels else None
    return Poset(len(keep), up, labels), keep


def decompose_into_chains(p: Poset, within: int) -> Optional[list[list[int]]]:
    """Partition `within` into chains with no comparabilities between chains.

    Exists iff comparability restricted to the set is transitive as an
    undirected relation (the induced incomparability graph is complete
    multipartite); the chains are then the comparability classes, unique.
    """
    chains = []
    left = within
    while left:
        v = (left & -left).bit_length() - 1
        cls = ((p.up[v] | p.down[v]) & within) | (1 << v)
        for w in bits(cls):
            if (((p.up[w] | p.down[w]) & within) | (1 << w)) != cls:
                return None
        chains.append(sorted(bits(cls), key=lambda w: (p.down[w] & cls).bit_count()))
        left &= ~cls
    return chains


@dataclass(frozen=True)
class ChainCover:
    """Ordered partition of the elements into chains, each increasing."""

    chains: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.chains)

    def chain_index(self, v: int) -> int:
        for i, c in enumerate(self.chains):
            if v in c:
                return i
        raise ValueError(f"element {v} not covered")

    def chain_vector(self, n: int) -> list[int]:
        vec = [-1] * n
        for i, c in enumerate(self.chains):
            for v in c:
                vec[i if False else v] = i
        return vec

    def validate(self, p: Poset) -> None:
        seen = 0
        for chain in self.chains:
            if not chain:
                raise ValueError("empty chain in cover")
            for v in chain:
                if (seen >> v) & 1:
                    raise ValueError(f"element {v} covered twice")
                seen |= 1 << v
            for a, b in zip(chain, chain[1:]):
                if not p.less(a, b):
                    raise ValueError(f"chain not increasing at ({a},{b})")
        if seen != p.full_mask():
            raise ValueError("cover does not cover all elements")


def minimum_chain_cover(p: Poset) -> ChainCover:
    """Chain cover of size = width via bipartite matching on comparability.

    Augmenting paths are explored in increasing element order, so the cover is
    deterministic and reproducible.
    """
    match_next = [-1] * p.n   # i -> matched successor
    match_prev = [-1] * p.n   # j -> matched predecessor

    def augment(i: int, seen: set[int]) -> bool:
        for j in bits(p.up[i]):
            if j in seen:
                continue
            seen.add(j)
            if match_prev[j] == -1 or augment(match_prev[j], seen):
                match_next[i] = j
                match_prev[j] = i
                return True
        return False

    for i in range(p.n):
        augment(i, set())
    chains = []
    for head in range(p.n):
        if match_prev[head] != -1:
            continue
        chain = [head]
        while match_next[chain[-1]] != -1:
            chain.append(match_next[chain[-1]])
        chains.append(tuple(chain))
    chains.sort(key=lambda c: c[0])
    return ChainCover(tuple(chains))


def width_by_antichain(p: Poset) -> int:
    """Maximum antichain size by direct subset scan (independent of matching)."""
    best = 0
    for sub in range(1 << p.n):
        if sub.bit_count() <= best:
            continue
        if all(not p.up[v] & sub for v in bits(sub)):
            best = sub.bit_count()
    return best


def hasse_edges(p: Poset) -> list[tuple[int, int]]:
    """Transitive reduction: pairs i < j with nothing strictly between."""
    out = []
    for i in range(p.n):
        for j in bits(p.up[i]):
            if not p.up[i] & p.down[j]:
                out.append((i, j))
    return out


# -- text format ----------------------------------------------------------------


def write_poset_text(p: Poset) -> str:
    lines = [str(p.n)]
    lines += [f"{i} < {j}" for i, j in hasse_edges(p)]
    return "\n".join(lines) + "\n"


def parse_poset_text(text: str) -> Poset:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty poset text")
    n = int(lines[0])
    pairs = []
    for ln in lines[1:]:
        parts = ln.split("<")
        if len(parts) != 2:
            raise ValueError(f"bad relation line: {ln!r}")
        pairs.append((int(parts[0]), int(parts[1])))
    return poset_from_pairs(n, pairs)


def to_dot_hasse(p: Poset) -> str:
    lines = ["digraph P {", "  rankdir=BT;"]
    for v in range(p.n):
        lines.append(f'  {v} [label="{p.label_of(v)}"];')
    for i, j in hasse_edges(p):
        lines.append(f"  {i} -> {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- canonical form and enumeration ----------------------------------------------


def canonical_poset_form(p: Poset) -> str:
    """Isomorphism-invariant string for a poset (minimal relabeled relation)."""
    from .graphs import _min_order

    up = p.up
    down = p.down

    def code_of(chosen: list[int], v: int) -> int:
        c = 0
        uv = up[v]
        dv = down[v]
        for u in chosen:
            c = (c << 2) | (((uv >> u) & 1) << 1) | ((dv >> u) & 1)
        return c

    seed = sorted(
        range(p.n),
        key=lambda v: (down[v].bit_count(), up[v].bit_count(), v),
    )
    order = _min_order(p.n, code_of, seed)
    pos = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        row = 0
        for w in bits(up[v]):
            row |= 1 << pos[w]
        rows.append(row)
    return f"{p.n}:" + ",".join(str(r) for r in rows)


_POSET_CACHE: dict[int, tuple[Poset, ...]] = {}


def enumerate_posets(n: int) -> Iterator[Poset]:
    """One representative per isomorphism class of strict orders on n elements.

    Built by repeatedly attaching a new maximal element whose predecessor set
    ranges over the down-closed subsets of each smaller representative.
    """
    if not 1 <= n <= ENUMERATE_POSETS_MAX:
        raise ValueError(f"poset enumeration supports 1..{ENUMERATE_POSETS_MAX} elements")
    if n in _POSET_CACHE:
        yield from _POSET_CACHE[n]
        return
    if n == 1:
        reps = (Poset(1, [0]),)
    else:
        seen: dict[str, Poset] = {}
        for base in enumerate_posets(n - 1):
            m = base.n
            for ideal in range(1 << m):
                if any(base.down[v] & ~ideal for v in bits(ideal)):
                    continue
                up = [base.up[v] | (((ideal >> v) & 1) << m) for v in range(m)]
                up.append(0)
                q = Poset(n, up)
                key = canonical_poset_form(q)
                if key not in seen:
                    seen[key] = q
        reps = tuple(seen[k] for k in sorted(seen))
    _POSET_CACHE[n] = reps
    yield from reps
