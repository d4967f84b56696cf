"""Transitive orientation search, cocomparability testing, odd asteroids.

Orientation search runs edge-forcing propagation with backtracking: orienting
one edge forces neighbors through the standard implication rules, which keeps
the search shallow at the sizes we care about. Asteroid search pairs with it
as the Gallai cross-check: the complement of a graph is transitively
orientable exactly when the graph has no odd asteroid.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterator, Optional

from .graphs import Graph, bits, mask_of
from .orders import Poset

ORIENT_MAX = 12
ALL_ORIENT_MAX = 12
ASTEROID_MAX = 10


class Orientation:
    """One direction per edge of the host graph, as successor bitmasks."""

    __slots__ = ("n", "succ")

    def __init__(self, n: int, succ):
        self.n = n
        self.succ = tuple(succ)

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.succ[u])]

    def covers(self, g: Graph) -> bool:
        """Exactly the host edges, each oriented exactly once."""
        for u in range(self.n):
            if self.succ[u] & ~g.rows[u]:
                return False
        for u, v in g.edges():
            if ((self.succ[u] >> v) & 1) == ((self.succ[v] >> u) & 1):
                return False
        return True

    def is_transitive(self) -> bool:
        """Triple scan: u->v->w forces the arc u->w (hence the edge uw)."""
        for u in range(self.n):
            su = self.succ[u]
            for v in bits(su):
                if self.succ[v] & ~su:
                    return False
        return True

    def to_poset(self, labels=None) -> Poset:
        return Poset(self.n, self.succ, labels)

    def __eq__(self, other):
        return isinstance(other, Orientation) and self.succ == other.succ

    def __hash__(self):
        return hash(self.succ)


def _orient_dfs(g: Graph) -> Iterator[tuple[int, ...]]:
    """All transitive orientations as successor-mask tuples, in DFS order."""
    n = g.n
    rows = g.rows
    edges = g.edges()
    if not edges:
        yield (0,) * n
        return
    eidx = {}
    for k, (u, v) in enumerate(edges):
        eidx[(u, v)] = k
        eidx[(v, u)] = k
    state = [0] * len(edges)  # 0 undecided, 1 first->second, 2 second->first

    def set_arc(a: int, b: int, trail: list[int]) -> bool:
        """Record a->b plus everything it forces; False on conflict."""
        queue = [(a, b)]
        while queue:
            u, v = queue.pop()
            k = eidx[(u, v)]
            want = 1 if edges[k][0] == u else 2
            if state[k] == want:
                continue
            if state[k] != 0:
                return False
            state[k] = want
            trail.append(k)
            ru, rv = rows[u], rows[v]
            # Shared non-neighbors force through the missing chord.
            for w in bits(rv & ~ru & ~(1 << u)):
                queue.append((w, v))
            for w in bits(ru & ~rv & ~(1 << v)):
                queue.append((u, w))
            # Triangles: extend decided 2-chains.
            for w in bits(ru & rv):
                kv = eidx[(v, w)]
                sv = state[kv]
                if sv and ((edges[kv][0] == v) == (sv == 1)):  # v -> w decided
                    queue.append((u, w))
                ku = eidx[(w, u)]
                su = state[ku]
                if su and ((edges[ku][0] == w) == (su == 1)):  # w -> u decided
                    queue.append((w, v))
        return True

    def undo(trail: list[int], mark: int) -> None:
        while len(trail) > mark:
            state[trail.pop()] = 0

    def dfs() -> Iterator[tuple[int, ...]]:
        k = next((i for i, s in enumerate(state) if s == 0), -1)
        if k < 0:
            succ = [0] * n
            for i, (u, v) in enumerate(edges):
                if state[i] == 1:
                    succ[u] |= 1 << v
                else:
                    succ[v] |= 1 << u
            yield tuple(succ)
            return
        u, v = edges[k]
        for a, b in ((u, v), (v, u)):
            trail: list[int] = []
            if set_arc(a, b, trail):
                yield from dfs()
            undo(trail, 0)

    yield from dfs()


def iter_transitive_orientations(g: Graph) -> Iterator[Orientation]:
    if g.n > ALL_ORIENT_MAX:
        raise ValueError(f"orientation enumeration capped at {ALL_ORIENT_MAX} vertices")
    for succ in _orient_dfs(g):
        o = Orientation(g.n, succ)
        if not o.is_transitive() or not o.covers(g):
            raise AssertionError("orientation search produced an invalid orientation")
        yield o


def find_transitive_orientation(g: Graph) -> Optional[Orientation]:
    if g.n > ORIENT_MAX:
        raise ValueError(f"orientation search capped at {ORIENT_MAX} vertices")
    return next(iter_transitive_orientations(g), None)


def all_transitive_orientations(g: Graph, limit: int) -> tuple[list[Orientation], bool]:
    """Up to `limit` orientations plus a flag telling whether more exist."""
    out: list[Orientation] = []
    for o in iter_transitive_orientations(g):
        if len(out) == limit:
            return out, True
        out.append(o)
    return out, False


def is_cocomparability(g: Graph) -> Optional[Poset]:
    """A poset whose incomparability graph is g, or None."""
    o = find_transitive_orientation(g.complement())
    if o is None:
        return None
    p = o.to_poset(g.labels)
    if p.incomparability_graph() != g:
        raise AssertionError("orientation of the complement does not invert")
    return p


# -- odd asteroids -----------------------------------------------------------


@dataclass(frozen=True)
class AsteroidCertificate:
    """Vertices v0..v(2n) and paths P_i from v_i to v_(i+1), indices mod 2n+1,
    such that P_(i+n) avoids v_i and all its neighbors."""

    length: int
    vertices: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]

    def to_text(self) -> str:
        return json.dumps(
            {
                "length": self.length,
                "vertices": list(self.vertices),
                "paths": [list(p) for p in self.paths],
            },
            sort_keys=True,
        )


def _bfs_path(rows, allowed: int, src: int, dst: int) -> Optional[tuple[int, ...]]:
    if not ((allowed >> src) & 1) or not ((allowed >> dst) & 1):
        return None
    if src == dst:
        return (src,)
    parent = {src: -1}
    frontier = [src]
    while frontier:
        nxt = []
        for u in frontier:
            for w in bits(rows[u] & allowed):
                if w not in parent:
                    parent[w] = u
                    if w == dst:
                        path = [w]
                        while parent[path[-1]] != -1:
                            path.append(parent[path[-1]])
                        return tuple(reversed(path))
                    nxt.append(w)
        frontier = nxt
    return None


def find_odd_asteroid(g: Graph, max_len: Optional[int] = None) -> Optional[AsteroidCertificate]:
    """Smallest odd asteroid, searching lengths 3, 5, ... up to max_len.

    A tuple qualifies when every consecutive pair is joined by a path avoiding
    the closed neighborhood of the antipodal tuple vertex; paths are shortest
    (BFS), so certificates are canonical.
    """
    if g.n > ASTEROID_MAX:
        raise ValueError(f"asteroid search capped at {ASTEROID_MAX} vertices")
    if max_len is None:
        max_len = g.n if g.n % 2 else g.n - 1
    if max_len > g.n:
        raise ValueError("max_len exceeds the vertex count")
    rows = g.rows
    full = g.full_mask()
    for t in range(3, max_len + 1, 2):
        half = (t - 1) // 2
        for base in combinations(range(g.n), t):
            v0 = base[0]
            for rest in permutations(base[1:]):
                if rest[0] > rest[-1]:
                    continue  # skip mirror images
                vs = (v0,) + rest
                paths = []
                ok = True
                for j in range(t):
                    f = vs[(j - half) % t]
                    allowed = full & ~(rows[f] | (1 << f))
                    path = _bfs_path(rows, allowed, vs[j], vs[(j + 1) % t])
                    if path is None:
                        ok = False
                        break
                    paths.append(path)
                if ok:
                    return AsteroidCertificate(t, vs, tuple(paths))
    return None


def verify_asteroid(g: Graph, cert: AsteroidCertificate) -> bool:
    """Re-check every certificate invariant from scratch."""
    t = cert.length
    vs = cert.vertices
    if t < 3 or t % 2 == 0 or len(vs) != t or len(set(vs)) != t:
        return False
    if len(cert.paths) != t:
        return False
    if any(not 0 <= v < g.n for v in vs):
        return False
    half = (t - 1) // 2
    for j, path in enumerate(cert.paths):
        if not path or path[0] != vs[j] or path[-1] != vs[(j + 1) % t]:
            return False
        if len(set(path)) != len(path):
            return False
        for a, b in zip(path, path[1:]):
            if not g.has_edge(a, b):
                return False
        f = vs[(j - half) % t]
        banned = g.rows[f] | (1 << f)
        if any((banned >> v) & 1 for v in path):
            return False
    return True
