"""Bipartite graphs of skew shapes and the squarefree brute-force oracles.

``minimal_vertex_covers`` drives the unmixedness oracle (all minimal covers
of an edge ideal's graph have equal size) and ``is_vertex_decomposable`` is
the sequential Cohen-Macaulay oracle for bipartite graphs.  Everything here
is definitional and independent of the combinatorial classifiers, so the two
routes can referee each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable

from .shapes import SkewShape

Vertex = tuple[str, int]  # ('x', i) for a row, ('y', j) for a column


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph on x_1..x_n and y_1..y_m; isolated vertices allowed."""

    n: int
    m: int
    edges: frozenset[tuple[int, int]]  # (i, j) meaning {x_i, y_j}

    def __post_init__(self):
        for i, j in self.edges:
            if not (1 <= i <= self.n and 1 <= j <= self.m):
                raise ValueError(f"edge ({i},{j}) out of range")

    @property
    def vertices(self) -> list[Vertex]:
        return [("x", i) for i in range(1, self.n + 1)] + \
               [("y", j) for j in range(1, self.m + 1)]


def from_shape(s: SkewShape) -> BipartiteGraph:
    """Skew Ferrers graph: one edge x_i y_j per box (i, j)."""
    return BipartiteGraph(n=s.n, m=s.m, edges=frozenset(s.boxes()))


# -- bitmask core ----------------------------------------------------------


def _adjacency(g: BipartiteGraph) -> tuple[int, ...]:
    """Neighbor bitmasks; vertices 0..n-1 are x's, n..n+m-1 are y's."""
    adj = [0] * (g.n + g.m)
    for i, j in g.edges:
        a, b = i - 1, g.n + j - 1
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return tuple(adj)


def _minimal_cover_masks(adj: tuple[int, ...]) -> list[int]:
    """All inclusion-minimal vertex covers, as bitmasks.

    Branch on an uncovered edge: either endpoint joins the cover.  The
    search yields every minimal cover (possibly with non-minimal extras),
    which a subset filter then removes.
    """
    nverts = len(adj)
    found: set[int] = set()

    def rec(chosen: int) -> None:
        for v in range(nverts):
            if (chosen >> v) & 1:
                continue
            nb = adj[v] & ~chosen
            if nb:
                u = (nb & -nb).bit_length() - 1
                rec(chosen | (1 << v))
                rec(chosen | (1 << u))
                return
        found.add(chosen)

    rec(0)
    covers = sorted(found, key=lambda c: (bin(c).count("1"), c))
    minimal: list[int] = []
    for c in covers:
        if not any(m & c == m for m in minimal):
            minimal.append(c)
    return minimal


def _restrict(adj: tuple[int, ...], keep: int) -> tuple[int, ...]:
    """Induced subgraph on the kept vertex mask (dead rows zeroed)."""
    return tuple(adj[v] & keep if (keep >> v) & 1 else 0 for v in range(len(adj)))


_vd_cache: dict[tuple[int, ...], bool] = {}


def _canonical(adj: tuple[int, ...]) -> tuple[int, ...]:
    """Densely relabeled adjacency of the non-isolated part."""
    live = [v for v in range(len(adj)) if adj[v]]
    pos = {v: k for k, v in enumerate(live)}
    out = []
    for v in live:
        mask = 0
        nb = adj[v]
        while nb:
            w = (nb & -nb).bit_length() - 1
            nb &= nb - 1
            mask |= 1 << pos[w]
        out.append(mask)
    return tuple(out)


def _vd(adj: tuple[int, ...]) -> bool:
    """Vertex decomposability by the definition, memoized.

    Isolated vertices are immaterial (the independence complex is a cone
    over them), so the memo key is the compacted non-isolated part.
    """
    key = _canonical(adj)
    if not key:
        return True  # totally disconnected
    hit = _vd_cache.get(key)
    if hit is not None:
        return hit

    adj = key
    nverts = len(adj)
    all_mask = (1 << nverts) - 1
    result = False
    for v in range(nverts):
        nv = adj[v]
        if not nv:
            continue
        closed = nv | (1 << v)
        del_v = _restrict(adj, all_mask & ~(1 << v))
        del_nv = _restrict(adj, all_mask & ~closed)
        # shredding: every maximal independent set of G\N[v] extends into N(v)
        shredding = True
        keep = all_mask & ~closed
        for cover in _minimal_cover_masks(del_nv):
            s_mask = keep & ~cover
            nb = nv
            ok = False
            while nb:
                w = (nb & -nb).bit_length() - 1
                nb &= nb - 1
                if adj[w] & s_mask == 0:
                    ok = True
                    break
            if not ok:
                shredding = False
                break
        if shredding and _vd(del_v) and _vd(del_nv):
            result = True
            break
    _vd_cache[key] = result
    return result


def clear_caches() -> None:
    _vd_cache.clear()


# -- public oracle surface --------------------------------------------------


def minimal_vertex_covers(g: BipartiteGraph) -> frozenset[frozenset[Vertex]]:
    """All inclusion-minimal vertex covers, as sets of labeled vertices."""
    adj = _adjacency(g)

    def unpack(mask: int) -> frozenset[Vertex]:
        out = []
        while mask:
            v = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            out.append(("x", v + 1) if v < g.n else ("y", v - g.n + 1))
        return frozenset(out)

    return frozenset(unpack(c) for c in _minimal_cover_masks(adj))


def is_unmixed_graph(g: BipartiteGraph) -> bool:
    """True iff all minimal vertex covers have the same cardinality."""
    sizes = {bin(c).count("1") for c in _minimal_cover_masks(_adjacency(g))}
    return len(sizes) <= 1


def is_vertex_decomposable(g: BipartiteGraph) -> bool:
    return _vd(_adjacency(g))


def is_union_complete_graphs(vertices: Iterable[Hashable],
                             edges: Iterable[tuple[Hashable, Hashable]]) -> bool:
    """True iff every connected component of a simple graph is a clique."""
    verts = list(vertices)
    nbr: dict[Hashable, set] = {v: set() for v in verts}
    for u, w in edges:
        if u == w:
            raise ValueError("loops are not allowed")
        nbr[u].add(w)
        nbr[w].add(u)
    seen: set = set()
    for v in verts:
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in nbr[u]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        k = len(comp)
        edge_count = sum(len(nbr[u] & comp) for u in comp) // 2
        if edge_count != k * (k - 1) // 2:
            return False
    return True
