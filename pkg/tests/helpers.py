"""Shared brute-force helpers for the test suite.

Everything here recomputes facts from first principles (box sets, graph
searches, exhaustive subset enumeration) so the library code has something
independent to be checked against.
"""

from __future__ import annotations

from itertools import product

from skewtab import SkewShape, SkewTableau, enumerate_skew_shapes


def boxes_of(s: SkewShape) -> set[tuple[int, int]]:
    return {(i, j) for i in range(1, s.n + 1)
            for j in range(s.mu[i - 1] + 1, s.lam[i - 1] + 1)}


def shape_from_boxes(boxes: set[tuple[int, int]]) -> SkewShape:
    """Rebuild the normal-form shape of a box set (rows/cols renumbered)."""
    rows = sorted({i for i, _ in boxes})
    cols = sorted({j for _, j in boxes})
    rmap = {r: k + 1 for k, r in enumerate(rows)}
    cmap = {c: k + 1 for k, c in enumerate(cols)}
    per_row = {}
    for i, j in boxes:
        per_row.setdefault(rmap[i], set()).add(cmap[j])
    lam, mu = [], []
    for r in range(1, len(rows) + 1):
        js = sorted(per_row[r])
        assert js == list(range(js[0], js[-1] + 1)), "box set is not row-contiguous"
        lam.append(js[-1])
        mu.append(js[0] - 1)
    return SkewShape(lam, mu)


def bfs_connected(s: SkewShape) -> bool:
    """Connectivity of the row/column incidence graph of the box set."""
    boxes = boxes_of(s)
    if not boxes:
        return True
    verts = {("r", i) for i, _ in boxes} | {("c", j) for _, j in boxes}
    start = next(iter(verts))
    seen = {start}
    frontier = [start]
    while frontier:
        kind, idx = frontier.pop()
        for i, j in boxes:
            other = ("c", j) if (kind, idx) == ("r", i) else (("r", i) if (kind, idx) == ("c", j) else None)
            if other is not None and other not in seen:
                seen.add(other)
                frontier.append(other)
    return seen == verts


def brute_minimal_covers(s: SkewShape) -> set[frozenset]:
    """Inclusion-minimal vertex covers by full subset enumeration."""
    edges = sorted(boxes_of(s))
    verts = [("x", i) for i in range(1, s.n + 1)] + [("y", j) for j in range(1, s.m + 1)]
    covers = []
    for mask in range(1 << len(verts)):
        chosen = {verts[k] for k in range(len(verts)) if (mask >> k) & 1}
        if all(("x", i) in chosen or ("y", j) in chosen for i, j in edges):
            covers.append(frozenset(chosen))
    return {c for c in covers if not any(d < c for d in covers)}


def all_fillings(s: SkewShape, max_weight: int):
    sizes = [s.lam[i] - s.mu[i] for i in range(s.n)]
    for combo in product(range(1, max_weight + 1), repeat=sum(sizes)):
        it = iter(combo)
        yield SkewTableau(s, [[next(it) for _ in range(k)] for k in sizes])


def constant_filling(s: SkewShape, w: int = 1) -> SkewTableau:
    return SkewTableau(s, [[w] * (s.lam[i] - s.mu[i]) for i in range(s.n)])


def partitions_up_to(total: int):
    def rec(rest, maxpart):
        if rest == 0:
            yield ()
            return
        for p in range(min(rest, maxpart), 0, -1):
            for tail in rec(rest - p, p):
                yield (p,) + tail
    for n in range(1, total + 1):
        yield from rec(n, n)


def shapes_up_to(max_boxes: int, connected_only: bool = False):
    yield from enumerate_skew_shapes(max_boxes, connected_only=connected_only)
