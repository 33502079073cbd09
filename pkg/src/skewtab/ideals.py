"""Monomial ideal engine: weighted edge ideals, colon/radical, associated
radicals, irreducible decomposition and the weighted brute-force oracles.

Monomials are exponent tuples over an ordered variable list.  Generating
sets are stored minimally (no generator divides another).  The unit ideal
is represented explicitly by the zero exponent vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping, Sequence

from .graphs import _vd


def _divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _minimalize(gens: Iterable[tuple[int, ...]]) -> frozenset[tuple[int, ...]]:
    gens = set(gens)
    out = set()
    for g in sorted(gens, key=sum):
        if not any(_divides(h, g) for h in out):
            out.add(g)
    return frozenset(out)


@dataclass(frozen=True)
class MonomialIdeal:
    variables: tuple[str, ...]
    generators: frozenset[tuple[int, ...]]

    @classmethod
    def make(cls, variables: Sequence[str], gens: Iterable[Sequence[int]]) -> "MonomialIdeal":
        variables = tuple(variables)
        exps = []
        for g in gens:
            g = tuple(g)
            if len(g) != len(variables) or any(e < 0 for e in g):
                raise ValueError(f"bad exponent vector {g} for {variables}")
            exps.append(g)
        return cls(variables, _minimalize(exps))

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        zero = (0,) * len(self.variables)
        return zero in self.generators

    @property
    def is_proper(self) -> bool:
        return not self.is_unit

    def contains(self, monomial: Sequence[int]) -> bool:
        monomial = tuple(monomial)
        return any(_divides(g, monomial) for g in self.generators)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        """self >= other as ideals."""
        return all(self.contains(g) for g in other.generators)

    def colon(self, u: Sequence[int]) -> "MonomialIdeal":
        """I : u for a monomial u."""
        u = tuple(u)
        gens = (tuple(max(e - v, 0) for e, v in zip(g, u)) for g in self.generators)
        return MonomialIdeal(self.variables, _minimalize(gens))

    def radical(self) -> "MonomialIdeal":
        gens = (tuple(1 if e else 0 for e in g) for g in self.generators)
        return MonomialIdeal(self.variables, _minimalize(gens))

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        gens = (tuple(max(a, b) for a, b in zip(g, h))
                for g in self.generators for h in other.generators)
        return MonomialIdeal(self.variables, _minimalize(gens))

    def max_exponents(self) -> tuple[int, ...]:
        """Per-variable maximum over the generators (all zero if none)."""
        out = [0] * len(self.variables)
        for g in self.generators:
            for k, e in enumerate(g):
                if e > out[k]:
                    out[k] = e
        return tuple(out)

    def format(self) -> str:
        """Debug format: one generator per line as var^exp tokens."""
        lines = []
        for g in sorted(self.generators):
            toks = [v if e == 1 else f"{v}^{e}"
                    for v, e in zip(self.variables, g) if e]
            lines.append(" ".join(toks) if toks else "1")
        return "\n".join(lines)


# -- weighted graphs ---------------------------------------------------------


@dataclass(frozen=True)
class WeightedGraph:
    """Simple graph with a positive integer weight on every edge."""

    vertices: tuple[str, ...]
    weights: tuple[tuple[tuple[str, str], int], ...]  # ((u, v), w) with u, v as given

    @classmethod
    def make(cls, vertices: Sequence[str],
             weights: Mapping[tuple[str, str], int]) -> "WeightedGraph":
        vertices = tuple(vertices)
        index = {v: k for k, v in enumerate(vertices)}
        seen = set()
        items = []
        for (u, v), w in weights.items():
            if u not in index or v not in index or u == v:
                raise ValueError(f"bad edge ({u}, {v})")
            if not isinstance(w, int) or w < 1:
                raise ValueError(f"edge weight must be a positive integer: {w}")
            key = frozenset((u, v))
            if key in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add(key)
            items.append(((u, v), w))
        items.sort(key=lambda it: (index[it[0][0]], index[it[0][1]]))
        return cls(vertices, tuple(items))

    @property
    def edge_count(self) -> int:
        return len(self.weights)


def weighted_edge_ideal(g: WeightedGraph) -> MonomialIdeal:
    """I(G,w) = ((x_u x_v)^w(u,v) over the edges of G)."""
    index = {v: k for k, v in enumerate(g.vertices)}
    gens = []
    for (u, v), w in g.weights:
        e = [0] * len(g.vertices)
        e[index[u]] = w
        e[index[v]] = w
        gens.append(tuple(e))
    return MonomialIdeal.make(g.vertices, gens)


def associated_radical(ideal: MonomialIdeal, u: Sequence[int]) -> MonomialIdeal:
    """sqrt(I : u) for a monomial u not in I."""
    if ideal.contains(u):
        raise ValueError("u lies in the ideal; I : u would be the unit ideal")
    return ideal.colon(u).radical()


def _radical_for_exponents(g: WeightedGraph, index: dict[str, int],
                           a: Sequence[int]) -> MonomialIdeal | None:
    """I(G\\U) + (x_i | i in U) for the threshold vector a; None if x^a in I."""
    nvars = len(g.vertices)
    u_set = set()
    for (u, v), w in g.weights:
        au, av = a[index[u]], a[index[v]]
        if au >= w and av >= w:
            return None  # x^a lies in I(G, w)
        if au < w <= av:
            u_set.add(index[u])
        if av < w <= au:
            u_set.add(index[v])
    gens = []
    for (u, v), w in g.weights:
        iu, iv = index[u], index[v]
        if iu in u_set or iv in u_set:
            continue
        e = [0] * nvars
        e[iu] = e[iv] = 1
        gens.append(tuple(e))
    for i in u_set:
        e = [0] * nvars
        e[i] = 1
        gens.append(tuple(e))
    return MonomialIdeal.make(g.vertices, gens)


def associated_radicals_weighted(g: WeightedGraph) -> frozenset[MonomialIdeal]:
    """All associated radicals of I(G,w).

    The radical of I(G,w) : x^a depends on a only through the comparisons
    a_i < w(i,j) <= a_j, so each coordinate ranges over {0} and the distinct
    weights incident to that vertex.  Vectors with x^a in the ideal are
    skipped.
    """
    index = {v: k for k, v in enumerate(g.vertices)}
    candidates: list[list[int]] = [[0] for _ in g.vertices]
    for (u, v), w in g.weights:
        for vert in (u, v):
            cand = candidates[index[vert]]
            if w not in cand:
                cand.append(w)
    out = set()
    for a in product(*candidates):
        rad = _radical_for_exponents(g, index, a)
        if rad is not None:
            out.add(rad)
    return frozenset(out)


# -- irreducible decomposition ----------------------------------------------


def irreducible_decomposition(ideal: MonomialIdeal) -> list[MonomialIdeal]:
    """Irredundant irreducible components (ideals of pure variable powers).

    Recursive generator splitting: a generator x^a*y^b*... with two or more
    variables splits the ideal as (rest, x^a) and (rest, monomial/x^a).
    Redundant components are dropped with a witness-monomial test.
    """
    if ideal.is_zero or ideal.is_unit:
        raise ValueError("irreducible decomposition needs a proper nonzero ideal")
    nvars = len(ideal.variables)
    seen: set[frozenset[tuple[int, ...]]] = set()
    parts: set[frozenset[tuple[int, ...]]] = set()

    def rec(gens: frozenset[tuple[int, ...]]) -> None:
        if gens in seen:
            return
        seen.add(gens)
        split_gen = next((g for g in sorted(gens)
                          if sum(1 for e in g if e) >= 2), None)
        if split_gen is None:
            parts.add(gens)
            return
        v = next(k for k, e in enumerate(split_gen) if e)
        pure = tuple(split_gen[k] if k == v else 0 for k in range(nvars))
        rest = tuple(0 if k == v else split_gen[k] for k in range(nvars))
        others = gens - {split_gen}
        rec(_minimalize(others | {pure}))
        rec(_minimalize(others | {rest}))

    rec(ideal.generators)
    comps = [MonomialIdeal(ideal.variables, gens) for gens in parts]

    # drop components containing another component (absorbed in intersections)
    comps.sort(key=lambda c: sorted(c.generators))
    kept = [c for c in comps
            if not any(c is not d and c.contains_ideal(d) and c != d for d in comps)]

    # witness filter: C is needed iff the maximal monomial outside C lies in
    # every other component; membership only compares against bounded
    # exponents, so a clamp at max exponent + 1 is a faithful stand-in.
    big = max((max(c.max_exponents(), default=0) for c in kept), default=0) + 1
    result = list(kept)
    changed = True
    while changed:
        changed = False
        for c in list(result):
            others = [d for d in result if d is not c]
            if not others:
                continue
            witness = tuple(
                next((g[k] for g in c.generators if g[k]), big) - 1
                if any(g[k] for g in c.generators) else big
                for k in range(nvars)
            )
            if all(d.contains(witness) for d in others):
                continue  # witness shows the intersection escapes c
            result.remove(c)
            changed = True
            break
    return result


def associated_primes(ideal: MonomialIdeal) -> frozenset[frozenset[str]]:
    """Supports of the irredundant irreducible components."""
    out = set()
    for comp in irreducible_decomposition(ideal):
        out.add(frozenset(v for v, e in zip(ideal.variables, comp.max_exponents()) if e))
    return frozenset(out)


def is_unmixed_ideal(ideal: MonomialIdeal) -> bool:
    """True iff all associated primes have equal cardinality.

    Dimensions are taken over the full ambient variable list carried by the
    ideal, so comparing prime cardinalities is comparing dimensions.
    """
    sizes = {len(p) for p in associated_primes(ideal)}
    return len(sizes) <= 1


# -- weighted SCM oracle ------------------------------------------------------


def _bipartition(g: WeightedGraph) -> None:
    """Raise unless the graph is bipartite (2-colorable)."""
    color: dict[str, int] = {}
    nbr: dict[str, list[str]] = {v: [] for v in g.vertices}
    for (u, v), _ in g.weights:
        nbr[u].append(v)
        nbr[v].append(u)
    for root in g.vertices:
        if root in color:
            continue
        color[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for w in nbr[u]:
                if w not in color:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    raise ValueError("graph is not bipartite")


def is_scm_weighted_oracle(g: WeightedGraph) -> bool:
    """Sequentially Cohen-Macaulay test for a bipartite edge-weighted graph.

    Every associated radical of I(G,w) is the edge ideal of an induced
    subgraph plus variables; the ideal is SCM iff each of those induced
    subgraphs is vertex decomposable.
    """
    _bipartition(g)
    index = {v: k for k, v in enumerate(g.vertices)}
    candidates: list[list[int]] = [[0] for _ in g.vertices]
    for (u, v), w in g.weights:
        for vert in (u, v):
            cand = candidates[index[vert]]
            if w not in cand:
                cand.append(w)
    nvars = len(g.vertices)
    checked: set[frozenset[int]] = set()
    for a in product(*candidates):
        u_set = set()
        in_ideal = False
        for (u, v), w in g.weights:
            au, av = a[index[u]], a[index[v]]
            if au >= w and av >= w:
                in_ideal = True
                break
            if au < w <= av:
                u_set.add(index[u])
            if av < w <= au:
                u_set.add(index[v])
        if in_ideal:
            continue
        key = frozenset(u_set)
        if key in checked:
            continue
        checked.add(key)
        adj = [0] * nvars
        for (u, v), w in g.weights:
            iu, iv = index[u], index[v]
            if iu in u_set or iv in u_set:
                continue
            adj[iu] |= 1 << iv
            adj[iv] |= 1 << iu
        if not _vd(tuple(adj)):
            return False
    return True
