"""Exhaustive isomorph-free graph corpora at desk scale (n <= ~10).

Graphs on n vertices are produced by extending every graph on n-1 vertices
with one new vertex over all 2^(n-1) neighborhoods and deduplicating by a
canonical form. The canonical form is the lexicographically smallest
upper-triangle bit pattern over all permutations compatible with an
iterated-degree coloring, found by a pruned backtracking search. Intended
for the validation harness and test corpora, not for bulk enumeration;
supply externally generated graph6 streams for anything larger.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from random import Random

from .graphs import Graph, cycle, is_connected


def canonical_key(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Isomorphism-invariant key: (n, minimized adjacency rows)."""
    return g.n, _canonical_rows(g.n, _neighbor_masks(g))


def _neighbor_masks(g: Graph) -> tuple[int, ...]:
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return tuple(masks)


def _refined_classes(n: int, masks: tuple[int, ...]) -> list[list[int]]:
    """Vertex classes under iterated neighbor-color refinement, in invariant order."""
    colors = [bin(m).count("1") for m in masks]
    while True:
        sigs = []
        for v in range(n):
            nbr = sorted(colors[w] for w in range(n) if masks[v] >> w & 1)
            sigs.append((colors[v], tuple(nbr)))
        order = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [order[s] for s in sigs]
        if len(set(new)) == len(set(colors)) and new == colors:
            break
        colors = new
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(colors[v], []).append(v)
    return [classes[c] for c in sorted(classes)]


def _canonical_rows(n: int, masks: tuple[int, ...]) -> tuple[int, ...]:
    """Minimum row-bit encoding over permutations respecting the refinement.

    ``best`` improves monotonically in place: a branch is explored only
    while its row prefix matches the current best, so every consistent
    permutation is either visited or provably not minimal.
    """
    if n == 0:
        return ()
    classes = _refined_classes(n, masks)
    slot_class = [i for i, cls in enumerate(classes) for _ in cls]
    infinity = 1 << (n + 1)
    best = [infinity] * n
    placed = [0] * n  # placed[k] = original vertex at canonical position k
    used = [False] * n

    def search(k: int) -> None:
        if k == n:
            return
        for v in classes[slot_class[k]]:
            if used[v]:
                continue
            row = 0
            mv = masks[v]
            for j in range(k):
                if mv >> placed[j] & 1:
                    row |= 1 << j
            if row > best[k]:
                continue
            if row < best[k]:
                best[k] = row
                for j in range(k + 1, n):
                    best[j] = infinity
            placed[k] = v
            used[v] = True
            search(k + 1)
            used[v] = False

    search(0)
    return tuple(best)


def _extensions(g: Graph):
    """All graphs obtained from g by adding one vertex with any neighborhood."""
    n = g.n
    for mask in range(1 << n):
        extra = [(v, n) for v in range(n) if mask >> v & 1]
        yield Graph(n + 1, g.edges + tuple(extra))


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Graph, ...]:
    """All graphs on n vertices up to isomorphism (guarded to n <= 10)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > 10:
        raise ValueError("exhaustive enumeration is guarded to n <= 10")
    if n == 0:
        return (Graph(0),)
    seen = set()
    out = []
    for parent in all_graphs(n - 1):
        for cand in _extensions(parent):
            key = canonical_key(cand)
            if key not in seen:
                seen.add(key)
                out.append(cand)
    return tuple(out)


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    return tuple(g for g in all_graphs(n) if is_connected(g))


@lru_cache(maxsize=None)
def trees(n: int) -> tuple[Graph, ...]:
    """All trees on n vertices up to isomorphism, by leaf extension."""
    if n < 1:
        raise ValueError("trees are defined for n >= 1")
    if n == 1:
        return (Graph(1),)
    seen = set()
    out = []
    for parent in trees(n - 1):
        for v in range(parent.n):
            cand = Graph(n, parent.edges + ((v, n - 1),))
            key = canonical_key(cand)
            if key not in seen:
                seen.add(key)
                out.append(cand)
    return tuple(out)


@lru_cache(maxsize=None)
def unicyclic_graphs(n: int) -> tuple[Graph, ...]:
    """Connected graphs with exactly one cycle (m = n), by leaf extension from cycles."""
    if n < 3:
        raise ValueError("unicyclic graphs need n >= 3")
    seen = set()
    out = []

    def add(cand: Graph) -> None:
        key = canonical_key(cand)
        if key not in seen:
            seen.add(key)
            out.append(cand)

    add(cycle(n))
    if n > 3:
        for parent in unicyclic_graphs(n - 1):
            for v in range(parent.n):
                add(Graph(n, parent.edges + ((v, n - 1),)))
    return tuple(out)


def random_graph(rng: Random, n: int, p: float) -> Graph:
    """Erdos-Renyi G(n, p) draw from the supplied generator."""
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    return Graph(n, tuple(edges))
