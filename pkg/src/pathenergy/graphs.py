"""Simple undirected graphs: representation, families, operators, connectivity.

Vertices are dense 0-indexed integers. Graphs are immutable after
construction and safe to share across worker processes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``edges`` is a sorted tuple of pairs ``(u, v)`` with ``u < v``; no loops,
    no duplicates. Use :meth:`from_edges` to build from unnormalized input.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
        if list(self.edges) != sorted(self.edges):
            object.__setattr__(self, "edges", tuple(sorted(self.edges)))

    @classmethod
    def from_edges(cls, n: int, edges) -> Graph:
        """Build a graph, normalizing edge orientation and dropping duplicates."""
        norm = {(u, v) if u < v else (v, u) for u, v in edges}
        return cls(n, tuple(sorted(norm)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(nbrs)) for nbrs in adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self._edge_set

    @cached_property
    def _edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def relabel(self, perm) -> Graph:
        """Apply a vertex permutation: vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def with_edge(self, u: int, v: int) -> Graph:
        """Return a copy with edge {u, v} added (no-op if present)."""
        if u == v:
            raise ValueError("cannot add a loop")
        return Graph.from_edges(self.n, list(self.edges) + [(u, v)])


def degrees(g: Graph) -> tuple[int, ...]:
    return tuple(len(nbrs) for nbrs in g.adjacency)


def max_degree(g: Graph) -> int:
    """Maximum vertex degree; 0 for the empty and edgeless graphs."""
    return max(degrees(g), default=0)


# ---------------------------------------------------------------------------
# Families

def complete_graph(p: int) -> Graph:
    if p < 1:
        raise ValueError("complete_graph requires p >= 1")
    return Graph(p, tuple(combinations(range(p), 2)))


def complete_bipartite(p: int, q: int) -> Graph:
    """K_{p,q}: parts {0..p-1} and {p..p+q-1}. Symmetric in p, q."""
    if p < 1 or q < 1:
        raise ValueError("complete_bipartite requires p, q >= 1")
    return Graph(p + q, tuple((a, p + b) for a in range(p) for b in range(q)))


def cycle(p: int) -> Graph:
    if p < 3:
        raise ValueError("cycle requires p >= 3")
    return Graph.from_edges(p, [(i, (i + 1) % p) for i in range(p)])


def path_graph(p: int) -> Graph:
    if p < 1:
        raise ValueError("path_graph requires p >= 1")
    return Graph(p, tuple((i, i + 1) for i in range(p - 1)))


def star(p: int) -> Graph:
    """Star on p vertices total: hub 0 plus p-1 leaves."""
    if p < 1:
        raise ValueError("star requires p >= 1")
    return Graph(p, tuple((0, i) for i in range(1, p)))


def hypercube(d: int) -> Graph:
    """d-dimensional hypercube on 2**d vertices (vertices are bitmasks)."""
    if d < 0:
        raise ValueError("hypercube requires d >= 0")
    n = 1 << d
    edges = [(v, v | (1 << b)) for v in range(n) for b in range(d) if not v & (1 << b)]
    return Graph.from_edges(n, edges)


def wheel(p: int) -> Graph:
    """Wheel on p vertices total: hub 0 joined to a (p-1)-cycle."""
    if p < 4:
        raise ValueError("wheel requires p >= 4")
    rim = [(i, i % (p - 1) + 1) for i in range(1, p)]
    spokes = [(0, i) for i in range(1, p)]
    return Graph.from_edges(p, rim + spokes)


def prism(p: int) -> Graph:
    """Circular ladder on 2p vertices: two p-cycles joined by rungs (3-regular)."""
    if p < 3:
        raise ValueError("prism requires p >= 3")
    edges = []
    for i in range(p):
        j = (i + 1) % p
        edges.append((i, j))
        edges.append((p + i, p + j))
        edges.append((i, p + i))
    return Graph.from_edges(2 * p, edges)


def antiprism(p: int) -> Graph:
    """Antiprism on 2p vertices: two p-cycles plus crossed rungs (4-regular)."""
    if p < 3:
        raise ValueError("antiprism requires p >= 3")
    edges = []
    for i in range(p):
        j = (i + 1) % p
        edges.append((i, j))
        edges.append((p + i, p + j))
        edges.append((i, p + i))
        edges.append((j, p + i))
    return Graph.from_edges(2 * p, edges)


# ---------------------------------------------------------------------------
# Operators

def line_graph(g: Graph) -> Graph:
    """Line graph: one vertex per edge of g, adjacent iff the edges share an endpoint."""
    edge_list = list(g.edges)
    index = {e: i for i, e in enumerate(edge_list)}
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for e, i in index.items():
        incident[e[0]].append(i)
        incident[e[1]].append(i)
    out = set()
    for ids in incident:
        out.update(combinations(sorted(ids), 2))
    return Graph(len(edge_list), tuple(sorted(out)))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product: (a,x)~(b,y) iff (a=b and x~y) or (x=y and a~b)."""
    idx = lambda a, x: a * h.n + x
    edges = []
    for a in range(g.n):
        for x, y in h.edges:
            edges.append((idx(a, x), idx(a, y)))
    for x in range(h.n):
        for a, b in g.edges:
            edges.append((idx(a, x), idx(b, x)))
    return Graph.from_edges(g.n * h.n, edges)


# ---------------------------------------------------------------------------
# Connectivity

def connected_components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        stack = [s]
        seen[s] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    """Single vertex counts as connected; the empty graph (n=0) does not."""
    if g.n == 0:
        return False
    return len(connected_components(g)) == 1


def component_labels(g: Graph) -> list[int]:
    """Per-vertex component id (position of the component in connected_components order)."""
    labels = [-1] * g.n
    for i, comp in enumerate(connected_components(g)):
        for v in comp:
            labels[v] = i
    return labels


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or None if the graph is acyclic."""
    best: int | None = None
    for src in range(g.n):
        dist = {src: 0}
        parent = {src: -1}
        queue = [src]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for w in g.adjacency[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif w != parent[v]:
                    # cycle through src of length dist[v] + dist[w] + 1 (exact
                    # when the cycle passes src; scanning all sources fixes it)
                    cyc = dist[v] + dist[w] + 1
                    if best is None or cyc < best:
                        best = cyc
    return best


# ---------------------------------------------------------------------------
# Blocks

@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (maximal 2-connected subgraphs and bridges) plus cut vertices.

    Each block is the sorted tuple of its vertices; bridges appear as
    2-vertex blocks; isolated vertices yield no block.
    """

    blocks: tuple[tuple[int, ...], ...]
    articulation_points: frozenset[int]

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    @property
    def nontrivial_block_count(self) -> int:
        return sum(1 for b in self.blocks if len(b) >= 3)


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Hopcroft-Tarjan lowpoint DFS, iterative to survive deep graphs."""
    disc = [-1] * g.n
    low = [0] * g.n
    parent = [-1] * g.n
    edge_stack: list[tuple[int, int]] = []
    blocks: list[tuple[int, ...]] = []
    articulation: set[int] = set()
    timer = 0

    def pop_block(u: int, v: int) -> None:
        verts: set[int] = set()
        while True:
            a, b = edge_stack.pop()
            verts.add(a)
            verts.add(b)
            if (a, b) == (u, v):
                break
        blocks.append(tuple(sorted(verts)))

    for root in range(g.n):
        if disc[root] != -1:
            continue
        root_children = 0
        # frames: (vertex, iterator index into adjacency)
        stack = [(root, 0)]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, i = stack[-1]
            if i < len(g.adjacency[v]):
                stack[-1] = (v, i + 1)
                w = g.adjacency[v][i]
                if disc[w] == -1:
                    parent[w] = v
                    if v == root:
                        root_children += 1
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, 0))
                elif w != parent[v] and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    low[u] = min(low[u], low[v])
                    if low[v] >= disc[u]:
                        if u != root:
                            articulation.add(u)
                        pop_block(u, v)
        if root_children >= 2:
            articulation.add(root)
    blocks.sort()
    return BlockDecomposition(tuple(blocks), frozenset(articulation))


def is_biconnected(g: Graph) -> bool:
    """Connected, n >= 3, and no cut vertex (one block covering all vertices)."""
    if g.n < 3 or not is_connected(g):
        return False
    dec = block_decomposition(g)
    return dec.block_count == 1 and len(dec.blocks[0]) == g.n
