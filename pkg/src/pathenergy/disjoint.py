"""Maximum internally vertex-disjoint path counts and the path matrix.

The fast route reduces each pair to unit-capacity max-flow on a node-split
network (Menger): every vertex w becomes an arc in(w) -> out(w) of capacity
1, every edge {a, b} the two arcs out(a) -> in(b) and out(b) -> in(a). The
flow value from out(u) to in(v) is the number of u-v paths sharing only the
endpoints; a direct edge carries one unit, so adjacent pairs need no special
case. The brute-force route, used as an independent oracle in validation,
searches families of disjoint paths directly and shares no code with the
flow solver.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, component_labels

_BRUTE_FORCE_MAX_N = 12


@dataclass(frozen=True)
class PathMatrix:
    """Symmetric nonnegative integer matrix of pairwise disjoint-path counts."""

    n: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.n or any(len(r) != self.n for r in self.entries):
            raise ValueError("entries must be an n x n matrix")
        for i in range(self.n):
            if self.entries[i][i] != 0:
                raise ValueError("diagonal must be zero")
            for j in range(i):
                if self.entries[i][j] != self.entries[j][i]:
                    raise ValueError("matrix must be symmetric")

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.entries)

    def max_entry(self) -> int:
        return max((x for row in self.entries for x in row), default=0)

    def as_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


# ---------------------------------------------------------------------------
# Max-flow route (Dinic on the split network)

class _Dinic:
    def __init__(self, size: int):
        self.size = size
        self.adj: list[list[list[int]]] = [[] for _ in range(size)]

    def add_arc(self, a: int, b: int, cap: int) -> None:
        # arc entries are [target, residual capacity, index of reverse arc]
        self.adj[a].append([b, cap, len(self.adj[b])])
        self.adj[b].append([a, 0, len(self.adj[a]) - 1])

    def max_flow(self, s: int, t: int) -> int:
        flow = 0
        while True:
            level = [-1] * self.size
            level[s] = 0
            queue = [s]
            head = 0
            while head < len(queue):
                v = queue[head]
                head += 1
                for arc in self.adj[v]:
                    if arc[1] > 0 and level[arc[0]] < 0:
                        level[arc[0]] = level[v] + 1
                        queue.append(arc[0])
            if level[t] < 0:
                return flow
            it = [0] * self.size

            def augment(v: int, limit: int) -> int:
                if v == t:
                    return limit
                while it[v] < len(self.adj[v]):
                    arc = self.adj[v][it[v]]
                    w = arc[0]
                    if arc[1] > 0 and level[w] == level[v] + 1:
                        pushed = augment(w, min(limit, arc[1]))
                        if pushed:
                            arc[1] -= pushed
                            self.adj[w][arc[2]][1] += pushed
                            return pushed
                    it[v] += 1
                return 0

            while True:
                pushed = augment(s, self.size)
                if not pushed:
                    break
                flow += pushed


def max_disjoint_paths(g: Graph, u: int, v: int) -> int:
    """Maximum number of internally vertex-disjoint u-v paths (0 if disconnected)."""
    _check_pair(g, u, v)
    if not _same_component(g, u, v):
        return 0
    return _flow_count(g, u, v)


def _check_pair(g: Graph, u: int, v: int) -> None:
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError(f"vertex pair ({u}, {v}) out of range for n={g.n}")
    if u == v:
        raise ValueError("endpoints must be distinct")


def _same_component(g: Graph, u: int, v: int) -> bool:
    seen = [False] * g.n
    seen[u] = True
    stack = [u]
    while stack:
        x = stack.pop()
        if x == v:
            return True
        for w in g.adjacency[x]:
            if not seen[w]:
                seen[w] = True
                stack.append(w)
    return seen[v]


def _flow_count(g: Graph, u: int, v: int) -> int:
    # in(w) = 2w, out(w) = 2w + 1
    net = _Dinic(2 * g.n)
    for w in range(g.n):
        if w != u and w != v:
            net.add_arc(2 * w, 2 * w + 1, 1)
    for a, b in g.edges:
        net.add_arc(2 * a + 1, 2 * b, 1)
        net.add_arc(2 * b + 1, 2 * a, 1)
    return net.max_flow(2 * u + 1, 2 * v)


def path_matrix(g: Graph) -> PathMatrix:
    """All-pairs disjoint-path counts; each unordered pair computed once."""
    if g.n < 1:
        raise ValueError("path_matrix requires n >= 1")
    labels = component_labels(g)
    entries = [[0] * g.n for _ in range(g.n)]
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if labels[i] != labels[j]:
                continue
            count = _flow_count(g, i, j)
            entries[i][j] = count
            entries[j][i] = count
    return PathMatrix(g.n, tuple(tuple(row) for row in entries))


# ---------------------------------------------------------------------------
# Brute-force oracle

def brute_force_disjoint_paths(g: Graph, u: int, v: int) -> int:
    """Exhaustive search for the largest family of internally disjoint u-v paths.

    Families are enumerated as lexicographically increasing sequences of path
    tuples, so each set of paths is visited exactly once; a greedy
    shortest-path packing seeds the incumbent and a neighbor-count bound
    prunes. Guarded to n <= 12 (exponential).
    """
    if g.n > _BRUTE_FORCE_MAX_N:
        raise ValueError(f"brute force is guarded to n <= {_BRUTE_FORCE_MAX_N}")
    _check_pair(g, u, v)
    adj = g.adjacency
    avail = frozenset(range(g.n)) - {u, v}
    best = [_greedy_packing(adj, u, v, set(avail))]
    target = min(len(adj[u]), len(adj[v]))
    if best[0] < target:
        _search(adj, u, v, avail, None, 0, best, target)
    return best[0]


def _greedy_packing(adj, u: int, v: int, avail: set[int]) -> int:
    """Repeatedly remove a shortest path's interior; lower bound for the search."""
    count = 1 if v in adj[u] else 0  # the direct edge is usable exactly once
    while True:
        prev = {u: -1}
        queue = [u]
        head = 0
        found = False
        while head < len(queue) and not found:
            x = queue[head]
            head += 1
            for w in adj[x]:
                if w == v:
                    if x == u:
                        continue
                    prev[v] = x
                    found = True
                    break
                if w in avail and w not in prev:
                    prev[w] = x
                    queue.append(w)
        if not found:
            return count
        x = prev[v]
        while x != u:
            avail.discard(x)
            x = prev[x]
        count += 1


def _search(adj, u, v, avail, token, count, best, target) -> None:
    if count > best[0]:
        best[0] = count
    if best[0] >= target:
        return
    if count + _pair_bound(adj, u, v, avail, token) <= best[0]:
        return
    for path in _paths_after(adj, u, v, avail, token):
        interior = frozenset(path[1:-1])
        _search(adj, u, v, avail - interior, path, count + 1, best, target)
        if best[0] >= target:
            return


def _pair_bound(adj, u, v, avail, token) -> int:
    direct = 1 if v in adj[u] and (token is None or (u, v) > token) else 0
    nu = sum(1 for x in adj[u] if x in avail) + direct
    nv = sum(1 for x in adj[v] if x in avail) + direct
    return min(nu, nv)


def _paths_after(adj, u, v, avail, token):
    """Yield simple u-v paths with interior in ``avail``, strictly after ``token``.

    Paths are vertex tuples compared lexicographically; DFS in sorted
    neighbor order emits them in increasing order.
    """
    path = [u]
    on_path = {u}

    def extend(tight: bool):
        d = len(path)
        floor = token[d] if tight and d < len(token) else -1
        for x in adj[path[-1]]:
            if x < floor:
                continue
            still_tight = tight and x == floor
            if x == v:
                # a path equal to token itself is excluded (strictly after)
                if not (still_tight and d + 1 == len(token)):
                    yield tuple(path) + (v,)
            elif x in avail and x not in on_path:
                path.append(x)
                on_path.add(x)
                yield from extend(still_tight)
                path.pop()
                on_path.remove(x)

    yield from extend(token is not None)
