"""Immutable finite simple graphs and their metric primitives.

Vertices are dense integer ids 0..n-1.  Adjacency is stored as sorted tuples
(deterministic iteration) plus frozensets (O(1) membership).  Graphs never
mutate after construction, so every operation here is a pure function that
can be called concurrently.
"""

from collections import deque
from typing import NamedTuple

from .errors import CliqueBudgetExceeded, LoopEdge, ParseError, VertexOutOfRange

UNREACHABLE = -1


class Graph:
    """Finite simple graph: no loops, no multi-edges, undirected."""

    __slots__ = ("n", "adj", "adj_sets", "m", "_dist", "_hash")

    def __init__(self, n, adj):
        self.n = n
        self.adj = tuple(tuple(sorted(neighbors)) for neighbors in adj)
        self.adj_sets = tuple(frozenset(x) for x in self.adj)
        self.m = sum(len(x) for x in self.adj) // 2
        self._dist = None
        self._hash = None

    def degree(self, x):
        return len(self.adj[x])

    def has_edge(self, u, v):
        return v in self.adj_sets[u]

    def edges(self):
        """Yield edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


class Subgraph(NamedTuple):
    """An induced subgraph together with the map from its ids to the parent's."""

    graph: Graph
    vertices: tuple  # vertices[i] = id in the parent graph of local vertex i


class DistanceMatrix:
    """All-pairs hop distances; UNREACHABLE marks cross-component pairs."""

    __slots__ = ("n", "rows")

    def __init__(self, n, rows):
        self.n = n
        self.rows = rows

    def get(self, x, y):
        return self.rows[x][y]

    def row(self, x):
        return self.rows[x]

    def eccentricity(self, x):
        """Largest finite distance from x (UNREACHABLE entries ignored)."""
        return max((d for d in self.rows[x] if d != UNREACHABLE), default=0)

    def diameter(self):
        return max(self.eccentricity(x) for x in range(self.n)) if self.n else 0


def from_edge_list(n, edges):
    """Build a graph on n vertices from (u, v) pairs.

    Duplicate and reversed pairs collapse to a single edge.  Raises LoopEdge
    on u == v and VertexOutOfRange on ids outside 0..n-1.
    """
    if n < 0:
        raise VertexOutOfRange("negative vertex count")
    adj = [set() for _ in range(n)]
    for u, v in edges:
        if u == v:
            raise LoopEdge(f"self-loop at vertex {u}")
        if not (0 <= u < n) or not (0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, adj)


def _bfs_row(g, source):
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        dx = dist[x]
        for y in g.adj[x]:
            if dist[y] == UNREACHABLE:
                dist[y] = dx + 1
                queue.append(y)
    return dist


def all_pairs_distances(g):
    """BFS-exact hop distances; cached on the graph after the first call."""
    if g._dist is None:
        g._dist = DistanceMatrix(g.n, tuple(tuple(_bfs_row(g, s)) for s in range(g.n)))
    return g._dist


def connected_components(g):
    """Partition the vertex set by reachability; components sorted by least vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        comps.append(sorted(comp))
    return comps


def is_connected(g):
    return g.n <= 1 or len(connected_components(g)) == 1


def induced_subgraph(g, vertices):
    """Relabeled subgraph on `vertices`, keeping only edges inside the set."""
    verts = sorted(vertices)
    index = {v: i for i, v in enumerate(verts)}
    adj = [[index[w] for w in g.adj[v] if w in index] for v in verts]
    return Subgraph(Graph(len(verts), adj), tuple(verts))


def sphere(g, x):
    """Induced subgraph on the neighbors of x (the unit sphere at x)."""
    return induced_subgraph(g, g.adj[x])


def ball(g, x):
    """Induced subgraph on {x} and its neighbors (the closed unit ball at x)."""
    return induced_subgraph(g, (x,) + g.adj[x])


class SimplexCounts:
    """counts[k] = number of complete subgraphs on k+1 vertices."""

    __slots__ = ("counts",)

    def __init__(self, counts):
        self.counts = tuple(counts)

    def __getitem__(self, k):
        return self.counts[k]

    def __len__(self):
        return len(self.counts)

    def __eq__(self, other):
        other_counts = other.counts if isinstance(other, SimplexCounts) else tuple(other)
        return self.counts == other_counts

    def __repr__(self):
        return f"SimplexCounts{self.counts}"


def simplex_counts(g, budget=100_000_000):
    """Count complete subgraphs of every size.

    Cliques are enumerated by ordered extension: a clique (v_0 < ... < v_k) is
    only grown by common neighbors larger than v_k, so each clique is visited
    exactly once.  Raises CliqueBudgetExceeded past `budget` visited cliques.
    """
    counts = [g.n]
    seen = g.n
    if seen > budget:
        raise CliqueBudgetExceeded(f"more than {budget} cliques")

    def extend(cand, size):
        nonlocal seen
        for i, v in enumerate(cand):
            seen += 1
            if seen > budget:
                raise CliqueBudgetExceeded(f"more than {budget} cliques")
            if size >= len(counts):
                counts.append(0)
            counts[size] += 1
            nxt = [w for w in cand[i + 1:] if w in g.adj_sets[v]]
            if nxt:
                extend(nxt, size + 1)

    for v in range(g.n):
        nxt = [w for w in g.adj[v] if w > v]
        if nxt:
            extend(nxt, 1)
    return SimplexCounts(counts if g.n else [])


# Edge-list text format: '#' comment lines, then "n <count>", then "u v" lines.

def write_edge_list(g, path, header_comments=()):
    """Write the canonical edge-list file: edges u < v, lexicographic order."""
    with open(path, "w") as fh:
        for line in header_comments:
            fh.write(f"# {line}\n")
        fh.write(f"n {g.n}\n")
        for u, v in g.edges():
            fh.write(f"{u} {v}\n")


def read_edge_list(path):
    """Parse an edge-list file; raises ParseError with the offending line number."""
    n = None
    edges = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if n is None:
                if len(parts) != 2 or parts[0] != "n":
                    raise ParseError("expected header 'n <count>'", lineno)
                try:
                    n = int(parts[1])
                except ValueError:
                    raise ParseError(f"bad vertex count {parts[1]!r}", lineno) from None
                if n < 0:
                    raise ParseError("negative vertex count", lineno)
                continue
            if len(parts) != 2:
                raise ParseError("expected 'u v'", lineno)
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError(f"non-integer edge {line!r}", lineno) from None
            if u == v:
                raise ParseError(f"self-loop {u} {v}", lineno)
            if not (0 <= u < n) or not (0 <= v < n):
                raise ParseError(f"vertex out of range in {line!r}", lineno)
            edges.append((u, v))
    if n is None:
        raise ParseError("missing 'n <count>' header", 1)
    return from_edge_list(n, edges)
