"""Graph families and seeded random models.

Every generator is a deterministic function of its parameters and seed.
Random models consume Philox substreams in a documented, fixed order, so a
given (spec, seed) always reproduces the same graph.
"""

from dataclasses import dataclass, field

from . import rng
from .errors import InvalidParam
from .graph import Graph, from_edge_list

DETERMINISTIC_KINDS = ("complete", "cycle", "path", "star", "wheel", "complete_bipartite")
RANDOM_KINDS = ("erdos_renyi", "watts_strogatz", "barabasi_albert", "orbital")
KINDS = DETERMINISTIC_KINDS + RANDOM_KINDS


@dataclass(frozen=True)
class ModelSpec:
    """Declarative description of a graph family or random model plus seed."""

    kind: str
    params: dict = field(default_factory=dict)
    seed: int = 0

    def describe(self):
        """Canonical flat flag string, e.g. '--model er --n 50 --p 0.1 --seed 42'."""
        alias = {"erdos_renyi": "er", "watts_strogatz": "ws", "barabasi_albert": "ba",
                 "complete_bipartite": "bipartite"}
        parts = [f"--model {alias.get(self.kind, self.kind)}"]
        for key in sorted(self.params):
            value = self.params[key]
            if key == "generators":
                for gen in value:
                    parts.append("--generator " + (f"quadratic:{gen[1]}" if gen[0] == "quadratic"
                                                   else "permutation"))
            else:
                parts.append(f"--{key} {value}")
        parts.append(f"--seed {self.seed}")
        return " ".join(parts)


def build_model(spec):
    """Dispatch a ModelSpec to its generator; raises InvalidParam on bad input."""
    kind, p, seed = spec.kind, spec.params, spec.seed
    if kind in DETERMINISTIC_KINDS:
        return make_family(spec)
    if kind == "erdos_renyi":
        return erdos_renyi(p["n"], p["p"], seed)
    if kind == "watts_strogatz":
        return watts_strogatz(p["n"], p["k"], p["p"], seed)
    if kind == "barabasi_albert":
        return barabasi_albert(p["n"], p["m"], seed)
    if kind == "orbital":
        return orbital(p["n"], p["generators"], seed)
    raise InvalidParam(f"unknown model kind {kind!r}")


def complete(n):
    if n < 1:
        raise InvalidParam("complete graph needs n >= 1")
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle(n):
    """Cycle on n vertices; n=1 and n=2 degenerate to K_1 and K_2."""
    if n < 1:
        raise InvalidParam("cycle needs n >= 1")
    if n <= 2:
        return complete(n)
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n):
    if n < 1:
        raise InvalidParam("path needs n >= 1")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def star(n):
    """Star with n leaves attached to center 0, on n+1 vertices."""
    if n < 1:
        raise InvalidParam("star needs n >= 1 leaves")
    return from_edge_list(n + 1, [(0, i) for i in range(1, n + 1)])


def wheel(n):
    """Wheel: an n-cycle (vertices 0..n-1) plus a hub (vertex n) joined to all."""
    if n < 3:
        raise InvalidParam("wheel needs rim size n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, n) for i in range(n)]
    return from_edge_list(n + 1, edges)


def complete_bipartite(a, b):
    if a < 1 or b < 1:
        raise InvalidParam("complete bipartite needs a, b >= 1")
    return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def make_family(spec):
    """Build one of the deterministic families from a ModelSpec."""
    p = spec.params
    try:
        if spec.kind == "complete":
            return complete(p["n"])
        if spec.kind == "cycle":
            return cycle(p["n"])
        if spec.kind == "path":
            return path(p["n"])
        if spec.kind == "star":
            return star(p["n"])
        if spec.kind == "wheel":
            return wheel(p["n"])
        if spec.kind == "complete_bipartite":
            return complete_bipartite(p["a"], p["b"])
    except KeyError as exc:
        raise InvalidParam(f"missing parameter {exc} for {spec.kind}") from None
    raise InvalidParam(f"{spec.kind!r} is not a deterministic family")


def erdos_renyi(n, p, seed):
    """G(n, p): each pair u < v, in lexicographic order, kept with probability p."""
    if n < 0:
        raise InvalidParam("erdos_renyi needs n >= 0")
    if not 0 <= p <= 1:
        raise InvalidParam("edge probability must lie in [0, 1]")
    gen = rng.generator(seed)
    npairs = n * (n - 1) // 2
    draws = gen.random(npairs)
    edges = []
    i = 0
    for u in range(n):
        for v in range(u + 1, n):
            if draws[i] < p:
                edges.append((u, v))
            i += 1
    return from_edge_list(n, edges)


def watts_strogatz(n, k, p, seed):
    """Ring lattice with k/2 neighbors per side, each lattice edge rewired w.p. p.

    Rewiring scans offsets 1..k/2 and within each offset vertices 0..n-1; a
    rewired edge keeps its endpoint u and targets a uniform vertex that is
    neither u nor an existing neighbor of u.  Edge count is preserved.
    """
    if k < 2 or k % 2 != 0:
        raise InvalidParam("watts_strogatz needs even k >= 2")
    if k >= n:
        raise InvalidParam("watts_strogatz needs k < n")
    if not 0 <= p <= 1:
        raise InvalidParam("rewiring probability must lie in [0, 1]")
    gen = rng.generator(seed)
    adj = [set() for _ in range(n)]
    for j in range(1, k // 2 + 1):
        for u in range(n):
            adj[u].add((u + j) % n)
            adj[(u + j) % n].add(u)
    for j in range(1, k // 2 + 1):
        for u in range(n):
            v = (u + j) % n
            if gen.random() >= p:
                continue
            if len(adj[u]) >= n - 1:
                continue  # u saturated: no valid target, keep the lattice edge
            while True:
                w = int(gen.integers(0, n))
                if w != u and w not in adj[u]:
                    break
            adj[u].discard(v)
            adj[v].discard(u)
            adj[u].add(w)
            adj[w].add(u)
    return Graph(n, adj)


def barabasi_albert(n, m, seed):
    """Preferential attachment: start from K_{m+1}, each new vertex picks m
    distinct existing vertices with probability proportional to degree."""
    if m < 1 or m >= n:
        raise InvalidParam("barabasi_albert needs 1 <= m < n")
    gen = rng.generator(seed)
    edges = [(u, v) for u in range(m + 1) for v in range(u + 1, m + 1)]
    # endpoint multiset: vertex appears once per incident edge
    endpoints = [x for e in edges for x in e]
    for new in range(m + 1, n):
        targets = set()
        while len(targets) < m:
            targets.add(endpoints[int(gen.integers(0, len(endpoints)))])
        for t in sorted(targets):
            edges.append((t, new))
            endpoints.extend((t, new))
    return from_edge_list(n, edges)


def orbital(n, generators, seed):
    """Graph on Z_n with edges {x, T(x)} for each generator map T.

    Generators are ('quadratic', c), meaning T(x) = x^2 + c mod n, or
    ('permutation',), a uniform permutation drawn from the seeded stream
    (consumed in generator-list order).  Fixed points produce no edge.
    """
    if n < 2:
        raise InvalidParam("orbital needs n >= 2")
    if not generators:
        raise InvalidParam("orbital needs at least one generator")
    gen = rng.generator(seed)
    edges = set()
    for desc in generators:
        kind = desc[0]
        if kind == "quadratic":
            c = desc[1]
            images = [(x * x + c) % n for x in range(n)]
        elif kind == "permutation":
            images = [int(v) for v in gen.permutation(n)]
        else:
            raise InvalidParam(f"unknown orbital generator {desc!r}")
        for x, t in enumerate(images):
            if t != x:
                edges.add((min(x, t), max(x, t)))
    return from_edge_list(n, sorted(edges))
