"""Distance-based functionals.

Everything derived from hop distances is computed as an exact Fraction, so
identities and bounds downstream are equality checks rather than tolerance
checks.  Only the similarity magnitude and the cluster-length ratio are
floating point.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import Disconnected, SingularZ, TooSmall, UndefinedRatio
from .graph import UNREACHABLE, all_pairs_distances, ball, connected_components


def characteristic_length(g):
    """Mean hop distance over ordered pairs of distinct vertices.

    A disconnected graph gets the unweighted mean of its per-component values;
    single-vertex components contribute 0.
    """
    comps = connected_components(g)
    if not comps:
        return Fraction(0)
    if len(comps) == 1:
        return _component_length(g, comps[0])
    return sum(_component_length(g, comp) for comp in comps) / len(comps)


def _component_length(g, comp):
    k = len(comp)
    if k < 2:
        return Fraction(0)
    dist = all_pairs_distances(g)
    total = 0
    for x in comp:
        row = dist.row(x)
        for y in comp:
            total += row[y]
    return Fraction(total, k * (k - 1))


def local_mean_distance(g, x):
    """Mean distance from x to every other vertex (connected graphs, n >= 2)."""
    if g.n < 2:
        raise TooSmall("need at least two vertices")
    row = all_pairs_distances(g).row(x)
    if UNREACHABLE in row:
        raise Disconnected("vertex cannot reach the whole graph")
    return Fraction(sum(row), g.n - 1)


def relative_characteristic_length(g, subset):
    """Mean distance over ordered pairs inside `subset`, measured in g."""
    verts = sorted(subset)
    k = len(verts)
    if k < 2:
        raise TooSmall("need at least two vertices in the subset")
    dist = all_pairs_distances(g)
    total = 0
    for x in verts:
        row = dist.row(x)
        for y in verts:
            if x == y:
                continue
            if row[y] == UNREACHABLE:
                raise Disconnected(f"vertices {x} and {y} lie in different components")
            total += row[y]
    return Fraction(total, k * (k - 1))


def local_length(g, x):
    """Mean distance between distinct neighbors of x, measured inside the ball.

    Vertices of degree <= 1 have no neighbor pair; they take the value 2 by
    convention (flagged in LocalProfile).
    """
    if g.degree(x) <= 1:
        return Fraction(2)
    sub = ball(g, x)
    sphere_ids = [i for i, v in enumerate(sub.vertices) if v != x]
    return relative_characteristic_length(sub.graph, sphere_ids)


def local_cluster(g, x):
    """Fraction of realized edges among the neighbor pairs of x (0 if degree <= 1)."""
    neighbors = g.adj[x]
    d = len(neighbors)
    if d <= 1:
        return Fraction(0)
    e = 0
    for i, u in enumerate(neighbors):
        au = g.adj_sets[u]
        for v in neighbors[i + 1:]:
            if v in au:
                e += 1
    return Fraction(2 * e, d * (d - 1))


def mean_cluster(g):
    """Vertex average of the local cluster coefficient."""
    if g.n == 0:
        return Fraction(0)
    return sum(local_cluster(g, x) for x in range(g.n)) / g.n


def cluster_length_ratio(g):
    """length / log(1 / cluster) as a float; raises UndefinedRatio at cluster 0 or 1."""
    nu = mean_cluster(g)
    if nu == 0:
        raise UndefinedRatio("nu_zero")
    if nu == 1:
        raise UndefinedRatio("nu_one")
    return float(characteristic_length(g)) / math.log(1 / float(nu))


def wiener_index(g):
    """Total distance over ordered pairs (n(n-1) times the mean length)."""
    if not _connected(g):
        raise Disconnected("wiener index needs a connected graph")
    dist = all_pairs_distances(g)
    return sum(sum(dist.row(x)) for x in range(g.n))


def distance_variance(g):
    """Spread max_x d(x) - min_x d(x) of the per-vertex total distances."""
    if not _connected(g):
        raise Disconnected("distance variance needs a connected graph")
    if g.n == 0:
        return 0
    totals = [sum(all_pairs_distances(g).row(x)) for x in range(g.n)]
    return max(totals) - min(totals)


def closeness_centrality(g, x):
    """Reciprocal of the total distance from x."""
    if g.n < 2:
        raise TooSmall("need at least two vertices")
    row = all_pairs_distances(g).row(x)
    if UNREACHABLE in row:
        raise Disconnected("vertex cannot reach the whole graph")
    return Fraction(1, sum(row))


def mean_centrality(g):
    """Vertex average of closeness centrality."""
    if not _connected(g) or g.n < 2:
        raise Disconnected("mean centrality needs a connected graph on >= 2 vertices")
    return sum(closeness_centrality(g, x) for x in range(g.n)) / g.n


def magnitude(g, pivot_tol=1e-12):
    """Total weight solving Z w = 1 for the similarity matrix Z_ij = exp(-d(i,j)).

    Plain Gaussian elimination with partial pivoting; raises SingularZ when
    the best pivot drops below `pivot_tol`.
    """
    if not _connected(g):
        raise Disconnected("magnitude needs finite distances")
    n = g.n
    if n == 0:
        return 0.0
    dist = all_pairs_distances(g)
    a = [[math.exp(-dist.get(i, j)) for j in range(n)] + [1.0] for i in range(n)]
    for col in range(n):
        piv = max(range(col, n), key=lambda r: abs(a[r][col]))
        if abs(a[piv][col]) < pivot_tol:
            raise SingularZ(f"pivot {a[piv][col]!r} below {pivot_tol}")
        a[col], a[piv] = a[piv], a[col]
        prow = a[col]
        for r in range(col + 1, n):
            factor = a[r][col] / prow[col]
            if factor:
                row = a[r]
                for c in range(col, n + 1):
                    row[c] -= factor * prow[c]
    w = [0.0] * n
    for r in range(n - 1, -1, -1):
        acc = a[r][n] - sum(a[r][c] * w[c] for c in range(r + 1, n))
        w[r] = acc / a[r][r]
    return sum(w)


@dataclass
class VertexProfile:
    """Per-vertex record of the local quantities."""

    vertex: int
    degree: int
    cluster: Fraction                      # C(x)
    length: Fraction                       # L(x), 2 by convention at degree <= 1
    low_degree: bool                       # True when the length-2 convention applied
    mean_distance: Optional[Fraction]      # D(x), None when disconnected
    centrality: Optional[Fraction]         # f(x), None when disconnected
    curvature: Optional[float]             # s(x), None when no distance-2 vertices
    dimension: Fraction                    # 1 + dimension of the unit sphere


def local_profile(g):
    """One VertexProfile per vertex; distance fields are None on disconnected graphs."""
    from .topology import vertex_curvature, vertex_dimension

    connected = _connected(g) and g.n >= 2
    records = []
    for x in range(g.n):
        records.append(VertexProfile(
            vertex=x,
            degree=g.degree(x),
            cluster=local_cluster(g, x),
            length=local_length(g, x),
            low_degree=g.degree(x) <= 1,
            mean_distance=local_mean_distance(g, x) if connected else None,
            centrality=closeness_centrality(g, x) if connected else None,
            curvature=vertex_curvature(g, x),
            dimension=vertex_dimension(g, x),
        ))
    return tuple(records)


def _connected(g):
    return g.n <= 1 or len(connected_components(g)) == 1
