"""Empirical drivers: exhaustive extremal scans on small orders, sweeps over
random-model parameters, and the bound audit.

The extremal scan streams every labeled graph on n <= 7 vertices as a
C(n,2)-bit edge mask, rejects disconnected graphs, and evaluates the
requested functionals on numpy batches.  Workers split the mask space into
fixed chunks that are reduced in chunk order, so results do not depend on
the worker count.
"""

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional

import numpy as np

from . import rng
from .combinatorial import arboricity, chromatic_number, independence_number
from .errors import (CliqueBudgetExceeded, EstimatorUndefined, InvalidParam,
                     RecursionBudgetExceeded, SizeCapExceeded, UndefinedRatio)
from .generators import ModelSpec, build_model, erdos_renyi
from .graph import all_pairs_distances, from_edge_list, is_connected
from .metrics import (characteristic_length, cluster_length_ratio, mean_cluster,
                      wiener_index)
from .spectral import pseudoinverse_trace_bound
from .topology import (curvature_summary, euler_characteristic,
                       inductive_dimension, length_estimate)

EXTREMAL_FUNCTIONALS = ("char_length", "euler_char", "curvature_action", "log_complexity")


def edge_mask_pairs(n):
    """Vertex pairs in lexicographic order; bit i of an edge mask is pairs[i]."""
    return list(combinations(range(n), 2))


def graph_from_mask(n, mask):
    pairs = edge_mask_pairs(n)
    return from_edge_list(n, [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1])


@dataclass
class Histogram:
    counts: tuple
    lo: float
    hi: float

    def bin_edges(self):
        width = (self.hi - self.lo) / len(self.counts) if self.counts else 0.0
        return [self.lo + i * width for i in range(len(self.counts) + 1)]


@dataclass
class ExtremalResult:
    functional: str
    evaluated: int
    undefined: int
    min_value: object
    max_value: object
    min_witness: object  # Graph
    max_witness: object
    histogram: Histogram


@dataclass
class ExtremalReport:
    n: int
    total_masks: int
    connected_count: int
    results: dict


def _scan_chunk(n, lo, hi, wants):
    """Evaluate one contiguous mask range; returns per-connected-graph arrays."""
    pairs = edge_mask_pairs(n)
    m = len(pairs)
    masks = np.arange(lo, hi, dtype=np.int64)
    if n >= 2:
        pc = np.zeros(masks.shape, dtype=np.int8)
        x = masks.copy()
        for _ in range(m):
            pc += (x & 1).astype(np.int8)
            x >>= 1
        masks = masks[pc >= n - 1]  # too few edges to be connected
    if masks.size == 0:
        empty = {"masks": masks}
        for w in wants:
            empty[w] = np.array([])
        return empty

    count = masks.size
    adj = np.zeros((count, n, n), dtype=np.uint8)
    for i, (u, v) in enumerate(pairs):
        bit = ((masks >> i) & 1).astype(np.uint8)
        adj[:, u, v] = bit
        adj[:, v, u] = bit

    eye = np.eye(n, dtype=np.uint8)
    step = adj | eye
    reach = step
    total_dist = np.full(count, n * n - n, dtype=np.int64)  # pairs at distance > 0
    reach_two = None
    for k in range(1, n):
        if k == 2:
            reach_two = reach  # reachable within two hops
        total_dist += (n * n) - reach.astype(np.int64).sum(axis=(1, 2))
        if k < n - 1:
            reach = (np.matmul(reach, step) > 0).astype(np.uint8)
    connected = reach.sum(axis=(1, 2)) == n * n if n > 1 else np.ones(count, bool)

    masks = masks[connected]
    out = {"masks": masks}
    adj = adj[connected]
    total_dist = total_dist[connected]

    if "char_length" in wants:
        out["char_length"] = total_dist

    if "euler_char" in wants:
        pair_bit = {p: i for i, p in enumerate(pairs)}
        chi = np.full(masks.size, n, dtype=np.int64)  # single vertices
        for size in range(2, n + 1):
            sign = 1 if size % 2 else -1
            for subset in combinations(range(n), size):
                pm = 0
                for a, b in combinations(subset, 2):
                    pm |= 1 << pair_bit[(a, b)]
                chi += sign * ((masks & pm) == pm)
        out["euler_char"] = chi

    if "curvature_action" in wants:
        deg = adj.sum(axis=2).astype(np.float64)
        if n >= 3:
            within1 = (adj | eye).astype(np.int64).sum(axis=2)
            within2 = reach_two[connected].astype(np.int64).sum(axis=2)
            d2 = (within2 - within1).astype(np.float64)
        else:
            d2 = np.zeros_like(deg)
        ok = (deg >= 1) & (d2 >= 1)
        with np.errstate(divide="ignore", invalid="ignore"):
            s = np.where(ok, np.log(np.where(ok, d2, 1) / np.where(ok, deg, 1)), np.nan)
        admissible = ok.sum(axis=1)
        with np.errstate(invalid="ignore"):
            eta = np.where(admissible > 0, np.nansum(s, axis=1) / np.maximum(admissible, 1),
                           np.nan)
        out["curvature_action"] = eta

    if "log_complexity" in wants:
        if n == 1:
            out["log_complexity"] = np.zeros(masks.size)
        else:
            deg = adj.sum(axis=2).astype(np.float64)
            lap = -adj.astype(np.float64)
            idx = np.arange(n)
            lap[:, idx, idx] = deg
            _, logdet = np.linalg.slogdet(lap[:, 1:, 1:])
            out["log_complexity"] = math.log(n) + logdet  # n * tree count
    return out


def extremal_search(n, functionals=EXTREMAL_FUNCTIONALS, workers=1, bins=64,
                    chunk_size=1 << 17):
    """Scan all connected labeled graphs on n vertices for min/max/histograms."""
    if not 1 <= n <= 7:
        raise InvalidParam("extremal scan supports 1 <= n <= 7")
    unknown = set(functionals) - set(EXTREMAL_FUNCTIONALS)
    if unknown:
        raise InvalidParam(f"unknown extremal functionals: {sorted(unknown)}")
    m = n * (n - 1) // 2
    total = 1 << m
    ranges = [(lo, min(lo + chunk_size, total)) for lo in range(0, total, chunk_size)]
    wants = tuple(functionals)
    if workers <= 1 or len(ranges) <= 1:
        chunks = [_scan_chunk(n, lo, hi, wants) for lo, hi in ranges]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_scan_chunk, n, lo, hi, wants) for lo, hi in ranges]
            chunks = [f.result() for f in futures]  # chunk order preserved

    masks = np.concatenate([c["masks"] for c in chunks])
    report = ExtremalReport(n=n, total_masks=total, connected_count=int(masks.size),
                            results={})
    for name in wants:
        values = np.concatenate([np.asarray(c[name], dtype=np.float64) for c in chunks])
        defined = ~np.isnan(values)
        vals = values[defined]
        vmasks = masks[defined]
        if vals.size == 0:
            report.results[name] = ExtremalResult(
                functional=name, evaluated=0, undefined=int(values.size),
                min_value=None, max_value=None, min_witness=None, max_witness=None,
                histogram=Histogram((), 0.0, 0.0))
            continue
        imin = int(np.argmin(vals))
        imax = int(np.argmax(vals))
        lo_v, hi_v = float(vals[imin]), float(vals[imax])
        hist_hi = hi_v if hi_v > lo_v else lo_v + 1  # degenerate constant case
        counts, _ = np.histogram(vals, bins=bins, range=(lo_v, hist_hi))
        min_value, max_value = lo_v, hi_v
        if name == "char_length":
            denom = n * n - n
            if denom:
                min_value = Fraction(int(vals[imin])) / denom
                max_value = Fraction(int(vals[imax])) / denom
            else:
                min_value = max_value = Fraction(0)
        elif name == "euler_char":
            min_value, max_value = int(lo_v), int(hi_v)
        report.results[name] = ExtremalResult(
            functional=name,
            evaluated=int(defined.sum()),
            undefined=int((~defined).sum()),
            min_value=min_value,
            max_value=max_value,
            min_witness=graph_from_mask(n, int(vmasks[imin])),
            max_witness=graph_from_mask(n, int(vmasks[imax])),
            histogram=Histogram(tuple(int(c) for c in counts), lo_v, hist_hi),
        )
    return report


# -- sweeps --------------------------------------------------------------------

SWEEP_FIELDS = ("model", "seed", "n", "m", "char_length", "mean_cluster",
                "cluster_length_ratio", "dimension", "mean_degree", "edge_density",
                "curvature_action", "euler_char", "length_estimate")
FLAGGED_FIELDS = ("cluster_length_ratio", "dimension", "curvature_action",
                  "euler_char", "length_estimate")


@dataclass
class SweepRecord:
    """One model draw; every field is a value or an explicit flag, never NaN."""

    model: str
    seed: int
    n: int
    m: int
    char_length: float
    mean_cluster: float
    cluster_length_ratio: Optional[float]
    dimension: Optional[float]
    mean_degree: float
    edge_density: float
    curvature_action: Optional[float]
    euler_char: Optional[int]
    length_estimate: Optional[float]
    flags: dict = field(default_factory=dict)


def evaluate_sweep_record(spec):
    """Build the model and fill a SweepRecord, flagging undefined quantities."""
    g = build_model(spec)
    flags = {}

    def guard(name, fn, *errors):
        try:
            return fn()
        except errors as exc:
            flags[name] = getattr(exc, "reason", type(exc).__name__)
            return None

    summary = curvature_summary(g)
    if summary.action is None:
        flags["curvature_action"] = "no_admissible_vertices"
    return SweepRecord(
        model=spec.describe(),
        seed=spec.seed,
        n=g.n,
        m=g.m,
        char_length=float(characteristic_length(g)),
        mean_cluster=float(mean_cluster(g)),
        cluster_length_ratio=guard("cluster_length_ratio",
                                   lambda: cluster_length_ratio(g), UndefinedRatio),
        dimension=guard("dimension", lambda: float(inductive_dimension(g)),
                        RecursionBudgetExceeded),
        mean_degree=2 * g.m / g.n if g.n else 0.0,
        edge_density=float(summary.edge_density),
        curvature_action=summary.action,
        euler_char=guard("euler_char", lambda: euler_characteristic(g),
                         CliqueBudgetExceeded),
        length_estimate=guard("length_estimate", lambda: length_estimate(g),
                              EstimatorUndefined),
        flags=flags,
    )


def growth_sweep(kind, params, n_list, seeds_per_n, seed=0, workers=1):
    """SweepRecords for each (n, replicate) of a model family."""
    specs = [ModelSpec(kind, {**params, "n": n}, seed=rng.derive_seed(seed, n, s))
             for n in n_list for s in range(seeds_per_n)]
    if workers <= 1 or len(specs) <= 1:
        return [evaluate_sweep_record(spec) for spec in specs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(evaluate_sweep_record, specs))


@dataclass
class RatioDimensionPoint:
    p: float
    mean_ratio: Optional[float]
    mean_dimension: float
    samples: int
    excluded: int


@dataclass
class RatioDimensionSweep:
    points: list
    pearson: float


def ratio_dimension_sweep(n, p_grid, samples_per_p, seed):
    """Per-p means of the cluster-length ratio and the inductive dimension on
    G(n, p) samples, plus the Pearson correlation of the paired means."""
    points = []
    for ip, p in enumerate(p_grid):
        ratios = []
        dims = []
        excluded = 0
        for s in range(samples_per_p):
            g = erdos_renyi(n, p, rng.derive_seed(seed, ip, s))
            dims.append(float(inductive_dimension(g)))
            try:
                ratios.append(cluster_length_ratio(g))
            except UndefinedRatio:
                excluded += 1
        points.append(RatioDimensionPoint(
            p=float(p),
            mean_ratio=sum(ratios) / len(ratios) if ratios else None,
            mean_dimension=sum(dims) / len(dims),
            samples=samples_per_p,
            excluded=excluded,
        ))
    paired = [(pt.mean_ratio, pt.mean_dimension) for pt in points
              if pt.mean_ratio is not None]
    return RatioDimensionSweep(points=points, pearson=_pearson(paired))


def _pearson(pairs):
    if len(pairs) < 2:
        return float("nan")
    xs = np.array([a for a, _ in pairs])
    ys = np.array([b for _, b in pairs])
    sx = xs.std()
    sy = ys.std()
    if sx == 0 or sy == 0:
        return float("nan")
    return float(((xs - xs.mean()) * (ys - ys.mean())).mean() / (sx * sy))


# -- bound audit ---------------------------------------------------------------

@dataclass
class BoundCheck:
    name: str
    lhs: object
    rhs: object
    holds: Optional[bool]   # None when skipped
    note: str = ""


def bound_audit(g, independence_cap=30, chromatic_cap=20, arboricity_cap=12,
                tree_enumeration_limit=5000, trace_tol=1e-9):
    """Evaluate every implemented length/coloring bound on one graph.

    Skipped comparisons (caps, disconnected input) come back with holds=None
    and the reason in `note`.
    """
    checks = []
    if g.n < 2 or not is_connected(g):
        reason = "needs a connected graph on >= 2 vertices"
        return [BoundCheck(name, None, None, None, reason) for name in
                ("length_lower", "length_upper_order", "length_lower_density",
                 "length_upper_diameter", "length_upper_independence",
                 "length_lower_trace", "chromatic_vs_arboricity",
                 "wiener_spanning_trees")]

    mu = characteristic_length(g)
    n = g.n

    def check(name, lhs, rhs, holds, note=""):
        checks.append(BoundCheck(name, lhs, rhs, holds, note))

    check("length_lower", 1, mu, 1 <= mu, "equality" if mu == 1 else "")
    upper = Fraction(n + 1, 3)
    check("length_upper_order", mu, upper, mu <= upper,
          "equality" if mu == upper else "")
    # adjacent ordered pairs contribute 1, non-adjacent at least 2, so the
    # density expression bounds the length from below (equality iff diam <= 2)
    density_lower = 2 - Fraction(2 * g.m, n * (n - 1))
    check("length_lower_density", density_lower, mu, density_lower <= mu,
          "equality" if mu == density_lower else "")
    diam = all_pairs_distances(g).diameter()
    check("length_upper_diameter", mu, diam, mu <= diam,
          "equality" if mu == diam else "")

    try:
        beta = independence_number(g, cap=independence_cap)
        check("length_upper_independence", mu, beta, mu <= beta,
              "equality" if mu == beta else "")
    except SizeCapExceeded as exc:
        check("length_upper_independence", mu, None, None, str(exc))

    bound = pseudoinverse_trace_bound(g)
    holds = float(mu) >= bound - trace_tol
    note = "equality" if abs(float(mu) - bound) <= trace_tol else ""
    check("length_lower_trace", mu, bound, holds, note)

    try:
        c = chromatic_number(g, cap=chromatic_cap)
        a = arboricity(g, cap=arboricity_cap).value
        check("chromatic_vs_arboricity", c, 2 * a, c <= 2 * a)
    except SizeCapExceeded as exc:
        check("chromatic_vs_arboricity", None, None, None, str(exc))

    w_g = wiener_index(g)
    w_min, method = _min_spanning_tree_wiener(g, tree_enumeration_limit)
    check("wiener_spanning_trees", w_g, w_min, w_g <= w_min, method)
    return checks


def _tree_wiener(n, edges):
    g = from_edge_list(n, edges)
    return sum(sum(all_pairs_distances(g).row(x)) for x in range(n))


def _min_spanning_tree_wiener(g, limit):
    """Smallest Wiener index over spanning trees.

    Enumerates every spanning tree when the edge-subset count is small,
    otherwise audits the BFS tree from each root (every tree satisfies the
    bound, so a sampled audit can only miss, never fake, a violation).
    """
    n, m = g.n, g.m
    edges = list(g.edges())
    if math.comb(m, n - 1) <= limit:
        best = None
        for subset in combinations(edges, n - 1):
            parent = list(range(n))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            ok = True
            for u, v in subset:
                ru, rv = find(u), find(v)
                if ru == rv:
                    ok = False
                    break
                parent[ru] = rv
            if ok:
                w = _tree_wiener(n, subset)
                if best is None or w < best:
                    best = w
        return best, "exhaustive"
    best = None
    for root in range(n):
        dist = all_pairs_distances(g).row(root)
        tree = []
        for v in range(n):
            if v == root:
                continue
            parent_v = min(w for w in g.adj[v] if dist[w] == dist[v] - 1)
            tree.append((parent_v, v))
        w = _tree_wiener(n, tree)
        if best is None or w < best:
            best = w
    return best, "sampled(bfs-trees)"
