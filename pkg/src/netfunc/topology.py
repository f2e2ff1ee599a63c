"""Euler characteristic, inductive dimension, curvature and the mean-field
length estimator built from first/second neighborhood sizes."""

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional

from .errors import EstimatorUndefined, RecursionBudgetExceeded
from .graph import all_pairs_distances, simplex_counts


def euler_characteristic(g, budget=100_000_000):
    """Alternating sum of the complete-subgraph counts."""
    counts = simplex_counts(g, budget=budget)
    return sum((-1) ** k * c for k, c in enumerate(counts.counts))


# -- inductive dimension ------------------------------------------------------

def inductive_dimension(g, budget=1_000_000):
    """Average vertex dimension; the empty graph has dimension -1.

    dim(G) = 1 + mean over vertices of dim(S(v)), evaluated recursively on
    induced subgraphs.  Memoized on the vertex set inside the ambient graph
    (unit spheres repeat a lot), with a budget on evaluated subproblems.
    """
    return _dimension_of_subset(g, frozenset(range(g.n)), {}, [budget])


def vertex_dimension(g, x, budget=1_000_000):
    """1 + dimension of the unit sphere at x."""
    return 1 + _dimension_of_subset(g, frozenset(g.adj[x]), {}, [budget])


def _dimension_of_subset(g, subset, memo, budget):
    if not subset:
        return Fraction(-1)
    cached = memo.get(subset)
    if cached is not None:
        return cached
    budget[0] -= 1
    if budget[0] < 0:
        raise RecursionBudgetExceeded("dimension recursion budget exhausted")
    total = Fraction(0)
    for v in subset:
        local_sphere = frozenset(g.adj_sets[v] & subset)
        total += _dimension_of_subset(g, local_sphere, memo, budget)
    value = 1 + total / len(subset)
    memo[subset] = value
    return value


# -- expected dimension on G(n, p) --------------------------------------------

@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial with exact rational coefficients, index = degree."""

    coefficients: tuple

    @staticmethod
    def of(*coeffs):
        return Polynomial(_trim(tuple(Fraction(c) for c in coeffs)))

    def degree(self):
        return len(self.coefficients) - 1

    def __add__(self, other):
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        merged = list(a)
        for i, c in enumerate(b):
            merged[i] += c
        return Polynomial(_trim(tuple(merged)))

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            a, b = self.coefficients, other.coefficients
            out = [Fraction(0)] * (len(a) + len(b) - 1 or 1)
            for i, ca in enumerate(a):
                if ca:
                    for j, cb in enumerate(b):
                        out[i + j] += ca * cb
            return Polynomial(_trim(tuple(out)))
        return Polynomial(_trim(tuple(c * Fraction(other) for c in self.coefficients)))

    __rmul__ = __mul__

    def __call__(self, p):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * p + (float(c) if isinstance(p, float) else c)
        return acc

    def to_json_list(self):
        """Coefficients as {num, den} decimal-string pairs, degree ascending."""
        return [{"num": str(c.numerator), "den": str(c.denominator)}
                for c in self.coefficients]


def _trim(coeffs):
    end = len(coeffs)
    while end > 1 and coeffs[end - 1] == 0:
        end -= 1
    return coeffs[:end] if coeffs else (Fraction(0),)


def expected_dimension_polynomial(n):
    """Expected inductive dimension of G(n, p) as an exact polynomial in p.

    Built from the recursion d_{m+1} = 1 + sum_k C(m,k) p^k (1-p)^(m-k) d_k
    with d_0 = -1.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    one = Polynomial.of(1)
    p = Polynomial.of(0, 1)
    q = Polynomial.of(1, -1)  # 1 - p
    d = [Polynomial.of(-1)]
    for m in range(0, n):
        # powers of p and (1-p) up to m
        p_pow = [one]
        q_pow = [one]
        for _ in range(m):
            p_pow.append(p_pow[-1] * p)
            q_pow.append(q_pow[-1] * q)
        acc = Polynomial.of(1)
        for k in range(m + 1):
            acc = acc + comb(m, k) * (p_pow[k] * q_pow[m - k] * d[k])
        d.append(acc)
    return d[n]


# -- curvature ----------------------------------------------------------------

@dataclass
class CurvatureSummary:
    """Degree/second-neighborhood averages and the curvature action."""

    mean_degree: float                 # average sphere-1 size
    mean_second: float                 # average sphere-2 size
    edge_density: Fraction             # 2m / (n(n-1))
    action: Optional[float]            # mean of s(x) over admissible vertices
    curvatures: tuple                  # per-vertex s(x) = log(d2(x)/d1(x)), None if inadmissible
    excluded: int                      # vertices skipped (degree 0 or no distance-2 vertices)


def second_sphere_size(g, x):
    """Number of vertices at hop distance exactly 2 from x."""
    row = all_pairs_distances(g).row(x)
    return sum(1 for d in row if d == 2)


def vertex_curvature(g, x):
    """s(x) = log(d2(x)/d1(x)); None when either sphere is empty."""
    d1 = g.degree(x)
    d2 = second_sphere_size(g, x)
    if d1 == 0 or d2 == 0:
        return None
    return math.log(d2 / d1)


def curvature_summary(g):
    """Averages of degree, second-sphere size, edge density and curvature.

    Vertices with an empty sphere of radius 1 or 2 carry no curvature; they
    are excluded from the action and counted in `excluded`.
    """
    n = g.n
    curvatures = tuple(vertex_curvature(g, x) for x in range(n))
    admissible = [s for s in curvatures if s is not None]
    return CurvatureSummary(
        mean_degree=2 * g.m / n if n else 0.0,
        mean_second=sum(second_sphere_size(g, x) for x in range(n)) / n if n else 0.0,
        edge_density=Fraction(2 * g.m, n * (n - 1)) if n >= 2 else Fraction(0),
        action=sum(admissible) / len(admissible) if admissible else None,
        curvatures=curvatures,
        excluded=n - len(admissible),
    )


def length_estimate(g):
    """Mean-field estimate 1 + log(d1/n) / log(d1/d2) of the characteristic
    length, from the global averages d1 (degree) and d2 (second sphere)."""
    n = g.n
    if n == 0:
        raise EstimatorUndefined("empty")
    d1 = 2 * g.m / n
    d2 = sum(second_sphere_size(g, x) for x in range(n)) / n
    if d1 == 0:
        raise EstimatorUndefined("zero_degree")
    if d2 == 0:
        raise EstimatorUndefined("zero_second_sphere")
    if d1 == d2:
        raise EstimatorUndefined("equal_spheres")
    return 1 + math.log(d1 / n) / math.log(d1 / d2)
