"""Laplacian functionals: spectrum, complexity, forest and tree counts.

Eigenvalues come from LAPACK (symmetric solver) with the rank pinned by the
component count, never by thresholding.  The combinatorial determinants
(tree count, rooted-forest count) are exact integers via fraction-free
Bareiss elimination, independent of the floating spectrum.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import ConvergenceFailure, Disconnected
from .graph import connected_components


@dataclass
class LaplacianSpectrum:
    """Ascending Laplacian eigenvalues; the first component_count are the zeros."""

    eigenvalues: tuple
    component_count: int

    def nonzero(self):
        return self.eigenvalues[self.component_count:]


def laplacian_matrix(g):
    """L = D - A as an integer numpy array."""
    lap = np.zeros((g.n, g.n), dtype=np.int64)
    for u in range(g.n):
        lap[u, u] = g.degree(u)
        for v in g.adj[u]:
            lap[u, v] = -1
    return lap


def laplacian_spectrum(g):
    """Eigenvalues of D - A, sorted ascending, with the component count."""
    if g.n == 0:
        return LaplacianSpectrum((), 0)
    try:
        eig = np.linalg.eigvalsh(laplacian_matrix(g).astype(float))
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc
    return LaplacianSpectrum(tuple(float(v) for v in np.sort(eig)),
                             len(connected_components(g)))


@dataclass
class SpectralComplexity:
    """Product of the nonzero Laplacian eigenvalues, carried in log form."""

    log_value: float
    value: Optional[float]  # None when the product overflows a double


def spectral_complexity(g):
    """Product of the n - #components largest Laplacian eigenvalues."""
    spec = laplacian_spectrum(g)
    nz = spec.nonzero()
    if not nz:
        return SpectralComplexity(0.0, 1.0)
    log_value = sum(math.log(v) for v in nz)
    value = math.exp(log_value) if log_value < 700 else None
    return SpectralComplexity(log_value, value)


def bareiss_determinant(matrix):
    """Exact determinant of a square integer matrix (fraction-free elimination)."""
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def forest_complexity(g):
    """Number of rooted spanning forests, det(L + I), as an exact integer."""
    lap = laplacian_matrix(g) + np.eye(g.n, dtype=np.int64)
    return bareiss_determinant(lap)


def spanning_tree_count(g):
    """Number of spanning trees: the (0,0) minor of the Laplacian, exactly."""
    if g.n == 0:
        raise Disconnected("empty graph has no spanning tree")
    if len(connected_components(g)) != 1:
        raise Disconnected("spanning trees need a connected graph")
    lap = laplacian_matrix(g)
    return bareiss_determinant(lap[1:, 1:])


def pseudoinverse_trace_bound(g):
    """Lower length bound 2 tr(L+) / (n - 1) from the pseudo-inverse trace."""
    if g.n < 2:
        raise Disconnected("bound needs a connected graph on >= 2 vertices")
    spec = laplacian_spectrum(g)
    if spec.component_count != 1:
        raise Disconnected("bound needs a connected graph")
    trace = sum(1.0 / v for v in spec.nonzero())
    return 2.0 * trace / (g.n - 1)
