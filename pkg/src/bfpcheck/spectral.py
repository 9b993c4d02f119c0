"""Floating-point spectral radii via power iteration on Gram matrices.

For a bipartite graph with biadjacency B the adjacency spectrum is plus and
minus the singular values of B, so rho(G) = sqrt(rho(B B^T)).  The Gram
matrix is built on the smaller side and is positive semidefinite, which
makes plain power iteration with an all-ones start converge to the top
eigenvalue even for reducible matrices (the start overlaps every block).

Only the largest eigenvalue is ever computed; no deflation, no full spectra.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt
from typing import Sequence

import numpy as np

from .errors import ConvergenceError
from .graphs import BipartiteGraph, DegreeSequence

__all__ = [
    "DEFAULT_TOL",
    "MAX_ITERATIONS",
    "MinMatrix",
    "SpectralResult",
    "min_matrix",
    "spectral_radius_sym",
    "spectral_radius_graph",
]

DEFAULT_TOL = 1e-12
MAX_ITERATIONS = 100_000


@dataclass(frozen=True)
class MinMatrix:
    """The p x p matrix of pairwise degree minima, equal to F F^T exactly."""

    entries: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.entries)


def min_matrix(degrees: DegreeSequence | Sequence[int]) -> MinMatrix:
    if not isinstance(degrees, DegreeSequence):
        degrees = DegreeSequence(tuple(degrees))
    d = degrees.entries
    # d is nonincreasing, so min(d_i, d_j) = d_max(i,j)
    entries = tuple(tuple(d[max(i, j)] for j in range(len(d))) for i in range(len(d)))
    return MinMatrix(entries)


@dataclass(frozen=True)
class SpectralResult:
    """A converged spectral radius with its iteration count and residual.

    residual is ||M v - rho v||_inf / ||v||_inf for the final iterate v of
    the underlying symmetric problem.
    """

    rho: float
    iterations: int
    residual: float


def _as_array(matrix) -> np.ndarray:
    if isinstance(matrix, MinMatrix):
        matrix = matrix.entries
    return np.asarray(matrix, dtype=float)


def spectral_radius_sym(
    matrix,
    tol: float = DEFAULT_TOL,
    max_iterations: int = MAX_ITERATIONS,
) -> SpectralResult:
    """Largest eigenvalue of a symmetric nonnegative matrix.

    Power iteration with Rayleigh-quotient estimates, started from the
    all-ones vector.  Converged when the eigenpair residual drops below
    tol * max(1, rho).  Raises ConvergenceError past ``max_iterations``.
    """
    m = _as_array(matrix)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.array_equal(m, m.T):
        raise ValueError("matrix is not symmetric")
    if (m < 0).any():
        raise ValueError("matrix has negative entries")

    v = np.ones(m.shape[0])
    rho = 0.0
    residual = 0.0
    for iteration in range(1, max_iterations + 1):
        w = m @ v
        rho = float(v @ w) / float(v @ v)
        residual = float(np.max(np.abs(w - rho * v))) / float(np.max(np.abs(v)))
        if residual <= tol * max(1.0, rho):
            return SpectralResult(rho=rho, iterations=iteration, residual=residual)
        top = float(np.max(np.abs(w)))
        if top == 0.0:
            # v is in the kernel; with a positive start this means M = 0
            return SpectralResult(rho=0.0, iterations=iteration, residual=0.0)
        v = w / top
    raise ConvergenceError(
        f"power iteration did not converge in {max_iterations} iterations "
        f"(last residual {residual:.3e})"
    )


def spectral_radius_graph(
    graph: BipartiteGraph,
    tol: float = DEFAULT_TOL,
    max_iterations: int = MAX_ITERATIONS,
) -> SpectralResult:
    """Spectral radius of a bipartite graph, sqrt of the Gram top eigenvalue."""
    if graph.edge_count == 0:
        raise ValueError("graph has no edges")
    b = np.asarray(graph.biadjacency, dtype=float)
    gram = b @ b.T if graph.p <= graph.q else b.T @ b
    result = spectral_radius_sym(gram, tol=tol, max_iterations=max_iterations)
    return SpectralResult(
        rho=sqrt(result.rho), iterations=result.iterations, residual=result.residual
    )
