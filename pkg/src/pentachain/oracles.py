"""Brute-force oracles, independent of every closed form.

The point of this module is redundancy: distances come from BFS, index
sums from explicit double sums, resistances from a grounded-Laplacian
inverse, spanning trees from a cofactor determinant, and the spectral
routes from the eigensolver.  Nothing here looks at the closed forms it
is used to check.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction

import numpy as np

from .graphs import ChainGraph
from .numerics import det_exact, invert_exact, symmetric_eigenvalues
from .spectral import laplacian, normalized_laplacian

# exact resistance work stays cheap up to this many vertices
EXACT_RESISTANCE_LIMIT = 60


def distance_matrix(g: ChainGraph) -> list[list[int]]:
    """All-pairs shortest path distances by BFS from every vertex."""
    order = g.vertex_count
    dist = []
    for src in range(order):
        row = [-1] * order
        row[src] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            for v in g.adjacency[u]:
                if row[v] < 0:
                    row[v] = row[u] + 1
                    queue.append(v)
        if min(row) < 0:
            raise ValueError("graph is disconnected")
        dist.append(row)
    return dist


def wiener_oracle(g: ChainGraph) -> int:
    """Sum of distances over unordered vertex pairs."""
    dist = distance_matrix(g)
    order = g.vertex_count
    return sum(dist[u][v] for u in range(order) for v in range(u + 1, order))


def schultz_oracle(g: ChainGraph) -> int:
    """Sum of (deg(u) + deg(v)) * d(u, v) over unordered pairs."""
    dist = distance_matrix(g)
    order = g.vertex_count
    deg = [g.degree(v) for v in range(order)]
    return sum(
        (deg[u] + deg[v]) * dist[u][v]
        for u in range(order)
        for v in range(u + 1, order)
    )


def gutman_oracle(g: ChainGraph) -> int:
    """Sum of deg(u) * deg(v) * d(u, v) over unordered pairs."""
    dist = distance_matrix(g)
    order = g.vertex_count
    deg = [g.degree(v) for v in range(order)]
    return sum(
        deg[u] * deg[v] * dist[u][v] for u in range(order) for v in range(u + 1, order)
    )


def effective_resistances(g: ChainGraph, mode: str | None = None):
    """Pairwise effective resistances.

    Ground vertex 0, invert the reduced Laplacian, then
    r(u, v) = M[u][u] + M[v][v] - 2 M[u][v].  Exact mode returns a
    Fraction matrix, float mode a numpy array; the default picks exact
    for graphs up to EXACT_RESISTANCE_LIMIT vertices.
    """
    order = g.vertex_count
    if mode is None:
        mode = "exact" if order <= EXACT_RESISTANCE_LIMIT else "float"
    lap = laplacian(g)
    reduced = [[lap[r][c] for c in range(1, order)] for r in range(1, order)]
    if mode == "exact":
        inv = invert_exact(reduced)
        res = [[Fraction(0)] * order for _ in range(order)]
        for u in range(1, order):
            res[0][u] = res[u][0] = inv[u - 1][u - 1]
        for u in range(1, order):
            for v in range(u + 1, order):
                val = inv[u - 1][u - 1] + inv[v - 1][v - 1] - 2 * inv[u - 1][v - 1]
                res[u][v] = res[v][u] = val
        return res
    if mode != "float":
        raise ValueError(f"unknown mode {mode!r}")
    inv = np.linalg.inv(np.array(reduced, dtype=float))
    res = np.zeros((order, order))
    diag = np.diag(inv)
    res[1:, 1:] = diag[:, None] + diag[None, :] - 2 * inv
    res[0, 1:] = diag
    res[1:, 0] = diag
    return res


def kirchhoff_oracle(g: ChainGraph, mode: str | None = None):
    """Sum of effective resistances over unordered pairs."""
    res = effective_resistances(g, mode=mode)
    order = g.vertex_count
    if isinstance(res, np.ndarray):
        return float(np.sum(np.triu(res, 1)))
    return sum(res[u][v] for u in range(order) for v in range(u + 1, order))


def degree_kirchhoff_oracle(g: ChainGraph, mode: str | None = None):
    """Sum of deg(u) * deg(v) * r(u, v) over unordered pairs."""
    res = effective_resistances(g, mode=mode)
    order = g.vertex_count
    deg = [g.degree(v) for v in range(order)]
    if isinstance(res, np.ndarray):
        d = np.array(deg, dtype=float)
        return float(np.sum(np.triu(np.outer(d, d) * res, 1)))
    return sum(
        deg[u] * deg[v] * res[u][v] for u in range(order) for v in range(u + 1, order)
    )


def foster_check(g: ChainGraph) -> Fraction:
    """Sum of effective resistances over edges; equals vertices - 1."""
    res = effective_resistances(g, mode="exact")
    return sum((res[u][v] for u, v in g.edges), Fraction(0))


def spanning_trees_oracle(g: ChainGraph) -> int:
    """Matrix-tree cofactor: determinant of the Laplacian minus one vertex."""
    lap = laplacian(g)
    order = g.vertex_count
    reduced = [[lap[r][c] for c in range(1, order)] for r in range(1, order)]
    return det_exact(reduced)


def _positive_normalized_eigenvalues(g: ChainGraph, tol: float) -> list[float]:
    eigs = symmetric_eigenvalues(normalized_laplacian(g), tol=tol)
    # exactly one zero eigenvalue for a connected graph
    if abs(eigs[0]) > 1e-8:
        raise ValueError("smallest normalized eigenvalue is not near zero")
    if eigs[1] < 1e-8:
        raise ValueError("multiple near-zero eigenvalues; graph looks disconnected")
    return eigs[1:]


def kf_star_spectral(g: ChainGraph, tol: float = 1e-10) -> float:
    """Degree-weighted resistance sum via 2|E| * sum of reciprocal
    nonzero normalized-Laplacian eigenvalues."""
    eigs = _positive_normalized_eigenvalues(g, tol)
    return 2 * g.edge_count * sum(1.0 / x for x in eigs)


def kemeny_spectral(g: ChainGraph, tol: float = 1e-10) -> float:
    """Sum of reciprocal nonzero normalized-Laplacian eigenvalues."""
    eigs = _positive_normalized_eigenvalues(g, tol)
    return sum(1.0 / x for x in eigs)


def kirchhoff_spectral(g: ChainGraph, tol: float = 1e-10) -> float:
    """Resistance sum via |V| * sum of reciprocal nonzero Laplacian eigenvalues."""
    eigs = symmetric_eigenvalues(laplacian(g), tol=tol)
    if abs(eigs[0]) > 1e-8 or eigs[1] < 1e-8:
        raise ValueError("unexpected zero eigenvalue structure")
    return g.vertex_count * sum(1.0 / x for x in eigs[1:])


def spanning_trees_normalized_check(g: ChainGraph, tol: float = 1e-10) -> float:
    """Spanning trees via the normalized spectrum:
    product of degrees times product of nonzero eigenvalues over 2|E|."""
    eigs = _positive_normalized_eigenvalues(g, tol)
    value = 1.0
    for v in range(g.vertex_count):
        value *= g.degree(v)
    for x in eigs:
        value *= x
    return value / (2 * g.edge_count)
