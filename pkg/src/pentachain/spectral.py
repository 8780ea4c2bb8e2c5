"""Laplacian matrices of chain graphs and their reflection split.

The rim swap is an involutive automorphism, so an orthogonal change of
basis splits the normalized Laplacian into two smaller blocks: a
symmetric block of order 3n (middle vertices plus symmetric rim
combinations, entries in Q(sqrt(3))) and a skew block of order 2n
(antisymmetric rim combinations, rational entries).  The full spectrum
is the multiset union of the two block spectra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .graphs import ChainGraph, lower_id, middle_id, upper_id
from .numerics import (
    QuadRat,
    quad_charpoly,
    rational_charpoly,
    symmetric_eigenvalues,
)


def laplacian(g: ChainGraph) -> list[list[int]]:
    """Combinatorial Laplacian D - A as an integer matrix of order 5n."""
    order = g.vertex_count
    m = [[0] * order for _ in range(order)]
    for v in range(order):
        m[v][v] = g.degree(v)
    for u, v in g.edges:
        m[u][v] = -1
        m[v][u] = -1
    return m


def normalized_laplacian(g: ChainGraph) -> np.ndarray:
    """Normalized Laplacian I - D^{-1/2} A D^{-1/2} as a float array."""
    order = g.vertex_count
    m = np.zeros((order, order))
    inv_sqrt = np.array([1.0 / np.sqrt(g.degree(v)) for v in range(order)])
    np.fill_diagonal(m, 1.0)
    for u, v in g.edges:
        w = -inv_sqrt[u] * inv_sqrt[v]
        m[u, v] = w
        m[v, u] = w
    return m


def decompose(g: ChainGraph):
    """Split the normalized Laplacian under the rim swap.

    Returns (sym_block, skew_block): the symmetric block is a 3n x 3n
    matrix of QuadRat entries over Q(sqrt(3)) ordered middle-then-upper,
    the skew block is a 2n x 2n matrix of Fractions over the upper rim.
    """
    n = g.n
    uppers = [upper_id(n, i) for i in range(1, 2 * n + 1)]
    lowers = [lower_id(n, i) for i in range(1, 2 * n + 1)]
    middles = [middle_id(n, i) for i in range(1, n + 1)]
    adj = [set(g.adjacency[v]) for v in range(5 * n)]

    third = Fraction(1, 3)

    def rim_entry(block_rows, block_cols, r, c):
        # entry of the normalized Laplacian between two degree-3 rim vertices
        u, v = block_rows[r], block_cols[c]
        val = Fraction(1) if u == v else Fraction(0)
        if v in adj[u]:
            val -= third
        return val

    # upper-upper and upper-lower blocks
    l11 = [[rim_entry(uppers, uppers, r, c) for c in range(2 * n)] for r in range(2 * n)]
    l12 = [[rim_entry(uppers, lowers, r, c) for c in range(2 * n)] for r in range(2 * n)]
    l22 = [[rim_entry(lowers, lowers, r, c) for c in range(2 * n)] for r in range(2 * n)]
    # the rim swap forces these symmetries; check rather than assume
    assert l22 == l11
    assert l12 == [list(col) for col in zip(*l12)]
    for mi, mv in enumerate(middles):
        up_nbrs = sorted(u for u in adj[mv] if u in set(uppers))
        lo_nbrs = sorted(u - 2 * n for u in adj[mv] if u in set(lowers))
        assert [u for u in up_nbrs] == lo_nbrs

    zero3 = QuadRat(0, 0, 3)
    one3 = QuadRat(1, 0, 3)
    sym = [[zero3 for _ in range(3 * n)] for _ in range(3 * n)]
    for i in range(n):
        sym[i][i] = one3
    for mi, mv in enumerate(middles):
        for uj, uv in enumerate(uppers):
            if uv in adj[mv]:
                # sqrt(2) * (-1/sqrt(6)) = -1/sqrt(3) = -sqrt(3)/3
                w = QuadRat(0, -third, 3)
                sym[mi][n + uj] = w
                sym[n + uj][mi] = w
    for r in range(2 * n):
        for c in range(2 * n):
            val = l11[r][c] + l12[r][c]
            if val:
                sym[n + r][n + c] = QuadRat(val, 0, 3)

    skew = [[l11[r][c] - l12[r][c] for c in range(2 * n)] for r in range(2 * n)]
    return sym, skew


@dataclass(frozen=True)
class DecomposedSpectra:
    """Block eigenvalues and the union-vs-full consistency error."""

    rho: tuple[float, ...]  # symmetric block, ascending, length 3n
    mu: tuple[float, ...]  # skew block, ascending, length 2n
    union_err: float  # max |sorted union - full spectrum|


def decomposed_spectra(g: ChainGraph, tol: float = 1e-10) -> DecomposedSpectra:
    """Eigenvalues of both blocks plus the union check against the full matrix."""
    sym, skew = decompose(g)
    rho = symmetric_eigenvalues(sym, tol=tol)
    mu = symmetric_eigenvalues(skew, tol=tol)
    full = symmetric_eigenvalues(normalized_laplacian(g), tol=tol)
    union = sorted(rho + mu)
    err = max(abs(a - b) for a, b in zip(union, full))
    return DecomposedSpectra(rho=tuple(rho), mu=tuple(mu), union_err=err)


@lru_cache(maxsize=64)
def sym_block_tail(g: ChainGraph) -> tuple[Fraction, Fraction]:
    """Last two meaningful charpoly coefficients of the symmetric block.

    The block is singular (it carries the zero eigenvalue), so the
    constant term vanishes; returns (coefficient of y, coefficient of
    y^2) of det(yI - sym_block), both rational.  Cached: the exact
    charpoly is the one expensive computation in the package.
    """
    sym, _ = decompose(g)
    coeffs = quad_charpoly(sym, d=3)
    assert all(c.is_rational for c in coeffs)
    order = 3 * g.n
    assert coeffs[order].is_zero
    return coeffs[order - 1].a, coeffs[order - 2].a


@lru_cache(maxsize=64)
def skew_block_tail(g: ChainGraph) -> tuple[Fraction, Fraction]:
    """(coefficient of y, constant term) of det(yI - skew_block).

    The skew block is nonsingular; the constant term equals its
    determinant since the order 2n is even.
    """
    _, skew = decompose(g)
    coeffs = rational_charpoly(skew)
    order = 2 * g.n
    return coeffs[order - 1], coeffs[order]
