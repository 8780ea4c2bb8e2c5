"""Pentagonal cylinder and Mobius chain graphs.

Both families consist of n pentagon blocks closed into a ring.  Block i
has upper rim vertices 2i-1, 2i, lower rim vertices (2i-1)', (2i)' and a
middle vertex ~i sitting between 2i and (2i)'.  Consecutive blocks are
joined along both rims, and the ring is closed either straight
(cylinder) or with an upper/lower twist (Mobius).

Vertex ids are fixed: upper rim label i has id i-1 (i = 1..2n), lower
rim label i' has id 2n+i-1, middle label ~i has id 4n+i-1.  Every graph
has 5n vertices and 7n edges; rim vertices have degree 3 and middle
vertices degree 2.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum


class ChainFamily(Enum):
    CYLINDER = "cylinder"
    MOBIUS = "mobius"


class VertexClass(Enum):
    A = "a"  # degree 3, all neighbors degree 3 (odd rim labels)
    B = "b"  # degree 3 with a degree-2 neighbor (even rim labels)
    C = "c"  # degree 2 (middle)


@dataclass(frozen=True)
class ChainGraph:
    """Immutable chain graph; build with build_chain."""

    n: int
    family: ChainFamily
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def vertex_count(self) -> int:
        return len(self.adjacency)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]


def upper_id(n: int, label: int) -> int:
    """Id of upper rim vertex with label in 1..2n."""
    return label - 1


def lower_id(n: int, label: int) -> int:
    """Id of lower rim vertex with label in 1..2n."""
    return 2 * n + label - 1


def middle_id(n: int, label: int) -> int:
    """Id of middle vertex with label in 1..n."""
    return 4 * n + label - 1


def vertex_label(n: int, v: int) -> str:
    """Human-readable label: upper "3", lower "3'", middle "~2"."""
    if v < 0 or v >= 5 * n:
        raise ValueError(f"vertex id {v} out of range")
    if v < 2 * n:
        return str(v + 1)
    if v < 4 * n:
        return f"{v - 2 * n + 1}'"
    return f"~{v - 4 * n + 1}"


def build_chain(n: int, family: ChainFamily) -> ChainGraph:
    """Construct the n-block chain of the given family."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if not isinstance(family, ChainFamily):
        raise TypeError("family must be a ChainFamily")
    edges: set[tuple[int, int]] = set()

    def add(u: int, v: int) -> None:
        edges.add((u, v) if u < v else (v, u))

    for i in range(1, n + 1):
        u_odd = upper_id(n, 2 * i - 1)
        u_even = upper_id(n, 2 * i)
        l_odd = lower_id(n, 2 * i - 1)
        l_even = lower_id(n, 2 * i)
        m = middle_id(n, i)
        add(u_odd, l_odd)
        add(u_odd, u_even)
        add(u_even, m)
        add(m, l_even)
        add(l_even, l_odd)
    for i in range(1, n):
        add(upper_id(n, 2 * i), upper_id(n, 2 * i + 1))
        add(lower_id(n, 2 * i), lower_id(n, 2 * i + 1))
    if family is ChainFamily.CYLINDER:
        add(upper_id(n, 2 * n), upper_id(n, 1))
        add(lower_id(n, 2 * n), lower_id(n, 1))
    else:
        add(upper_id(n, 2 * n), lower_id(n, 1))
        add(lower_id(n, 2 * n), upper_id(n, 1))

    order = 5 * n
    adj: list[list[int]] = [[] for _ in range(order)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    assert len(edges) == 7 * n
    assert all(len(nbrs) in (2, 3) for nbrs in adj)
    return ChainGraph(
        n=n,
        family=family,
        edges=tuple(sorted(edges)),
        adjacency=tuple(tuple(sorted(nbrs)) for nbrs in adj),
    )


def vertex_class(g: ChainGraph, v: int) -> VertexClass:
    """Classify a vertex by degree pattern, not by label arithmetic."""
    deg = g.degree(v)
    if deg == 2:
        return VertexClass.C
    if any(g.degree(u) == 2 for u in g.adjacency[v]):
        return VertexClass.B
    return VertexClass.A


def reflection_automorphism(g: ChainGraph) -> tuple[int, ...]:
    """The rim swap i <-> i' fixing every middle vertex (both families)."""
    n = g.n
    image = list(range(5 * n))
    for label in range(1, 2 * n + 1):
        image[upper_id(n, label)] = lower_id(n, label)
        image[lower_id(n, label)] = upper_id(n, label)
    return tuple(image)


def block_automorphism(g: ChainGraph, k: int) -> tuple[int, ...]:
    """Rotation by k blocks of the Mobius chain.

    Rim labels shift by 2k; a label pushed past 2n wraps around to the
    opposite rim, which is what the twisted closure requires.  Middle
    labels shift by k.  Cylinder input is rejected: the straight closure
    has its own rotations and they are not this map.
    """
    if g.family is not ChainFamily.MOBIUS:
        raise ValueError("block rotation is defined for the Mobius family")
    n = g.n
    if not 1 <= k <= n - 1:
        raise ValueError("k must satisfy 1 <= k <= n-1")
    image = list(range(5 * n))
    for label in range(1, 2 * n + 1):
        shifted = label + 2 * k
        if shifted <= 2 * n:
            image[upper_id(n, label)] = upper_id(n, shifted)
            image[lower_id(n, label)] = lower_id(n, shifted)
        else:
            image[upper_id(n, label)] = lower_id(n, shifted - 2 * n)
            image[lower_id(n, label)] = upper_id(n, shifted - 2 * n)
    for label in range(1, n + 1):
        image[middle_id(n, label)] = middle_id(n, (label + k - 1) % n + 1)
    return tuple(image)


def is_automorphism(g: ChainGraph, image: tuple[int, ...]) -> bool:
    """Check a vertex map by full edge enumeration."""
    if sorted(image) != list(range(5 * g.n)):
        return False
    mapped = {tuple(sorted((image[u], image[v]))) for u, v in g.edges}
    return mapped == set(g.edges)


def export_graph(g: ChainGraph, fmt: str) -> str:
    """Serialize a chain graph to "json" or "dot" text (deterministic)."""
    if fmt == "json":
        obj = {
            "n": g.n,
            "family": g.family.value,
            "vertices": [
                {
                    "id": v,
                    "label": vertex_label(g.n, v),
                    "class": vertex_class(g, v).value,
                }
                for v in range(5 * g.n)
            ],
            "edges": [[u, v] for u, v in g.edges],
        }
        return json.dumps(obj, indent=2) + "\n"
    if fmt == "dot":
        name = f"pentagonal_{g.family.value}_{g.n}"
        lines = [f"graph {name} {{"]
        for u, v in g.edges:
            lines.append(f'  "{vertex_label(g.n, u)}" -- "{vertex_label(g.n, v)}";')
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
