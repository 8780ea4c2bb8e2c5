"""Build both chain families and inspect their structure.

A chain of length n has 5n vertices: an upper rim 1..2n, a lower rim
1'..2n', and n middle vertices ~1..~n of degree two.  The two families
differ only in how the last block closes back onto the first: straight
(cylinder) or with the rims exchanged (mobius).
"""

from collections import Counter

from pentachain import ChainFamily, build_chain, export_graph
from pentachain.graphs import vertex_class, vertex_label


def describe(n: int, family: ChainFamily) -> None:
    g = build_chain(n, family)
    degrees = Counter(g.degree(v) for v in range(g.vertex_count))
    classes = Counter(vertex_class(g, v).value for v in range(g.vertex_count))
    print(f"{family.value} chain, n={n}:")
    print(f"  vertices {g.vertex_count}, edges {g.edge_count}")
    print(f"  degree counts {dict(sorted(degrees.items()))}")
    print(f"  class sizes   {dict(sorted(classes.items()))}")
    first, last = 0, 2 * n - 1  # upper rim ends
    first_lo, last_lo = 2 * n, 4 * n - 1  # lower rim ends
    candidates = [
        (first, last),
        (first_lo, last_lo),
        (first, last_lo),
        (first_lo, last),
    ]
    closure = [
        f"{vertex_label(n, u)}-{vertex_label(n, v)}"
        for u, v in candidates
        if g.has_edge(u, v)
    ]
    print(f"  closure edges {closure}")
    print()


def main() -> None:
    for family in ChainFamily:
        describe(3, family)

    g = build_chain(2, ChainFamily.MOBIUS)
    print("JSON export (first lines):")
    for line in export_graph(g, "json").splitlines()[:8]:
        print(" ", line)
    print()
    print("DOT export (first lines):")
    for line in export_graph(g, "dot").splitlines()[:5]:
        print(" ", line)


if __name__ == "__main__":
    main()
