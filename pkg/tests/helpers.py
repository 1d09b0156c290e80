"""Shared hypothesis strategies and small brute-force oracles for the tests."""

from itertools import combinations

from hypothesis import strategies as st

from wheelembed.graphs import Graph, build_graph


@st.composite
def graphs(draw, min_order=1, max_order=8):
    """Arbitrary simple graphs (possibly disconnected) on 1..max_order vertices."""
    n = draw(st.integers(min_order, max_order))
    pairs = list(combinations(range(1, n + 1), 2))
    mask = draw(st.integers(0, 2 ** len(pairs) - 1))
    edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
    return build_graph(n, edges, f"random-{n}")


@st.composite
def connected_graphs(draw, min_order=2, max_order=8):
    """Connected graphs: a random spanning path plus arbitrary extra edges."""
    n = draw(st.integers(min_order, max_order))
    spine = draw(st.permutations(range(1, n + 1)))
    edges = {tuple(sorted(p)) for p in zip(spine, spine[1:])}
    pairs = list(combinations(range(1, n + 1), 2))
    mask = draw(st.integers(0, 2 ** len(pairs) - 1))
    edges.update(p for i, p in enumerate(pairs) if mask >> i & 1)
    return build_graph(n, sorted(edges), f"random-connected-{n}")


def brute_distances(G: Graph) -> dict[tuple[int, int], float]:
    """Floyd-Warshall distances, an independent check on the BFS tables."""
    inf = float("inf")
    dist = {(u, v): (0 if u == v else inf) for u in G.vertices() for v in G.vertices()}
    for u, v in G.edges:
        dist[(u, v)] = dist[(v, u)] = 1
    for k in G.vertices():
        for i in G.vertices():
            for j in G.vertices():
                through = dist[(i, k)] + dist[(k, j)]
                if through < dist[(i, j)]:
                    dist[(i, j)] = through
    return dist
