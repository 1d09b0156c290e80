"""Embedding data model, metric evaluation, and the constructive embeddings.

An embedding is a vertex bijection (expansion one) plus one explicit host
path per guest edge. Three constructions are provided: pre-order placement
of hub-centered guests into heap-labeled tree hosts, the four-range windmill
routing into two-jump circulants, and the median-plus-spanning-cycle (or
spanning-path) placement of wheels and fans into arbitrary hosts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional

from . import families
from .graphs import Graph, edge_key, is_connected, single_source_distances, status_and_median
from .hamiltonian import find_hamiltonian_cycle, find_hamiltonian_path

GUEST_KINDS = ("wheel", "fan", "friendship", "star")
TREE_HOST_KINDS = ("hypertree", "sibling_tree", "x_tree")


class HostNotHamiltonianError(ValueError):
    """The host minus its median has no spanning cycle or path, so the
    median construction (and wirelength equality) is unattainable."""


@dataclass(frozen=True, eq=False)
class EmbeddingMap:
    """Vertex bijection plus per-guest-edge host routes.

    Routes are keyed by canonical guest edges (u, v) with u < v and stored as
    explicit host vertex sequences from vmap[u] to vmap[v]; congestion is
    therefore well-defined even for routings that are not shortest paths.
    """

    guest: Graph
    host: Graph
    vmap: Mapping[int, int]
    routes: Mapping[tuple[int, int], tuple[int, ...]]


@dataclass(frozen=True, eq=False)
class EmbeddingMetrics:
    """Per-edge dilation and congestion together with their maxima and sum."""

    dil_per_edge: Mapping[tuple[int, int], int]
    cong_per_edge: Mapping[tuple[int, int], int]
    max_dilation: int
    max_congestion: int
    wirelength: int


def build_embedding(guest: Graph, host: Graph, vmap: Mapping[int, int],
                    routes: Mapping[tuple[int, int], tuple[int, ...]]) -> EmbeddingMap:
    """Validate bijectivity and route wellformedness, then freeze the embedding."""
    if guest.order != host.order:
        raise ValueError(
            f"expansion-one embedding needs equal orders, got {guest.order} vs {host.order}")
    if sorted(vmap) != list(guest.vertices()) or sorted(vmap.values()) != list(host.vertices()):
        raise ValueError("vmap must be a bijection from guest vertices onto host vertices")
    canonical = {}
    for e, route in routes.items():
        canonical[edge_key(*e)] = tuple(route)
    if set(canonical) != guest.edges:
        raise ValueError("routes must cover exactly the guest edges")
    for (u, v), route in canonical.items():
        if route[0] != vmap[u] or route[-1] != vmap[v]:
            raise ValueError(f"route for guest edge ({u}, {v}) does not join its images")
        if len(set(route)) != len(route):
            raise ValueError(f"route for guest edge ({u}, {v}) repeats a vertex")
        for a, b in zip(route, route[1:]):
            if not host.has_edge(a, b):
                raise ValueError(
                    f"route for guest edge ({u}, {v}) uses the non-edge ({a}, {b})")
    return EmbeddingMap(guest, host, dict(vmap), canonical)


def _lex_shortest_route(host: Graph, source: int, target: int,
                        dist_to_target: Mapping[int, int]) -> tuple[int, ...]:
    # walking greedily to the smallest neighbor that still shrinks the distance
    # yields the lexicographically least shortest path
    if source not in dist_to_target:
        raise ValueError(f"host has no path between {source} and {target}")
    route = [source]
    cur = source
    while cur != target:
        cur = min(w for w in host.adjacency[cur]
                  if dist_to_target.get(w, -1) == dist_to_target[cur] - 1)
        route.append(cur)
    return tuple(route)


def route_shortest(guest: Graph, host: Graph, vmap: Mapping[int, int]) -> EmbeddingMap:
    """Route every guest edge on the lexicographically least shortest host path."""
    dist_cache: dict[int, dict[int, int]] = {}
    routes = {}
    for u, v in guest.edge_list():
        a, b = vmap[u], vmap[v]
        if b not in dist_cache:
            dist_cache[b] = single_source_distances(host, b)
        routes[(u, v)] = _lex_shortest_route(host, a, b, dist_cache[b])
    return build_embedding(guest, host, vmap, routes)


def evaluate(emb: EmbeddingMap) -> EmbeddingMetrics:
    """Per-edge dilation and congestion; their sums coincide in the wirelength."""
    dil = {}
    cong = {e: 0 for e in emb.host.edges}
    for e, route in emb.routes.items():
        dil[e] = len(route) - 1
        for a, b in zip(route, route[1:]):
            cong[edge_key(a, b)] += 1
    wirelength = sum(dil.values())
    assert wirelength == sum(cong.values())  # both sums count route edges once
    return EmbeddingMetrics(
        dil_per_edge=dil,
        cong_per_edge=cong,
        max_dilation=max(dil.values(), default=0),
        max_congestion=max(cong.values(), default=0),
        wirelength=wirelength,
    )


def expansion(emb: EmbeddingMap) -> Fraction:
    """Host order over guest order; fixed at one for every construction here."""
    return Fraction(emb.host.order, emb.guest.order)


def preorder_sequence(level: int) -> tuple[int, ...]:
    """Heap labels of the complete binary tree visited root, left, right."""
    limit = 2 ** level
    out: list[int] = []
    stack = [1]
    while stack:
        x = stack.pop()
        if x >= limit:
            continue
        out.append(x)
        stack.append(2 * x + 1)
        stack.append(2 * x)
    return tuple(out)


def _tree_host(host_kind: str, level: int) -> Graph:
    builders = {
        "hypertree": families.hypertree,
        "sibling_tree": families.sibling_tree,
        "x_tree": families.x_tree,
    }
    if host_kind not in builders:
        raise ValueError(f"host kind must be one of {TREE_HOST_KINDS}, got {host_kind!r}")
    return builders[host_kind](level)


def _hub_guest(kind: str, n: int) -> Graph:
    if kind == "wheel":
        return families.wheel(n)
    if kind == "fan":
        return families.fan(n)
    if kind == "friendship":
        return families.friendship((n - 1) // 2)
    if kind == "star":
        return families.star(n)
    raise ValueError(f"guest kind must be one of {GUEST_KINDS}, got {kind!r}")


def embed_wheel_like_into_tree_host(kind: str, level: int, host_kind: str) -> EmbeddingMap:
    """Place guest vertex g on the host vertex of pre-order rank g, hub on the root.

    The guest order is 2**level - 1; all routes are shortest host paths. The
    resulting maximum dilation is expected to equal level - 1, the host radius;
    that claim is checked by the bound-verification layer rather than assumed.
    """
    if level < 3:
        raise ValueError(f"tree-host construction needs level >= 3, got {level}")
    n = 2 ** level - 1
    guest = _hub_guest(kind, n)
    host = _tree_host(host_kind, level)
    order = preorder_sequence(level)
    vmap = {g: order[g - 1] for g in guest.vertices()}
    return route_shortest(guest, host, vmap)


def embed_windmill_into_circulant(n: int) -> EmbeddingMap:
    """Identity embedding of the order-2**n windmill into G(2**n; +-{1, 2**(n-2)}).

    Spokes from the hub are routed in four label ranges: clockwise along the
    outer cycle, anticlockwise along the outer cycle, and through one of the
    two hub chords followed by the outer cycle. Outer guest edges sit on single
    host edges. This literal routing is what attains congestion 2**(n-2), even
    where shorter chord routes exist.
    """
    if n < 3:
        raise ValueError(f"windmill construction needs n >= 3, got {n}")
    size = 2 ** n
    quarter = 2 ** (n - 2)
    guest = families.windmill(2 ** (n - 1))
    host = families.circulant(size, {1, quarter})
    vmap = {x: x for x in guest.vertices()}

    routes: dict[tuple[int, int], tuple[int, ...]] = {}
    for i in range(2, size + 1):
        if 2 <= i <= quarter + 1:
            route = tuple(range(1, i + 1))                      # clockwise
        elif 3 * quarter + 1 <= i <= size:
            route = (1,) + tuple(range(size, i - 1, -1))        # anticlockwise
        elif quarter + 2 <= i <= 2 * quarter + 1:
            route = (1,) + tuple(range(quarter + 1, i + 1))     # chord then clockwise
        else:
            route = (1,) + tuple(range(3 * quarter + 1, i - 1, -1))  # chord then anticlockwise
        routes[(1, i)] = route
    for i in range(2, size - 1, 2):
        routes[(i, i + 1)] = (i, i + 1)
    return build_embedding(guest, host, vmap, routes)


def _median_vertex(host: Graph) -> tuple[int, int]:
    medians, delta = status_and_median(host)
    return medians[0], delta


def embed_wheel_via_median(host: Graph, *,
                           node_limit: Optional[int] = None) -> EmbeddingMap:
    """Wheel of the host's order: hub on a median, rim on a spanning cycle of
    the host minus that median, spokes on shortest paths."""
    if not is_connected(host):
        raise ValueError("median construction requires a connected host")
    n = host.order
    if n < 4:
        raise ValueError(f"wheel guest needs host order >= 4, got {n}")
    hub_image, _ = _median_vertex(host)
    rim = find_hamiltonian_cycle(host, without_vertices=(hub_image,), node_limit=node_limit)
    if rim is None:
        raise HostNotHamiltonianError(
            f"host minus median {hub_image} has no hamiltonian cycle")
    guest = families.wheel(n)
    vmap = {1: hub_image}
    vmap.update({g: rim[g - 2] for g in range(2, n + 1)})
    # rim images are host-adjacent, so shortest routing keeps every rim edge on
    # its single cycle edge and the spokes on shortest paths
    return route_shortest(guest, host, vmap)


def embed_fan_via_median(host: Graph, *,
                         node_limit: Optional[int] = None) -> EmbeddingMap:
    """Fan of the host's order: hub on a median, rim path on a spanning path of
    the host minus that median, spokes on shortest paths."""
    if not is_connected(host):
        raise ValueError("median construction requires a connected host")
    n = host.order
    if n < 3:
        raise ValueError(f"fan guest needs host order >= 3, got {n}")
    hub_image, _ = _median_vertex(host)
    rim = find_hamiltonian_path(host, without_vertices=(hub_image,), node_limit=node_limit)
    if rim is None:
        raise HostNotHamiltonianError(
            f"host minus median {hub_image} has no hamiltonian path")
    guest = families.fan(n)
    vmap = {1: hub_image}
    vmap.update({g: rim[g - 2] for g in range(2, n + 1)})
    return route_shortest(guest, host, vmap)
