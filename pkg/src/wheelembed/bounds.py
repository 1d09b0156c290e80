"""Lower bounds for embedding metrics and sharpness verdicts.

Each bound pairs a closed-form value with the constructive embedding that is
supposed to attain it; the verdict compares the two instead of trusting the
closed form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .embedding import (
    GUEST_KINDS,
    EmbeddingMap,
    HostNotHamiltonianError,
    embed_fan_via_median,
    embed_wheel_like_into_tree_host,
    embed_wheel_via_median,
    embed_windmill_into_circulant,
    evaluate,
    route_shortest,
)
from .graphs import Graph, has_universal_vertex, max_degree, radius_diameter, status_and_median

THEOREM_IDS = ("dil-hypertree", "dil-sibling", "dil-xtree", "ec-windmill", "wl-wheel", "wl-fan")

_DIL_HOST_KINDS = {
    "dil-hypertree": "hypertree",
    "dil-sibling": "sibling_tree",
    "dil-xtree": "x_tree",
}


@dataclass(frozen=True)
class BoundReport:
    """A lower bound, the value a construction achieved, and the verdict."""

    metric: str
    bound: int
    achieved: Optional[int] = None
    sharp: Optional[bool] = None
    witness: Optional[EmbeddingMap] = field(default=None, compare=False, repr=False)
    notes: str = ""


def _require_universal(G: Graph) -> None:
    if has_universal_vertex(G) is None:
        raise ValueError("guest has no universal vertex (domination number exceeds 1), "
                         "so the hub-based bound does not apply")


def _require_same_order(G: Graph, H: Graph) -> None:
    if G.order != H.order:
        raise ValueError(f"guest and host orders differ: {G.order} vs {H.order}")


def dilation_lower_bound(G: Graph, H: Graph) -> BoundReport:
    """Radius of the host bounds the dilation of any guest with a universal vertex.

    When the host radius equals its diameter the bound is also attained:
    shortest routing keeps every edge within the diameter, so any embedding
    witnesses equality.
    """
    _require_same_order(G, H)
    _require_universal(G)
    r, d = radius_diameter(H)
    if r == d:
        witness = route_shortest(G, H, {v: v for v in G.vertices()})
        achieved = evaluate(witness).max_dilation
        return BoundReport(
            metric="dilation", bound=r, achieved=achieved, sharp=achieved == r,
            witness=witness,
            notes=f"host radius equals diameter {d}; shortest routing attains the bound")
    return BoundReport(metric="dilation", bound=r,
                       notes=f"host radius {r}, diameter {d}")


def congestion_lower_bound(G: Graph, H: Graph) -> BoundReport:
    """ceil((n-1) / max host degree): the hub's n-1 routes share its image's edges."""
    _require_same_order(G, H)
    _require_universal(G)
    delta = max_degree(H)
    if delta == 0:
        raise ValueError("host has no edges")
    n = G.order
    bound = -((n - 1) // -delta)
    return BoundReport(metric="congestion", bound=bound,
                       notes=f"ceil(({n} - 1) / {delta})")


def wirelength_lower_bound(kind: str, H: Graph, *,
                           node_limit: Optional[int] = None) -> BoundReport:
    """n-1+delta(u) for wheels, n-2+delta(u) for fans, u a median of the host.

    Sharp exactly when the host minus u has a spanning cycle (wheel) or
    spanning path (fan); the verdict runs that search and, on success,
    confirms the constructed embedding meets the bound.
    """
    if kind not in ("wheel", "fan"):
        raise ValueError(f"kind must be 'wheel' or 'fan', got {kind!r}")
    n = H.order
    if n < 4:
        raise ValueError(f"wirelength bound needs host order >= 4, got {n}")
    medians, delta = status_and_median(H)
    u = medians[0]
    rim_edges = n - 1 if kind == "wheel" else n - 2
    bound = rim_edges + delta
    construct = embed_wheel_via_median if kind == "wheel" else embed_fan_via_median
    try:
        witness = construct(H, node_limit=node_limit)
    except HostNotHamiltonianError as exc:
        return BoundReport(metric="wirelength", bound=bound, sharp=False,
                           notes=f"median {u}, status {delta}; {exc}")
    achieved = evaluate(witness).wirelength
    return BoundReport(metric="wirelength", bound=bound, achieved=achieved,
                       sharp=achieved == bound, witness=witness,
                       notes=f"median {u}, status {delta}")


def verify_theorem(theorem_id: str, *, kind: Optional[str] = None,
                   level: Optional[int] = None, n: Optional[int] = None,
                   host: Optional[Graph] = None,
                   node_limit: Optional[int] = None) -> BoundReport:
    """Build one claimed-sharp instance and compare achieved against the bound.

    Recognized ids: dil-hypertree / dil-sibling / dil-xtree (kind, level),
    ec-windmill (n), wl-wheel / wl-fan (host).
    """
    if theorem_id in _DIL_HOST_KINDS:
        if kind is None or level is None:
            raise ValueError(f"{theorem_id} needs kind= and level=")
        if kind not in GUEST_KINDS:
            raise ValueError(f"kind must be one of {GUEST_KINDS}, got {kind!r}")
        emb = embed_wheel_like_into_tree_host(kind, level, _DIL_HOST_KINDS[theorem_id])
        r, _ = radius_diameter(emb.host)
        achieved = evaluate(emb).max_dilation
        notes = f"claimed dilation {level - 1}; host radius {r}"
        if r != level - 1:
            notes += " (radius differs from the claimed level-1 value)"
        return BoundReport(metric="dilation", bound=r, achieved=achieved,
                           sharp=achieved == r, witness=emb, notes=notes)

    if theorem_id == "ec-windmill":
        if n is None:
            raise ValueError("ec-windmill needs n=")
        emb = embed_windmill_into_circulant(n)
        report = congestion_lower_bound(emb.guest, emb.host)
        achieved = evaluate(emb).max_congestion
        notes = f"claimed congestion {2 ** (n - 2)}; {report.notes}"
        if n == 3:
            notes += "; smallest order, outside the stated large-n regime"
        return BoundReport(metric="congestion", bound=report.bound, achieved=achieved,
                           sharp=achieved == report.bound, witness=emb, notes=notes)

    if theorem_id in ("wl-wheel", "wl-fan"):
        if host is None:
            raise ValueError(f"{theorem_id} needs host=")
        return wirelength_lower_bound(theorem_id.removeprefix("wl-"), host,
                                      node_limit=node_limit)

    raise ValueError(f"unknown theorem id {theorem_id!r}; known ids: {', '.join(THEOREM_IDS)}")
