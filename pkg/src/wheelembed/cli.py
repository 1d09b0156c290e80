"""Command-line interface: graph generation, embeddings, metrics, bounds,
hamiltonicity queries, oracle runs, and DOT export.

Exit codes: 0 for success (a "bound not sharp" finding is a finding, not a
failure), 1 for input or validation errors, 2 when a search gives up on its
node budget and the outcome is inconclusive. All reports are valid JSON under
--format json, and identical inputs (including seeds) produce byte-identical
output.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from typing import Optional

from . import bounds as bounds_mod
from . import families, oracle
from .embedding import (
    EmbeddingMap,
    build_embedding,
    embed_fan_via_median,
    embed_wheel_via_median,
    embed_windmill_into_circulant,
    evaluate,
    preorder_sequence,
    route_shortest,
)
from .graphs import Graph, graph_from_json, graph_to_json
from .hamiltonian import (
    FaultSpec,
    SearchBudgetExceeded,
    find_hamiltonian_cycle,
    find_hamiltonian_path,
    is_f_fault_hamiltonian,
    is_f_fault_traceable,
)

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_INCONCLUSIVE = 2

VERSION = "wheelembed 0.1.0"
JOBS_ENV_VAR = "WHEELEMBED_JOBS"

EMBED_METHODS = ("preorder", "windmill", "median-wheel", "median-fan", "identity")


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; 2 is reserved for
    # inconclusive searches, so usage problems map to the input-error code
    def error(self, message):
        self.exit(EXIT_INPUT_ERROR, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return graph_from_json(fh.read())


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _edge_label(u: int, v: int) -> str:
    return f"{u}-{v}" if u < v else f"{v}-{u}"


def embedding_to_json(emb: EmbeddingMap, method: str = "") -> str:
    payload = {
        "guest": emb.guest.name,
        "host": emb.host.name,
        "method": method,
        "vmap": [emb.vmap[g] for g in emb.guest.vertices()],
        "routes": {_edge_label(u, v): list(route)
                   for (u, v), route in emb.routes.items()},
    }
    return _dump(payload)


def embedding_from_json(guest: Graph, host: Graph, text: str) -> EmbeddingMap:
    """Parse and re-validate an embedding JSON against its guest and host."""
    data = json.loads(text)
    if not isinstance(data, dict) or "vmap" not in data or "routes" not in data:
        raise ValueError("embedding JSON must contain 'vmap' and 'routes'")
    vmap_list = data["vmap"]
    if len(vmap_list) != guest.order:
        raise ValueError(f"vmap lists {len(vmap_list)} images for {guest.order} guest vertices")
    vmap = {g: vmap_list[g - 1] for g in guest.vertices()}
    routes = {}
    for key, seq in data["routes"].items():
        u_text, _, v_text = key.partition("-")
        routes[(int(u_text), int(v_text))] = tuple(seq)
    return build_embedding(guest, host, vmap, routes)


def export_dot(G: Graph, congestion: Optional[dict[tuple[int, int], int]] = None) -> str:
    """Deterministic DOT rendering; optional congestion counts as edge labels."""
    title = G.name or "graph"
    lines = [f'graph "{title}" {{']
    for v in G.vertices():
        lines.append(f"  {v};")
    for u, v in G.edge_list():
        if congestion is not None:
            lines.append(f'  {u} -- {v} [label="{congestion.get((u, v), 0)}"];')
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _metrics_payload(emb: EmbeddingMap) -> dict:
    metrics = evaluate(emb)
    return {
        "max_dilation": metrics.max_dilation,
        "max_congestion": metrics.max_congestion,
        "wirelength": metrics.wirelength,
        "dilation_per_edge": {_edge_label(u, v): d
                              for (u, v), d in sorted(metrics.dil_per_edge.items())},
        "congestion_per_edge": {_edge_label(u, v): c
                                for (u, v), c in sorted(metrics.cong_per_edge.items())},
    }


def _metrics_text(payload: dict) -> str:
    lines = [
        f"max dilation   {payload['max_dilation']}",
        f"max congestion {payload['max_congestion']}",
        f"wirelength     {payload['wirelength']}",
        "",
        "host edge  congestion",
    ]
    for key, value in payload["congestion_per_edge"].items():
        lines.append(f"{key:>9}  {value}")
    return "\n".join(lines) + "\n"


def _fault_payload(fault: Optional[FaultSpec]):
    if fault is None:
        return None
    return {
        "vertices": sorted(fault.vertices),
        "edges": [list(e) for e in sorted(fault.edges)],
    }


def _bound_payload(report) -> dict:
    return {
        "metric": report.metric,
        "bound": report.bound,
        "achieved": report.achieved,
        "sharp": report.sharp,
        "notes": report.notes,
    }


# ---------------------------------------------------------------- handlers

def _cmd_gen(args) -> int:
    spec = families.FamilySpec(args.family, tuple(args.params))
    _emit(graph_to_json(spec.build()), args.out)
    return EXIT_OK


def _build_embedding_for_method(method: str, guest: Graph, host: Graph,
                                node_limit: Optional[int]) -> EmbeddingMap:
    if method == "identity":
        return route_shortest(guest, host, {v: v for v in guest.vertices()})
    if method == "preorder":
        level = host.order.bit_length()
        if 2 ** level - 1 != host.order or level < 3:
            raise ValueError("preorder placement needs a host of order 2**level - 1, level >= 3")
        order = preorder_sequence(level)
        vmap = {g: order[g - 1] for g in guest.vertices()}
        return route_shortest(guest, host, vmap)
    if method == "windmill":
        n = host.order.bit_length() - 1
        if 2 ** n != host.order:
            raise ValueError("windmill routing needs a host of order 2**n")
        emb = embed_windmill_into_circulant(n)
        if emb.guest.edges != guest.edges or emb.host.edges != host.edges:
            raise ValueError("guest/host do not match the windmill-into-circulant construction")
        return emb
    if method == "median-wheel":
        emb = embed_wheel_via_median(host, node_limit=node_limit)
        if emb.guest.edges != guest.edges:
            raise ValueError("guest is not the wheel of the host's order")
        return emb
    if method == "median-fan":
        emb = embed_fan_via_median(host, node_limit=node_limit)
        if emb.guest.edges != guest.edges:
            raise ValueError("guest is not the fan of the host's order")
        return emb
    raise ValueError(f"unknown method {method!r}")


def _cmd_embed(args) -> int:
    guest = _load_graph(args.guest)
    host = _load_graph(args.host)
    emb = _build_embedding_for_method(args.method, guest, host, args.node_limit)
    _emit(embedding_to_json(emb, args.method), args.out)
    return EXIT_OK


def _cmd_metrics(args) -> int:
    guest = _load_graph(args.guest)
    host = _load_graph(args.host)
    if args.random is not None:
        if guest.order != host.order:
            raise ValueError("random embeddings need equal guest and host orders")
        rng = random.Random(args.seed)
        samples = []
        for index in range(args.random):
            images = list(host.vertices())
            rng.shuffle(images)
            emb = route_shortest(guest, host, dict(zip(guest.vertices(), images)))
            metrics = evaluate(emb)
            samples.append({
                "index": index,
                "vmap": images,
                "wirelength": metrics.wirelength,
                "max_dilation": metrics.max_dilation,
                "max_congestion": metrics.max_congestion,
                "dilation_sum_equals_congestion_sum":
                    sum(metrics.dil_per_edge.values()) == sum(metrics.cong_per_edge.values()),
            })
        payload = {"seed": args.seed, "samples": samples}
        if args.format == "json":
            _emit(_dump(payload), args.out)
        else:
            lines = [f"seed {args.seed}"]
            for s in samples:
                lines.append(f"sample {s['index']:>3}: wirelength {s['wirelength']:>5}  "
                             f"max dil {s['max_dilation']:>3}  max cong {s['max_congestion']:>3}")
            _emit("\n".join(lines) + "\n", args.out)
        return EXIT_OK
    if args.embedding is None:
        raise ValueError("metrics needs --embedding or --random")
    with open(args.embedding, "r", encoding="utf-8") as fh:
        emb = embedding_from_json(guest, host, fh.read())
    payload = _metrics_payload(emb)
    _emit(_dump(payload) if args.format == "json" else _metrics_text(payload), args.out)
    return EXIT_OK


def _cmd_bound(args) -> int:
    if args.metric == "wl":
        if args.kind is None:
            raise ValueError("--metric wl needs --kind wheel|fan")
        host = _load_graph(args.host)
        report = bounds_mod.wirelength_lower_bound(args.kind, host, node_limit=args.node_limit)
    else:
        if args.guest is None:
            raise ValueError(f"--metric {args.metric} needs --guest")
        guest = _load_graph(args.guest)
        host = _load_graph(args.host)
        if args.metric == "dil":
            report = bounds_mod.dilation_lower_bound(guest, host)
        else:
            report = bounds_mod.congestion_lower_bound(guest, host)
    payload = _bound_payload(report)
    if args.format == "json":
        _emit(_dump(payload), args.out)
    else:
        lines = [f"{key:>9}: {value}" for key, value in payload.items()]
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _parse_sweep(text: str) -> range:
    lo, _, hi = text.partition("..")
    start, stop = int(lo), int(hi)
    if stop < start:
        raise ValueError(f"empty sweep range {text!r}")
    return range(start, stop + 1)


def _verify_rows(args) -> list[dict]:
    rows = []
    if args.theorem in ("dil-hypertree", "dil-sibling", "dil-xtree"):
        kinds = [args.kind] if args.kind else list(bounds_mod.GUEST_KINDS)
        levels = list(_parse_sweep(args.sweep)) if args.sweep else [args.level]
        if levels == [None]:
            raise ValueError(f"{args.theorem} needs --level or --sweep")
        for level in levels:
            for kind in kinds:
                report = bounds_mod.verify_theorem(args.theorem, kind=kind, level=level)
                rows.append({"kind": kind, "level": level, **_bound_payload(report)})
    elif args.theorem == "ec-windmill":
        ns = list(_parse_sweep(args.sweep)) if args.sweep else [args.n]
        if ns == [None]:
            raise ValueError("ec-windmill needs --n or --sweep")
        for n in ns:
            report = bounds_mod.verify_theorem("ec-windmill", n=n)
            rows.append({"n": n, **_bound_payload(report)})
    elif args.theorem in ("wl-wheel", "wl-fan"):
        if args.sweep:
            # the sweep walks the two-jump circulant hosts G(n; +-{1,2})
            for n in _parse_sweep(args.sweep):
                host = families.circulant(n, {1, 2})
                report = bounds_mod.verify_theorem(args.theorem, host=host,
                                                   node_limit=args.node_limit)
                rows.append({"host": host.name, **_bound_payload(report)})
        else:
            if args.host is None:
                raise ValueError(f"{args.theorem} needs --host or --sweep")
            host = _load_graph(args.host)
            report = bounds_mod.verify_theorem(args.theorem, host=host,
                                               node_limit=args.node_limit)
            rows.append({"host": host.name, **_bound_payload(report)})
    else:
        raise ValueError(f"unknown theorem id {args.theorem!r}")
    return rows


def _cmd_verify(args) -> int:
    rows = _verify_rows(args)
    if args.format == "json":
        _emit(_dump(rows), args.out)
        return EXIT_OK
    params = [key for key in rows[0] if key not in ("metric", "bound", "achieved", "sharp", "notes")]
    header = "  ".join(f"{p:>10}" for p in params) + f"  {'bound':>6}  {'achieved':>8}  sharp"
    lines = [header]
    for row in rows:
        cells = "  ".join(f"{str(row[p]):>10}" for p in params)
        lines.append(f"{cells}  {row['bound']:>6}  {str(row['achieved']):>8}  {row['sharp']}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _cmd_ham(args) -> int:
    G = _load_graph(args.graph)
    payload: dict = {"query": args.query}
    if args.query == "cycle":
        witness = find_hamiltonian_cycle(G, node_limit=args.node_limit)
        payload.update({"verdict": witness is not None,
                        "witness": list(witness) if witness else None})
    elif args.query == "path":
        ends = None
        if args.ends:
            u_text, _, v_text = args.ends.partition(",")
            ends = (int(u_text), int(v_text))
        witness = find_hamiltonian_path(G, ends, node_limit=args.node_limit)
        payload.update({"verdict": witness is not None,
                        "witness": list(witness) if witness else None})
    else:
        checker = is_f_fault_hamiltonian if args.query == "ffault-ham" else is_f_fault_traceable
        report = checker(G, args.f, node_limit=args.node_limit)
        payload.update({
            "f": args.f,
            "verdict": report.verdict,
            "witness": list(report.witness) if report.witness else None,
            "failing_fault": _fault_payload(report.failing_fault),
        })
        if args.query == "ffault-trace":
            payload["failing_pair"] = list(report.failing_pair) if report.failing_pair else None
    _emit(_dump(payload), args.out)
    return EXIT_OK


def _cmd_oracle(args) -> int:
    guest = _load_graph(args.guest)
    host = _load_graph(args.host)
    if args.metric == "dil":
        result = oracle.exact_dilation(guest, host, args.limit, jobs=args.jobs)
    elif args.metric == "wl":
        result = oracle.exact_wirelength(guest, host, args.limit, jobs=args.jobs)
    else:
        result = oracle.exact_congestion(guest, host, args.limit,
                                         route_cap=args.route_cap, jobs=args.jobs)
    payload = {
        "metric": result.metric,
        "optimum": result.optimum,
        "witness_vmap": list(result.witness_vmap),
        "search_space": result.search_space,
        "exact": result.exact,
        "notes": result.notes,
    }
    _emit(_dump(payload), args.out)
    return EXIT_OK


def _cmd_export(args) -> int:
    G = _load_graph(args.graph)
    congestion = None
    if args.embedding:
        if args.guest is None:
            raise ValueError("--embedding annotation needs --guest (with --graph as the host)")
        guest = _load_graph(args.guest)
        with open(args.embedding, "r", encoding="utf-8") as fh:
            emb = embedding_from_json(guest, G, fh.read())
        congestion = dict(evaluate(emb).cong_per_edge)
    _emit(export_dot(G, congestion), args.out)
    return EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wheelembed",
                     description="Wheel-like guests, tree/circulant hosts, and exact "
                                 "dilation/congestion/wirelength analysis.")
    parser.add_argument("--version", action="version", version=VERSION)
    sub = parser.add_subparsers(dest="command", required=True)
    default_jobs = int(os.environ.get(JOBS_ENV_VAR, "1"))

    p = sub.add_parser("gen", help="generate a family instance as graph JSON")
    p.add_argument("family", choices=families.FAMILY_KINDS)
    p.add_argument("params", nargs="+", type=int)
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_gen)

    p = sub.add_parser("embed", help="construct an embedding between two graphs")
    p.add_argument("--guest", required=True)
    p.add_argument("--host", required=True)
    p.add_argument("--method", required=True, choices=EMBED_METHODS)
    p.add_argument("--node-limit", type=_positive)
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_embed)

    p = sub.add_parser("metrics", help="evaluate dilation/congestion/wirelength")
    p.add_argument("--guest", required=True)
    p.add_argument("--host", required=True)
    p.add_argument("--embedding")
    p.add_argument("--random", type=_positive,
                   help="evaluate this many seeded random bijections instead")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_metrics)

    p = sub.add_parser("bound", help="lower bounds with sharpness verdicts")
    p.add_argument("--metric", required=True, choices=("dil", "ec", "wl"))
    p.add_argument("--guest")
    p.add_argument("--host", required=True)
    p.add_argument("--kind", choices=("wheel", "fan"))
    p.add_argument("--node-limit", type=_positive)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_bound)

    p = sub.add_parser("verify", help="check a claimed-sharp bound over instances")
    p.add_argument("theorem", choices=bounds_mod.THEOREM_IDS)
    p.add_argument("--kind", choices=bounds_mod.GUEST_KINDS)
    p.add_argument("--level", type=_positive)
    p.add_argument("--n", type=_positive)
    p.add_argument("--host")
    p.add_argument("--sweep", help="inclusive range A..B of levels / n / host orders")
    p.add_argument("--node-limit", type=_positive)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("ham", help="hamiltonicity and fault-tolerance queries")
    p.add_argument("--graph", required=True)
    p.add_argument("--query", required=True,
                   choices=("cycle", "path", "ffault-ham", "ffault-trace"))
    p.add_argument("--f", type=int, default=1)
    p.add_argument("--ends", help="u,v endpoints for path queries")
    p.add_argument("--node-limit", type=_positive)
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_ham)

    p = sub.add_parser("oracle", help="exhaustive exact optimum over all bijections")
    p.add_argument("--guest", required=True)
    p.add_argument("--host", required=True)
    p.add_argument("--metric", required=True, choices=("dil", "ec", "wl"))
    p.add_argument("--limit", type=_positive, default=oracle.DEFAULT_LIMIT)
    p.add_argument("--jobs", type=_positive, default=max(default_jobs, 1))
    p.add_argument("--route-cap", type=_positive, default=oracle.DEFAULT_ROUTE_CAP)
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_oracle)

    p = sub.add_parser("export", help="DOT rendering, optionally congestion-annotated")
    p.add_argument("--graph", required=True)
    p.add_argument("--embedding")
    p.add_argument("--guest")
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_export)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT_ERROR
    try:
        return args.handler(args)
    except SearchBudgetExceeded as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
