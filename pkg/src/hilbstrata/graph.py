"""The graph of all strata of one weight, with resolved cover edges.

Nodes are the Hilbert functions of the weight, in enumeration order; edges
are the covers of the partial order, each annotated with its incidence
verdict.  Emission targets are DOT (solid edge = incident, dashed = not,
label "0" = type zero, minimal function on top) and a round-trippable JSON
record.
"""

import json
from dataclasses import dataclass

from .diagrams import CastelnuovoDiagram, HilbertFunction, enumerate_diagrams, hf_leq
from .incidence import IncidenceVerdict, cover_moves, resolve_incidence
from .resolution import BettiTable, generic_betti
from .strata import stratum_dim


@dataclass
class NodeRecord:
    id: int
    hf: HilbertFunction
    dim: int
    betti: BettiTable

    @property
    def diagram(self) -> CastelnuovoDiagram:
        return self.hf.diagram


@dataclass
class EdgeRecord:
    from_id: int
    to_id: int
    u: int
    v: int
    verdict: IncidenceVerdict


@dataclass
class HilbertGraph:
    n: int
    nodes: list
    edges: list


def build_hilbert_graph(n: int) -> HilbertGraph:
    """Nodes from the deterministic enumeration, edges from cover detection."""
    if n < 1:
        raise ValueError("graph construction needs weight >= 1")
    diagrams = enumerate_diagrams(n)
    ids = {d.s: i for i, d in enumerate(diagrams)}
    nodes = []
    for i, d in enumerate(diagrams):
        hf = d.hilbert_function()
        nodes.append(NodeRecord(id=i, hf=hf, dim=stratum_dim(hf), betti=generic_betti(hf)))
    edges = []
    for node in nodes:
        for pair in cover_moves(node.hf):
            target = ids[pair.psi.diagram.s]
            verdict = resolve_incidence(
                pair,
                betti_phi=node.betti,
                betti_psi=nodes[target].betti,
                dims=(node.dim, nodes[target].dim),
            )
            edges.append(EdgeRecord(node.id, target, pair.u, pair.v, verdict))
    edges.sort(key=lambda e: (e.from_id, e.to_id))
    return HilbertGraph(n=n, nodes=nodes, edges=edges)


def detect_noncatenary(g: HilbertGraph):
    """Intervals whose saturated chains disagree in length.

    Returns (from_id, to_id, lengths) triples with ``lengths`` the sorted
    tuple of distinct cover-path lengths from the lower to the upper node;
    a pentagon is an interval carrying both a length-2 and a length-3 chain.
    """
    size = len(g.nodes)
    up = [[] for _ in range(size)]
    for e in g.edges:
        up[e.from_id].append(e.to_id)
    leq = [
        [i == j or hf_leq(g.nodes[i].hf, g.nodes[j].hf) for j in range(size)]
        for i in range(size)
    ]
    witnesses = []
    for i in range(size):
        for j in range(size):
            if i == j or not leq[i][j]:
                continue
            lengths = _chain_lengths(up, leq, i, j)
            if len(lengths) > 1:
                witnesses.append((i, j, tuple(sorted(lengths))))
    witnesses.sort()
    return witnesses


def _chain_lengths(up, leq, start, goal):
    """Distinct lengths of cover paths from start to goal inside [start, goal]."""
    memo = {goal: {0}}

    def walk(x):
        if x in memo:
            return memo[x]
        found = set()
        for y in up[x]:
            if leq[y][goal]:
                found.update(l + 1 for l in walk(y))
        memo[x] = found
        return found

    return walk(start)


def _layers(g: HilbertGraph):
    """Longest-cover-path depth of each node above the minimal function."""
    size = len(g.nodes)
    indeg = [0] * size
    up = [[] for _ in range(size)]
    for e in g.edges:
        up[e.from_id].append(e.to_id)
        indeg[e.to_id] += 1
    layer = [0] * size
    queue = [i for i in range(size) if indeg[i] == 0]
    while queue:
        x = queue.pop()
        for y in up[x]:
            layer[y] = max(layer[y], layer[x] + 1)
            indeg[y] -= 1
            if indeg[y] == 0:
                queue.append(y)
    return layer


def emit(g: HilbertGraph, fmt: str) -> bytes:
    """Serialize the graph; ``fmt`` is ``dot`` or ``json``."""
    if fmt == "json":
        return _emit_json(g)
    if fmt == "dot":
        return _emit_dot(g)
    raise ValueError(f"unknown format {fmt!r}")


def _node_json(node: NodeRecord) -> dict:
    return {
        "id": node.id,
        "s": list(node.diagram.s),
        "h": list(node.hf.transient),
        "dim": node.dim,
        "a": {str(d): c for d, c in sorted(node.betti.a.items())},
        "b": {str(d): c for d, c in sorted(node.betti.b.items())},
    }


def _edge_json(e: EdgeRecord) -> dict:
    return {
        "from": e.from_id,
        "to": e.to_id,
        "u": e.u,
        "v": e.v,
        "incident": e.verdict.incident,
        "dim_ok": e.verdict.dim_ok,
        "tangent_ok": e.verdict.tangent_ok,
        "condition_c": e.verdict.betti_ok,
        "type_zero": e.verdict.type_zero,
    }


def _emit_json(g: HilbertGraph) -> bytes:
    record = {
        "n": g.n,
        "nodes": [_node_json(node) for node in g.nodes],
        "edges": [_edge_json(e) for e in g.edges],
    }
    return (json.dumps(record, separators=(",", ":")) + "\n").encode("utf-8")


def parse_graph_json(data) -> HilbertGraph:
    """Inverse of the JSON emitter (emit -> parse -> emit is byte-identical)."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    record = json.loads(data)
    nodes = []
    for item in record["nodes"]:
        hf = CastelnuovoDiagram(item["s"]).hilbert_function()
        betti = BettiTable(
            {int(k): c for k, c in item["a"].items()},
            {int(k): c for k, c in item["b"].items()},
        )
        nodes.append(NodeRecord(id=item["id"], hf=hf, dim=item["dim"], betti=betti))
    edges = []
    for item in record["edges"]:
        verdict = IncidenceVerdict(
            incident=item["incident"],
            dim_ok=item["dim_ok"],
            tangent_ok=item["tangent_ok"],
            betti_ok=item["condition_c"],
            type_zero=item["type_zero"],
            dims=(nodes[item["from"]].dim, nodes[item["to"]].dim),
        )
        edges.append(EdgeRecord(item["from"], item["to"], item["u"], item["v"], verdict))
    return HilbertGraph(n=record["n"], nodes=nodes, edges=edges)


def _emit_dot(g: HilbertGraph) -> bytes:
    layer = _layers(g)
    lines = [f"digraph strata_{g.n} {{", "  node [shape=box];"]
    for node in g.nodes:
        label = f"{node.diagram.render()}\\ndim {node.dim}"
        lines.append(f'  n{node.id} [label="{label}"];')
    for depth in range(max(layer, default=0) + 1):
        members = [i for i in range(len(g.nodes)) if layer[i] == depth]
        if members:
            lines.append("  { rank=same; " + " ".join(f"n{i};" for i in members) + " }")
    for e in g.edges:
        style = "solid" if e.verdict.incident else "dashed"
        attrs = [f"style={style}"]
        if e.verdict.type_zero:
            attrs.append('label="0"')
        lines.append(f"  n{e.from_id} -> n{e.to_id} [{', '.join(attrs)}];")
    lines.append("}")
    return ("\n".join(lines) + "\n").encode("utf-8")
