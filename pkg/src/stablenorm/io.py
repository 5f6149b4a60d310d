"""Graph files, JSON/CSV output and the built-in test corpus.

Graph file format (strict JSON)::

    {"vertex_count": 2,
     "edges": [{"tail": 0, "head": 1, "weight": "3/2"}, ...]}

Edge ids are array positions. Weights are strings, either ``"p/q"`` or a
finite decimal. All rationals are written back as ``"p/q"``.
"""

from __future__ import annotations

import json
import random
import re
from fractions import Fraction
from typing import Sequence

from .circuits import CircuitSet
from .errors import DimensionTooHigh, GraphFormatError, UnknownCorpusName
from .graph import WeightedMultigraph, build_graph
from .norm import Decomposition, StableBall, chain_norm
from .polytope import segment_is_edge


def format_rational(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def graph_from_dict(data) -> WeightedMultigraph:
    if not isinstance(data, dict):
        raise GraphFormatError("graph description must be a JSON object")
    try:
        n = data["vertex_count"]
        raw_edges = data["edges"]
    except KeyError as exc:
        raise GraphFormatError(f"missing key {exc.args[0]!r}") from exc
    if not isinstance(raw_edges, list):
        raise GraphFormatError("'edges' must be an array")
    triples = []
    for i, e in enumerate(raw_edges):
        if not isinstance(e, dict) or not {"tail", "head", "weight"} <= e.keys():
            raise GraphFormatError(f"edge {i} needs 'tail', 'head' and 'weight'")
        if not isinstance(e["weight"], str):
            raise GraphFormatError(f"edge {i}: weight must be a string such as \"3/2\"")
        triples.append((e["tail"], e["head"], e["weight"]))
    return build_graph(n, triples)


def parse_graph(text: str) -> WeightedMultigraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc}") from exc
    return graph_from_dict(data)


def load_graph(path) -> WeightedMultigraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def graph_to_dict(G: WeightedMultigraph) -> dict:
    return {
        "vertex_count": G.vertex_count,
        "edges": [
            {"tail": e.tail, "head": e.head, "weight": format_rational(e.weight)}
            for e in G.edges
        ],
    }


def serialize_graph(G: WeightedMultigraph) -> str:
    return json.dumps(graph_to_dict(G), indent=2) + "\n"


def ball_to_dict(ball: StableBall) -> dict:
    vertices = []
    for basis, chain, c in zip(ball.vertices_basis, ball.vertices_chain, ball.source_circuits):
        vertices.append({
            "basis": [format_rational(x) for x in basis],
            "chain": [format_rational(x) for x in chain],
            "circuit": c.signed_string() if c is not None else None,
            "length": format_rational(c.length) if c is not None else None,
        })
    return {"betti": ball.betti, "vertices": vertices}


def decomposition_to_dict(G: WeightedMultigraph, d: Decomposition) -> dict:
    return {
        "circuits": [
            {"circuit": c.signed_string(), "length": format_rational(c.length), "multiplicity": m}
            for c, m in zip(d.circuits, d.multiplicities)
        ],
        "norm": format_rational(d.norm),
        "sum_of_lengths": format_rational(d.total_length()),
    }


def format_circuits(circuits: CircuitSet) -> str:
    """One line per oriented circuit: ``id  length  signed edges``."""
    lines = [f"{i}  {format_rational(c.length)}  {c.signed_string()}"
             for i, c in enumerate(circuits)]
    return "\n".join(lines) + ("\n" if lines else "")


def skeleton_edges(G: WeightedMultigraph, ball: StableBall) -> list[tuple[int, int]]:
    """Vertex pairs spanning an edge of the ball.

    A pair qualifies when its midpoint has norm exactly 1 (it lies on the
    boundary) and the segment is a face of the hull. The second test matters
    from dimension 3 on, where a facet diagonal also has its midpoint on the
    boundary.
    """
    pts = ball.point_set()
    out = []
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            mid = [(a + c) / 2 for a, c in zip(ball.vertices_chain[i], ball.vertices_chain[j])]
            if chain_norm(G, mid) == 1 and segment_is_edge(i, j, pts):
                out.append((i, j))
    return out


def export_plot(G: WeightedMultigraph, ball: StableBall) -> str:
    """CSV with vertex coordinates followed by the 1-skeleton, for b <= 3."""
    if ball.betti > 3:
        raise DimensionTooHigh(f"cannot plot a {ball.betti}-dimensional ball")
    axes = [f"y{j}" for j in range(ball.betti)]
    lines = ["kind,index," + ",".join(axes) if axes else "kind,index"]
    for i, v in enumerate(ball.vertices_basis):
        lines.append(",".join(["vertex", str(i)] + [format_rational(x) for x in v]))
    lines.append("kind,from,to")
    for i, j in skeleton_edges(G, ball):
        lines.append(f"edge,{i},{j}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# corpus

def bouquet(weights: Sequence) -> WeightedMultigraph:
    return build_graph(1, [(0, 0, w) for w in weights])


def theta(weights: Sequence = (1, 1, 1)) -> WeightedMultigraph:
    return build_graph(2, [(0, 1, w) for w in weights])


def complete_graph(n: int, weights: Sequence | None = None) -> WeightedMultigraph:
    pairs = [(a, c) for a in range(n) for c in range(a + 1, n)]
    weights = weights if weights is not None else [1] * len(pairs)
    return build_graph(n, [(a, c, w) for (a, c), w in zip(pairs, weights)])


def complete_bipartite(p: int, q: int, weights: Sequence | None = None) -> WeightedMultigraph:
    pairs = [(a, p + c) for a in range(p) for c in range(q)]
    weights = weights if weights is not None else [1] * len(pairs)
    return build_graph(p + q, [(a, c, w) for (a, c), w in zip(pairs, weights)])


def random_weight(rng: random.Random) -> Fraction:
    """A rational in (0, 5] with denominator at most 6."""
    q = rng.randint(1, 6)
    return Fraction(rng.randint(1, 5 * q), q)


def random_multigraph(seed: int, vertices: int, edges: int) -> WeightedMultigraph:
    """Connected multigraph: a random spanning tree plus random extra edges.

    Extra edges may be loops or parallel to existing ones. Orientations and
    weights are random; everything is a function of ``seed``.
    """
    if vertices < 1 or edges < vertices - 1:
        raise GraphFormatError(f"cannot build a connected graph with {vertices} vertices and {edges} edges")
    rng = random.Random(seed)
    triples = []
    for v in range(1, vertices):
        u = rng.randrange(v)
        triples.append((u, v) if rng.random() < 0.5 else (v, u))
    for _ in range(edges - (vertices - 1)):
        triples.append((rng.randrange(vertices), rng.randrange(vertices)))
    rng.shuffle(triples)
    return build_graph(vertices, [(t, h, random_weight(rng)) for t, h in triples])


def gen_corpus(name: str, seed: int = 0, vertices: int = 5, edges: int = 8) -> WeightedMultigraph:
    """Named test graphs: ``bouquet-<k>``, ``theta``, ``K4``, ``K33``, ``random``.

    ``random`` also accepts the inline form ``random(seed,v,e)``.
    """
    m = re.fullmatch(r"bouquet-(\d+)", name)
    if m:
        return bouquet([1] * int(m.group(1)))
    if name == "theta":
        return theta()
    if name == "K4":
        return complete_graph(4)
    if name == "K33":
        return complete_bipartite(3, 3)
    m = re.fullmatch(r"random(?:\((\d+),\s*(\d+),\s*(\d+)\))?", name)
    if m:
        if m.group(1) is not None:
            seed, vertices, edges = (int(g) for g in m.groups())
        return random_multigraph(seed, vertices, edges)
    raise UnknownCorpusName(f"unknown corpus graph {name!r}")
