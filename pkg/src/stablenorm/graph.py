"""Weighted multigraphs, chains, the boundary operator and the
fundamental-cycle basis of the cycle space.

Chains are plain tuples of :class:`fractions.Fraction`, indexed by edge id.
A graph with ``k`` edges and ``n`` vertices has a cycle space of dimension
``b = k - n + 1``; a cycle is identified with its coordinates on the cotree
edges of a breadth-first spanning tree.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DanglingEndpoint,
    DimensionMismatch,
    Disconnected,
    GraphFormatError,
    NonPositiveWeight,
    NotACycle,
)

Chain = tuple[Fraction, ...]
Vector = tuple[Fraction, ...]


def parse_rational(value) -> Fraction:
    """Parse ``"p/q"`` or a finite decimal such as ``"1.5"`` exactly.

    Integers and Fractions are accepted as-is. Floats are refused: their
    binary value is rarely the decimal the user typed.
    """
    if isinstance(value, bool):
        raise GraphFormatError(f"not a rational: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if not isinstance(value, str):
        raise GraphFormatError(f"rational must be given as a string, got {value!r}")
    try:
        return Fraction(value.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise GraphFormatError(f"bad rational literal {value!r}") from exc


@dataclass(frozen=True)
class Edge:
    id: int
    tail: int
    head: int
    weight: Fraction

    @property
    def is_loop(self) -> bool:
        return self.tail == self.head


@dataclass(frozen=True)
class WeightedMultigraph:
    vertex_count: int
    edges: tuple[Edge, ...]
    # incident edge ids per vertex, sorted; a loop is listed once
    incidence: tuple[tuple[int, ...], ...] = field(repr=False, compare=False, default=())

    @property
    def k(self) -> int:
        return len(self.edges)

    @property
    def weights(self) -> tuple[Fraction, ...]:
        return tuple(e.weight for e in self.edges)

    @property
    def betti(self) -> int:
        return self.k - self.vertex_count + 1

    def zero_chain(self) -> Chain:
        return (Fraction(0),) * self.k

    def with_weights(self, weights: Sequence) -> "WeightedMultigraph":
        """Same combinatorics, new weights."""
        if len(weights) != self.k:
            raise DimensionMismatch(f"expected {self.k} weights, got {len(weights)}")
        return build_graph(
            self.vertex_count,
            [(e.tail, e.head, w) for e, w in zip(self.edges, weights)],
        )


def build_graph(vertex_count: int, edges: Iterable) -> WeightedMultigraph:
    """Validate and build a graph from ``(tail, head, weight)`` triples.

    Edge ids follow input order. Weights may be Fractions, ints or rational
    strings.
    """
    if isinstance(vertex_count, bool) or not isinstance(vertex_count, int) or vertex_count < 0:
        raise GraphFormatError(f"vertex_count must be a nonnegative integer, got {vertex_count!r}")
    built = []
    for i, triple in enumerate(edges):
        try:
            tail, head, weight = triple
        except (TypeError, ValueError) as exc:
            raise GraphFormatError(f"edge {i}: expected (tail, head, weight)") from exc
        for end in (tail, head):
            if isinstance(end, bool) or not isinstance(end, int):
                raise GraphFormatError(f"edge {i}: endpoint {end!r} is not an integer")
            if not 0 <= end < vertex_count:
                raise DanglingEndpoint(f"edge {i}: endpoint {end} outside 0..{vertex_count - 1}")
        w = parse_rational(weight)
        if w <= 0:
            raise NonPositiveWeight(f"edge {i}: weight {w} is not positive")
        built.append(Edge(i, tail, head, w))

    incidence: list[list[int]] = [[] for _ in range(vertex_count)]
    for e in built:
        incidence[e.tail].append(e.id)
        if not e.is_loop:
            incidence[e.head].append(e.id)

    if vertex_count == 0:
        if built:
            raise DanglingEndpoint("edges given for an empty vertex set")
        raise Disconnected("a graph needs at least one vertex")
    seen = _bfs_tree(vertex_count, built, incidence)[0]
    if not all(seen):
        missing = [v for v, s in enumerate(seen) if not s]
        raise Disconnected(f"vertices {missing} are not reachable from vertex 0")

    return WeightedMultigraph(
        vertex_count, tuple(built), tuple(tuple(ids) for ids in incidence)
    )


def _bfs_tree(n, edges, incidence):
    """Breadth-first search from vertex 0 scanning incident edges by id.

    Returns (seen, parent_edge) where parent_edge[v] is the tree edge used to
    reach v, or None for the root and unreachable vertices.
    """
    seen = [False] * n
    parent_edge: list[int | None] = [None] * n
    seen[0] = True
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for eid in incidence[v]:
            e = edges[eid]
            w = e.head if e.tail == v else e.tail
            if not seen[w]:
                seen[w] = True
                parent_edge[w] = eid
                queue.append(w)
    return seen, parent_edge


def _check_length(u: Sequence, n: int, what: str = "chain") -> None:
    if len(u) != n:
        raise DimensionMismatch(f"{what} has length {len(u)}, expected {n}")


def boundary(G: WeightedMultigraph, u: Sequence) -> Vector:
    """Simplicial boundary: each edge maps to head - tail, loops to zero."""
    _check_length(u, G.k)
    out = [Fraction(0)] * G.vertex_count
    for e, a in zip(G.edges, u):
        if a and not e.is_loop:
            out[e.head] += a
            out[e.tail] -= a
    return tuple(out)


def is_cycle(G: WeightedMultigraph, u: Sequence) -> bool:
    return not any(boundary(G, u))


@dataclass(frozen=True)
class HomologyBasis:
    """Spanning tree plus one fundamental cycle per cotree edge.

    ``fundamental_cycles[j]`` carries coefficient +1 on ``cotree_edges[j]``
    and 0 on every other cotree edge, so the coordinates of a cycle are just
    its cotree coefficients.
    """

    graph: WeightedMultigraph
    forest_edges: frozenset[int]
    cotree_edges: tuple[int, ...]
    fundamental_cycles: tuple[Chain, ...]

    @property
    def betti(self) -> int:
        return len(self.cotree_edges)

    def matrix(self) -> tuple[tuple[Fraction, ...], ...]:
        """The k x b matrix whose columns are the fundamental cycles."""
        k = self.graph.k
        return tuple(tuple(z[i] for z in self.fundamental_cycles) for i in range(k))


def homology_basis(G: WeightedMultigraph) -> HomologyBasis:
    n, k = G.vertex_count, G.k
    _, parent_edge = _bfs_tree(n, G.edges, G.incidence)
    tree = frozenset(e for e in parent_edge if e is not None)

    # root_path[v]: chain of the tree path from vertex 0 to v, so that
    # boundary(root_path[v]) = v - 0
    root_path: list[list[Fraction] | None] = [None] * n
    root_path[0] = [Fraction(0)] * k
    order = _bfs_order(G, parent_edge)
    for v in order[1:]:
        e = G.edges[parent_edge[v]]
        parent = e.tail if e.head == v else e.head
        path = list(root_path[parent])
        path[e.id] += 1 if e.head == v else -1
        root_path[v] = path

    cotree = tuple(e.id for e in G.edges if e.id not in tree)
    cycles = []
    for eid in cotree:
        e = G.edges[eid]
        z = [r_t - r_h for r_t, r_h in zip(root_path[e.tail], root_path[e.head])]
        z[eid] += 1
        cycles.append(tuple(z))
    return HomologyBasis(G, tree, cotree, tuple(cycles))


def _bfs_order(G, parent_edge):
    # vertices ordered so that each parent precedes its children
    children: list[list[int]] = [[] for _ in range(G.vertex_count)]
    for v, eid in enumerate(parent_edge):
        if eid is not None:
            e = G.edges[eid]
            children[e.tail if e.head == v else e.head].append(v)
    order, queue = [], deque([0])
    while queue:
        v = queue.popleft()
        order.append(v)
        queue.extend(children[v])
    return order


def basis_coords(H: HomologyBasis, u: Sequence) -> Vector:
    """Coordinates of the cycle ``u`` in the fundamental-cycle basis."""
    u = tuple(Fraction(a) for a in u)
    if not is_cycle(H.graph, u):
        raise NotACycle("chain has nonzero boundary")
    return tuple(u[e] for e in H.cotree_edges)


def chain_from_coords(H: HomologyBasis, y: Sequence) -> Chain:
    _check_length(y, H.betti, "coordinate vector")
    out = [Fraction(0)] * H.graph.k
    for coef, z in zip(y, H.fundamental_cycles):
        if coef:
            coef = Fraction(coef)
            for i, zi in enumerate(z):
                if zi:
                    out[i] += coef * zi
    return tuple(out)
