"""Enumeration of simple oriented circuits in a multigraph.

A circuit is stored as a cyclic sequence of steps ``(edge_id, sign)``;
``sign = +1`` traverses the edge from tail to head. The canonical rotation
starts at the smallest edge id. Orientation is kept: a circuit and its
reverse are two different oriented circuits.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import CircuitCapExceeded, NotClosed, NotSimple
from .graph import Chain, WeightedMultigraph

Step = tuple[int, int]

DEFAULT_CIRCUIT_CAP = 10**6


@dataclass(frozen=True)
class SimpleCircuit:
    steps: tuple[Step, ...]
    length: Fraction
    homology_chain: Chain

    @property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(e for e, _ in self.steps)

    def signed_string(self) -> str:
        return " ".join(f"{'+' if s > 0 else '-'}{e}" for e, s in self.steps)

    def __len__(self) -> int:
        return len(self.steps)


def step_ends(G: WeightedMultigraph, step: Step) -> tuple[int, int]:
    e = G.edges[step[0]]
    return (e.tail, e.head) if step[1] > 0 else (e.head, e.tail)


def circuit_vertices(G: WeightedMultigraph, c: SimpleCircuit) -> tuple[int, ...]:
    """Vertices in traversal order, each once."""
    return tuple(step_ends(G, s)[0] for s in c.steps)


def canonicalize(G: WeightedMultigraph, walk: Sequence[Step]) -> SimpleCircuit:
    """Normal form of a closed vertex-simple walk.

    Raises NotClosed if consecutive steps do not meet or the walk does not
    return to its start, NotSimple if a vertex (or an edge) repeats.
    """
    steps = [(int(e), 1 if s > 0 else -1) for e, s in walk]
    if not steps:
        raise NotClosed("empty walk")
    for e, _ in steps:
        if not 0 <= e < G.k:
            raise NotClosed(f"unknown edge id {e}")
    ends = [step_ends(G, s) for s in steps]
    for i, (_, head) in enumerate(ends):
        if head != ends[(i + 1) % len(ends)][0]:
            raise NotClosed(f"step {i} ends at {head}, next step starts at {ends[(i + 1) % len(ends)][0]}")
    starts = [t for t, _ in ends]
    if len(set(starts)) != len(starts):
        raise NotSimple("walk revisits a vertex")
    edge_ids = [e for e, _ in steps]
    if len(set(edge_ids)) != len(edge_ids):
        raise NotSimple("walk reuses an edge")

    r = edge_ids.index(min(edge_ids))
    steps = steps[r:] + steps[:r]
    chain = [Fraction(0)] * G.k
    for e, s in steps:
        chain[e] = Fraction(s)
    length = sum((G.edges[e].weight for e in edge_ids), Fraction(0))
    return SimpleCircuit(tuple(steps), length, tuple(chain))


def reverse(G: WeightedMultigraph, c: SimpleCircuit) -> SimpleCircuit:
    return canonicalize(G, [(e, -s) for e, s in reversed(c.steps)])


def circuit_chain(c: SimpleCircuit) -> Chain:
    return c.homology_chain


@dataclass(frozen=True)
class CircuitSet:
    graph: WeightedMultigraph
    oriented: tuple[SimpleCircuit, ...]

    @property
    def geometric_count(self) -> int:
        return len(self.oriented) // 2

    def __len__(self) -> int:
        return len(self.oriented)

    def __iter__(self) -> Iterator[SimpleCircuit]:
        return iter(self.oriented)


def _johnson_vertex_cycles(n: int, adj: list[set[int]]) -> Iterator[list[int]]:
    """Elementary cycles (length >= 2) of the symmetric digraph ``adj``.

    Johnson's algorithm: each cycle is rooted at its smallest vertex, and the
    search from root ``s`` runs on the subgraph induced by vertices >= s.
    Both directions of every undirected cycle are produced.
    """
    for s in range(n):
        sub = {v: sorted((w for w in adj[v] if w >= s), reverse=True) for v in range(s, n)}
        blocked = {s}
        B: dict[int, set[int]] = defaultdict(set)
        closed: set[int] = set()
        path = [s]
        stack = [(s, list(sub[s]))]
        while stack:
            v, nbrs = stack[-1]
            if nbrs:
                w = nbrs.pop()
                if w == s:
                    yield list(path)
                    closed.update(path)
                elif w not in blocked:
                    path.append(w)
                    stack.append((w, list(sub[w])))
                    closed.discard(w)
                    blocked.add(w)
                    continue
            if not nbrs:
                if v in closed:
                    _unblock(v, blocked, B)
                else:
                    for w in sub[v]:
                        B[w].add(v)
                stack.pop()
                path.pop()


def _unblock(v: int, blocked: set[int], B: dict[int, set[int]]) -> None:
    todo = {v}
    while todo:
        u = todo.pop()
        if u in blocked:
            blocked.remove(u)
            todo.update(B[u])
            B[u].clear()


def enumerate_circuits(G: WeightedMultigraph, cap: int = DEFAULT_CIRCUIT_CAP) -> CircuitSet:
    """All simple oriented circuits of ``G`` in canonical order.

    Loops give one-step circuits (both signs), pairs of parallel edges give
    two-step circuits, longer circuits come from Johnson's search on the
    underlying simple graph with parallel-edge choices expanded. An edge is
    never used twice, so ``e`` followed by its own reverse is not a circuit.
    """
    n = G.vertex_count
    adj: list[set[int]] = [set() for _ in range(n)]
    arcs: dict[tuple[int, int], list[Step]] = defaultdict(list)
    found: list[SimpleCircuit] = []

    def emit(c):
        found.append(c)
        if len(found) > cap:
            raise CircuitCapExceeded(f"more than {cap} oriented circuits")

    for e in G.edges:
        if e.is_loop:
            emit(canonicalize(G, [(e.id, 1)]))
            emit(canonicalize(G, [(e.id, -1)]))
        else:
            adj[e.tail].add(e.head)
            adj[e.head].add(e.tail)
            arcs[e.tail, e.head].append((e.id, 1))
            arcs[e.head, e.tail].append((e.id, -1))

    for cyc in _johnson_vertex_cycles(n, adj):
        hops = [arcs[cyc[i], cyc[(i + 1) % len(cyc)]] for i in range(len(cyc))]
        for choice in itertools.product(*hops):
            if len(choice) == 2 and choice[0][0] == choice[1][0]:
                continue
            emit(canonicalize(G, choice))

    found.sort(key=lambda c: c.steps)
    return CircuitSet(G, tuple(found))
