"""Stable norm of a weighted graph and its unit ball.

On a graph every homology class has exactly one cycle representative, so
the stable norm of a class is the weighted l1 norm of that cycle. The unit
ball is the convex hull of the normalized simple circuits ``C / |C|_w``,
and each of those points is a vertex.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .circuits import CircuitSet, SimpleCircuit, canonicalize, enumerate_circuits, step_ends
from .errors import DegenerateBall, DimensionMismatch, NonIntegralClass
from .graph import Chain, HomologyBasis, Vector, WeightedMultigraph, basis_coords, chain_from_coords
from .polytope import HullCertificate, PointSet, hull_contains, is_extreme, support_value


def chain_norm(G: WeightedMultigraph, u: Sequence) -> Fraction:
    """Weighted l1 norm: sum of w_i |u_i|."""
    if len(u) != G.k:
        raise DimensionMismatch(f"chain has length {len(u)}, expected {G.k}")
    return sum((e.weight * abs(Fraction(a)) for e, a in zip(G.edges, u)), Fraction(0))


def stable_norm(G: WeightedMultigraph, H: HomologyBasis, y: Sequence) -> Fraction:
    if len(y) != H.betti:
        raise DimensionMismatch(f"class has {len(y)} coordinates, expected {H.betti}")
    return chain_norm(G, chain_from_coords(H, y))


@dataclass(frozen=True)
class StableBall:
    betti: int
    vertices_chain: tuple[Chain, ...]
    vertices_basis: tuple[Vector, ...]
    # None marks a vertex that does not come from a circuit (test injections)
    source_circuits: tuple[SimpleCircuit | None, ...]

    def point_set(self) -> PointSet:
        return PointSet(self.betti, self.vertices_basis)

    def __len__(self) -> int:
        return len(self.vertices_basis)


def stable_ball(G: WeightedMultigraph, H: HomologyBasis,
                circuits: CircuitSet | None = None) -> StableBall:
    """Unit ball of the stable norm as the list of normalized circuits."""
    if circuits is None:
        circuits = enumerate_circuits(G)
    if H.betti == 0:
        return StableBall(0, (), (), ())
    chains, coords = [], []
    for c in circuits:
        v = tuple(a / c.length for a in c.homology_chain)
        chains.append(v)
        coords.append(basis_coords(H, v))
    return StableBall(H.betti, tuple(chains), tuple(coords), tuple(circuits))


def dual_norm(ball: StableBall, xi: Sequence) -> Fraction:
    """Support function of the ball: max of <xi, v> over its vertices."""
    if ball.betti == 0:
        if len(xi):
            raise DegenerateBall("dual norm on a zero-dimensional ball")
        return Fraction(0)
    return support_value(xi, ball.point_set())


# ---------------------------------------------------------------------------
# circuit surgery

def _peel(G: WeightedMultigraph, residual: Sequence[int]) -> list[SimpleCircuit]:
    """Split an integral cycle into simple circuits following its signs.

    Each edge i is available |residual[i]| times in direction sign(residual[i]).
    A walk follows available arcs and, whenever it comes back to a vertex
    already on the walk, cuts off that closed piece as a simple circuit.
    Every arc is consumed exactly once, so no edge is ever used against
    its residual sign.
    """
    left = [abs(int(a)) for a in residual]
    sign = [1 if a > 0 else -1 for a in residual]
    out_arcs: dict[int, list[int]] = {}
    for e in G.edges:
        if left[e.id]:
            start = e.tail if sign[e.id] > 0 else e.head
            out_arcs.setdefault(start, []).append(e.id)

    def take_arc(v):
        for eid in out_arcs.get(v, ()):
            if left[eid]:
                left[eid] -= 1
                return eid
        return None

    found = []
    for start in sorted(out_arcs):
        while any(left[eid] for eid in out_arcs[start]):
            path_vertices = [start]
            path_steps: list[tuple[int, int]] = []
            pos = {start: 0}
            v = start
            while path_steps or v == start:
                eid = take_arc(v)
                if eid is None:
                    raise DimensionMismatch("residual chain is not a cycle")
                step = (eid, sign[eid])
                w = step_ends(G, step)[1]
                path_steps.append(step)
                if w in pos:
                    cut = pos[w]
                    found.append(canonicalize(G, path_steps[cut:]))
                    for u in path_vertices[cut + 1:]:
                        del pos[u]
                    del path_steps[cut:]
                    del path_vertices[cut + 1:]
                    v = w
                    if not path_steps:
                        break
                else:
                    pos[w] = len(path_vertices)
                    path_vertices.append(w)
                    v = w
    return found


def merge_circuits(G: WeightedMultigraph, c1: SimpleCircuit,
                   c2: SimpleCircuit) -> list[SimpleCircuit]:
    """Simple circuits with the class of ``c1 + c2`` and no edge used both ways.

    Edges run in opposite directions by the two circuits cancel; what remains
    is cut into simple pieces at the first revisited vertex.
    """
    total = [a + b for a, b in zip(c1.homology_chain, c2.homology_chain)]
    return _peel(G, total)


@dataclass(frozen=True)
class Decomposition:
    circuits: tuple[SimpleCircuit, ...]
    multiplicities: tuple[int, ...]
    norm: Fraction = field(default=Fraction(0))

    def total_chain(self, k: int) -> Chain:
        out = [Fraction(0)] * k
        for c, m in zip(self.circuits, self.multiplicities):
            for i, a in enumerate(c.homology_chain):
                out[i] += m * a
        return tuple(out)

    def total_length(self) -> Fraction:
        return sum((m * c.length for c, m in zip(self.circuits, self.multiplicities)), Fraction(0))


def decompose_class(G: WeightedMultigraph, H: HomologyBasis, a: Sequence) -> Decomposition:
    """Write an integral class as a sum of simple circuits with additive lengths."""
    if len(a) != H.betti:
        raise DimensionMismatch(f"class has {len(a)} coordinates, expected {H.betti}")
    a = [Fraction(x) for x in a]
    if any(x.denominator != 1 for x in a):
        raise NonIntegralClass(f"class {[str(x) for x in a]} is not integral")
    u = chain_from_coords(H, a)
    pieces = Counter(_peel(G, [int(x) for x in u]))
    ordered = sorted(pieces, key=lambda c: c.steps)
    return Decomposition(tuple(ordered), tuple(pieces[c] for c in ordered), chain_norm(G, u))


# ---------------------------------------------------------------------------
# vertex verification

@dataclass(frozen=True)
class VertexStatus:
    index: int
    circuit: SimpleCircuit | None
    extreme: bool
    certificate: HullCertificate


@dataclass(frozen=True)
class VerificationReport:
    entries: tuple[VertexStatus, ...]

    @property
    def passed(self) -> bool:
        return all(e.extreme for e in self.entries)

    @property
    def failures(self) -> tuple[VertexStatus, ...]:
        return tuple(e for e in self.entries if not e.extreme)


def verify_vertices(ball: StableBall, indices=None) -> VerificationReport:
    """Certify listed points as vertices of the hull of the whole list.

    ``indices`` restricts the check to some positions (all by default).
    Failures are reported, never raised.
    """
    pts = ball.vertices_basis
    entries = []
    for i in range(len(pts)) if indices is None else indices:
        others = PointSet(ball.betti, pts[:i] + pts[i + 1:])
        extreme, cert = is_extreme(pts[i], others)
        entries.append(VertexStatus(i, ball.source_circuits[i], extreme, cert))
    return VerificationReport(tuple(entries))


def vertex_directions(ball: StableBall) -> frozenset[Vector]:
    """Vertex rays as canonical representatives: primitive integer vectors."""
    return frozenset(primitive_direction(v) for v in ball.vertices_basis)


def primitive_direction(v: Sequence) -> tuple[int, ...]:
    den = lcm(*(Fraction(x).denominator for x in v)) if v else 1
    ints = [int(Fraction(x) * den) for x in v]
    g = gcd(*ints) if ints else 0
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def ball_contains(ball: StableBall, y: Sequence) -> bool:
    return hull_contains(y, ball.point_set()).inside


__all__ = [
    "chain_norm", "stable_norm", "StableBall", "stable_ball", "dual_norm",
    "merge_circuits", "Decomposition", "decompose_class", "VertexStatus",
    "VerificationReport", "verify_vertices", "vertex_directions",
    "primitive_direction", "ball_contains",
]
