"""Graphs and generators shared by the test modules."""

import random
from fractions import Fraction

from hypothesis import strategies as st

from stablenorm.graph import build_graph
from stablenorm.io import bouquet, complete_bipartite, complete_graph, random_multigraph, theta

F = Fraction


def named_graphs():
    return {
        "theta": theta(),
        "bouquet-2": bouquet([1, 1]),
        "bouquet-3": bouquet([F(1, 2), 3, 5]),
        "K4": complete_graph(4),
        "K33": complete_bipartite(3, 3),
        "triangle": build_graph(3, [(0, 1, 1), (1, 2, 2), (2, 0, 3)]),
        "path": build_graph(3, [(0, 1, 1), (1, 2, 1)]),
        "loop-and-parallel": build_graph(2, [(0, 0, F(3, 2)), (0, 1, 1), (1, 0, 2), (1, 1, F(1, 3))]),
        "two-triangles": build_graph(5, [(0, 1, 1), (1, 2, 1), (2, 0, 1), (2, 3, 2), (3, 4, 1), (4, 2, 1)]),
    }


def sweep_graphs(count=50, seed=20241019):
    """Seeded random connected multigraphs with at most 6 vertices, 9 edges, b >= 1."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        v = rng.randint(1, 6)
        e = rng.randint(v, 9)
        out.append(random_multigraph(rng.randrange(10**9), v, e))
    return out


@st.composite
def multigraphs(draw, max_vertices=5, max_edges=8, min_betti=0):
    n = draw(st.integers(1, max_vertices))
    k = draw(st.integers(max(n - 1, n - 1 + min_betti), max(max_edges, n - 1 + min_betti)))
    weight = st.fractions(min_value=F(1, 7), max_value=5, max_denominator=7)
    triples = []
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        triples.append((u, v) if draw(st.booleans()) else (v, u))
    for _ in range(k - (n - 1)):
        triples.append((draw(st.integers(0, n - 1)), draw(st.integers(0, n - 1))))
    perm = draw(st.permutations(range(len(triples))))
    return build_graph(n, [(*triples[i], draw(weight)) for i in perm])


def rationals(lo=-5, hi=5, max_denominator=6):
    return st.fractions(min_value=lo, max_value=hi, max_denominator=max_denominator)
