import random
from dataclasses import replace
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from corpus import multigraphs, named_graphs, rationals
from stablenorm.circuits import canonicalize, enumerate_circuits, reverse
from stablenorm.errors import DegenerateBall, DimensionMismatch, NonIntegralClass
from stablenorm.graph import basis_coords, chain_from_coords, homology_basis
from stablenorm.io import bouquet
from stablenorm.norm import (
    ball_contains,
    chain_norm,
    decompose_class,
    dual_norm,
    merge_circuits,
    stable_ball,
    stable_norm,
    verify_vertices,
    vertex_directions,
)
from stablenorm.oracle import facet_normals
from stablenorm.polytope import dot


def ball_of(G):
    H = homology_basis(G)
    return H, stable_ball(G, H, enumerate_circuits(G))


def test_chain_norm_examples(graphs):
    theta = graphs["theta"]
    assert chain_norm(theta, [0, 0, 0]) == 0
    assert chain_norm(theta, [1, -1, 0]) == 2
    assert chain_norm(bouquet([F(1, 2), 3]), [2, 1]) == 4
    with pytest.raises(DimensionMismatch):
        chain_norm(theta, [1, 2])


def test_stable_norm_examples(graphs):
    G = graphs["theta"]
    H = homology_basis(G)
    assert stable_norm(G, H, [0, 0]) == 0
    y = basis_coords(H, [1, -1, 0])
    assert stable_norm(G, H, y) == 2
    with pytest.raises(DimensionMismatch):
        stable_norm(G, H, [1])


def test_bouquet_ball():
    w1, w2 = F(2, 3), F(5)
    G = bouquet([w1, w2])
    H, ball = ball_of(G)
    expected = {(1 / w1, 0), (-1 / w1, 0), (0, 1 / w2), (0, -1 / w2)}
    assert set(ball.vertices_chain) == expected


def test_theta_ball(graphs):
    H, ball = ball_of(graphs["theta"])
    h = F(1, 2)
    expected = set()
    for v in [(h, -h, 0), (h, 0, -h), (0, h, -h)]:
        expected |= {v, tuple(-x for x in v)}
    assert set(ball.vertices_chain) == expected


def test_k4_ball(graphs):
    H, ball = ball_of(graphs["K4"])
    assert len(ball) == 14 == 2 * (2 ** 3 - 1)
    radii = sorted(c.length for c in ball.source_circuits)
    assert radii == [3] * 8 + [4] * 6


def test_tree_ball_is_degenerate(graphs):
    G = graphs["path"]
    H, ball = ball_of(G)
    assert ball.betti == 0 and len(ball) == 0
    assert stable_norm(G, H, []) == 0
    assert dual_norm(ball, []) == 0
    with pytest.raises(DegenerateBall):
        dual_norm(ball, [1])


def test_dual_norm_examples(graphs):
    _, ball = ball_of(graphs["bouquet-2"])
    assert dual_norm(ball, [0, 0]) == 0
    assert dual_norm(ball, [1, 0]) == 1
    _, ball = ball_of(graphs["K4"])
    xi = (F(2), F(-1, 3), F(5, 7))
    assert dual_norm(ball, xi) == dual_norm(ball, tuple(-x for x in xi))


class TestMerge:
    def test_cancellation(self, graphs):
        G = graphs["K4"]
        c = enumerate_circuits(G).oriented[0]
        assert merge_circuits(G, c, reverse(G, c)) == []

    def test_theta(self, graphs):
        G = graphs["theta"]
        c1 = canonicalize(G, [(0, 1), (1, -1)])
        c2 = canonicalize(G, [(1, 1), (2, -1)])
        merged = merge_circuits(G, c1, c2)
        assert [c.homology_chain for c in merged] == [(1, 0, -1)]

    def test_disjoint(self, graphs):
        G = graphs["bouquet-3"]
        c1 = canonicalize(G, [(0, 1)])
        c2 = canonicalize(G, [(2, -1)])
        assert sorted(merge_circuits(G, c1, c2), key=lambda c: c.steps) == [c1, c2]

    def test_shared_vertex_is_cut(self, graphs):
        G = graphs["two-triangles"]
        c1 = canonicalize(G, [(0, 1), (1, 1), (2, 1)])
        c2 = canonicalize(G, [(3, 1), (4, 1), (5, 1)])
        assert {c.steps for c in merge_circuits(G, c1, c2)} == {c1.steps, c2.steps}


def assert_no_opposite_edges(circuits):
    direction = {}
    for c in circuits:
        for e, s in c.steps:
            assert direction.setdefault(e, s) == s


@pytest.mark.parametrize("name", ["K4", "K33", "loop-and-parallel", "theta"])
def test_merge_all_pairs(name):
    G = named_graphs()[name]
    cs = enumerate_circuits(G).oriented
    for c1 in cs:
        for c2 in cs:
            merged = merge_circuits(G, c1, c2)
            total = [F(0)] * G.k
            for d in merged:
                for i, x in enumerate(d.homology_chain):
                    total[i] += x
            assert tuple(total) == tuple(a + b for a, b in zip(c1.homology_chain, c2.homology_chain))
            assert_no_opposite_edges(merged)


class TestDecompose:
    def test_zero(self, graphs):
        G = graphs["K4"]
        d = decompose_class(G, homology_basis(G), [0, 0, 0])
        assert d.circuits == () and d.norm == 0

    def test_twice_a_triangle(self, graphs):
        G = graphs["K4"]
        H = homology_basis(G)
        tri = next(c for c in enumerate_circuits(G) if len(c) == 3)
        a = [2 * x for x in basis_coords(H, tri.homology_chain)]
        d = decompose_class(G, H, a)
        assert d.circuits == (tri,) and d.multiplicities == (2,)
        assert d.norm == d.total_length() == 6

    def test_theta_cancellation(self, graphs):
        G = graphs["theta"]
        H = homology_basis(G)
        a = [x + y for x, y in zip(basis_coords(H, [1, -1, 0]), basis_coords(H, [0, 1, -1]))]
        d = decompose_class(G, H, a)
        assert [c.homology_chain for c in d.circuits] == [(1, 0, -1)]
        assert d.norm == 2

    def test_non_integral(self, graphs):
        G = graphs["theta"]
        with pytest.raises(NonIntegralClass):
            decompose_class(G, homology_basis(G), [F(1, 2), 0])


def check_decomposition(G, H, a):
    d = decompose_class(G, H, a)
    assert d.total_chain(G.k) == chain_from_coords(H, a)
    assert d.total_length() == d.norm == stable_norm(G, H, a)
    assert all(m > 0 for m in d.multiplicities)
    assert_no_opposite_edges(d.circuits)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_decomposition_properties(data):
    G = data.draw(multigraphs(min_betti=1))
    H = homology_basis(G)
    a = data.draw(st.lists(st.integers(-5, 5), min_size=H.betti, max_size=H.betti))
    check_decomposition(G, H, a)


class TestVerify:
    def test_theta(self, graphs):
        report = verify_vertices(ball_of(graphs["theta"])[1])
        assert report.passed and len(report.entries) == 6

    def test_bouquet(self, graphs):
        report = verify_vertices(ball_of(graphs["bouquet-2"])[1])
        assert report.passed and len(report.entries) == 4

    def test_injected_midpoint(self, graphs):
        _, ball = ball_of(graphs["theta"])
        p, q = ball.vertices_basis[0], ball.vertices_basis[1]
        mid = tuple((x + y) / 2 for x, y in zip(p, q))
        bad = replace(ball,
                      vertices_basis=ball.vertices_basis + (mid,),
                      vertices_chain=ball.vertices_chain + ((F(0),) * 3,),
                      source_circuits=ball.source_circuits + (None,))
        report = verify_vertices(bad)
        assert not report.passed
        assert [e.index for e in report.failures] == [len(ball)]


@pytest.mark.parametrize("name", sorted(named_graphs()))
def test_ball_invariants(name):
    G = named_graphs()[name]
    H, ball = ball_of(G)
    b = ball.betti
    assert len(ball) <= 2 * (2 ** b - 1)
    basis = set(ball.vertices_basis)
    assert all(tuple(-x for x in v) in basis for v in basis)
    for v in ball.vertices_chain:
        assert chain_norm(G, v) == 1
    assert verify_vertices(ball).passed


@pytest.mark.parametrize("name, count", [("theta", 6), ("K4", 14), ("K33", 30)])
def test_bound_attained(name, count):
    _, ball = ball_of(named_graphs()[name])
    assert len(ball) == count == 2 * (2 ** ball.betti - 1)


@st.composite
def graph_with_classes(draw, n=2):
    G = draw(multigraphs(min_betti=1, max_vertices=4, max_edges=7))
    H = homology_basis(G)
    vecs = [draw(st.lists(rationals(), min_size=H.betti, max_size=H.betti)) for _ in range(n)]
    return G, H, vecs


@settings(max_examples=60, deadline=None)
@given(graph_with_classes(), rationals())
def test_norm_axioms(data, alpha):
    G, H, (y, z) = data
    N = lambda v: stable_norm(G, H, v)  # noqa: E731
    assert N([alpha * x for x in y]) == abs(alpha) * N(y)
    assert N([a + b for a, b in zip(y, z)]) <= N(y) + N(z)
    assert (N(y) == 0) == (not any(y))


@settings(max_examples=40, deadline=None)
@given(graph_with_classes(n=1), st.fractions(min_value=F(1, 1000), max_value=1, max_denominator=1000))
def test_unit_sphere_is_boundary(data, eps):
    G, H, (y,) = data
    if not any(y):
        return
    y = [x / stable_norm(G, H, y) for x in y]
    ball = stable_ball(G, H)
    assert ball_contains(ball, y)
    assert not ball_contains(ball, [(1 + eps) * x for x in y])
    # facet functionals all have dual norm <= 1 and one of them attains 1 at y
    normals = facet_normals(G, H)
    assert all(dual_norm(ball, a) <= 1 for a in normals)
    assert max(dot(a, y) for a in normals) == 1


@settings(max_examples=40, deadline=None)
@given(graph_with_classes())
def test_dual_pairing_bound(data):
    G, H, (y, xi) = data
    ball = stable_ball(G, H)
    assert dot(xi, y) <= dual_norm(ball, xi) * stable_norm(G, H, y)


@pytest.mark.parametrize("name", ["theta", "K4", "loop-and-parallel", "two-triangles"])
def test_direction_invariance(name):
    G = named_graphs()[name]
    rng = random.Random(5)
    dirs = {vertex_directions(ball_of(G)[1])}
    for _ in range(4):
        W = G.with_weights([F(rng.randint(1, 30), rng.randint(1, 7)) for _ in range(G.k)])
        dirs.add(vertex_directions(ball_of(W)[1]))
    assert len(dirs) == 1
