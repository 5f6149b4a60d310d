import io
import json
from fractions import Fraction as F

import pytest

from corpus import named_graphs, sweep_graphs
from stablenorm.circuits import enumerate_circuits
from stablenorm.cli import run
from stablenorm.errors import DimensionTooHigh, GraphFormatError, UnknownCorpusName
from stablenorm.graph import homology_basis
from stablenorm.io import (
    export_plot,
    format_rational,
    gen_corpus,
    parse_graph,
    serialize_graph,
)
from stablenorm.norm import stable_ball


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def graph_file(tmp_path):
    def write(G, name="g.json"):
        path = tmp_path / name
        path.write_text(serialize_graph(G), encoding="utf-8")
        return str(path)
    return write


def test_format_rational():
    assert format_rational(F(3, 2)) == "3/2"
    assert format_rational(2) == "2/1"
    assert format_rational(F(-1, 3)) == "-1/3"


@pytest.mark.parametrize("G", list(named_graphs().values()) + sweep_graphs(10))
def test_round_trip(G):
    text = serialize_graph(G)
    assert parse_graph(text) == G
    assert serialize_graph(parse_graph(text)) == text


def test_decimal_weights():
    G = parse_graph('{"vertex_count": 1, "edges": [{"tail": 0, "head": 0, "weight": "1.25"}]}')
    assert G.edges[0].weight == F(5, 4)


@pytest.mark.parametrize("text", [
    '{"vertex_count": 1}',
    '{"vertex_count": 1, "edges": [{"tail": 0, "head": 0, "weight": 1.5}]}',
    '{"vertex_count": 1, "edges": [{"tail": 0, "weight": "1"}]}',
    '{"vertex_count": 1, "edges": [] // no comments\n}',
    '[1, 2]',
])
def test_bad_files(text):
    with pytest.raises(GraphFormatError):
        parse_graph(text)


def test_gen_corpus_deterministic():
    assert serialize_graph(gen_corpus("random", seed=3)) == serialize_graph(gen_corpus("random", seed=3))
    assert gen_corpus("random(3,5,8)") == gen_corpus("random", seed=3, vertices=5, edges=8)
    assert gen_corpus("bouquet-4").k == 4
    assert gen_corpus("K33").betti == 4
    with pytest.raises(UnknownCorpusName):
        gen_corpus("petersen")


def test_random_corpus_weights_in_range():
    for seed in range(20):
        G = gen_corpus("random", seed=seed, vertices=6, edges=9)
        assert all(0 < w <= 5 for w in G.weights)


def plot_rows(csv):
    lines = csv.strip().splitlines()
    return [l for l in lines if l.startswith("vertex,")], [l for l in lines if l.startswith("edge,")]


def test_export_plot_theta(graphs):
    G = graphs["theta"]
    ball = stable_ball(G, homology_basis(G))
    vertices, edges = plot_rows(export_plot(G, ball))
    assert len(vertices) == 6 and len(edges) == 6
    # hexagon: every vertex has degree 2
    degree = [0] * 6
    for line in edges:
        _, i, j = line.split(",")
        degree[int(i)] += 1
        degree[int(j)] += 1
    assert degree == [2] * 6


def test_export_plot_bouquet(graphs):
    G = graphs["bouquet-2"]
    vertices, edges = plot_rows(export_plot(G, stable_ball(G, homology_basis(G))))
    assert len(vertices) == 4 and len(edges) == 4


def test_export_plot_k4_skeleton(graphs):
    G = graphs["K4"]
    vertices, edges = plot_rows(export_plot(G, stable_ball(G, homology_basis(G))))
    # Euler's formula for a 3-polytope with 14 vertices and its edge count
    assert len(vertices) == 14
    faces = 2 - len(vertices) + len(edges)
    assert faces >= 4 and 2 * len(edges) >= 3 * len(vertices)


def test_export_plot_too_high(graphs):
    G = graphs["K33"]
    with pytest.raises(DimensionTooHigh):
        export_plot(G, stable_ball(G, homology_basis(G)))


class TestCLI:
    def test_ball(self, graph_file, graphs, tmp_path):
        path = graph_file(graphs["theta"])
        plot = tmp_path / "out.csv"
        code, out, err = invoke("ball", path, "--check-bound", "--plot", str(plot))
        assert code == 0
        data = json.loads(out)
        assert data["betti"] == 2 and len(data["vertices"]) == 6
        chains = {tuple(v["chain"]) for v in data["vertices"]}
        assert ("1/2", "-1/2", "0/1") in chains
        assert all(v["length"] == "2/1" for v in data["vertices"])
        assert "bound" in err and plot.exists()

    def test_norm(self, graph_file, graphs):
        code, out, _ = invoke("norm", graph_file(graphs["theta"]), "--class=-1,1/2")
        assert code == 0
        # -1 * (-1, 1, 0) + 1/2 * fundamental cycle of e2
        assert json.loads(out)["norm"] == "2/1"

    def test_decompose(self, graph_file, graphs):
        code, out, _ = invoke("decompose", graph_file(graphs["K4"]), "--class", "2,0,0")
        data = json.loads(out)
        assert code == 0 and data["norm_identity"] is True
        assert data["circuits"][0]["multiplicity"] == 2

    def test_decompose_rejects_fraction(self, graph_file, graphs):
        code, _, err = invoke("decompose", graph_file(graphs["K4"]), "--class", "1/2,0,0")
        assert code == 2 and "not integral" in err

    def test_circuits(self, graph_file, graphs):
        code, out, _ = invoke("circuits", graph_file(graphs["theta"]))
        lines = out.strip().splitlines()
        assert code == 0 and len(lines) == 6
        assert lines[0].split("  ") == ["0", "2/1", "-0 +1"]

    def test_verify(self, graph_file, graphs):
        code, out, _ = invoke("verify", graph_file(graphs["K4"]))
        data = json.loads(out)
        assert code == 0 and data["passed"] and data["oracle"] == "agree"

    def test_verify_cap(self, graph_file, graphs):
        code, out, _ = invoke("verify", graph_file(graphs["K33"]), "--oracle-cap", "4")
        assert code == 0 and json.loads(out)["oracle"].startswith("skipped")

    def test_gen(self):
        code, out, _ = invoke("gen", "random", "--seed", "4")
        assert code == 0
        assert parse_graph(out) == gen_corpus("random", seed=4)
        assert invoke("gen", "random", "--seed", "4")[1] == out

    def test_input_errors(self, tmp_path, graph_file, graphs):
        bad = tmp_path / "bad.json"
        bad.write_text('{"vertex_count": 2, "edges": [{"tail": 0, "head": 1, "weight": "0"}]}')
        assert invoke("ball", str(bad))[0] == 2
        assert invoke("ball", str(tmp_path / "missing.json"))[0] == 2
        assert invoke("gen", "petersen")[0] == 2
        assert invoke("bogus")[0] == 2
        assert invoke("norm", graph_file(graphs["theta"]), "--class", "1")[0] == 2
