import json
import os
import pathlib

import pytest

import pypnc

DATA = pathlib.Path(os.environ.get("PNC_DATA_DIR", pathlib.Path(__file__).resolve().parents[2] / "data"))


def test_generate_and_formats():
    g = pypnc.Graph.generate("petersen")
    assert (g.n, g.m) == (10, 15)
    h = pypnc.Graph.from_graph6(g.graph6())
    assert h.m == 15
    assert pypnc.Graph.from_edgelist(g.edgelist()).m == 15
    assert g.is_bridgeless()


def test_bad_input_raises():
    with pytest.raises(pypnc.GraphError):
        pypnc.Graph.from_edgelist("4 5\n0 1\n1 2\n2 3\n3 0\n0 2\n")
    with pytest.raises(ValueError):
        pypnc.Graph.generate("dodecahedron")


def test_mu3_petersen():
    r = pypnc.mu3(pypnc.Graph.generate("petersen"))
    assert r["mu3"] == 3
    assert r["exact"]
    assert r["matchings"] == 6


def test_color_flower5():
    g = pypnc.Graph.generate("flower", 5)
    r = pypnc.color(g, "flower(5)")
    assert r["verify"]["ok"]
    assert len(r["abnormal"]) <= r["mu3"]["value"] == 3
    assert r["normal_count"] >= 24
    assert pypnc.verify(g, r)["ok"]


def test_verify_catches_tampering():
    g = pypnc.Graph.generate("petersen")
    r = pypnc.color(g, "petersen")
    r["k"] = r["k"] - 1
    assert not pypnc.verify(g, r)["ok"]
    with pytest.raises(ValueError):
        pypnc.verify(g, "{")


def test_oracles():
    g = pypnc.Graph.generate("petersen")
    assert pypnc.oracle(g, "normal")["status"] == "FOUND"
    assert pypnc.oracle(g, "petersen")["status"] == "FOUND"
    assert pypnc.oracle(g, "maxnormal")["count"] == 15
    assert pypnc.oracle(g, "normal", budget=1)["status"] == "BUDGET_EXCEEDED"


def test_dot():
    g = pypnc.Graph.generate("petersen")
    r = pypnc.color(g, "petersen")
    dot = pypnc.to_dot(g, r)
    assert dot.count("dashed,bold") == len(r["abnormal"])


def test_corpus_n10():
    graphs = pypnc.parse_graph6_lines((DATA / "cubic_n10.g6").read_text())
    assert len(graphs) == 19
    for g in graphs:
        if not g.is_bridgeless():
            continue
        r = pypnc.color(g)
        assert r["verify"]["ok"]
        assert len(r["abnormal"]) <= r["mu3"]["value"]
        json.dumps(r)
