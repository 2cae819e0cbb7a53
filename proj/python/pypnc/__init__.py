"""Cores, mu3 and partially normal 5-edge-colorings of cubic graphs."""

import json

from ._pnc import Graph, GraphError, PncError, ReportError, parse_graph6_lines
from . import _pnc

__all__ = [
    "Graph",
    "GraphError",
    "PncError",
    "ReportError",
    "parse_graph6_lines",
    "color",
    "mu3",
    "oracle",
    "verify",
    "to_dot",
]


def color(graph, name="graph", repair=True, budget_mu3=10_000_000):
    """Partially normal 5-edge-coloring as a result dict (CLI JSON schema plus "verify")."""
    return json.loads(_pnc._color(graph, name, repair, budget_mu3))


def mu3(graph, budget=10_000_000):
    """mu3 with a witness core: {"mu3", "exact", "matchings", "triples_examined", "core"}."""
    return json.loads(_pnc._mu3(graph, budget))


def oracle(graph, kind="normal", budget=50_000_000):
    """Exhaustive search; kind is "normal", "petersen" or "maxnormal"."""
    return json.loads(_pnc._oracle(graph, kind, budget))


def verify(graph, result):
    """Re-checks a result dict (or JSON text) against the graph."""
    text = result if isinstance(result, str) else json.dumps(result)
    return json.loads(_pnc._verify(graph, text))


def to_dot(graph, result, name="G"):
    """Graphviz source for a result dict."""
    return _pnc._dot(graph, name, result["coloring"], result["abnormal"])
