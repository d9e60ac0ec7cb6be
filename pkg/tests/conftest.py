"""Shared fixtures: standard graphs and the small-graph corpus."""
import random

import pytest

from quograph import (AnalysisOptions, analyze, build_graph, circulant,
                      distances, petersen_graph, prism_y6)


@pytest.fixture(scope="session")
def circ17():
    return circulant(17, {1, 4})


@pytest.fixture(scope="session")
def y6():
    return prism_y6()


@pytest.fixture(scope="session")
def petersen():
    return petersen_graph()


def connected_graph6_corpus():
    """All connected graphs on at most 7 vertices, as graph6 lines.

    networkx's atlas is the independent source; its encoder doubles as the
    reference for our own graph6 parser.
    """
    import networkx as nx
    from networkx.generators.atlas import graph_atlas_g
    lines = []
    for G in graph_atlas_g():
        if len(G) >= 1 and nx.is_connected(G):
            lines.append(nx.to_graph6_bytes(G, header=False).decode().strip())
    return lines


def random_connected_graphs(count=200, lo=8, hi=16, seed=20250823):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(lo, hi)
        p = rng.uniform(0.2, 0.6)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < p]
        g = build_graph(n, edges)
        if distances(g).connected:
            out.append(g)
    return out


@pytest.fixture(scope="session")
def small_corpus():
    """Parsed corpus: all connected graphs on <=7 vertices plus 200 random
    connected graphs on 8..16 vertices."""
    from quograph import parse_graph6
    graphs = [parse_graph6(line) for line in connected_graph6_corpus()]
    graphs += random_connected_graphs()
    return graphs


@pytest.fixture(scope="session")
def corpus_reports(small_corpus):
    """One analyze() pass over the whole corpus, shared by the acceptance
    criteria that consume per-graph flags. Returns (reports, elapsed)."""
    import time
    t0 = time.monotonic()
    reports = [analyze(g, AnalysisOptions()) for g in small_corpus]
    return reports, time.monotonic() - t0
