"""Shared fixtures: the exhaustive small-graph catalog and independent oracles.

The catalog of all simple graphs on up to 6 vertices (208 isomorphism
classes) comes from the networkx graph atlas, an external source that the
library under test never touches.  ``eigvalsh_desc`` wraps numpy's LAPACK
eigensolver as an oracle independent of the package's Jacobi sweep.
"""

import numpy as np
import pytest
from networkx.generators.atlas import graph_atlas_g

import networkx as nx

from seidelkit import Graph, graph_to_graph6


@pytest.fixture(scope="session")
def catalog_graphs():
    """All simple graphs with 1 <= n <= 6, one per isomorphism class."""
    graphs = []
    for g in graph_atlas_g():
        if 1 <= g.number_of_nodes() <= 6:
            adj = nx.to_numpy_array(g, nodelist=sorted(g.nodes()), dtype=int)
            graphs.append(Graph(adj))
    assert len(graphs) == 208
    return graphs


@pytest.fixture(scope="session")
def catalog_lines(catalog_graphs):
    return [graph_to_graph6(g) for g in catalog_graphs]


def eigvalsh_desc(mat):
    """Independent eigenvalue oracle (LAPACK), sorted descending."""
    return np.linalg.eigvalsh(np.asarray(mat, dtype=float))[::-1]


def seidel_of(adj):
    """Build J - I - 2A directly from a dense 0/1 adjacency array."""
    n = adj.shape[0]
    return np.ones((n, n)) - np.eye(n) - 2.0 * np.asarray(adj, dtype=float)


def poly_mul(a, b):
    """Multiply integer polynomials given as descending coefficient lists."""
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def random_simple_graph(rng, n, p=0.5):
    """Erdos-Renyi style dense test graph on n vertices."""
    adj = np.zeros((n, n), dtype=np.int8)
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                adj[i, j] = adj[j, i] = 1
    return Graph(adj)
