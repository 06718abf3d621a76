import json
import random

import pytest

from rrlattice.core import degree
from rrlattice.graphs import (Multigraph, RegularDigraph,
                              acyclic_orientations_unique_source,
                              canonical_divisor, connected_simple_graphs,
                              cyclic_order_count, graph_from_json_dict,
                              graph_from_text, laplacian_lattice,
                              random_connected_multigraph,
                              spanning_tree_count)


def test_multigraph_validation():
    with pytest.raises(ValueError):
        Multigraph.from_edges(3, [(0, 1, 1)])          # disconnected
    with pytest.raises(ValueError):
        Multigraph.from_edges(3, [(0, 0, 1), (0, 1, 1), (1, 2, 1)])  # loop
    with pytest.raises(ValueError):
        Multigraph.from_edges(2, [(0, 1, 0)])          # zero multiplicity
    with pytest.raises(ValueError):
        Multigraph.from_edges(2, [(0, 3, 1)])          # index out of range


def test_multigraph_basics(m322):
    assert m322.vertex_count == 3
    assert m322.n == 2
    assert m322.edge_count == 7
    assert m322.genus == 5
    assert m322.degree_sequence() == (5, 5, 4)
    rows = m322.laplacian_rows()
    assert rows == ((5, -3, -2), (-3, 5, -2), (-2, -2, 4))
    assert all(sum(r) == 0 for r in rows)


def test_builders():
    assert Multigraph.complete(4).edge_count == 6
    assert Multigraph.path(4).edge_count == 3
    assert Multigraph.cycle(4).edge_count == 4
    assert Multigraph.cycle(4).genus == 1


def test_laplacian_lattice_and_canonical(k3, m322):
    L = laplacian_lattice(k3)
    assert L.rows == ((2, -1, -1), (-1, 2, -1))
    assert canonical_divisor(k3) == (0, 0, 0)
    assert canonical_divisor(m322) == (3, 3, 2)
    assert degree(canonical_divisor(m322)) == 2 * m322.genus - 2


def test_spanning_tree_counts(k3, m322):
    assert spanning_tree_count(k3) == 3
    assert spanning_tree_count(m322) == 16
    assert spanning_tree_count(Multigraph.complete(4)) == 16
    assert spanning_tree_count(Multigraph.complete(5)) == 125
    assert spanning_tree_count(Multigraph.path(4)) == 1


def test_tree_count_equals_picard(corpus):
    for name, G in corpus[:12]:
        L = laplacian_lattice(G)
        assert L.picard_cardinality() == spanning_tree_count(G), name


def test_acyclic_orientation_and_cyclic_order_counts(k3, m322):
    # K3: two cyclic orders of three vertices
    assert acyclic_orientations_unique_source(k3) == 2
    assert cyclic_order_count(k3) == 2
    # multiplicities do not change the counts, adjacency does
    assert acyclic_orientations_unique_source(m322) == 2
    assert cyclic_order_count(m322) == 2
    p4 = Multigraph.path(4)
    assert acyclic_orientations_unique_source(p4) == \
        cyclic_order_count(p4) == 1
    k4 = Multigraph.complete(4)
    assert acyclic_orientations_unique_source(k4) == \
        cyclic_order_count(k4) == 6


def test_connected_simple_graph_counts():
    assert len(list(connected_simple_graphs(2))) == 1
    assert len(list(connected_simple_graphs(3))) == 2
    assert len(list(connected_simple_graphs(4))) == 6
    assert len(list(connected_simple_graphs(5))) == 21


def test_random_multigraph_contract():
    rng = random.Random(3)
    for _ in range(25):
        G = random_connected_multigraph(rng, 4, 10)
        assert 2 <= G.vertex_count <= 4
        assert G.edge_count <= 10
        assert G.genus >= 0


def test_regular_digraph():
    D = RegularDigraph.from_arcs(3, [(0, 1, 2), (1, 2, 2), (2, 0, 2),
                                     (1, 0, 1), (2, 1, 1), (0, 2, 1)])
    rows = D.laplacian_rows()
    assert all(sum(r) == 0 for r in rows)
    assert D.degree_sequence() == (3, 3, 3)
    with pytest.raises(ValueError):
        # out-degree 2 but in-degree 1 at vertex 0
        RegularDigraph.from_arcs(3, [(0, 1, 1), (0, 2, 1), (1, 2, 1),
                                     (2, 0, 1)])


def test_parsing_roundtrip(m322):
    obj = m322.to_json_dict()
    G = graph_from_json_dict(json.loads(json.dumps(obj)))
    assert G.edge_list() == m322.edge_list()
    text = "vertices 3\n0 1 3\n0 2 2\n1 2 2\n"
    assert graph_from_text(text).edge_list() == m322.edge_list()
    assert graph_from_text("0 1\n1 2").edge_count == 2
