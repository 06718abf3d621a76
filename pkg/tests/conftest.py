import random

import pytest

from rrlattice.core import LatticeBasis
from rrlattice.extremal import extremal_set_graphical
from rrlattice.graphs import (Multigraph, connected_simple_graphs,
                              laplacian_lattice, random_connected_multigraph)


@pytest.fixture(scope="session")
def k3():
    return Multigraph.complete(3)


@pytest.fixture(scope="session")
def p3():
    return Multigraph.path(3)


@pytest.fixture(scope="session")
def m322():
    # triangle with edge multiplicities 3, 2, 2; genus 5
    return Multigraph.from_edges(3, [(0, 1, 3), (0, 2, 2), (1, 2, 2)])


@pytest.fixture(scope="session")
def k3_lattice(k3):
    return laplacian_lattice(k3)


@pytest.fixture(scope="session")
def m322_lattice(m322):
    return laplacian_lattice(m322)


@pytest.fixture(scope="session")
def k3_extremal(k3):
    return extremal_set_graphical(k3)


@pytest.fixture(scope="session")
def m322_extremal(m322):
    return extremal_set_graphical(m322)


@pytest.fixture(scope="session")
def skew56_lattice():
    # uniform, reflection invariant, not strongly so; genus 13
    return LatticeBasis([(7, -7, 0), (-3, 11, -8)])


@pytest.fixture(scope="session")
def multitree_lattice():
    # two paths of multiplicities 3 and 2 glued at the centre vertex
    return LatticeBasis([(3, 0, -3), (0, 2, -2)])


@pytest.fixture(scope="session")
def l2_lattice():
    # the rank-2 start of the non-graphical extension family
    return LatticeBasis([(2, -2, 0), (-1, 3, -2)])


def corpus_graphs():
    """All connected simple graphs on 2..5 vertices plus 20 seeded random
    multigraphs on <= 4 vertices with <= 10 edges."""
    graphs = []
    for k in range(2, 6):
        for i, G in enumerate(connected_simple_graphs(k)):
            graphs.append(("simple%d_%d" % (k, i), G))
    rng = random.Random(20240817)
    for i in range(20):
        graphs.append(("multi_%d" % i,
                       random_connected_multigraph(rng, 4, 10)))
    return graphs


@pytest.fixture(scope="session")
def corpus():
    return corpus_graphs()


@pytest.fixture(scope="session")
def small_corpus():
    """The cheap half: every graph on <= 4 vertices."""
    return [(name, G) for name, G in corpus_graphs()
            if G.vertex_count <= 4][:20]
