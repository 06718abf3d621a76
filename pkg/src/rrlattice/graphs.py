"""Multigraphs, regular digraphs, their Laplacian lattices, and the
combinatorial counts tied to critical classes (spanning trees, acyclic
orientations with unique source, cyclic orders).
"""

from __future__ import annotations

import itertools
import json
from typing import Iterable, Sequence

from .core import BudgetExceeded, LatticeBasis, _bareiss_det


def _check_square(mat, k):
    if len(mat) != k or any(len(r) != k for r in mat):
        raise ValueError("expected a %dx%d matrix" % (k, k))


def _connected(mat, k) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in range(k):
            if mat[u][v] > 0 and v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == k


class Multigraph:
    """A finite connected multigraph without loops.

    edge_mult is a symmetric nonnegative integer matrix with zero diagonal;
    entry (i, j) counts parallel edges between i and j.
    """

    def __init__(self, vertex_count: int, edge_mult: Sequence[Sequence[int]]):
        if vertex_count < 2:
            raise ValueError("need at least 2 vertices")
        mat = tuple(tuple(int(x) for x in row) for row in edge_mult)
        _check_square(mat, vertex_count)
        for i in range(vertex_count):
            if mat[i][i] != 0:
                raise ValueError("loops are not allowed")
            for j in range(vertex_count):
                if mat[i][j] < 0:
                    raise ValueError("negative edge multiplicity")
                if mat[i][j] != mat[j][i]:
                    raise ValueError("edge multiplicities must be symmetric")
        if not _connected(mat, vertex_count):
            raise ValueError("graph must be connected")
        self.vertex_count = vertex_count
        self.edge_mult = mat

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable) -> "Multigraph":
        """Edges as (i, j) or (i, j, mult) items; multiplicities add up."""
        mat = [[0] * vertex_count for _ in range(vertex_count)]
        for e in edges:
            if len(e) == 2:
                i, j, m = e[0], e[1], 1
            else:
                i, j, m = e
            if i == j:
                raise ValueError("loops are not allowed")
            if not (0 <= i < vertex_count and 0 <= j < vertex_count):
                raise ValueError("edge (%d, %d) out of range" % (i, j))
            mat[i][j] += m
            mat[j][i] += m
        return cls(vertex_count, mat)

    @classmethod
    def complete(cls, vertex_count: int) -> "Multigraph":
        return cls.from_edges(
            vertex_count, itertools.combinations(range(vertex_count), 2)
        )

    @classmethod
    def path(cls, vertex_count: int) -> "Multigraph":
        return cls.from_edges(
            vertex_count, [(i, i + 1) for i in range(vertex_count - 1)]
        )

    @classmethod
    def cycle(cls, vertex_count: int) -> "Multigraph":
        edges = [(i, i + 1) for i in range(vertex_count - 1)]
        edges.append((0, vertex_count - 1))
        return cls.from_edges(vertex_count, edges)

    # -- basic data -----------------------------------------------------------

    def __repr__(self):
        return "Multigraph(%d, edges=%r)" % (self.vertex_count, self.edge_list())

    def edge_list(self):
        out = []
        for i in range(self.vertex_count):
            for j in range(i + 1, self.vertex_count):
                if self.edge_mult[i][j]:
                    out.append((i, j, self.edge_mult[i][j]))
        return out

    @property
    def n(self) -> int:
        return self.vertex_count - 1

    @property
    def edge_count(self) -> int:
        return sum(m for _, _, m in self.edge_list())

    def vertex_degree(self, v: int) -> int:
        return sum(self.edge_mult[v])

    def degree_sequence(self):
        return tuple(self.vertex_degree(v) for v in range(self.vertex_count))

    @property
    def genus(self) -> int:
        return self.edge_count - self.n

    def laplacian_rows(self):
        k = self.vertex_count
        rows = []
        for i in range(k):
            row = [-self.edge_mult[i][j] for j in range(k)]
            row[i] = self.vertex_degree(i)
            rows.append(tuple(row))
        return tuple(rows)

    def to_json_dict(self):
        return {
            "vertices": self.vertex_count,
            "edges": [list(e) for e in self.edge_list()],
        }


class RegularDigraph:
    """A digraph whose every vertex has in-degree equal to out-degree.

    arc_mult[i][j] counts arcs from i to j.  The underlying undirected
    graph must be connected.
    """

    def __init__(self, vertex_count: int, arc_mult: Sequence[Sequence[int]]):
        if vertex_count < 2:
            raise ValueError("need at least 2 vertices")
        mat = tuple(tuple(int(x) for x in row) for row in arc_mult)
        _check_square(mat, vertex_count)
        for i in range(vertex_count):
            if mat[i][i] != 0:
                raise ValueError("loops are not allowed")
            if any(x < 0 for x in mat[i]):
                raise ValueError("negative arc multiplicity")
        for i in range(vertex_count):
            if sum(mat[i]) != sum(mat[j][i] for j in range(vertex_count)):
                raise ValueError("vertex %d has in-degree != out-degree" % i)
        undirected = [
            [mat[i][j] + mat[j][i] for j in range(vertex_count)]
            for i in range(vertex_count)
        ]
        if not _connected(undirected, vertex_count):
            raise ValueError("underlying graph must be connected")
        self.vertex_count = vertex_count
        self.arc_mult = mat

    @classmethod
    def from_arcs(cls, vertex_count: int, arcs: Iterable) -> "RegularDigraph":
        mat = [[0] * vertex_count for _ in range(vertex_count)]
        for a in arcs:
            if len(a) == 2:
                i, j, m = a[0], a[1], 1
            else:
                i, j, m = a
            if not (0 <= i < vertex_count and 0 <= j < vertex_count):
                raise ValueError("arc (%d, %d) out of range" % (i, j))
            mat[i][j] += m
        return cls(vertex_count, mat)

    def __repr__(self):
        return "RegularDigraph(%d, arcs=%r)" % (self.vertex_count, self.arc_list())

    def arc_list(self):
        out = []
        for i in range(self.vertex_count):
            for j in range(self.vertex_count):
                if self.arc_mult[i][j]:
                    out.append((i, j, self.arc_mult[i][j]))
        return out

    @property
    def n(self) -> int:
        return self.vertex_count - 1

    def vertex_degree(self, v: int) -> int:
        return sum(self.arc_mult[v])

    def degree_sequence(self):
        return tuple(self.vertex_degree(v) for v in range(self.vertex_count))

    def laplacian_rows(self):
        k = self.vertex_count
        rows = []
        for i in range(k):
            row = [-self.arc_mult[i][j] for j in range(k)]
            row[i] = self.vertex_degree(i)
            rows.append(tuple(row))
        return tuple(rows)

    def to_json_dict(self):
        return {
            "vertices": self.vertex_count,
            "arcs": [list(a) for a in self.arc_list()],
        }


def laplacian_lattice(G) -> LatticeBasis:
    """Lattice spanned by the Laplacian rows (the first n of them).

    Connectivity, enforced by the graph constructors, makes this a
    full-rank sub-lattice of the zero-sum lattice.
    """
    rows = G.laplacian_rows()
    return LatticeBasis(rows[:-1])


def canonical_divisor(G):
    """(degree - 2) at every vertex."""
    return tuple(d - 2 for d in G.degree_sequence())


def spanning_tree_count(G: Multigraph) -> int:
    """Exact spanning tree count via the reduced-Laplacian determinant."""
    rows = G.laplacian_rows()
    reduced = [row[1:] for row in rows[1:]]
    return abs(_bareiss_det(reduced))


def acyclic_orientations_unique_source(G: Multigraph, source: int = 0) -> int:
    """Acyclic orientations whose only in-degree-0 vertex is `source`.

    Parallel edges must share a direction in any acyclic orientation, so
    the count only depends on the simple support of G.
    """
    k = G.vertex_count
    edges = [(i, j) for i, j, _ in G.edge_list()]
    if len(edges) > 22:
        raise BudgetExceeded("too many edges for orientation enumeration")
    count = 0
    for mask in range(1 << len(edges)):
        indeg = [0] * k
        succ = [[] for _ in range(k)]
        for idx, (i, j) in enumerate(edges):
            if mask >> idx & 1:
                succ[i].append(j)
                indeg[j] += 1
            else:
                succ[j].append(i)
                indeg[i] += 1
        sources = [v for v in range(k) if indeg[v] == 0]
        if sources != [source]:
            continue
        # Kahn peeling for acyclicity
        order = list(sources)
        indeg = list(indeg)
        head = 0
        while head < len(order):
            u = order[head]
            head += 1
            for v in succ[u]:
                indeg[v] -= 1
                if indeg[v] == 0:
                    order.append(v)
        if len(order) == k:
            count += 1
    return count


def cyclic_order_count(G: Multigraph) -> int:
    """Equivalence classes of cyclic vertex orders.

    Two cyclic orders are elementary equivalent when they differ by
    swapping a consecutive pair of non-adjacent vertices (consecutive in
    the cyclic sense, including the wrap-around pair).  Orders are
    normalised with the last vertex fixed in final position, so there are
    n! of them.
    """
    k = G.vertex_count
    if k > 8:
        raise BudgetExceeded("factorial enumeration limited to 7 vertices")
    last = k - 1

    def normalize(word):
        idx = word.index(last)
        return word[idx + 1:] + word[:idx + 1]

    states = [
        normalize(tuple(p) + (last,))
        for p in itertools.permutations(range(k - 1))
    ]
    parent = {s: s for s in states}

    def find(s):
        while parent[s] != s:
            parent[s] = parent[parent[s]]
            s = parent[s]
        return s

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for s in states:
        for i in range(k):
            u, v = s[i], s[(i + 1) % k]
            if G.edge_mult[u][v] == 0:
                w = list(s)
                w[i], w[(i + 1) % k] = w[(i + 1) % k], w[i]
                union(s, normalize(tuple(w)))
    return len({find(s) for s in states})


# -- corpus helpers ------------------------------------------------------------


def _canonical_edge_key(k, edges):
    best = None
    vertices = range(k)
    for perm in itertools.permutations(vertices):
        key = tuple(sorted(tuple(sorted((perm[i], perm[j]))) for i, j in edges))
        if best is None or key < best:
            best = key
    return best


def connected_simple_graphs(vertex_count: int):
    """All connected simple graphs on exactly `vertex_count` vertices,
    one per isomorphism class (brute-force canonical form; fine for <= 6).
    """
    pairs = list(itertools.combinations(range(vertex_count), 2))
    seen = set()
    out = []
    for r in range(vertex_count - 1, len(pairs) + 1):
        for subset in itertools.combinations(pairs, r):
            mat = [[0] * vertex_count for _ in range(vertex_count)]
            for i, j in subset:
                mat[i][j] = mat[j][i] = 1
            if not _connected(mat, vertex_count):
                continue
            key = _canonical_edge_key(vertex_count, subset)
            if key in seen:
                continue
            seen.add(key)
            out.append(Multigraph(vertex_count, mat))
    return out


def random_connected_multigraph(rng, max_vertices: int = 4, max_edges: int = 10
                                ) -> Multigraph:
    """Random connected multigraph: a random spanning tree plus random
    extra parallel/new edges, capped at max_edges total multiplicity."""
    k = rng.randint(2, max_vertices)
    mat = [[0] * k for _ in range(k)]
    for v in range(1, k):
        u = rng.randrange(v)
        mat[u][v] += 1
        mat[v][u] += 1
    total = k - 1
    extra = rng.randint(0, max_edges - total)
    for _ in range(extra):
        i = rng.randrange(k)
        j = rng.randrange(k)
        while j == i:
            j = rng.randrange(k)
        mat[i][j] += 1
        mat[j][i] += 1
    return Multigraph(k, mat)


# -- parsing -------------------------------------------------------------------


def graph_from_json_dict(obj):
    """{"vertices": k, "edges": [[i,j,mult],...]} or "arcs" for digraphs."""
    k = obj["vertices"]
    if "arcs" in obj:
        return RegularDigraph.from_arcs(k, obj["arcs"])
    return Multigraph.from_edges(k, obj["edges"])


def graph_from_text(text: str):
    """Parse graph input: JSON object, or lines "i j mult" with an optional
    leading "vertices k" line (vertex count defaults to max index + 1)."""
    stripped = text.strip()
    if stripped.startswith("{"):
        return graph_from_json_dict(json.loads(stripped))
    edges = []
    k = None
    for line in stripped.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "vertices":
            k = int(parts[1])
            continue
        if len(parts) == 2:
            i, j, m = int(parts[0]), int(parts[1]), 1
        else:
            i, j, m = int(parts[0]), int(parts[1]), int(parts[2])
        edges.append((i, j, m))
    if k is None:
        k = max(max(i, j) for i, j, _ in edges) + 1
    return Multigraph.from_edges(k, edges)
