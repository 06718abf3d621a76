"""Extremal point enumeration, genus invariants, reflection/uniformity
classification and the canonical point construction.

Extremal points are the local degree minima of the Sigma region.  For a
graph or regular-digraph Laplacian lattice they all arise, up to lattice
translation, from vertex orders: each order pi contributes the vector
whose k-th coordinate is minus the number of arcs into k from vertices
placed earlier, shifted by the all-ones vector.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .core import BudgetExceeded, LatticeBasis, degree, project_H0
from .geometry import is_extremal, verify_critical
from .graphs import Multigraph, RegularDigraph, laplacian_lattice


class Permutation:
    """A vertex order: images[i] is the vertex in position i."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError("not a permutation of 0..n")
        self.images = images

    def __iter__(self):
        return iter(self.images)

    def __len__(self):
        return len(self.images)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return "Permutation(%r)" % (self.images,)

    def opposite(self) -> "Permutation":
        """Reverse all positions except the last, which must hold the
        largest vertex (the textbook opposite-order convention)."""
        n = len(self.images) - 1
        if self.images[-1] != n:
            raise ValueError("opposite() requires the largest vertex last")
        return Permutation(tuple(reversed(self.images[:-1])) + (n,))

    def reversed_order(self) -> "Permutation":
        """Full positional reversal; the exact pairing partner for the
        degree-sum identity (see reflection_pairing)."""
        return Permutation(self.images[::-1])

    def cyclic_shift(self, j: int = 1) -> "Permutation":
        j %= len(self.images)
        return Permutation(self.images[j:] + self.images[:j])

    @staticmethod
    def all_orders(k: int):
        for p in itertools.permutations(range(k)):
            yield Permutation(p)


def nu_of_permutation(Q, pi):
    """The order vector of pi for Laplacian matrix Q.

    Coordinate k is minus the total arc multiplicity into k from vertices
    earlier in the order; since Q[j][k] is minus that multiplicity for
    j != k, this is a plain running sum over Q entries.
    """
    order = tuple(pi)
    k = len(order)
    if len(Q) != k or any(len(r) != k for r in Q):
        raise ValueError("Laplacian size does not match the order")
    nu = [0] * k
    for pos, v in enumerate(order):
        nu[v] = sum(Q[order[i]][v] for i in range(pos))
    return tuple(nu)


@dataclass(frozen=True)
class ExtremalClass:
    representative: tuple  # lexicographically least known member
    degree: int
    members: tuple  # distinct known members of the class, sorted

    def to_json_dict(self):
        return {
            "representative": list(self.representative),
            "degree": self.degree,
            "members": [list(m) for m in self.members],
        }


@dataclass
class ExtremalSet:
    """All extremal classes of a lattice, one entry per class modulo L."""

    lattice: LatticeBasis
    classes: tuple
    source: str  # "graphical", "digraph", "scan", "extension"
    reflection_vector: Optional[tuple] = field(default=None)
    # zero-sum generator family (Laplacian rows, or an A2 digraph basis)
    # anchoring the simplicial decomposition; None for bare scans
    q_rows: Optional[tuple] = field(default=None)

    @property
    def class_count(self) -> int:
        return len(self.classes)

    @property
    def representatives(self):
        return tuple(c.representative for c in self.classes)

    @property
    def degrees(self):
        return tuple(c.degree for c in self.classes)

    @property
    def g_min(self) -> int:
        return min(-c.degree + 1 for c in self.classes)

    @property
    def g_max(self) -> int:
        return max(-c.degree + 1 for c in self.classes)

    @property
    def uniform(self) -> bool:
        return self.g_min == self.g_max

    def critical_points(self):
        """Degree-0 projections of the class representatives."""
        return tuple(project_H0(c.representative) for c in self.classes)

    def to_json_dict(self):
        out = {
            "classes": [c.to_json_dict() for c in self.classes],
            "degrees": list(self.degrees),
            "class_count": self.class_count,
            "g_min": self.g_min,
            "g_max": self.g_max,
            "uniform": self.uniform,
            "source": self.source,
        }
        if self.reflection_vector is not None:
            out["reflection_vector"] = [str(t) for t in self.reflection_vector]
        return out


def _group_into_classes(L: LatticeBasis, vectors):
    """Group vectors by coset; one ExtremalClass per coset, lex-min rep."""
    buckets = {}
    for v in vectors:
        buckets.setdefault(L.reduce(v), set()).add(tuple(v))
    classes = []
    for key in sorted(buckets):
        members = tuple(sorted(buckets[key]))
        classes.append(
            ExtremalClass(
                representative=members[0],
                degree=degree(members[0]),
                members=members,
            )
        )
    classes.sort(key=lambda c: c.representative)
    return tuple(classes)


def extremal_set_graphical(G, verify: Optional[bool] = None,
                           node_budget=2_000_000) -> ExtremalSet:
    """Extremal classes of a Laplacian lattice via order enumeration.

    For undirected multigraphs every order vector (plus all-ones) is
    extremal; for regular digraphs some may fail and are filtered out,
    which still yields the complete class list because every critical
    point arises from some order.
    """
    Q = G.laplacian_rows()
    L = laplacian_lattice(G)
    k = G.vertex_count
    one = (1,) * k
    vectors = []
    for order in itertools.permutations(range(k)):
        nu = nu_of_permutation(Q, order)
        vectors.append(tuple(a + b for a, b in zip(nu, one)))
    classes = _group_into_classes(L, vectors)
    directed = isinstance(G, RegularDigraph)
    if directed:
        classes = tuple(
            c for c in classes if is_extremal(L, c.representative, node_budget)
        )
        source = "digraph"
    else:
        if verify is None:
            verify = True
        if verify:
            for c in classes:
                if not is_extremal(L, c.representative, node_budget):
                    raise RuntimeError(
                        "order enumeration produced a non-extremal class "
                        "representative %r" % (c.representative,)
                    )
        source = "graphical"
    if not classes:
        raise RuntimeError("no extremal classes found; lattice input invalid?")
    return ExtremalSet(lattice=L, classes=classes, source=source,
                       q_rows=tuple(tuple(r) for r in Q))


def _covering_upper_bound(L: LatticeBasis) -> Fraction:
    """A sound upper bound on the covering radius of L.

    Corner bound: every point translates into the fundamental
    parallelepiped of the HNF rows, and the distance to the origin at any
    point of that parallelepiped is at most the max over its corners of
    the max coordinate (convexity of the max).  Independently, the index
    V of L makes V * (full zero-sum lattice) a sub-lattice of L, whose
    covering radius is V*n/(n+1).
    """
    n = L.n
    best = Fraction(0)
    for subset in itertools.product((0, 1), repeat=n):
        corner = [0] * L.dim
        for take, row in zip(subset, L.hnf):
            if take:
                for j in range(L.dim):
                    corner[j] += row[j]
        best = max(best, Fraction(max(corner)))
    index_bound = Fraction(L.picard_cardinality() * n, n + 1)
    return min(best, index_bound)


def extremal_set_general(L: LatticeBasis, node_budget=2_000_000) -> ExtremalSet:
    """Extremal classes by direct degree-band scan; intended for n <= 3.

    Any extremal vector has degree in [1 - g_upper, n]: its degree is
    (n+1)(1 - h) for the height h of the matching critical point, with
    1/(n+1) <= h <= Cov(L), and g_upper = (n+1)*Cov_ub - n for a sound
    covering bound Cov_ub.  Scanning one canonical representative per
    class and degree decides everything, since extremality is invariant
    under lattice translation.
    """
    if L.n > 3:
        raise BudgetExceeded("general extremal scan is limited to n <= 3")
    cov_ub = _covering_upper_bound(L)
    g_upper = (L.n + 1) * cov_ub - L.n
    floor = 1 - int(g_upper)
    found = []
    for d in range(L.n, floor - 1, -1):
        for rep in L.class_representatives(d):
            if is_extremal(L, rep, node_budget):
                found.append(rep)
    if not found:
        raise RuntimeError("scan found no extremal classes; bound bug?")
    classes = _group_into_classes(L, found)
    return ExtremalSet(lattice=L, classes=classes, source="scan")


# -- classification -------------------------------------------------------------


def _critical_fracs(L: LatticeBasis, extremal: ExtremalSet):
    """Canonical (mod L) forms of each class's critical point."""
    return [L.fractional_part(c) for c in extremal.critical_points()]


def _valid_reflection_vectors(L: LatticeBasis, crit_fracs):
    """All translations t with -Crit = Crit + t modulo L, sorted.

    If any t works, then -c_a = c_b + t for some classes a, b, so trying
    every candidate -(c_a + c_b) is exhaustive.  Symmetric lattices can
    admit several valid t (any translation stabilising the critical
    classes composes with one valid t to give another).
    """
    crit_set = set(crit_fracs)
    neg_set = {L.fractional_part(tuple(-x for x in c)) for c in crit_fracs}
    candidates = set()
    for ca in crit_fracs:
        for cb in crit_fracs:
            t = L.fractional_part(tuple(-(a + b) for a, b in zip(ca, cb)))
            candidates.add(t)
    valid = []
    for t in sorted(candidates):
        shifted = {
            L.fractional_part(tuple(a + b for a, b in zip(c, t)))
            for c in crit_set
        }
        if shifted == neg_set:
            valid.append(t)
    return valid


def _pairing_for(L: LatticeBasis, crit_fracs, t):
    """Involution on class indices induced by the translation t, or None."""
    index_of = {c: i for i, c in enumerate(crit_fracs)}
    pairing = {}
    for i, c in enumerate(crit_fracs):
        target = L.fractional_part(tuple(-(a + b) for a, b in zip(c, t)))
        j = index_of.get(target)
        if j is None:
            return None
        pairing[i] = j
    if any(pairing[pairing[i]] != i for i in pairing):
        return None
    return pairing


def reflection_pairing(extremal: ExtremalSet, L: LatticeBasis):
    """(t, pairing) for a reflection-invariant lattice, else (None, None).

    pairing[i] = j means negation carries class i onto class j shifted by
    t; the map is an involution on class indices.  When several t are
    valid the lexicographically least one is reported.
    """
    crit_fracs = _critical_fracs(L, extremal)
    for t in _valid_reflection_vectors(L, crit_fracs):
        pairing = _pairing_for(L, crit_fracs, t)
        if pairing is not None:
            return t, pairing
    return None, None


def _resolve_q_rows(L: LatticeBasis, extremal: ExtremalSet):
    """A zero-sum generator family for the simplicial decomposition.

    Graph and digraph extremal sets carry their Laplacian rows.  For bare
    lattices we can synthesise one in rank 1 (the generator and its
    negative) and rank 2 (the digraph basis, which every full-rank
    sub-lattice of A_2 admits).  Higher-rank bare scans have no canonical
    family, so the strong reflection test is unavailable there.
    """
    if extremal.q_rows is not None:
        return extremal.q_rows
    if L.n == 1:
        g = L.hnf[0]
        return (g, tuple(-x for x in g))
    if L.n == 2:
        from .a2 import digraph_basis

        return digraph_basis(L)
    return None


def voronoi_cell_vertices(L: LatticeBasis, extremal: ExtremalSet,
                          q_rows=None, node_budget=2_000_000):
    """Critical points that are vertices of the origin's Voronoi cell.

    Read off the simplicial decomposition induced by the zero-sum
    generator family q_rows: every order of the generators spans a
    simplex of partial sums, and when the order's min-vector is extremal
    its critical point belongs to the cells of exactly those partial
    sums.  Collecting the translates by the negated partial sums yields
    the vertices incident to the origin.  A direct metric test (every
    critical translate at distance exactly h from the origin) would be
    wrong here: a lattice point can be tight on a facet shared with a
    partial sum without the simplex being incident to the origin.
    """
    if q_rows is None:
        q_rows = _resolve_q_rows(L, extremal)
    if q_rows is None:
        raise ValueError(
            "no generator family available; supply q_rows for rank > 2 scans"
        )
    k = L.dim
    if len(q_rows) != k or any(len(r) != k for r in q_rows):
        raise ValueError("q_rows must be %d vectors of length %d" % (k, k))
    if any(sum(r) != 0 for r in q_rows):
        raise ValueError("q_rows must be zero-sum")
    if tuple(sum(col) for col in zip(*q_rows)) != (0,) * k:
        raise ValueError("q_rows must have zero column sums")
    for r in q_rows:
        if not L.contains(r):
            raise ValueError("q_rows entry %r is not a lattice vector" % (r,))
    keys = {}
    for cls in extremal.classes:
        c = project_H0(cls.representative)
        ok, _ = verify_critical(L, c, node_budget)
        if not ok:
            raise RuntimeError(
                "class representative %r is not critical" % (cls.representative,)
            )
        keys[L.reduce(cls.representative)] = Fraction(k - cls.degree, k)
    one = (1,) * k
    out = set()
    for order in itertools.permutations(range(k)):
        nu = nu_of_permutation(q_rows, order)
        h = keys.get(L.reduce(tuple(a + b for a, b in zip(nu, one))))
        if h is None:
            continue
        c = project_H0(nu)
        partial = [0] * k
        for step in range(k):
            vertex = tuple(ci - pi for ci, pi in zip(c, partial))
            if max(vertex) != h:
                raise RuntimeError("partial sum not tight at its own order")
            out.add(vertex)
            row = q_rows[order[step]]
            for j in range(k):
                partial[j] += row[j]
    return frozenset(out)


def _strongly_reflection_invariant(L, extremal, node_budget):
    """Exact set equality -V = V + t on the origin cell's critical vertices.

    Returns None when no generator family anchors the cell (bare scans in
    rank 3+).
    """
    if _resolve_q_rows(L, extremal) is None:
        return None
    vertex_set = voronoi_cell_vertices(L, extremal, node_budget=node_budget)
    neg = {tuple(-x for x in v) for v in vertex_set}
    for u in sorted(vertex_set):
        for w in sorted(vertex_set):
            t = tuple(-(a + b) for a, b in zip(u, w))
            if {tuple(a + b for a, b in zip(v, t)) for v in vertex_set} == neg:
                return True
    return False


def classify(extremal: ExtremalSet, L: Optional[LatticeBasis] = None,
             node_budget=2_000_000):
    """Uniformity and reflection flags for an extremal set.

    Returns {"uniform", "reflection_invariant",
    "strongly_reflection_invariant", "t"} where t is the reflection
    translation as a tuple of exact rationals (None if not reflection
    invariant).  The strong flag compares the critical vertex set of the
    origin's cell with its own negation.
    """
    if L is None:
        L = extremal.lattice
    t, pairing = reflection_pairing(extremal, L)
    refl = t is not None
    strong = False  # strongly invariant implies reflection invariant
    if refl:
        extremal.reflection_vector = t
        strong = _strongly_reflection_invariant(L, extremal, node_budget)
    return {
        "uniform": extremal.uniform,
        "reflection_invariant": refl,
        "strongly_reflection_invariant": strong,
        "t": t,
    }


def canonical_point(extremal: ExtremalSet, L: Optional[LatticeBasis] = None):
    """The canonical divisor-like point K of a reflection-invariant lattice.

    Pair each class with its reflection partner, keep the pairs of maximal
    degree sum, and take K = -(most frequent exact member sum) over those
    pairs, ties broken by the lexicographically least sum.  The frequency
    rule makes the choice basis-independent, and on Laplacian lattices it
    recovers (vertex degree - 2) on the nose: member sums concentrate on
    the order/reversed-order pairing.
    """
    if L is None:
        L = extremal.lattice
    crit_fracs = _critical_fracs(L, extremal)
    best = None  # (-count, sum) minimised; counts never mix across t
    for t in _valid_reflection_vectors(L, crit_fracs):
        pairing = _pairing_for(L, crit_fracs, t)
        if pairing is None:
            continue
        pair_degree = {
            i: extremal.classes[i].degree + extremal.classes[pairing[i]].degree
            for i in pairing
        }
        top = max(pair_degree.values())
        counter = Counter()
        for i, j in pairing.items():
            if pair_degree[i] != top:
                continue
            for a in extremal.classes[i].members:
                for b in extremal.classes[j].members:
                    counter[tuple(x + y for x, y in zip(a, b))] += 1
        for s, cnt in counter.items():
            key = (-cnt, s)
            if best is None or key < best:
                best = key
    if best is None:
        raise ValueError("lattice is not reflection invariant; no pairing")
    return tuple(-x for x in best[1])
