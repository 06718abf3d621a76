"""The chip-firing game on a multigraph, as executable semantics.

A configuration assigns an integer number of chips to every vertex; debt
is allowed.  Firing a vertex sends one chip along each incident edge, so
the chip vector moves by minus the corresponding Laplacian row and the
whole game happens inside a single coset of the Laplacian lattice.  That
makes the winnability question a rank computation: a configuration can be
cleared of debt by some firing sequence exactly when its divisor class
contains an effective representative.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import degree
from .graphs import Multigraph, canonical_divisor, laplacian_lattice
from .rank import linear_system_nonempty

__all__ = ["Configuration", "fire", "fire_script", "winnable", "kc_minus"]


@dataclass
class Configuration:
    """Chip counts on the vertices of a multigraph."""

    graph: Multigraph
    chips: tuple

    def __post_init__(self):
        self.chips = tuple(int(c) for c in self.chips)
        if len(self.chips) != self.graph.vertex_count:
            raise ValueError("chip vector length must match the vertex count")

    @property
    def degree(self) -> int:
        return degree(self.chips)

    @property
    def is_effective(self) -> bool:
        return all(c >= 0 for c in self.chips)

    def to_json_dict(self):
        return {"chips": list(self.chips), "graph": self.graph.to_json_dict()}


def fire(cfg: Configuration, v: int) -> Configuration:
    """Fire vertex v: it sends one chip along each incident edge."""
    if not 0 <= v < cfg.graph.vertex_count:
        raise ValueError("vertex index out of range")
    row = cfg.graph.laplacian_rows()[v]
    return Configuration(
        graph=cfg.graph,
        chips=tuple(c - q for c, q in zip(cfg.chips, row)),
    )


def fire_script(cfg: Configuration, script) -> Configuration:
    """Fire a sequence of vertices in order."""
    for v in script:
        cfg = fire(cfg, v)
    return cfg


def _solve_fraction_system(M, b):
    """Solve M x = b exactly by Gaussian elimination; M square invertible."""
    k = len(M)
    A = [[Fraction(M[i][j]) for j in range(k)] + [Fraction(b[i])]
         for i in range(k)]
    for col in range(k):
        piv = next(r for r in range(col, k) if A[r][col] != 0)
        A[col], A[piv] = A[piv], A[col]
        pv = A[col][col]
        A[col] = [x / pv for x in A[col]]
        for r in range(k):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return [A[i][k] for i in range(k)]


def _script_from_lattice_vector(G: Multigraph, delta):
    """Firing counts c with sum_i c_i * row_i(Q) = delta, min count zero.

    The counts are determined up to the all-ones kernel of the Laplacian;
    pinning the last count to zero and solving the reduced system (last
    row and column deleted) gives one integer solution, then shifting by
    the kernel normalises the minimum to zero.
    """
    k = G.vertex_count
    rows = G.laplacian_rows()
    M = [[rows[j][i] for j in range(k - 1)] for i in range(k - 1)]
    b = [delta[i] for i in range(k - 1)]
    sol = _solve_fraction_system(M, b)
    counts = []
    for x in sol:
        if x.denominator != 1:
            raise AssertionError("firing counts came out non-integer")
        counts.append(int(x))
    counts.append(0)
    check = [0] * k
    for i, c in enumerate(counts):
        for j in range(k):
            check[j] += c * rows[i][j]
    if tuple(check) != tuple(delta):
        raise AssertionError("firing count reconstruction failed")
    low = min(counts)
    return [c - low for c in counts]


def winnable(cfg: Configuration, node_budget=2_000_000):
    """Whether some firing sequence clears all debt, with a script.

    True exactly when the chip vector is equivalent to an effective
    divisor modulo the Laplacian lattice.  On success the returned script
    lists vertex indices (ascending, with repetition) whose firing
    transforms the configuration into that effective divisor; intermediate
    debt during the script is allowed by the rules.
    """
    L = laplacian_lattice(cfg.graph)
    ok, E = linear_system_nonempty(L, cfg.chips, node_budget)
    if not ok:
        return False, None
    delta = tuple(c - e for c, e in zip(cfg.chips, E))
    counts = _script_from_lattice_vector(cfg.graph, delta)
    script = []
    for v, c in enumerate(counts):
        script.extend([v] * c)
    return True, script


def kc_minus(cfg: Configuration) -> Configuration:
    """The complementary configuration against the canonical divisor.

    Vertex v holds deg(v) - 2 - chips[v] chips afterwards; applying the
    operation twice returns the original configuration.
    """
    K = canonical_divisor(cfg.graph)
    return Configuration(
        graph=cfg.graph,
        chips=tuple(k - c for k, c in zip(K, cfg.chips)),
    )
