"""Exact integer lattice core.

Everything in here works over plain Python integers and fractions.Fraction,
so results are exact.  A lattice is given by n basis rows of length n+1,
each summing to zero (a full-rank sub-lattice of the zero-sum root lattice
inside Z^(n+1)).  Divisors are plain tuples of ints of length n+1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence


class BudgetExceeded(RuntimeError):
    """A search or enumeration outgrew its resource budget.

    Raised instead of returning a wrong or partial answer, and distinct
    from any legitimate return value (such as a rank of -1).
    """


Divisor = tuple  # tuple[int, ...], length n+1
RationalPoint = tuple  # tuple[Fraction, ...]


def degree(v) -> int:
    """Sum of coordinates."""
    return sum(v)


def deg_plus(v) -> int:
    """Sum of the positive coordinates."""
    return sum(x for x in v if x > 0)


def deg_minus(v) -> int:
    """Sum of magnitudes of the negative coordinates (a value >= 0)."""
    return -sum(x for x in v if x < 0)


def project_H0(v) -> RationalPoint:
    """Project v onto the zero-sum hyperplane along (1,1,...,1).

    Returns a tuple of Fractions; exact, never floats.
    """
    shift = Fraction(degree(v), len(v))
    return tuple(Fraction(x) - shift for x in v)


def as_divisor(v) -> Divisor:
    out = tuple(int(x) for x in v)
    if len(out) < 2:
        raise ValueError("divisor needs at least 2 coordinates")
    return out


@dataclass(frozen=True)
class LatticeBox:
    """An axis-aligned integer box, lower and upper bounds inclusive."""

    lower: tuple
    upper: tuple

    def __post_init__(self):
        if len(self.lower) != len(self.upper):
            raise ValueError("box bounds must have equal length")

    def is_empty(self) -> bool:
        return any(l > u for l, u in zip(self.lower, self.upper))


def _exact_floor(x) -> int:
    return math.floor(x)


def _exact_ceil(x) -> int:
    return math.ceil(x)


def _hnf_rows(rows):
    """Row-style Hermite normal form of an integer matrix.

    Returns (hnf, pivot_cols).  hnf has one row per pivot, pivots are
    positive, entries above a pivot are reduced into [0, pivot).
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    rank = 0
    pivots = []
    for col in range(ncols):
        while True:
            nz = [i for i in range(rank, nrows) if m[i][col] != 0]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda i: (abs(m[i][col]), i))
            i0 = nz[0]
            a = m[i0][col]
            for i in nz[1:]:
                q = m[i][col] // a
                if q:
                    m[i] = [x - q * y for x, y in zip(m[i], m[i0])]
        nz = [i for i in range(rank, nrows) if m[i][col] != 0]
        if not nz:
            continue
        i0 = nz[0]
        m[rank], m[i0] = m[i0], m[rank]
        if m[rank][col] < 0:
            m[rank] = [-x for x in m[rank]]
        pivots.append(col)
        rank += 1
        if rank == nrows:
            break
    # second pass: reduce entries above each pivot into [0, pivot)
    for r in range(rank - 1, -1, -1):
        col = pivots[r]
        piv = m[r][col]
        for i in range(r):
            q = m[i][col] // piv
            if q:
                m[i] = [x - q * y for x, y in zip(m[i], m[r])]
    return [tuple(r) for r in m[:rank]], pivots


def _bareiss_det(mat) -> int:
    """Exact determinant of a square integer matrix (fraction-free)."""
    a = [list(r) for r in mat]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_invariant_factors(mat):
    """Invariant factors d1 | d2 | ... of a square integer matrix.

    Plain textbook reduction; fine for the small matrices handled here.
    Zero factors are kept (they indicate rank deficiency).
    """
    a = [list(r) for r in mat]
    n = len(a)
    factors = []

    def find_pivot(t):
        best = None
        for i in range(t, n):
            for j in range(t, n):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        return best

    for t in range(n):
        while True:
            pos = find_pivot(t)
            if pos is None:
                factors.append(0)
                break
            i, j = pos
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
            piv = a[t][t]
            dirty = False
            for i in range(t + 1, n):
                q = a[i][t] // piv
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t] != 0:
                    dirty = True
            for j in range(t + 1, n):
                q = a[t][j] // piv
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j] != 0:
                    dirty = True
            if dirty:
                continue
            # pivot must divide every remaining entry for true SNF
            bad = None
            for i in range(t + 1, n):
                for j in range(t + 1, n):
                    if a[i][j] % piv != 0:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is not None:
                a[t] = [x + y for x, y in zip(a[t], a[bad])]
                continue
            factors.append(abs(piv))
            break
    return factors


class LatticeBasis:
    """A full-rank sub-lattice of the zero-sum lattice in Z^(n+1).

    Constructed from n integer rows of length n+1, each summing to zero
    and jointly of rank n.  The Hermite normal form is computed once and
    reused for membership tests, canonical coset representatives and the
    various coset searches.
    """

    def __init__(self, rows: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if not rows:
            raise ValueError("need at least one basis row")
        width = len(rows[0])
        if width < 2:
            raise ValueError("ambient dimension too small")
        if any(len(r) != width for r in rows):
            raise ValueError("ragged basis rows")
        if len(rows) != width - 1:
            raise ValueError(
                "expected %d rows for ambient dimension %d" % (width - 1, width)
            )
        for r in rows:
            if sum(r) != 0:
                raise ValueError("basis row %r does not sum to zero" % (r,))
        hnf, pivots = _hnf_rows(rows)
        if len(hnf) != width - 1:
            raise ValueError("basis rows are not linearly independent")
        self.rows = rows
        self.n = width - 1  # lattice rank
        self.dim = width  # ambient n+1
        self.hnf = tuple(hnf)
        self.pivot_cols = tuple(pivots)
        free = [c for c in range(width) if c not in pivots]
        self.free_col = free[0]
        self._pivot_entries = tuple(self.hnf[i][pivots[i]] for i in range(self.n))
        self._caches = {}

    # -- basics ------------------------------------------------------------

    def __repr__(self):
        return "LatticeBasis(%r)" % (list(self.rows),)

    def reduce(self, v) -> Divisor:
        """Canonical representative of v modulo the lattice.

        Reduction by the HNF rows leaves each pivot coordinate in
        [0, pivot).  Two vectors are congruent iff they reduce equally.
        """
        w = list(v)
        dim = self.dim
        for i in range(self.n):
            col = self.pivot_cols[i]
            piv = self._pivot_entries[i]
            q = w[col] // piv
            if q:
                row = self.hnf[i]
                for j in range(col, dim):
                    w[j] -= q * row[j]
        return tuple(w)

    def contains(self, v) -> bool:
        """Exact membership test."""
        if len(v) != self.dim or sum(v) != 0:
            return False
        return all(x == 0 for x in self.reduce(v))

    def same_lattice(self, other: "LatticeBasis") -> bool:
        return self.dim == other.dim and all(
            other.contains(r) for r in self.rows
        ) and all(self.contains(r) for r in other.rows)

    def coords(self, x):
        """Coefficients of x over the HNF rows, as exact Fractions.

        x must lie in the rational span (any zero-sum vector does).
        """
        if sum(Fraction(t) for t in x) != 0:
            raise ValueError("vector is not in the zero-sum hyperplane")
        rem = [Fraction(t) for t in x]
        out = []
        for i in range(self.n):
            col = self.pivot_cols[i]
            ci = rem[col] / self._pivot_entries[i]
            out.append(ci)
            if ci:
                row = self.hnf[i]
                for j in range(self.dim):
                    rem[j] -= ci * row[j]
        if any(rem):
            raise ValueError("vector is not in the rational span of the basis")
        return tuple(out)

    def from_coords(self, coeffs) -> tuple:
        out = [0] * self.dim
        for c, row in zip(coeffs, self.hnf):
            if c:
                for j in range(self.dim):
                    out[j] += c * row[j]
        return tuple(out)

    def fractional_part(self, x) -> RationalPoint:
        """Canonical representative of a rational zero-sum point modulo L.

        Uses the half-open fundamental parallelepiped over the HNF rows,
        so two rational points are congruent mod L iff the results match.
        """
        c = self.coords(x)
        frac = [ci - _exact_floor(ci) for ci in c]
        shift = self.from_coords(frac)
        return tuple(Fraction(t) for t in shift)

    # -- group invariants ----------------------------------------------------

    def zero_sum_coord_matrix(self):
        """Rows rewritten over the standard zero-sum basis e_i - e_(i+1).

        The coefficient of e_i - e_(i+1) is the i-th prefix sum.
        """
        out = []
        for r in self.rows:
            acc = 0
            pref = []
            for x in r[:-1]:
                acc += x
                pref.append(acc)
            out.append(pref)
        return out

    def picard_cardinality(self) -> int:
        """Index of the lattice inside the full zero-sum lattice."""
        if "pic" not in self._caches:
            det = _bareiss_det(self.zero_sum_coord_matrix())
            self._caches["pic"] = abs(det)
        return self._caches["pic"]

    def picard_factors(self):
        """Cyclic factors of the quotient group, ascending divisibility.

        Trivial factors (= 1) are dropped; an empty tuple means the
        quotient is trivial.
        """
        if "snf" not in self._caches:
            fac = smith_invariant_factors(self.zero_sum_coord_matrix())
            self._caches["snf"] = tuple(f for f in fac if f != 1)
        return self._caches["snf"]

    # -- class representatives -------------------------------------------------

    def class_representatives(self, deg: int) -> Iterator[Divisor]:
        """All canonical coset representatives of a fixed degree.

        Yields exactly picard_cardinality() vectors; each is fixed by
        reduce() and they enumerate the divisor classes of that degree.
        """
        ranges = [range(p) for p in self._pivot_entries]

        def rec(i, acc):
            if i == self.n:
                v = [0] * self.dim
                for col, r in zip(self.pivot_cols, acc):
                    v[col] = r
                v[self.free_col] = deg - sum(acc)
                yield tuple(v)
                return
            for r in ranges[i]:
                yield from rec(i + 1, acc + [r])

        yield from rec(0, [])

    # -- coset searches ---------------------------------------------------------
    #
    # The searches below all walk integer combinations c of the HNF rows
    # added to a base vector.  Because the HNF is in row echelon form the
    # value at pivot column i depends only on c_0..c_i, which makes exact
    # per-level interval pruning possible.

    def iter_coset_in_bounds(self, base, lower, upper, node_budget=2_000_000):
        """All vectors base + (integer combo of rows) inside given bounds.

        lower/upper are per-coordinate inclusive bounds (ints, Fractions or
        None for unbounded).  Bounds at pivot columns prune the walk level
        by level; the remaining free coordinate is fixed by the total sum.
        """
        dim = self.dim
        n = self.n
        base = tuple(base)
        total = sum(base)
        piv_cols = self.pivot_cols
        free = self.free_col
        lo = list(lower)
        hi = list(upper)
        nodes = [0]

        def level(i, cur, pivot_sum):
            nodes[0] += 1
            if nodes[0] > node_budget:
                raise BudgetExceeded("coset enumeration exceeded node budget")
            if i == n:
                fval = total - pivot_sum
                flo, fhi = lo[free], hi[free]
                if flo is not None and fval < flo:
                    return
                if fhi is not None and fval > fhi:
                    return
                out = list(cur)
                out[free] = fval
                yield tuple(out)
                return
            col = piv_cols[i]
            piv = self._pivot_entries[i]
            row = self.hnf[i]
            v0 = cur[col]
            clo, chi = lo[col], hi[col]
            if clo is None or chi is None:
                raise ValueError("pivot coordinate bounds must be finite")
            qlo = _exact_ceil(Fraction(clo - v0, piv))
            qhi = _exact_floor(Fraction(chi - v0, piv))
            for q in range(qlo, qhi + 1):
                if q:
                    nxt = [a + q * b for a, b in zip(cur, row)]
                else:
                    nxt = list(cur)
                yield from level(i + 1, nxt, pivot_sum + nxt[col])

        yield from level(0, list(base), 0)

    def find_effective_in_coset(self, base, node_budget=2_000_000):
        """Some vector >= 0 congruent to base, or None.

        The search space is the simplex {v >= 0, sum v = deg(base)}, so a
        negative degree returns None immediately.
        """
        total = sum(base)
        if total < 0:
            return None
        lo = [0] * self.dim
        hi = [total] * self.dim
        for v in self.iter_coset_in_bounds(base, lo, hi, node_budget):
            return v
        return None

    def _babai_point(self, target):
        """A lattice point near target (sequential rounding over HNF rows)."""
        rem = [Fraction(t) for t in target]
        c = []
        for i in range(self.n):
            col = self.pivot_cols[i]
            ci = rem[col] / self._pivot_entries[i]
            q = _exact_floor(ci + Fraction(1, 2))
            c.append(q)
            if q:
                row = self.hnf[i]
                for j in range(self.dim):
                    rem[j] -= q * row[j]
        return self.from_coords(c)

    def coset_min_max_coord(self, base, node_budget=2_000_000):
        """Minimise the max coordinate over base + L, exactly.

        base may be rational; it must sum to zero.  Returns (value, point)
        where point = base + p attains the value and is the
        lexicographically least vector doing so.
        """
        base = tuple(Fraction(t) for t in base)
        if sum(base) != 0:
            raise ValueError("expected a zero-sum base point")
        near = self._babai_point(base)
        bound = max(a - b for a, b in zip(base, near))
        # Any v = base + p with max(v) <= bound satisfies
        #   -n*bound <= v_i <= bound
        # (the lower bound because the coordinates sum to zero), and the
        # incumbent base - near sits inside that box, so one sweep over the
        # box finds the exact optimum and all ties.
        lo = [-self.n * bound - b for b in base]
        hi = [bound - b for b in base]
        best = None
        arg = None
        for p in self.iter_coset_in_bounds(
            tuple([0] * self.dim), lo, hi, node_budget
        ):
            v = tuple(a + b for a, b in zip(base, p))
            val = max(v)
            if best is None or val < best or (val == best and v < arg):
                best, arg = val, v
        return best, arg

    def coset_min_l1(self, base, node_budget=2_000_000):
        """Minimal l1 norm over the coset base + L, with an attaining vector.

        Branch and bound over the HNF rows.  The returned vector is the
        lexicographically least one of minimal norm.
        """
        base = tuple(int(t) for t in base)
        near = self._babai_point(project_H0(base) if sum(base) else base)
        # base may have nonzero degree; the lattice part has degree zero, so
        # aim the rounding at the projection and keep the offset exact.
        start = tuple(a - b for a, b in zip(base, near))
        best = sum(abs(x) for x in start)
        total = sum(base)
        n = self.n
        piv_cols = self.pivot_cols
        free = self.free_col
        nodes = [0]

        state = {"best": best, "arg": start}

        def level(i, cur, abs_so_far, sum_so_far):
            nodes[0] += 1
            if nodes[0] > node_budget:
                raise BudgetExceeded("l1 search exceeded node budget")
            if i == n:
                fval = total - sum_so_far
                norm = abs_so_far + abs(fval)
                if norm < state["best"]:
                    out = list(cur)
                    out[free] = fval
                    state["best"] = norm
                    state["arg"] = tuple(out)
                elif norm == state["best"]:
                    out = list(cur)
                    out[free] = fval
                    cand = tuple(out)
                    if cand < state["arg"]:
                        state["arg"] = cand
                return
            col = piv_cols[i]
            piv = self._pivot_entries[i]
            row = self.hnf[i]
            v0 = cur[col]
            room = state["best"] - abs_so_far
            # |v0 + q*piv| <= room
            qlo = _exact_ceil(Fraction(-room - v0, piv))
            qhi = _exact_floor(Fraction(room - v0, piv))
            for q in range(qlo, qhi + 1):
                if q:
                    nxt = [a + q * b for a, b in zip(cur, row)]
                else:
                    nxt = list(cur)
                a = abs_so_far + abs(nxt[col])
                if a <= state["best"]:
                    level(i + 1, nxt, a, sum_so_far + nxt[col])

        level(0, list(base), 0, 0)
        return state["best"], state["arg"]


def lattice_contains(lattice: LatticeBasis, v) -> bool:
    return lattice.contains(v)


def picard_cardinality(lattice: LatticeBasis) -> int:
    return lattice.picard_cardinality()


def enumerate_lattice_points(lattice: LatticeBasis, box: LatticeBox,
                             node_budget=2_000_000):
    """All lattice points inside an integer box, in a deterministic order.

    Points are produced by the coset walk and returned sorted, so callers
    see a stable order independent of internal search details.
    """
    if len(box.lower) != lattice.dim:
        raise ValueError("box dimension mismatch")
    if box.is_empty():
        return []
    pts = list(
        lattice.iter_coset_in_bounds(
            tuple([0] * lattice.dim), list(box.lower), list(box.upper), node_budget
        )
    )
    pts.sort()
    return pts
