"""Vertex characterizations: forest supports, split/merge rules, vertex
plane partitions, standard vertex plane partitions, and shifted tableaux.

Three equivalent tests for "this lattice point is a vertex of the
polytope": the support of the flow is a forest; no pair of unit
trajectories splits/merges more than the local rules allow; the plane
partition satisfies the four column-pair conditions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial

from .grids import IntegerFlow, is_forest, support
from .partitions import PlanePartition, Trajectory, from_cells, psi, psi_inverse, trajectories
from .vectors import InputError, SkewShape, conjugate


def is_vertex_flow(f: IntegerFlow) -> bool:
    """Vertices of a flow polytope are exactly the flows with forest support."""
    return is_forest(support(f))


def _entry_edges(t: Trajectory) -> tuple[dict, dict]:
    incoming = {}
    outgoing = {}
    for e in t.edges:
        outgoing[e[0]] = e
        incoming[e[1]] = e
    return incoming, outgoing


@dataclass(frozen=True)
class SplitMergeReport:
    """Interaction summary for an ordered pair of unit trajectories."""

    pair: tuple[int, int]
    splits: int
    merges: int
    shared_start: bool
    shared_end: bool

    @property
    def allowed(self) -> bool:
        if self.shared_start and self.merges > 0:
            return False
        if self.shared_end and self.splits > 0:
            return False
        if not self.shared_start and not self.shared_end:
            return self.splits <= 1 and self.merges <= 1
        return True


def _pair_report(graph, t1: Trajectory, t2: Trajectory) -> SplitMergeReport:
    in1, out1 = _entry_edges(t1)
    in2, out2 = _entry_edges(t2)
    splits = merges = 0
    for v in set(t1.vertices) & set(t2.vertices):
        e_out1, e_out2 = out1.get(v), out2.get(v)
        e_in1, e_in2 = in1.get(v), in2.get(v)
        if e_out1 is not None and e_out2 is not None:
            if e_out1 != e_out2:
                splits += 1
        elif graph.is_demand_vertex(v) and (e_out1 is None) != (e_out2 is None):
            splits += 1
        if e_in1 is not None and e_in2 is not None:
            if e_in1 != e_in2:
                merges += 1
        elif graph.is_source_vertex(v) and (e_in1 is None) != (e_in2 is None):
            merges += 1
    return SplitMergeReport(
        pair=(t1.column, t2.column),
        splits=splits,
        merges=merges,
        shared_start=t1.start == t2.start,
        shared_end=t1.end == t2.end,
    )


def split_merge_reports(f: IntegerFlow) -> tuple[SplitMergeReport, ...]:
    ts = trajectories(f)
    return tuple(
        _pair_report(f.graph, ts[i], ts[j])
        for i in range(len(ts))
        for j in range(i + 1, len(ts))
    )


def split_merge_check(f: IntegerFlow) -> bool:
    """Vertex test via the local split/merge rules: trajectories sharing a
    start may not merge, trajectories sharing an end may not split, and any
    other pair splits at most once and merges at most once."""
    return all(r.allowed for r in split_merge_reports(f))


def is_unsplittable(f: IntegerFlow) -> bool:
    """No two trajectories split anywhere."""
    return all(r.splits == 0 for r in split_merge_reports(f))


def _vertex_pair_ok(pp: PlanePartition, j: int) -> bool:
    sh = pp.shape
    mu1, lam1 = sh.inner_col(j), sh.outer_col(j)
    mu2, lam2 = sh.inner_col(j + 1), sh.outer_col(j + 1)

    def L(i):
        return pp.entry(i, j)

    def R(i):
        return pp.entry(i, j + 1)

    if mu1 == mu2 and lam1 == lam2:
        return all(L(i) == R(i) for i in range(mu1 + 1, lam1 + 1))
    if mu1 == mu2:
        for i in range(mu2 + 2, lam2 + 1):
            if L(i) == R(i) and L(i - 1) != R(i - 1):
                return False
        for i in range(mu2 + 1, lam2 + 1):
            if not (R(i) < L(i + 1) or R(i) == L(i)):
                return False
        return True
    if lam1 == lam2:
        for i in range(mu1 + 1, lam1):
            if L(i) == R(i) and L(i + 1) != R(i + 1):
                return False
        for i in range(mu1, lam1):
            if not (R(i) < L(i + 1) or L(i + 1) == R(i + 1)):
                return False
        return True
    # both column ends differ: rows where the southwest entry is <= the
    # northeast one; between the lowest and highest such row the columns
    # must agree (the printed guard i_min < i_max misses the consecutive
    # case, which the underlying flow argument still forbids)
    crossings = [i for i in range(mu1 + 1, lam2 + 2) if L(i) <= R(i - 1)]
    if crossings:
        if any(L(i) != R(i) for i in range(min(crossings), max(crossings))):
            return False
    return True


def is_vertex_pp(pp: PlanePartition) -> bool:
    """The four column-pair conditions characterizing plane partitions that
    map to vertices under the flow bijection."""
    return all(_vertex_pair_ok(pp, j) for j in range(1, pp.shape.width))


def violated_column_pair(pp: PlanePartition) -> int | None:
    """First column index j whose pair (j, j+1) breaks the vertex rules."""
    for j in range(1, pp.shape.width):
        if not _vertex_pair_ok(pp, j):
            return j
    return None


def _standard_pair_ok(pp: PlanePartition, j: int) -> bool:
    sh = pp.shape
    mu1, lam1 = sh.inner_col(j), sh.outer_col(j)
    mu2, lam2 = sh.inner_col(j + 1), sh.outer_col(j + 1)

    def L(i):
        return pp.entry(i, j)

    def R(i):
        return pp.entry(i, j + 1)

    if mu1 == mu2 and lam1 == lam2:
        return False  # equal columns are forced equal, impossible with distinct entries
    if mu1 == mu2 or lam1 == lam2:
        lo = mu2 + 1 if mu1 == mu2 else mu1
        hi = lam2 if mu1 == mu2 else lam1 - 1
        return all(R(i) < L(i + 1) for i in range(lo, hi + 1))
    # both differ: at most one crossing (forced equalities are impossible)
    crossings = sum(1 for i in range(mu1 + 1, lam2 + 2) if L(i) < R(i - 1))
    return crossings <= 1


def is_standard_vertex_pp(pp: PlanePartition) -> bool:
    """Vertex test for fillings with distinct entries 0..size-1.

    Specialization of the column-pair conditions: rows, columns and
    southwest-northeast diagonals strictly decrease, and columns with both
    ends differing admit at most one southwest <= northeast crossing."""
    entries = sorted(v for row in pp.rows for v in row)
    if entries != list(range(pp.size)):
        raise InputError("entries must be a permutation of 0..size-1")
    return all(_standard_pair_ok(pp, j) for j in range(1, pp.shape.width))


def enumerate_standard_fillings(shape: SkewShape):
    """All fillings of the shape with distinct entries 0..size-1 strictly
    decreasing along rows and columns (linear extensions, largest first)."""
    cells = shape.cells()
    size = len(cells)
    values: dict = {}

    def ready(cell):
        i, j = cell
        left = (i, j - 1)
        up = (i - 1, j)
        return (left not in shape or left in values) and (up not in shape or up in values)

    def place(v: int):
        if v < 0:
            yield from_cells(shape, values, max(size - 1, 0))
            return
        for cell in cells:
            if cell not in values and ready(cell):
                values[cell] = v
                yield from place(v - 1)
                del values[cell]

    yield from place(size - 1)


def enumerate_standard_vertex_pps(shape: SkewShape):
    for pp in enumerate_standard_fillings(shape):
        if is_standard_vertex_pp(pp):
            yield pp


def count_standard_vertex_pps(shape: SkewShape) -> int:
    return sum(1 for _ in enumerate_standard_vertex_pps(shape))


@dataclass(frozen=True)
class ShiftedShape:
    """Shifted skew diagram: row i occupies columns i+rho_i .. i+nu_i-1."""

    nu: tuple[int, ...]
    rho: tuple[int, ...]
    cells: frozenset

    @property
    def size(self) -> int:
        return len(self.cells)


def shifted_shape_of(lam) -> ShiftedShape:
    """The shifted skew shape whose column lengths, left to right, are the
    column lengths of lam read right to left; defined for lam inside the
    staircase (n, n-1, ..., 1) with n = number of parts."""
    lam = tuple(int(x) for x in lam)
    n = len(lam)
    if any(lam[i] < lam[i + 1] for i in range(n - 1)) or any(x < 0 for x in lam):
        raise InputError("not a partition")
    if any(lam[i] > n - i for i in range(n)):
        raise InputError(f"{lam} is not contained in the staircase of height {n}")
    cols = conjugate(lam)
    lengths = [0] * (n - len(cols)) + list(reversed(cols))
    cells = set()
    for c, ell in enumerate(lengths, start=1):
        for r in range(c - ell + 1, c + 1):
            cells.add((r, c))
    rows = sorted({r for r, _ in cells})
    nu, rho = [], []
    for r in rows:
        span = [c for rr, c in cells if rr == r]
        lo, hi = min(span), max(span)
        assert set(span) == set(range(lo, hi + 1)), "rows must be contiguous"
        nu.append(hi - r + 1)
        rho.append(lo - r)
    return ShiftedShape(tuple(nu), tuple(rho), frozenset(cells))


def count_linear_extensions(cells, covers) -> int:
    """Number of linear extensions of a small poset, by downset recursion."""
    cells = tuple(sorted(cells))
    below = {c: frozenset(p for p, q in covers if q == c) for c in cells}

    @lru_cache(maxsize=None)
    def count(remaining: frozenset) -> int:
        if not remaining:
            return 1
        total = 0
        for c in remaining:
            if below[c] & remaining:
                continue  # c is not minimal among the remaining cells
            total += count(remaining - {c})
        return total

    return count(frozenset(cells))


def count_shifted_syt(shape: ShiftedShape) -> int:
    """Standard tableaux of a shifted skew shape, counted as linear
    extensions of the cell poset (rows and columns increase)."""
    covers = []
    for r, c in shape.cells:
        if (r, c + 1) in shape.cells:
            covers.append(((r, c), (r, c + 1)))
        if (r + 1, c) in shape.cells:
            covers.append(((r, c), (r + 1, c)))
    return count_linear_extensions(shape.cells, covers)


def staircase_syt_product_formula(n: int) -> int:
    """Shifted staircase tableaux count:
    C(n+1,2)! * 1! 2! ... (n-1)! / (1! 3! ... (2n-1)!)."""
    if n < 1:
        raise InputError("n must be >= 1")
    num = factorial(comb(n + 1, 2))
    for i in range(1, n):
        num *= factorial(i)
    den = 1
    for i in range(1, n + 1):
        den *= factorial(2 * i - 1)
    assert num % den == 0
    return num // den
