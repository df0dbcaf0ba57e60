"""Plane partitions of skew shape and the bijection with integral flows.

A plane partition of shape theta(a, b) with entries at most m records, in
column u, the columns of G(n, m) where the u-th unit of flow descends;
superposing the unit trajectories gives the flow, and greedy extraction
("start as high as possible, run as far right as possible") inverts it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .grids import SINK, GridGraph, IntegerFlow, build_grid_graph, verify_flow
from .vectors import InputError, SkewShape, Vector, as_vector, theta


@dataclass(frozen=True)
class PlanePartition:
    """Weakly decreasing filling; rows[i-1] holds row i, columns
    inner[i-1]+1 .. outer[i-1], entries in 0..bound."""

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]
    bound: int

    def __post_init__(self):
        sh = self.shape
        if len(self.rows) != sh.n_rows:
            raise InputError("row count does not match shape")
        for i in range(1, sh.n_rows + 1):
            row = self.rows[i - 1]
            if len(row) != len(sh.row_cols(i)):
                raise InputError(f"row {i} has wrong length")
            for j, v in zip(sh.row_cols(i), row):
                if not 0 <= v <= self.bound:
                    raise InputError(f"entry {v} at {(i, j)} out of range 0..{self.bound}")
                left = self.entry(i, j - 1)
                if left is not None and left < v:
                    raise InputError(f"row {i} increases at column {j}")
                up = self.entry(i - 1, j)
                if up is not None and up < v:
                    raise InputError(f"column {j} increases at row {i}")

    def entry(self, i: int, j: int) -> int | None:
        """Value at cell (i, j), None outside the shape."""
        if not (1 <= i <= self.shape.n_rows):
            return None
        cols = self.shape.row_cols(i)
        if j not in cols:
            return None
        return self.rows[i - 1][j - cols.start]

    def column(self, j: int) -> tuple[int, ...]:
        """Entries of column j, top to bottom."""
        return tuple(self.entry(i, j) for i in self.shape.column_rows(j))

    @property
    def size(self) -> int:
        return self.shape.size

    def to_json(self) -> dict:
        rows = []
        for i in range(1, self.shape.n_rows + 1):
            inner = self.shape.inner[i - 1]
            rows.append([None] * inner + list(self.rows[i - 1]))
        return {"rows": rows, "bound": self.bound}

    @classmethod
    def from_json(cls, data: dict) -> "PlanePartition":
        raw = data["rows"]
        outer, inner, rows = [], [], []
        for row in raw:
            pad = 0
            while pad < len(row) and row[pad] is None:
                pad += 1
            inner.append(pad)
            outer.append(len(row))
            rows.append(tuple(row[pad:]))
        return cls(SkewShape.of(outer, inner), tuple(rows), data["bound"])


def from_cells(shape: SkewShape, cells: dict, bound: int) -> PlanePartition:
    rows = tuple(
        tuple(cells[(i, j)] for j in shape.row_cols(i)) for i in range(1, shape.n_rows + 1)
    )
    return PlanePartition(shape, rows, bound)


def enumerate_pps(shape: SkewShape, bound: int):
    """All plane partitions of the shape with entries <= bound, exactly once.

    Deterministic order: cells are filled column-major right to left (top to
    bottom within a column), trying values from high to low, so streams and
    golden outputs are stable.
    """
    if bound < 0:
        raise InputError("bound must be >= 0")
    cells = [(i, j) for j in range(shape.width, 0, -1) for i in shape.column_rows(j)]
    values: dict = {}

    def fill(idx: int):
        if idx == len(cells):
            yield from_cells(shape, values, bound)
            return
        i, j = cells[idx]
        up = values.get((i - 1, j)) if (i - 1, j) in shape else None
        right = values.get((i, j + 1)) if (i, j + 1) in shape else None
        hi = bound if up is None else up
        lo = 0 if right is None else right
        for v in range(hi, lo - 1, -1):
            values[(i, j)] = v
            yield from fill(idx + 1)
        values.pop((i, j), None)

    yield from fill(0)


def count_pps(shape: SkewShape, bound: int) -> int:
    return sum(1 for _ in enumerate_pps(shape, bound))


def vectors_of_shape(shape: SkewShape) -> tuple[Vector, Vector]:
    """Recover (a, b) from theta(a, b): differences of reversed parts."""
    n = shape.n_rows
    outer, inner = shape.outer, shape.inner
    a = tuple(outer[n - i] - (outer[n - i + 1] if i >= 2 else 0) for i in range(1, n + 1))
    b = tuple(inner[n - i] - (inner[n - i + 1] if i >= 2 else 0) for i in range(1, n + 1))
    return a, b


def _column_trajectory(shape: SkewShape, pp: PlanePartition | None, u: int, n: int, m: int):
    """Vertex path of the unit of flow for column u; entries of the column
    give the descent columns from successive rows."""
    lam_u, mu_u = shape.outer_col(u), shape.inner_col(u)
    r_start = n + 1 - lam_u
    r_end = n + 1 - mu_u if mu_u >= 1 else None  # None: descend to the sink
    col = pp.column(u) if pp is not None else ()
    descents = {}
    for idx, i in enumerate(shape.column_rows(u)):
        descents[n + 1 - i] = col[idx] if pp is not None else 0
    path = [(r_start, 0)]
    cur = 0
    last_row = n if r_end is None else r_end - 1
    for r in range(r_start, last_row + 1):
        d = descents[r]
        assert d >= cur
        path.extend((r, c) for c in range(cur + 1, d + 1))
        path.append(SINK if (r == n and r_end is None) else (r + 1, d))
        cur = d
    if r_end is not None:
        path.extend((r_end, c) for c in range(cur + 1, m + 1))
    return path, descents, r_start, (SINK if r_end is None else (r_end, m))


@dataclass(frozen=True)
class Trajectory:
    """One unit of flow: where it starts, ends, and descends."""

    column: int
    start: tuple
    end: object
    descents: tuple[tuple[int, int], ...]  # (graph row, descent column)
    vertices: tuple

    @property
    def edges(self) -> tuple:
        return tuple(zip(self.vertices, self.vertices[1:]))


def psi(pp: PlanePartition, a=None, b=None) -> IntegerFlow:
    """The bijection from plane partitions of theta(a, b) with entries <= m
    to integral flows on G(n, m)."""
    sa, sb = vectors_of_shape(pp.shape)
    a = sa if a is None else as_vector(a)
    b = sb if b is None else as_vector(b)
    if (a, b) != (sa, sb):
        raise InputError(f"shape mismatch: pp has theta{(sa, sb)}")
    n, m = len(a), pp.bound
    g = build_grid_graph(n, m, a, b)
    flows: dict = {}
    for u in range(1, pp.shape.width + 1):
        path, _, _, _ = _column_trajectory(pp.shape, pp, u, n, m)
        for e in zip(path, path[1:]):
            flows[e] = flows.get(e, 0) + 1
    flow = IntegerFlow.from_edge_dict(g, flows)
    assert verify_flow(flow)
    return flow


def trajectories(f: IntegerFlow) -> tuple[Trajectory, ...]:
    """Canonical trajectory decomposition (via the greedy inverse map)."""
    pp = psi_inverse(f)
    g = f.graph
    out = []
    for u in range(1, pp.shape.width + 1):
        path, descents, r_start, end = _column_trajectory(pp.shape, pp, u, g.n, g.m)
        out.append(
            Trajectory(
                column=u,
                start=(r_start, 0),
                end=end,
                descents=tuple(sorted(descents.items())),
                vertices=tuple(path),
            )
        )
    return tuple(out)


def psi_inverse(f: IntegerFlow) -> PlanePartition:
    """Greedy extraction of unit trajectories: always start as high as
    possible, run as far right as possible before descending, absorb at a
    demand vertex when the row ends there."""
    g = f.graph
    if g.kind != "G":
        raise InputError("psi_inverse expects a flow on G(n,m)")
    n, m = g.n, g.m
    a = tuple(g.supply.get((i, 0), 0) for i in range(1, n + 1))
    b = tuple(g.demand.get((i, m), 0) for i in range(1, n + 1))
    shape = theta(a, b)
    rem = list(f.values)
    a_rem = list(a)
    b_rem = list(b)
    cells: dict = {}
    for u in range(1, shape.width + 1):
        row = next(i for i in range(1, n + 1) if a_rem[i - 1] > 0)
        a_rem[row - 1] -= 1
        r, c = row, 0
        descents: dict = {}
        while True:
            if c < m and rem[g.edge_index[((r, c), (r, c + 1))]] > 0:
                rem[g.edge_index[((r, c), (r, c + 1))]] -= 1
                c += 1
                continue
            if c == m and b_rem[r - 1] > 0:
                b_rem[r - 1] -= 1
                break
            if r < n:
                ei = g.edge_index[((r, c), (r + 1, c))]
            else:
                ei = g.edge_index[((n, c), SINK)]
            assert rem[ei] > 0, "stuck trajectory: input was not a valid flow"
            rem[ei] -= 1
            descents[r] = c
            if r == n:
                break
            r += 1
        expected_rows = [n + 1 - i for i in shape.column_rows(u)]
        assert sorted(descents) == sorted(expected_rows), "trajectory does not fit the shape"
        for rr, cc in descents.items():
            cells[(n + 1 - rr, u)] = cc
    assert not any(rem), "leftover flow after extraction"
    return from_cells(shape, cells, m)


def row_count_map(pp: PlanePartition) -> tuple[tuple[int, ...], ...]:
    """Horizontal flow matrix read off row-wise: the partial column sums
    x_{1j} + ... + x_{ij} count the entries >= j in row n-i+1, with the
    inner (crossed-out) cells of that row counting as larger than
    everything."""
    shape = pp.shape
    n = shape.n_rows
    m = pp.bound
    width = shape.width

    def s(i: int, j: int) -> int:
        if i == 0:
            return 0
        row = n + 1 - i
        inner = shape.inner[row - 1]
        return inner + sum(1 for v in pp.rows[row - 1] if v >= j)

    return tuple(tuple(s(i, j) - s(i - 1, j) for j in range(1, m + 1)) for i in range(1, n + 1))


def ascii_diagram(pp: PlanePartition) -> str:
    """Young-diagram rendering with x for the inner cells."""
    width = max((len(str(v)) for row in pp.rows for v in row), default=1)
    lines = []
    for i in range(1, pp.shape.n_rows + 1):
        cells = ["x".rjust(width)] * pp.shape.inner[i - 1]
        cells += [str(v).rjust(width) for v in pp.rows[i - 1]]
        lines.append(" ".join(cells).rstrip())
    return "\n".join(lines)
