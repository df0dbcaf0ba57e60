"""Directed grid graphs and their integer flows.

G(n, m) is the n x (m+1) grid with a sink below the last row: row i, columns
0..m, horizontal edges going right, vertical edges going down, and an edge
from every (n, j) to the sink s.  Netflows put a on column 0 and -b on
column m.  H(n, m) is the full (n+1) x (m+1) grid (no sink vertex), and the
one-column graphs H_corner_left / H_corner_right / H_top support the
column-fixing recurrences.

Flows are exact integer edge labelings satisfying conservation.  Supports
are bit sets over the canonical edge order (horizontal row-major, then
vertical, then sink edges), so golden files are stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice

from .vectors import InputError, Vector, as_vector

SINK = "s"

Vertex = object  # (i, j) tuples or SINK


class FlowError(ValueError):
    """The requested edge labeling is not a point of the flow polytope."""


class GridGraph:
    """Immutable-by-convention directed acyclic graph with netflows.

    supply holds the positive a-contributions, demand the b-contributions
    (netflow -demand); at m = 0 both land on the same vertex and the
    netflow is their difference.
    """

    def __init__(self, kind, n, m, vertices, edges, supply, demand):
        self.kind = kind
        self.n = n
        self.m = m
        self.vertices = tuple(vertices)
        self.edges = tuple(edges)
        self.supply = dict(supply)
        self.demand = dict(demand)
        self.netflow = {v: self.supply.get(v, 0) - self.demand.get(v, 0) for v in self.vertices}
        self.edge_index = {e: i for i, e in enumerate(self.edges)}
        if len(self.edge_index) != len(self.edges):
            raise InputError("duplicate edge")
        self.out_edges = {v: [] for v in self.vertices}
        self.in_edges = {v: [] for v in self.vertices}
        for i, (u, v) in enumerate(self.edges):
            self.out_edges[u].append(i)
            self.in_edges[v].append(i)
        assert sum(self.netflow.values()) == 0

    def is_source_vertex(self, v) -> bool:
        return self.supply.get(v, 0) > 0

    def is_demand_vertex(self, v) -> bool:
        return self.demand.get(v, 0) > 0 or (v == SINK and self.netflow.get(v, 0) < 0)

    def topological_order(self):
        indeg = {v: len(self.in_edges[v]) for v in self.vertices}
        order = [v for v in self.vertices if indeg[v] == 0]
        for v in order:
            for i in self.out_edges[v]:
                w = self.edges[i][1]
                indeg[w] -= 1
                if indeg[w] == 0:
                    order.append(w)
        assert len(order) == len(self.vertices), "graph has a cycle"
        return order

    def reversed(self) -> "GridGraph":
        """Edge reversal with negated netflows: flows carry over unchanged
        (the integral equivalence behind reversal symmetry)."""
        kind = self.kind[4:] if str(self.kind).startswith("rev:") else f"rev:{self.kind}"
        return GridGraph(
            kind, self.n, self.m, self.vertices,
            tuple((v, u) for (u, v) in self.edges),
            dict(self.demand),
            {v: s for v, s in self.supply.items()},
        )

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "m": self.m,
            "netflows": {str(v): f for v, f in self.netflow.items()},
        }

    def to_dot(self) -> str:
        lines = ["digraph G {", "  rankdir=LR;"]
        for v in self.vertices:
            label = f"{v}\\n{self.netflow[v]:+d}" if self.netflow[v] else str(v)
            lines.append(f'  "{v}" [label="{label}"];')
        for u, v in self.edges:
            lines.append(f'  "{u}" -> "{v}";')
        lines.append("}")
        return "\n".join(lines)


def build_grid_graph(n: int, m: int, a, b=None) -> GridGraph:
    """G(n, m) with netflow a on column 0, -b on column m, sink below."""
    a = as_vector(a)
    b = as_vector(b) if b is not None else (0,) * n
    if len(a) != n or len(b) != n:
        raise InputError(f"need |a| = |b| = n = {n}")
    if n < 1 or m < 0:
        raise InputError("need n >= 1 and m >= 0")
    vertices = [(i, j) for i in range(1, n + 1) for j in range(m + 1)] + [SINK]
    edges = (
        [((i, j), (i, j + 1)) for i in range(1, n + 1) for j in range(m)]
        + [((i, j), (i + 1, j)) for i in range(1, n) for j in range(m + 1)]
        + [((n, j), SINK) for j in range(m + 1)]
    )
    supply = {(i + 1, 0): a[i] for i in range(n)}
    demand = {(i + 1, m): b[i] for i in range(n)}
    if m == 0:
        demand = {(i + 1, 0): b[i] for i in range(n)}
    sink_net = sum(a) - sum(b)
    demand[SINK] = demand.get(SINK, 0) + sink_net
    return GridGraph("G", n, m, vertices, edges, supply, demand)


def build_h_graph(n: int, m: int, a_prime, b_prime) -> GridGraph:
    """H(n, m): the full (n+1) x (m+1) directed grid, a' on the first
    column and -b' on the last; requires sum(a') = sum(b')."""
    a_prime, b_prime = as_vector(a_prime), as_vector(b_prime)
    if len(a_prime) != n + 1 or len(b_prime) != n + 1:
        raise InputError(f"need |a'| = |b'| = n+1 = {n + 1}")
    if sum(a_prime) != sum(b_prime):
        raise InputError("H(n,m) needs sum(a') = sum(b')")
    vertices = [(i, j) for i in range(1, n + 2) for j in range(m + 1)]
    edges = (
        [((i, j), (i, j + 1)) for i in range(1, n + 2) for j in range(m)]
        + [((i, j), (i + 1, j)) for i in range(1, n + 1) for j in range(m + 1)]
    )
    supply = {(i + 1, 0): a_prime[i] for i in range(n + 1)}
    demand = {(i + 1, m): b_prime[i] for i in range(n + 1)}
    return GridGraph("H", n, m, vertices, edges, supply, demand)


def _one_column_graph(kind: str, n: int, a, b, source_row: int, target_row: int) -> GridGraph:
    a, b = as_vector(a), as_vector(b)
    if len(a) != n or len(b) != n:
        raise InputError(f"need |a| = |b| = n = {n}")
    vertices = [(i, r) for i in range(1, n + 1) for r in sorted({source_row, 0, target_row})]
    vertices.append(SINK)
    edges = []
    if source_row != 0:
        edges += [((i, source_row), (i, 0)) for i in range(1, n + 1)]
    if target_row != 0:
        edges += [((i, 0), (i, target_row)) for i in range(1, n + 1)]
    edges += [((i, 0), (i + 1, 0)) for i in range(1, n)]
    edges.append(((n, 0), SINK))
    supply = {(i + 1, source_row): a[i] for i in range(n)}
    demand = {(i + 1, target_row): b[i] for i in range(n)}
    if source_row == target_row:
        raise InputError("source and target rows coincide")
    demand[SINK] = sum(a) - sum(b)
    return GridGraph(kind, n, None, vertices, edges, supply, demand)


def build_h_corner_left(n: int, a, b) -> GridGraph:
    """H_corner_left(n): a on the chain row, b absorbed one row up."""
    return _one_column_graph("H_corner_left", n, a, b, source_row=0, target_row=1)


def build_h_corner_right(n: int, a, b) -> GridGraph:
    """H_corner_right(n): a enters from row -1, b absorbed on the chain."""
    return _one_column_graph("H_corner_right", n, a, b, source_row=-1, target_row=0)


def build_h_top(n: int, a, b) -> GridGraph:
    """H_top(n): a enters from row -1, chain on row 0, b leaves to row 1."""
    return _one_column_graph("H_top", n, a, b, source_row=-1, target_row=1)


_KINDS = {
    "G": lambda n, m, a, b: build_grid_graph(n, m, a, b),
    "H": lambda n, m, a, b: build_h_graph(n, m, a, b),
    "H_corner_left": lambda n, m, a, b: build_h_corner_left(n, a, b),
    "H_corner_right": lambda n, m, a, b: build_h_corner_right(n, a, b),
    "H_top": lambda n, m, a, b: build_h_top(n, a, b),
}


def build_graph(kind: str, n: int, m, a, b) -> GridGraph:
    if kind not in _KINDS:
        raise InputError(f"unknown graph kind {kind!r}")
    return _KINDS[kind](n, m, a, b)


class IntegerFlow:
    """Nonnegative integer edge labels, aligned with graph.edges."""

    def __init__(self, graph: GridGraph, values):
        self.graph = graph
        self.values = tuple(int(v) for v in values)
        if len(self.values) != len(graph.edges):
            raise InputError("flow length does not match edge count")

    @classmethod
    def from_edge_dict(cls, graph: GridGraph, flows: dict) -> "IntegerFlow":
        return cls(graph, [flows.get(e, 0) for e in graph.edges])

    def __getitem__(self, edge) -> int:
        return self.values[self.graph.edge_index[edge]]

    def __eq__(self, other):
        return (
            isinstance(other, IntegerFlow)
            and self.graph is other.graph
            and self.values == other.values
        )

    def __hash__(self):
        return hash(self.values)

    @property
    def x(self):
        """Horizontal flows of a G-kind graph as an n x m matrix."""
        g = self.graph
        assert g.kind == "G"
        return tuple(
            tuple(self[((i, j), (i, j + 1))] for j in range(g.m))
            for i in range(1, g.n + 1)
        )

    @property
    def y(self):
        """Vertical flows of a G-kind graph, rows 1..n-1, columns 0..m."""
        g = self.graph
        assert g.kind == "G"
        return tuple(
            tuple(self[((i, j), (i + 1, j))] for j in range(g.m + 1))
            for i in range(1, g.n)
        )

    @property
    def sink_flows(self):
        g = self.graph
        assert g.kind == "G"
        return tuple(self[((g.n, j), SINK)] for j in range(g.m + 1))

    def to_json(self) -> dict:
        if self.graph.kind == "G":
            return {"x": [list(row) for row in self.x]}
        return {"edges": list(self.values)}


def flow_from_horizontal(g: GridGraph, x) -> IntegerFlow:
    """Complete an n x m matrix of horizontal flows to a full flow on G(n,m).

    The vertical and sink flows are forced by conservation; a negative
    forced value means x is not a point of the polytope (FlowError).
    """
    if g.kind != "G":
        raise InputError("flow_from_horizontal expects a G-kind graph")
    n, m = g.n, g.m
    x = [list(map(int, row)) for row in x]
    if len(x) != n or any(len(row) != m for row in x):
        raise InputError(f"x must be {n} x {m}")
    if any(v < 0 for row in x for v in row):
        raise FlowError("negative horizontal flow")
    flows = {}
    for i in range(1, n + 1):
        for j in range(m):
            flows[((i, j), (i, j + 1))] = x[i - 1][j]
    for i in range(1, n + 1):
        for j in range(m + 1):
            into = (x[i - 1][j - 1] if j >= 1 else 0) + (
                flows.get(((i - 1, j), (i, j)), 0) if i >= 2 else 0
            )
            out_right = x[i - 1][j] if j < m else 0
            v = (i, j)
            down = into + g.netflow[v] - out_right
            if down < 0:
                raise FlowError(f"conservation forces negative flow below {v}")
            flows[((i, j), (i + 1, j)) if i < n else ((n, j), SINK)] = down
    return IntegerFlow.from_edge_dict(g, flows)


def verify_flow(f: IntegerFlow) -> bool:
    """Nonnegativity plus netflow conservation at every non-sink vertex."""
    g = f.graph
    if any(v < 0 for v in f.values):
        return False
    for v in g.vertices:
        out = sum(f.values[i] for i in g.out_edges[v])
        inn = sum(f.values[i] for i in g.in_edges[v])
        if out - inn != g.netflow[v]:
            return False
    return True


@dataclass(frozen=True)
class Subgraph:
    """Edge subset of a parent graph, stored as a bit set."""

    parent: GridGraph
    mask: int

    @classmethod
    def of_edges(cls, parent: GridGraph, edges) -> "Subgraph":
        mask = 0
        for e in edges:
            mask |= 1 << parent.edge_index[e]
        return cls(parent, mask)

    def edge_indices(self):
        return [i for i in range(len(self.parent.edges)) if self.mask >> i & 1]

    def edge_list(self):
        return [self.parent.edges[i] for i in self.edge_indices()]

    def incident_vertices(self):
        verts = set()
        for u, v in self.edge_list():
            verts.add(u)
            verts.add(v)
        return verts

    def __len__(self):
        return self.mask.bit_count()


def support(f: IntegerFlow) -> Subgraph:
    mask = 0
    for i, v in enumerate(f.values):
        if v > 0:
            mask |= 1 << i
    return Subgraph(f.graph, mask)


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y) -> bool:
        """False when x and y were already connected (a cycle closes)."""
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        self.parent[rx] = ry
        return True


def is_forest(s: Subgraph) -> bool:
    """Acyclicity of the underlying undirected edge set."""
    uf = _UnionFind()
    return all(uf.union(u, v) for u, v in s.edge_list())


def connected_components(s: Subgraph):
    uf = _UnionFind()
    for u, v in s.edge_list():
        uf.union(u, v)
    comps = {}
    for v in s.incident_vertices():
        comps.setdefault(uf.find(v), set()).add(v)
    return list(comps.values())


def betti_number(s: Subgraph) -> int:
    """First Betti number |E| - |V| + #components on incident vertices."""
    return len(s) - len(s.incident_vertices()) + len(connected_components(s))


def unique_flow_on_forest(s: Subgraph, netflow: dict | None = None) -> IntegerFlow | None:
    """The unique candidate flow with support s, or None if s is not valid.

    Each forest edge is a bridge, so its flow equals the total netflow of
    the component on its tail side; the candidate is rejected unless every
    edge value is positive and every component's netflow sums to zero.
    """
    if not is_forest(s):
        raise InputError("subgraph is not a forest")
    g = s.parent
    netflow = dict(g.netflow) if netflow is None else dict(netflow)
    chosen = s.edge_list()
    adj = {}
    for u, v in chosen:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    for comp in connected_components(s):
        if sum(netflow.get(v, 0) for v in comp) != 0:
            return None
    flows = {}
    for u, v in chosen:
        # netflow of u's side after removing edge (u, v)
        seen = {u}
        stack = [u]
        while stack:
            w = stack.pop()
            for t in adj.get(w, []):
                if {w, t} == {u, v} and w == u:
                    continue
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        val = sum(netflow.get(w, 0) for w in seen)
        if val <= 0:
            return None
        flows[(u, v)] = val
    flow = IntegerFlow.from_edge_dict(g, flows)
    return flow if verify_flow(flow) else None


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_integral_flows(g: GridGraph):
    """All integral flows, by distributing each vertex's throughput over its
    out-edges in topological order.  Independent of the plane-partition
    bijection, so usable as a counting oracle."""
    order = g.topological_order()

    def extend(idx, incoming, assigned):
        if idx == len(order):
            yield IntegerFlow(g, [assigned[i] for i in range(len(g.edges))])
            return
        v = order[idx]
        amount = incoming.get(v, 0) + g.netflow[v]
        outs = g.out_edges[v]
        if amount < 0:
            return
        if not outs:
            if amount == 0:
                yield from extend(idx + 1, incoming, assigned)
            return
        for combo in _compositions(amount, len(outs)):
            inc2 = dict(incoming)
            for ei, val in zip(outs, combo):
                assigned[ei] = val
                w = g.edges[ei][1]
                inc2[w] = inc2.get(w, 0) + val
            yield from extend(idx + 1, inc2, assigned)

    yield from extend(0, {}, [0] * len(g.edges))


def count_integral_flows(g: GridGraph, limit: int | None = None) -> int:
    it = enumerate_integral_flows(g)
    if limit is not None:
        return sum(1 for _ in islice(it, limit))
    return sum(1 for _ in it)


def map_G_to_H(f: IntegerFlow) -> IntegerFlow:
    """Integral equivalence G(n,m) -> H(n,m): sink flows become the bottom
    row, cumulatively summed; needs b_1 = 0 (normalize the instance first,
    the first column of the shape is empty otherwise)."""
    g = f.graph
    if g.kind != "G":
        raise InputError("map_G_to_H expects a flow on G(n,m)")
    n, m = g.n, g.m
    a = [g.supply.get((i, 0), 0) for i in range(1, n + 1)]
    b = [g.demand.get((i, m), 0) for i in range(1, n + 1)]
    if b[0] != 0:
        raise InputError("normalize to b_1 = 0 before mapping to H(n,m)")
    a_prime = tuple(a) + (0,)
    b_prime = (0,) + tuple(b[1:]) + (sum(a) - sum(b),)
    h = build_h_graph(n, m, a_prime, b_prime)
    flows = {}
    for i in range(1, n + 1):
        for j in range(m):
            flows[((i, j), (i, j + 1))] = f[((i, j), (i, j + 1))]
    for i in range(1, n):
        for j in range(m + 1):
            flows[((i, j), (i + 1, j))] = f[((i, j), (i + 1, j))]
    sink = [f[((n, j), SINK)] for j in range(m + 1)]
    for j in range(m + 1):
        flows[((n, j), (n + 1, j))] = sink[j]
    run = 0
    for j in range(m):
        run += sink[j]
        flows[((n + 1, j), (n + 1, j + 1))] = run
    out = IntegerFlow.from_edge_dict(h, flows)
    assert verify_flow(out)
    return out


def h_reversed_instance(g: GridGraph) -> GridGraph:
    """Prop on reversal symmetry: H(n,m) with (a',b') maps to H(n,m) with
    (rev(b'), rev(a'))."""
    if g.kind != "H":
        raise InputError("expects an H-kind graph")
    n, m = g.n, g.m
    a_prime = tuple(g.supply.get((i, 0), 0) for i in range(1, n + 2))
    b_prime = tuple(g.demand.get((i, m), 0) for i in range(1, n + 2))
    return build_h_graph(n, m, b_prime[::-1], a_prime[::-1])
