"""Face counting for the straight-shape polytopes (b = 0).

d-faces correspond to valid connected subgraphs of the grid with first
Betti number d; the brute force enumerates edge subsets and certifies
validity as "the union of the vertex supports inside the subgraph is the
whole subgraph" (averaging vertices of the face).  The recurrence fixes
the support pattern of the first column and bottoms out at the
product-of-simplices case m = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from . import polys
from .grids import Subgraph, betti_number, build_grid_graph, connected_components, is_forest, support
from .partitions import enumerate_pps, psi
from .vectors import InputError, as_vector, block_structure, chi, signature, theta


class BudgetExceeded(RuntimeError):
    """The brute-force sweep would visit more edge subsets than allowed."""


@dataclass(frozen=True)
class FaceVector:
    """Face counts by dimension, f[d] for d = 0..nm."""

    counts: tuple[int, ...]

    @property
    def including_empty(self) -> tuple[int, ...]:
        """The printed form, with the empty face in front."""
        return (1,) + self.counts

    @property
    def euler_sum(self) -> int:
        return sum(f if d % 2 == 0 else -f for d, f in enumerate(self.counts))

    def __iter__(self):
        return iter(self.counts)


def _strip_leading_zeros(j):
    j = tuple(j)
    k = 0
    while k < len(j) and j[k] == 0:
        k += 1
    return j[k:]


def face_count_base(j, d: int) -> int:
    """m = 1 base case: the polytope is a product of simplices, so f_d is a
    coefficient of prod_i ((x+1)^(c_i + 1) - 1) with c the signature runs."""
    j = _strip_leading_zeros(as_vector(j))
    if not j:
        return 1 if d == 0 else 0
    runs = signature(j).runs
    poly = (1,)
    for c in runs:
        factor = polys.poly_add(polys.poly_pow((1, 1), c + 1), (-1,))
        poly = polys.poly_mul(poly, factor)
    k = len(runs)
    idx = d + k
    return poly[idx] if 0 <= idx < len(poly) else 0


@lru_cache(maxsize=None)
def _face_recurse(pattern, m: int, d: int) -> int:
    pattern = _strip_leading_zeros(pattern)
    if d < 0:
        return 0
    if m == 0:
        return 1 if d == 0 else 0
    if m == 1:
        return face_count_base(pattern, d) if pattern else (1 if d == 0 else 0)
    if not pattern:
        return 1 if d == 0 else 0
    n = len(pattern)
    total = 0
    for j in product((0, 1), repeat=n):
        blocks = block_structure(j, pattern).blocks
        beta = sum(1 for blk in blocks if any(blk))
        ones = sum(j)
        gamma = ones - beta
        for k in range(d + 1):
            c = polys.binomial(beta, k)
            if c:
                total += c * _face_recurse(j, m - 1, d - k - gamma)
    return total


def face_count_recurse(a, m: int, d: int) -> int:
    """Number of d-faces of the straight-shape polytope on G(n, m), by the
    first-column recurrence (memoized on the support pattern)."""
    a = as_vector(a)
    if m < 0 or d < 0:
        raise InputError("need m >= 0 and d >= 0")
    return _face_recurse(chi(a), m, d)


def face_vector_recurse(a, n: int, m: int) -> FaceVector:
    a = as_vector(a)
    if len(a) != n:
        raise InputError("need |a| = n")
    return FaceVector(tuple(face_count_recurse(a, m, d) for d in range(n * m + 1)))


def face_count_bruteforce(a, n: int, m: int, budget: int | None = None) -> FaceVector:
    """Face counts by sweeping all edge subsets of G(n, m).

    A subset is a face support iff it equals the union of the forest
    supports of the polytope vertices it contains (and then its dimension
    is the first Betti number); connectivity through the sink is asserted,
    not assumed.
    """
    a = as_vector(a)
    if len(a) != n:
        raise InputError("need |a| = n")
    g = build_grid_graph(n, m, a)
    n_edges = len(g.edges)
    if budget is not None and 2 ** n_edges > budget:
        raise BudgetExceeded(f"2^{n_edges} edge subsets exceed budget {budget}")
    vertex_masks = []
    for pp in enumerate_pps(theta(a, (0,) * n), m):
        f = psi(pp, a, (0,) * n)
        s = support(f)
        if is_forest(s):
            vertex_masks.append(s.mask)
    counts = [0] * (n * m + 1)
    for mask in range(2 ** n_edges):
        union = 0
        seen_vertex = False
        for vm in vertex_masks:
            if vm & ~mask == 0:
                union |= vm
                seen_vertex = True
        if not seen_vertex or union != mask:
            continue
        sub = Subgraph(g, mask)
        assert len(connected_components(sub)) <= 1, "valid supports must be connected for b = 0"
        counts[betti_number(sub)] += 1
    return FaceVector(tuple(counts))


def simplex_product_face_vector(runs) -> FaceVector:
    """f-vector of a product of simplices with the given dimensions, from
    the binomial f-vectors by convolution (independent oracle for m = 1)."""
    poly = (1,)
    total_dim = 0
    for c in runs:
        simplex = tuple(polys.binomial(c + 1, d + 1) for d in range(c + 1))
        poly = polys.poly_mul(poly, simplex)
        total_dim += c
    counts = tuple(poly[d] if d < len(poly) else 0 for d in range(total_dim + 1))
    return FaceVector(counts)
