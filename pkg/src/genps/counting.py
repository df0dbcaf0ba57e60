"""Counting vertices and unsplittable flows: column-fixing recurrences, the
transfer matrix of the 1-domination digraph, generating functions, and
binomial-basis expansions.

The operative notion of "unsplittable count" throughout is the number of
1-domination chains chi(a) |>_1 j_1 |>_1 ... |>_1 j_m |>_1 chi(b), i.e. the
(chi(a), chi(b)) entry of the (m+1)-st power of the transfer matrix; all
tabulated values come from it.  Vertex counts for b != 0 come from a
column-transfer DP over vertex plane partitions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product

import numpy as np

from . import polys
from .partitions import enumerate_pps, psi
from .vectors import InputError, SkewShape, Vector, as_vector, chi, dominates, one_dominates, theta
from .vertices import is_unsplittable, is_vertex_flow, is_vertex_pp

MAX_TRANSFER_N = 12


def all_patterns(n: int):
    """0/1 vectors of length n in decreasing lexicographic order (first
    coordinate most significant)."""
    return [tuple((r >> (n - 1 - i)) & 1 for i in range(n)) for r in range(2 ** n - 1, -1, -1)]


def w_right(j, a) -> Vector | None:
    """The unique absorption vector with support pattern j making the
    one-column graph H_top(a, .) carry an unsplittable flow; None unless
    chi(a) |>_1 j.  Each positive position of j collects the sum of a over
    the positions since the previous positive one."""
    j, a = as_vector(j), as_vector(a)
    if len(j) != len(a):
        raise InputError("length mismatch")
    if any(e not in (0, 1) for e in j):
        raise InputError("j must be a 0/1 vector")
    if not one_dominates(chi(a), j):
        return None
    out = [0] * len(a)
    block = 0
    for i, (ji, ai) in enumerate(zip(j, a)):
        block += ai
        if ji:
            out[i] = block
            block = 0
    w = tuple(out)
    assert chi(w) == j, "1-domination must force a positive block sum at every switch"
    return w


def w_left_member(u, b) -> bool:
    """Whether H_top(u, b) carries an unsplittable flow: chi(u) |>_1 chi(b)
    and the sums of u over the gaps between consecutive positive entries of
    b hit those entries exactly."""
    u, b = as_vector(u), as_vector(b)
    if len(u) != len(b):
        raise InputError("length mismatch")
    if not one_dominates(chi(u), chi(b)):
        return False
    block = 0
    for ui, bi in zip(u, b):
        block += ui
        if bi:
            if block != bi:
                return False
            block = 0
    return True


def dominated_vectors(a):
    """All u in N^n with a |> u (finite: prefix sums are capped)."""
    a = as_vector(a)
    prefixes = list(np.cumsum(a))

    def rec(i, used):
        if i == len(a):
            yield ()
            return
        for v in range(prefixes[i] - used + 1):
            for rest in rec(i + 1, used + v):
                yield (v,) + rest

    yield from rec(0, 0)


# ---------------------------------------------------------------------------
# brute-force counts


def count_unsplit_bruteforce(a, b, m: int) -> int:
    """Unsplittable-flow count by exhaustive DFS over 1-domination chains
    chi(a) |>_1 j_1 |>_1 ... |>_1 j_m |>_1 chi(b); no matrices, no
    memoization, so it can serve as the independent oracle."""
    a, b = as_vector(a), as_vector(b)
    if not dominates(a, b):
        raise InputError("need a |> b")
    patterns = all_patterns(len(a))
    target = chi(b)

    def rec(p, steps):
        if steps == 0:
            return 1 if one_dominates(p, target) else 0
        return sum(rec(q, steps - 1) for q in patterns if one_dominates(p, q))

    return rec(chi(a), m)


def count_vertices_bruteforce(a, b, m: int) -> int:
    """Vertex count by enumerating all lattice points and keeping those
    whose flow has forest support."""
    a, b = as_vector(a), as_vector(b)
    if not dominates(a, b):
        raise InputError("need a |> b")
    return sum(1 for pp in enumerate_pps(theta(a, b), m) if is_vertex_flow(psi(pp, a, b)))


def count_flows_without_splits(a, b, m: int) -> int:
    """Lattice points whose canonical trajectory decomposition has no split
    at all (the literal trajectory predicate; equals the vertex count and
    the chain count when b = 0)."""
    a, b = as_vector(a), as_vector(b)
    if not dominates(a, b):
        raise InputError("need a |> b")
    return sum(1 for pp in enumerate_pps(theta(a, b), m) if is_unsplittable(psi(pp, a, b)))


# ---------------------------------------------------------------------------
# column-fixing recurrences


def v_recurse_first(a, b, m: int) -> int:
    """Fix the flow on the first column of horizontal edges: sum over the
    support patterns j that chi(a) 1-dominates, replacing a by the forced
    column w_right(j, a)."""
    a, b = as_vector(a), as_vector(b)
    if not dominates(a, b):
        raise InputError("need a |> b")
    patterns = all_patterns(len(a))
    chib = chi(b)

    @lru_cache(maxsize=None)
    def rec(pattern, mm):
        if mm == 0:
            return 1 if one_dominates(pattern, chib) else 0
        total = 0
        for j in patterns:
            w = w_right(j, pattern)
            if w is not None:
                total += rec(chi(w), mm - 1)
        return total

    return rec(chi(a), m)


def v_recurse_last(a, b, m: int) -> int:
    """Fix the flow on the last column of horizontal edges and peel columns
    from the right: V_1(j) = [chi(a) |>_1 j], V_k(j) = sum over i |>_1 j of
    V_{k-1}(i), answered as the sum of V_m over the j with j |>_1 chi(b)."""
    a, b = as_vector(a), as_vector(b)
    if not dominates(a, b):
        raise InputError("need a |> b")
    patterns = all_patterns(len(a))
    chia, chib = chi(a), chi(b)
    if m == 0:
        return 1 if one_dominates(chia, chib) else 0
    level = {j: 1 if one_dominates(chia, j) else 0 for j in patterns}
    for _ in range(m - 1):
        level = {
            j: sum(v for i, v in level.items() if one_dominates(i, j)) for j in patterns
        }
    return sum(v for j, v in level.items() if one_dominates(j, chib))


def v_unsplit_midproduct(a, b, m: int, c: int) -> int:
    """Split at an interior column c (1 <= c <= m-2): the pattern-level
    product formula matching the chain semantics."""
    a, b = as_vector(a), as_vector(b)
    if not 1 <= c <= m - 2:
        raise InputError("need 1 <= c <= m - 2")
    total = 0
    for u in all_patterns(len(a)):
        if dominates(chi(a), u):
            total += v_unsplit_matrix(a, u, c) * v_unsplit_matrix(u, b, m - c - 1)
    return total


# ---------------------------------------------------------------------------
# transfer matrix


@dataclass(frozen=True)
class TransferMatrix:
    """Adjacency matrix of the 1-domination digraph on {0,1}^n, rows and
    columns in decreasing lexicographic order (upper unitriangular)."""

    n: int
    order: tuple[Vector, ...]
    rows: tuple[tuple[int, ...], ...]

    def position(self, pattern) -> int:
        pattern = tuple(pattern)
        value = 0
        for e in pattern:
            value = (value << 1) | (1 if e else 0)
        return 2 ** self.n - 1 - value

    def entry(self, j, k) -> int:
        return self.rows[self.position(j)][self.position(k)]

    @property
    def size(self) -> int:
        return 2 ** self.n


def build_A(n: int) -> TransferMatrix:
    if not 1 <= n <= MAX_TRANSFER_N:
        raise InputError(f"transfer matrix supported for 1 <= n <= {MAX_TRANSFER_N}")
    order = tuple(all_patterns(n))
    rows = tuple(
        tuple(1 if one_dominates(j, k) else 0 for k in order) for j in order
    )
    return TransferMatrix(n, order, rows)


def mat_mul(p, q):
    size = len(p)
    qt = list(zip(*q))
    return tuple(
        tuple(sum(a * b for a, b in zip(row, col)) for col in qt) for row in p
    )


def mat_power(rows, k: int):
    size = len(rows)
    result = tuple(tuple(1 if i == j else 0 for j in range(size)) for i in range(size))
    base = rows
    while k:
        if k & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base) if k > 1 else base
        k >>= 1
    return result


def matrix_power(A: TransferMatrix, k: int):
    """Exact k-th power of the transfer matrix (big integers)."""
    if k < 0:
        raise InputError("power must be >= 0")
    return mat_power(A.rows, k)


def iter_powers(A: TransferMatrix, up_to: int):
    """A^0, A^1, ..., A^up_to computed incrementally."""
    size = A.size
    current = tuple(tuple(1 if i == j else 0 for j in range(size)) for i in range(size))
    yield current
    for _ in range(up_to):
        current = mat_mul(current, A.rows)
        yield current


@lru_cache(maxsize=None)
def _cached_A(n: int) -> TransferMatrix:
    return build_A(n)


def v_unsplit_matrix(a, b, m: int) -> int:
    """(A_n^(m+1)) at (chi(a), chi(b))."""
    a, b = as_vector(a), as_vector(b)
    A = _cached_A(len(a))
    power = mat_power(A.rows, m + 1)
    return power[A.position(chi(a))][A.position(chi(b))]


def v_vertices_matrix(a, m: int) -> int:
    """Vertex count for b = 0: the chi(a) row sum of A_n^m."""
    a = as_vector(a)
    A = _cached_A(len(a))
    power = mat_power(A.rows, m)
    return sum(power[A.position(chi(a))])


# ---------------------------------------------------------------------------
# binomial expansions


@dataclass(frozen=True)
class BinomialExpansion:
    """value(m) = constant + sum_k coefficients[k-1] * C(m+1, k)."""

    constant: int
    coefficients: tuple[int, ...]

    def value(self, m: int) -> int:
        return self.constant + sum(
            c * polys.binomial(m + 1, k) for k, c in enumerate(self.coefficients, start=1)
        )


def binomial_expansion_unsplit(a, b) -> BinomialExpansion:
    """Coefficients ((A_n - I)^k) at (chi(a), chi(b)): loop-free path counts
    in the 1-domination digraph, all nonnegative; the k = 0 term is 1
    exactly when chi(a) = chi(b)."""
    a, b = as_vector(a), as_vector(b)
    A = _cached_A(len(a))
    size = A.size
    base = tuple(
        tuple(A.rows[i][j] - (1 if i == j else 0) for j in range(size)) for i in range(size)
    )
    i, j = A.position(chi(a)), A.position(chi(b))
    coeffs = []
    power = base
    for k in range(1, size):
        coeffs.append(power[i][j])
        if all(v == 0 for row in power for v in row):
            break
        power = mat_mul(power, base)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return BinomialExpansion(constant=1 if chi(a) == chi(b) else 0, coefficients=tuple(coeffs))


# ---------------------------------------------------------------------------
# vertex plane partition transfer (vertex counts for general b)


def _column_states(height: int, bound: int) -> np.ndarray:
    """Weakly decreasing fillings of a column, as an (N, height) array."""
    if height == 0:
        return np.zeros((1, 0), dtype=np.int64)
    states = []

    def rec(prefix, hi):
        if len(prefix) == height:
            states.append(prefix)
            return
        for v in range(hi, -1, -1):
            rec(prefix + (v,), v)

    rec((), bound)
    return np.array(states, dtype=np.int64)


def _pair_matrix(shape: SkewShape, j: int, s1: np.ndarray, s2: np.ndarray) -> np.ndarray:
    """Boolean transition matrix between the fillings of columns j and j+1
    implementing row-monotonicity plus the vertex column-pair conditions."""
    mu1, lam1 = shape.inner_col(j), shape.outer_col(j)
    mu2, lam2 = shape.inner_col(j + 1), shape.outer_col(j + 1)

    def L(i):
        return s1[:, i - mu1 - 1][:, None]

    def R(i):
        return s2[:, i - mu2 - 1][None, :]

    ok = np.ones((s1.shape[0], s2.shape[0]), dtype=bool)
    for i in range(mu1 + 1, lam2 + 1):  # shared rows
        ok &= L(i) >= R(i)
    if mu1 == mu2 and lam1 == lam2:
        for i in range(mu1 + 1, lam1 + 1):
            ok &= L(i) == R(i)
        return ok
    if mu1 == mu2:
        for i in range(mu2 + 2, lam2 + 1):
            ok &= ~((L(i) == R(i)) & (L(i - 1) != R(i - 1)))
        for i in range(mu2 + 1, lam2 + 1):
            ok &= (R(i) < L(i + 1)) | (R(i) == L(i))
        return ok
    if lam1 == lam2:
        for i in range(mu1 + 1, lam1):
            ok &= ~((L(i) == R(i)) & (L(i + 1) != R(i + 1)))
        for i in range(mu1, lam1):
            ok &= (R(i) < L(i + 1)) | (L(i + 1) == R(i + 1))
        return ok
    # both column ends differ: crossing positions L(i) <= R(i-1)
    lo_i, hi_i = mu1 + 1, lam2 + 1
    if lo_i > hi_i:
        return ok
    sentinel_min, sentinel_max = hi_i + 1, lo_i - 1
    i_min = np.full(ok.shape, sentinel_min, dtype=np.int64)
    i_max = np.full(ok.shape, sentinel_max, dtype=np.int64)
    for i in range(lo_i, hi_i + 1):
        crossing = L(i) <= R(i - 1)
        i_min = np.where(crossing & (i_min == sentinel_min), i, i_min)
        i_max = np.where(crossing, i, i_max)
    for lo in range(lo_i, hi_i + 1):
        for hi in range(lo + 1, hi_i + 1):
            mask = (i_min == lo) & (i_max == hi)
            if not mask.any():
                continue
            eq = np.ones_like(ok)
            for i in range(lo, hi):  # equality on rows min .. max-1
                eq &= L(i) == R(i)
            ok &= ~mask | eq
    return ok


def count_vertex_pps(shape: SkewShape, bound: int) -> int:
    """Number of vertex plane partitions of the shape with entries <= bound,
    by contracting the column-pair transition matrices."""
    if bound < 0:
        raise InputError("bound must be >= 0")
    width = shape.width
    if width == 0:
        return 1
    states = [
        _column_states(shape.outer_col(j) - shape.inner_col(j), bound)
        for j in range(1, width + 1)
    ]
    vec = np.ones(states[-1].shape[0], dtype=np.int64)
    for j in range(width - 1, 0, -1):
        t = _pair_matrix(shape, j, states[j - 1], states[j])
        vec = t.astype(np.int64) @ vec
        assert vec.max(initial=0) < 2 ** 62, "int64 overflow in vertex-pp transfer"
    return int(vec.sum())


def p_coefficients(a, b) -> BinomialExpansion:
    """Vertex plane partitions classified by how many distinct values they
    use: p_k counts those using exactly {0, ..., k-1}, recovered from the
    bounded counts by binomial inversion.  Reconstruction:
    v(m) = sum_k p_k C(m+1, k) (+1 for the empty shape)."""
    a, b = as_vector(a), as_vector(b)
    sh = theta(a, b)
    size = sh.size
    counts = [count_vertex_pps(sh, j) for j in range(size)]
    ps = []
    for k in range(1, size + 1):
        p_k = sum(
            (-1) ** (k - j) * polys.binomial(k, j) * counts[j - 1] for j in range(1, k + 1)
        )
        assert p_k >= 0, "vertex plane partition counts must be nonnegative"
        ps.append(p_k)
    while ps and ps[-1] == 0:
        ps.pop()
    return BinomialExpansion(constant=1 if size == 0 else 0, coefficients=tuple(ps))


# ---------------------------------------------------------------------------
# generating functions


@dataclass(frozen=True)
class RationalGenFunc:
    """numerator / (1-x)^denominator_power, reduced; degree is the degree of
    the counting polynomial in m (denominator_power - 1)."""

    numerator: tuple[int, ...]
    denominator_power: int
    degree: int

    def series(self, terms: int) -> list[int]:
        out = []
        e = self.denominator_power
        for m in range(terms):
            val = sum(
                self.numerator[i] * polys.binomial(m - i + e - 1, e - 1)
                for i in range(len(self.numerator))
                if i <= m
            )
            out.append(val)
        return out

    def to_json(self) -> dict:
        return {
            "numerator": list(self.numerator),
            "denominator_power": self.denominator_power,
            "degree": self.degree,
        }


def _genfunc_from_values(values) -> RationalGenFunc:
    num, e = polys.series_numerator_from_values(values)
    return RationalGenFunc(tuple(num), e, e - 1)


def _unsplit_values(a, b, up_to: int) -> list[int]:
    A = _cached_A(len(a))
    i, j = A.position(chi(a)), A.position(chi(b))
    return [p[i][j] for p in iter_powers(A, up_to + 1)][1:]


def _vertex_values_matrix(a, up_to: int) -> list[int]:
    A = _cached_A(len(a))
    i = A.position(chi(a))
    return [sum(p[i]) for p in iter_powers(A, up_to)]


def genfunc(a, b=None, mode: str = "vertices", engine: str = "values") -> RationalGenFunc:
    """Reduced rational generating function of m -> count(m).

    mode "unsplittable": any a |> b, chain counts.  mode "vertices": vertex
    counts (transfer matrix for b = 0, vertex-pp transfer otherwise).
    engine "values" uses exact value sequences plus finite differences;
    engine "determinant" recomputes through minors of I - xA_n (supported
    for unsplittable counts and for vertices with b = 0) and must agree.
    """
    a = as_vector(a)
    b = as_vector(b) if b is not None else (0,) * len(a)
    if not dominates(a, b):
        raise InputError("need a |> b")
    n = len(a)
    if mode not in ("vertices", "unsplittable"):
        raise InputError(f"unknown mode {mode!r}")
    if engine == "determinant":
        return _genfunc_determinant(a, b, mode)
    if engine != "values":
        raise InputError(f"unknown engine {engine!r}")
    if mode == "unsplittable":
        return _genfunc_from_values(_unsplit_values(a, b, 2 ** n))
    if all(e == 0 for e in b):
        return _genfunc_from_values(_vertex_values_matrix(a, 2 ** n))
    sh = theta(a, b)
    values = [count_vertex_pps(sh, m) for m in range(sh.size + 2)]
    return _genfunc_from_values(values)


def _det_poly(matrix_of_polys, eval_points):
    """Exact determinant of a polynomial matrix by integer evaluation at the
    given points followed by exact interpolation."""
    samples = []
    for t in eval_points:
        numeric = [[polys.poly_eval(p, t) for p in row] for row in matrix_of_polys]
        samples.append((t, polys.bareiss_determinant(numeric)))
    return polys.interpolate_integer_poly(samples)


def _minor(matrix, drop_row: int, drop_col: int):
    return [
        [v for c, v in enumerate(row) if c != drop_col]
        for r, row in enumerate(matrix)
        if r != drop_row
    ]


def _i_minus_xa(A: TransferMatrix):
    size = A.size
    return [
        [
            polys.trim(((1 if r == c else 0), -A.rows[r][c]))
            for c in range(size)
        ]
        for r in range(size)
    ]


def cofactor_series_numerator(A: TransferMatrix, row_pattern, col_pattern) -> tuple:
    """Signed minor of I - xA: the numerator of sum_m (A^m)_{row,col} x^m
    over (1-x)^(2^n), with the sign taken from actual matrix positions."""
    i, j = A.position(row_pattern), A.position(col_pattern)
    mat = _i_minus_xa(A)
    det = _det_poly(_minor(mat, j, i), range(A.size + 1))
    return polys.poly_scale(det, (-1) ** (i + j))


def _genfunc_determinant(a, b, mode: str) -> RationalGenFunc:
    n = len(a)
    A = _cached_A(n)
    e = A.size
    one_minus_x_e = polys.poly_pow(polys.ONE_MINUS_X, e)
    if mode == "unsplittable":
        p = cofactor_series_numerator(A, chi(a), chi(b))
        # G(x) = p/(1-x)^e counts (A^m) entries from m = 0; shift out m = 0
        shifted = polys.poly_add(p, polys.poly_scale(one_minus_x_e, -(1 if chi(a) == chi(b) else 0)))
        num = polys.divide_out(shifted, (0, 1))
        assert num is not None, "series must vanish at order 0 after the shift"
    else:
        if any(e_ != 0 for e_ in b):
            raise InputError("determinant engine covers vertices only for b = 0")
        # sum over all column patterns = one determinant with the chi(a)
        # column replaced by the all-ones vector
        i = A.position(chi(a))
        mat = _i_minus_xa(A)
        for r in range(A.size):
            mat[r][i] = (1,)
        num = _det_poly(mat, range(A.size + 1))
    num, e = polys.reduce_by_one_minus_x(num, e)
    return RationalGenFunc(tuple(num), e, e - 1)


def poly_fit(values, degree_bound: int | None = None):
    """Exact polynomial through the values at m = 0, 1, ... (Fractions)."""
    return polys.poly_fit(values, degree_bound)


def eulerian_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (A(n,1), ..., A(n,n)) counted from permutation descents."""
    counts = [0] * n
    for w in permutations(range(n)):
        d = sum(1 for i in range(n - 1) if w[i] > w[i + 1])
        counts[d] += 1
    return tuple(counts)
