"""Exact integer/rational polynomial plumbing.

Polynomials are coefficient lists, constant term first.  Everything is
arbitrary precision: ints where possible, Fraction for interpolation.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

Poly = tuple


def trim(p) -> tuple:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly_add(p, q) -> tuple:
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def poly_scale(p, c) -> tuple:
    return trim([c * x for x in p])


def poly_mul(p, q) -> tuple:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def poly_pow(p, k: int) -> tuple:
    out = (1,)
    for _ in range(k):
        out = poly_mul(out, p)
    return out


def poly_eval(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


ONE_MINUS_X = (1, -1)


def divide_out(p, q) -> tuple | None:
    """p / q if the division is exact, else None."""
    p = list(trim(p))
    q = trim(q)
    if not q:
        raise ZeroDivisionError
    if not p:
        return ()
    out = [0] * (len(p) - len(q) + 1) if len(p) >= len(q) else None
    if out is None:
        return None
    for i in range(len(out) - 1, -1, -1):
        c = p[i + len(q) - 1]
        if c % q[-1] != 0:
            return None
        out[i] = c // q[-1]
        for j, b in enumerate(q):
            p[i + j] -= out[i] * b
    if any(p[: len(q) - 1]):
        return None
    return trim(out)


def forward_differences(values) -> list:
    """Rows Δ^0 v(0), Δ^1 v(0), ... of the forward-difference table."""
    row = list(values)
    out = [row[0]]
    while len(row) > 1:
        row = [row[i + 1] - row[i] for i in range(len(row) - 1)]
        out.append(row[0])
    return out


class NonPolynomialError(ValueError):
    """Samples are not consistent with the promised polynomial degree."""


def poly_fit(values, degree_bound: int | None = None) -> tuple:
    """Exact polynomial through values at m = 0, 1, 2, ...

    Newton forward differences; coefficients returned as Fractions (ints
    collapse to Fraction with denominator 1).  With degree_bound set, any
    nonzero difference beyond the bound raises NonPolynomialError.
    """
    diffs = forward_differences(values)
    if degree_bound is not None:
        for k, d in enumerate(diffs):
            if k > degree_bound and d != 0:
                raise NonPolynomialError(
                    f"nonzero difference Δ^{k} = {d} beyond degree bound {degree_bound}"
                )
        diffs = diffs[: degree_bound + 1]
    # sum_k Δ^k v(0) * C(m, k), expanded in powers of m
    coeffs = [Fraction(0)] * max(len(diffs), 1)
    basis = (Fraction(1),)  # C(m, 0)
    for k, d in enumerate(diffs):
        if d:
            for i, c in enumerate(basis):
                coeffs[i] += d * c
        # C(m, k+1) = C(m, k) * (m - k) / (k + 1)
        basis = poly_scale(poly_mul(basis, (Fraction(-k), Fraction(1))), Fraction(1, k + 1))
        if len(basis) > len(coeffs):
            coeffs.extend([Fraction(0)] * (len(basis) - len(coeffs)))
    fitted = trim(coeffs)
    for m, v in enumerate(values):
        if poly_eval(fitted, Fraction(m)) != v:
            raise NonPolynomialError(f"residual at m={m}")
    return fitted


def series_numerator_from_values(values) -> tuple[tuple, int]:
    """Reduced rational form of sum_m v(m) x^m for polynomial v.

    Returns (numerator, e) with denominator (1-x)^e, e = degree + 1.  The
    numerator is sum_k Δ^k v(0) x^k (1-x)^(d-k), not divisible by (1-x)
    since its value at 1 is the leading difference.
    """
    diffs = forward_differences(values)
    while diffs and diffs[-1] == 0:
        diffs.pop()
    if not diffs:
        return (), 0
    d = len(diffs) - 1
    num = ()
    for k, c in enumerate(diffs):
        if c:
            term = poly_scale(poly_mul(poly_pow((0, 1), k), poly_pow(ONE_MINUS_X, d - k)), c)
            num = poly_add(num, term)
    return num, d + 1


def reduce_by_one_minus_x(num, e: int) -> tuple[tuple, int]:
    """Cancel common (1-x) factors from num / (1-x)^e."""
    num = trim(num)
    while e > 0:
        q = divide_out(num, ONE_MINUS_X)
        if q is None:
            break
        num, e = q, e - 1
    return num, e


def bareiss_determinant(matrix) -> int:
    """Exact determinant of an integer matrix (fraction-free elimination)."""
    m = [list(map(int, row)) for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def interpolate_integer_poly(points) -> tuple:
    """Exact polynomial through (x, y) samples; must have integer coefficients."""
    coeffs: tuple = ()
    basis: tuple = (Fraction(1),)
    xs: list = []
    work = [(Fraction(x), Fraction(y)) for x, y in points]
    for x, y in work:
        val = poly_eval(coeffs, x) if coeffs else Fraction(0)
        bval = poly_eval(basis, x)
        assert bval != 0, "duplicate interpolation point"
        c = (y - val) / bval
        coeffs = poly_add(coeffs, poly_scale(basis, c))
        basis = poly_mul(basis, (-x, Fraction(1)))
        xs.append(x)
    out = []
    for c in trim(coeffs):
        frac = Fraction(c)
        if frac.denominator != 1:
            raise NonPolynomialError(f"non-integer interpolated coefficient {frac}")
        out.append(int(frac))
    return trim(out)


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return comb(n, k)
