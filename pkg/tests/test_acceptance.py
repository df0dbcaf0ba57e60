"""Acceptance criteria, one test per criterion, exact arithmetic throughout.

Run with `pytest -v -s tests/test_acceptance.py` to see one pass/fail line
per criterion with timings.
"""

import time
from itertools import product

from genps.counting import (
    binomial_expansion_unsplit,
    build_A,
    count_unsplit_bruteforce,
    count_vertices_bruteforce,
    eulerian_polynomial,
    genfunc,
    matrix_power,
    p_coefficients,
    v_recurse_first,
    v_recurse_last,
    v_unsplit_matrix,
    v_vertices_matrix,
)
from genps.faces import face_count_base, face_count_bruteforce, face_vector_recurse
from genps.grids import build_grid_graph, count_integral_flows
from genps.partitions import count_pps, enumerate_pps, psi, psi_inverse
from genps.tables import reproduce_table
from genps.vectors import chi, dominates, prefix_sums, theta, z_dominate
from genps.vertices import (
    count_shifted_syt,
    count_standard_vertex_pps,
    is_unsplittable,
    is_vertex_flow,
    is_vertex_pp,
    shifted_shape_of,
    split_merge_check,
    staircase_syt_product_formula,
)

PASS = "ACCEPTANCE {num} ({name}): PASS ({secs:.1f}s)"


def _report(num, name, t0):
    print(PASS.format(num=num, name=name, secs=time.time() - t0))


def test_criterion_1_table_reproduction():
    t0 = time.time()
    for which in (1, 2, 3):
        diff = reproduce_table(which)
        assert diff.ok, f"table {which} mismatches: {diff.mismatches}"
        assert len(diff.computed.rows) == 32
    _report(1, "tables 1-3 reproduced exactly", t0)


def test_criterion_2_printed_matrix_fidelity():
    t0 = time.time()
    A = build_A(3)
    printed_a3 = (
        (1, 1, 1, 1, 1, 1, 1, 1),
        (0, 1, 1, 1, 0, 1, 1, 1),
        (0, 0, 1, 1, 1, 1, 1, 1),
        (0, 0, 0, 1, 0, 1, 1, 1),
        (0, 0, 0, 0, 1, 1, 1, 1),
        (0, 0, 0, 0, 0, 1, 1, 1),
        (0, 0, 0, 0, 0, 0, 1, 1),
        (0, 0, 0, 0, 0, 0, 0, 1),
    )
    printed_a3_sq = (
        (1, 2, 3, 4, 3, 6, 7, 8),
        (0, 1, 2, 3, 1, 4, 5, 6),
        (0, 0, 1, 2, 2, 4, 5, 6),
        (0, 0, 0, 1, 0, 2, 3, 4),
        (0, 0, 0, 0, 1, 2, 3, 4),
        (0, 0, 0, 0, 0, 1, 2, 3),
        (0, 0, 0, 0, 0, 0, 1, 2),
        (0, 0, 0, 0, 0, 0, 0, 1),
    )
    printed_a3_cube = (
        (1, 3, 6, 10, 7, 19, 26, 34),
        (0, 1, 3, 6, 3, 11, 16, 22),
        (0, 0, 1, 3, 3, 9, 14, 20),
        (0, 0, 0, 1, 0, 3, 6, 10),
        (0, 0, 0, 0, 1, 3, 6, 10),
        (0, 0, 0, 0, 0, 1, 3, 6),
        (0, 0, 0, 0, 0, 0, 1, 3),
        (0, 0, 0, 0, 0, 0, 0, 1),
    )
    assert A.rows == printed_a3
    assert matrix_power(A, 2) == printed_a3_sq
    assert matrix_power(A, 3) == printed_a3_cube
    red_i, red_j = A.position((1, 1, 0)), A.position((0, 1, 1))
    assert (A.rows[red_i][red_j], printed_a3_sq[red_i][red_j], printed_a3_cube[red_i][red_j]) == (0, 1, 3)
    blue_i = A.position((1, 0, 0))
    for k in range(7):
        assert matrix_power(A, k)[blue_i][red_j] == 0
    _report(2, "printed 8x8 matrices, red entries 0/1/3, persistent blue zero", t0)


def test_criterion_3_binomial_expansion():
    t0 = time.time()
    be = binomial_expansion_unsplit((1, 1, 1), (0, 0, 0))
    assert be.constant == 0 and be.coefficients == (1, 6, 13, 14, 8, 2)
    for m in range(9):
        assert be.value(m) == v_unsplit_matrix((1, 1, 1), (0, 0, 0), m)
    _report(3, "binomial expansion (1,6,13,14,8,2) and reconstruction m <= 8", t0)


def test_criterion_4_face_vectors():
    t0 = time.time()
    target = (1, 10, 21, 18, 7, 1)
    assert face_vector_recurse((1, 1), 2, 2).including_empty == target
    assert face_count_bruteforce((1, 1), 2, 2).including_empty == target
    assert tuple(face_count_base((1, 1), d) for d in range(3)) == (4, 4, 1)
    _report(4, "f-vector (1,10,21,18,7,1) by both routes; square base case", t0)


def test_criterion_5_eulerian_case():
    t0 = time.time()
    from genps.counting import count_vertex_pps

    for n in (2, 3, 4):
        a = (1,) * n
        b = (0,) + (1,) * (n - 1)
        sh = theta(a, b)
        for m in range(7):
            assert count_vertex_pps(sh, m) == (m + 1) ** n
            if m <= 2:
                assert count_vertices_bruteforce(a, b, m) == (m + 1) ** n
        gf = genfunc(a, b, "vertices")
        assert gf.numerator == eulerian_polynomial(n)
        assert gf.denominator_power == n + 1
    _report(5, "v = (m+1)^n with Eulerian numerator over (1-x)^(n+1), n = 2..4", t0)


def test_criterion_6_leading_term_syt():
    t0 = time.time()
    expected = {1: 1, 2: 1, 3: 2, 4: 12}
    for n in (1, 2, 3, 4):
        a = (1,) * n
        sh = theta(a, (0,) * n)
        brute = count_standard_vertex_pps(sh)
        syt = count_shifted_syt(shifted_shape_of(sh.outer))
        formula = staircase_syt_product_formula(n)
        pk = p_coefficients(a, (0,) * n).coefficients[-1]
        assert brute == syt == formula == pk == expected[n]
    _report(6, "leading p-coefficient = shifted SYT = product formula (1,1,2,12)", t0)


def test_criterion_7_equivalence_sweeps():
    t0 = time.time()
    for n in (1, 2, 3):
        for a in product((0, 1), repeat=n):
            for b in product((0, 1), repeat=n):
                if not dominates(a, b):
                    continue
                sh = theta(a, b)
                pa, pb = prefix_sums(a), prefix_sums(b)
                pe = p_coefficients(a, b)
                for m in range(4):
                    pps = list(enumerate_pps(sh, m))
                    # (i) lattice points = integral flows, counted independently
                    g = build_grid_graph(n, m, a, b)
                    assert len(pps) == count_integral_flows(g)
                    vertex_count = 0
                    for pp in pps:
                        f = psi(pp, a, b)
                        # (ii) forest = split/merge = vertex plane partition
                        v1, v2, v3 = is_vertex_flow(f), split_merge_check(f), is_vertex_pp(pp)
                        assert v1 == v2 == v3
                        vertex_count += v1
                        assert psi_inverse(f) == pp
                        # (iv) row-sum identity for every flow
                        rows = list(f.y) + [f.sink_flows]
                        for i in range(n):
                            assert sum(rows[i]) == pa[i] - pb[i]
                    # (iii) counting chains at zero tolerance
                    assert vertex_count == pe.value(m)
                    if m >= 1 or not any(b):
                        v = v_unsplit_matrix(a, b, m)
                        assert v == count_unsplit_bruteforce(a, b, m)
                        assert v == v_recurse_first(a, b, m)
                        assert v == v_recurse_last(a, b, m)
                        assert v == binomial_expansion_unsplit(a, b).value(m)
                    if not any(b):
                        assert vertex_count == v_vertices_matrix(a, m)
                        assert vertex_count == sum(
                            1 for pp in pps if is_unsplittable(psi(pp, a, b))
                        )
    _report(7, "equivalence sweeps n <= 3, m <= 3, zero tolerance", t0)


def test_criterion_8_degenerate_contracts():
    t0 = time.time()
    for n in (1, 2, 3, 4, 5):
        for a in [(1,) * n, (2,) + (0,) * (n - 1), tuple(2 - (i % 2) for i in range(n))]:
            assert v_vertices_matrix(a, 0) == 1
            assert count_vertices_bruteforce(a, (0,) * n, 0) == 1
    assert count_pps(theta((1, 1), (1, 1)), 5) == 1  # empty shape
    assert count_pps(theta((0, 0, 0), (0, 0, 0)), 2) == 1
    for a in [(1, 1), (2, 0, 1), (0, 3)]:
        assert z_dominate(a, a).z == 1
    _report(8, "m = 0 counts, empty-shape enumeration, z(a,a) = 1", t0)
