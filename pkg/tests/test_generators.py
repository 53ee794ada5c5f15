"""Generator construction: invariant chain, linear solve, determinant route."""

from fractions import Fraction

import pytest

from quasinv.bipoly import BiPoly, bar_conjugate, from_text
from quasinv.dihedral import DihedralSystem, GroupElement
from quasinv.errors import OddMirrorCount
from quasinv.generators import (build_matrix_A, full_basis,
                                generator_from_determinant,
                                invariant_chain_gens, solve_qi, valid_indices)
from quasinv.poincare import degree_table
from quasinv.quasi import check_per_line
from quasinv.scalars import det_fraction_free

SYS210 = DihedralSystem(4, 1, 0)
GRID = [(N, m, n) for N in (1, 2, 3) for m in range(4) for n in range(4)]


# ---------------------------------------------------------------------------
# invariant chain
# ---------------------------------------------------------------------------

def test_chain_example_n2_m1_n0():
    q0, q1, q2, q3 = invariant_chain_gens(SYS210)
    assert q0 == BiPoly.constant(1)
    assert q1 == BiPoly({(2, 0): 1, (0, 2): 1})
    assert q2 == BiPoly({(2, 0): 1, (0, 2): -1}) ** 3
    assert q3 == q1 * q2


def test_chain_example_n1():
    sys = DihedralSystem(2, 2, 1)
    _, q1, q2, _ = invariant_chain_gens(sys)
    assert q1 == (BiPoly({(1, 0): 1, (0, 1): 1})) ** 3
    assert q2 == (BiPoly({(1, 0): 1, (0, 1): -1})) ** 5


def test_chain_degrees_and_quasi_invariance():
    for N, m, n in GRID:
        sys = DihedralSystem(2 * N, m, n)
        q0, q1, q2, q3 = invariant_chain_gens(sys)
        assert (q0.degree(), q1.degree(), q2.degree(), q3.degree()) == \
            (0, (2 * n + 1) * N, (2 * m + 1) * N, (m + n + 1) * 2 * N)
        if m <= 2 and n <= 2:
            for q in (q0, q1, q2, q3):
                assert check_per_line(sys, q).ok


def test_chain_anti_invariance():
    for N, m, n in [(1, 1, 0), (2, 1, 0), (2, 1, 2), (3, 2, 1)]:
        sys = DihedralSystem(2 * N, m, n)
        _, q1, q2, q3 = invariant_chain_gens(sys)
        odd_reflection = GroupElement(True, 1)
        even_reflection = GroupElement(True, 0)
        assert sys.act(odd_reflection, q1) == -q1
        assert sys.act(even_reflection, q1) == q1
        assert sys.act(even_reflection, q2) == -q2
        assert sys.act(odd_reflection, q2) == q2
        assert sys.act(even_reflection, q3) == -q3
        assert sys.act(odd_reflection, q3) == -q3


def test_chain_rejects_odd_mirrors():
    with pytest.raises(OddMirrorCount):
        invariant_chain_gens(DihedralSystem.uniform(3, 1))


# ---------------------------------------------------------------------------
# linear-solve route
# ---------------------------------------------------------------------------

def test_solve_qi_examples():
    assert solve_qi(SYS210, 1) == from_text("1*z^3*zb^0 + 3*z^1*zb^2")
    assert solve_qi(SYS210, 3) == from_text("1*z^5*zb^0 + -5*z^3*zb^2")
    assert solve_qi(DihedralSystem(4, 1, 1), 1) == \
        from_text("1*z^5*zb^0 + 5/3*z^1*zb^4")


def test_solve_qi_swapped_multiplicities():
    # larger multiplicity on the odd-index class: alternating condition row
    assert solve_qi(DihedralSystem(4, 0, 1), 1) == \
        from_text("1*z^3*zb^0 + -3*z^1*zb^2")


def test_solve_qi_normal_form():
    for N, m, n in GRID:
        if N == 1:
            continue
        sys = DihedralSystem(2 * N, m, n)
        for i in valid_indices(sys):
            q = solve_qi(sys, i)
            D = (m + n) * N + i
            assert q.coeff(D, 0) == 1
            rest = q - BiPoly.monomial(D, 0)
            assert all(a >= 1 and b >= 1 for a, b in rest.terms)


# ---------------------------------------------------------------------------
# condition matrix and determinant route
# ---------------------------------------------------------------------------

def test_matrix_examples():
    matrix = build_matrix_A(SYS210, 1)
    assert matrix.rows == ((3, -1),)
    assert matrix.monomials == ((3, 0), (1, 2))
    matrix = build_matrix_A(DihedralSystem(4, 1, 1), 1)
    assert matrix.rows == ((5, 0, -3), (0, 1, 0))
    assert matrix.monomials == ((5, 0), (3, 2), (1, 4))


def test_matrix_zero_pattern():
    sys = DihedralSystem(4, 3, 2)
    matrix = build_matrix_A(sys, 1)
    m, n = 3, 2
    low = min(m, n)
    assert len(matrix.rows) == m + n
    for t in range(low):
        assert all(v == 0 for s, v in enumerate(matrix.rows[t]) if s % 2 == 1)
        assert all(v == 0 for s, v in enumerate(matrix.rows[low + t])
                   if s % 2 == 0)
    for row in matrix.rows[2 * low:]:
        assert all(v != 0 for v in row)


def test_determinant_route_examples():
    # 1x1 minors: det A_1 = -1, expansion recovers the solved generator
    matrix = build_matrix_A(SYS210, 1)
    assert det_fraction_free([row[1:] for row in matrix.rows]) == -1
    assert generator_from_determinant(SYS210, 1) == \
        from_text("1*z^3*zb^0 + 3*z^1*zb^2")
    # 2x2 minors with det A_1 = 3
    sys = DihedralSystem(4, 1, 1)
    matrix = build_matrix_A(sys, 1)
    assert det_fraction_free([row[1:] for row in matrix.rows]) == 3
    assert generator_from_determinant(sys, 1) == \
        from_text("1*z^5*zb^0 + 5/3*z^1*zb^4")


def test_cramer_minor_ratios():
    for sys in (SYS210, DihedralSystem(4, 1, 1), DihedralSystem(6, 2, 1)):
        for i in valid_indices(sys):
            matrix = build_matrix_A(sys, i)
            det_a1 = det_fraction_free([row[1:] for row in matrix.rows])
            solved = solve_qi(sys, i)
            for k, mono in enumerate(matrix.monomials):
                minor = [row[:k] + row[k + 1:] for row in matrix.rows]
                ratio = (-1) ** k * det_fraction_free(minor) / det_a1
                assert ratio == Fraction(solved.coeff(*mono))


def test_dual_path_identity_on_grid():
    for N, m, n in GRID:
        sys = DihedralSystem(2 * N, m, n)
        for i in valid_indices(sys):
            matrix = build_matrix_A(sys, i)
            assert det_fraction_free([row[1:] for row in matrix.rows]) != 0
            assert solve_qi(sys, i) == generator_from_determinant(sys, i)


def test_generators_pass_per_line_including_equal_multiplicities():
    for N, m, n in GRID:
        if m > 2 or n > 2:
            continue
        sys = DihedralSystem(2 * N, m, n)
        for i in valid_indices(sys):
            q = solve_qi(sys, i)
            assert check_per_line(sys, q).ok
            assert check_per_line(sys, bar_conjugate(q)).ok


# ---------------------------------------------------------------------------
# full basis
# ---------------------------------------------------------------------------

def test_full_basis_counts_and_degrees():
    gens = full_basis(SYS210)
    assert len(gens) == 8
    assert gens.degrees() == [0, 2, 3, 3, 5, 5, 6, 8]
    assert [e.name for e in gens.entries] == \
        ["q0", "q1", "q1_1", "q2_1", "q1_3", "q2_3", "q2", "q3"]
    for N, m, n in GRID:
        sys = DihedralSystem(2 * N, m, n)
        gens = full_basis(sys)
        assert len(gens) == 4 * N
        table = [d for d, c in degree_table(sys) for _ in range(c)]
        assert sorted(gens.degrees()) == table


def test_full_basis_n1_has_only_chain():
    gens = full_basis(DihedralSystem(2, 1, 1))
    assert len(gens) == 4
    assert [e.label for e in gens.entries] == ["q0", "q1", "q2", "q3"]


def test_conjugation_symmetry():
    for sys in (SYS210, DihedralSystem(6, 1, 2)):
        gens = full_basis(sys)
        by_name = {e.name: e.poly for e in gens.entries}
        for i in valid_indices(sys):
            assert by_name[f"q2_{i}"] == bar_conjugate(by_name[f"q1_{i}"])
            assert bar_conjugate(by_name[f"q2_{i}"]) == by_name[f"q1_{i}"]


def test_multiplicity_swap_symmetry():
    for N in (1, 2, 3):
        for m in range(3):
            for n in range(3):
                left = full_basis(DihedralSystem(2 * N, m, n))
                right = full_basis(DihedralSystem(2 * N, n, m))
                assert sorted(left.degrees()) == sorted(right.degrees())


def test_determinant_provenance():
    gens = full_basis(SYS210, method="det")
    assert gens.provenance == "determinant"
    solved = full_basis(SYS210, method="solve")
    assert solved.provenance == "solver"
    for a, b in zip(gens.entries, solved.entries):
        assert a.poly == b.poly
