"""The two quasi-invariance checkers and the graded dimension oracle."""

import random
from fractions import Fraction

import pytest

from quasinv.bipoly import BiPoly, from_text
from quasinv.dihedral import DihedralSystem
from quasinv.quasi import (CoeffVector, check_per_line, crosscheck_checkers,
                           grouped_conditions, grouped_rows, quasi_basis,
                           quasi_dimension)

SYS210 = DihedralSystem(4, 1, 0)


def coeffs(degree, *entries):
    return CoeffVector(degree, tuple(Fraction(e) for e in entries))


# ---------------------------------------------------------------------------
# per-line checker
# ---------------------------------------------------------------------------

def test_check_per_line_known_generator():
    p = from_text("1*z^3*zb^0 + 3*z^1*zb^2")
    assert check_per_line(SYS210, p).ok


def test_check_per_line_invariants_pass():
    for sys in (SYS210, DihedralSystem(6, 2, 1), DihedralSystem.uniform(3, 2)):
        s1, s2 = sys.invariant_generators()
        for p in (s1, s2, s1 * s2 + s2, s1 ** 2 - 3 * s2):
            assert check_per_line(sys, p).ok


def test_check_per_line_violation_detail():
    report = check_per_line(SYS210, BiPoly.monomial(1, 0))
    assert not report.ok
    assert {(v.line, v.order) for v in report.violations} == {(0, 1), (2, 1)}
    assert all(v.degree == 1 for v in report.violations)
    # reported orders stay within the line multiplicities
    for v in report.violations:
        assert 1 <= (v.order + 1) // 2 <= SYS210.multiplicity(v.line)


def test_check_per_line_zero_poly():
    assert check_per_line(SYS210, BiPoly.zero()).ok


# ---------------------------------------------------------------------------
# grouped rational checker
# ---------------------------------------------------------------------------

def test_grouped_conditions_examples():
    assert grouped_conditions(SYS210, coeffs(3, 1, 0, 3, 0)) == [0, 0]
    residuals = grouped_conditions(SYS210, coeffs(5, 1, 0, 0, 0, 0, 0))
    assert residuals[0] == 5 and residuals[1] == 0
    assert grouped_conditions(SYS210, coeffs(4, 0, 0, 0, 0, 0)) == [0, 0]


def test_grouped_rows_structure():
    # (m, n) = (2, 1) on four mirrors: one level of combined classes mod 2N,
    # then one level of plain sums mod N on the even-index class
    sys = DihedralSystem(4, 2, 1)
    rows = grouped_rows(sys, 6)
    assert len(rows) == 4 + 2
    values = [6 - 2 * s for s in range(7)]
    for p in range(4):
        assert rows[p] == tuple(values[s] if s % 4 == p else 0
                                for s in range(7))
    for p in range(2):
        assert rows[4 + p] == tuple(values[s] ** 3 if s % 2 == p else 0
                                    for s in range(7))


def test_grouped_rows_alternating_for_odd_orbit():
    # larger multiplicity on the odd-index class flips signs between the two
    # residues that share a class mod N
    sys = DihedralSystem(4, 0, 1)
    rows = grouped_rows(sys, 4)
    values = [4 - 2 * s for s in range(5)]
    assert rows == [
        tuple(values[s] if s % 2 == 0 and s % 4 == 0
              else -values[s] if s % 2 == 0 else 0 for s in range(5)),
        tuple(values[s] if s % 4 == 1 else -values[s] if s % 4 == 3 else 0
              for s in range(5)),
    ]


def test_quasi_dimension_examples():
    assert quasi_dimension(SYS210, 2) == 2
    assert quasi_dimension(SYS210, 0) == 1
    assert quasi_dimension(DihedralSystem(6, 2, 2), 0) == 1
    assert quasi_dimension(SYS210, 5) == 4


def test_quasi_basis_members_pass_per_line():
    for sys in (SYS210, DihedralSystem(4, 1, 2), DihedralSystem.uniform(3, 1)):
        for d in range(0, 9):
            basis = quasi_basis(sys, d)
            assert len(basis) == quasi_dimension(sys, d)
            for p in basis:
                assert check_per_line(sys, p).ok


def perline_dimension(sys, degree):
    """Brute-force dimension oracle straight from the definition: stack the
    per-line derivative-restriction conditions on the monomial basis, expand
    each cyclotomic condition into its rational coordinates, and take the
    exact corank.  Independent of the residue-class derivation."""
    from quasinv.bipoly import BiPoly, normal_derivative, restrict_to_line
    from quasinv.scalars import exact_rank, euler_phi

    M = sys.mirrors
    phi = euler_phi(M)
    rows = []
    for j in sys.lines():
        for t in range(1, sys.multiplicity(j) + 1):
            order = 2 * t - 1
            expanded = [[Fraction(0)] * (degree + 1) for _ in range(phi)]
            for s in range(degree + 1):
                current = BiPoly.monomial(degree - s, s)
                for _ in range(order):
                    current = normal_derivative(current, j, M)
                res = restrict_to_line(current, j, M)
                gamma = res.get(degree - order)
                if gamma is not None:
                    for idx in range(phi):
                        expanded[idx][s] = gamma.coeffs[idx]
            rows.extend(expanded)
    return degree + 1 - exact_rank(rows, ncols=degree + 1)


@pytest.mark.parametrize("mirrors,me,mo", [
    (1, 1, 1), (2, 1, 0), (2, 2, 2), (3, 1, 1), (3, 2, 2),
    (4, 1, 0), (4, 0, 2), (4, 2, 1), (6, 1, 2)])
def test_quasi_dimension_against_per_line_bruteforce(mirrors, me, mo):
    sys = DihedralSystem(mirrors, me, mo)
    for d in range(0, 9):
        assert quasi_dimension(sys, d) == perline_dimension(sys, d), d


def test_quasi_dimension_monotone_in_multiplicity():
    for d in range(0, 10):
        for base, bumped in (
                (DihedralSystem(4, 1, 0), DihedralSystem(4, 2, 0)),
                (DihedralSystem(4, 1, 0), DihedralSystem(4, 1, 1)),
                (DihedralSystem.uniform(3, 1), DihedralSystem.uniform(3, 2))):
            assert quasi_dimension(bumped, d) <= quasi_dimension(base, d)


# ---------------------------------------------------------------------------
# agreement of the two checkers
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("mirrors,me,mo", [
    (1, 1, 1), (1, 2, 2), (2, 1, 0), (2, 2, 1), (3, 1, 1), (3, 2, 2),
    (4, 1, 0), (4, 0, 1), (4, 2, 1), (4, 2, 2), (6, 1, 2), (6, 2, 0)])
def test_crosscheck(mirrors, me, mo):
    sys = DihedralSystem(mirrors, me, mo)
    assert crosscheck_checkers(sys, trials=40, max_degree=12, seed=42)


def test_agreement_when_first_failure_is_higher_order():
    # elements quasi-invariant for (m, n) = (1, 1) but not (2, 1) pass every
    # first-order condition and fail first at derivative order 3, and only
    # across the even-index lines; both checkers must localize it there
    low = DihedralSystem(4, 1, 1)
    high = DihedralSystem(4, 2, 1)
    found = False
    for d in range(4, 10):
        for p in quasi_basis(low, d):
            residuals = grouped_conditions(high, CoeffVector.from_poly(p)) \
                if not p.is_zero() else []
            if all(r == 0 for r in residuals):
                continue
            found = True
            report = check_per_line(high, p)
            assert not report.ok
            assert all(v.order == 3 for v in report.violations)
            assert all(v.line % 2 == 0 for v in report.violations)
            # the grouped system localizes the failure the same way: all
            # combined first-level sums vanish
            n_rows_level1 = 2 * high.half * min(high.mult_even, high.mult_odd)
            assert all(r == 0 for r in residuals[:n_rows_level1])
            assert any(r != 0 for r in residuals[n_rows_level1:])
    assert found


def test_crosscheck_trivial_cases():
    sys = SYS210
    assert check_per_line(sys, BiPoly.zero()).ok
    assert all(r == 0 for r in
               grouped_conditions(sys, coeffs(6, 0, 0, 0, 0, 0, 0, 0)))
    # grouped and per-line agree on the known generator set
    for text in ("1*z^3*zb^0 + 3*z^1*zb^2", "1*z^5*zb^0 + -5*z^3*zb^2"):
        p = from_text(text)
        assert check_per_line(sys, p).ok
        assert all(r == 0 for r in
                   grouped_conditions(sys, CoeffVector.from_poly(p)))


# ---------------------------------------------------------------------------
# ring and group structure
# ---------------------------------------------------------------------------

def test_products_of_quasi_invariants_are_quasi_invariant():
    rng = random.Random(77)
    for sys in (SYS210, DihedralSystem(6, 1, 1)):
        pool = [p for d in range(2, 8) for p in quasi_basis(sys, d)]
        for _ in range(8):
            p, q = rng.choice(pool), rng.choice(pool)
            assert check_per_line(sys, p * q).ok


def test_group_action_preserves_quasi_invariance():
    rng = random.Random(78)
    for sys in (SYS210, DihedralSystem(4, 2, 1)):
        pool = [p for d in range(2, 8) for p in quasi_basis(sys, d)]
        elements = list(sys.elements())
        for _ in range(10):
            p = rng.choice(pool)
            g = rng.choice(elements)
            assert check_per_line(sys, sys.act(g, p)).ok


def test_sigma_powers_pass():
    for sys in (SYS210, DihedralSystem(6, 2, 1)):
        s1, s2 = sys.invariant_generators()
        for a in range(4):
            for b in range(4):
                assert check_per_line(sys, s1 ** a * s2 ** b).ok
