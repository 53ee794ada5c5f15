"""Quasi-invariance testing for dihedral arrangements, two independent ways.

A polynomial p is quasi-invariant when on every mirror line j, writing q for
the multiplicity of the line, the normal derivatives of odd order
1, 3, ..., 2q - 1 all vanish identically on the line.  The definitional
check works line by line with cyclotomic arithmetic.

The second check is rational.  Write a homogeneous p of degree D as
sum_s a_s z^(D-s) zb^s.  Up to a nonzero factor, the restriction to line j
of the order-(2t-1) normal derivative contributes the linear functional

    sum_s a_s (D - 2s)^(2t-1) zeta^{(D-s) j}.

Running j over a full rotation class of lines and inverting the resulting
Vandermonde system in the distinct powers of zeta turns the per-line
conditions into residue-class sums of the coefficients.  For even M = 2N
with multiplicities (m, n) on the even-index and odd-index classes:

* levels t <= min(m, n) constrain both classes at once:
  sum over s = p (mod 2N) of a_s (D-2s)^(2t-1) = 0 for each p mod 2N;
* levels above the minimum constrain only the larger-multiplicity class;
  for the even-index class the sums run over s = p (mod N), while for the
  odd-index class the lines are j = 2j'+1 and the factor zeta^{(D-s)j}
  carries an extra zeta^{D-s} = (-1)^{(s-p)/N} zeta^{D-p} because
  zeta^N = -1, so the class sums become sign-alternating:
  sum over s = p (mod N) of (-1)^{(s-p)/N} a_s (D-2s)^(2t-1) = 0.

For odd M there is one class and the sums run over s = p (mod M).  A single
plain-power sum at level t is not literally the order-(2t-1) derivative
restriction (iterated derivatives mix in lower odd powers of D-2s), but the
two families are related by an invertible triangular change of basis level
by level, so the full systems are equivalent and first failures per class
coincide; ``crosscheck_checkers`` exercises exactly that equivalence.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .bipoly import (BiPoly, homogeneous_components, normal_derivative,
                     restrict_to_line)
from .dihedral import DihedralSystem
from .scalars import exact_rank, nullspace


# ---------------------------------------------------------------------------
# report and coefficient-vector types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    line: int
    order: int
    degree: int
    residual: str

    def to_dict(self):
        return {"line": self.line, "order": self.order,
                "degree": self.degree, "residual": self.residual}


@dataclass(frozen=True)
class QuasiReport:
    ok: bool
    violations: tuple[Violation, ...]

    def to_dict(self):
        return {"ok": self.ok,
                "violations": [v.to_dict() for v in self.violations]}


@dataclass(frozen=True)
class CoeffVector:
    """Coefficients of one homogeneous polynomial: entry s is the
    coefficient of z^(degree-s) zb^s."""
    degree: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.entries) != self.degree + 1:
            raise ValueError("need degree + 1 coefficients")

    @classmethod
    def from_poly(cls, p: BiPoly) -> CoeffVector:
        if not p.is_homogeneous():
            raise ValueError("coefficient vectors encode homogeneous polynomials")
        if p.is_zero():
            return cls(0, (Fraction(0),))
        d = p.degree()
        entries = tuple(Fraction(p.coeff(d - s, s)) for s in range(d + 1))
        return cls(d, entries)

    def to_poly(self) -> BiPoly:
        d = self.degree
        return BiPoly({(d - s, s): c for s, c in enumerate(self.entries)})


# ---------------------------------------------------------------------------
# per-line checker (cyclotomic)
# ---------------------------------------------------------------------------

def _residual_text(restriction: dict) -> str:
    parts = [f"({restriction[d]})*zb^{d}" for d in sorted(restriction)]
    return " + ".join(parts) if parts else "0"


def check_per_line(sys: DihedralSystem, p: BiPoly) -> QuasiReport:
    """Definitional quasi-invariance test over Q(zeta_M).

    For each line and each level t up to the line multiplicity, iterate the
    rescaled normal derivative 2t-1 times and restrict to the line; every
    nonzero restriction is reported with the degree of the offending
    homogeneous component.
    """
    M = sys.mirrors
    violations = []
    for degree, comp in homogeneous_components(p):
        comp = comp.promote(M)
        for j in sys.lines():
            mult = sys.multiplicity(j)
            if mult == 0:
                continue
            current = comp
            for order in range(1, 2 * mult):
                current = normal_derivative(current, j, M)
                if order % 2 == 1:
                    res = restrict_to_line(current, j, M)
                    if res:
                        violations.append(Violation(
                            line=j, order=order, degree=degree,
                            residual=_residual_text(res)))
    violations.sort(key=lambda v: (v.degree, v.line, v.order))
    return QuasiReport(ok=not violations, violations=tuple(violations))


# ---------------------------------------------------------------------------
# grouped rational checker
# ---------------------------------------------------------------------------

def grouped_rows(sys: DihedralSystem, degree: int) -> list[tuple[int, ...]]:
    """Rows of the residue-class condition system at one degree.

    Row order: for even arrangements, levels t = 1..min(m, n) with classes
    p = 0..2N-1, then levels up to max(m, n) with classes p = 0..N-1 on the
    larger-multiplicity orbit; for odd arrangements, levels t = 1..m with
    classes p = 0..M-1.
    """
    D = degree
    values = [D - 2 * s for s in range(D + 1)]
    rows: list[tuple[int, ...]] = []

    def power_row(t, keep, sign=None):
        e = 2 * t - 1
        return tuple((values[s] ** e if sign is None
                      else sign(s) * values[s] ** e) if keep(s) else 0
                     for s in range(D + 1))

    if sys.is_even:
        N = sys.half
        m, n = sys.mult_even, sys.mult_odd
        low, high = min(m, n), max(m, n)
        for t in range(1, low + 1):
            for p in range(2 * N):
                rows.append(power_row(t, lambda s, p=p: s % (2 * N) == p))
        even_is_larger = m >= n
        for t in range(low + 1, high + 1):
            for p in range(N):
                if even_is_larger:
                    rows.append(power_row(t, lambda s, p=p: s % N == p))
                else:
                    rows.append(power_row(
                        t, lambda s, p=p: s % N == p,
                        sign=lambda s, p=p: (-1) ** ((s - p) // N)))
    else:
        M = sys.mirrors
        for t in range(1, sys.mult_even + 1):
            for p in range(M):
                rows.append(power_row(t, lambda s, p=p: s % M == p))
    return rows


def grouped_conditions(sys: DihedralSystem, coeffs: CoeffVector) -> list[Fraction]:
    """Residuals of the residue-class system on a coefficient vector; the
    vector is quasi-invariant exactly when every residual is zero."""
    return [sum((Fraction(r) * a for r, a in zip(row, coeffs.entries)),
                Fraction(0))
            for row in grouped_rows(sys, coeffs.degree)]


def quasi_dimension(sys: DihedralSystem, degree: int) -> int:
    """Dimension of the homogeneous quasi-invariants of one degree, as
    (degree + 1) minus the exact rank of the condition system."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    rows = grouped_rows(sys, degree)
    return degree + 1 - exact_rank(rows, ncols=degree + 1)


def quasi_basis(sys: DihedralSystem, degree: int) -> list[BiPoly]:
    """Basis of the homogeneous quasi-invariants of one degree, from the
    exact null space of the condition system; deterministic order."""
    rows = grouped_rows(sys, degree)
    vectors = nullspace(rows, ncols=degree + 1)
    return [CoeffVector(degree, vec).to_poly() for vec in vectors]


# ---------------------------------------------------------------------------
# cross-validation of the two checkers
# ---------------------------------------------------------------------------

def _orbits(sys: DihedralSystem):
    return (0, 1) if sys.is_even else (0,)


def _orbit_class_rows(sys: DihedralSystem, degree: int, orbit: int, t: int):
    """Residue-class rows of a single orbit at one level (used only for
    attributing failures; the combined rows of grouped_rows span the same
    conditions)."""
    D = degree
    values = [D - 2 * s for s in range(D + 1)]
    e = 2 * t - 1
    if not sys.is_even:
        M = sys.mirrors
        return [tuple(values[s] ** e if s % M == p else 0
                      for s in range(D + 1)) for p in range(M)]
    N = sys.half
    rows = []
    for p in range(N):
        if orbit == 0:
            rows.append(tuple(values[s] ** e if s % N == p else 0
                              for s in range(D + 1)))
        else:
            rows.append(tuple((-1) ** ((s - p) // N) * values[s] ** e
                              if s % N == p else 0 for s in range(D + 1)))
    return rows


def _first_failure_grouped(sys, coeffs: CoeffVector, orbit: int):
    mult = sys.orbit_multiplicity(orbit)
    for t in range(1, mult + 1):
        for row in _orbit_class_rows(sys, coeffs.degree, orbit, t):
            if sum(Fraction(r) * a for r, a in zip(row, coeffs.entries)):
                return t
    return None


def _first_failure_per_line(sys, report: QuasiReport, orbit: int):
    orders = [v.order for v in report.violations
              if sys.orbit(v.line) == orbit]
    if not orders:
        return None
    return (min(orders) + 1) // 2


def _random_homogeneous(rng: random.Random, degree: int) -> BiPoly:
    entries = tuple(Fraction(rng.randint(-5, 5)) for _ in range(degree + 1))
    return CoeffVector(degree, entries).to_poly()


def crosscheck_checkers(sys: DihedralSystem, trials: int, max_degree: int,
                        seed: int = 0) -> bool:
    """Run both checkers on seeded random homogeneous polynomials.

    Agreement means identical verdicts and, on failures, identical first
    failing level per orbit.  Every few trials a random element of the exact
    null space is used instead, so the passing branch is exercised too.
    Returns True when all trials agree.
    """
    rng = random.Random(seed)
    basis_cache: dict[int, list] = {}
    for trial in range(trials):
        degree = rng.randint(0, max_degree)
        if trial % 5 == 4:
            if degree not in basis_cache:
                basis_cache[degree] = nullspace(grouped_rows(sys, degree),
                                                ncols=degree + 1)
            basis = basis_cache[degree]
            entries = [Fraction(0)] * (degree + 1)
            for vec in basis:
                w = rng.randint(-3, 3)
                if w:
                    entries = [e + w * v for e, v in zip(entries, vec)]
            coeffs = CoeffVector(degree, tuple(entries))
            poly = coeffs.to_poly()
        else:
            poly = _random_homogeneous(rng, degree)
            coeffs = CoeffVector.from_poly(poly) if not poly.is_zero() \
                else CoeffVector(degree, tuple([Fraction(0)] * (degree + 1)))
        report = check_per_line(sys, poly)
        residuals = grouped_conditions(sys, coeffs)
        if report.ok != all(r == 0 for r in residuals):
            return False
        if not report.ok:
            for orbit in _orbits(sys):
                if _first_failure_per_line(sys, report, orbit) != \
                        _first_failure_grouped(sys, coeffs, orbit):
                    return False
    return True
