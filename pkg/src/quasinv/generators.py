"""Free-module generators of the quasi-invariant ring over the invariants,
for even dihedral arrangements, built along two independent routes.

Four generators come from the invariant chain itself:

    q0 = 1,
    q1 = (z^N + zb^N)^(2n+1),
    q2 = (z^N - zb^N)^(2m+1),
    q3 = q1 * q2.

The remaining 2N - 2 pairs have the normal form

    q1_i = sum_{s=0..m+n} a_s z^{(m+n-s)N + i} zb^{Ns},   a_0 = 1,

for 1 <= i <= 2N-1, i != N, with q2_i its exponent-swapped mirror image.
The coefficients solve the residue-class quasi-invariance conditions, which
for this sparse support collapse to a square system: with
c_s(t) = ((m+n-2s)N + i)^(2t-1), levels t up to min(m, n) split into an
even-s and an odd-s equation, and the remaining levels of the larger
multiplicity give one full row each — plain sums when the even-index class
is larger, sign-alternating sums otherwise.

The same system drives the determinant route: stack the column monomials on
top of the numeric condition rows to form the square matrix A; then q1_i is
det A divided by the minor det A_1 obtained by deleting the monomial row and
the first column, and expanding det A along the monomial row reproduces the
solved coefficients via Cramer's rule, which the tests pin exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bipoly import BiPoly, bar_conjugate
from .dihedral import DihedralSystem
from .errors import OddMirrorCount, SingularA1, SingularMatrix, SingularSystem
from .poincare import degree_table
from .scalars import det_fraction_free, solve_exact

_FAMILY_RANK = {"q0": 0, "q1": 1, "q2": 2, "q3": 3, "q1_i": 4, "q2_i": 5}


@dataclass(frozen=True)
class GeneratorEntry:
    label: str
    i: int | None
    degree: int
    poly: BiPoly

    @property
    def name(self) -> str:
        if self.i is None:
            return self.label
        return f"{self.label[:2]}_{self.i}"


@dataclass(frozen=True)
class GeneratorSet:
    system: DihedralSystem
    entries: tuple[GeneratorEntry, ...]
    provenance: str

    def degrees(self) -> list[int]:
        return [e.degree for e in self.entries]

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class MatrixA:
    """Condition matrix of one normal-form generator: a symbolic monomial
    row (exponent pairs) over the numeric residue-class rows."""
    monomials: tuple[tuple[int, int], ...]
    rows: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.monomials)


def _require_even(sys: DihedralSystem):
    if not sys.is_even:
        raise OddMirrorCount("generator constructions need an even mirror "
                             "count")


def valid_indices(sys: DihedralSystem) -> list[int]:
    """The index range of the normal-form generators: 1..2N-1 without N."""
    _require_even(sys)
    N = sys.half
    return [i for i in range(1, 2 * N) if i != N]


def invariant_chain_gens(sys: DihedralSystem):
    """The four generators built from the invariant chain; see module doc."""
    _require_even(sys)
    N = sys.half
    m, n = sys.mult_even, sys.mult_odd
    plus = BiPoly({(N, 0): 1, (0, N): 1})
    minus = BiPoly({(N, 0): 1, (0, N): -1})
    q0 = BiPoly.constant(1)
    q1 = plus ** (2 * n + 1)
    q2 = minus ** (2 * m + 1)
    return q0, q1, q2, q1 * q2


def _condition_rows(sys: DihedralSystem, i: int) -> list[list[int]]:
    """Numeric rows of the square coefficient system for one index."""
    N = sys.half
    m, n = sys.mult_even, sys.mult_odd
    size = m + n + 1
    base = [(m + n - 2 * s) * N + i for s in range(size)]
    low, high = min(m, n), max(m, n)
    rows = []
    for t in range(1, low + 1):
        e = 2 * t - 1
        rows.append([base[s] ** e if s % 2 == 0 else 0 for s in range(size)])
    for t in range(1, low + 1):
        e = 2 * t - 1
        rows.append([base[s] ** e if s % 2 == 1 else 0 for s in range(size)])
    even_is_larger = m >= n
    for t in range(low + 1, high + 1):
        e = 2 * t - 1
        if even_is_larger:
            rows.append([base[s] ** e for s in range(size)])
        else:
            rows.append([(-1) ** s * base[s] ** e for s in range(size)])
    return rows


def build_matrix_A(sys: DihedralSystem, i: int) -> MatrixA:
    _require_even(sys)
    if i not in valid_indices(sys):
        raise ValueError(f"index {i} is not in the valid range")
    N = sys.half
    m, n = sys.mult_even, sys.mult_odd
    monomials = tuple(((m + n - s) * N + i, N * s) for s in range(m + n + 1))
    rows = tuple(tuple(r) for r in _condition_rows(sys, i))
    return MatrixA(monomials=monomials, rows=rows)


def solve_qi(sys: DihedralSystem, i: int) -> BiPoly:
    """Normal-form generator by exact linear solve of the condition system."""
    matrix = build_matrix_A(sys, i)
    size = len(matrix.monomials)
    coeffs = [Fraction(1)]
    if size > 1:
        sub = [row[1:] for row in matrix.rows]
        rhs = [-row[0] for row in matrix.rows]
        try:
            coeffs += solve_exact(sub, rhs)
        except SingularMatrix as exc:
            raise SingularSystem(
                f"coefficient system singular for index {i}; the normal-form "
                "generator should be unique") from exc
    return BiPoly({mono: c for mono, c in zip(matrix.monomials, coeffs)})


def generator_from_determinant(sys: DihedralSystem, i: int) -> BiPoly:
    """Normal-form generator by cofactor expansion along the monomial row."""
    matrix = build_matrix_A(sys, i)
    det_a1 = det_fraction_free([row[1:] for row in matrix.rows])
    if det_a1 == 0:
        raise SingularA1(f"leading minor vanished for index {i}")
    terms = {}
    for k, mono in enumerate(matrix.monomials):
        minor = [row[:k] + row[k + 1:] for row in matrix.rows]
        cofactor = (-1) ** k * det_fraction_free(minor)
        if cofactor:
            terms[mono] = cofactor / det_a1
    return BiPoly(terms)


def full_basis(sys: DihedralSystem, method: str = "solve") -> GeneratorSet:
    """All 4N generators, ordered by degree (family label breaks ties)."""
    _require_even(sys)
    if method not in ("solve", "det"):
        raise ValueError('method must be "solve" or "det"')
    N = sys.half
    m, n = sys.mult_even, sys.mult_odd
    q0, q1, q2, q3 = invariant_chain_gens(sys)
    entries = [
        GeneratorEntry("q0", None, 0, q0),
        GeneratorEntry("q1", None, (2 * n + 1) * N, q1),
        GeneratorEntry("q2", None, (2 * m + 1) * N, q2),
        GeneratorEntry("q3", None, (m + n + 1) * 2 * N, q3),
    ]
    build = solve_qi if method == "solve" else generator_from_determinant
    for i in valid_indices(sys):
        degree = (m + n) * N + i
        first = build(sys, i)
        entries.append(GeneratorEntry("q1_i", i, degree, first))
        entries.append(GeneratorEntry("q2_i", i, degree, bar_conjugate(first)))
    entries.sort(key=lambda e: (e.degree, _FAMILY_RANK[e.label], e.i or 0))
    provenance = "solver" if method == "solve" else "determinant"
    gens = GeneratorSet(sys, tuple(entries), provenance)
    table = [d for d, count in degree_table(sys) for _ in range(count)]
    assert sorted(gens.degrees()) == table, "generator degrees disagree " \
        "with the closed-form table"
    return gens
