"""The planar Calogero-Moser operator of the degree-two invariant, applied
exactly, and the verifications built on it.

On a polynomial p the operator acts as

    L p = 4 d/dz d/dzb p
          + sum_j 4 mult_j (zeta^j dp/dz - dp/dzb) / (z - zeta^j zb),

one term per mirror line with positive multiplicity.  Numerator and
denominator of each term are the half-angle forms rescaled by the same unit,
so everything stays inside Q(zeta_M).  When p is quasi-invariant every
numerator vanishes on its line, the divisions are exact, and the image is a
polynomial of degree two lower; on other inputs a failed division is a
legitimate outcome, reported as a non-polynomial result rather than an
error.  A rational result is demoted back to rational coefficients.

Annihilation by this operator, together with quasi-invariance and the
normal form "z^D plus terms divisible by z*zb", pins the degree-D basis
generators uniquely; ``uniqueness_check`` verifies that by exact rank
computation on the null space of the quasi-invariance conditions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bipoly import BiPoly, divide_by_linear, normal_derivative, partial
from .dihedral import DihedralSystem
from .errors import NotDivisible
from .generators import GeneratorSet, solve_qi, valid_indices
from .quasi import quasi_basis
from .scalars import solve_affine


@dataclass(frozen=True)
class L1Result:
    polynomial: BiPoly | None
    failing_lines: tuple[int, ...] = ()

    @property
    def is_polynomial(self) -> bool:
        return self.polynomial is not None


def apply_L1(sys: DihedralSystem, p: BiPoly) -> L1Result:
    M = sys.mirrors
    promoted = p.promote(M)
    total = partial(partial(promoted, "z"), "zb").scale(Fraction(4))
    failing = []
    for j in sys.lines():
        mult = sys.multiplicity(j)
        if mult == 0:
            continue
        numerator = normal_derivative(promoted, j, M)
        try:
            quotient = divide_by_linear(numerator, j, M)
        except NotDivisible:
            failing.append(j)
            continue
        total = total + quotient.scale(Fraction(4 * mult))
    if failing:
        return L1Result(polynomial=None, failing_lines=tuple(failing))
    return L1Result(polynomial=total.demote())


@dataclass(frozen=True)
class KernelReport:
    entries: tuple[tuple[str, bool], ...]
    ok: bool

    def to_dict(self):
        return {"ok": self.ok,
                "entries": [{"generator": name, "annihilated": flag}
                            for name, flag in self.entries]}


def verify_L1_kernel(sys: DihedralSystem, gens: GeneratorSet) -> KernelReport:
    """Apply the operator to every generator; passes when all images are the
    exact zero polynomial."""
    entries = []
    for entry in gens.entries:
        result = apply_L1(sys, entry.poly)
        annihilated = result.is_polynomial and result.polynomial.is_zero()
        entries.append((entry.name, annihilated))
    return KernelReport(entries=tuple(entries),
                        ok=all(flag for _, flag in entries))


def uniqueness_check(sys: DihedralSystem, i: int) -> bool:
    """The normal-form generator is the unique polynomial of its degree that
    is quasi-invariant, annihilated by the operator, and of the shape
    z^D + (terms divisible by z*zb).

    Works on the exact null space of the quasi-invariance conditions: the
    operator images of the basis give homogeneous linear constraints on the
    weights, the two shape conditions give an inhomogeneous pair, and the
    combined system must have exactly one solution, equal to the solved
    generator.
    """
    if i not in valid_indices(sys):
        raise ValueError(f"index {i} is not in the valid range")
    N = sys.half
    m, n = sys.mult_even, sys.mult_odd
    degree = (m + n) * N + i
    basis = quasi_basis(sys, degree)
    if not basis:
        return False
    images = []
    for vec in basis:
        result = apply_L1(sys, vec)
        if not result.is_polynomial:
            return False
        images.append(result.polynomial.demote())
    keys = sorted({key for img in images for key in img.terms})
    rows = [[Fraction(img.coeff(a, b)) for img in images] for a, b in keys]
    rhs = [Fraction(0)] * len(keys)
    rows.append([Fraction(vec.coeff(degree, 0)) for vec in basis])
    rhs.append(Fraction(1))
    rows.append([Fraction(vec.coeff(0, degree)) for vec in basis])
    rhs.append(Fraction(0))
    kind, weights = solve_affine(rows, rhs, ncols=len(basis))
    if kind != "unique":
        return False
    combined = BiPoly.zero()
    for w, vec in zip(weights, basis):
        if w:
            combined = combined + vec.scale(w)
    return combined == solve_qi(sys, i)
