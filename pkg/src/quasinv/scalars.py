"""Exact scalar arithmetic and exact linear algebra.

Everything downstream works over two coefficient domains: arbitrary-precision
rationals (``fractions.Fraction``, always in lowest terms with positive
denominator) and cyclotomic fields Q(zeta_M).  A cyclotomic element is stored
as the residue polynomial in zeta modulo the M-th cyclotomic polynomial, so
the representation is canonical: two field elements are equal exactly when
their coefficient vectors are equal.

Determinants use Bareiss fraction-free elimination on denominator-cleared
integer rows, which keeps intermediate entries integral and their bit length
polynomial; the same elimination drives the exact rank used by the dimension
counts.  Solving and null-space extraction run over Fraction entries, which
Python keeps reduced, so no rounding occurs anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import lcm

from .errors import OrderMismatch, SingularMatrix

Rational = Fraction


# ---------------------------------------------------------------------------
# cyclotomic polynomials
# ---------------------------------------------------------------------------

def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_divmod_monic(num, den):
    """Divide coefficient lists (ascending) by a monic divisor; exact over Z."""
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            quot[k - dd] = c
            for j, dj in enumerate(den):
                num[k - dd + j] -= c * dj
    while num and num[-1] == 0:
        num.pop()
    return quot, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(order: int) -> tuple[int, ...]:
    """Coefficients, ascending, of the cyclotomic polynomial of that order.

    Computed by dividing x^order - 1 by the cyclotomic polynomials of all
    proper divisors; the result is monic with integer coefficients and
    divides x^order - 1 exactly.
    """
    if order < 1:
        raise ValueError("order must be a positive integer")
    poly = [-1] + [0] * (order - 1) + [1]
    for d in range(1, order):
        if order % d == 0:
            poly, rem = _poly_divmod_monic(poly, list(cyclotomic_polynomial(d)))
            assert not rem
    return tuple(poly)


def euler_phi(order: int) -> int:
    return len(cyclotomic_polynomial(order)) - 1


# ---------------------------------------------------------------------------
# cyclotomic field elements
# ---------------------------------------------------------------------------

class CycloElem:
    """An element of Q(zeta_M), M = self.order.

    The coefficient vector has length phi(M) and represents the residue
    polynomial c0 + c1*zeta + ... modulo the M-th cyclotomic polynomial.
    Instances are immutable and hashable; equality is coefficient equality.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        phi = euler_phi(order)
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > phi:
            coeffs = _reduce_mod_cyclo(coeffs, order)
        coeffs += [Fraction(0)] * (phi - len(coeffs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("CycloElem is immutable")

    @classmethod
    def from_rational(cls, order: int, value) -> CycloElem:
        return cls(order, [Fraction(value)])

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycloElem):
            if other.order != self.order:
                raise OrderMismatch(
                    f"orders {self.order} and {other.order} differ")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloElem.from_rational(self.order, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycloElem(self.order,
                         [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycloElem(self.order,
                         [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return CycloElem(self.order, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloElem(self.order, [a * other for a in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycloElem(self.order, _poly_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> CycloElem:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic element")
        inv = _inverse_mod_cyclo(list(self.coeffs), self.order)
        return CycloElem(self.order, inv)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, exponent: int):
        base = self
        if exponent < 0:
            base = self.inverse()
            exponent = -exponent
        result = CycloElem.from_rational(self.order, 1)
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> CycloElem:
        """Image under zeta -> zeta^(-1) (complex conjugation on Q(zeta))."""
        zinv = root_of_unity(self.order, -1)
        result = CycloElem.from_rational(self.order, 0)
        for c in reversed(self.coeffs):
            result = result * zinv + c
        return result

    # -- comparison / display ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CycloElem):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"CycloElem({self.order}, {list(self.coeffs)!r})"

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"({c})*zeta")
            else:
                parts.append(f"({c})*zeta^{k}")
        return " + ".join(parts) if parts else "0"


def _reduce_mod_cyclo(coeffs, order):
    phi_poly = [Fraction(c) for c in cyclotomic_polynomial(order)]
    _, rem = _poly_divmod_monic(coeffs, phi_poly)
    return rem


def _inverse_mod_cyclo(a, order):
    # Extended Euclid in Q[x] against the cyclotomic polynomial, which is
    # irreducible, so any nonzero residue is a unit.
    def trim(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    def poly_divmod(num, den):
        num = list(num)
        q = [Fraction(0)] * max(len(num) - len(den) + 1, 1)
        inv_lead = 1 / den[-1]
        for k in range(len(num) - 1, len(den) - 2, -1):
            c = num[k] * inv_lead
            if c:
                q[k - len(den) + 1] = c
                for j, dj in enumerate(den):
                    num[k - len(den) + 1 + j] -= c * dj
        return trim(q), trim(num)

    r0 = [Fraction(c) for c in cyclotomic_polynomial(order)]
    r1 = trim([Fraction(c) for c in a])
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while len(r1) > 1:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        qs1 = _poly_mul(q, s1)
        s0, s1 = s1, trim([x - y for x, y in
                           zip(s0 + [Fraction(0)] * len(qs1),
                               qs1 + [Fraction(0)] * len(s0))])
    assert r1, "nonzero residue must be invertible modulo an irreducible"
    c = r1[0]
    return [x / c for x in s1]


def root_of_unity(order: int, k: int) -> CycloElem:
    """Canonical representation of zeta_order^k, k taken modulo order."""
    k %= order
    phi = euler_phi(order)
    if k == 0:
        return CycloElem.from_rational(order, 1)
    if k < phi:
        coeffs = [Fraction(0)] * k + [Fraction(1)]
        return CycloElem(order, coeffs)
    zeta = CycloElem(order, [Fraction(0), Fraction(1)])
    return zeta ** k


# ---------------------------------------------------------------------------
# exact matrices
# ---------------------------------------------------------------------------

class ExactMatrix:
    """Dense rectangular matrix with Fraction entries."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(Fraction(e) for e in row) for row in rows)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("matrix rows have unequal lengths")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> ExactMatrix:
        return cls([[Fraction(int(i == j)) for j in range(n)]
                    for i in range(n)])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def mul_vector(self, vec):
        vec = [Fraction(v) for v in vec]
        return [sum((e * v for e, v in zip(row, vec)), Fraction(0))
                for row in self.rows]

    def __eq__(self, other):
        return isinstance(other, ExactMatrix) and self.rows == other.rows

    def __repr__(self):
        return f"ExactMatrix({[list(r) for r in self.rows]!r})"


def _as_rows(matrix):
    if isinstance(matrix, ExactMatrix):
        return [list(r) for r in matrix.rows]
    return [list(r) for r in matrix]


def _cleared_int_rows(rows):
    """Scale each row to integers; return (int rows, product of scalings)."""
    out = []
    scale = Fraction(1)
    for row in rows:
        row = [Fraction(e) for e in row]
        mult = lcm(*(e.denominator for e in row)) if row else 1
        scale *= mult
        out.append([int(e * mult) for e in row])
    return out, scale


def det_fraction_free(matrix) -> Fraction:
    """Exact determinant via Bareiss elimination; the 0x0 determinant is 1."""
    rows = _as_rows(matrix)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant requires a square matrix")
    if n == 0:
        return Fraction(1)
    m, scale = _cleared_int_rows(rows)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = m[k][k]
        for i in range(k + 1, n):
            mi = m[i]
            lead = mi[k]
            mk = m[k]
            for j in range(k + 1, n):
                mi[j] = (mi[j] * pivot - lead * mk[j]) // prev
            mi[k] = 0
        prev = pivot
    return Fraction(sign * m[n - 1][n - 1]) / scale


def solve_exact(matrix, rhs) -> list[Fraction]:
    """Unique exact solution of a nonsingular square system A x = b."""
    rows = _as_rows(matrix)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("solve requires a square matrix")
    if len(rhs) != n:
        raise ValueError("right-hand side length mismatch")
    aug = [[Fraction(e) for e in row] + [Fraction(b)]
           for row, b in zip(rows, rhs)]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot_row is None:
            raise SingularMatrix("matrix is singular")
        if pivot_row != col:
            aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        pivot = aug[col][col]
        aug[col] = [e / pivot for e in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [e - factor * p for e, p in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


def exact_rank(rows, ncols: int | None = None) -> int:
    """Rank over Q via fraction-free elimination with column pivoting."""
    rows = _as_rows(rows)
    if not rows:
        return 0
    m, _ = _cleared_int_rows(rows)
    nrows = len(m)
    ncols = len(m[0]) if ncols is None else ncols
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot_row = next((r for r in range(rank, nrows) if m[r][col]), None)
        if pivot_row is None:
            continue
        if pivot_row != rank:
            m[rank], m[pivot_row] = m[pivot_row], m[rank]
        pivot = m[rank][col]
        for i in range(rank + 1, nrows):
            mi = m[i]
            lead = mi[col]
            mr = m[rank]
            for j in range(col + 1, ncols):
                mi[j] = (mi[j] * pivot - lead * mr[j]) // prev
            mi[col] = 0
        prev = pivot
        rank += 1
        if rank == nrows:
            break
    return rank


def rref(rows, ncols: int | None = None):
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    rows = [[Fraction(e) for e in row] for row in rows]
    if not rows:
        return [], []
    nrows = len(rows)
    ncols = len(rows[0]) if ncols is None else ncols
    pivots = []
    r = 0
    for col in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if rows[i][col]), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pivot = rows[r][col]
        rows[r] = [e / pivot for e in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [e - f * p for e, p in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def nullspace(rows, ncols: int) -> list[tuple[Fraction, ...]]:
    """Basis of the exact null space, one vector per free column, in
    ascending free-column order (deterministic)."""
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for row_idx, pcol in enumerate(pivots):
            vec[pcol] = -reduced[row_idx][free]
        basis.append(tuple(vec))
    return basis


def solve_affine(rows, rhs, ncols: int):
    """Solve a general linear system exactly.

    Returns ("unique", x), ("none", None) or ("many", None) according to the
    structure of the affine solution set.
    """
    aug = [[Fraction(e) for e in row] + [Fraction(b)]
           for row, b in zip(rows, rhs)]
    reduced, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return "none", None
    if len(pivots) < ncols:
        return "many", None
    x = [Fraction(0)] * ncols
    for row_idx, pcol in enumerate(pivots):
        x[pcol] = reduced[row_idx][ncols]
    return "unique", x
