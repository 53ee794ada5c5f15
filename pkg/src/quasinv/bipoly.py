"""Sparse exact polynomials in the complex plane coordinates z and zb.

A polynomial is a finite map from exponent pairs (a, b) — the degrees in z
and in the conjugate coordinate zb — to a nonzero coefficient.  All
coefficients of one polynomial live in a single domain: the rationals
(``order is None``) or one cyclotomic field Q(zeta_M) (``order == M``);
rational polynomials promote implicitly when mixed with cyclotomic ones.

Mirror line j of an M-line arrangement is the zero set of the linear form
ell_j = z - zeta_M^j * zb.  The operations below — restriction to a line,
exact division by ell_j, and the rescaled normal derivative
N_j = zeta_M^j * d/dz - d/dzb — keep all arithmetic inside Q(zeta_M).
N_j is a nonzero complex multiple of the unit normal derivative of line j,
which is all that vanishing statements about odd-order derivatives can see.

Canonical term order for serialization is graded lexicographic with z before
zb, listed leading term first: higher total degree first, then higher
z-exponent.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotDivisible, ScalarKindMismatch
from .scalars import CycloElem, root_of_unity


def _scalar_is_zero(c) -> bool:
    return c.is_zero() if isinstance(c, CycloElem) else c == 0


class BiPoly:
    """Sparse bivariate polynomial over Fraction or CycloElem coefficients."""

    __slots__ = ("order", "terms")

    def __init__(self, terms=None, order: int | None = None):
        clean = {}
        for (a, b), c in (terms or {}).items():
            if a < 0 or b < 0:
                raise ValueError("exponents must be nonnegative")
            if order is None:
                if isinstance(c, CycloElem):
                    raise ScalarKindMismatch(
                        "cyclotomic coefficient in a rational polynomial")
                c = Fraction(c) if not isinstance(c, Fraction) else c
            else:
                if isinstance(c, CycloElem):
                    if c.order != order:
                        raise ScalarKindMismatch(
                            f"coefficient order {c.order} != {order}")
                else:
                    c = CycloElem.from_rational(order, c)
            if not _scalar_is_zero(c):
                clean[(int(a), int(b))] = c
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, order: int | None = None) -> BiPoly:
        return cls({}, order)

    @classmethod
    def constant(cls, c, order: int | None = None) -> BiPoly:
        return cls({(0, 0): c}, order)

    @classmethod
    def monomial(cls, a: int, b: int, c=1, order: int | None = None) -> BiPoly:
        return cls({(a, b): c}, order)

    # -- basic queries --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((a + b for a, b in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degrees = {a + b for a, b in self.terms}
        return len(degrees) <= 1

    def coeff(self, a: int, b: int):
        c = self.terms.get((a, b))
        if c is not None:
            return c
        if self.order is None:
            return Fraction(0)
        return CycloElem.from_rational(self.order, 0)

    # -- scalar-kind handling --------------------------------------------------

    def promote(self, order: int | None) -> BiPoly:
        if order == self.order or order is None and self.order is None:
            return self
        if self.order is None:
            return BiPoly(self.terms, order)
        if order is None:
            return self.demote()
        raise ScalarKindMismatch(
            f"cannot promote order {self.order} to order {order}")

    def demote(self) -> BiPoly:
        """Drop to rational coefficients when every coefficient is rational."""
        if self.order is None:
            return self
        if all(c.is_rational() for c in self.terms.values()):
            return BiPoly({k: c.as_rational() for k, c in self.terms.items()})
        return self

    def _common(self, other: BiPoly):
        if self.order == other.order:
            return self, other
        if self.order is None:
            return self.promote(other.order), other
        if other.order is None:
            return self, other.promote(self.order)
        raise ScalarKindMismatch(
            f"orders {self.order} and {other.order} differ")

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction, CycloElem)):
            other = _scalar_poly(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        p, q = self._common(other)
        terms = dict(p.terms)
        for key, c in q.terms.items():
            terms[key] = terms.get(key, 0) + c if key in terms else c
        return BiPoly(terms, p.order)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -c for k, c in self.terms.items()}, self.order)

    def __sub__(self, other):
        return self + (-other if isinstance(other, BiPoly) else
                       -_scalar_poly(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloElem)):
            return self.scale(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        p, q = self._common(other)
        terms = {}
        for (a1, b1), c1 in p.terms.items():
            for (a2, b2), c2 in q.terms.items():
                key = (a1 + a2, b1 + b2)
                prod = c1 * c2
                terms[key] = terms[key] + prod if key in terms else prod
        return BiPoly(terms, p.order)

    __rmul__ = __mul__

    def scale(self, c) -> BiPoly:
        if isinstance(c, CycloElem):
            p = self.promote(c.order)
            return BiPoly({k: v * c for k, v in p.terms.items()}, c.order)
        return BiPoly({k: v * c for k, v in self.terms.items()}, self.order)

    def __pow__(self, exponent: int) -> BiPoly:
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = BiPoly.constant(1, self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _scalar_poly(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        try:
            p, q = self._common(other)
        except ScalarKindMismatch:
            p, q = self.demote(), other.demote()
            if p.order != q.order:
                return False
        return p.terms == q.terms

    def __repr__(self):
        return f"BiPoly({self.to_text()!r})"

    def to_text(self) -> str:
        return to_text(self)


def _scalar_poly(c) -> BiPoly:
    if isinstance(c, CycloElem):
        return BiPoly({(0, 0): c}, c.order)
    return BiPoly({(0, 0): c})


Z = BiPoly.monomial(1, 0)
ZB = BiPoly.monomial(0, 1)
ONE = BiPoly.constant(1)


# ---------------------------------------------------------------------------
# calculus and line operations
# ---------------------------------------------------------------------------

def partial(p: BiPoly, var: str) -> BiPoly:
    """Formal partial derivative with respect to "z" or "zb"."""
    if var not in ("z", "zb"):
        raise ValueError('var must be "z" or "zb"')
    terms = {}
    for (a, b), c in p.terms.items():
        if var == "z":
            if a:
                terms[(a - 1, b)] = c * a
        else:
            if b:
                terms[(a, b - 1)] = c * b
    return BiPoly(terms, p.order)


def line_form(j: int, mirrors: int) -> BiPoly:
    """The linear form of mirror line j: z - zeta^j * zb."""
    zeta_j = root_of_unity(mirrors, j)
    return BiPoly({(1, 0): CycloElem.from_rational(mirrors, 1),
                   (0, 1): -zeta_j}, mirrors)


def normal_derivative(p: BiPoly, j: int, mirrors: int) -> BiPoly:
    """Apply N_j = zeta^j d/dz - d/dzb, a nonzero multiple of the normal
    derivative of line j."""
    p = p.promote(mirrors)
    zeta_j = root_of_unity(mirrors, j)
    return partial(p, "z").scale(zeta_j) - partial(p, "zb")


def restrict_to_line(p: BiPoly, j: int, mirrors: int) -> dict:
    """Substitute z = zeta^j * zb; the result maps zb-degree to a CycloElem."""
    p = p.promote(mirrors)
    out: dict[int, CycloElem] = {}
    for (a, b), c in p.terms.items():
        d = a + b
        v = c * root_of_unity(mirrors, j * a)
        out[d] = out[d] + v if d in out else v
    return {d: v for d, v in out.items() if not v.is_zero()}


def divide_by_linear(p: BiPoly, j: int, mirrors: int) -> BiPoly:
    """Exact quotient q with p = (z - zeta^j zb) * q.

    Synthetic division in z with coefficients in the univariate ring in zb;
    raises NotDivisible when p does not vanish on line j.
    """
    p = p.promote(mirrors)
    if p.is_zero():
        return p
    zeta_j = root_of_unity(mirrors, j)
    # coefficient of z^a as a map zb-degree -> scalar
    by_z: dict[int, dict[int, CycloElem]] = {}
    for (a, b), c in p.terms.items():
        by_z.setdefault(a, {})[b] = c

    def shift_mul(layer):
        # multiply a zb-layer by the division root zeta^j * zb
        return {b + 1: c * zeta_j for b, c in layer.items()}

    def layer_add(x, y):
        out = dict(x)
        for b, c in y.items():
            out[b] = out[b] + c if b in out else c
        return {b: c for b, c in out.items() if not c.is_zero()}

    top = max(by_z)
    quotient_layers: dict[int, dict[int, CycloElem]] = {}
    carry = by_z.get(top, {})
    for a in range(top - 1, -1, -1):
        quotient_layers[a] = carry
        carry = layer_add(by_z.get(a, {}), shift_mul(carry))
    if carry:
        raise NotDivisible(
            f"restriction to line {j} is nonzero; no exact quotient")
    terms = {(a, b): c
             for a, layer in quotient_layers.items()
             for b, c in layer.items()}
    return BiPoly(terms, mirrors)


def homogeneous_components(p: BiPoly) -> list[tuple[int, BiPoly]]:
    """Split into homogeneous parts, ascending total degree."""
    parts: dict[int, dict] = {}
    for (a, b), c in p.terms.items():
        parts.setdefault(a + b, {})[(a, b)] = c
    return [(d, BiPoly(t, p.order)) for d, t in sorted(parts.items())]


def bar_conjugate(p: BiPoly) -> BiPoly:
    """Swap z and zb and conjugate the coefficients (zeta -> zeta^(-1))."""
    if p.order is None:
        return BiPoly({(b, a): c for (a, b), c in p.terms.items()})
    return BiPoly({(b, a): c.conjugate() for (a, b), c in p.terms.items()},
                  p.order)


# ---------------------------------------------------------------------------
# canonical text form
# ---------------------------------------------------------------------------

def canonical_terms(p: BiPoly):
    """Terms in the canonical order: degree descending, z-exponent descending."""
    return sorted(p.terms.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]),
                                                   -kv[0][0]))


def _scalar_text(c) -> str:
    if isinstance(c, CycloElem):
        if c.is_rational():
            return str(c.as_rational())
        return f"({c})"
    return str(c)


def to_text(p: BiPoly) -> str:
    """Canonical text form, e.g. ``1*z^3*zb^0 + 3*z^1*zb^2``."""
    if p.is_zero():
        return "0"
    return " + ".join(f"{_scalar_text(c)}*z^{a}*zb^{b}"
                      for (a, b), c in canonical_terms(p))


def _exponent(text: str) -> int:
    value = int(text)
    if value < 0:
        raise ValueError(f"negative exponent {value}")
    return value


def from_text(text: str) -> BiPoly:
    """Parse the canonical text form back into a rational polynomial."""
    text = text.strip()
    if text == "0" or not text:
        return BiPoly.zero()
    terms: dict[tuple[int, int], Fraction] = {}
    for raw in text.split("+"):
        part = raw.strip()
        if not part:
            raise ValueError("empty term in polynomial text")
        coeff = Fraction(1)
        a = b = 0
        for factor in part.split("*"):
            factor = factor.strip()
            if factor.startswith("z^"):
                a += _exponent(factor[2:])
            elif factor.startswith("zb^"):
                b += _exponent(factor[3:])
            elif factor == "z":
                a += 1
            elif factor == "zb":
                b += 1
            else:
                coeff *= Fraction(factor)
        key = (a, b)
        terms[key] = terms.get(key, Fraction(0)) + coeff
    return BiPoly(terms)
