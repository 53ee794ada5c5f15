"""Typed errors shared across the package.

Plain division by zero raises the builtin ZeroDivisionError; everything
domain specific derives from QuasinvError so the CLI can catch one base
class and report cleanly.
"""


class QuasinvError(Exception):
    """Base class for all errors raised by this package."""


class OrderMismatch(QuasinvError):
    """Arithmetic between cyclotomic elements of different orders."""


class ScalarKindMismatch(QuasinvError):
    """Polynomials with incompatible coefficient domains were combined."""


class SingularMatrix(QuasinvError):
    """An exact solve was requested for a singular square system."""


class NotDivisible(QuasinvError):
    """Exact division by a mirror-line form failed (nonzero restriction)."""


class EvenMirrorCount(QuasinvError):
    """An odd mirror count was required."""


class OddMirrorCount(QuasinvError):
    """An even mirror count was required."""


class SingularSystem(QuasinvError):
    """The generator coefficient system was singular; this contradicts the
    uniqueness of the normal-form generators and signals an internal bug."""


class SingularA1(QuasinvError):
    """The condition matrix with its first column removed was singular; same
    fatal-inconsistency status as SingularSystem."""


class NotQuasiInvariant(QuasinvError):
    """An operation required a quasi-invariant input and was given one that
    fails the per-line checks."""
