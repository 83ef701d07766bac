"""Exception taxonomy shared across the package.

Validation problems (bad arguments, inconsistent inputs, states that fail
their invariants) map to CLI exit code 2; numeric-domain failures (log of a
nonpositive argument, singular denominators, underflowed fits) map to exit
code 3.
"""


class ValidationError(ValueError):
    """Invalid arguments or inputs that violate a documented precondition."""


class DimensionError(ValidationError):
    """Array shapes or subsystem dimensions do not match."""


class NotAStateError(ValidationError):
    """A matrix or parameter set fails the density-matrix invariants."""


class AsymmetricStateError(ValidationError):
    """Analytic X-state path requires equal single-site magnetizations."""


class Lemma1ConditionError(ValidationError):
    """The sigma^x-optimality condition fails; use the numeric oracle."""


class UnsupportedModelError(ValidationError):
    """Model parameters outside the treated range (e.g. XXZ with Delta <= -1)."""


class AsymptoticsUnavailableError(ValidationError):
    """No closed-form correlator/discord asymptotics exist for this regime."""


class NumericDomainError(ArithmeticError):
    """A formula was evaluated outside its numeric domain."""
