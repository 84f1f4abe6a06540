"""Exception types shared across the package."""


class NilcatError(Exception):
    """Base class for all domain errors raised by this package."""


class DivisionByZero(NilcatError):
    pass


class MixedFields(NilcatError):
    """Two operands belong to different field contexts."""


class ZeroArgument(NilcatError):
    pass


class Char2Field(NilcatError):
    """Fields of characteristic 2 are rejected everywhere."""


class NotAPrime(NilcatError):
    pass


class Singular(NilcatError):
    pass


class NotAnIdeal(NilcatError):
    pass


class NotACocycle(NilcatError):
    pass


class NotAnAutomorphism(NilcatError):
    pass


class Eq1Violated(NilcatError):
    """The compatibility equation for assembling an extension isomorphism fails."""


class BadId(NilcatError):
    pass


class NotNilpotent(NilcatError):
    pass


class NotALieAlgebra(NilcatError):
    pass


class DimTooLarge(NilcatError):
    pass


class BothZero(NilcatError):
    pass


class InternalInvariantViolated(NilcatError):
    """A state the classification proves impossible was reached; indicates a bug."""
