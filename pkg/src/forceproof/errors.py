"""Exception types raised by forceproof."""


class ForceProofError(Exception):
    """Base class for all errors raised by this package."""


class IncompatibleAlgebraError(ForceProofError, ValueError):
    """Operands live in different Boolean algebras."""


class TableSizeError(ForceProofError, ValueError):
    """A dense table would exceed the configured size bound."""


class AxiomViolationError(ForceProofError, ValueError):
    """A table fails the argument axioms.

    The offending instances are kept in ``violations``.
    """

    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = list(violations)


class ClassificationError(ForceProofError):
    """An argument lacks the classification an operation requires."""


class RelationError(ForceProofError, ValueError):
    """A compatibility relation is ill-formed or fails validation."""

    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = list(violations)


class FormatError(ForceProofError, ValueError):
    """A serialized payload is malformed.

    ``field`` names the offending JSON field when known.
    """

    def __init__(self, message, field=None):
        super().__init__(message if field is None else f"{field}: {message}")
        self.field = field
