"""Exception hierarchy.

Every domain error derives from :class:`InfdefError` (itself a ``ValueError``),
and carries a short ``kind`` string used by the command line front end.
"""


class InfdefError(ValueError):
    kind = "error"


class ParseError(InfdefError):
    """Polynomial text does not follow the grammar.

    ``position`` is the 0-based offset of the offending character.
    """

    kind = "parse-error"

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class UnknownVariableError(ParseError):
    kind = "unknown-variable"


class FieldError(InfdefError):
    """Coefficient not representable in the field, or division by zero."""

    kind = "field-error"


class RingMismatchError(InfdefError):
    kind = "ring-mismatch"


class NotZeroDimensionalError(InfdefError):
    kind = "not-zero-dimensional"


class NonIsolatedSingularityError(NotZeroDimensionalError):
    kind = "non-isolated-singularity"


class ConstantPolynomialError(InfdefError):
    kind = "constant-polynomial"


class NotArtinianError(InfdefError):
    kind = "not-artinian"


class ResidueFieldError(InfdefError):
    """Quotient is not local with residue field k."""

    kind = "residue-field"


class AlgebraStructureError(InfdefError):
    """Structure constants violate commutativity, associativity, unit or nilpotency."""

    kind = "algebra-structure"


class MorphismError(InfdefError):
    kind = "invalid-morphism"


class NotSurjectiveError(MorphismError):
    kind = "not-surjective"


class NotSmallExtensionError(MorphismError):
    kind = "not-small-extension"


class IncompatibleDeformationsError(InfdefError):
    kind = "incompatible-deformations"


class AssignmentError(InfdefError):
    kind = "invalid-assignment"


class StabilizationError(InfdefError):
    kind = "no-stabilization"


class TruncationOverflowError(InfdefError):
    kind = "truncation-overflow"


class ParameterError(InfdefError):
    """Numeric argument outside its admissible range."""

    kind = "parameter-range"
