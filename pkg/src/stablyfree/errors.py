"""Exception hierarchy.

Every exception carries a stable ``code`` string; the report layer serializes
it so failures stay machine-readable.
"""


class StablyFreeError(Exception):
    code = "ERROR"


class FieldMismatch(StablyFreeError, TypeError):
    code = "FIELD_MISMATCH"


class PresentationMismatch(StablyFreeError, TypeError):
    code = "PRESENTATION_MISMATCH"


class NotAUnit(StablyFreeError, ArithmeticError):
    code = "NOT_A_UNIT"


class NotDivisible(StablyFreeError, ArithmeticError):
    code = "NOT_DIVISIBLE"

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class IllDefinedHom(StablyFreeError, ValueError):
    code = "ILL_DEFINED_HOM"

    def __init__(self, message, relator=None):
        super().__init__(message)
        self.relator = relator


class BadParameter(StablyFreeError, ValueError):
    code = "BAD_PARAMETER"


class ParseError(StablyFreeError, ValueError):
    code = "PARSE_ERROR"

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class DimensionMismatch(StablyFreeError, ValueError):
    code = "DIMENSION_MISMATCH"


class BadIndex(StablyFreeError, IndexError):
    code = "BAD_INDEX"


class OddDimension(StablyFreeError, ValueError):
    code = "ODD_DIMENSION"


class VerifyFailed(StablyFreeError, AssertionError):
    """A certificate or witness did not survive verification by multiplication."""

    code = "VERIFY_FAILED"

    def __init__(self, message, detail=None):
        super().__init__(message)
        self.detail = detail


class WitnessFailed(VerifyFailed):
    code = "WITNESS_FAILED"


class LiftVerifyFailed(VerifyFailed):
    code = "LIFT_VERIFY_FAILED"


class ChainStepFailed(VerifyFailed):
    code = "CHAIN_STEP_FAILED"


class RelationFailed(VerifyFailed):
    code = "RELATION_FAILED"


class FirstEntryMismatch(StablyFreeError, ValueError):
    code = "FIRST_ENTRY_MISMATCH"


class PreconditionError(StablyFreeError, ValueError):
    code = "PRECONDITION"


class NoSolutionInBound(StablyFreeError, ArithmeticError):
    code = "NO_SOLUTION_IN_BOUND"


class RankMismatch(StablyFreeError, ValueError):
    code = "RANK_MISMATCH"


class OddRank(StablyFreeError, ValueError):
    code = "ODD_RANK"


class UnsupportedShape(StablyFreeError, ValueError):
    code = "UNSUPPORTED_SHAPE"


class FieldTooLarge(StablyFreeError, ValueError):
    code = "FIELD_TOO_LARGE"


class HypothesisFailed(StablyFreeError, AssertionError):
    code = "HYPOTHESIS_FAILED"


class NotInPullback(StablyFreeError, ValueError):
    code = "NOT_IN_PULLBACK"
