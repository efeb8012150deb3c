"""Exception hierarchy shared by every module of the package."""


class MTopoError(ValueError):
    """Base class for all input and contract errors raised by mtopo."""


class UnknownElement(MTopoError):
    pass


class CountExceedsBound(MTopoError):
    pass


class NegativeCount(MTopoError):
    pass


class SpaceMismatch(MTopoError):
    pass


class NotASubmset(MTopoError):
    pass


class EmptyFamilyWithoutAmbient(MTopoError):
    pass


class PointNotInGround(MTopoError):
    pass


class AxiomViolation(MTopoError):
    """A family failed one of the M-topology axioms.

    ``witness`` holds the offending multisets: one for membership failures,
    ``(A, B, result)`` for closure failures.
    """

    def __init__(self, message, witness=()):
        super().__init__(message)
        self.witness = tuple(witness)


class MissingEmpty(AxiomViolation):
    pass


class MissingGround(AxiomViolation):
    pass


class NotSubmsetOfGround(AxiomViolation):
    pass


class NotClosedUnderUnion(AxiomViolation):
    pass


class NotClosedUnderIntersection(AxiomViolation):
    pass


class ArityMismatch(MTopoError):
    pass


class UnknownTheorem(MTopoError):
    pass


class CapExceeded(MTopoError):
    pass


class InstanceBudgetExceeded(MTopoError):
    pass


class BudgetExceeded(MTopoError):
    """Raised when a search stops before covering its space.

    ``coverage`` maps counter names (spaces, instances) to what was done.
    """

    def __init__(self, message, coverage=None):
        super().__init__(message)
        self.coverage = dict(coverage or {})


class SpaceFileError(MTopoError):
    pass


class InternalConsistencyError(RuntimeError):
    """The table-driven checker and the definition-level evaluator disagree."""
