"""Exception hierarchy shared by every module in the package."""


class RoughSpanError(ValueError):
    """Base class for all domain errors raised by roughspan."""


class InvalidTable(RoughSpanError):
    pass


class AttributeNotFound(RoughSpanError):
    pass


class ObjectNotFound(RoughSpanError):
    pass


class UndefinedAccuracy(RoughSpanError):
    """Accuracy of the empty set is 0/0."""


class InvalidWeights(RoughSpanError):
    pass


class EmptyAttributeSet(RoughSpanError):
    pass


class InvalidFuzzyRelation(RoughSpanError):
    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = list(violations)


class InvalidFuzzySet(RoughSpanError):
    pass


class UniverseMismatch(RoughSpanError):
    pass


class MissingOperand(RoughSpanError):
    """An approximation definition was called without the operand it needs."""


class MissingPartition(MissingOperand):
    pass


class UniverseTooLarge(RoughSpanError):
    pass


class InvalidSeed(RoughSpanError):
    pass


class MissingDecision(RoughSpanError):
    pass


class DuplicateObjectId(InvalidTable):
    pass


class RaggedRow(InvalidTable):
    pass


class EmptyTable(InvalidTable):
    pass
