"""Exception hierarchy shared by every stage of the scheduling pipeline."""


class ScenarioParseError(ValueError):
    """Input could not be read or decoded (malformed JSON, CSV or YAML)."""


class ValidationError(ValueError):
    """Input was decoded but violates a model invariant."""


class DuplicateIdError(ValidationError):
    pass


class DanglingReferenceError(ValidationError):
    pass


class NonPositiveValueError(ValidationError):
    pass


class UnknownKeyError(ValidationError):
    pass


class MissingKeyError(ValidationError):
    pass


class SchemaTypeError(ValidationError):
    pass


class EmptyMatrixError(ValidationError):
    pass


class UnknownUserTypeError(ValidationError):
    pass


class UnknownAlgorithmError(ValidationError):
    pass


class ThresholdOrderError(ValidationError):
    pass


class NegativeUsageError(ValidationError):
    pass


class DuplicateUsageError(ValidationError):
    pass


class UnknownCustomerError(ValidationError):
    pass


class InvalidRuleError(ValidationError):
    pass


class EmptyInputError(ValidationError):
    pass


class SchedulingError(RuntimeError):
    """A scheduler or executor could not produce a schedule."""


class EmptyResourceListError(SchedulingError):
    pass


class PolicyContractError(SchedulingError):
    pass


class InstanceTooLargeError(SchedulingError):
    pass
