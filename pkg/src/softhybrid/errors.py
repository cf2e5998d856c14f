"""Exception hierarchy shared by the library, the dataset reader and the CLI."""


class SoftSetError(ValueError):
    """Base class for every error raised by softhybrid."""


class UnknownLabel(SoftSetError):
    pass


class GradeOutOfRange(SoftSetError):
    pass


class VariantViolation(SoftSetError):
    pass


class SupportViolation(SoftSetError):
    """A value set is present at a parameter whose grade is 0."""


class MixedSpaces(SoftSetError):
    """Operands do not share a universe (and, where required, a parameter space)."""


class EmptyInput(SoftSetError):
    pass


class DimensionMismatch(SoftSetError):
    pass


class UnknownIdentity(SoftSetError, KeyError):
    def __str__(self):
        return ValueError.__str__(self)


class DatasetSyntaxError(SoftSetError):
    """Malformed JSON; the message carries line and column."""

    def __init__(self, msg, lineno=None, colno=None):
        super().__init__(msg)
        self.lineno = lineno
        self.colno = colno


class SchemaError(SoftSetError):
    pass


class DuplicateName(SoftSetError):
    pass
