"""Exception hierarchy.

Every error derives from :class:`OrdinalEvalError`, which is itself a
``ValueError`` so that callers using the usual scikit-learn idiom of
catching ``ValueError`` on bad input keep working.
"""


class OrdinalEvalError(ValueError):
    """Base class for all input and configuration errors.

    ``row`` optionally carries the 0-based observation index the error
    refers to, so file readers can translate it into a line number.
    """

    def __init__(self, message, row=None):
        super().__init__(message)
        self.row = row


class ShapeError(OrdinalEvalError):
    pass


class RangeError(OrdinalEvalError):
    pass


class RowSumError(OrdinalEvalError):
    pass


class DomainError(OrdinalEvalError):
    pass


class DegenerateError(OrdinalEvalError):
    pass


class PreconditionError(OrdinalEvalError):
    pass


class DuplicateNameError(OrdinalEvalError):
    pass


class LabelMismatchError(OrdinalEvalError):
    pass


class ConfigError(OrdinalEvalError):
    pass


class FoldError(OrdinalEvalError):
    pass


class EmptyTrainError(OrdinalEvalError):
    pass


class DegenerateClassError(OrdinalEvalError):
    pass
