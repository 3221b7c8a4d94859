"""Exception hierarchy shared by the library and the command line."""


class PfhatError(Exception):
    """Base class for every error raised by pfhat."""


class ValidationError(PfhatError, ValueError):
    """Input outside the documented domain of an operation.

    Subclasses ``ValueError`` so callers that guard parameters with
    ``except ValueError`` keep working.
    """


class InvariantError(PfhatError, ArithmeticError):
    """An internal self-check failed.

    Raised when a closed form is not integral, two independent evaluations
    disagree, or a vector that must lie in a span does not. Any occurrence is a
    bug in pfhat, not a property of the input.
    """
