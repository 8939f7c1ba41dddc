"""Exception hierarchy shared by the whole package.

The CLI maps these onto exit codes: InputError -> 2, ResourceError -> 3,
and a failed property (e.g. an axiom violation reported through
ValidationError) -> 1.  Everything else is a genuine bug.
"""


class LogrootError(Exception):
    """Base class for all errors raised by this package."""


class InputError(LogrootError):
    """Malformed input: wrong arity, unknown name, bad syntax."""


class ValidationError(LogrootError):
    """A well-formed object fails a defining axiom.

    Carries a machine-readable locus describing what failed.
    """

    def __init__(self, message, locus=None):
        super().__init__(message)
        self.locus = dict(locus) if locus else {}


class ResourceError(LogrootError):
    """A bounded semi-decision ran out of budget.

    This is an *unknown* outcome, never a negative answer; callers must not
    conflate it with a property failing.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class UnsupportedOperationError(LogrootError):
    """Operation outside the supported coefficient tier."""
