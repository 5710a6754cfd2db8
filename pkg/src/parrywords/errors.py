"""Exception types shared across the package."""


class Error(Exception):
    """Base class for every domain error raised by this package."""


class ParameterError(Error):
    """A parameter word violates the standing hypotheses."""


class DomainError(Error):
    """An argument is outside an operation's domain."""


class NotInLanguageError(DomainError):
    """A digit word is not accepted by the numeration automaton."""


class ScopeError(Error):
    """The requested construction is only guaranteed when the greediness
    conditions hold, and they fail for this parameter word."""


class CapError(Error):
    """A configurable safety cap was exceeded."""


class InconclusiveError(Error):
    """A capped comparison ended without a definite answer."""
