"""Exception hierarchy shared across the package.

Two error classes matter for the CLI contract: malformed input (exit code 2)
and semantically invalid requests on well-formed input (exit code 3).
"""


class EngineError(Exception):
    """Base class for all errors raised by this package."""


class InputError(EngineError):
    """Malformed input: unparsable formula, bad file, unknown identifier."""


class SemanticError(EngineError):
    """Well-formed input that violates a precondition or domain constraint."""
