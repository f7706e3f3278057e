"""Exception hierarchy for the adhesive-string laboratory.

Every error raised by the library derives from :class:`AdhestringError`,
so callers can catch one type at the CLI boundary and map subclasses to
exit codes.
"""


class AdhestringError(Exception):
    """Base class for all library errors."""


class ParameterDomainError(AdhestringError, ValueError):
    """A numeric parameter lies outside its admissible domain."""


class ConfigError(AdhestringError, ValueError):
    """Invalid configuration: bad key, malformed value, or broken invariant.

    ``line`` is the 1-based line number in the config text when known.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BlowupError(AdhestringError, ArithmeticError):
    """The solution became non-finite mid-run; carries the step index."""

    def __init__(self, step: int, message: str = ""):
        self.step = step
        super().__init__(message or f"non-finite field values at step {step}")


class IterationLimitError(AdhestringError, RuntimeError):
    """A fixed-point iteration hit its cap; carries the last change norm."""

    def __init__(self, iterations: int, last_change: float):
        self.iterations = iterations
        self.last_change = last_change
        super().__init__(
            f"no convergence in {iterations} iterations "
            f"(last sup-norm change {last_change:.3e})"
        )


class ResolutionError(AdhestringError, ValueError):
    """A geometric query is finer than the grid can resolve."""


class UnknownScenarioError(AdhestringError, KeyError):
    """Requested experiment scenario is not in the registry."""
