"""Exception types shared across the package."""


class DomainError(ValueError):
    """A parameter or argument lies outside its documented domain."""


class PatternError(ValueError):
    """A sequence or measure lacks the structure an operation requires."""


class NumericalError(RuntimeError):
    """A numerical procedure could not produce a trustworthy result."""


class PoleError(NumericalError):
    """Evaluation collided with a pole of a rational function."""


class OnCutError(NumericalError):
    """Branch selection is ambiguous: the argument sits on the branch cut."""
