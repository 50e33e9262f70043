"""Error hierarchy shared by every app.

Problems with user input are ValidationErrors, so they surface the same way
model and serializer validation does. Everything else is a GradedFlipError.
"""
from django.core.exceptions import ValidationError


class GradedFlipError(Exception):
    """Base class for computation errors that are not caused by bad input."""


class StructuralError(GradedFlipError):
    """Mismatched shapes, rings or a broken complex (d^2 != 0)."""


class UnsupportedOperationError(GradedFlipError):
    """The operation is well defined but not computed by this toolkit."""


class PreconditionError(GradedFlipError):
    """A required earlier step was not run, or did not succeed."""


class BudgetExceededError(GradedFlipError):
    """A computation ran out of its step budget."""

    def __init__(self, message, steps):
        super().__init__(message)
        self.steps = steps


class RingSpecError(ValidationError):
    """Invalid ring-spec document."""

    def __str__(self):
        return self.message


class RingSpecSyntaxError(RingSpecError):
    def __init__(self, message, line, column=None):
        self.line = line
        self.column = column
        location = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{location}: {message}", code="syntax")


class InhomogeneousRelationError(RingSpecError):
    def __init__(self, relation, term_weights):
        self.relation = relation
        self.term_weights = term_weights
        weights = ", ".join(str(weight) for weight in term_weights)
        super().__init__(
            f"inhomogeneous relation {relation} (term weights: {weights})",
            code="inhomogeneous",
        )


class ParameterError(RingSpecError):
    def __init__(self, message):
        super().__init__(message, code="parameter")
