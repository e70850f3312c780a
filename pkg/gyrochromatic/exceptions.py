"""
Exceptions shared by every gyrochromatic module

Includes:
- GyroError: base class
- ValidationError: invalid input (exit code 2 in the CLI)
- BudgetExceeded: a node/column budget ran out (exit code 3)
- InvariantViolation: internal consistency check failed
"""


class GyroError(Exception):
    """ Base class for all errors raised by the toolkit """


class ValidationError(GyroError):
    """ Input does not satisfy an operation's preconditions """

    def __init__(self, message, location=None):
        self.message = message
        self.location = location
        if location is not None:
            message = f"{message} (at {location})"
        super().__init__(message)


class BudgetExceeded(GyroError):
    """ A search or enumeration exceeded its budget """

    def __init__(self, message, limit=None, partial=None):
        self.limit = limit
        self.partial = partial
        super().__init__(f"{message} (limit={limit}, reached={partial})")


class InvariantViolation(GyroError):
    """ An internal invariant failed; indicates a bug, not bad input """
