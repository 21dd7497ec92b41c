"""Shared exception types."""


class ParseError(ValueError):
    """Malformed input file (message names the offending line)."""


class CapacityError(RuntimeError):
    """Requested enumeration exceeds the configured codeword cap."""


class IntegralityError(ArithmeticError):
    """An exact transform produced a non-integer where an integer is forced."""
