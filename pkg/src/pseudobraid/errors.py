"""Exception types shared across the package."""


class PseudoBraidError(ValueError):
    """Base class for every error raised by this package."""


class ParseError(PseudoBraidError):
    """Malformed token, out-of-range index or bad strand count."""


class StrandMismatchError(PseudoBraidError):
    """Two operands live in monoids with different strand counts."""


class PreCrossingError(PseudoBraidError):
    """A pre-crossing letter appeared where a classical braid word is required."""


class ExpansionCapError(PseudoBraidError):
    """An exponential expansion would exceed its configured term cap."""


class MoveError(PseudoBraidError):
    """A Markov move is not applicable to the given word."""
