"""Exception types raised by the Calpanic algebra, parser and front ends."""


class CalpanicError(Exception):
    """Base class for every error raised by this package.

    ``position`` is filled in by the expression evaluator with the character
    offset of the node whose evaluation failed.
    """

    position: int | None = None


class ZeroCoefficient(CalpanicError):
    """A term was built with a scalar-zero coefficient."""


class NonMonomialDivisor(CalpanicError):
    pass


class NegativeExponent(CalpanicError):
    pass


class UnsupportedBase(CalpanicError):
    pass


class UnsupportedExponent(CalpanicError):
    pass


class SingularValue(CalpanicError):
    """Real collapse was asked of a value carrying a ka^n term, n >= 1."""


class UnsupportedOperand(CalpanicError):
    pass


class NoSuchOrder(CalpanicError):
    pass


class ShapeMismatch(CalpanicError):
    pass


class DegenerateRHS(CalpanicError):
    pass


class Unsupported(CalpanicError):
    """Input is recognised but no solution procedure exists for it."""


class CalpanicSyntaxError(CalpanicError):
    """Parse failure.

    ``offset`` is the character index into the source text, ``byte_offset``
    the same position in its UTF-8 encoding.
    """

    def __init__(self, message: str, text: str, offset: int, expected=()):
        self.text = text
        self.offset = offset
        self.byte_offset = len(text[:offset].encode("utf-8"))
        self.expected = frozenset(expected)
        self.position = offset
        detail = message
        if self.expected:
            detail += " (expected one of: " + ", ".join(sorted(self.expected)) + ")"
        super().__init__(f"{detail} at byte {self.byte_offset}")
