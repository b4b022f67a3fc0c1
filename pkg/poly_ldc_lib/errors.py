# poly_ldc_lib/errors.py


class PolyLDCError(Exception):
    """Base class for every error raised by the library."""


class SizeCap(PolyLDCError):
    def __init__(self, requested: int, cap: int, what: str = "output"):
        self.requested = requested
        self.cap = cap
        self.what = what
        super().__init__(f"{what} has {requested} elements, above the size cap {cap}")


class DomainMismatch(PolyLDCError):
    def __init__(self, message: str, left: object = None, right: object = None):
        self.left = left
        self.right = right
        super().__init__(message)


class ParseError(PolyLDCError):
    def __init__(self, line: int, column: int, expected: str, text: str = ""):
        self.line = line
        self.column = column
        self.expected = expected
        self.text = text
        super().__init__(f"Parse error at line {line}, column {column}: expected {expected}")


class NotRepresentable(PolyLDCError):
    pass


class InvalidMonoid(PolyLDCError, ValueError):
    pass
