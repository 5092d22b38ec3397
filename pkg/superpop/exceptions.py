class SuperPopError(Exception):
    """Base class for all superpop errors."""
    pass


class InputError(SuperPopError):
    """Raised when input data is empty, too small or otherwise unusable."""
    pass


class ParseError(InputError):
    """Raised when a record in a read file is malformed."""
    def __init__(self, record_index: int, reason: str):
        self.record_index = record_index
        self.reason = reason
        super().__init__(f"Malformed record #{record_index}: {reason}")


class LengthMismatchError(InputError):
    """Raised under the strict length policy when a read differs from the first read's length."""
    def __init__(self, record_index: int, expected: int, found: int):
        self.record_index = record_index
        self.expected = expected
        self.found = found
        super().__init__(
            f"Record #{record_index} has length {found}, expected {expected} (length policy 'strict')"
        )


class ArgumentError(SuperPopError):
    """Raised when a numeric parameter (alpha, compression factor, ...) is out of range."""
    pass


class CapacityError(SuperPopError):
    """Raised when an input exceeds a configured size cap."""
    def __init__(self, what: str, size: int, limit: int):
        self.what = what
        self.size = size
        self.limit = limit
        super().__init__(f"{what}: size {size} exceeds limit {limit}")


class InvalidCoverError(SuperPopError):
    """Raised when a cycle cover breaks a structural or period invariant."""
    pass
