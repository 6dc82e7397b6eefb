"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or out-of-range input (bad vertex id, non-edge, bad file)."""


class GraphParseError(InputError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CapExceeded(RuntimeError):
    """An exhaustive search was refused because the instance is over its cap."""


class DeadlineExceeded(RuntimeError):
    """A search ran past the caller-supplied deadline."""


class Unsupported(ValueError):
    """The requested (class, mode, method) combination has no solver."""
