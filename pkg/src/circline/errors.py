"""Exception types raised by circline."""


class CirclineError(Exception):
    pass


class InvalidArgument(CirclineError, ValueError):
    pass


class DegenerateMapError(CirclineError, ValueError):
    """Moebius coefficients with bc - ad = 0 (within tolerance)."""


class DegenerateRegionError(CirclineError, RuntimeError):
    """Raised when a region is too thin to draw margin-guarded samples from."""


class ParseError(CirclineError, ValueError):
    def __init__(self, path: str, message: str):
        self.path = path
        self.message = message
        super().__init__(f"{path}: {message}" if path else message)
