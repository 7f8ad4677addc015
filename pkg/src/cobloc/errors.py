"""Exception types raised across the package."""


class CobError(Exception):
    """Base class for every error raised by cobloc."""


class ValidationError(CobError, ValueError):
    """A cobordism value violates a structural invariant (missing/duplicate slot, bad index)."""


class SignatureMismatch(CobError, ValueError):
    def __init__(self, left, right, message=None):
        self.left = left
        self.right = right
        super().__init__(message or f"object signatures disagree: {left} vs {right}")


class InternalInvariantError(CobError, RuntimeError):
    """A self-check inside the gluing engine failed; indicates a bug, not bad input."""


class UnknownGenerator(CobError, KeyError):
    pass


class TypeMismatch(CobError, TypeError):
    def __init__(self, left, right, where=""):
        self.left = left
        self.right = right
        msg = f"type mismatch{(' in ' + where) if where else ''}: {left} vs {right}"
        super().__init__(msg)


class CobSyntaxError(CobError, SyntaxError):
    def __init__(self, message, line, column):
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")


class NotInCategory(CobError, ValueError):
    pass


class NotComposable(CobError, ValueError):
    def __init__(self, index, message=""):
        self.index = index
        super().__init__(message or f"word not composable at letter {index}")


class NotALoop(CobError, ValueError):
    pass


class NotStronglyConnected(CobError, ValueError):
    pass


class EndpointMismatch(CobError, ValueError):
    pass


class FreeBoundaryError(CobError, ValueError):
    pass


class BoundExceeded(CobError, RuntimeError):
    pass


class SingularPairing(CobError, ArithmeticError):
    pass


class OpenSectorGenerator(CobError, ValueError):
    pass
