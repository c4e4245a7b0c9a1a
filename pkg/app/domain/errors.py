from typing import Optional


class MoleculeError(ValueError):
    """Base class for every error raised by the molecule library."""


class SignatureError(MoleculeError):
    """Arity, twist, cap or axis mismatch, or a Top factor where none is allowed."""


class NoBoundaryError(MoleculeError):
    def __init__(self, atom=None):
        super().__init__("no boundary")
        self.atom = atom


class EmptySubcomplexError(MoleculeError):
    def __init__(self, message: str = "empty subcomplex"):
        super().__init__(message)


class NotAMoleculeError(MoleculeError):
    def __init__(self, verdict, message: Optional[str] = None):
        super().__init__(message or verdict.describe())
        self.verdict = verdict


class BoundaryMismatchError(MoleculeError):
    def __init__(self, level: int, left_target, right_source):
        super().__init__(
            f"d_{level}^+ of the left operand is {left_target} "
            f"but d_{level}^- of the right operand is {right_source}"
        )
        self.level = level
        self.left_target = left_target
        self.right_source = right_source


class PreconditionError(MoleculeError):
    pass


class ParseError(MoleculeError):
    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        if line is not None and column is not None:
            message = f"{message} at line {line}, column {column}"
        super().__init__(message)
        self.line = line
        self.column = column


class BoundExceededError(MoleculeError):
    pass


class CatalogFormatError(MoleculeError):
    pass


class ConstructionError(MoleculeError):
    """An internal invariant of decomposition or enumeration did not hold."""
