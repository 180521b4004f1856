"""Exception hierarchy shared by every module of the workbench."""


class DblCatError(Exception):
    """Base class for all workbench errors."""


class NotComposable(DblCatError):
    pass


class MissingEntry(DblCatError):
    """A composition table has no entry for a composable pair (malformed input)."""


class UnknownCell(DblCatError):
    pass


class MalformedGrid(DblCatError):
    pass


class BoundaryMismatch(DblCatError):
    pass


class BoundaryNotFactorable(DblCatError):
    pass


class AmbiguousFactorization(DblCatError):
    def __init__(self, message, factorizations=()):
        super().__init__(message)
        self.factorizations = tuple(factorizations)


class MismatchedVertical(DblCatError):
    pass


class NotInvertible(DblCatError):
    pass


class IncompatibleData(DblCatError):
    pass


class ShapeMismatch(DblCatError):
    pass


class Mismatch(DblCatError):
    """Two pseudofunctors cannot be composed (codomain and domain differ)."""


class UnknownFixture(DblCatError):
    pass


class ParseError(DblCatError):
    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class UnknownKind(ParseError):
    pass


class DanglingId(ParseError):
    def __init__(self, ident, where=""):
        super().__init__(f"undefined id {ident!r}" + (f" in {where}" if where else ""))
        self.ident = ident
