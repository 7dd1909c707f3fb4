"""Exception types shared across the library."""


class PathAlgError(Exception):
    """Base class for all library errors."""


class ParseError(PathAlgError):
    """Syntax or reference error in a quiver document, with position info."""

    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        if line is not None:
            message = f"line {line}, col {col}: {message}"
        super().__init__(message)


class CyclicQuiverError(PathAlgError):
    """The directed graph contains an oriented cycle."""

    def __init__(self, cycle):
        self.cycle = list(cycle)
        super().__init__("oriented cycle: " + " -> ".join(str(v) for v in self.cycle))


class RelationError(PathAlgError):
    """A relation is malformed (non-parallel terms, short paths, bad refs)."""


class DimensionMismatchError(PathAlgError):
    """Operands have incompatible dimensions or ambient spaces."""


class CharTwoFieldError(PathAlgError):
    """Jordan-type operations are undefined over characteristic 2."""


class NotLieDerivationError(PathAlgError):
    """standard_decompose requires a Lie derivation as input."""


class TheoremViolationError(PathAlgError):
    """Internal alarm: a structural guarantee failed to verify.

    Must never fire on a valid bound path algebra; firing indicates an
    implementation fault, not a usage error.
    """


class NonUniqueDecompositionError(TheoremViolationError):
    """The standard decomposition came out non-unique (or unsolvable)."""


class NotIdempotentError(PathAlgError):
    """Pierce decomposition requires an idempotent element."""


class NotASourceError(PathAlgError):
    """One-point peeling requires a source vertex."""


class BlockLeakError(TheoremViolationError):
    """A map's image violates the expected triangular block pattern."""


class HasRelationsError(PathAlgError):
    """Operation is defined only for relation-free path algebras."""


class DisconnectedQuiverError(PathAlgError):
    """Operation is defined only for connected quivers."""
