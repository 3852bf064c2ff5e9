"""Exception types shared across the package."""


class SymbolError(ValueError):
    """Base class for symbol validation failures."""


class GapViolation(SymbolError):
    """A row violates the minimum gap between consecutive entries."""


class BoundViolation(SymbolError):
    """An entry is negative or a second-row entry is below the floor s."""


class NonIntegralRank(SymbolError):
    """The sum condition does not solve for an integer rank.

    Unreachable for integer inputs (the total-size parity always matches the
    defect parity), kept so callers can catch one stable family of errors.
    """


class ParityMismatch(SymbolError):
    """Two symbols cannot be brought to a common total size."""


class NotInClass(SymbolError):
    """A symbol does not belong to the similarity class it was checked against."""


class LengthMismatch(SymbolError):
    """A bit-vector has the wrong length for the space it addresses."""


class MarkedPartitionError(ValueError):
    """Base class for marked-partition validation failures."""


class BadBlockShape(MarkedPartitionError):
    """Blocks are not a partition into singletons and adjacent pairs."""


class ParityViolation(MarkedPartitionError):
    """A singleton block carries a part of the wrong parity."""


class PairMismatch(MarkedPartitionError):
    """A pair block carries two distinct part values."""


class SingletonPairClash(MarkedPartitionError):
    """Some singleton block has the same value as some pair block."""


class ZeroCount(MarkedPartitionError):
    """Too many zero parts, or a zero/negative part where none is allowed."""


class PartCountParity(MarkedPartitionError):
    """The number of parts has the wrong parity for the kind."""


class BasisCountMismatch(RuntimeError):
    """Canonical basis size differs from the proper-interval count."""


class InvalidCharacter(ValueError):
    """A character bit-vector does not match the space it is evaluated on."""


class NotInImage(LookupError):
    """An inverse lookup failed; the input is not in the map's image."""


class NotInXn(ValueError):
    """A partition violates the even-multiplicity / distinct-odd-part rules."""
