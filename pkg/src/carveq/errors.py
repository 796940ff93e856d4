"""Exception types shared across the package."""


class CarveqError(Exception):
    """Base class for all package-specific errors."""


class IncomparableCodes(CarveqError):
    """Equality of two binary-sequence codes could not be decided.

    Raised instead of guessing when a periodic word is compared against a
    pullback over a pair-merged base and no disagreeing index exists below
    the search bound.
    """


class ClauseViolation(CarveqError):
    """A candidate pair (x, y) failed one of the three membership clauses."""

    def __init__(self, clause, witness, message=None):
        self.clause = clause
        self.witness = witness
        super().__init__(
            message or f"membership clause ({clause}) violated, witness {witness}"
        )


class StructuralMismatch(CarveqError):
    """Code combination outside the closed algebra accepted by this API."""


class DomainViolation(CarveqError):
    """A value was passed to a relation handle outside its declared domain."""


class NoWitness(CarveqError):
    """No index witnessing a required value exists; a precondition was violated."""


class TypeMismatch(CarveqError):
    """Reduction records whose endpoint relations do not line up."""


class ResourceLimit(CarveqError):
    """Enumeration exceeded the configured cap."""


class ParseError(CarveqError):
    """Malformed serialized code."""

    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} (at position {position})")
