"""Error types shared by the olim41 modules."""


class DomainError(ValueError):
    """Input outside an operation's mathematical domain."""


class SingularPointError(DomainError):
    """Evaluation requested at a singular point (zero coordinate,
    logarithm of zero, or a gradient on the dilogarithm cut)."""


class BranchInconsistencyError(DomainError):
    """The branch-correction ratio -D/(2*pi*i) is not close to the
    admissible integer or half-integer grid; the point is not a critical
    point of any branch of the potential."""


class UnsupportedFramingError(DomainError):
    """The direct surgery formula is stated for positive framing only."""


class ReferenceDataError(DomainError):
    """Malformed or inconsistent geometry reference data."""
