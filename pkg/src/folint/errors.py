"""Exception types raised across the package."""


class FolintError(ValueError):
    """Base class for every error the toolkit raises on bad input or state."""


class EulerViolation(FolintError):
    pass


class AllZero(FolintError):
    pass


class DegenerateField(FolintError):
    pass


class DegreeMismatch(FolintError):
    pass


class DependentPencil(FolintError):
    """The two members given for a pencil are proportional."""


class LengthMismatch(FolintError):
    pass


class ZeroLeadingCoefficient(FolintError):
    pass


class NonRationalDetected(FolintError):
    """A non-simple singular point with irrational coordinates was met."""


class PositiveDimensionalSingularLocus(FolintError):
    pass


class NonTermination(FolintError):
    """The blow-up depth limit was exceeded."""


class MissingCoordinates(FolintError):
    pass


class NotIndependent(FolintError):
    pass


class WrongCardinality(FolintError):
    pass


class Degenerate(FolintError):
    """The candidate line lies entirely on the isotropic quadric."""


class GenusOne(FolintError):
    pass


class WrongDicriticalCount(FolintError):
    pass


class InvalidConfiguration(FolintError):
    pass
