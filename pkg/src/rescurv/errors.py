"""Exception types shared across the package."""


class RescurvError(Exception):
    """Base class for all package-specific errors."""


class SelfLoopError(RescurvError):
    """An edge joins a vertex to itself."""


class DuplicateEdgeError(RescurvError):
    """The same unordered vertex pair appears twice in a simple graph."""


class NonpositiveResistanceError(RescurvError):
    """An edge resistance is zero or negative."""


class IndexOutOfRangeError(RescurvError, IndexError):
    """A vertex index is outside 0..n-1."""


class NoSuchEdgeError(RescurvError):
    """The requested edge is not present."""


class DisconnectedGraphError(RescurvError):
    """The operation requires a connected graph."""


class DisconnectedTerminalsError(RescurvError):
    """The two terminals of a network lie in different components."""


class ConvergenceFailureError(RescurvError):
    """The floating-point eigensolver failed to converge."""


class DimensionMismatchError(RescurvError):
    """Two inputs describe objects of different sizes."""


class NotAPathProductError(RescurvError):
    """Boundary/interior classification only applies to products of paths."""


class BackendNotExactError(RescurvError):
    """The operation is defined for the exact rational backend only."""


class SingularMatrixError(RescurvError):
    """Exact elimination hit a structurally singular matrix."""
