"""Exception types shared across the package."""


class DimertopError(Exception):
    """Base class for all package errors."""


class UnknownEdge(DimertopError):
    """A multi-index or word references an edge the triangulation does not have."""


class LaminationConditionViolated(DimertopError):
    """Edge counts violate the per-face parity / triangle-inequality condition."""


class EmbeddingDegenerate(DimertopError):
    """A puncture lies on (or too close to) a polyline, so winding is undefined."""


class BacktrackingWord(DimertopError):
    """An operation that needs a reduced word received a backtracking one."""


class SingularEdgeMatrix(DimertopError):
    """An edge matrix that must be inverted is (numerically) singular."""


class BudgetExceeded(DimertopError):
    """An exact computation would exceed the configured combinatorial budget."""


class CapExceeded(DimertopError):
    """A brute-force enumeration would exceed the requested cap."""


class OddVertexCount(DimertopError):
    """Domain has unequal black/white vertex counts, so no perfect matching."""


class NotSimplyConnected(DimertopError):
    """Domain has holes; Euler characteristic is not 1."""


class Disconnected(DimertopError):
    """Domain (or dual graph) is not connected."""


class TangencyDetected(DimertopError):
    """A polyline touches a triangulation edge or cut arc tangentially."""


class NonLaminationAggregate(DimertopError):
    """Summed crossing counts of kept loops fail the lamination or
    macroscopicity check.  Should be impossible for disjoint simple loops;
    carries a debug dump."""

    def __init__(self, message, dump=None):
        super().__init__(message)
        self.dump = dump


class NumericBreakdown(DimertopError):
    """Sequential sampler hit a numerically unusable pivot even after
    refactorization."""
