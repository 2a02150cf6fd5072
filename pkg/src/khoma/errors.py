"""Exception hierarchy with stable machine-readable codes.

Every error the CLI can surface carries a ``code`` string that is part of
the public interface: scripts may match on it, so codes never change.
"""


class KhomaError(Exception):
    code = "ERROR"

    def __init__(self, message: str = ""):
        super().__init__(message)
        self.message = message


class MalformedToken(KhomaError):
    code = "MALFORMED_TOKEN"


class ArcLabelUsedWrongMultiplicity(KhomaError):
    code = "ARC_LABEL_USED_WRONG_MULTIPLICITY"


class InconsistentOrientation(KhomaError):
    code = "INCONSISTENT_ORIENTATION"


class StateSpaceTooLarge(KhomaError):
    code = "STATE_SPACE_TOO_LARGE"


class SiteMismatch(KhomaError):
    code = "SITE_MISMATCH"


class NotAKnot(KhomaError):
    code = "NOT_A_KNOT"


class SameComponent(KhomaError):
    code = "SAME_COMPONENT"


class AmbiguousEmbedding(KhomaError):
    code = "AMBIGUOUS_EMBEDDING"


class MalformedEdge(KhomaError):
    code = "MALFORMED_EDGE"


class DifferentialNotSquareZero(KhomaError):
    code = "DIFFERENTIAL_NOT_SQUARE_ZERO"


class NotDivisible(KhomaError):
    code = "NOT_DIVISIBLE"


class RingMismatch(KhomaError):
    code = "RING_MISMATCH"


class NotPositive(KhomaError):
    code = "NOT_POSITIVE"


class MalformedGraph(KhomaError):
    code = "MALFORMED_GRAPH"


class IndexOutOfRange(KhomaError):
    code = "INDEX_OUT_OF_RANGE"


class EdgeNotFound(KhomaError):
    code = "EDGE_NOT_FOUND"
