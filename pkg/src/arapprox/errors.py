"""Exception hierarchy.  Every engine error carries a short machine-readable kind."""


class ArApproxError(Exception):
    kind = "error"

    def record(self) -> dict:
        return {"error": self.kind, "message": str(self)}


class CycleDetected(ArApproxError):
    kind = "cycle-detected"


class InadmissibleRelation(ArApproxError):
    kind = "inadmissible-relation"


class UnknownVertex(ArApproxError):
    kind = "unknown-vertex"


class AlgebraMismatch(ArApproxError):
    kind = "algebra-mismatch"


class UndecidableDecomposition(ArApproxError):
    """End/rad has dimension > 1 and no splitting element was found."""
    kind = "undecidable-decomposition"


class NotProjective(ArApproxError):
    kind = "not-projective"


class NotInjective(ArApproxError):
    kind = "not-injective"


class IsProjective(ArApproxError):
    kind = "is-projective"


class IsInjective(ArApproxError):
    kind = "is-injective"


class NotIndecomposable(ArApproxError):
    kind = "not-indecomposable"


class BoundExceeded(ArApproxError):
    kind = "bound-exceeded"


class WindowTooSmall(ArApproxError):
    kind = "window-too-small"


class OutOfWindow(ArApproxError):
    kind = "out-of-window"


class ValidationFailure(ArApproxError):
    kind = "validation-failure"


class CoverNotStrong(ArApproxError):
    kind = "cover-not-strong"


class NotRealized(ArApproxError):
    kind = "not-realized"


class Mismatch(ArApproxError):
    kind = "mismatch"
