"""Exception hierarchy.

Every error carries a short machine-readable ``code`` used by the CLI.
"""


class BiquatError(ValueError):
    code = "error"
    internal = False

    def __init__(self, detail="", **extra):
        super().__init__(detail)
        self.detail = detail
        self.extra = extra


class ChiralityMismatch(BiquatError):
    code = "ChiralityMismatch"


class NotInRepresentation(BiquatError):
    code = "NotInRepresentation"


class NotAnObserver(BiquatError):
    code = "NotAnObserver"


class SpeedNotSubluminal(BiquatError):
    code = "SpeedNotSubluminal"


class NotUnitSpatial(BiquatError):
    code = "NotUnitSpatial"


class NotAnEigenvalue(BiquatError):
    code = "NotAnEigenvalue"


class DegenerateScalar(BiquatError):
    """Raised for scalar-only elements; ``basis`` holds a canonical (non-unique) pair."""

    code = "DegenerateScalar"

    def __init__(self, detail="", basis=None):
        super().__init__(detail)
        self.basis = basis


class NotPure(BiquatError):
    code = "NotPure"


class NotSkew(BiquatError):
    code = "NotSkew"


class NotBiquatLorentz(BiquatError):
    code = "NotBiquatLorentz"


class NotExponentialInS(BiquatError):
    code = "NotExponentialInS"


class NotProperLorentz(BiquatError):
    code = "NotProperLorentz"


class LiftFailed(BiquatError):
    code = "LiftFailed"
    internal = True


class NotNullquat(BiquatError):
    code = "NotNullquat"


class OutOfDomain(BiquatError):
    code = "OutOfDomain"


class RefinementExhausted(BiquatError):
    code = "RefinementExhausted"

    def __init__(self, detail="", interval=None):
        super().__init__(detail, interval=list(interval) if interval is not None else None)
        self.interval = interval


class BranchDegenerate(BiquatError):
    code = "BranchDegenerate"


class ZeroField(BiquatError):
    code = "ZeroField"
