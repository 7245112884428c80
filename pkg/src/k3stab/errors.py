"""Exception hierarchy.

Every error carries a short machine-readable ``code``, the ``clause`` that
failed and the offending ``values`` so the CLI can emit a structured record.
"""


class K3StabError(Exception):
    code = "K3StabError"

    def __init__(self, message, clause=None, **values):
        super().__init__(message)
        self.message = message
        self.clause = clause
        self.values = values

    def to_record(self):
        return {
            "code": self.code,
            "clause": self.clause,
            "message": self.message,
            "values": {k: str(v) for k, v in self.values.items() if v is not None},
        }


def _make(name, doc):
    return type(name, (K3StabError,), {"code": name, "__doc__": doc})


DimensionError = _make("DimensionError", "Coordinate vectors and lattice rank disagree.")
DegenerateSublattice = _make("DegenerateSublattice", "The Gram block on (C, D) is singular.")
NotSpherical = _make("NotSpherical", "A twist was requested along a class with <v,v> != -2.")
KernelPhaseUndefined = _make("KernelPhaseUndefined", "Z = 0 and no kernel phase rule was supplied.")
KernelSlopeUndefined = _make("KernelSlopeUndefined", "Slope requested for a class with Z = 0.")
OutsideRegion = _make(
    "OutsideRegion", "Z lies in the open lower half-plane or on the positive real axis."
)
NotNormalized = _make("NotNormalized", "The C-coefficient of a transport class is not 1.")
CoordinateOutOfRange = _make("CoordinateOutOfRange", "A transport coordinate violates D_omega > -1.")
Singular = _make("Singular", "The requested solve divides by zero.")
OutOfDomain = _make("OutOfDomain", "An argument lies outside the domain of the operation.")
HypothesisViolated = _make("HypothesisViolated", "The running hypothesis alpha.C = 0 fails.")
NotAK3Configuration = _make(
    "NotAK3Configuration", "The intersection data admit no ample class (q <= 2)."
)
DClassUnavailable = _make("DClassUnavailable", "D = (nu - C)/e needs nu^2 = 2.")
InvalidSurface = _make("InvalidSurface", "A surface model failed validation.")


class SurfaceFileError(K3StabError):
    """Malformed surface file; ``field`` and ``line`` locate the problem."""

    code = "SurfaceFileError"

    def __init__(self, message, field=None, line=None):
        super().__init__(message, clause=field, line=line)
        self.field = field
        self.line = line
