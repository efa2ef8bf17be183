"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class OrthoRadialError(Exception):
    """Base class for every error raised by this package."""


# plane_graph
class NonPlanarOrInconsistent(OrthoRadialError):
    pass


class DegreeExceeded(OrthoRadialError):
    pass


class SelfLoop(OrthoRadialError):
    pass


class Disconnected(OrthoRadialError):
    pass


class UnknownEdge(OrthoRadialError):
    pass


class PositionsNotOnFace(OrthoRadialError):
    pass


class NotACycle(OrthoRadialError):
    pass


class NotSimple(OrthoRadialError):
    pass


# representation
class NotIncident(OrthoRadialError):
    pass


class NotAPath(OrthoRadialError):
    pass


class InvalidReferencePath(OrthoRadialError):
    pass


class NotLocallyConsistent(OrthoRadialError):
    def __init__(self, report):
        super().__init__(str(report))
        self.report = report


class CentralFaceStrictlyMonotone(OrthoRadialError):
    pass


class RotationNonZero(OrthoRadialError):
    pass


class NotOnOuterCycle(OrthoRadialError):
    pass


class SameCentralAndOuter(OrthoRadialError):
    """f_c = f_o is the classical orthogonal setting and is not handled here."""


# labeling
class NotEssential(OrthoRadialError):
    pass


class NoPathInExterior(OrthoRadialError):
    pass


# validity
class TooLarge(OrthoRadialError):
    pass


class NotValid(OrthoRadialError):
    def __init__(self, witness, message: str = "representation is not valid"):
        super().__init__(message)
        self.witness = witness


# rectangulation
class NotRegular(OrthoRadialError):
    pass


class NotACandidate(OrthoRadialError):
    pass


# compaction
class NotRectangular(OrthoRadialError):
    pass


class Infeasible(OrthoRadialError):
    def __init__(self, cut, message: str = "flow network has no feasible circulation"):
        super().__init__(f"{message}; cut={sorted(cut)}")
        self.cut = cut


class InconsistentIntegration(OrthoRadialError):
    pass


# io_cli
class ParseError(OrthoRadialError):
    pass


class ParamsOutOfRange(OrthoRadialError):
    pass
