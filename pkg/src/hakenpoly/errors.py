"""Exception hierarchy for hakenpoly."""


class HakenPolyError(Exception):
    """Base class for all library errors."""


class PolyhedronError(HakenPolyError, ValueError):
    """A face list does not describe a valid abstract polyhedron."""


class NonManifoldEdge(PolyhedronError):
    pass


class NonManifoldVertex(NonManifoldEdge):
    """The faces around a vertex form more than one disc (a pinched vertex)."""


class NotSphere(PolyhedronError):
    pass


class NotSimple(PolyhedronError):
    pass


class NotThreeConnected(PolyhedronError):
    pass


class DegreeTooLow(PolyhedronError):
    pass


class ObtuseLabel(HakenPolyError, ValueError):
    """A dihedral angle label exceeds pi/2 (or is not positive)."""


class LabelError(HakenPolyError, ValueError):
    """The label map does not cover exactly the edges of the polyhedron."""


class CrossingCircuits(HakenPolyError):
    """Two essential prismatic 3-circuits interleave on the sphere."""


class AmbiguousCut(HakenPolyError):
    """Inequivalent minimal prism decompositions exist."""


class NoFreeQuad(HakenPolyError):
    """A leaf prism has no free quadrilateral with all-right boundary edges."""


class DomainError(HakenPolyError, ValueError):
    pass


class ScaleExceeded(HakenPolyError, ValueError):
    pass


class FlagConflict(HakenPolyError, ValueError):
    pass


class ParseError(HakenPolyError, ValueError):
    pass
