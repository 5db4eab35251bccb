"""Exception hierarchy.

Every input or construction problem raises a subclass of ``TilekitError``
(itself a ``ValueError``).  Verification *failures* are never exceptions;
they come back as reports with ``passed == False``.
"""


class TilekitError(ValueError):
    pass


class TooFewVertices(TilekitError):
    pass


class NotCentered(TilekitError):
    pass


class NotStrictlyConvex(TilekitError):
    pass


class DegenerateSegment(TilekitError):
    pass


class SingularMap(TilekitError):
    pass


class NonCenteringTranslation(TilekitError):
    pass


class DegenerateLattice(TilekitError):
    pass


class EmptyRegion(TilekitError):
    pass


class EmptyWindow(TilekitError):
    pass


class NotAVertexOfTiling(TilekitError):
    pass


class WheelMatchingFailed(TilekitError):
    """The boundary angles at a vertex cannot be chained into closed wheels."""


class WindingDecompositionViolation(TilekitError):
    """Winding total at a vertex is not kappa*(m-1)/2 + ell/2 with integer kappa >= 1."""


class ParameterOutOfRange(TilekitError):
    pass


class DegenerateEdges(TilekitError):
    pass


class VertexNotInW(TilekitError):
    pass


class ChainDoesNotClose(TilekitError):
    pass


class WrongGonality(TilekitError):
    pass


class SelfCheckFailed(TilekitError):
    """A family generator produced a polygon/lattice pair its own oracle rejects."""
