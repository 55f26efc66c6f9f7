"""Exception hierarchy shared by all geometry modules."""

from __future__ import annotations


class GeometryError(ValueError):
    """Base class for violated preconditions and degenerate configurations."""


class DegenerateSpan(GeometryError):
    pass


class DegenerateMeet(GeometryError):
    pass


class NotCollinear(GeometryError):
    pass


class TooManyCoincident(GeometryError):
    pass


class InvalidPerspectivity(GeometryError):
    pass


class CoincidentPoints(GeometryError):
    pass


class LineInPlane(GeometryError):
    pass


class PointOnLine(GeometryError):
    pass


class PointNotOnLine(GeometryError):
    pass


class NotPairwiseSkew(GeometryError):
    pass


class LinesDoNotMeet(GeometryError):
    pass


class DegenerateTransversal(GeometryError):
    pass


class RankDeficient(GeometryError):
    pass


class PointNotOnQuadric(GeometryError):
    pass


class GeneratorInvalid(GeometryError):
    pass


class PointNotOnConic(GeometryError):
    pass


class LineNotInPlane(GeometryError):
    pass


class LineInConic(GeometryError):
    """The probing line is a component of a degenerate conic."""


class IrrationalBranch(GeometryError):
    pass


class SingularConicPoint(GeometryError):
    """Tangent requested at the double point of a line-pair conic."""


class PreconditionViolated(GeometryError):
    def __init__(self, clause: str):
        super().__init__(clause)
        self.clause = clause


class WindowTooSmall(GeometryError):
    pass


class WindowExhausted(GeometryError):
    pass


class OutOfWindow(GeometryError):
    pass


class NotConjugate(GeometryError):
    def __init__(self, face, msg: str = ""):
        super().__init__(msg or f"face {face} is not planar")
        self.face = face


class SingularFace(GeometryError):
    def __init__(self, face, msg: str = ""):
        super().__init__(msg or f"face {face} is singular")
        self.face = face


class NotAnAnet(GeometryError):
    pass


class UndefinedEntry(GeometryError):
    pass


class NotWCongruence(GeometryError):
    pass


class BadSeedParity(GeometryError):
    pass


class SeedOffLine(GeometryError):
    pass


class PlaneOffLine(GeometryError):
    pass


class DegenerateProjection(GeometryError):
    def __init__(self, vertex, msg: str = ""):
        super().__init__(msg or f"degenerate projection at vertex {vertex}")
        self.vertex = vertex


class NotOnCommonCongruence(GeometryError):
    pass


class PropertyViolation(GeometryError):
    """An identity that must hold by theory failed on concrete data."""


class CoincidentOpposites(GeometryError):
    def __init__(self, vertex):
        super().__init__(f"opposite points coincide at vertex {vertex}")
        self.vertex = vertex


class DegenerateChoice(GeometryError):
    def __init__(self, face, slot, msg: str = ""):
        super().__init__(msg or f"degenerate choice at face {face}, slot {slot}")
        self.face = face
        self.slot = slot


class SuitabilityViolated(GeometryError):
    def __init__(self, bullet: int, index, msg: str = ""):
        super().__init__(msg or f"suitability condition {bullet} violated at {index}")
        self.bullet = bullet
        self.index = index


class F11OffQuadric(GeometryError):
    pass


class DegenerateTransport(GeometryError):
    def __init__(self, vertex, msg: str = ""):
        super().__init__(msg or f"transport degenerates at vertex {vertex}")
        self.vertex = vertex


class EdgeConditionViolated(GeometryError):
    def __init__(self, i: int, msg: str = ""):
        super().__init__(msg or f"edge {i}: lines do not meet in a single point")
        self.i = i


class NotARegulus(GeometryError):
    pass


class PlaneIncident(GeometryError):
    pass


class DegenerateQuadric(GeometryError):
    pass


class IdealPoint(GeometryError):
    def __init__(self, vertex, chart: int):
        super().__init__(f"point {vertex} is ideal in chart {chart}")
        self.vertex = vertex
        self.chart = chart
