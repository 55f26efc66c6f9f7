"""Discrete nets on finite integer windows and their Laplace transforms.

Index convention: ``L1 f(i, j) = (f[i,j] v f[i+1,j]) ^ (f[i,j+1] v f[i+1,j+1])``
and ``L2 f(i, j) = (f[i,j] v f[i,j+1]) ^ (f[i+1,j] v f[i+1,j+1])``.  Each
transform shrinks the window by one in both directions:
``[i0, i1] x [j0, j1] -> [i0, i1-1] x [j0, j1-1]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator, Mapping, Optional

from .errors import (
    CoincidentPoints,
    DegenerateSpan,
    GeometryError,
    LinesDoNotMeet,
    NotAnAnet,
    NotConjugate,
    OutOfWindow,
    SingularFace,
    WindowExhausted,
    WindowTooSmall,
)
from .plucker import PluckerLine, line_from_planes, line_from_points, meet_lines
from .projective_core import HomPlane, HomPoint, collinear, coplanar, join_plane

Index = tuple[int, int]


@dataclass(frozen=True)
class NetWindow:
    """Closed index rectangle ``[i0, i1] x [j0, j1]``."""

    i0: int
    i1: int
    j0: int
    j1: int

    def __post_init__(self):
        if self.i0 > self.i1 or self.j0 > self.j1:
            raise GeometryError(f"empty window {self}")

    def __contains__(self, ij) -> bool:
        i, j = ij
        return self.i0 <= i <= self.i1 and self.j0 <= j <= self.j1

    def __iter__(self) -> Iterator[Index]:
        # row-major: j outer, i inner
        for j in range(self.j0, self.j1 + 1):
            for i in range(self.i0, self.i1 + 1):
                yield (i, j)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.i1 - self.i0 + 1, self.j1 - self.j0 + 1)

    def faces(self) -> Iterator[Index]:
        for j in range(self.j0, self.j1):
            for i in range(self.i0, self.i1):
                yield (i, j)

    def shrink(self) -> "NetWindow":
        if self.i1 == self.i0 or self.j1 == self.j0:
            raise WindowExhausted(f"window {self} cannot shrink")
        return NetWindow(self.i0, self.i1 - 1, self.j0, self.j1 - 1)

    def interior(self) -> Optional["NetWindow"]:
        if self.i1 - self.i0 < 2 or self.j1 - self.j0 < 2:
            return None
        return NetWindow(self.i0 + 1, self.i1 - 1, self.j0 + 1, self.j1 - 1)

    def shifted(self, di: int, dj: int) -> "NetWindow":
        return NetWindow(self.i0 + di, self.i1 + di, self.j0 + dj, self.j1 + dj)

    def intersect(self, other: "NetWindow") -> Optional["NetWindow"]:
        i0, i1 = max(self.i0, other.i0), min(self.i1, other.i1)
        j0, j1 = max(self.j0, other.j0), min(self.j1, other.j1)
        if i0 > i1 or j0 > j1:
            return None
        return NetWindow(i0, i1, j0, j1)


class DiscreteNet:
    """Total map from a window to points of P^3."""

    __slots__ = ("window", "_points")

    def __init__(self, window: NetWindow, points: Mapping[Index, HomPoint]):
        pts = {}
        for ij in window:
            if ij not in points or points[ij] is None:
                raise GeometryError(f"net is missing vertex {ij}")
            pts[ij] = points[ij]
        object.__setattr__(self, "window", window)
        object.__setattr__(self, "_points", pts)

    def __setattr__(self, name, value):
        raise AttributeError("immutable")

    @classmethod
    def from_function(cls, window: NetWindow, fn: Callable[[int, int], HomPoint]) -> "DiscreteNet":
        return cls(window, {(i, j): fn(i, j) for i, j in window})

    def __getitem__(self, ij: Index) -> HomPoint:
        try:
            return self._points[ij]
        except KeyError:
            raise OutOfWindow(f"vertex {ij} outside {self.window}") from None

    def __contains__(self, ij) -> bool:
        return ij in self.window

    def items(self):
        return ((ij, self._points[ij]) for ij in self.window)

    def __eq__(self, other):
        if not isinstance(other, DiscreteNet):
            return NotImplemented
        return self.window == other.window and all(self[ij] == other[ij] for ij in self.window)

    def __repr__(self):
        return f"DiscreteNet({self.window})"

    def restrict(self, window: NetWindow) -> "DiscreteNet":
        return DiscreteNet(window, {ij: self[ij] for ij in window})

    def shift(self, di: int, dj: int) -> "DiscreteNet":
        """Net g with g(i, j) = self(i + di, j + dj)."""
        w = self.window.shifted(-di, -dj)
        return DiscreteNet(w, {(i, j): self[(i + di, j + dj)] for i, j in w})

    def replace(self, ij: Index, point: HomPoint) -> "DiscreteNet":
        pts = dict(self._points)
        pts[ij] = point
        return DiscreteNet(self.window, pts)


class LineCongruence:
    """Map from a window to lines; entries may be ``None`` (undefined)."""

    __slots__ = ("window", "_lines")

    def __init__(self, window: NetWindow, lines: Mapping[Index, Optional[PluckerLine]]):
        object.__setattr__(self, "window", window)
        object.__setattr__(self, "_lines", {ij: lines.get(ij) for ij in window})

    def __setattr__(self, name, value):
        raise AttributeError("immutable")

    def __getitem__(self, ij: Index) -> Optional[PluckerLine]:
        if ij not in self.window:
            raise OutOfWindow(f"vertex {ij} outside {self.window}")
        return self._lines[ij]

    def __contains__(self, ij) -> bool:
        return ij in self.window

    def items(self):
        return ((ij, self._lines[ij]) for ij in self.window)

    def __eq__(self, other):
        if not isinstance(other, LineCongruence):
            return NotImplemented
        return self.window == other.window and all(self[ij] == other[ij] for ij in self.window)

    def __repr__(self):
        return f"LineCongruence({self.window})"

    def restrict(self, window: NetWindow) -> "LineCongruence":
        return LineCongruence(window, {ij: self[ij] for ij in window})

    def defined_everywhere(self) -> bool:
        return all(v is not None for v in self._lines.values())


@dataclass(frozen=True)
class Failure:
    kind: str
    index: tuple
    detail: str = ""


@dataclass
class Report:
    """Outcome of a verification; truthy iff nothing failed."""

    failures: list[Failure] = field(default_factory=list)
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok

    def add(self, kind: str, index: tuple, detail: str = "") -> None:
        self.failures.append(Failure(kind, tuple(index), detail))

    def extend(self, other: "Report") -> None:
        self.failures.extend(other.failures)
        self.checked += other.checked

    @property
    def indices(self) -> list[tuple]:
        return [f.index for f in self.failures]


# --------------------------------------------------------------------------
# predicates

def _face_points(f: DiscreteNet, i: int, j: int):
    return f[(i, j)], f[(i + 1, j)], f[(i + 1, j + 1)], f[(i, j + 1)]


def is_conjugate(f: DiscreteNet) -> Report:
    w = f.window
    if w.i1 == w.i0 or w.j1 == w.j0:
        raise WindowTooSmall(f"conjugacy needs a 2x2 window, got {w}")
    rep = Report()
    for i, j in w.faces():
        rep.checked += 1
        if not coplanar(*_face_points(f, i, j)):
            rep.add("non-planar-face", (i, j))
    return rep


def is_regular(f: DiscreteNet) -> Report:
    w = f.window
    rep = Report()
    for i, j in w:
        if (i - 1, j) in w and (i + 1, j) in w:
            rep.checked += 1
            if collinear(f[(i - 1, j)], f[(i, j)], f[(i + 1, j)]):
                rep.add("collinear-osculating-1", (i, j))
        if (i, j - 1) in w and (i, j + 1) in w:
            rep.checked += 1
            if collinear(f[(i, j - 1)], f[(i, j)], f[(i, j + 1)]):
                rep.add("collinear-osculating-2", (i, j))
    for i, j in w.faces():
        rep.checked += 1
        if collinear(*_face_points(f, i, j)):
            rep.add("collinear-face", (i, j))
    return rep


def osculating_plane(f: DiscreteNet, direction: int, i: int, j: int) -> HomPlane:
    if direction == 1:
        idx = [(i - 1, j), (i, j), (i + 1, j)]
    elif direction == 2:
        idx = [(i, j - 1), (i, j), (i, j + 1)]
    else:
        raise ValueError("direction must be 1 or 2")
    for ij in idx:
        if ij not in f.window:
            raise OutOfWindow(f"osculating plane at {(i, j)} needs {ij}")
    return join_plane(*(f[ij] for ij in idx))


# --------------------------------------------------------------------------
# Laplace transforms

def laplace_point(f, direction: int, i: int, j: int) -> HomPoint:
    """One point of the Laplace transform; ``f`` may be any vertex mapping."""
    a, b, c, d = f[(i, j)], f[(i + 1, j)], f[(i + 1, j + 1)], f[(i, j + 1)]
    if direction == 1:
        p1, p2, q1, q2 = a, b, d, c
    elif direction == 2:
        p1, p2, q1, q2 = a, d, b, c
    else:
        raise ValueError("direction must be 1 or 2")
    try:
        l1 = line_from_points(p1, p2)
        l2 = line_from_points(q1, q2)
    except CoincidentPoints:
        raise SingularFace((i, j), f"edge points coincide at face {(i, j)}") from None
    if l1 == l2:
        raise SingularFace((i, j), f"opposite edges coincide at face {(i, j)}")
    try:
        return meet_lines(l1, l2)
    except LinesDoNotMeet:
        raise NotConjugate((i, j)) from None


def laplace_partial(points: Mapping[Index, Optional[HomPoint]], window: NetWindow, direction: int):
    """Laplace transform tolerating holes; returns (points, failures)."""
    out: dict[Index, Optional[HomPoint]] = {}
    failures: list[Failure] = []
    for i, j in window.faces():
        corner = [(i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)]
        if any(points.get(ij) is None for ij in corner):
            out[(i, j)] = None
            continue
        try:
            out[(i, j)] = laplace_point(points, direction, i, j)
        except NotConjugate:
            out[(i, j)] = None
            failures.append(Failure("non-planar-face", (i, j)))
        except SingularFace:
            out[(i, j)] = None
            failures.append(Failure("singular-face", (i, j)))
    return out, failures


def laplace(f: DiscreteNet, direction: int) -> DiscreteNet:
    w = f.window.shrink()
    return DiscreteNet(w, {(i, j): laplace_point(f, direction, i, j) for i, j in w})


def laplace_sequence(f: DiscreteNet, direction: int, steps: int) -> DiscreteNet:
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    ni, nj = f.window.shape
    if steps >= min(ni, nj):
        raise WindowExhausted(f"window {f.window} cannot survive {steps} transforms")
    out = f
    for _ in range(steps):
        out = laplace(out, direction)
    return out


def is_period_four(f: DiscreteNet) -> bool:
    ni, nj = f.window.shape
    if ni < 3 or nj < 3:
        raise WindowTooSmall("period-four test needs a 3x3 window")
    # an undefined double transform cannot agree with the other one
    try:
        return laplace_sequence(f, 1, 2) == laplace_sequence(f, 2, 2)
    except (SingularFace, NotConjugate):
        return False


# --------------------------------------------------------------------------
# asymptotic geometry

def _interior(f: DiscreteNet) -> NetWindow:
    inner = f.window.interior()
    if inner is None:
        raise WindowTooSmall(f"window {f.window} has no interior vertices")
    return inner


def tangent_plane(f: DiscreteNet, i: int, j: int) -> HomPlane:
    p1 = osculating_plane(f, 1, i, j)
    p2 = osculating_plane(f, 2, i, j)
    if p1 != p2:
        raise NotAnAnet(f"osculating planes differ at {(i, j)}")
    return p1


def is_anet(f: DiscreteNet) -> bool:
    return all(osculating_plane(f, 1, i, j) == osculating_plane(f, 2, i, j)
               for i, j in _interior(f))


def axis_congruence(f: DiscreteNet) -> LineCongruence:
    """Lines O1 f ^ O2 f on interior vertices; None where the planes agree."""
    inner = _interior(f)
    lines: dict[Index, Optional[PluckerLine]] = {}
    for i, j in inner:
        p1 = osculating_plane(f, 1, i, j)
        p2 = osculating_plane(f, 2, i, j)
        lines[(i, j)] = None if p1 == p2 else line_from_planes(p1, p2)
    return LineCongruence(inner, lines)


def asymptotically_related(f: DiscreteNet, g: DiscreteNet) -> bool:
    common = f.window.intersect(g.window)
    inner = common.interior() if common else None
    if inner is None:
        raise WindowTooSmall("nets share no interior vertex")
    try:
        for i, j in inner:
            if osculating_plane(f, 1, i, j) != osculating_plane(g, 2, i, j):
                return False
            if osculating_plane(f, 2, i, j) != osculating_plane(g, 1, i, j):
                return False
    except DegenerateSpan:
        return False
    return True
