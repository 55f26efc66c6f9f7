"""Line congruences: W-test, asymptotic pairs on a W-congruence, A-net pairs,
cross-ratio audit and the Möbius tetrahedra check.
"""

from __future__ import annotations

from collections import deque
from typing import Optional, Sequence

from .errors import (
    BadSeedParity,
    GeometryError,
    LineInPlane,
    NotOnCommonCongruence,
    NotWCongruence,
    OutOfWindow,
    PlaneOffLine,
    PointOnLine,
    PropertyViolation,
    SeedOffLine,
    UndefinedEntry,
    DegenerateProjection,
)
from .nets import DiscreteNet, Index, LineCongruence, Report
from .plucker import (
    in_regulus,
    join_line_point,
    lines_meet,
    meet_line_plane,
)
from .projective_core import HomPlane, HomPoint, ProjParam, coplanar, cross_ratio


def parity(i: int, j: int) -> str:
    return f"{'even' if i % 2 == 0 else 'odd'}-{'even' if j % 2 == 0 else 'odd'}"


def is_black(i: int, j: int) -> bool:
    return (i - j) % 2 == 0


def is_w_congruence(A: LineCongruence) -> Report:
    rep = Report()
    for i, j in A.window.faces():
        lines = [A[(i, j)], A[(i + 1, j)], A[(i + 1, j + 1)], A[(i, j + 1)]]
        if any(ln is None for ln in lines):
            raise UndefinedEntry(f"undefined line on face {(i, j)}")
        rep.checked += 1
        if not in_regulus(*lines):
            rep.add("not-regulus", (i, j))
    return rep


def _project(A: LineCongruence, center: Index, src: Index, dst: Index, x: HomPoint,
             vertex: Index) -> HomPoint:
    C, S, D = A[center], A[src], A[dst]
    if lines_meet(C, S) or lines_meet(C, D) or lines_meet(S, D):
        raise DegenerateProjection(vertex, f"lines at {center}, {src}, {dst} are not pairwise skew")
    try:
        return meet_line_plane(D, join_line_point(C, x))
    except (LineInPlane, PointOnLine):
        raise DegenerateProjection(vertex) from None


def _require_w(A: LineCongruence) -> None:
    if not A.defined_everywhere():
        raise UndefinedEntry("congruence has undefined entries")
    rep = is_w_congruence(A)
    if not rep:
        raise NotWCongruence(f"faces {rep.indices} are not reguli")


_STEPS = ((2, 0), (-2, 0), (0, 2), (0, -2))


def _propagate_class(A: LineCongruence, start: Index, point: HomPoint, f: dict,
                     stats: Optional[dict]) -> None:
    """Fill f on the parity class of ``start`` by two-step projections."""
    w = A.window
    f[start] = point
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for di, dj in _STEPS:
            v = (u[0] + di, u[1] + dj)
            if v not in w:
                continue
            center = (u[0] + di // 2, u[1] + dj // 2)
            img = _project(A, center, u, v, f[u], v)
            if v in f:
                if stats is not None:
                    stats["loops"] = stats.get("loops", 0) + 1
                if img != f[v]:
                    raise PropertyViolation(f"two routes to {v} disagree")
            else:
                f[v] = img
                queue.append(v)


def _opposite_from(A: LineCongruence, f: dict, v: Index, stats: Optional[dict]) -> HomPoint:
    """g at v as projection of a diagonal neighbour of f; all routes compared."""
    w = A.window
    found = None
    for di in (-1, 1):
        for dj in (-1, 1):
            u = (v[0] + di, v[1] + dj)
            if u not in w:
                continue
            for center in ((v[0], v[1] + dj), (v[0] + di, v[1])):
                img = _project(A, center, u, v, f[u], v)
                if found is None:
                    found = img
                elif img != found:
                    raise PropertyViolation(f"diagonal projections to {v} disagree")
                elif stats is not None:
                    stats["diagonals"] = stats.get("diagonals", 0) + 1
    if found is None:
        raise DegenerateProjection(v, f"no diagonal neighbour of {v}")
    return found


def build_asymptotic_pair(A: LineCongruence, seeds: Sequence[tuple[Index, HomPoint]],
                          check: bool = True, stats: Optional[dict] = None
                          ) -> tuple[DiscreteNet, DiscreteNet]:
    """Asymptotically related nets f, g on the W-congruence A.

    ``seeds`` gives f at four vertices of pairwise different parity.  Every
    vertex reached twice is compared, so each closed loop of the propagation
    certifies route independence.
    """
    if check:
        _require_w(A)
    seeds = list(seeds)
    classes = [parity(*ij) for ij, _ in seeds]
    if len(seeds) != 4 or len(set(classes)) != 4:
        raise BadSeedParity(
            "seeds must be four vertices of pairwise different parity "
            "(even-even, even-odd, odd-even, odd-odd)"
        )
    w = A.window
    if w.shape[0] < 2 or w.shape[1] < 2:
        raise GeometryError("window must be at least 2x2")
    f: dict = {}
    for ij, pt in seeds:
        if ij not in w:
            raise OutOfWindow(f"seed vertex {ij} outside {w}")
        if not A[ij].contains(pt):
            raise SeedOffLine(f"seed point at {ij} is not on its line")
        _propagate_class(A, ij, pt, f, stats)
    g = {v: _opposite_from(A, f, v, stats) for v in w}
    return DiscreteNet(w, f), DiscreteNet(w, g)


def _anet_from_planes(A: LineCongruence, plane_vertex: Index, plane: HomPlane) -> tuple[dict, dict]:
    """Tangent planes on the colour class of ``plane_vertex`` and points on the other."""
    w = A.window
    if not A[plane_vertex].lies_in(plane):
        raise PlaneOffLine(f"plane does not contain the line at {plane_vertex}")
    planes = {plane_vertex: plane}
    points: dict = {}
    queue = deque([plane_vertex])
    while queue:
        u = queue.popleft()
        for di, dj in ((1, 0), (-1, 0), (0, 1), (0, -1)):
            v = (u[0] + di, u[1] + dj)
            if v not in w:
                continue
            if u in planes:
                try:
                    val = meet_line_plane(A[v], planes[u])
                except LineInPlane:
                    raise DegenerateProjection(v, f"line at {v} lies in the plane at {u}") from None
                store = points
            else:
                try:
                    val = join_line_point(A[v], points[u])
                except PointOnLine:
                    raise DegenerateProjection(v, f"point at {u} lies on the line at {v}") from None
                store = planes
            if v in store:
                if store[v] != val:
                    raise PropertyViolation(f"inconsistent A-net data at {v}")
            else:
                store[v] = val
                queue.append(v)
    return planes, points


def build_anet(A: LineCongruence, black_plane: tuple[Index, HomPlane],
               white_plane: tuple[Index, HomPlane]) -> DiscreteNet:
    """A-net inscribed in A whose tangent planes contain the congruence lines."""
    (bv, bp), (wv, wp) = black_plane, white_plane
    if not is_black(*bv) or is_black(*wv):
        raise BadSeedParity("need one plane on a black and one on a white vertex")
    _, pts_white = _anet_from_planes(A, bv, bp)
    _, pts_black = _anet_from_planes(A, wv, wp)
    pts = {**pts_white, **pts_black}
    return DiscreteNet(A.window, pts)


def build_anet_pair(A: LineCongruence, black_plane: tuple[Index, HomPlane],
                    white_plane: tuple[Index, HomPlane],
                    partner: Optional[tuple[tuple[Index, HomPlane], tuple[Index, HomPlane]]] = None,
                    check: bool = True) -> tuple[DiscreteNet, DiscreteNet]:
    """A pair of A-nets on A related by a W-transform.

    ``f`` is determined by one tangent plane on a black and one on a white
    vertex.  The partner ``g`` needs its own two planes; by default they are
    spanned by the congruence line at the same vertices and the point of ``f``
    diagonally across, which is generically different from f's planes.
    """
    if check:
        _require_w(A)
    f = build_anet(A, black_plane, white_plane)
    if partner is None:
        partner = tuple(_default_partner_plane(A, f, v) for v in (black_plane[0], white_plane[0]))
    g = build_anet(A, partner[0], partner[1])
    return f, g


def _default_partner_plane(A: LineCongruence, f: DiscreteNet, v: Index) -> tuple[Index, HomPlane]:
    for di, dj in ((1, 1), (-1, -1), (1, -1), (-1, 1)):
        u = (v[0] + di, v[1] + dj)
        if u in A.window:
            return v, join_line_point(A[v], f[u])
    raise GeometryError("window too small for a partner plane")


def crossratio_audit(f: DiscreteNet, g: DiscreteNet, f2: DiscreteNet, g2: DiscreteNet,
                     A: LineCongruence) -> tuple[Optional[ProjParam], Optional[ProjParam], Report]:
    """Cross-ratio CR(f, f2; g, g2) per vertex, grouped by colour class."""
    w = A.window
    for net in (f, g, f2, g2):
        w = w.intersect(net.window)
        if w is None:
            raise NotOnCommonCongruence("nets and congruence share no vertices")
    values: dict[str, Optional[ProjParam]] = {"black": None, "white": None}
    rep = Report()
    for ij in w:
        line = A[ij]
        if line is None or not all(line.contains(n[ij]) for n in (f, g, f2, g2)):
            raise NotOnCommonCongruence(f"points at {ij} are not on the congruence line")
        cr = cross_ratio(f[ij], f2[ij], g[ij], g2[ij])
        cls = "black" if is_black(*ij) else "white"
        rep.checked += 1
        if values[cls] is None:
            values[cls] = cr
        elif cr != values[cls]:
            rep.add(f"{cls}-deviation", ij, f"{cr} != {values[cls]}")
    return values["black"], values["white"], rep


def moebius_conditions(a: Sequence[HomPoint], b: Sequence[HomPoint]) -> tuple[bool, ...]:
    """The eight incidences a_i in span(b_j, j != i) and b_i in span(a_j, j != i)."""
    out = []
    for x, y in ((a, b), (b, a)):
        for i in range(4):
            others = [y[j] for j in range(4) if j != i]
            out.append(coplanar(x[i], *others))
    return tuple(out)


def moebius_check(f: DiscreteNet, g: DiscreteNet, face: Index) -> tuple[bool, ...]:
    i, j = face
    a = (f[(i, j)], f[(i + 1, j)], g[(i, j + 1)], g[(i + 1, j + 1)])
    b = (f[(i + 1, j + 1)], f[(i, j + 1)], g[(i + 1, j)], g[(i, j)])
    return moebius_conditions(a, b)
