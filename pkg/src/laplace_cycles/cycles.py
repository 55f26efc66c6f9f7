"""Laplace cycles of period four: verification and the two constructions.

All four nets of a cycle share one index grid.  With ``h = L1 f`` and
``k = L2 f`` the opposite net satisfies ``g(i, j) = L1 L1 f(i-1, j-1) =
L2 L2 f(i-1, j-1)``; the remaining Laplace relations follow cyclically
(``L1 g = k``, ``L2 g = h``, ``L1 h(i, j) = g(i+1, j+1)``, ...).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

from .errors import (
    CoincidentOpposites,
    CoincidentPoints,
    DegenerateChoice,
    DegenerateQuadric,
    DegenerateSpan,
    DegenerateTransport,
    EdgeConditionViolated,
    F11OffQuadric,
    GeometryError,
    InvalidPerspectivity,
    LinesDoNotMeet,
    NotARegulus,
    NotPairwiseSkew,
    PlaneIncident,
    PropertyViolation,
    RankDeficient,
    SuitabilityViolated,
)
from .nets import (
    DiscreteNet,
    Failure,
    Index,
    LineCongruence,
    NetWindow,
    Report,
    laplace,
    laplace_partial,
    osculating_plane,
)
from .plucker import (
    PluckerLine,
    conic_section,
    in_regulus,
    join_line_point,
    join_lines,
    line_from_planes,
    line_from_points,
    lines_meet,
    meet_line_plane,
    meet_lines,
    project_between_conics,
    quadric_through_three_lines,
    ruling_through_point,
    second_root,
    transversal_through_point,
)
from .projective_core import (
    HomPlane,
    HomPoint,
    ProjParam,
    collinear,
    coplanar,
    join_plane,
    nullspace,
    pencil_point,
    perspective_collineation,
    point_basis_of_plane,
    rank,
)

NETS = ("f", "h", "g", "k")


@dataclass(frozen=True)
class Alignment:
    """``target(i, j) = (L_ops source)(i + shift[0], j + shift[1])``."""

    source: str
    ops: tuple[int, ...]
    shift: tuple[int, int]


DEFAULT_ALIGNMENTS = {
    "h": Alignment("f", (1,), (0, 0)),
    "k": Alignment("f", (2,), (0, 0)),
    "g": Alignment("f", (1, 1), (-1, -1)),
}

# relations implied by the default alignments (target, alignment)
_CLOSURE = (
    ("g", Alignment("f", (2, 2), (-1, -1))),
    ("k", Alignment("g", (1,), (0, 0))),
    ("h", Alignment("g", (2,), (0, 0))),
    ("g", Alignment("h", (1,), (-1, -1))),
    ("g", Alignment("k", (2,), (-1, -1))),
    ("f", Alignment("k", (1,), (-1, -1))),
    ("f", Alignment("h", (2,), (-1, -1))),
)


@dataclass(frozen=True)
class LaplaceCycle:
    f: DiscreteNet
    h: DiscreteNet
    g: DiscreteNet
    k: DiscreteNet
    alignments: Mapping[str, Alignment] = field(default_factory=lambda: dict(DEFAULT_ALIGNMENTS))

    def net(self, name: str) -> DiscreteNet:
        return getattr(self, name)

    def replace(self, name: str, net: DiscreteNet) -> "LaplaceCycle":
        parts = {n: self.net(n) for n in NETS}
        parts[name] = net
        return LaplaceCycle(alignments=self.alignments, **parts)


# --------------------------------------------------------------------------
# verification

def _chain(net: DiscreteNet, ops: Sequence[int]):
    pts: dict = dict(net.items())
    window = net.window
    failures: list[Failure] = []
    for step, d in enumerate(ops):
        if window.i0 == window.i1 or window.j0 == window.j1:
            return {}, None, failures
        pts, fl = laplace_partial(pts, window, d)
        if step == 0:
            failures = fl
        window = window.shrink()
    return pts, window, failures


def _check_relation(c: LaplaceCycle, target: str, al: Alignment, rep: Report) -> None:
    label = f"{target}=L{''.join(map(str, al.ops))}{al.source}"
    pts, window, fl = _chain(c.net(al.source), al.ops)
    for fail in fl:
        rep.add(f"{al.source}:{fail.kind}", fail.index)
    if window is None:
        return
    tgt = c.net(target)
    common = tgt.window.intersect(window.shifted(-al.shift[0], -al.shift[1]))
    if common is None:
        return
    for i, j in common:
        rep.checked += 1
        val = pts.get((i + al.shift[0], j + al.shift[1]))
        if val is None:
            rep.add(label, (i, j), "transform undefined")
        elif val != tgt[(i, j)]:
            rep.add(label, (i, j))


def _asymptotic_failures(f: DiscreteNet, g: DiscreteNet, label: str, rep: Report) -> None:
    common = f.window.intersect(g.window)
    inner = common.interior() if common else None
    if inner is None:
        return
    for i, j in inner:
        rep.checked += 1
        try:
            f1, f2 = osculating_plane(f, 1, i, j), osculating_plane(f, 2, i, j)
            g1, g2 = osculating_plane(g, 1, i, j), osculating_plane(g, 2, i, j)
        except DegenerateSpan:
            rep.add(f"{label}:singular", (i, j))
            continue
        if f1 != g2 or f2 != g1:
            rep.add(f"{label}:asymptotic", (i, j))
        elif f1 != f2:
            axis = line_from_planes(f1, f2)
            if not (axis.contains(f[(i, j)]) and axis.contains(g[(i, j)])):
                rep.add(f"{label}:axis", (i, j))


def verify_cycle(c: LaplaceCycle) -> Report:
    """Check every Laplace identity and the asymptotic relation of opposite nets."""
    rep = Report()
    for target, al in c.alignments.items():
        _check_relation(c, target, al, rep)
    f = c.f
    p1, w1, _ = _chain(f, (1, 1))
    p2, w2, _ = _chain(f, (2, 2))
    if w1 is not None:
        for ij in w1:
            rep.checked += 1
            if p1.get(ij) is None or p2.get(ij) is None or p1[ij] != p2[ij]:
                rep.add("period-four", ij)
    if dict(c.alignments) == DEFAULT_ALIGNMENTS:
        for target, al in _CLOSURE:
            _check_relation(c, target, al, rep)
    _asymptotic_failures(c.f, c.g, "fg", rep)
    _asymptotic_failures(c.h, c.k, "hk", rep)
    # deduplicate while keeping order
    seen = set()
    uniq = []
    for fl in rep.failures:
        if fl not in seen:
            seen.add(fl)
            uniq.append(fl)
    rep.failures = uniq
    return rep


def diagonal_congruences(c: LaplaceCycle, check: bool = True) -> tuple[LineCongruence, LineCongruence]:
    """K = f v g and L = h v k on the common windows."""
    out = []
    for a, b in (("f", "g"), ("h", "k")):
        na, nb = c.net(a), c.net(b)
        w = na.window.intersect(nb.window)
        lines = {}
        for ij in w:
            if na[ij] == nb[ij]:
                raise CoincidentOpposites(ij)
            lines[ij] = line_from_points(na[ij], nb[ij])
        cong = LineCongruence(w, lines)
        if check:
            inner = w.interior()
            for ij in (inner or []):
                p1 = osculating_plane(na, 1, *ij)
                p2 = osculating_plane(na, 2, *ij)
                if p1 == p2 or line_from_planes(p1, p2) != cong[ij]:
                    raise PropertyViolation(f"{a} v {b} is not the axis of {a} at {ij}")
        out.append(cong)
    return out[0], out[1]


# --------------------------------------------------------------------------
# construction 1: face by face

@dataclass(frozen=True)
class CycleSeed:
    """Base points at the window corner plus one pencil parameter per free vertex.

    ``params`` is keyed by ``(net, i, j)`` for every vertex of the first row
    and first column except the corner.
    """

    f0: HomPoint
    g0: HomPoint
    h0: HomPoint
    k0: HomPoint
    params: Mapping[tuple[str, int, int], ProjParam]

    def param(self, net: str, i: int, j: int) -> ProjParam:
        try:
            return self.params[(net, i, j)]
        except KeyError:
            raise GeometryError(f"no parameter for {net} at {(i, j)}") from None


def free_slots(window: NetWindow) -> list[tuple[str, int, int]]:
    """Keys of all free parameters needed for ``window``, in construction order."""
    keys = []
    for i in range(window.i0 + 1, window.i1 + 1):
        keys.extend((n, i, window.j0) for n in ("f", "g", "h", "k"))
    for j in range(window.j0 + 1, window.j1 + 1):
        keys.extend((n, window.i0, j) for n in ("f", "g", "h", "k"))
    return keys


def _meet(p1, p2, q1, q2, face, slot) -> HomPoint:
    try:
        l1 = line_from_points(p1, p2)
        l2 = line_from_points(q1, q2)
        if l1 == l2:
            raise DegenerateChoice(face, slot, f"coincident lines for {slot} at face {face}")
        return meet_lines(l1, l2)
    except (CoincidentPoints, LinesDoNotMeet) as exc:
        raise DegenerateChoice(face, slot, f"{slot} at face {face}: {exc}") from None


def _free_point(u: HomPoint, v: HomPoint, lam, face, slot) -> HomPoint:
    if u == v:
        raise DegenerateChoice(face, slot, f"pencil for {slot} is degenerate")
    x = pencil_point(u, v, lam)
    if x == u or x == v:
        raise DegenerateChoice(face, slot, f"parameter for {slot} hits a pencil base point")
    return x


def construct_cycle_pointwise(seed: CycleSeed, window: NetWindow) -> LaplaceCycle:
    """Build all four nets of a period-four cycle on ``window``.

    The first row and column carry the free choices; every other vertex is
    determined by intersecting two coplanar lines.
    """
    if window.shape[0] < 2 or window.shape[1] < 2:
        raise GeometryError("cycle construction needs at least a 2x2 window")
    i0, j0 = window.i0, window.j0
    base = (seed.f0, seed.g0, seed.h0, seed.k0)
    for a in range(4):
        for b in range(a + 1, 4):
            for c in range(b + 1, 4):
                if base[a] == base[b] or collinear(base[a], base[b], base[c]):
                    raise DegenerateChoice((i0, j0), "base", "base points not in general position")
    P = {n: {} for n in NETS}
    P["f"][(i0, j0)], P["g"][(i0, j0)] = seed.f0, seed.g0
    P["h"][(i0, j0)], P["k"][(i0, j0)] = seed.h0, seed.k0
    f, g, h, k = P["f"], P["g"], P["h"], P["k"]

    def free_row(i):
        prev, new = (i - 1, j0), (i, j0)
        face = (i - 1, j0)
        f[new] = _free_point(f[prev], h[prev], seed.param("f", *new), face, ("f",) + new)
        g[new] = _free_point(g[prev], k[prev], seed.param("g", *new), face, ("g",) + new)
        h[new] = _free_point(h[prev], g[new], seed.param("h", *new), face, ("h",) + new)
        k[new] = _free_point(k[prev], f[new], seed.param("k", *new), face, ("k",) + new)

    def free_col(j):
        prev, new = (i0, j - 1), (i0, j)
        face = (i0, j - 1)
        f[new] = _free_point(f[prev], k[prev], seed.param("f", *new), face, ("f",) + new)
        g[new] = _free_point(g[prev], h[prev], seed.param("g", *new), face, ("g",) + new)
        h[new] = _free_point(h[prev], f[new], seed.param("h", *new), face, ("h",) + new)
        k[new] = _free_point(k[prev], g[new], seed.param("k", *new), face, ("k",) + new)

    for i in range(i0 + 1, window.i1 + 1):
        free_row(i)
    for j in range(j0 + 1, window.j1 + 1):
        free_col(j)

    for i, j in window.faces():
        a, b, c, d = (i, j), (i + 1, j), (i, j + 1), (i + 1, j + 1)
        face = (i, j)
        f[d] = _meet(f[b], k[a], f[c], h[a], face, ("f",) + d)
        g[d] = _meet(g[b], h[a], g[c], k[a], face, ("g",) + d)
        h[d] = _meet(h[b], f[d], h[c], g[d], face, ("h",) + d)
        k[d] = _meet(k[b], g[d], k[c], f[d], face, ("k",) + d)

    nets = {n: DiscreteNet(window, P[n]) for n in NETS}
    return LaplaceCycle(**nets)


# --------------------------------------------------------------------------
# construction 2: from f and its axis congruence on the coordinate axes

@dataclass(frozen=True)
class AxesData:
    """Values of f and A along the row ``j = origin[1]`` and the column
    ``i = origin[0]`` of ``window``, plus f at ``origin + (1, 1)``."""

    window: NetWindow
    origin: Index
    f_row: Mapping[int, HomPoint]
    f_col: Mapping[int, HomPoint]
    A_row: Mapping[int, PluckerLine]
    A_col: Mapping[int, PluckerLine]
    f11: HomPoint

    def known(self) -> tuple[dict, dict]:
        oi, oj = self.origin
        f = {(i, oj): p for i, p in self.f_row.items()}
        f.update({(oi, j): p for j, p in self.f_col.items()})
        A = {(i, oj): ln for i, ln in self.A_row.items()}
        A.update({(oi, j): ln for j, ln in self.A_col.items()})
        return f, A


def extract_axes(f: DiscreteNet, A: LineCongruence, origin: Optional[Index] = None) -> AxesData:
    """Restrict f and A to the two axes through ``origin`` (default: window corner)."""
    w = f.window.intersect(A.window)
    if w is None:
        raise GeometryError("net and congruence share no vertices")
    oi, oj = origin if origin is not None else (w.i0, w.j0)
    if (oi, oj) not in w or (oi + 1, oj + 1) not in w:
        raise GeometryError(f"origin {(oi, oj)} and its diagonal neighbour must lie in {w}")
    rows = range(w.i0, w.i1 + 1)
    cols = range(w.j0, w.j1 + 1)
    return AxesData(
        window=w,
        origin=(oi, oj),
        f_row={i: f[(i, oj)] for i in rows},
        f_col={j: f[(oi, j)] for j in cols},
        A_row={i: A[(i, oj)] for i in rows},
        A_col={j: A[(oi, j)] for j in cols},
        f11=f[(oi + 1, oj + 1)],
    )


def suitability_violations(data: AxesData) -> list[tuple[int, Index]]:
    """All violated suitable-position conditions as (bullet, vertex) pairs."""
    oi, oj = data.origin
    out: list[tuple[int, Index]] = []
    if data.f_row.get(oi) != data.f_col.get(oj) or data.A_row.get(oi) != data.A_col.get(oj):
        out.append((3, (oi, oj)))
    axes = (
        (data.f_row, data.A_row, lambda t: (t, oj)),
        (data.f_col, data.A_col, lambda t: (oi, t)),
    )
    for fs, As, vertex in axes:
        keys = sorted(fs)
        if sorted(As) != keys or keys != list(range(keys[0], keys[-1] + 1)):
            raise GeometryError("axis data must cover a contiguous range with f and A alike")
        for t in keys:
            if t + 1 in As and lines_meet(As[t], As[t + 1]):
                out.append((1, vertex(t)))
        for t in keys[1:-1]:
            pts = (fs[t - 1], fs[t], fs[t + 1])
            if collinear(*pts) or not As[t].lies_in(join_plane(*pts)):
                out.append((2, vertex(t)))
        for t in keys:
            if not As[t].contains(fs[t]):
                out.append((3, vertex(t)))
    return sorted(set(out))


def _quadric(A: Mapping, a: Index, b: Index, c: Index, vertex: Index):
    try:
        return quadric_through_three_lines(A[a], A[b], A[c])
    except (NotPairwiseSkew, RankDeficient) as exc:
        raise DegenerateTransport(vertex, f"no quadric through lines at {a}, {b}, {c}: {exc}") from None


def _conic(A: Mapping, f: Mapping, c: Index, p: Index, q: Index, vertex: Index):
    q3 = _quadric(A, c, p, q, vertex)
    try:
        return q3, conic_section(q3, join_plane(f[c], f[p], f[q]))
    except GeometryError as exc:
        raise DegenerateTransport(vertex, f"degenerate face conic at {vertex}: {exc}") from None


def _face_ruling(A: Mapping, c: Index, p: Index, q: Index, x: HomPoint, vertex: Index) -> PluckerLine:
    """The generator through x of the regulus containing A at c, p, q."""
    q3 = _quadric(A, c, p, q, vertex)
    try:
        return ruling_through_point(q3, x, transversal_through_point(x, A[p], A[q]))
    except GeometryError as exc:
        raise DegenerateTransport(vertex, f"no axis line at {vertex}: {exc}") from None


def _routes(v: Index, origin: Index):
    """Both conic projections that can produce f at v.

    Yields (center, source corner triple, known point, target corner triple)
    with corner triples given as (c, p, q).
    """
    sa = 1 if v[0] > origin[0] else -1
    sb = 1 if v[1] > origin[1] else -1
    c = (v[0] - sa, v[1] - sb)
    p, q = (v[0], c[1]), (c[0], v[1])
    # along the row through q, from the face on the far side of q
    c_row = (c[0] - sa, c[1])
    yield q, (c, c_row, q), (c[0] - sa, v[1]), (c, p, q)
    # along the column through p
    c_col = (c[0], c[1] - sb)
    yield p, (c, p, c_col), (v[0], c[1] - sb), (c, p, q)


def construct_cycle_from_axes(data: AxesData, window: Optional[NetWindow] = None,
                              audit: Optional[list] = None):
    """Rebuild f, its axis congruence A and the full cycle from axis data.

    Each vertex off the axes is the projection of a known vertex between two
    face conics; every alternative route is evaluated and must agree.
    """
    window = window or data.window
    bad = suitability_violations(data)
    if bad:
        bullet, index = bad[0]
        raise SuitabilityViolated(bullet, index, "suitable position violated: " + ", ".join(
            f"condition {b} at {ij}" for b, ij in bad))
    f, A = data.known()
    oi, oj = data.origin
    o, o1, o2, o11 = (oi, oj), (oi + 1, oj), (oi, oj + 1), (oi + 1, oj + 1)
    for ij in window:
        if (ij[0] == oi or ij[1] == oj) and ij not in f:
            raise GeometryError(f"axis data missing at {ij}")
    q11 = _quadric(A, o, o1, o2, o11)
    if not q11.contains(data.f11) or not join_plane(f[o], f[o1], f[o2]).contains(data.f11):
        raise F11OffQuadric("f11 must lie on the quadric of the three axis lines and in the face plane")
    f[o11] = data.f11
    A[o11] = _face_ruling(A, o, o1, o2, data.f11, o11)

    todo = sorted((ij for ij in window if ij not in f),
                  key=lambda ij: (abs(ij[0] - oi) + abs(ij[1] - oj), ij))
    while todo:
        progress = []
        for v in todo:
            for center, src, x_idx, dst in _routes(v, data.origin):
                if all(ij in f for ij in src + (x_idx,)) and all(ij in f for ij in dst):
                    f[v] = _transport(A, f, center, src, x_idx, dst, v)
                    c, p, q = dst
                    A[v] = _face_ruling(A, c, p, q, f[v], v)
                    progress.append(v)
                    break
        if not progress:
            raise DegenerateTransport(todo[0], f"no route reaches {todo[0]} inside {window}")
        todo = [v for v in todo if v not in f]

    # every alternative route must reproduce the stored value
    for v in window:
        if v[0] == oi or v[1] == oj:
            continue
        for center, src, x_idx, dst in _routes(v, data.origin):
            if not all(ij in f for ij in src + (x_idx,) + dst):
                continue
            val = _transport(A, f, center, src, x_idx, dst, v)
            if audit is not None:
                audit.append((v, center, val == f[v]))
            if val != f[v]:
                raise PropertyViolation(f"completion routes disagree at {v}")

    fnet = DiscreteNet(window, f)
    cong = LineCongruence(window, A)
    h = laplace(fnet, 1)
    k = laplace(fnet, 2)
    g = laplace(laplace(fnet, 1), 1).shift(-1, -1)
    cycle = LaplaceCycle(f=fnet, h=h, g=g, k=k)
    rep = verify_cycle(cycle)
    if not rep.ok:
        raise PropertyViolation(f"rebuilt net is not a period-four cycle: {rep.failures[:3]}")
    return fnet, cong, cycle


def _transport(A, f, center, src, x_idx, dst, v) -> HomPoint:
    _, C = _conic(A, f, *src, v)
    _, D = _conic(A, f, *dst, v)
    try:
        return project_between_conics(A[center], C, D, f[x_idx])
    except GeometryError as exc:
        raise DegenerateTransport(v, f"projection to {v} degenerates: {exc}") from None


# --------------------------------------------------------------------------
# perspective quadrilaterals and the conic loop around a vertex star

@dataclass(frozen=True)
class PerspectiveResult:
    points_coplanar: bool
    planes_concurrent: bool
    edge_points: tuple
    edge_planes: tuple
    center: Optional[HomPoint] = None
    plane: Optional[HomPlane] = None
    collineation: object = None
    maps_a_to_b: Optional[bool] = None


def lemma18_check(a: Sequence[HomPoint], b: Sequence[HomPoint]) -> PerspectiveResult:
    """Coplanarity of the edge meets versus concurrency of the edge planes.

    Quadrilaterals ``a`` and ``b`` must meet edgewise: a_i v a_{i+1} and
    b_i v b_{i+1} intersect in one point and span one plane, and neighbouring
    edges give distinct points and distinct planes.  The two
    properties must agree; when both hold the perspective collineation is
    returned and checked on all four vertices.
    """
    pts, planes = [], []
    for i in range(4):
        try:
            la = line_from_points(a[i], a[(i + 1) % 4])
            lb = line_from_points(b[i], b[(i + 1) % 4])
        except CoincidentPoints:
            raise EdgeConditionViolated(i) from None
        if la == lb or not lines_meet(la, lb):
            raise EdgeConditionViolated(i)
        pts.append(meet_lines(la, lb))
        planes.append(join_lines(la, lb))
    # coincident neighbours would make one side of the equivalence hold trivially
    for i in range(4):
        if pts[i] == pts[(i + 1) % 4]:
            raise EdgeConditionViolated(i, f"edges {i} and {(i + 1) % 4} meet in the same point")
        if planes[i] == planes[(i + 1) % 4]:
            raise EdgeConditionViolated(i, f"edges {i} and {(i + 1) % 4} span the same plane")

    coplanar_pts = rank([p.coords for p in pts]) <= 3
    concurrent = rank([p.coords for p in planes]) <= 3
    if coplanar_pts != concurrent:
        raise PropertyViolation("edge meets coplanar but edge planes not concurrent, or vice versa")
    if not coplanar_pts:
        return PerspectiveResult(False, False, tuple(pts), tuple(planes))
    ns_plane = nullspace([p.coords for p in pts])
    ns_center = nullspace([p.coords for p in planes])
    if len(ns_plane) != 1 or len(ns_center) != 1:
        return PerspectiveResult(True, True, tuple(pts), tuple(planes))
    phi, center = HomPlane(ns_plane[0]), HomPoint(ns_center[0])
    try:
        cmap = perspective_collineation(center, phi, a[0], b[0])
    except InvalidPerspectivity:
        return PerspectiveResult(True, True, tuple(pts), tuple(planes), center, phi)
    maps = all(cmap(a[i]) == b[i] for i in range(4))
    return PerspectiveResult(True, True, tuple(pts), tuple(planes), center, phi, cmap, maps)


def lemma19_construct(A: Sequence[PluckerLine], phi: HomPlane) -> tuple[tuple, tuple]:
    """f_i = phi ^ A_i and g_{i+2} = A_{i+2} ^ (f_i v A_{i+1}); the g_i are coplanar."""
    if len(A) != 4 or not in_regulus(*A):
        raise NotARegulus("the four lines must be pairwise skew members of one regulus")
    for i, ln in enumerate(A):
        if ln.lies_in(phi):
            raise PlaneIncident(f"plane contains line {i}")
    f = tuple(meet_line_plane(ln, phi) for ln in A)
    g: list = [None] * 4
    for i in range(4):
        g[(i + 2) % 4] = meet_line_plane(A[(i + 2) % 4], join_line_point(A[(i + 1) % 4], f[i]))
    if not coplanar(*g):
        raise PropertyViolation("the g quadruple is not coplanar")
    return f, tuple(g)


def lemma19_quadrilaterals(A: Sequence[PluckerLine], f: Sequence[HomPoint]):
    """The two quadrilaterals with edges A0, B1, A2, B3 and B0, A1, B2, A3,
    where B_i is the second generator through f_i."""
    B = [transversal_through_point(f[i], A[(i + 1) % 4], A[(i + 2) % 4]) for i in range(4)]
    a = (meet_lines(B[3], A[0]), meet_lines(A[0], B[1]), meet_lines(B[1], A[2]), meet_lines(A[2], B[3]))
    b = (meet_lines(A[3], B[0]), meet_lines(B[0], A[1]), meet_lines(A[1], B[2]), meet_lines(B[2], A[3]))
    return a, b, B


_STAR = ((0, 0), (1, 0), (-1, 0), (0, 1), (0, -1))
_LOOP = (  # (center, source quadrant, target quadrant)
    ((0, -1), (-1, -1), (1, -1)),
    ((1, 0), (1, -1), (1, 1)),
    ((0, 1), (1, 1), (-1, 1)),
    ((-1, 0), (-1, 1), (-1, -1)),
)


def _star_conics(A: Mapping, f: Mapping):
    for ij in _STAR:
        if not A[ij].contains(f[ij]):
            raise GeometryError(f"point at {ij} is not on its line")
    conics = {}
    for si in (1, -1):
        for sj in (1, -1):
            try:
                q = quadric_through_three_lines(A[(0, 0)], A[(si, 0)], A[(0, sj)])
                conics[(si, sj)] = conic_section(q, join_plane(f[(0, 0)], f[(si, 0)], f[(0, sj)]))
            except GeometryError as exc:
                raise DegenerateQuadric(f"quadrant {(si, sj)}: {exc}") from None
    return conics


def _conic_samples(conic, base: Sequence[HomPoint]) -> list[HomPoint]:
    out = list(dict.fromkeys(base))
    z = base[0]
    for y in point_basis_of_plane(conic.plane):
        if y == z:
            continue
        try:
            r = second_root(conic.quadric, z, y)
        except GeometryError:
            continue
        if r not in out:
            out.append(r)
    return out


def lemma21_check(A: Mapping[Index, PluckerLine], f: Mapping[Index, HomPoint]) -> bool:
    """Does the cyclic composition of the four conic projections around the
    star at (0, 0) fix sampled points of the (-1, -1) conic?"""
    conics = _star_conics(A, f)
    start = conics[(-1, -1)]
    samples = _conic_samples(start, [f[(0, 0)], f[(-1, 0)], f[(0, -1)]])
    for x in samples:
        y = x
        for center, src, dst in _LOOP:
            y = project_between_conics(A[center], conics[src], conics[dst], y)
        if y != x:
            return False
    return True


def lemma21_transport(A: Mapping[Index, PluckerLine], f: Mapping[Index, HomPoint], f11: HomPoint):
    """Carry f11 around the four quadrant conics; return the quadrant points and
    the points where their second generators meet the central line."""
    conics = _star_conics(A, f)
    if not conics[(1, 1)].contains(f11):
        raise F11OffQuadric("f11 is not on the (1, 1) conic")
    pts = {(1, 1): f11}
    order = (((0, 1), (1, 1), (-1, 1)), ((-1, 0), (-1, 1), (-1, -1)), ((0, -1), (-1, -1), (1, -1)))
    for center, src, dst in order:
        pts[dst] = project_between_conics(A[center], conics[src], conics[dst], pts[src])
    bs = {}
    for (si, sj), x in pts.items():
        B = transversal_through_point(x, A[(si, 0)], A[(0, sj)])
        bs[(si, sj)] = meet_lines(B, A[(0, 0)])
    return pts, bs
