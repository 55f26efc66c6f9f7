"""Line geometry of P^3: Plücker coordinates, reguli, quadrics and conics.

A line is stored by its Plücker coordinates ``(p01, p02, p03, p23, p31, p12)``
with ``pij = a_i b_j - a_j b_i`` for two spanning points.  With this ordering
the Plücker relation reads ``p01 p23 + p02 p31 + p03 p12 = 0`` and two lines
meet iff the polar form :func:`klein_form` vanishes.

Every "second intersection" uses a known rational root, so no field extension
is ever needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    CoincidentPoints,
    DegenerateTransversal,
    GeneratorInvalid,
    GeometryError,
    IrrationalBranch,
    LineInConic,
    LineInPlane,
    LineNotInPlane,
    LinesDoNotMeet,
    NotPairwiseSkew,
    PointNotOnConic,
    PointNotOnLine,
    PointNotOnQuadric,
    PointOnLine,
    PreconditionViolated,
    RankDeficient,
    SingularConicPoint,
)
from .projective_core import (
    HomPlane,
    HomPoint,
    _in_backend,
    canonical,
    combine,
    dot,
    is_exact,
    is_zero,
    nullspace,
    point_basis_of_plane,
    rank,
)

# index pairs of the six coordinates
_PAIRS = ((0, 1), (0, 2), (0, 3), (2, 3), (3, 1), (1, 2))


def _antisym(p: Sequence) -> list[list]:
    m = [[0] * 4 for _ in range(4)]
    for (i, j), v in zip(_PAIRS, p):
        m[i][j] = v
        m[j][i] = -v
    return m


def _dual(p: Sequence) -> tuple:
    # plane-coordinates of the same line: (q01,q02,q03,q23,q31,q12) ~ (p23,p31,p12,p01,p02,p03)
    return (p[3], p[4], p[5], p[0], p[1], p[2])


def klein_form(p: Sequence, q: Sequence):
    """Symmetric bilinear form of the Klein quadric."""
    return (p[0] * q[3] + p[3] * q[0] + p[1] * q[4] + p[4] * q[1]
            + p[2] * q[5] + p[5] * q[2])


class PluckerLine:
    """Line of P^3 with canonical Plücker coordinates."""

    __slots__ = ("_c",)

    def __init__(self, *p):
        if len(p) == 1 and not isinstance(p[0], (int, float)):
            p = tuple(p[0])
        if len(p) != 6:
            raise GeometryError("PluckerLine needs 6 coordinates")
        c = canonical(p)
        if all(is_zero(v) for v in c):
            raise GeometryError("PluckerLine with all coordinates zero")
        if not is_zero(klein_form(c, c)):
            raise GeometryError(f"coordinates {c} violate the Plücker relation")
        object.__setattr__(self, "_c", c)

    @property
    def p(self) -> tuple:
        return _in_backend(self._c)

    def __setattr__(self, name, value):
        raise AttributeError("immutable")

    def __eq__(self, other):
        if not isinstance(other, PluckerLine):
            return NotImplemented
        if is_exact():
            return self.p == other.p
        from .projective_core import active_backend
        tol = active_backend().rtol
        return all(abs(a - b) <= tol for a, b in zip(self.p, other.p))

    def __hash__(self):
        return hash(("PluckerLine", self.p if is_exact() else tuple(round(v, 6) for v in self.p)))

    def __iter__(self):
        return iter(self.p)

    def __repr__(self):
        return f"PluckerLine({', '.join(str(v) for v in self.p)})"

    def __reduce__(self):
        return (PluckerLine, tuple(self.p))

    # -- incidence helpers
    def points(self) -> tuple[HomPoint, HomPoint]:
        """Two distinct points spanning the line (deterministic)."""
        m = _antisym(self.p)
        cols = []
        for k in range(4):
            col = [m[i][k] for i in range(4)]
            if not all(is_zero(v) for v in col):
                pt = HomPoint(col)
                if not cols or pt != cols[0]:
                    cols.append(pt)
                if len(cols) == 2:
                    return cols[0], cols[1]
        raise GeometryError("cannot find two points on line")  # unreachable for valid lines

    def planes(self) -> tuple[HomPlane, HomPlane]:
        """Two distinct planes through the line."""
        m = _antisym(_dual(self.p))
        out = []
        for k in range(4):
            col = [m[i][k] for i in range(4)]
            if not all(is_zero(v) for v in col):
                pl = HomPlane(col)
                if not out or pl != out[0]:
                    out.append(pl)
                if len(out) == 2:
                    return out[0], out[1]
        raise GeometryError("cannot find two planes through line")

    def contains(self, x: HomPoint) -> bool:
        m = _antisym(_dual(self.p))
        return all(is_zero(dot(row, x.coords)) for row in m)

    def lies_in(self, plane: HomPlane) -> bool:
        m = _antisym(self.p)
        return all(is_zero(dot(row, plane.coords)) for row in m)


@dataclass(frozen=True)
class KleinPoint:
    """Image of a line on the Klein quadric in P^5."""

    coords: tuple

    def on_klein_quadric(self) -> bool:
        return is_zero(klein_form(self.coords, self.coords))


def klein_map(line: PluckerLine) -> KleinPoint:
    return KleinPoint(tuple(line.p))


def lines_meet(a: PluckerLine, b: PluckerLine) -> bool:
    return is_zero(klein_form(a.p, b.p))


def skew(a: PluckerLine, b: PluckerLine) -> bool:
    return not lines_meet(a, b)


# --------------------------------------------------------------------------
# constructions

def line_from_points(a: HomPoint, b: HomPoint) -> PluckerLine:
    if a == b:
        raise CoincidentPoints(f"{a} and {b} coincide")
    p = [a[i] * b[j] - a[j] * b[i] for i, j in _PAIRS]
    if all(is_zero(v) for v in p):
        raise CoincidentPoints(f"{a} and {b} coincide")
    return PluckerLine(p)


def line_from_planes(u: HomPlane, v: HomPlane) -> PluckerLine:
    if u == v:
        raise CoincidentPoints(f"planes {u} and {v} coincide")
    q = [u[i] * v[j] - u[j] * v[i] for i, j in _PAIRS]
    if all(is_zero(x) for x in q):
        raise CoincidentPoints(f"planes {u} and {v} coincide")
    return PluckerLine(_dual(q))


def meet_line_plane(line: PluckerLine, plane: HomPlane) -> HomPoint:
    m = _antisym(line.p)
    x = [dot(row, plane.coords) for row in m]
    if all(is_zero(v) for v in x):
        raise LineInPlane(f"{line} lies in {plane}")
    return HomPoint(x)


def join_line_point(line: PluckerLine, x: HomPoint) -> HomPlane:
    m = _antisym(_dual(line.p))
    u = [dot(row, x.coords) for row in m]
    if all(is_zero(v) for v in u):
        raise PointOnLine(f"{x} lies on {line}")
    return HomPlane(u)


def meet_lines(a: PluckerLine, b: PluckerLine) -> HomPoint:
    """Intersection point of two distinct coplanar lines."""
    if a == b:
        raise CoincidentPoints("lines coincide")
    if not lines_meet(a, b):
        raise LinesDoNotMeet(f"{a} and {b} are skew")
    for plane in b.planes():
        try:
            return meet_line_plane(a, plane)
        except LineInPlane:
            continue
    raise GeometryError("no intersection found")  # unreachable


def join_lines(a: PluckerLine, b: PluckerLine) -> HomPlane:
    """Plane spanned by two distinct intersecting lines."""
    if a == b:
        raise CoincidentPoints("lines coincide")
    if not lines_meet(a, b):
        raise LinesDoNotMeet(f"{a} and {b} are skew")
    for x in b.points():
        try:
            return join_line_point(a, x)
        except PointOnLine:
            continue
    raise GeometryError("no joining plane found")  # unreachable


def project_between_lines(center: PluckerLine, src: PluckerLine, dst: PluckerLine,
                          a: HomPoint) -> HomPoint:
    """Image of ``a`` on ``src`` under projection onto ``dst`` from ``center``."""
    if lines_meet(center, src) or lines_meet(center, dst) or lines_meet(src, dst):
        raise NotPairwiseSkew("projection needs three pairwise skew lines")
    if not src.contains(a):
        raise PointNotOnLine(f"{a} is not on the source line")
    return meet_line_plane(dst, join_line_point(center, a))


def transversal_through_point(x: HomPoint, a: PluckerLine, b: PluckerLine) -> PluckerLine:
    """The line through x meeting both a and b."""
    alpha = join_line_point(a, x)
    beta = join_line_point(b, x)
    if alpha == beta:
        raise DegenerateTransversal(f"{x} is coplanar with both lines")
    return line_from_planes(alpha, beta)


# --------------------------------------------------------------------------
# quadrics

_UPPER = [(i, j) for i in range(4) for j in range(i, 4)]


class Quadric:
    """Quadric x^T Q x = 0 with Q symmetric; stored as 10 upper-triangle entries."""

    __slots__ = ("coeffs", "_m")

    def __init__(self, coeffs: Sequence):
        c = canonical(coeffs)
        if len(c) != 10:
            raise GeometryError("quadric needs 10 upper-triangle coefficients")
        if all(is_zero(v) for v in c):
            raise GeometryError("zero quadric")
        m = [[0] * 4 for _ in range(4)]
        for (i, j), v in zip(_UPPER, c):
            m[i][j] = v
            m[j][i] = v
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "_m", m)

    def __setattr__(self, name, value):
        raise AttributeError("immutable")

    @classmethod
    def from_matrix(cls, m: Sequence[Sequence]) -> "Quadric":
        return cls([m[i][j] for i, j in _UPPER])

    @property
    def matrix(self) -> list[list]:
        return [row[:] for row in self._m]

    def __eq__(self, other):
        return isinstance(other, Quadric) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("Quadric", self.coeffs))

    def __repr__(self):
        return f"Quadric({', '.join(str(v) for v in self.coeffs)})"

    def bilinear(self, x: HomPoint, y: HomPoint):
        return sum(x[i] * self._m[i][j] * y[j] for i in range(4) for j in range(4))

    def value(self, x: HomPoint):
        return self.bilinear(x, x)

    def contains(self, x: HomPoint) -> bool:
        return is_zero(self.value(x))

    def contains_line(self, line: PluckerLine) -> bool:
        a, b = line.points()
        return self.contains(a) and self.contains(b) and is_zero(self.bilinear(a, b))

    def polar(self, x: HomPoint) -> list:
        return [dot(row, x.coords) for row in self._m]

    def tangent_plane(self, x: HomPoint) -> HomPlane:
        pol = self.polar(x)
        if all(is_zero(v) for v in pol):
            raise GeometryError(f"{x} is a singular point of the quadric")
        return HomPlane(pol)


def sample_points(line: PluckerLine) -> tuple[HomPoint, HomPoint, HomPoint]:
    """Points at parameters 0, 1 and infinity of the line's canonical span."""
    u, v = line.points()
    return u, combine(u, v, 1, 1), v


def quadric_through_three_lines(a: PluckerLine, b: PluckerLine, c: PluckerLine) -> Quadric:
    if lines_meet(a, b) or lines_meet(a, c) or lines_meet(b, c):
        raise NotPairwiseSkew("quadric needs three pairwise skew lines")
    rows = []
    for line in (a, b, c):
        for x in sample_points(line):
            rows.append([x[i] * x[j] for i, j in _UPPER])
    ns = nullspace(rows)
    if len(ns) != 1:
        raise RankDeficient(f"null space of dimension {len(ns)}")
    v = ns[0]
    # monomial coefficient of x_i x_j (i<j) equals 2*Q_ij
    return Quadric([v[k] if i == j else v[k] / 2 for k, (i, j) in enumerate(_UPPER)])


def in_regulus(l1: PluckerLine, l2: PluckerLine, l3: PluckerLine, l4: PluckerLine) -> bool:
    lines = (l1, l2, l3, l4)
    for i in range(4):
        for j in range(i + 1, 4):
            if lines_meet(lines[i], lines[j]):
                return False
    return rank([ln.p for ln in lines]) == 3


def second_root(q: Quadric, z: HomPoint, y: HomPoint) -> HomPoint:
    """Second intersection of the line z v y with q, given z on q (z != y)."""
    qy = q.value(y)
    bzy = q.bilinear(z, y)
    r = [qy * zc - 2 * bzy * yc for zc, yc in zip(z.coords, y.coords)]
    if all(is_zero(v) for v in r):
        raise LineInConic(f"line through {z} and {y} lies on the quadric")
    return HomPoint(r)


def ruling_through_point(q: Quadric, x: HomPoint, known_generator: PluckerLine) -> PluckerLine:
    """The second line on q through x, given one line of q through x."""
    if not q.contains(x):
        raise PointNotOnQuadric(f"{x} is not on the quadric")
    if not known_generator.contains(x) or not q.contains_line(known_generator):
        raise GeneratorInvalid("known generator must pass through x and lie on the quadric")
    tau = q.tangent_plane(x)
    p = next(pt for pt in sample_points(known_generator) if pt != x)
    qpt = next((pt for pt in point_basis_of_plane(tau) if not known_generator.contains(pt)), None)
    if qpt is None:
        raise GeneratorInvalid("tangent plane spanned by the known generator")
    try:
        r = second_root(q, p, qpt)
    except LineInConic as exc:
        raise IrrationalBranch("tangent plane lies on the quadric") from exc
    if r == p or known_generator.contains(r):
        raise IrrationalBranch("tangent section is a double line")
    return line_from_points(x, r)


# --------------------------------------------------------------------------
# conics

@dataclass(frozen=True)
class Conic:
    quadric: Quadric
    plane: HomPlane
    degenerate: bool

    def contains(self, x: HomPoint) -> bool:
        return self.plane.contains(x) and self.quadric.contains(x)


def conic_section(q: Quadric, plane: HomPlane) -> Conic:
    basis = point_basis_of_plane(plane)
    m = [[q.bilinear(a, b) for b in basis] for a in basis]
    r = rank(m)
    if r == 0:
        raise GeometryError("plane lies on the quadric")
    return Conic(q, plane, r < 3)


def second_intersection(conic: Conic, line: PluckerLine, z: HomPoint) -> HomPoint:
    """Residual intersection of ``line`` with ``conic`` besides ``z``."""
    if not conic.contains(z):
        raise PointNotOnConic(f"{z} is not on the conic")
    if not line.lies_in(conic.plane):
        raise LineNotInPlane("line is not in the plane of the conic")
    if not line.contains(z):
        raise PointNotOnLine(f"{z} is not on the line")
    y = next(pt for pt in sample_points(line) if pt != z)
    return second_root(conic.quadric, z, y)


def conic_tangent(conic: Conic, z: HomPoint) -> PluckerLine:
    """Tangent of the conic at z (the component line through z if degenerate)."""
    if not conic.contains(z):
        raise PointNotOnConic(f"{z} is not on the conic")
    pol = conic.quadric.polar(z)
    if all(is_zero(v) for v in pol):
        raise SingularConicPoint(f"{z} is singular on the quadric")
    tau = HomPlane(pol)
    if tau == conic.plane:
        raise SingularConicPoint(f"{z} is the double point of the conic")
    return line_from_planes(tau, conic.plane)


def project_between_conics(center: PluckerLine, c: Conic, d: Conic, x: HomPoint) -> HomPoint:
    """Projection of conic ``c`` onto conic ``d`` from the line ``center``."""
    if center.lies_in(c.plane):
        raise PreconditionViolated("center lies in the plane of the source conic")
    if center.lies_in(d.plane):
        raise PreconditionViolated("center lies in the plane of the target conic")
    z = meet_line_plane(center, c.plane)
    if z != meet_line_plane(center, d.plane):
        raise PreconditionViolated("center meets the two conic planes in different points")
    if not c.contains(z) or not d.contains(z):
        raise PreconditionViolated("center does not pass through a common point of both conics")
    if not c.contains(x):
        raise PreconditionViolated("x is not on the source conic")
    try:
        t_c = conic_tangent(c, z)
        t_d = conic_tangent(d, z)
    except SingularConicPoint as exc:
        raise PreconditionViolated("common point is the double point of a degenerate conic") from exc
    gamma = join_lines(center, t_c)
    delta = join_lines(center, t_d)
    if gamma == delta:
        cc = dd = z
    else:
        cc = second_intersection(c, line_from_planes(delta, c.plane), z)
        dd = second_intersection(d, line_from_planes(gamma, d.plane), z)
    if x == cc:
        return z
    if x == z:
        return dd
    ray = line_from_planes(join_line_point(center, x), d.plane)
    return second_intersection(d, ray, z)
