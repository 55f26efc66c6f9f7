"""Exact projective geometry of P^3: points, planes, joins, meets, cross-ratio.

Coordinates are exact rationals (``fractions.Fraction``) by default.  Points and
planes are stored in canonical form: coprime integers with the first nonzero
entry positive, so equality and hashing are plain tuple operations.

A floating backend exists behind :func:`backend` for demos and timing; every
zero test in the package goes through :func:`is_zero` so the switch is global.
"""

from __future__ import annotations

import math
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

from .errors import (
    DegenerateMeet,
    DegenerateSpan,
    GeometryError,
    InvalidPerspectivity,
    NotCollinear,
    TooManyCoincident,
)

Scalar = Fraction
Number = Union[int, Fraction, float]


# --------------------------------------------------------------------------
# backend

@dataclass(frozen=True)
class Backend:
    name: str
    rtol: float


_EXACT = Backend("exact", 0.0)
_active: Backend = _EXACT


def active_backend() -> Backend:
    return _active


def is_exact() -> bool:
    return _active.name == "exact"


@contextmanager
def backend(name: str, rtol: float = 1e-9) -> Iterator[Backend]:
    """Temporarily switch the scalar backend (``"exact"`` or ``"float"``)."""
    global _active
    if name not in ("exact", "float"):
        raise ValueError(f"unknown backend {name!r}")
    previous = _active
    _active = _EXACT if name == "exact" else Backend("float", float(rtol))
    try:
        yield _active
    finally:
        _active = previous


def is_zero(x: Number) -> bool:
    if _active.name == "exact":
        return x == 0
    return abs(x) <= _active.rtol


def to_scalar(v) -> Number:
    if _active.name == "float":
        return float(Fraction(v)) if isinstance(v, str) else float(v)
    if isinstance(v, float):
        return Fraction(v).limit_denominator(10**12)
    return Fraction(v)


# --------------------------------------------------------------------------
# linear algebra over the active scalar field

def canonical(values: Iterable[Number]) -> tuple:
    """Canonical representative of a homogeneous vector (all-zero allowed)."""
    vals = [to_scalar(v) for v in values]
    if _active.name == "float":
        m = max(abs(v) for v in vals)
        if m == 0:
            return tuple(0.0 for _ in vals)
        vals = [v / m for v in vals]
        for v in vals:
            if abs(v) > _active.rtol:
                if v < 0:
                    vals = [-w for w in vals]
                break
        return tuple(vals)
    lcm = 1
    for v in vals:
        lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
    ints = [int(v * lcm) for v in vals]
    g = 0
    for n in ints:
        g = math.gcd(g, n)
    if g == 0:
        return tuple(ints)
    first = next(n for n in ints if n != 0)
    if first < 0:
        g = -g
    return tuple(n // g for n in ints)


def dot(u: Sequence[Number], v: Sequence[Number]) -> Number:
    return sum(a * b for a, b in zip(u, v))


def det3(m: Sequence[Sequence[Number]]) -> Number:
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def det4(m: Sequence[Sequence[Number]]) -> Number:
    total = 0
    for k in range(4):
        if m[0][k] == 0:
            continue
        minor = [[row[c] for c in range(4) if c != k] for row in m[1:]]
        total += (-1) ** k * m[0][k] * det3(minor)
    return total


def complement3(a, b, c) -> list:
    """Vector n with n.y = det[a; b; c; y] for every y (a 4D 'cross product')."""
    rows = (a, b, c)
    out = []
    for k in range(4):
        minor = [[row[col] for col in range(4) if col != k] for row in rows]
        out.append((-1) ** (k + 1) * det3(minor))
    return out


def row_reduce(rows: Sequence[Sequence[Number]]) -> tuple[list[list[Number]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [[to_scalar(v) for v in row] for row in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    exact = is_exact()
    for c in range(ncols):
        if r == len(m):
            break
        if exact:
            piv = next((k for k in range(r, len(m)) if m[k][c] != 0), None)
        else:
            piv = max(range(r, len(m)), key=lambda k: abs(m[k][c]))
            if is_zero(m[piv][c]):
                piv = None
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        m[r] = [v / p for v in m[r]]
        for k in range(len(m)):
            if k != r and not is_zero(m[k][c]):
                factor = m[k][c]
                m[k] = [a - factor * b for a, b in zip(m[k], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(rows: Sequence[Sequence[Number]]) -> int:
    return len(row_reduce(rows)[1])


def nullspace(rows: Sequence[Sequence[Number]], ncols: int | None = None) -> list[list[Number]]:
    """Basis of the right null space."""
    if not rows:
        n = ncols or 0
        return [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    red, pivots = row_reduce(rows)
    n = len(rows[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [to_scalar(0)] * n
        v[fc] = to_scalar(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


# --------------------------------------------------------------------------
# homogeneous objects

def _in_backend(c: tuple) -> tuple:
    """Stored coordinates re-expressed in the active backend when they were
    created under the other one."""
    if isinstance(c[0], float) == (_active.name == "float"):
        return c
    return canonical(c)


class _Hom:
    __slots__ = ("_c",)
    _size = 4

    def __init__(self, *coords):
        if len(coords) == 1 and not isinstance(coords[0], (int, float, Fraction, str)):
            coords = tuple(coords[0])
        if len(coords) != self._size:
            raise GeometryError(f"{type(self).__name__} needs {self._size} coordinates")
        c = canonical(coords)
        if all(is_zero(v) for v in c):
            raise GeometryError(f"{type(self).__name__} with all coordinates zero")
        object.__setattr__(self, "_c", c)

    @property
    def coords(self) -> tuple:
        return _in_backend(self._c)

    def __setattr__(self, name, value):
        raise AttributeError("immutable")

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, k):
        return self.coords[k]

    def __len__(self):
        return self._size

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        if is_exact():
            return self.coords == other.coords
        return all(abs(x - y) <= _active.rtol for x, y in zip(self.coords, other.coords))

    def __hash__(self):
        if is_exact():
            return hash((type(self).__name__, self.coords))
        return hash((type(self).__name__, tuple(round(v, 6) for v in self.coords)))

    def __repr__(self):
        return f"{type(self).__name__}({', '.join(str(v) for v in self.coords)})"

    def __reduce__(self):
        return (type(self), tuple(self.coords))


class HomPoint(_Hom):
    """Point of P^3 in homogeneous coordinates."""
    __slots__ = ()


class HomPlane(_Hom):
    """Plane of P^3 in dual homogeneous coordinates."""
    __slots__ = ()

    def contains(self, x: HomPoint) -> bool:
        return is_zero(dot(self.coords, x.coords))


def incident(x: HomPoint, plane: HomPlane) -> bool:
    return is_zero(dot(x.coords, plane.coords))


def combine(a: _Hom, b: _Hom, s: Number, t: Number):
    """The object s*a + t*b (same type as ``a``)."""
    return type(a)([s * u + t * v for u, v in zip(a.coords, b.coords)])


# --------------------------------------------------------------------------
# pencil parameters

class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()
ProjParam = Union[Fraction, float, _Infinity]


def pencil_point(u: _Hom, v: _Hom, lam: ProjParam):
    """Member u + lam*v of the pencil spanned by u and v; INFINITY gives v."""
    if lam is INFINITY:
        return type(v)(v.coords)
    lam = to_scalar(lam)
    if is_exact():
        return combine(u, v, lam.denominator, lam.numerator)
    return combine(u, v, 1.0, lam)


# --------------------------------------------------------------------------
# joins, meets, predicates

def join_plane(a: HomPoint, b: HomPoint, c: HomPoint) -> HomPlane:
    n = complement3(a.coords, b.coords, c.coords)
    if all(is_zero(v) for v in n):
        raise DegenerateSpan(f"points {a}, {b}, {c} are collinear or coincident")
    return HomPlane(n)


def meet_planes(p: HomPlane, q: HomPlane, r: HomPlane) -> HomPoint:
    n = complement3(p.coords, q.coords, r.coords)
    if all(is_zero(v) for v in n):
        raise DegenerateMeet(f"planes {p}, {q}, {r} share a line")
    return HomPoint(n)


def collinear(*points: HomPoint) -> bool:
    return rank([p.coords for p in points]) <= 2


def coplanar(a: HomPoint, b: HomPoint, c: HomPoint, d: HomPoint) -> bool:
    if is_exact():
        return det4([a.coords, b.coords, c.coords, d.coords]) == 0
    return rank([a.coords, b.coords, c.coords, d.coords]) <= 3


def _pair_coefficients(a: HomPoint, b: HomPoint, x: HomPoint) -> tuple[Number, Number]:
    """(alpha, beta) with x ~ alpha*a + beta*b, up to a common factor."""
    best = None
    for r in range(4):
        for s in range(r + 1, 4):
            m = a[r] * b[s] - a[s] * b[r]
            if not is_zero(m) and (best is None or (not is_exact() and abs(m) > abs(best[0]))):
                best = (m, r, s)
                if is_exact():
                    break
        if best is not None and is_exact():
            break
    if best is None:
        raise TooManyCoincident("base points of the cross-ratio coincide")
    _, r, s = best
    alpha = x[r] * b[s] - x[s] * b[r]
    beta = a[r] * x[s] - a[s] * x[r]
    return alpha, beta


def cross_ratio(a: HomPoint, b: HomPoint, c: HomPoint, d: HomPoint) -> ProjParam:
    """CR(a, b; c, d) = lambda_c / lambda_d where x = a + lambda_x * b.

    Harmonic quadruples give -1; INFINITY is returned when lambda_d = 0 or
    lambda_c is infinite.
    """
    if not collinear(a, b, c, d):
        raise NotCollinear("cross-ratio needs four collinear points")
    if a == b:
        raise TooManyCoincident("cross-ratio needs a != b")
    ac, bc = _pair_coefficients(a, b, c)
    ad, bd = _pair_coefficients(a, b, d)
    num = bc * ad
    den = ac * bd
    if is_zero(num) and is_zero(den):
        raise TooManyCoincident("three of the four points coincide")
    if is_zero(den):
        return INFINITY
    if is_exact():
        return Fraction(num) / Fraction(den)
    return num / den


# --------------------------------------------------------------------------
# perspective collineations

class CollineationMap:
    """Projective transformation x -> M x of P^3."""

    __slots__ = ("matrix",)

    def __init__(self, matrix: Sequence[Sequence[Number]]):
        m = tuple(tuple(to_scalar(v) for v in row) for row in matrix)
        if len(m) != 4 or any(len(row) != 4 for row in m):
            raise GeometryError("collineation matrix must be 4x4")
        if rank(m) < 4:
            raise InvalidPerspectivity("singular collineation matrix")
        object.__setattr__(self, "matrix", m)

    def __setattr__(self, name, value):
        raise AttributeError("immutable")

    def __call__(self, x: HomPoint) -> HomPoint:
        return HomPoint([dot(row, x.coords) for row in self.matrix])

    def compose(self, other: "CollineationMap") -> "CollineationMap":
        """self o other."""
        a, b = self.matrix, other.matrix
        return CollineationMap(
            [[sum(a[i][k] * b[k][j] for k in range(4)) for j in range(4)] for i in range(4)]
        )


def apply(cmap: CollineationMap, x: HomPoint) -> HomPoint:
    return cmap(x)


def perspective_collineation(
    center: HomPoint, axis_plane: HomPlane, a0: HomPoint, b0: HomPoint
) -> CollineationMap:
    """Homology with the given center and fixed plane sending a0 to b0."""
    if incident(center, axis_plane):
        raise InvalidPerspectivity("center lies on the plane of perspectivity")
    if incident(a0, axis_plane) or incident(b0, axis_plane):
        raise InvalidPerspectivity("a0 and b0 must not lie on the plane of perspectivity")
    if a0 == center or b0 == center:
        raise InvalidPerspectivity("a0 and b0 must differ from the center")
    if not collinear(center, a0, b0):
        raise InvalidPerspectivity("center, a0, b0 are not collinear")
    # b0 ~ s*a0 + t*center;  M x = s(pi.a0) x + t(pi.x) center
    s, t = _pair_coefficients(a0, center, b0)
    pa = dot(axis_plane.coords, a0.coords)
    m = [
        [(s * pa if i == j else 0) + t * center[i] * axis_plane[j] for j in range(4)]
        for i in range(4)
    ]
    return CollineationMap(m)


def point_basis_of_plane(plane: HomPlane) -> list[HomPoint]:
    """Three points spanning the plane (deterministic)."""
    return [HomPoint(canonical(v)) for v in nullspace([plane.coords])]
