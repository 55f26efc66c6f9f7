"""Wavefront OBJ export of nets (quad meshes) and congruences (clipped segments)."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .cycles import LaplaceCycle, diagonal_congruences
from .errors import IdealPoint
from .nets import DiscreteNet, LineCongruence
from .plucker import PluckerLine

Box = tuple[float, float, float, float, float, float]  # xmin, xmax, ymin, ymax, zmin, zmax


def affine(coords: Sequence, chart: int = 3, vertex=None) -> tuple[float, float, float]:
    w = coords[chart]
    if w == 0:
        raise IdealPoint(vertex, chart)
    if isinstance(w, float):
        return tuple(c / w for k, c in enumerate(coords) if k != chart)
    return tuple(float(Fraction(c) / w) for k, c in enumerate(coords) if k != chart)


def _fmt(x: float) -> str:
    s = f"{x:.12g}"
    return "0" if s == "-0" else s


def _line_direction(line: PluckerLine, chart: int, vertex):
    """Affine base point and direction of a line not in the ideal plane."""
    u, v = line.points()
    if u[chart] == 0 and v[chart] == 0:
        raise IdealPoint(vertex, chart)
    if u[chart] == 0:
        u, v = v, u
    base = affine(u.coords, chart)
    if v[chart] == 0:
        direction = tuple(float(c) for k, c in enumerate(v.coords) if k != chart)
    else:
        other = affine(v.coords, chart)
        direction = tuple(b - a for a, b in zip(base, other))
    return base, direction


def clip_line(base, direction, box: Box) -> Optional[tuple[tuple, tuple]]:
    """Liang-Barsky clipping of the infinite line base + t*direction to the box."""
    lo, hi = float("-inf"), float("inf")
    for axis in range(3):
        bmin, bmax = box[2 * axis], box[2 * axis + 1]
        p, d = base[axis], direction[axis]
        if d == 0:
            if p < bmin or p > bmax:
                return None
            continue
        t1, t2 = (bmin - p) / d, (bmax - p) / d
        if t1 > t2:
            t1, t2 = t2, t1
        lo, hi = max(lo, t1), min(hi, t2)
    if lo > hi or lo == float("-inf"):
        return None
    a = tuple(b + lo * d for b, d in zip(base, direction))
    b = tuple(b + hi * d for b, d in zip(base, direction))
    return a, b


def bounding_box(points: Iterable[tuple], margin: float = 0.1) -> Box:
    pts = list(points)
    if not pts:
        return (-1.0, 1.0, -1.0, 1.0, -1.0, 1.0)
    out = []
    for axis in range(3):
        vals = [p[axis] for p in pts]
        lo, hi = min(vals), max(vals)
        pad = (hi - lo) * margin or 1.0
        out.extend((lo - pad, hi + pad))
    return tuple(out)


class ObjWriter:
    def __init__(self):
        self.lines: list[str] = []
        self.count = 0

    def vertex(self, p) -> int:
        self.count += 1
        self.lines.append("v " + " ".join(_fmt(c) for c in p))
        return self.count

    def mesh(self, name: str, net: DiscreteNet, chart: int) -> None:
        self.lines.append(f"o {name}")
        ids = {ij: self.vertex(affine(net[ij].coords, chart, ij)) for ij in net.window}
        for i, j in net.window.faces():
            quad = (ids[(i, j)], ids[(i + 1, j)], ids[(i + 1, j + 1)], ids[(i, j + 1)])
            self.lines.append("f " + " ".join(map(str, quad)))

    def segments(self, name: str, cong: LineCongruence, chart: int, box: Box) -> None:
        self.lines.append(f"o {name}")
        for ij in cong.window:
            line = cong[ij]
            if line is None:
                continue
            seg = clip_line(*_line_direction(line, chart, ij), box)
            if seg is None:
                continue
            a, b = self.vertex(seg[0]), self.vertex(seg[1])
            self.lines.append(f"l {a} {b}")

    def text(self) -> str:
        return "\n".join(self.lines) + "\n"


def export_obj(obj, chart: int = 3, box: Optional[Box] = None) -> str:
    """OBJ text for a cycle (four meshes, two line sets), a net or a congruence."""
    if not 0 <= chart <= 3:
        raise ValueError("chart must be 0, 1, 2 or 3")
    w = ObjWriter()
    w.lines.append(f"# chart x{chart} = 1")
    if isinstance(obj, LaplaceCycle):
        nets = [(n, obj.net(n)) for n in ("f", "h", "g", "k")]
        congs = list(zip(("K", "L"), diagonal_congruences(obj, check=False)))
    elif isinstance(obj, DiscreteNet):
        nets, congs = [("f", obj)], []
    elif isinstance(obj, LineCongruence):
        nets, congs = [], [("A", obj)]
    else:
        raise TypeError(f"cannot export {type(obj).__name__}")
    if box is None:
        pts = [affine(net[ij].coords, chart, ij) for _, net in nets for ij in net.window]
        if not pts:
            for _, cong in congs:
                for ij, line in cong.items():
                    if line is not None:
                        pts.extend(affine(p.coords, chart) for p in line.points() if p[chart] != 0)
        box = bounding_box(pts)
    for name, net in nets:
        w.mesh(name, net, chart)
    for name, cong in congs:
        w.segments(name, cong, chart, box)
    return w.text()
