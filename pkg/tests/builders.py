"""Random configurations shared by the unit and acceptance tests."""

from laplace_cycles.cycles import diagonal_congruences
from laplace_cycles.generate import random_plane, random_point
from laplace_cycles.plucker import join_lines, line_from_points, lines_meet, meet_lines
from laplace_cycles.projective_core import (
    collinear,
    coplanar,
    incident,
    join_plane,
    meet_planes,
    perspective_collineation,
    pencil_point,
)
from laplace_cycles.errors import GeometryError

STAR = ((0, 0), (1, 0), (-1, 0), (0, 1), (0, -1))


def star_from_cycle(cycle, center):
    """Lines and points of K = f v g around ``center`` keyed by offset, plus f at (1, 1)."""
    K, _ = diagonal_congruences(cycle)
    ci, cj = center
    A = {d: K[(ci + d[0], cj + d[1])] for d in STAR}
    f = {d: cycle.f[(ci + d[0], cj + d[1])] for d in STAR}
    return A, f, cycle.f[(ci + 1, cj + 1)]


def _general_quad(rng):
    while True:
        a = [random_point(rng) for _ in range(4)]
        if not coplanar(*a) and not any(collinear(a[i], a[(i + 1) % 4], a[(i + 2) % 4]) for i in range(4)):
            return a


def edgewise_quadrilaterals(rng, perspective: bool):
    """Skew quadrilaterals a, b whose corresponding edges meet.

    With ``perspective`` b is the image of a under a random homology, so the
    edge meets are coplanar; otherwise b is built edge by edge and is
    generically not in perspective.
    """
    while True:
        a = _general_quad(rng)
        try:
            if perspective:
                center, phi = random_point(rng), random_plane(rng)
                if incident(center, phi) or any(incident(x, phi) for x in a) or center in a:
                    continue
                b0 = pencil_point(a[0], center, rng.randint(1, 5))
                cmap = perspective_collineation(center, phi, a[0], b0)
                b = [cmap(x) for x in a]
            else:
                b0 = random_point(rng)
                b1 = meet_planes(join_plane(a[0], a[1], b0), random_plane(rng), random_plane(rng))
                b2 = meet_planes(join_plane(a[1], a[2], b1), random_plane(rng), random_plane(rng))
                b3 = meet_planes(join_plane(a[2], a[3], b2), join_plane(a[3], a[0], b0), random_plane(rng))
                b = [b0, b1, b2, b3]
            if len(set(a + b)) < 8 or coplanar(*b):
                continue
            edges = [(line_from_points(a[i], a[(i + 1) % 4]), line_from_points(b[i], b[(i + 1) % 4]))
                     for i in range(4)]
            if any(la == lb or not lines_meet(la, lb) for la, lb in edges):
                continue
            pts = [meet_lines(*e) for e in edges]
            planes = [join_lines(*e) for e in edges]
            if any(pts[i] == pts[(i + 1) % 4] or planes[i] == planes[(i + 1) % 4] for i in range(4)):
                continue
        except GeometryError:
            continue
        return a, b


def moebius_seven(rng):
    """Quadruples a, b satisfying all incidences except possibly a3 in span(b0, b1, b2)."""
    while True:
        a = _general_quad(rng)
        alpha = [join_plane(*[a[j] for j in range(4) if j != i]) for i in range(4)]
        try:
            b0 = meet_planes(alpha[0], random_plane(rng), random_plane(rng))
            b1 = meet_planes(alpha[1], random_plane(rng), random_plane(rng))
            b3 = meet_planes(alpha[3], join_plane(b0, b1, a[2]), random_plane(rng))
            b2 = meet_planes(alpha[2], join_plane(b0, b3, a[1]), join_plane(b1, b3, a[0]))
        except GeometryError:
            continue
        b = [b0, b1, b2, b3]
        if len(set(a + b)) == 8 and not coplanar(*b):
            return a, b


def rectangle_decomposes(A, x_first, x_second) -> bool:
    """Both rectangle decompositions of projections around the center line A[(0, 0)]."""
    from laplace_cycles.plucker import project_between_lines as proj

    c = A[(0, 0)]
    direct = proj(c, A[(-1, 0)], A[(1, 0)], x_first)
    via = proj(c, A[(0, 1)], A[(1, 0)], proj(c, A[(-1, 0)], A[(0, 1)], x_first))
    direct2 = proj(c, A[(0, -1)], A[(0, 1)], x_second)
    via2 = proj(c, A[(1, 0)], A[(0, 1)], proj(c, A[(0, -1)], A[(1, 0)], x_second))
    return direct == via and direct2 == via2
