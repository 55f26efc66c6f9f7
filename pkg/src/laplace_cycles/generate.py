"""Seeded random generation of generic configurations.

The generator is Python's ``random.Random`` (MT19937, 32-bit words, seeded
from an arbitrary integer), so seeds reproduce across platforms.  All values
are small integers or small fractions; degenerate draws are rejected by the
callers.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, Optional

from .cycles import CycleSeed, free_slots
from .nets import DiscreteNet, NetWindow
from .plucker import PluckerLine, line_from_points, lines_meet
from .projective_core import HomPlane, HomPoint, collinear, rank


def make_rng(seed: int) -> random.Random:
    return random.Random(seed)


def random_vector(rng: random.Random, size: int = 4, bound: int = 9) -> list[int]:
    while True:
        v = [rng.randint(-bound, bound) for _ in range(size)]
        if any(v):
            return v


def random_point(rng: random.Random, bound: int = 9) -> HomPoint:
    return HomPoint(random_vector(rng, 4, bound))


def random_plane(rng: random.Random, bound: int = 9) -> HomPlane:
    return HomPlane(random_vector(rng, 4, bound))


def random_param(rng: random.Random, bound: int = 5) -> Fraction:
    while True:
        num = rng.randint(-bound, bound)
        if num:
            return Fraction(num, rng.randint(1, 3))


def random_line(rng: random.Random, bound: int = 9) -> PluckerLine:
    while True:
        a, b = random_point(rng, bound), random_point(rng, bound)
        if a != b:
            return line_from_points(a, b)


def random_skew_lines(rng: random.Random, n: int, bound: int = 9) -> list[PluckerLine]:
    lines: list[PluckerLine] = []
    while len(lines) < n:
        cand = random_line(rng, bound)
        if all(not lines_meet(cand, other) for other in lines):
            lines.append(cand)
    return lines


def random_point_on_line(rng: random.Random, line: PluckerLine, bound: int = 5) -> HomPoint:
    u, v = line.points()
    while True:
        s, t = rng.randint(-bound, bound), rng.randint(-bound, bound)
        if s or t:
            return HomPoint([s * a + t * b for a, b in zip(u.coords, v.coords)])


def random_plane_through_line(rng: random.Random, line: PluckerLine, bound: int = 5) -> HomPlane:
    u, v = line.planes()
    while True:
        s, t = rng.randint(-bound, bound), rng.randint(-bound, bound)
        if s or t:
            return HomPlane([s * a + t * b for a, b in zip(u.coords, v.coords)])


def random_collineation_matrix(rng: random.Random, bound: int = 3) -> list[list[int]]:
    while True:
        m = [[rng.randint(-bound, bound) for _ in range(4)] for _ in range(4)]
        if rank(m) == 4:
            return m


def random_regulus(rng: random.Random) -> Callable[[Fraction], PluckerLine]:
    """Generator map t -> line of a random projective image of x1 x2 = x0 x3."""
    m = random_collineation_matrix(rng)

    def image(x):
        return HomPoint([sum(m[i][k] * x[k] for k in range(4)) for i in range(4)])

    def generator(t) -> PluckerLine:
        t = Fraction(t)
        a = image([t.denominator, t.numerator, 0, 0])
        b = image([0, 0, t.denominator, t.numerator])
        return line_from_points(a, b)

    return generator


def random_cycle_seed(rng: random.Random, window: NetWindow) -> CycleSeed:
    while True:
        base = [random_point(rng) for _ in range(4)]
        if all(not collinear(base[a], base[b], base[c])
               for a in range(4) for b in range(a + 1, 4) for c in range(b + 1, 4)):
            break
    params = {key: random_param(rng) for key in free_slots(window)}
    return CycleSeed(base[0], base[1], base[2], base[3], params)


def random_conjugate_net(rng: random.Random, window: NetWindow, bound: int = 9,
                         generic: bool = True) -> DiscreteNet:
    """Random first row and column; every further vertex random in its face plane.

    With ``generic`` the draw is repeated until the net and both of its
    Laplace transforms are regular.
    """
    from .errors import GeometryError
    from .nets import is_regular, laplace

    while True:
        f = _conjugate_draw(rng, window, bound)
        if not generic:
            return f
        try:
            if is_regular(f).ok and all(is_regular(laplace(f, d)).ok for d in (1, 2)):
                return f
        except GeometryError:
            continue


def _conjugate_draw(rng: random.Random, window: NetWindow, bound: int) -> DiscreteNet:
    pts: dict = {}
    for i in range(window.i0, window.i1 + 1):
        pts[(i, window.j0)] = random_point(rng, bound)
    for j in range(window.j0 + 1, window.j1 + 1):
        pts[(window.i0, j)] = random_point(rng, bound)
    for i, j in window.faces():
        a, b, c = pts[(i, j)], pts[(i + 1, j)], pts[(i, j + 1)]
        while True:
            s, t, u = (rng.randint(-4, 4) for _ in range(3))
            if s and t and u:
                break
        pts[(i + 1, j + 1)] = HomPoint(
            [s * x + t * y + u * z for x, y, z in zip(b.coords, c.coords, a.coords)]
        )
    return DiscreteNet(window, pts)


def generic_congruences(cycle) -> bool:
    """Genericity of both diagonal congruences: the lines on each face and
    lines two steps apart along a row or column are pairwise skew.

    Whether the four lines of a face share a regulus is not examined.
    """
    from .cycles import diagonal_congruences

    for A in diagonal_congruences(cycle, check=False):
        for i, j in A.window.faces():
            lines = [A[(i, j)], A[(i + 1, j)], A[(i + 1, j + 1)], A[(i, j + 1)]]
            if any(lines_meet(lines[a], lines[b]) for a in range(4) for b in range(a + 1, 4)):
                return False
        for (i, j), line in A.items():
            for other in ((i + 2, j), (i, j + 2)):
                if other in A.window and lines_meet(line, A[other]):
                    return False
    return True


def generate_cycle(rng: random.Random, window: NetWindow, max_tries: int = 50,
                   on_reject: Optional[Callable[[Exception], None]] = None):
    """Face-by-face cycle from random parameters, rejecting degenerate draws.

    A draw is degenerate if a construction step fails or the diagonal
    congruences are not generic in the sense of :func:`generic_congruences`.
    """
    from .cycles import construct_cycle_pointwise, verify_cycle
    from .errors import GeometryError

    last: Optional[Exception] = None
    for _ in range(max_tries):
        seed = random_cycle_seed(rng, window)
        try:
            cycle = construct_cycle_pointwise(seed, window)
        except GeometryError as exc:
            last = exc
            if on_reject:
                on_reject(exc)
            continue
        rep = verify_cycle(cycle)
        if rep.ok and generic_congruences(cycle):
            return cycle
        if rep.ok:
            last = GeometryError("diagonal congruence is not generic")
        else:
            last = GeometryError(f"constructed cycle failed verification: {rep.failures[:3]}")
        if on_reject:
            on_reject(last)
    raise RetriesExhausted(f"no valid cycle after {max_tries} tries") from last


class RetriesExhausted(RuntimeError):
    pass
