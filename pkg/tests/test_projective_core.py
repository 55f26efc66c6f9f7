from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from laplace_cycles.errors import (
    DegenerateMeet,
    DegenerateSpan,
    InvalidPerspectivity,
    NotCollinear,
    TooManyCoincident,
)
from laplace_cycles.generate import make_rng, random_collineation_matrix, random_param, random_point
from laplace_cycles.projective_core import (
    INFINITY,
    CollineationMap,
    HomPlane,
    HomPoint,
    apply,
    backend,
    canonical,
    collinear,
    combine,
    coplanar,
    cross_ratio,
    incident,
    join_plane,
    meet_planes,
    pencil_point,
    perspective_collineation,
)

coord = st.integers(-20, 20)
vec4 = st.tuples(coord, coord, coord, coord).filter(any)


class TestCanonicalForm:
    def test_scale_invariance(self):
        assert HomPoint(2, 4, -6, 0) == HomPoint(-1, -2, 3, 0)
        assert HomPoint(Fraction(1, 2), Fraction(1, 3), 0, 0).coords == (3, 2, 0, 0)

    def test_first_nonzero_positive(self):
        assert HomPoint(0, -3, 6, 9).coords == (0, 1, -2, -3)

    def test_zero_vector_rejected(self):
        with pytest.raises(ValueError):
            HomPoint(0, 0, 0, 0)

    @given(vec4, st.integers(1, 50), st.sampled_from([1, -1]))
    def test_idempotent_and_scale_free(self, v, k, sign):
        c = canonical(v)
        assert canonical(c) == c
        assert HomPoint(v) == HomPoint([sign * k * x for x in v])

    def test_immutable(self):
        p = HomPoint(1, 0, 0, 0)
        with pytest.raises(AttributeError):
            p.coords = (0, 1, 0, 0)


class TestJoinMeet:
    def test_join_coordinate_plane(self):
        assert join_plane(HomPoint(1, 0, 0, 0), HomPoint(0, 1, 0, 0), HomPoint(0, 0, 1, 0)) == HomPlane(0, 0, 0, 1)

    def test_join_affine_points(self):
        plane = join_plane(HomPoint(1, 0, 0, 0), HomPoint(1, 1, 0, 0), HomPoint(1, 0, 1, 0))
        assert plane == HomPlane(0, 0, 0, 1)
        for p in [(1, 0, 0, 0), (1, 1, 0, 0), (1, 0, 1, 0)]:
            assert incident(HomPoint(p), plane)

    def test_join_degenerate(self):
        with pytest.raises(DegenerateSpan):
            join_plane(HomPoint(1, 0, 0, 0), HomPoint(2, 0, 0, 0), HomPoint(0, 1, 0, 0))

    def test_meet_coordinate_planes(self):
        assert meet_planes(HomPlane(1, 0, 0, 0), HomPlane(0, 1, 0, 0), HomPlane(0, 0, 1, 0)) == HomPoint(0, 0, 0, 1)

    def test_meet_pencil_is_degenerate(self):
        with pytest.raises(DegenerateMeet):
            meet_planes(HomPlane(1, 0, 0, 0), HomPlane(0, 1, 0, 0), HomPlane(1, 1, 0, 0))

    def test_meet_hand_solved(self):
        assert meet_planes(HomPlane(0, 0, 0, 1), HomPlane(0, 0, 1, 0), HomPlane(1, -1, 0, 0)) == HomPoint(1, 1, 0, 0)

    @settings(max_examples=60)
    @given(vec4, vec4, vec4)
    def test_duality_round_trip(self, a, b, c):
        planes = [HomPlane(a), HomPlane(b), HomPlane(c)]
        try:
            x = meet_planes(*planes)
        except DegenerateMeet:
            return
        assert all(p.contains(x) for p in planes)
        # joining three points of a plane recovers it
        pts = [HomPoint(v) for v in (a, b, c)]
        try:
            pi = join_plane(*pts)
        except DegenerateSpan:
            return
        assert all(pi.contains(p) for p in pts)


class TestPredicates:
    def test_collinear(self):
        assert collinear(HomPoint(1, 0, 0, 0), HomPoint(0, 1, 0, 0), HomPoint(1, 1, 0, 0))

    def test_coplanar_true(self):
        pts = [HomPoint(v) for v in [(1, 0, 0, 0), (1, 1, 0, 1), (1, 0, 1, 1), (1, 1, 1, 2)]]
        assert coplanar(*pts)

    def test_coplanar_false(self):
        pts = [HomPoint(v) for v in [(1, 0, 0, 0), (1, 1, 0, 0), (1, 0, 1, 0), (1, 1, 1, 1)]]
        assert not coplanar(*pts)


def _line_point(a, b, s, t):
    return combine(a, b, s, t)


class TestCrossRatio:
    a, b = HomPoint(1, 0, 0, 0), HomPoint(0, 1, 0, 0)

    def test_harmonic(self):
        # affine parameters 0, infinity, 1, -1
        assert cross_ratio(self.a, self.b, HomPoint(1, 1, 0, 0), HomPoint(1, -1, 0, 0)) == -1

    def test_identity_case(self):
        c = HomPoint(1, 3, 0, 0)
        assert cross_ratio(self.a, self.b, c, c) == 1

    def test_pole(self):
        assert cross_ratio(self.a, self.b, self.b, HomPoint(1, 2, 0, 0)) is INFINITY

    def test_not_collinear(self):
        with pytest.raises(NotCollinear):
            cross_ratio(self.a, self.b, HomPoint(0, 0, 1, 0), HomPoint(1, 1, 0, 0))

    def test_too_many_coincident(self):
        with pytest.raises(TooManyCoincident):
            cross_ratio(self.a, self.a, self.b, HomPoint(1, 1, 0, 0))
        with pytest.raises(TooManyCoincident):
            cross_ratio(self.a, self.b, self.a, self.a)

    def test_symmetry(self):
        rng = make_rng(3)
        for _ in range(50):
            a, b = random_point(rng), random_point(rng)
            if a == b:
                continue
            c = _line_point(a, b, 1, random_param(rng))
            d = _line_point(a, b, 1, random_param(rng))
            cr, rc = cross_ratio(a, b, c, d), cross_ratio(a, b, d, c)
            assert cr * rc == 1

    def test_symmetry_infinity_zero(self):
        a, b = self.a, self.b
        d = HomPoint(1, 2, 0, 0)
        assert cross_ratio(a, b, b, d) is INFINITY
        assert cross_ratio(a, b, d, b) == 0

    def test_projective_invariance(self):
        rng = make_rng(11)
        for _ in range(100):
            a, b = random_point(rng), random_point(rng)
            if a == b:
                continue
            c = _line_point(a, b, 1, random_param(rng))
            d = _line_point(a, b, 1, random_param(rng))
            sigma = CollineationMap(random_collineation_matrix(rng))
            assert cross_ratio(*(sigma(x) for x in (a, b, c, d))) == cross_ratio(a, b, c, d)


class TestPencil:
    def test_pencil_infinity(self):
        u, v = HomPoint(1, 0, 0, 0), HomPoint(0, 1, 0, 0)
        assert pencil_point(u, v, INFINITY) == v
        assert pencil_point(u, v, Fraction(0)) == u
        assert pencil_point(u, v, Fraction(2, 3)) == HomPoint(3, 2, 0, 0)


class TestPerspectiveCollineation:
    center = HomPoint(0, 0, 0, 1)
    axis = HomPlane(0, 0, 0, 1)

    def test_identity_when_b_equals_a(self):
        a0 = HomPoint(1, 2, 3, 4)
        m = perspective_collineation(self.center, self.axis, a0, a0)
        rng = make_rng(5)
        for _ in range(20):
            x = random_point(rng)
            assert apply(m, x) == x

    def test_fixes_axis_plane_and_center(self):
        a0, b0 = HomPoint(1, 2, 3, 4), HomPoint(1, 2, 3, 7)
        m = perspective_collineation(self.center, self.axis, a0, b0)
        assert m(a0) == b0
        assert m(self.center) == self.center
        for p in [(1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 1, 0), (3, -2, 5, 0)]:
            assert m(HomPoint(p)) == HomPoint(p)

    def test_center_on_axis_rejected(self):
        with pytest.raises(InvalidPerspectivity):
            perspective_collineation(HomPoint(1, 0, 0, 0), self.axis, HomPoint(1, 0, 0, 1), HomPoint(1, 0, 0, 2))

    def test_non_collinear_rejected(self):
        with pytest.raises(InvalidPerspectivity):
            perspective_collineation(self.center, self.axis, HomPoint(1, 2, 3, 4), HomPoint(2, 2, 3, 4))


class TestFloatBackend:
    def test_switch_is_scoped(self):
        with backend("float", 1e-9):
            p = HomPoint(1, 2, 3, 4)
            assert isinstance(p.coords[0], float)
            assert collinear(HomPoint(1, 0, 0, 0), HomPoint(0, 1, 0, 0), HomPoint(1, 1 + 1e-12, 0, 0))
        assert HomPoint(1, 2, 3, 4).coords == (1, 2, 3, 4)
        assert not collinear(HomPoint(1, 0, 0, 0), HomPoint(0, 1, 0, 0), HomPoint(1, 1, 1, 0))
