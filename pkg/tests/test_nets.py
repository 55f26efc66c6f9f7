import pytest

from laplace_cycles.errors import (
    DegenerateSpan,
    NotAnAnet,
    NotConjugate,
    OutOfWindow,
    WindowExhausted,
    WindowTooSmall,
)
from laplace_cycles.generate import make_rng, random_conjugate_net, random_point
from laplace_cycles.nets import (
    DiscreteNet,
    NetWindow,
    asymptotically_related,
    axis_congruence,
    is_anet,
    is_conjugate,
    is_period_four,
    is_regular,
    laplace,
    laplace_sequence,
    osculating_plane,
    tangent_plane,
)
from laplace_cycles.projective_core import HomPoint, join_plane

W3 = NetWindow(0, 3, 0, 3)


def net(fn, window=W3):
    return DiscreteNet.from_function(window, lambda i, j: HomPoint(fn(i, j)))


AFFINE_GRID = net(lambda i, j: (1, i, j, i + j))
SADDLE = net(lambda i, j: (1, i, j, i * j))


class TestWindow:
    def test_membership_and_order(self):
        w = NetWindow(0, 1, 5, 6)
        assert (1, 6) in w and (2, 6) not in w
        assert list(w) == [(0, 5), (1, 5), (0, 6), (1, 6)]

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            NetWindow(1, 0, 0, 0)

    def test_out_of_window(self):
        with pytest.raises(OutOfWindow):
            AFFINE_GRID[(4, 0)]


class TestConjugacy:
    def test_affine_grid_is_conjugate(self):
        assert is_conjugate(AFFINE_GRID).ok

    def test_saddle_fails_at_origin(self):
        rep = is_conjugate(SADDLE)
        assert (0, 0) in rep.indices

    def test_thin_window(self):
        with pytest.raises(WindowTooSmall):
            is_conjugate(net(lambda i, j: (1, i, j, 0), NetWindow(0, 0, 0, 3)))

    def test_random_conjugate_nets(self):
        rng = make_rng(1)
        for _ in range(10):
            assert is_conjugate(random_conjugate_net(rng, W3)).ok


class TestRegularity:
    def test_affine_grid_has_collinear_rows(self):
        # consecutive points of a row of an affine grid are collinear
        rep = is_regular(AFFINE_GRID)
        assert not rep.ok
        assert any(f.kind == "collinear-osculating-1" for f in rep.failures)

    def test_collinear_triple_flagged(self):
        rng = make_rng(2)
        f = random_conjugate_net(rng, W3)
        a, b = f[(0, 1)], f[(1, 1)]
        bad = f.replace((2, 1), HomPoint([2 * y - x for x, y in zip(a.coords, b.coords)]))
        assert (1, 1) in is_regular(bad).indices

    def test_planar_but_regular(self):
        # a generic net inside the plane x3 = 0
        rng = make_rng(3)
        pts = {}
        for ij in W3:
            p = random_point(rng)
            pts[ij] = HomPoint(p[0], p[1], p[2], 0)
        f = DiscreteNet(W3, pts)
        assert is_regular(f).ok


class TestOsculatingPlanes:
    def test_generic(self):
        f = random_conjugate_net(make_rng(4), W3)
        pl = osculating_plane(f, 1, 1, 1)
        assert pl == join_plane(f[(0, 1)], f[(1, 1)], f[(2, 1)])

    def test_collinear_triple(self):
        with pytest.raises(DegenerateSpan):
            osculating_plane(AFFINE_GRID, 1, 1, 1)

    def test_out_of_window(self):
        with pytest.raises(OutOfWindow):
            osculating_plane(AFFINE_GRID, 1, 0, 1)


class TestLaplace:
    def test_affine_grid_transform_is_ideal(self):
        assert laplace(AFFINE_GRID, 1)[(0, 0)] == HomPoint(0, 1, 0, 1)

    def test_planar_translation_net_constant_transform(self):
        f = net(lambda i, j: (1, i, j, 0))
        h = laplace(f, 1)
        assert {p for _, p in h.items()} == {HomPoint(0, 1, 0, 0)}

    def test_window_shrinks_by_one(self):
        assert laplace(AFFINE_GRID, 2).window == NetWindow(0, 2, 0, 2)

    def test_not_conjugate(self):
        with pytest.raises(NotConjugate):
            laplace(SADDLE, 1)

    def test_mixed_transforms_shift(self):
        rng = make_rng(5)
        for _ in range(10):
            f = random_conjugate_net(rng, W3)
            a = laplace(laplace(f, 1), 2)
            b = laplace(laplace(f, 2), 1)
            assert all(a[(i, j)] == b[(i, j)] == f[(i + 1, j + 1)] for i, j in a.window)

    def test_output_lies_in_osculating_planes(self):
        f = random_conjugate_net(make_rng(6), NetWindow(0, 4, 0, 4))
        for k in (1, 2):
            h = laplace(f, k)
            for i, j in NetWindow(0, 2, 0, 2):
                pl = osculating_plane(f, k, i + 1, j + 1)
                quad = [(i, j), (i + 1, j), (i, j + 1), (i + 1, j + 1)]
                assert all(pl.contains(h[ij]) for ij in quad)

    def test_sequence(self):
        f = random_conjugate_net(make_rng(7), W3)
        assert laplace_sequence(f, 1, 0) == f
        assert laplace_sequence(f, 2, 2) == laplace(laplace(f, 2), 2)
        with pytest.raises(WindowExhausted):
            laplace_sequence(f, 1, 4)


class TestPeriodFour:
    def test_affine_grid(self):
        assert not is_period_four(AFFINE_GRID)

    def test_generic(self):
        rng = make_rng(8)
        assert not any(is_period_four(random_conjugate_net(rng, W3)) for _ in range(5))

    def test_cycle_net_and_perturbation(self, cycle5):
        f = cycle5.f
        assert is_period_four(f)
        # a generic move of one interior vertex breaks it
        bumped = f.replace((2, 2), HomPoint([c + d for c, d in zip(f[(2, 2)].coords, (1, 2, 3, 4))]))
        assert not is_period_four(bumped)

    def test_too_small(self):
        with pytest.raises(WindowTooSmall):
            is_period_four(net(lambda i, j: (1, i, j, i + j), NetWindow(0, 1, 0, 5)))


class TestAsymptotic:
    def test_generic_net_not_anet(self):
        f = random_conjugate_net(make_rng(9), W3)
        assert not is_anet(f)
        with pytest.raises(NotAnAnet):
            tangent_plane(f, 1, 1)

    def test_axis_lines_in_both_planes(self, cycle5):
        A = axis_congruence(cycle5.f)
        for (i, j), line in A.items():
            assert line.lies_in(osculating_plane(cycle5.f, 1, i, j))
            assert line.lies_in(osculating_plane(cycle5.f, 2, i, j))

    def test_opposite_nets(self, cycle5):
        assert asymptotically_related(cycle5.f, cycle5.g)
        assert axis_congruence(cycle5.f) == axis_congruence(cycle5.g)

    def test_self_relation_fails_for_non_anet(self, cycle5):
        assert not asymptotically_related(cycle5.f, cycle5.f)
