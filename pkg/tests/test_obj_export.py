import pytest

from laplace_cycles.cycles import diagonal_congruences
from laplace_cycles.errors import IdealPoint
from laplace_cycles.nets import DiscreteNet, NetWindow
from laplace_cycles.obj_export import affine, clip_line, export_obj
from laplace_cycles.projective_core import HomPoint


def objects(text):
    return [ln.split()[1] for ln in text.splitlines() if ln.startswith("o ")]


def test_cycle_export(cycle5):
    text = export_obj(cycle5)
    assert objects(text) == ["f", "h", "g", "k", "K", "L"]
    faces = [ln for ln in text.splitlines() if ln.startswith("f ")]
    assert len(faces) == sum(len(list(cycle5.net(n).window.faces())) for n in "fhgk")
    assert any(ln.startswith("l ") for ln in text.splitlines())


def test_indices_valid(cycle5):
    text = export_obj(cycle5)
    nverts = sum(ln.startswith("v ") for ln in text.splitlines())
    for ln in text.splitlines():
        if ln[:2] in ("f ", "l "):
            assert all(1 <= int(x) <= nverts for x in ln.split()[1:])


def test_congruence_alone(cycle5):
    K, _ = diagonal_congruences(cycle5)
    assert objects(export_obj(K)) == ["A"]


def test_ideal_point():
    w = NetWindow(0, 1, 0, 1)
    f = DiscreteNet(w, {(0, 0): HomPoint([1, 0, 0, 1]), (1, 0): HomPoint([1, 0, 0, 0]),
                        (0, 1): HomPoint([1, 1, 0, 1]), (1, 1): HomPoint([1, 1, 1, 1])})
    with pytest.raises(IdealPoint) as exc:
        export_obj(f)
    assert exc.value.vertex == (1, 0)
    assert objects(export_obj(f, chart=0)) == ["f"]


def test_chart_override():
    assert affine([2, 4, 6, 2]) == (1.0, 2.0, 3.0)
    assert affine([2, 4, 6, 2], chart=0) == (2.0, 3.0, 1.0)
    with pytest.raises(ValueError):
        export_obj(DiscreteNet(NetWindow(0, 0, 0, 0), {(0, 0): HomPoint([1, 1, 1, 1])}), chart=4)


def test_clipping():
    box = (-1, 1, -1, 1, -1, 1)
    seg = clip_line((0, 0, 0), (1, 0, 0), box)
    assert seg == ((-1, 0, 0), (1, 0, 0))
    assert clip_line((0, 5, 0), (1, 0, 0), box) is None
