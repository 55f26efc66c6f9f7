import json

import pytest

from laplace_cycles import io
from laplace_cycles.cli import main
from laplace_cycles.cycles import diagonal_congruences
from laplace_cycles.generate import make_rng, random_point_on_line, random_skew_lines
from laplace_cycles.nets import LineCongruence, NetWindow


@pytest.fixture(scope="module")
def files(tmp_path_factory):
    d = tmp_path_factory.mktemp("cli")
    assert main(["gen-cycle", "--seed", "7", "--window", "0,3,0,3", "-o", str(d / "c.json")]) == 0
    cycle = io.load(d / "c.json")
    K, _ = diagonal_congruences(cycle)
    io.save(K, d / "K.json")
    return d, cycle, K


def seeds_json(K, rng):
    return json.dumps([{"vertex": list(v), "point": [str(x) for x in random_point_on_line(rng, K[v]).coords]}
                       for v in [(0, 0), (1, 0), (0, 1), (1, 1)]])


def test_gen_cycle_deterministic(tmp_path):
    outs = []
    for name in ("a", "b"):
        path = tmp_path / f"{name}.json"
        assert main(["gen-cycle", "--seed", "11", "--window", "0,2,0,2", "-o", str(path)]) == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_verify_and_wtest(files, capsys):
    d, _, _ = files
    assert main(["verify", str(d / "c.json")]) == 0
    assert "cycle: clean" in capsys.readouterr().out
    assert main(["wtest", str(d / "c.json")]) == 0
    assert main(["wtest", str(d / "K.json")]) == 0


def test_wtest_failure(tmp_path, capsys):
    w = NetWindow(0, 1, 0, 1)
    A = LineCongruence(w, dict(zip(w, random_skew_lines(make_rng(3), 4))))
    io.save(A, tmp_path / "A.json")
    assert main(["wtest", str(tmp_path / "A.json")]) == 4
    assert "first failure: not-regulus at (0, 0)" in capsys.readouterr().out


def test_laplace_and_axis(files, tmp_path):
    d, cycle, K = files
    assert main(["laplace", "--dir", "1", str(d / "c.json"), "-o", str(tmp_path / "h.json")]) == 0
    h = io.load(tmp_path / "h.json")
    assert h == cycle.h.restrict(h.window)
    assert main(["axis", str(d / "c.json"), "-o", str(tmp_path / "a.json")]) == 0
    assert io.load(tmp_path / "a.json") == K.restrict(NetWindow(1, 2, 1, 2))
    assert main(["laplace", "--dir", "2", "--steps", "4", str(d / "c.json"), "-o", str(tmp_path / "x.json")]) == 3


def test_build_asym_and_audit(files, tmp_path, capsys):
    d, _, K = files
    rng = make_rng(8)
    for name in ("p1", "p2"):
        assert main(["build-asym", str(d / "K.json"), "--seed-points", seeds_json(K, rng),
                     "-o", str(tmp_path / f"{name}.json")]) == 0
    p1, p2 = str(tmp_path / "p1.json"), str(tmp_path / "p2.json")
    capsys.readouterr()
    assert main(["crossratio-audit", p1, p1, p2, p2, str(d / "K.json")]) == 0
    out = capsys.readouterr().out
    assert out.startswith("black: ") and "white: " in out


def test_build_asym_seed_file_and_parity(files, tmp_path, capsys):
    d, _, K = files
    seeds = tmp_path / "seeds.json"
    seeds.write_text(seeds_json(K, make_rng(9)))
    assert main(["build-asym", str(d / "K.json"), "--seed-points", str(seeds), "-o", str(tmp_path / "p.json")]) == 0
    bad = json.loads(seeds.read_text())
    bad[1]["vertex"] = [2, 0]
    assert main(["build-asym", str(d / "K.json"), "--seed-points", json.dumps(bad), "-o", str(tmp_path / "q.json")]) == 1
    assert "even-even" in capsys.readouterr().err


def test_axes_round_trip(files, tmp_path):
    d, cycle, _ = files
    ax, out = str(tmp_path / "ax.json"), str(tmp_path / "c2.json")
    assert main(["extract-axes", str(d / "c.json"), "--origin", "1", "1", "-o", ax]) == 0
    assert main(["cycle-from-axes", ax, "-o", out]) == 0
    assert io.load(out).f == cycle.f


def test_export_obj(files, tmp_path):
    d, _, _ = files
    out = tmp_path / "c.obj"
    assert main(["export-obj", str(d / "c.json"), "-o", str(out), "--clip-box=-5,5,-5,5,-5,5"]) == 0
    assert out.read_text().count("\no ") == 6


@pytest.mark.parametrize("argv", [
    [],
    ["gen-cycle", "--seed", "1", "-o", "x.json"],
    ["gen-cycle", "--seed", "1", "--window", "0,0,0,0", "-o", "x.json"],
    ["gen-cycle", "--seed", "1", "--window", "a,b", "-o", "x.json"],
    ["laplace", "--dir", "3", "x.json", "-o", "y.json"],
    ["gen-cycle", "--seed", "-1", "--window", "0,2,0,2", "-o", "x.json"],
    ["gen-cycle", "--seed", str(2**64), "--window", "0,2,0,2", "-o", "x.json"],
])
def test_usage_errors(argv, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    with pytest.raises(SystemExit) as exc:
        rc = main(argv)
        raise SystemExit(rc)
    assert exc.value.code == 1


def test_io_errors(tmp_path, capsys):
    assert main(["verify", str(tmp_path / "missing.json")]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"type": "cycle",\n  "f": ')
    assert main(["verify", str(bad)]) == 2
    assert "line 2" in capsys.readouterr().err
    bad.write_text('{"type": "point", "coords": ["1"]}')
    assert main(["verify", str(bad)]) == 2


def test_wrong_type_is_usage(files, tmp_path):
    d, _, _ = files
    assert main(["cycle-from-axes", str(d / "K.json"), "-o", str(tmp_path / "o.json")]) == 1


def test_float_backend(files, capsys):
    d, _, _ = files
    assert main(["--backend", "float", "verify", str(d / "c.json")]) == 0
