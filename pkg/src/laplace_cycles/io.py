"""JSON persistence for every data type of the package.

Scalars are written as strings ``"p"`` or ``"p/q"`` so files stay exact.
Output is canonical: sorted keys, fixed separators, row-major vertex order
(``j`` outer, ``i`` inner), trailing newline.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .cycles import Alignment, AxesData, LaplaceCycle
from .nets import DiscreteNet, Failure, LineCongruence, NetWindow, Report
from .plucker import PluckerLine, Quadric
from .projective_core import INFINITY, HomPlane, HomPoint


class FormatError(ValueError):
    """Input parsed as JSON but does not match the expected schema."""


@dataclass(frozen=True)
class NetPair:
    """Two nets on one congruence, e.g. an asymptotically related pair."""

    f: DiscreteNet
    g: DiscreteNet


def rational_to_str(x) -> str:
    q = Fraction(x)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def rational_from(v) -> Fraction:
    if isinstance(v, bool) or not isinstance(v, (str, int)):
        raise FormatError(f"expected a rational string, got {v!r}")
    try:
        return Fraction(v)
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"malformed rational {v!r}") from None


def _vec(v) -> list[str]:
    return [rational_to_str(x) for x in v]


def _parse_vec(v, n: int) -> list[Fraction]:
    if not isinstance(v, list) or len(v) != n:
        raise FormatError(f"expected a list of {n} rationals, got {v!r}")
    return [rational_from(x) for x in v]


def param_to_json(lam):
    return "inf" if lam is INFINITY else rational_to_str(lam)


def param_from_json(v):
    return INFINITY if v == "inf" else rational_from(v)


def window_to_json(w: NetWindow) -> dict:
    return {"i0": w.i0, "i1": w.i1, "j0": w.j0, "j1": w.j1}


def window_from_json(d) -> NetWindow:
    try:
        vals = [d[k] for k in ("i0", "i1", "j0", "j1")]
    except (KeyError, TypeError):
        raise FormatError("window needs integer keys i0, i1, j0, j1") from None
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in vals):
        raise FormatError("window bounds must be integers")
    return NetWindow(*vals)


def _need(d, key):
    if not isinstance(d, dict) or key not in d:
        raise FormatError(f"missing key {key!r}")
    return d[key]


def _check_type(d, expected: str) -> None:
    if _need(d, "type") != expected:
        raise FormatError(f"expected type {expected!r}, got {d.get('type')!r}")


# --------------------------------------------------------------------------
# encoders

def to_json(obj) -> dict:
    if isinstance(obj, HomPoint):
        return {"type": "point", "coords": _vec(obj.coords)}
    if isinstance(obj, HomPlane):
        return {"type": "plane", "coords": _vec(obj.coords)}
    if isinstance(obj, PluckerLine):
        return {"type": "line", "plucker": _vec(obj.p)}
    if isinstance(obj, Quadric):
        return {"type": "quadric", "coeffs": _vec(obj.coeffs)}
    if isinstance(obj, DiscreteNet):
        return {
            "type": "net",
            "window": window_to_json(obj.window),
            "points": [_vec(obj[ij].coords) for ij in obj.window],
        }
    if isinstance(obj, LineCongruence):
        return {
            "type": "congruence",
            "window": window_to_json(obj.window),
            "lines": [None if obj[ij] is None else _vec(obj[ij].p) for ij in obj.window],
        }
    if isinstance(obj, LaplaceCycle):
        return {
            "type": "cycle",
            "f": to_json(obj.f),
            "h": to_json(obj.h),
            "g": to_json(obj.g),
            "k": to_json(obj.k),
            "alignments": {
                name: {"source": al.source, "ops": list(al.ops), "shift": list(al.shift)}
                for name, al in sorted(obj.alignments.items())
            },
        }
    if isinstance(obj, AxesData):
        return {
            "type": "axes",
            "window": window_to_json(obj.window),
            "origin": list(obj.origin),
            "f_row": [_vec(obj.f_row[i].coords) for i in sorted(obj.f_row)],
            "f_col": [_vec(obj.f_col[j].coords) for j in sorted(obj.f_col)],
            "A_row": [_vec(obj.A_row[i].p) for i in sorted(obj.A_row)],
            "A_col": [_vec(obj.A_col[j].p) for j in sorted(obj.A_col)],
            "f11": _vec(obj.f11.coords),
        }
    if isinstance(obj, NetPair):
        return {"type": "pair", "f": to_json(obj.f), "g": to_json(obj.g)}
    if isinstance(obj, Report):
        return {
            "type": "report",
            "ok": obj.ok,
            "checked": obj.checked,
            "failures": [
                {"kind": fl.kind, "index": list(fl.index), "detail": fl.detail} for fl in obj.failures
            ],
        }
    raise TypeError(f"cannot serialize {type(obj).__name__}")


# --------------------------------------------------------------------------
# decoders

def _net(d) -> DiscreteNet:
    _check_type(d, "net")
    w = window_from_json(_need(d, "window"))
    pts = _need(d, "points")
    idx = list(w)
    if not isinstance(pts, list) or len(pts) != len(idx):
        raise FormatError(f"net needs {len(idx)} points")
    return DiscreteNet(w, {ij: HomPoint(_parse_vec(p, 4)) for ij, p in zip(idx, pts)})


def _congruence(d) -> LineCongruence:
    _check_type(d, "congruence")
    w = window_from_json(_need(d, "window"))
    lines = _need(d, "lines")
    idx = list(w)
    if not isinstance(lines, list) or len(lines) != len(idx):
        raise FormatError(f"congruence needs {len(idx)} entries")
    return LineCongruence(w, {
        ij: None if ln is None else PluckerLine(_parse_vec(ln, 6)) for ij, ln in zip(idx, lines)
    })


def _cycle(d) -> LaplaceCycle:
    _check_type(d, "cycle")
    nets = {n: _net(_need(d, n)) for n in ("f", "h", "g", "k")}
    als = {}
    for name, a in _need(d, "alignments").items():
        try:
            als[name] = Alignment(a["source"], tuple(a["ops"]), tuple(a["shift"]))
        except (KeyError, TypeError):
            raise FormatError(f"malformed alignment for {name!r}") from None
    return LaplaceCycle(alignments=als, **nets)


def _axes(d) -> AxesData:
    _check_type(d, "axes")
    w = window_from_json(_need(d, "window"))
    origin = _need(d, "origin")
    if not (isinstance(origin, list) and len(origin) == 2 and all(isinstance(v, int) for v in origin)):
        raise FormatError("origin must be two integers")
    rows = range(w.i0, w.i1 + 1)
    cols = range(w.j0, w.j1 + 1)

    def seq(key, n, rng, cls):
        vals = _need(d, key)
        if not isinstance(vals, list) or len(vals) != len(rng):
            raise FormatError(f"{key} needs {len(rng)} entries")
        return {t: cls(_parse_vec(v, n)) for t, v in zip(rng, vals)}

    return AxesData(
        window=w,
        origin=(origin[0], origin[1]),
        f_row=seq("f_row", 4, rows, HomPoint),
        f_col=seq("f_col", 4, cols, HomPoint),
        A_row=seq("A_row", 6, rows, PluckerLine),
        A_col=seq("A_col", 6, cols, PluckerLine),
        f11=HomPoint(_parse_vec(_need(d, "f11"), 4)),
    )


def _report(d) -> Report:
    _check_type(d, "report")
    rep = Report(checked=_need(d, "checked"))
    for fl in _need(d, "failures"):
        rep.failures.append(Failure(fl["kind"], tuple(fl["index"]), fl.get("detail", "")))
    return rep


_DECODERS = {
    "point": lambda d: HomPoint(_parse_vec(_need(d, "coords"), 4)),
    "plane": lambda d: HomPlane(_parse_vec(_need(d, "coords"), 4)),
    "line": lambda d: PluckerLine(_parse_vec(_need(d, "plucker"), 6)),
    "quadric": lambda d: Quadric(_parse_vec(_need(d, "coeffs"), 10)),
    "net": _net,
    "congruence": _congruence,
    "cycle": _cycle,
    "axes": _axes,
    "report": _report,
    "pair": lambda d: NetPair(_net(_need(d, "f")), _net(_need(d, "g"))),
}


def from_json(d) -> Any:
    kind = _need(d, "type")
    if kind not in _DECODERS:
        raise FormatError(f"unknown type {kind!r}")
    return _DECODERS[kind](d)


def dumps(obj) -> str:
    data = obj if isinstance(obj, dict) else to_json(obj)
    return json.dumps(data, sort_keys=True, indent=1, separators=(",", ": ")) + "\n"


def loads(text: str) -> Any:
    """Parse text; ``json.JSONDecodeError`` carries line and column on bad syntax."""
    return from_json(json.loads(text))


def save(obj, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps(obj))


def load(path) -> Any:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())
