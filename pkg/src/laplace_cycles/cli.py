"""Command line front end ``lc``.

Exit codes: 0 ok, 1 usage, 2 I/O or parse error, 3 degenerate input,
4 property violation.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from contextlib import nullcontext
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import io
from .congruences import build_asymptotic_pair, crossratio_audit, is_w_congruence, parity
from .cycles import LaplaceCycle, construct_cycle_from_axes, diagonal_congruences, extract_axes, verify_cycle
from .errors import BadSeedParity, GeometryError, PropertyViolation, NotWCongruence
from .generate import RetriesExhausted, generate_cycle, make_rng
from .nets import DiscreteNet, LineCongruence, NetWindow, Report, axis_congruence, is_conjugate, laplace_sequence
from .obj_export import export_obj
from .projective_core import HomPoint, backend

log = logging.getLogger("laplace_cycles")

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_DEGENERATE, EXIT_PROPERTY = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _window(text: str) -> NetWindow:
    try:
        vals = [int(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError("window must be four integers i0,i1,j0,j1") from None
    if len(vals) != 4 or vals[0] > vals[1] or vals[2] > vals[3]:
        raise argparse.ArgumentTypeError("window must be i0,i1,j0,j1 with i0<=i1 and j0<=j1")
    return NetWindow(*vals)


def _seed(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("seed must be an integer") from None
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return v


def _box(text: str):
    try:
        vals = [float(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError("clip box must be six numbers") from None
    if len(vals) != 6 or vals[0] >= vals[1] or vals[2] >= vals[3] or vals[4] >= vals[5]:
        raise argparse.ArgumentTypeError("clip box must be xmin,xmax,ymin,ymax,zmin,zmax")
    return tuple(vals)


def _load(path: str, *types):
    obj = io.load(path)
    if types and not isinstance(obj, types):
        raise UsageError(f"{path}: expected {' or '.join(t.__name__ for t in types)}, "
                         f"got {type(obj).__name__}")
    return obj


def _print_report(title: str, rep: Report) -> None:
    status = "clean" if rep.ok else f"{len(rep.failures)} failure(s)"
    print(f"{title}: {status} ({rep.checked} checks)")
    if rep.failures:
        first = rep.failures[0]
        print(f"first failure: {first.kind} at {first.index}")
    print(json.dumps(io.to_json(rep), sort_keys=True))


# --------------------------------------------------------------------------
# commands

def cmd_gen_cycle(args) -> int:
    w = args.window
    if w.shape[0] < 2 or w.shape[1] < 2:
        raise UsageError("window must span at least 2x2 vertices")
    rng = make_rng(args.seed)
    cycle = generate_cycle(rng, w, max_tries=args.max_tries,
                           on_reject=lambda exc: log.warning("rejected draw: %s", exc))
    io.save(cycle, args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    obj = _load(args.file, LaplaceCycle, LineCongruence, DiscreteNet)
    if isinstance(obj, LaplaceCycle):
        rep, title = verify_cycle(obj), "cycle"
    elif isinstance(obj, LineCongruence):
        rep, title = is_w_congruence(obj), "W-congruence"
    else:
        rep, title = is_conjugate(obj), "conjugate net"
    _print_report(title, rep)
    return EXIT_OK if rep.ok else EXIT_PROPERTY


def _net_of(obj) -> DiscreteNet:
    return obj.f if isinstance(obj, LaplaceCycle) else obj


def cmd_laplace(args) -> int:
    net = _net_of(_load(args.file, LaplaceCycle, DiscreteNet))
    io.save(laplace_sequence(net, args.dir, args.steps), args.output)
    return EXIT_OK


def cmd_axis(args) -> int:
    net = _net_of(_load(args.file, LaplaceCycle, DiscreteNet))
    io.save(axis_congruence(net), args.output)
    return EXIT_OK


def cmd_wtest(args) -> int:
    obj = _load(args.file, LaplaceCycle, LineCongruence)
    congs = zip(("K", "L"), diagonal_congruences(obj)) if isinstance(obj, LaplaceCycle) else [("A", obj)]
    ok = True
    for name, cong in congs:
        rep = is_w_congruence(cong)
        _print_report(f"W-test {name}", rep)
        ok = ok and rep.ok
    return EXIT_OK if ok else EXIT_PROPERTY


def _seed_points(text: str):
    raw = text if text.lstrip().startswith("[") else Path(text).read_text(encoding="utf-8")
    data = json.loads(raw)
    seeds = []
    if not isinstance(data, list):
        raise UsageError("seed points must be a JSON list")
    for entry in data:
        if isinstance(entry, dict):
            vertex, point = entry.get("vertex"), entry.get("point")
        elif isinstance(entry, list) and len(entry) == 2:
            vertex, point = entry
        else:
            raise UsageError("each seed is {\"vertex\": [i, j], \"point\": [x0, x1, x2, x3]}")
        if not (isinstance(vertex, list) and len(vertex) == 2 and isinstance(point, list) and len(point) == 4):
            raise UsageError("each seed is {\"vertex\": [i, j], \"point\": [x0, x1, x2, x3]}")
        seeds.append(((int(vertex[0]), int(vertex[1])), HomPoint([io.rational_from(x) for x in point])))
    classes = [parity(*ij) for ij, _ in seeds]
    if len(seeds) != 4 or len(set(classes)) != 4:
        raise UsageError(
            "seeds must be four vertices of pairwise different parity "
            f"(one each of even-even, even-odd, odd-even, odd-odd); got {classes}"
        )
    return seeds


def cmd_build_asym(args) -> int:
    seeds = _seed_points(args.seed_points)
    cong = _load(args.file, LineCongruence)
    f, g = build_asymptotic_pair(cong, seeds)
    io.save(io.NetPair(f, g), args.output)
    return EXIT_OK


def cmd_extract_axes(args) -> int:
    cycle = _load(args.file, LaplaceCycle)
    K, _ = diagonal_congruences(cycle)
    origin = tuple(args.origin) if args.origin else None
    io.save(extract_axes(cycle.f, K, origin), args.output)
    return EXIT_OK


def cmd_cycle_from_axes(args) -> int:
    data = _load(args.file, io.AxesData)
    _, _, cycle = construct_cycle_from_axes(data)
    io.save(cycle, args.output)
    return EXIT_OK


def cmd_crossratio_audit(args) -> int:
    def net(path, which):
        obj = _load(path, DiscreteNet, io.NetPair)
        return getattr(obj, which) if isinstance(obj, io.NetPair) else obj

    f, g, f2, g2 = net(args.f, "f"), net(args.g, "g"), net(args.f2, "f"), net(args.g2, "g")
    cong = _load(args.a, LineCongruence)
    black, white, rep = crossratio_audit(f, g, f2, g2, cong)
    print(f"black: {io.param_to_json(black) if black is not None else 'none'}")
    print(f"white: {io.param_to_json(white) if white is not None else 'none'}")
    _print_report("cross-ratio audit", rep)
    return EXIT_OK if rep.ok else EXIT_PROPERTY


def cmd_export_obj(args) -> int:
    obj = _load(args.file, LaplaceCycle, DiscreteNet, LineCongruence)
    text = export_obj(obj, chart=args.chart, box=args.clip_box)
    Path(args.output).write_text(text, encoding="utf-8")
    return EXIT_OK


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lc", description="Period-four Laplace cycles and W-congruences.")
    p.add_argument("--backend", choices=("exact", "float"), default="exact")
    p.add_argument("--tolerance", type=Fraction, default=Fraction(1, 10**9),
                   help="relative tolerance of the float backend")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("gen-cycle", help="generate a random period-four cycle")
    s.add_argument("--seed", type=_seed, required=True)
    s.add_argument("--window", type=_window, required=True, help="i0,i1,j0,j1")
    s.add_argument("--max-tries", type=int, default=50)
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_gen_cycle)

    s = sub.add_parser("verify", help="verify a cycle, congruence or conjugate net")
    s.add_argument("file")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("laplace", help="iterated Laplace transform of a net")
    s.add_argument("--dir", type=int, choices=(1, 2), required=True)
    s.add_argument("--steps", type=int, default=1)
    s.add_argument("file")
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_laplace)

    s = sub.add_parser("axis", help="axis congruence of a net")
    s.add_argument("file")
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_axis)

    s = sub.add_parser("wtest", help="W-congruence test")
    s.add_argument("file")
    s.set_defaults(func=cmd_wtest)

    s = sub.add_parser("build-asym", help="asymptotic pair on a W-congruence")
    s.add_argument("file")
    s.add_argument("--seed-points", required=True, help="inline JSON list or path to one")
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_build_asym)

    s = sub.add_parser("extract-axes", help="axis data of a cycle for cycle-from-axes")
    s.add_argument("file")
    s.add_argument("--origin", type=int, nargs=2, metavar=("I", "J"))
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_extract_axes)

    s = sub.add_parser("cycle-from-axes", help="rebuild a cycle from axis data")
    s.add_argument("file")
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_cycle_from_axes)

    s = sub.add_parser("crossratio-audit", help="cross-ratio of two pairs per parity class")
    for name in ("f", "g", "f2", "g2", "a"):
        s.add_argument(name)
    s.set_defaults(func=cmd_crossratio_audit)

    s = sub.add_parser("export-obj", help="write an OBJ file")
    s.add_argument("file")
    s.add_argument("-o", "--output", required=True)
    s.add_argument("--chart", type=int, choices=(0, 1, 2, 3), default=3)
    s.add_argument("--clip-box", type=_box, default=None, help="xmin,xmax,ymin,ymax,zmin,zmax")
    s.set_defaults(func=cmd_export_obj)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    ctx = backend("float", float(args.tolerance)) if args.backend == "float" else nullcontext()
    try:
        with ctx:
            return args.func(args)
    except (UsageError, BadSeedParity) as exc:
        print(f"lc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except json.JSONDecodeError as exc:
        print(f"lc: parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}", file=sys.stderr)
        return EXIT_IO
    except (OSError, io.FormatError) as exc:
        print(f"lc: {exc}", file=sys.stderr)
        return EXIT_IO
    except (PropertyViolation, NotWCongruence) as exc:
        print(f"lc: property violated: {exc}", file=sys.stderr)
        return EXIT_PROPERTY
    except (GeometryError, RetriesExhausted) as exc:
        print(f"lc: degenerate input: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE


if __name__ == "__main__":
    sys.exit(main())
