"""Command-line front end.

    scalefree-clustering sample --gamma 1.5 --dmin 1 --n 1000 --seed 7 -o deg.txt
    scalefree-clustering check deg.txt
    scalefree-clustering build deg.txt -o g.edges
    scalefree-clustering metrics g.edges
    scalefree-clustering scaling --gamma 1.5 --ngrid 1000,3162,10000 --seed 1 -o out.csv
    scalefree-clustering graphic-rate --gamma 1.5 --ngrid 100,1000,10000 --replicas 200
    scalefree-clustering simplicity --gamma 1.5 --ngrid 100,1000,10000 --replicas 100

Exit status: 0 on success, 1 on domain failures (non-graphic input, malformed
files), 2 on usage errors. ``check`` exits 1 when the sequence is not graphic.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import experiments as ex
from .builder import RealizationError, havel_hakimi
from .degree_model import SEED_MAX, DegreeDistribution, make_rng, sample_sequence
from .graphical import erdos_gallai_check
from .io import FormatError, open_text, read_degrees, read_edge_list, write_degrees, write_edge_list
from .metrics import compute_metrics


class DomainError(Exception):
    pass


def _positive_int(s: str) -> int:
    try:
        v = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {s!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {s!r}")
    return v


def _seed(s: str) -> int:
    try:
        v = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {s!r}") from None
    if not 0 <= v <= SEED_MAX:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def _gamma(s: str) -> float:
    try:
        v = float(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {s!r}") from None
    if not v > 1:
        raise argparse.ArgumentTypeError("gamma must be > 1")
    return v


def _grid(s: str) -> list[int]:
    try:
        return [_positive_int(x.strip()) for x in s.split(",") if x.strip()]
    except argparse.ArgumentTypeError as e:
        raise argparse.ArgumentTypeError(f"bad --ngrid: {e}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="scalefree-clustering", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    def dist_flags(sp):
        sp.add_argument("--gamma", type=_gamma, required=True)
        sp.add_argument("--dmin", type=_positive_int, default=1)
        sp.add_argument("--seed", type=_seed, default=0)

    sp = sub.add_parser("sample", help="sample an even-sum degree sequence")
    dist_flags(sp)
    sp.add_argument("--n", type=_positive_int, required=True)
    sp.add_argument("-o", dest="output", default="-")

    sp = sub.add_parser("check", help="Erdős–Gallai test of a degree-sequence file")
    sp.add_argument("input")

    sp = sub.add_parser("build", help="Havel–Hakimi realization to an edge list")
    sp.add_argument("input")
    sp.add_argument("-o", dest="output", default="-")

    sp = sub.add_parser("metrics", help="edges, wedges, triangles and clustering of an edge list")
    sp.add_argument("input")

    sp = sub.add_parser("scaling", help="replicated scaling study, CSV plus JSON footer")
    dist_flags(sp)
    sp.add_argument("--ngrid", type=_grid, default=list(ex.DEFAULT_GRID))
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--replicas", type=_positive_int, default=ex.DEFAULT_REPLICAS)
    g.add_argument("--full", action="store_const", const=ex.PAPER_REPLICAS, dest="full",
                   help=f"use {ex.PAPER_REPLICAS} replicas per size")
    sp.add_argument("--workers", type=_positive_int, default=1)
    sp.add_argument("-o", dest="output", default="-")
    sp.add_argument("--json", dest="json_path", default=None,
                    help="footer path (default: output with .json suffix)")

    for name, helptext in (("graphic-rate", "fraction of graphic sampled sequences"),
                           ("simplicity", "fraction of simple configuration-model pairings")):
        sp = sub.add_parser(name, help=helptext)
        dist_flags(sp)
        grid = sp.add_mutually_exclusive_group(required=True)
        grid.add_argument("--ngrid", type=_grid)
        grid.add_argument("--n", type=_positive_int)
        sp.add_argument("--replicas", type=_positive_int, default=100)
        sp.add_argument("-o", dest="output", default="-")
    return p


def _write(path: str, text: str) -> None:
    with open_text(path, "w") as fh:
        fh.write(text)


def _cmd_sample(a) -> int:
    seq = sample_sequence(DegreeDistribution(a.gamma, a.dmin), a.n, make_rng(a.seed))
    write_degrees(seq, a.output)
    return 0


def _cmd_check(a) -> int:
    verdict = erdos_gallai_check(read_degrees(a.input))
    print(json.dumps(verdict.to_dict(), separators=(",", ":")))
    return 0 if verdict.graphic else 1


def _cmd_build(a) -> int:
    seq = read_degrees(a.input)
    try:
        graph = havel_hakimi(seq)
    except RealizationError as e:
        raise DomainError(f"not graphic: {e}") from None
    write_edge_list(graph, a.output)
    return 0


def _cmd_metrics(a) -> int:
    print(compute_metrics(read_edge_list(a.input)).to_json())
    return 0


def _cmd_scaling(a) -> int:
    replicas = a.full or a.replicas
    try:
        config = ex.ScalingConfig(a.gamma, a.dmin, tuple(a.ngrid), replicas, a.seed)
    except ValueError as e:
        raise DomainError(str(e)) from None
    report = ex.run_scaling(config, workers=a.workers)
    _write(a.output, report.to_csv())
    json_path = a.json_path
    if json_path is None and a.output != "-":
        json_path = str(Path(a.output).with_suffix(".json"))
    if json_path is not None:
        _write(json_path, report.to_json())
    for s in report.per_n:
        if s.replicas_used < 2:
            print(f"warning: n={s.n} has {s.replicas_used} graphic replicas; excluded from fits",
                  file=sys.stderr)
    return 0


def _cmd_rate(a) -> int:
    dist = DegreeDistribution(a.gamma, a.dmin)
    grid = a.ngrid if a.ngrid else [a.n]
    if a.command == "graphic-rate":
        fr = [ex.graphic_fraction(dist, n, a.replicas, a.seed) for n in grid]
    else:
        fr = ex.simplicity_fraction(dist, grid, a.replicas, a.seed)
    _write(a.output, ex.fraction_csv(list(zip(grid, fr))))
    return 0


_COMMANDS = {
    "sample": _cmd_sample,
    "check": _cmd_check,
    "build": _cmd_build,
    "metrics": _cmd_metrics,
    "scaling": _cmd_scaling,
    "graphic-rate": _cmd_rate,
    "simplicity": _cmd_rate,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (DomainError, FormatError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"error: {e.strerror or e}: {e.filename}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
