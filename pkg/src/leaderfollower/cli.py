"""Command-line interface: ``leaderfollower <subcommand> ...``.

Exit codes: 0 success, 1 usage error, 2 data error, 3 numeric failure.
"""

from __future__ import annotations

import argparse
import csv
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .centrality import distance_centrality_all
from .errors import ConvergenceError, LeaderFollowerError
from .graph import NodeIdMap, connected_components, load_edge_list, write_edge_list
from .leader_follower import detect
from .metrics import pair_error, score
from .partition import align_partitions, read_partition, write_partition
from .planted import PlantedSpec, generate
from .spectral import spectral_cluster

log = logging.getLogger("leaderfollower")

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_NUMERIC = 0, 1, 2, 3

CSV_FIELDS = ["seed", "inter_edges", "n", "true_k", "lf_k", "lf_error", "spectral_error"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int_range(text: str) -> list[int]:
    """``"1..20"`` (inclusive) or ``"1,4,9"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise ValueError
            return list(range(lo, hi + 1))
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'A..B' or a comma list of integers, got {text!r}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma list of integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="leaderfollower", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("generate", help="draw a planted clique-community instance")
    p.add_argument("--communities", type=int, required=True)
    p.add_argument("--min-size", type=int, required=True)
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--inter-edges", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--allow-disconnected", action="store_true")
    p.add_argument("--graph-out", type=Path, required=True)
    p.add_argument("--truth-out", type=Path, required=True)

    p = sub.add_parser("detect", help="partition a graph into communities")
    p.add_argument("--algo", choices=["lf", "spectral"], required=True)
    p.add_argument("--graph", type=Path, required=True)
    p.add_argument("--out", type=Path, required=True)
    p.add_argument("--k", type=int, help="number of communities (spectral only)")
    p.add_argument("--seed", type=int, default=0, help="k-means seed (spectral only)")

    p = sub.add_parser("centrality", help="print distance centrality of every node")
    p.add_argument("--graph", type=Path, required=True)

    p = sub.add_parser("score", help="pair-misclassification error of a partition")
    p.add_argument("--truth", type=Path, required=True)
    p.add_argument("--pred", type=Path, required=True)

    p = sub.add_parser("compare", help="leader-follower vs spectral on planted instances")
    p.add_argument("--communities", type=int, required=True)
    p.add_argument("--min-size", type=int, required=True)
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--seeds", type=_int_range, required=True)
    p.add_argument("--inter-edges", type=_int_list, required=True)
    p.add_argument("--csv-out", type=Path, required=True)
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    return parser


def _read_graph(path: Path):
    with open(path, encoding="utf-8") as fh:
        return load_edge_list(fh)


def _write_text(path: Path, writer) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        writer(fh)


def _check_inputs(*paths: Path) -> None:
    for path in paths:
        if not path.is_file():
            raise UsageError(f"no such file: {path}")


def _check_outputs(*paths: Path) -> None:
    for path in paths:
        parent = path.parent if str(path.parent) else Path(".")
        if not parent.is_dir():
            raise UsageError(f"output directory does not exist: {parent}")


def cmd_generate(args) -> None:
    _check_outputs(args.graph_out, args.truth_out)
    inst = generate(PlantedSpec(
        num_communities=args.communities,
        size_min=args.min_size,
        size_max=args.max_size,
        inter_edges=args.inter_edges,
        seed=args.seed,
        require_connected=not args.allow_disconnected,
    ))
    ids = NodeIdMap.identity(inst.graph.node_count)
    _write_text(args.graph_out, lambda fh: write_edge_list(inst.graph, ids, fh))
    _write_text(args.truth_out, lambda fh: write_partition(inst.truth, ids, fh))
    log.info("wrote %d nodes, %d edges, %d communities",
             inst.graph.node_count, inst.graph.edge_count, inst.truth.num_communities)


def cmd_detect(args) -> None:
    _check_inputs(args.graph)
    _check_outputs(args.out)
    if args.algo == "spectral" and args.k is None:
        raise UsageError("--algo spectral requires --k")
    if args.algo == "lf" and args.k is not None:
        raise UsageError("--k only applies to --algo spectral")
    g, ids = _read_graph(args.graph)
    if args.algo == "lf":
        part = detect(g)
    else:
        if not 1 <= args.k <= g.node_count:
            raise UsageError(f"--k must be in 1..{g.node_count}")
        part = spectral_cluster(g, args.k, args.seed)
    _write_text(args.out, lambda fh: write_partition(part, ids, fh))
    log.info("%s found %d communities", args.algo, part.num_communities)


def cmd_centrality(args) -> None:
    _check_inputs(args.graph)
    g, ids = _read_graph(args.graph)
    values = [0] * g.node_count
    # component-local distances; a single BFS cannot cross components
    for comp in connected_components(g):
        sub, nodes = g.subgraph(comp)
        for local, d in enumerate(distance_centrality_all(sub)):
            values[nodes[local]] = d
    rows = sorted((ids.label(v), d) for v, d in enumerate(values))
    sys.stdout.write("".join(f"{label}\t{d}\n" for label, d in rows))


def cmd_score(args) -> None:
    _check_inputs(args.truth, args.pred)
    with open(args.truth, encoding="utf-8") as fh:
        truth = read_partition(fh)
    with open(args.pred, encoding="utf-8") as fh:
        pred = read_partition(fh)
    t, p = align_partitions(truth, pred)
    print(score(t, p).format())


def compare_cell(communities, min_size, max_size, seed, inter_edges) -> dict:
    """One (seed, density) cell of the comparison experiment."""
    inst = generate(PlantedSpec(communities, min_size, max_size, inter_edges, seed))
    lf = detect(inst.graph)
    # spectral gets the community count leader-follower discovered
    sc = spectral_cluster(inst.graph, lf.num_communities, seed)
    return {
        "seed": seed,
        "inter_edges": inter_edges,
        "n": inst.graph.node_count,
        "true_k": inst.truth.num_communities,
        "lf_k": lf.num_communities,
        "lf_error": pair_error(inst.truth, lf),
        "spectral_error": pair_error(inst.truth, sc),
    }


def run_compare(communities, min_size, max_size, seeds, inter_edges, jobs=1) -> list[dict]:
    cells = sorted({(s, m) for s in seeds for m in inter_edges})
    call_args = [(communities, min_size, max_size, s, m) for s, m in cells]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(compare_cell, *zip(*call_args)))
    else:
        rows = [compare_cell(*a) for a in call_args]
    return sorted(rows, key=lambda r: (r["seed"], r["inter_edges"]))


def write_compare_csv(rows, stream) -> None:
    writer = csv.DictWriter(stream, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)


def cmd_compare(args) -> None:
    _check_outputs(args.csv_out)
    if not args.seeds or not args.inter_edges:
        raise UsageError("--seeds and --inter-edges must be non-empty")
    rows = run_compare(args.communities, args.min_size, args.max_size,
                       args.seeds, args.inter_edges, jobs=max(1, args.jobs))
    _write_text(args.csv_out, lambda fh: write_compare_csv(rows, fh))
    for m in sorted(set(args.inter_edges)):
        sel = [r for r in rows if r["inter_edges"] == m]
        lf = sum(r["lf_error"] for r in sel) / len(sel)
        sc = sum(r["spectral_error"] for r in sel) / len(sel)
        print(f"inter_edges={m}\truns={len(sel)}\tmean_lf_error={lf:.2f}\tmean_spectral_error={sc:.2f}")


COMMANDS = {
    "generate": cmd_generate,
    "detect": cmd_detect,
    "centrality": cmd_centrality,
    "score": cmd_score,
    "compare": cmd_compare,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"leaderfollower: error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"leaderfollower: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConvergenceError as exc:
        print(f"leaderfollower: numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (LeaderFollowerError, ValueError, OSError, UnicodeDecodeError) as exc:
        print(f"leaderfollower: error: {exc}", file=sys.stderr)
        return EXIT_DATA
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
