"""Command-line front end: ``python3 -m ipgraph <command> ...``.

Exit codes: 0 ok, 2 usage or bad parameters, 3 the array was not restored,
4 a result differs from the oracle, 5 a corrupt cell was detected.
"""
from __future__ import annotations

import argparse
import csv
import sys
import time

import numpy as np

from .bfs import bfs_all_components, bfs_run
from .corpus import ALGOS, check_case, check_graph, random_case
from .dfs import DfsHooks, StrictModeError, dfs_run, dfs_run_explore, min_out_degree
from .graph import (
    MAGIC,
    MODELS,
    GraphError,
    build,
    edges_from_array,
    format_edge_list,
    generate,
    load_graph,
    parse_edge_list,
    store_graph,
    validate,
)
from .ram import RegisterFile, WordArray, snapshot
from .representations import CorruptionError, STRICT

EXIT_OK, EXIT_USAGE, EXIT_RESTORE, EXIT_ORACLE, EXIT_CORRUPT = 0, 2, 3, 4, 5


class CliError(Exception):
    def __init__(self, msg: str, code: int = EXIT_USAGE):
        super().__init__(msg)
        self.code = code


def _bool(s: str) -> bool:
    v = s.strip().lower()
    if v in ("1", "true", "yes", "y"):
        return True
    if v in ("0", "false", "no", "n"):
        return False
    raise argparse.ArgumentTypeError(f"expected a boolean, got {s!r}")


def _size(s: str) -> int:
    # accepts 1e5 style as well as plain integers
    try:
        x = float(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {s!r}") from None
    if x < 1 or x != int(x):
        raise argparse.ArgumentTypeError(f"size must be a positive integer, got {s!r}")
    return int(x)


def _read_graph(path: str) -> tuple[WordArray, bool]:
    try:
        with open(path, "rb") as f:
            data = f.read()
    except OSError as ex:
        raise CliError(f"cannot read {path}: {ex.strerror}") from None
    if data[:4] == MAGIC:
        return load_graph(data)
    e = parse_edge_list(data.decode())
    return build(e), e.directed


def _open_out(path: str | None, binary: bool = False):
    if path is None or path == "-":
        return sys.stdout.buffer if binary else sys.stdout
    return open(path, "wb" if binary else "w")


def _check_restore(a: WordArray, before) -> None:
    if snapshot(a) != before:
        raise CliError("restore check failed: array differs from its pre-run snapshot", EXIT_RESTORE)


class _Printer(DfsHooks):
    def __init__(self, out):
        self.w = out.write

    def preprocess(self, v):
        self.w(f"pre {v}\n")

    def postprocess(self, v):
        self.w(f"post {v}\n")

    def preexplore(self, u, v):
        self.w(f"preexp {u} {v}\n")

    def postexplore(self, u, v):
        self.w(f"postexp {u} {v}\n")


def cmd_gen(args) -> int:
    e = generate(args.model, args.n, args.m, args.seed, args.directed)
    a = build(e, args.width)
    if args.text:
        with _open_out(args.out) as f:
            f.write(format_edge_list(e))
    else:
        out = _open_out(args.out, binary=True)
        out.write(store_graph(a, e.directed))
        if out is not sys.stdout.buffer:
            out.close()
    return EXIT_OK


def cmd_convert(args) -> int:
    a, directed = _read_graph(args.input)
    if args.width:
        a = build(edges_from_array(a, directed), args.width)
    if args.text:
        with _open_out(args.out) as f:
            f.write(format_edge_list(edges_from_array(a, directed)))
    else:
        out = _open_out(args.out, binary=True)
        out.write(store_graph(a, directed))
        if out is not sys.stdout.buffer:
            out.close()
    return EXIT_OK


def cmd_validate(args) -> int:
    a, directed = _read_graph(args.input)
    rep = validate(a, directed)
    print(rep)
    return EXIT_OK if rep.ok else EXIT_CORRUPT


def cmd_dfs(args) -> int:
    a, _ = _read_graph(args.input)
    if args.mode == STRICT and a.words[0] and min_out_degree(a) < 2:
        print("warning: strict mode needs every vertex to have (out-)degree >= 2; refusing", file=sys.stderr)
        return EXIT_USAGE
    before = snapshot(a)
    run = dfs_run_explore if args.explore else dfs_run
    out = _open_out(args.events)
    try:
        run(a, args.start, _Printer(out), mode=args.mode)
    except StrictModeError as ex:
        raise CliError(str(ex)) from None
    finally:
        if out is not sys.stdout:
            out.close()
    _check_restore(a, before)
    return EXIT_OK


def cmd_bfs(args) -> int:
    a, _ = _read_graph(args.input)
    before = snapshot(a)
    out = _open_out(args.out)
    try:
        if args.start is None:
            bfs_all_components(a, lambda v, d, r: out.write(f"{v} {d} {r}\n"))
        else:
            bfs_run(a, args.start, lambda v, d: out.write(f"{v} {d}\n"))
    finally:
        if out is not sys.stdout:
            out.close()
    _check_restore(a, before)
    return EXIT_OK


def cmd_verify(args) -> int:
    algos = tuple(args.algos.split(","))
    for x in algos:
        if x not in ALGOS:
            raise CliError(f"unknown algorithm {x!r}; choose from {', '.join(ALGOS)}")
    e = None
    if args.input:
        a, directed = _read_graph(args.input)
        e = edges_from_array(a, directed)
    passed = 0
    worst = EXIT_OK
    for k in range(args.trials):
        if e is not None:
            start = int(np.random.default_rng(args.seed + k).integers(1, e.n + 1))
            label = f"file={args.input} seed={args.seed + k} start={start}"
            res = check_graph(e, start, algos)
        else:
            case = random_case(args.seed + k, args.max_n)
            label = str(case)
            res = check_case(case, algos)
        if res.ok:
            passed += 1
            continue
        if res.oracle_failures:
            print(f"FAIL oracle {','.join(res.oracle_failures)}: {label}")
            worst = worst or EXIT_ORACLE
        if res.restore_failures:
            print(f"FAIL restore {','.join(res.restore_failures)}: {label}")
            worst = EXIT_RESTORE
    print(f"{passed}/{args.trials} pass")
    return worst


def bench_rows(sizes, model="gnm", algos=("dfs", "bfs"), seed=0, directed=False):
    """Yield one CSV row dict per (size, algorithm).  For gnm a size is the edge count and n = size/4."""
    for size in sizes:
        if model == "gnm":
            n, m = max(2, size // 4), size
        else:
            n, m = size, 0
        e = generate(model, n, m, seed, directed)
        a = build(e)
        for algo in algos:
            regs = RegisterFile()
            a.reset_stats()
            t0 = time.perf_counter()
            if algo == "dfs":
                dfs_run(a, None, DfsHooks(), regs=regs)
            elif algo == "bfs":
                bfs_all_components(a, lambda v, d, r: None, regs=regs)
            else:
                raise CliError(f"unknown bench algorithm {algo!r}")
            dt = time.perf_counter() - t0
            yield {
                "n": n, "m": len(e.edges), "algo": algo, "seconds": f"{dt:.6f}",
                "reads": a.reads, "writes": a.writes, "peakRegisters": regs.peak,
            }


def cmd_bench(args) -> int:
    algos = tuple(args.algos.split(","))
    out = _open_out(args.csv)
    wr = csv.DictWriter(out, fieldnames=["n", "m", "algo", "seconds", "reads", "writes", "peakRegisters"])
    wr.writeheader()
    try:
        for row in bench_rows(args.sizes, args.model, algos, args.seed, args.directed):
            wr.writerow(row)
            out.flush()
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ipgraph", description="In-place DFS and BFS on packed adjacency arrays.")
    sub = p.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("gen", help="generate a graph file")
    g.add_argument("--model", choices=MODELS, default="gnm")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int, default=0)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--directed", type=_bool, nargs="?", const=True, default=False)
    g.add_argument("--width", type=int, default=None, help="word width in bits (default: smallest byte multiple)")
    g.add_argument("--text", action="store_true", help="write the text edge-list format")
    g.add_argument("--out", default=None)
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("convert", help="convert between binary and text graph files")
    c.add_argument("--in", dest="input", required=True)
    c.add_argument("--out", default=None)
    c.add_argument("--text", action="store_true", help="write text instead of binary")
    c.add_argument("--width", type=int, default=None)
    c.set_defaults(func=cmd_convert)

    v = sub.add_parser("validate", help="check the sorted-representation invariants")
    v.add_argument("--in", dest="input", required=True)
    v.set_defaults(func=cmd_validate)

    d = sub.add_parser("dfs", help="in-place DFS, printing pre/post events")
    d.add_argument("--in", dest="input", required=True)
    d.add_argument("--start", type=int, default=None, help="start vertex (default: all components)")
    d.add_argument("--mode", choices=("banded", "strict"), default="banded")
    d.add_argument("--explore", action="store_true", help="also print preexp/postexp edge events")
    d.add_argument("--events", default=None, help="event output file (default stdout)")
    d.set_defaults(func=cmd_dfs)

    b = sub.add_parser("bfs", help="in-place BFS, printing 'v dist' lines")
    b.add_argument("--in", dest="input", required=True)
    b.add_argument("--start", type=int, default=None, help="start vertex (default: all components, 'v dist root')")
    b.add_argument("--out", default=None)
    b.set_defaults(func=cmd_bfs)

    r = sub.add_parser("verify", help="randomized oracle and restore trials")
    r.add_argument("--in", dest="input", default=None, help="use this graph with random starts")
    r.add_argument("--trials", type=int, default=100)
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--max-n", type=int, default=512)
    r.add_argument("--algos", default=",".join(ALGOS))
    r.set_defaults(func=cmd_verify)

    k = sub.add_parser("bench", help="time DFS and BFS, CSV output")
    k.add_argument("--sizes", type=lambda s: [_size(x) for x in s.split(",")], default=[10**4, 10**5])
    k.add_argument("--model", choices=MODELS, default="gnm")
    k.add_argument("--algos", default="dfs,bfs")
    k.add_argument("--seed", type=int, default=0)
    k.add_argument("--directed", type=_bool, nargs="?", const=True, default=False)
    k.add_argument("--csv", default=None, help="output file (default stdout)")
    k.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return ex.code
    except CorruptionError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_CORRUPT
    except (GraphError, IndexError, ValueError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
