"""Command line: ``cc {run|sweep|verify|gen} [flags]``.

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 I/O or parse error.
"""
from __future__ import annotations

import argparse
import logging
import sys

from adaptcc import bench
from adaptcc.engines import ALGORITHMS
from adaptcc.graph import FORMATS, GraphFormatError

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

log = logging.getLogger("adaptcc")


def _segments(text):
    if text == "auto":
        return text
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("segments must be 'auto' or a positive integer")
    return value


def _workers(text):
    if text == "max":
        return text
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("workers must be 'max' or a positive integer")
    return value


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _int_list(text):
    try:
        return [_positive(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of positive integers, got {text!r}")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", metavar="PATH")
    common.add_argument("--format", choices=sorted(FORMATS), default="edgelist")
    common.add_argument("--gen", metavar="SPEC",
                        help="grid:RxC | er:n=N,m=M[,seed=S] | rmat:scale=K[,ef=F][,seed=S]")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--backend", choices=["cython", "python"], default=None)
    common.add_argument("-v", "--verbose", action="store_true")

    timed = argparse.ArgumentParser(add_help=False)
    timed.add_argument("--workers", type=_workers, default="max")
    timed.add_argument("--reps", type=_positive, default=1)
    timed.add_argument("--metrics-out", metavar="PATH")
    timed.add_argument("--report", choices=["json", "csv"], default="json")
    timed.add_argument("--no-verify", action="store_true")

    parser = argparse.ArgumentParser(prog="cc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", parents=[common, timed], help="time one algorithm")
    run.add_argument("--algo", choices=ALGORITHMS, default="adaptive")
    run.add_argument("--segments", type=_segments, default="auto")
    run.add_argument("--labels-out", metavar="PATH")

    sweep = sub.add_parser("sweep", parents=[common, timed], help="adaptive runs over segment counts")
    sweep.add_argument("--sweep-segments", type=_int_list, metavar="CSV-LIST",
                       help="default: 1,2,4,... up to twice the automatic count")

    verify = sub.add_parser("verify", parents=[common], help="check a label file against the oracle")
    verify.add_argument("--labels", metavar="PATH", required=True)

    gen = sub.add_parser("gen", parents=[common], help="write a generated graph as an edge list")
    gen.add_argument("-o", "--output", metavar="PATH", help="default: stdout")
    return parser


def _write(path, text):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as f:
            f.write(text)


def _config(args, **extra) -> bench.RunConfig:
    return bench.RunConfig(
        input=args.input, gen=args.gen, format=args.format, seed=args.seed,
        backend=args.backend, **extra,
    )


def _dispatch(args) -> int:
    if args.command == "gen":
        if args.gen is None:
            raise ValueError("gen needs --gen SPEC")
        if args.output:
            with open(args.output, "w") as f:
                graph = bench.cmd_generate(args.gen, f, args.seed)
        else:
            graph = bench.cmd_generate(args.gen, sys.stdout, args.seed)
        log.info("generated n=%d m=%d", graph.n, graph.m)
        return EXIT_OK

    if args.command == "verify":
        graph = _config(args).load_graph()
        with open(args.labels) as f:
            labels = bench.read_labels(f, graph.n)
        ok, witness = bench.cmd_verify(graph, labels)
        if ok:
            print("verified: labels match the oracle partition")
            return EXIT_OK
        u, v = witness
        print(f"mismatch: vertices {u} and {v} are grouped differently "
              f"(labels {int(labels.label[u])}, {int(labels.label[v])})")
        return EXIT_MISMATCH

    config = _config(
        args, workers=args.workers, reps=args.reps, report=args.report,
        metrics_out=args.metrics_out, verify=not args.no_verify,
        algo=getattr(args, "algo", "adaptive"),
        segments=getattr(args, "segments", "auto"),
        labels_out=getattr(args, "labels_out", None),
        sweep_segments=getattr(args, "sweep_segments", None),
    )
    graph = config.load_graph()
    log.info("graph n=%d m=%d, backend %s", graph.n, graph.m, bench.describe_backend())

    if args.command == "run":
        result = bench.cmd_run(config, graph)
        if config.labels_out:
            with open(config.labels_out, "w") as f:
                bench.write_labels(result.labels, f)
        _write(config.metrics_out, bench.emit_report(result, config.report))
        if result.verified is False:
            u, v = result.witness
            log.error("verification failed: vertices %d and %d disagree with the oracle", u, v)
            return EXIT_MISMATCH
        return EXIT_OK

    rows = bench.cmd_sweep(graph, config.sweep_segments, config.workers, config.reps,
                           config.verify, config.backend)
    _write(config.metrics_out, bench.emit_report(rows, config.report))
    if any(r.result.verified is False for r in rows):
        log.error("verification failed for s=%s",
                  [r.s for r in rows if r.result.verified is False])
        return EXIT_MISMATCH
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    try:
        return _dispatch(args)
    except (OSError, GraphFormatError, bench.LabelFormatError) as exc:
        print(f"cc: error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"cc: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
