"""Command-line entry point: ``demcomp {complete,rank,consistency,dematel,bench}``.

Exit codes: 0 ok, 2 input error, 3 disconnected comparison graph,
4 numerical failure, 5 no connected bench mask.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
import warnings
from pathlib import Path

from . import bench, dematel
from .completion import CompletionOptions, Mode, complete
from .errors import DemcompError, InputError
from .io import (
    TransformConfig,
    headtohead_to_pcm,
    parse_direct_relation_csv,
    parse_headtohead_csv,
    parse_pcm_csv,
    write_matrix_csv,
    write_prominence_csv,
    write_ranking_report,
)
from .pcm import complete_pcm, consistency, priorities


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _emit(text: str, path: str | None) -> None:
    """Write to ``path`` atomically, or to stdout."""
    if path is None:
        sys.stdout.write(text)
        return
    target = Path(path)
    fd, tmp = tempfile.mkstemp(dir=target.parent or ".", prefix=f".{target.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


def _load_pcm(args):
    return parse_pcm_csv(_read(args.input), reconcile=args.reconcile, zero_as_missing=args.zero_as_missing)


def _consistency_line(rep) -> str:
    verdict = "ACCEPT" if rep.acceptable else "REJECT"
    line = f"lambda_max={rep.lambda_max:.4f} CI={rep.ci:.4f} RI={rep.ri:.2f} CR={rep.cr:.4f} {verdict}"
    if rep.ri_extrapolated:
        line += f" (RI for n={rep.n} clamped to the n=10 value)"
    return line


def cmd_complete(args) -> int:
    pcm = _load_pcm(args)
    report = complete(pcm, CompletionOptions(mode=Mode(args.mode), series_check=args.series_check))
    matrix = write_matrix_csv(report.completed)
    summary = [f"{len(report.filled_cells)} cells filled"]
    summary += [f"  {pcm.labels[i]},{pcm.labels[j]}: {v:.6f}" for i, j, v in report.filled_cells if i < j]
    summary.append(f"spectral_radius={report.spectral_radius:.6f}")
    summary.append(_consistency_line(report.consistency))
    if args.out is None:
        sys.stdout.write(matrix)
        sys.stderr.write("\n".join(summary) + "\n")
    else:
        _emit(matrix, args.out)
        sys.stdout.write("\n".join(summary) + "\n")
    return 0


def cmd_rank(args) -> int:
    if args.kind == "headtohead":
        table = parse_headtohead_csv(_read(args.input), lenient=args.lenient)
        pcm = headtohead_to_pcm(table, TransformConfig.parse(args.transform))
    else:
        pcm = _load_pcm(args)
    report = complete(pcm, CompletionOptions(mode=Mode(args.mode)))
    pv = priorities(report.completed)
    _emit(write_ranking_report(pv, pcm.labels), args.out)
    return 0


def cmd_consistency(args) -> int:
    pcm = _load_pcm(args)
    if not pcm.is_complete:
        raise InputError(f"matrix has {len(pcm.missing_pairs)} missing pairs; run 'complete' first")
    rep = consistency(complete_pcm(pcm.values, pcm.labels))
    sys.stdout.write(_consistency_line(rep) + "\n")
    return 0


def cmd_dematel(args) -> int:
    d = parse_direct_relation_csv(_read(args.input))
    total = dematel.total_relation(dematel.normalize(d), d.labels)
    records = dematel.prominence(total)
    t_csv = write_matrix_csv(total)
    p_csv = write_prominence_csv(records, d.labels)
    if args.out is None and args.prominence_out is None:
        sys.stdout.write(t_csv + "\n" + p_csv)
        return 0
    _emit(t_csv, args.out)
    _emit(p_csv, args.prominence_out)
    return 0


def cmd_bench(args) -> int:
    spec = bench.BenchSpec(n=args.n, missing_fraction=args.missing, noise_sigma=args.sigma,
                           trials=args.trials, seed=args.seed, mode=Mode(args.mode))
    if args.ladder:
        sizes = [int(x) for x in args.ladder.split(",")]
        _emit(bench.scaling_csv(bench.scaling_ladder(sizes, spec)), args.out)
    else:
        _emit(bench.bench_csv(bench.run_bench(spec, jobs=args.jobs), timing=args.timing), args.out)
    return 0


def _fraction(text: str) -> float:
    value = float(text)
    if not 0.0 <= value < 1.0:
        raise argparse.ArgumentTypeError("must lie in [0, 1)")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="demcomp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def pcm_input(p):
        p.add_argument("input", help="matrix CSV (header of labels; cells number, a/b, * or empty)")
        p.add_argument("--reconcile", action="store_true",
                       help="replace non-reciprocal two-sided pairs by their geometric consensus")
        p.add_argument("--zero-as-missing", action="store_true", help="treat literal 0 cells as missing")

    def mode(p):
        p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.PRESERVE_KNOWN.value)

    p = sub.add_parser("complete", help="fill missing comparisons")
    pcm_input(p)
    mode(p)
    p.add_argument("--out", help="completed matrix CSV (default: stdout, summary to stderr)")
    p.add_argument("--series-check", action="store_true", help="cross-check T against the truncated series")
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("rank", help="complete and rank alternatives")
    pcm_input(p)
    mode(p)
    p.add_argument("--kind", choices=["pcm", "headtohead"], default="pcm")
    p.add_argument("--transform", default="smoothed:1", help="odds | smoothed:<alpha> (head-to-head input)")
    p.add_argument("--lenient", action="store_true", help="drop inconsistent head-to-head mirrors")
    p.add_argument("--out")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("consistency", help="lambda_max, CI, RI, CR of a complete matrix")
    pcm_input(p)
    p.set_defaults(func=cmd_consistency)

    p = sub.add_parser("dematel", help="total relation and prominence from a direct relation CSV")
    p.add_argument("input")
    p.add_argument("--out", help="total relation CSV")
    p.add_argument("--prominence-out", help="prominence CSV")
    p.set_defaults(func=cmd_dematel)

    p = sub.add_parser("bench", help="synthetic reconstruction benchmark")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--missing", type=_fraction, default=0.3)
    p.add_argument("--sigma", type=float, default=0.0)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="include wall times (output no longer reproducible)")
    p.add_argument("--ladder", help="comma-separated sizes for a runtime scaling run, e.g. 10,20,40,80")
    mode(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("always")
            warnings.showwarning = lambda msg, *a, **k: print(f"warning: {msg}", file=sys.stderr)
            return args.func(args)
    except DemcompError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
