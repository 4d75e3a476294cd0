"""Seeded benchmark comparing dense rank with DVF-reduced rank on image complexes."""

from __future__ import annotations

import os
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .cubical import build_complex, synth_image
from .errors import ParameterError
from .reduce import reduction_report

TSV_HEADER = (
    "instance",
    "matrix",
    "rows",
    "cols",
    "field",
    "crit_rows",
    "crit_cols",
    "rank_dense",
    "rank_dvf",
    "equal",
    "dense_us",
    "dvf_us",
    "reduce_us",
)
# dvf_us times field construction + elimination + residual rank;
# reduce_us leaves out field construction
TIMING_COLUMNS = ("dense_us", "dvf_us", "reduce_us")


@dataclass(frozen=True)
class BenchRecord:
    instance: int
    matrix: str
    rows: int
    cols: int
    field_size: int
    critical_rows: int
    critical_cols: int
    rank_dense: int
    rank_dvf: int
    dense_us: int
    dvf_us: int
    reduce_us: int = 0

    @property
    def equal(self) -> bool:
        return self.rank_dense == self.rank_dvf

    def tsv(self) -> str:
        values = (
            self.instance,
            self.matrix,
            self.rows,
            self.cols,
            self.field_size,
            self.critical_rows,
            self.critical_cols,
            self.rank_dense,
            self.rank_dvf,
            "true" if self.equal else "false",
            self.dense_us,
            self.dvf_us,
            self.reduce_us,
        )
        return "\t".join(map(str, values))


def instance_seed(seed: int, index: int) -> int:
    return seed * 1_000_003 + index


def run_instance(index, width, height, density, seed, repeats=3):
    img = synth_image(width, height, density, instance_seed(seed, index))
    cx = build_complex(img)
    records = []
    for name, M in (("d1", cx.d1), ("d2", cx.d2)):
        rep = reduction_report(M, repeats=repeats)
        records.append(
            BenchRecord(
                instance=index,
                matrix=name,
                rows=rep.rows,
                cols=rep.cols,
                field_size=rep.field_size,
                critical_rows=rep.critical_rows,
                critical_cols=rep.critical_cols,
                rank_dense=rep.rank_dense,
                rank_dvf=rep.rank_dvf,
                dense_us=round(rep.dense_seconds * 1e6),
                dvf_us=round(rep.dvf_seconds * 1e6),
                reduce_us=round(rep.reduce_seconds * 1e6),
            )
        )
    return records


def _run_instance_args(args):
    return run_instance(*args)


def bench_threads() -> int:
    raw = os.environ.get("DVF_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise ParameterError(f"DVF_THREADS must be an integer, got {raw!r}") from None
    if n < 1:
        raise ParameterError(f"DVF_THREADS must be >= 1, got {n}")
    return n


def run_bench(count, width, height, density, seed, repeats=3, workers=None) -> list[BenchRecord]:
    """All records, ordered by instance id then matrix, whatever the worker count."""
    if count < 0 or width < 0 or height < 0:
        raise ParameterError("count, width and height must be non-negative")
    if not 0.0 <= density <= 1.0:
        raise ParameterError(f"density {density} outside [0, 1]")
    if repeats < 1:
        raise ParameterError("repeats must be >= 1")
    workers = bench_threads() if workers is None else workers
    jobs = [(i, width, height, density, seed, repeats) for i in range(count)]
    if workers > 1 and count > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_run_instance_args, jobs))
    else:
        chunks = [_run_instance_args(job) for job in jobs]
    return [rec for chunk in chunks for rec in chunk]


def summarize(records: list[BenchRecord]) -> dict[str, float]:
    def mean(values):
        values = list(values)
        return statistics.fmean(values) if values else 0.0

    speedups = [r.dense_us / r.dvf_us for r in records if r.dvf_us > 0]
    reduce_speedups = [r.dense_us / r.reduce_us for r in records if r.reduce_us > 0]
    return {
        "records": len(records),
        "mismatches": sum(not r.equal for r in records),
        "mean_rows": mean(r.rows for r in records),
        "mean_cols": mean(r.cols for r in records),
        "mean_crit_rows": mean(r.critical_rows for r in records),
        "mean_crit_cols": mean(r.critical_cols for r in records),
        "mean_speedup": mean(speedups),
        "mean_reduce_speedup": mean(reduce_speedups),
    }


def format_bench(records: list[BenchRecord]) -> str:
    lines = ["\t".join(TSV_HEADER)]
    lines += [r.tsv() for r in records]
    s = summarize(records)
    lines.append(
        f"# records={s['records']} mismatches={s['mismatches']} "
        f"mean_dims={s['mean_rows']:.1f}x{s['mean_cols']:.1f} "
        f"mean_critical={s['mean_crit_rows']:.1f}x{s['mean_crit_cols']:.1f} "
        f"mean_speedup={s['mean_speedup']:.2f} "
        f"mean_reduce_speedup={s['mean_reduce_speedup']:.2f}"
    )
    return "\n".join(lines) + "\n"
