"""Aggregate run records into tables of means with bootstrap intervals.

Records group by grammar size and by source length; each cell reports the
per-metric mean with a 95% nonparametric bootstrap confidence interval
(10,000 percentile resamples).  Tables emit as CSV (long form) and as
aligned text with metrics as rows and groups as columns; cells for groups
with no records render as an em dash.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from pathlib import Path

import numpy as np

METRICS = ("exact", "bag_of_words", "bleu", "chrfpp")
EMPTY_CELL = "—"


@dataclass(frozen=True)
class CellStat:
    n: int
    mean: float | None
    ci_low: float | None
    ci_high: float | None

    @property
    def empty(self) -> bool:
        return self.n == 0


def bootstrap_ci(
    values,
    n_resamples: int = 10_000,
    confidence: float = 0.95,
    seed: int = 0,
) -> tuple[float, float]:
    """Percentile bootstrap interval for the mean of ``values``."""
    arr = np.asarray(values, dtype=float)
    if arr.size == 0:
        raise ValueError("cannot bootstrap an empty sample")
    rng = np.random.default_rng(seed)
    idx = rng.integers(0, arr.size, size=(n_resamples, arr.size))
    means = arr[idx].mean(axis=1)
    tail = (1.0 - confidence) / 2.0
    low, high = np.quantile(means, [tail, 1.0 - tail])
    # quantile interpolation can drift one ulp past the sample range
    lo_bound, hi_bound = arr.min(), arr.max()
    return float(np.clip(low, lo_bound, hi_bound)), float(np.clip(high, lo_bound, hi_bound))


def _cell(values, n_resamples: int, seed: int) -> CellStat:
    if not values:
        return CellStat(0, None, None, None)
    arr = np.asarray(values, dtype=float)
    low, high = bootstrap_ci(arr, n_resamples=n_resamples, seed=seed)
    return CellStat(len(values), float(arr.mean()), low, high)


def _metric_value(record: dict, metric: str) -> float:
    return float(record["scores"][metric])


def group_table(
    records,
    key: str,
    groups=None,
    n_resamples: int = 10_000,
    seed: int = 0,
) -> dict:
    """{group value: {metric: CellStat}} for one grouping field.

    ``groups`` fixes the column set (empty groups included); by default the
    distinct values present in the records are used, sorted.
    """
    records = list(records)
    if groups is None:
        groups = sorted({r[key] for r in records})
    table = {}
    for group in groups:
        members = [r for r in records if r[key] == group]
        table[group] = {
            metric: _cell(
                [_metric_value(r, metric) for r in members], n_resamples, seed
            )
            for metric in METRICS
        }
    return table


def aggregate_report(
    records,
    sizes=None,
    lengths=None,
    n_resamples: int = 10_000,
    seed: int = 0,
) -> dict:
    """Means by grammar size and by source length over the run records."""
    records = list(records)
    return {
        "by_size": group_table(
            records, "grammar_size", sizes, n_resamples=n_resamples, seed=seed
        ),
        "by_length": group_table(
            records, "length", lengths, n_resamples=n_resamples, seed=seed
        ),
    }


def table_to_csv(table: dict, key_name: str) -> str:
    """Long-form CSV: one row per (group, metric) cell."""
    out = io.StringIO()
    writer = csv.writer(out)
    writer.writerow([key_name, "metric", "n", "mean", "ci_low", "ci_high"])
    for group, row in table.items():
        for metric in METRICS:
            stat = row[metric]
            if stat.empty:
                writer.writerow([group, metric, 0, "", "", ""])
            else:
                writer.writerow(
                    [
                        group,
                        metric,
                        stat.n,
                        f"{stat.mean:.6f}",
                        f"{stat.ci_low:.6f}",
                        f"{stat.ci_high:.6f}",
                    ]
                )
    return out.getvalue()


def _format_stat(stat: CellStat) -> str:
    if stat.empty:
        return EMPTY_CELL
    return f"{stat.mean:.3f} [{stat.ci_low:.3f}, {stat.ci_high:.3f}]"


def table_to_text(table: dict, key_name: str) -> str:
    """Aligned text table: metric rows, one column per group."""
    groups = list(table)
    header = ["metric"] + [f"{key_name}={g}" for g in groups]
    rows = [header]
    for metric in METRICS:
        rows.append([metric] + [_format_stat(table[g][metric]) for g in groups])
    widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
    lines = [
        "  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip()
        for row in rows
    ]
    return "\n".join(lines) + "\n"


def write_report(records, out_dir: str | Path, sizes=None, lengths=None, n_resamples: int = 10_000, seed: int = 0) -> dict:
    """Write by-size and by-length CSVs plus a combined text report.

    Returns {"by_size": Path, "by_length": Path, "text": Path}.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    report = aggregate_report(
        records, sizes=sizes, lengths=lengths, n_resamples=n_resamples, seed=seed
    )
    paths = {
        "by_size": out / "by_size.csv",
        "by_length": out / "by_length.csv",
        "text": out / "report.txt",
    }
    paths["by_size"].write_text(
        table_to_csv(report["by_size"], "size"), encoding="utf-8"
    )
    paths["by_length"].write_text(
        table_to_csv(report["by_length"], "length"), encoding="utf-8"
    )
    text = (
        "Mean results by grammar size\n\n"
        + table_to_text(report["by_size"], "size")
        + "\nMean results by sentence length\n\n"
        + table_to_text(report["by_length"], "length")
    )
    paths["text"].write_text(text, encoding="utf-8")
    return paths
