import csv
import io

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from scfgkit.report import (
    EMPTY_CELL,
    METRICS,
    aggregate_report,
    bootstrap_ci,
    group_table,
    table_to_csv,
    table_to_text,
    write_report,
)


def record(size, length, exact=1.0):
    scores = {m: exact for m in METRICS}
    return {"grammar_size": size, "length": length, "scores": scores}


def test_bootstrap_ci_of_constant_data_is_degenerate():
    low, high = bootstrap_ci([1.0] * 20)
    assert low == 1.0 and high == 1.0


def test_bootstrap_ci_brackets_the_mean():
    low, high = bootstrap_ci([0.0, 1.0] * 25, n_resamples=2000)
    assert low < 0.5 < high
    assert 0.0 <= low <= high <= 1.0


def test_bootstrap_ci_is_deterministic_in_seed():
    values = [0.0, 1.0, 1.0, 0.0, 1.0]
    assert bootstrap_ci(values, seed=3) == bootstrap_ci(values, seed=3)
    with pytest.raises(ValueError):
        bootstrap_ci([])


def test_group_table_means():
    records = [record(57, 3, 1.0), record(57, 3, 0.0), record(117, 3, 1.0)]
    table = group_table(records, "grammar_size", n_resamples=200)
    assert table[57]["exact"].n == 2
    assert table[57]["exact"].mean == 0.5
    assert table[117]["bleu"].mean == 1.0


def test_group_table_empty_groups():
    table = group_table([record(57, 3)], "grammar_size", groups=[57, 117], n_resamples=50)
    assert table[117]["exact"].empty
    assert table[117]["exact"].n == 0
    assert not table[57]["exact"].empty


def test_aggregate_report_has_both_axes():
    records = [record(57, 3), record(57, 5, 0.0), record(117, 3)]
    report = aggregate_report(records, n_resamples=50)
    assert set(report) == {"by_size", "by_length"}
    assert list(report["by_size"]) == [57, 117]
    assert list(report["by_length"]) == [3, 5]


def test_csv_shape_and_empty_cells():
    table = group_table([record(57, 3)], "grammar_size", groups=[57, 117], n_resamples=50)
    text = table_to_csv(table, "grammar_size")
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["grammar_size", "metric", "n", "mean", "ci_low", "ci_high"]
    assert len(rows) == 1 + 2 * len(METRICS)
    by_group = {(r[0], r[1]): r for r in rows[1:]}
    assert float(by_group[("57", "exact")][3]) == 1.0
    assert by_group[("57", "exact")][2] == "1"
    assert by_group[("117", "exact")][2] == "0"
    assert by_group[("117", "exact")][3] == ""


def test_text_table_alignment_and_empty_marker():
    table = group_table([record(57, 3)], "grammar_size", groups=[57, 117], n_resamples=50)
    text = table_to_text(table, "size")
    lines = text.splitlines()
    assert len({len(l) for l in lines if l.strip()}) <= 2  # aligned columns
    assert EMPTY_CELL in text
    assert "size=57" in lines[0] and "size=117" in lines[0]
    assert "1.000 [1.000, 1.000]" in text


def test_write_report_files(tmp_path):
    records = [record(57, 3), record(57, 4, 0.0), record(117, 3)]
    paths = write_report(records, tmp_path / "report", n_resamples=50)
    assert set(paths) == {"by_size", "by_length", "text"}
    for p in paths.values():
        assert p.exists()
    text = paths["text"].read_text("utf-8")
    assert "Mean results by grammar size" in text
    assert "Mean results by sentence length" in text
    csv_text = paths["by_size"].read_text("utf-8")
    assert csv_text.startswith("size,metric,n,mean,ci_low,ci_high")
    assert "57,exact,2,0.500000" in csv_text


@settings(max_examples=50, deadline=None)
@given(values=st.lists(st.floats(min_value=0, max_value=1), min_size=1, max_size=30))
def test_ci_is_ordered_and_within_range(values):
    low, high = bootstrap_ci(values, n_resamples=300)
    assert min(values) <= low <= high <= max(values)
