import math

import numpy as np
import pytest

from qdiv import (
    BudgetExceeded,
    NonUniformCapable,
    distribution_properties,
    emit_tables,
    enumerate_ordered,
    enumerate_unordered,
    from_multiplicities,
    hellinger,
    hellinger_squared,
    jaccard_distance,
    jsd,
    kl,
    kn,
    run_pairwise_experiment,
    run_rank_comparison,
    run_uniform_study,
    write_uniform_study_csv,
)

PAIRWISE_HEADER = "index_p,index_q,kl,kn,jsd,hellinger,jaccard"


def read_lines(path):
    text = path.read_bytes().decode("utf-8")
    assert "\r" not in text
    assert text.endswith("\n")
    return text[:-1].split("\n")


class TestPairwise:
    def test_tiny_domain_layout(self, tmp_path):
        out = tmp_path / "pairs.csv"
        result = run_pairwise_experiment(4, 3, out)
        lines = read_lines(out)
        assert lines[0] == PAIRWISE_HEADER
        assert len(lines) == 1 + 9
        assert result.rows_written == 9
        # self-pairs sit on the diagonal and are exactly zero
        for i in range(3):
            row = lines[1 + i * 3 + i]
            assert row == f"{i},{i},0.000000,0.000000,0.000000,0.000000,0.000000"

    def test_rows_match_scalar_measures(self, tmp_path):
        out = tmp_path / "pairs.csv"
        run_pairwise_experiment(8, 3, out)
        dists = list(enumerate_unordered(8, 3))
        lines = read_lines(out)[1:]
        assert len(lines) == len(dists) ** 2
        for line in lines[:: 7]:
            parts = line.split(",")
            p = dists[int(parts[0])]
            q = dists[int(parts[1])]
            expected = (kl(p, q), kn(p, q), jsd(p, q), hellinger(p, q), jaccard_distance(p, q))
            for text, value in zip(parts[2:], expected):
                assert float(text) == pytest.approx(value, abs=5.1e-7)

    def test_byte_identical_across_thread_counts(self, tmp_path):
        blobs = []
        for threads in (1, 2, 5):
            out = tmp_path / f"pairs_{threads}.csv"
            run_pairwise_experiment(10, 4, out, threads=threads)
            blobs.append(out.read_bytes())
            summary = tmp_path / f"pairs_{threads}_summary.csv"
            blobs.append(summary.read_bytes())
        assert blobs[0::2] == [blobs[0]] * 3
        assert blobs[1::2] == [blobs[1]] * 3

    def test_budget_enforced(self, tmp_path):
        with pytest.raises(BudgetExceeded):
            run_pairwise_experiment(15, 5, tmp_path / "x.csv", budget=100)

    def test_summary_contents(self, tmp_path):
        out = tmp_path / "pairs.csv"
        result = run_pairwise_experiment(8, 3, out)
        lines = read_lines(result.summary_path)
        assert lines[0] == "record,measure_a,measure_b,value"
        kinds = {line.split(",")[0] for line in lines[1:]}
        assert kinds == {"pearson", "distinct_count", "mean_gap", "sd_gap", "mean_over_max"}
        assert len([l for l in lines if l.startswith("pearson")]) == 10
        assert ("kl", "kn") in result.correlations

    def test_kept_values_are_bounded(self, tmp_path):
        result = run_pairwise_experiment(9, 4, tmp_path / "p.csv", keep_values=True)
        assert result.values is not None
        assert set(result.values) == {"kl", "kn", "jsd", "hellinger", "jaccard"}
        for column in result.values.values():
            assert column.shape == (result.rows_written,)
        assert float(result.values["kn"].max()) <= 1.0 + 1e-12
        assert float(result.values["kl"].min()) == 0.0

    def test_single_distribution_domain(self, tmp_path):
        out = tmp_path / "one.csv"
        result = run_pairwise_experiment(4, 4, out)
        lines = read_lines(out)
        assert lines[1] == "0,0,0.000000,0.000000,0.000000,0.000000,0.000000"
        assert result.correlations == {}


class TestUniformStudy:
    def test_requires_divisible_total(self):
        with pytest.raises(NonUniformCapable):
            run_uniform_study(13, 5)

    def test_row_count_and_order(self):
        rows = run_uniform_study(12, 6)
        assert len(rows) == 11
        assert rows[0].distribution.multiplicities == (7, 1, 1, 1, 1, 1)
        assert rows[-1].distribution.multiplicities == (2, 2, 2, 2, 2, 2)

    def test_uniform_row_is_zero_and_rank_one(self):
        rows = run_uniform_study(12, 6)
        uniform_row = rows[-1]
        assert uniform_row.distribution.is_uniform()
        for measure in ("kn", "kl", "jsd", "hellinger", "jaccard"):
            assert uniform_row.value(measure) == 0.0
            assert uniform_row.ranks[measure] == 1.0

    def test_hellinger_column_is_squared_form(self):
        uniform = from_multiplicities([2] * 6)
        for row in run_uniform_study(12, 6):
            assert row.hellinger == hellinger_squared(row.distribution, uniform)
            assert row.kl == kl(row.distribution, uniform)

    def test_properties_attached(self):
        rows = run_uniform_study(12, 6)
        for row in rows:
            assert row.properties == distribution_properties(row.distribution)

    def test_csv_layout(self, tmp_path):
        rows = run_uniform_study(12, 6)
        path = write_uniform_study_csv(rows, tmp_path / "study.csv")
        lines = read_lines(path)
        assert lines[0].startswith("distribution,kn,kl,jsd,hellinger,jaccard,entropy,cv,")
        assert lines[1].startswith('"7,1,1,1,1,1",')
        # uniform counts have zero variance: no skewness or kurtosis fields
        assert lines[-1].startswith('"2,2,2,2,2,2",')
        assert ",,," in lines[-1]
        assert len(lines) == 12


class TestTables:
    def test_records_and_files(self, tmp_path):
        records = emit_tables((6, 7), (2, 3), tmp_path)
        assert len(records) == 2 * 2 * 5 * 2
        stats = {(r.cells, r.dots, r.measure, r.statistic): r.value for r in records}
        rows = run_uniform_study(12, 6)
        values = [row.kn for row in rows]
        assert stats[(6, 12, "kn", "max")] == pytest.approx(max(values), abs=1e-12)
        assert stats[(6, 12, "kn", "mean_over_max")] == pytest.approx(
            (sum(values) / len(values)) / max(values), abs=1e-12
        )
        t1 = read_lines(tmp_path / "table1.csv")
        t2 = read_lines(tmp_path / "table2.csv")
        assert t1[0] == t2[0] == "cells,dots,kn,kl,jsd,hellinger,jaccard"
        assert len(t1) == 1 + 4
        assert len(t2) == 1 + 4 + 1

    def test_average_row_is_column_mean(self, tmp_path):
        emit_tables((6, 7), (2, 3), tmp_path)
        t2 = read_lines(tmp_path / "table2.csv")
        body = [line.split(",") for line in t2[1:-1]]
        avg = t2[-1].split(",")
        assert avg[0] == "avg"
        for col in range(2, 7):
            mean = sum(float(row[col]) for row in body) / len(body)
            assert float(avg[col]) == pytest.approx(mean, abs=5.1e-7)


class TestTableSweepInvariants:
    def test_kn_maxima_stay_below_cap(self, table_records):
        # against a uniform background the normalized measure tops out near 0.5
        records, _ = table_records
        for r in records:
            if r.measure == "kn" and r.statistic == "max":
                assert r.value < 0.55, (r.cells, r.dots, r.value)

    def test_mean_never_exceeds_max(self, table_records):
        records, _ = table_records
        for r in records:
            if r.statistic == "mean_over_max":
                assert 0.0 < r.value <= 1.0, (r.cells, r.dots, r.measure)


class TestReferenceUniformStudy:
    def test_extreme_row(self):
        rows = run_uniform_study(32, 8)
        assert len(rows) == 919
        top = max(rows, key=lambda row: row.kn)
        assert top.distribution.multiplicities == (25, 1, 1, 1, 1, 1, 1, 1)
        assert top.kn == pytest.approx(0.4672, abs=1e-3)
        for measure in ("kl", "jsd", "hellinger", "jaccard"):
            assert max(rows, key=lambda row: row.value(measure)) is top

    def test_rank_sums_preserved_under_ties(self):
        rows = run_uniform_study(12, 6)
        n = len(rows)
        for measure in ("kn", "kl", "jsd", "hellinger", "jaccard"):
            assert sum(row.ranks[measure] for row in rows) == pytest.approx(
                n * (n + 1) / 2, abs=1e-9
            )


class TestRankComparison:
    def test_outputs(self, tmp_path):
        result = run_rank_comparison(12, 6, tmp_path / "ranks.csv")
        assert len(result.rows) == 11
        lines = read_lines(result.out_path)
        assert lines[0] == "distribution,rank_kn,rank_kl,rank_jsd,rank_hellinger,rank_jaccard"
        assert len(lines) == 12
        matrix = read_lines(result.spearman_path)
        assert matrix[0] == "measure,kn,kl,jsd,hellinger,jaccard"
        assert len(matrix) == 6

    def test_spearman_matrix_properties(self, tmp_path):
        result = run_rank_comparison(12, 6, tmp_path / "ranks.csv")
        measures = ("kn", "kl", "jsd", "hellinger", "jaccard")
        for a in measures:
            assert result.spearman[(a, a)] == pytest.approx(1.0, abs=1e-12)
            for b in measures:
                assert result.spearman[(a, b)] == pytest.approx(
                    result.spearman[(b, a)], abs=1e-12
                )
                assert -1.0 - 1e-12 <= result.spearman[(a, b)] <= 1.0 + 1e-12
