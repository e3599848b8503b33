import csv
import json

import numpy as np
import pytest

from qgclust.cli import main


@pytest.fixture
def blob_csv(tmp_path):
    rng = np.random.default_rng(11)
    pts = np.vstack([rng.normal(c, 0.4, size=(15, 2)) for c in [(0, 0), (5, 0), (2.5, 4)]])
    labels = ["a"] * 15 + ["b"] * 15 + ["c"] * 15
    path = tmp_path / "blobs.csv"
    with path.open("w") as fh:
        for row, lab in zip(pts, labels):
            fh.write(f"{float(row[0])!r},{float(row[1])!r},{lab}\n")
    return path


def run_cli(args):
    return main([str(a) for a in args])


def test_cluster_writes_report(blob_csv, tmp_path):
    out = tmp_path / "report.json"
    code = run_cli(["cluster", "--dataset", blob_csv, "--label-col", "2",
                    "--k", "6", "--clusters", "3", "--out", out])
    assert code == 0
    report = json.loads(out.read_text())
    assert report["algorithm"] == "QGC1PDL1"
    assert 0.0 <= report["accuracy"] <= 1.0
    assert report["config"]["k"] == 6
    assert len(report["total_payoff_history"]) == report["iterations"]
    assert isinstance(report["converged"], bool)
    assert report["wall_time"] is None


def test_cluster_zero_iters(blob_csv, tmp_path):
    out = tmp_path / "report.json"
    code = run_cli(["cluster", "--dataset", blob_csv, "--label-col", "2",
                    "--k", "6", "--max-iters", "0", "--out", out])
    assert code == 0
    report = json.loads(out.read_text())
    assert report["iterations"] == 0
    assert report["total_payoff_history"] == []
    assert not report["converged"]
    assert report["accuracy"] is not None


def test_missing_dataset_flag_is_usage_error(capsys):
    assert run_cli(["cluster", "--k", "6"]) == 2


def test_bad_dataset_path_is_domain_error(tmp_path):
    code = run_cli(["cluster", "--dataset", tmp_path / "nope.csv", "--k", "6"])
    assert code == 1


def test_determinism_byte_identical(blob_csv, tmp_path):
    out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
    args = ["cluster", "--dataset", blob_csv, "--label-col", "2", "--k", "6",
            "--seed", "3", "--clusters", "3"]
    assert run_cli(args + ["--out", out1]) == 0
    assert run_cli(args + ["--out", out2]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_sweep_cartesian_product(blob_csv, tmp_path):
    out = tmp_path / "sweep.csv"
    code = run_cli(["sweep", "--dataset", blob_csv, "--label-col", "2",
                    "--k-min", "6", "--k-max", "7", "--payoff", "sd",
                    "--beta-values", "0.2", "0.3", "--clusters", "3", "--out", out])
    assert code == 0
    with out.open() as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 4
    assert {(r["k"], r["beta"]) for r in rows} == {
        ("6", "0.2"), ("6", "0.3"), ("7", "0.2"), ("7", "0.3")
    }
    for r in rows:
        assert 0.0 <= float(r["accuracy"]) <= 1.0


def test_sweep_deterministic(blob_csv, tmp_path):
    out1, out2 = tmp_path / "s1.csv", tmp_path / "s2.csv"
    args = ["sweep", "--dataset", blob_csv, "--label-col", "2",
            "--k-min", "6", "--k-max", "8", "--seed", "5", "--clusters", "3"]
    assert run_cli(args + ["--out", out1]) == 0
    assert run_cli(args + ["--out", out2]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_trace_lines_match_iterations(blob_csv, tmp_path):
    report_out = tmp_path / "report.json"
    trace_out = tmp_path / "trace.jsonl"
    args = ["--dataset", blob_csv, "--label-col", "2", "--k", "6"]
    assert run_cli(["cluster", *args, "--out", report_out]) == 0
    assert run_cli(["trace", *args, "--out", trace_out]) == 0
    report = json.loads(report_out.read_text())
    lines = [json.loads(line) for line in trace_out.read_text().splitlines()]
    assert len(lines) == report["iterations"]
    for line in lines:
        assert set(line) == {"iteration", "total_payoff", "rewired_players",
                             "strength_entropy"}
    totals = [line["total_payoff"] for line in lines]
    assert totals == report["total_payoff_history"]


def test_trace_sd_dominates_pd(blob_csv, tmp_path):
    traces = {}
    for payoff in ("pd", "sd"):
        out = tmp_path / f"{payoff}.jsonl"
        assert run_cli(["trace", "--dataset", blob_csv, "--label-col", "2",
                        "--k", "6", "--payoff", payoff, "--max-iters", "20",
                        "--eps", "1e-15", "--out", out]) == 0
        traces[payoff] = [json.loads(l)["total_payoff"] for l in out.read_text().splitlines()]
    assert len(traces["sd"]) == len(traces["pd"])
    for sd, pd in zip(traces["sd"], traces["pd"]):
        assert sd >= pd
