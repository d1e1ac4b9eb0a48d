import json
import os

import pytest

from clustermut.cli import (
    EXIT_CONFIG,
    EXIT_MISMATCH,
    EXIT_OK,
    EXIT_RESOURCE,
    main,
)


def test_generate_writes_graph(tmp_path):
    code = main(["generate", "--seed-name", "A2", "--depth", "full",
                 "--out", str(tmp_path)])
    assert code == EXIT_OK
    path = tmp_path / "A2_seeds_full_exact.json"
    data = json.loads(path.read_text())
    assert len(data["vertices"]) == 10
    assert data["partial"] is False


def test_generate_depth_zero(tmp_path):
    code = main(["generate", "--seed-name", "A4", "--depth", "0",
                 "--out", str(tmp_path), "--format", "csv"])
    assert code == EXIT_OK
    lines = (tmp_path / "A4_seeds_0_exact.csv").read_text().splitlines()
    assert len(lines) == 1  # header only, no edges


def test_generate_quiver_payload(tmp_path):
    code = main(["generate", "--seed-name", "A2", "--depth", "full",
                 "--payload", "quivers", "--out", str(tmp_path)])
    assert code == EXIT_OK
    data = json.loads((tmp_path / "A2_quivers_full_exact.json").read_text())
    assert len(data["vertices"]) == 2


def test_unknown_seed_is_config_error(tmp_path):
    assert main(["generate", "--seed-name", "Z9", "--out", str(tmp_path)]) \
        == EXIT_CONFIG


def test_bad_depth_is_config_error(tmp_path):
    assert main(["generate", "--seed-name", "A3", "--depth", "soon",
                 "--out", str(tmp_path)]) == EXIT_CONFIG


def test_bad_flag_is_config_error():
    assert main(["generate", "--no-such-flag"]) == EXIT_CONFIG


def test_vertex_cap_gives_resource_exit_and_partial_file(tmp_path):
    code = main(["generate", "--seed-name", "I1", "--depth", "4",
                 "--max-vertices", "25", "--out", str(tmp_path)])
    assert code == EXIT_RESOURCE
    data = json.loads((tmp_path / "I1_seeds_4_exact.json").read_text())
    assert data["partial"] is True
    assert len(data["vertices"]) >= 25


def test_catalogue_override(tmp_path):
    catalogue = tmp_path / "seeds.json"
    catalogue.write_text(json.dumps({"mine": {"matrix": [[0, 1], [-1, 0]]}}))
    code = main(["generate", "--seed-name", "mine", "--depth", "full",
                 "--catalogue", str(catalogue), "--out", str(tmp_path)])
    assert code == EXIT_OK
    data = json.loads((tmp_path / "mine_seeds_full_exact.json").read_text())
    assert len(data["vertices"]) == 10  # same combinatorics as A2


def test_out_env_var(tmp_path, monkeypatch):
    monkeypatch.setenv("CLUSTERMUT_OUT", str(tmp_path))
    assert main(["generate", "--seed-name", "A2", "--depth", "1"]) == EXIT_OK
    assert (tmp_path / "A2_seeds_1_exact.json").exists()


def test_analyze_writes_stats_and_figure(tmp_path):
    code = main(["analyze", "--seed-name", "A3", "--depth", "full",
                 "--out", str(tmp_path)])
    assert code == EXIT_OK
    assert (tmp_path / "A3_seeds_full_stats.csv").exists()
    assert (tmp_path / "A3_seeds_full_stats.png").stat().st_size > 0


def test_embed_report(tmp_path):
    code = main(["embed", "--seed-name", "B3", "--out", str(tmp_path)])
    assert code == EXIT_OK
    rows = (tmp_path / "B3_embedding.csv").read_text().splitlines()
    assert rows[1].split(",")[:3] == ["40", "10", "4"]
    assert (tmp_path / "B3_embedding.png").exists()


def test_reproduce_unknown_target(tmp_path):
    assert main(["reproduce", "99", "--out", str(tmp_path)]) == EXIT_CONFIG


def test_export_plotdata_counts(tmp_path):
    code = main(["export-plotdata", "--series", "counts",
                 "--seed-name", "A3", "--out", str(tmp_path)])
    assert code == EXIT_OK
    rows = (tmp_path / "count_series.csv").read_text().splitlines()
    assert rows[0] == "algebra,depth,seeds"
    counts = [int(r.split(",")[2]) for r in rows[1:]]
    assert counts[0] == 1 and counts[-1] == 84
    assert (tmp_path / "count_series.png").exists()


def test_export_plotdata_counts_needs_names(tmp_path):
    assert main(["export-plotdata", "--series", "counts",
                 "--out", str(tmp_path)]) == EXIT_CONFIG


def test_export_plotdata_ratio_depth_one_is_unity(tmp_path):
    code = main(["export-plotdata", "--series", "ratio", "--depth", "2",
                 "--seed-name", "A3", "--seed-name", "B3",
                 "--out", str(tmp_path)])
    assert code == EXIT_OK
    rows = (tmp_path / "ratio_series.csv").read_text().splitlines()[1:]
    at_depth_one = [r for r in rows if r.split(",")[1] == "1"]
    assert at_depth_one
    assert all(float(r.split(",")[4]) == 1.0 for r in at_depth_one)


def test_ml_experiment_smoke(tmp_path):
    pytest.importorskip("matplotlib")
    code = main(["ml", "binary-pairs", "--pairs", "A4:D4", "--rng", "1",
                 "--out", str(tmp_path)])
    assert code == EXIT_OK
    assert (tmp_path / "binary-pairs_rng1.csv").exists()
    report = json.loads((tmp_path / "binary-pairs_rng1.json").read_text())
    assert report["rng_seed"] == 1
    assert len(report["rows"]) == 2  # with and without the matrix block
    assert (tmp_path / "binary-pairs_rng1.png").exists()
