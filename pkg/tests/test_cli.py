"""End-to-end command-line tests, run in-process through main(argv)."""

import json
import re

import numpy as np
import pytest

from centrokit import estimate_avg_diameter, write_centroids_csv, write_pfm, write_polygons_json
from centrokit.cli import main


def _write_csv(path, rows):
    path.parent.mkdir(parents=True, exist_ok=True)
    write_centroids_csv(path, np.asarray(rows, dtype=float).reshape(-1, 2))


def _read_json(path):
    return json.loads(path.read_text())


# ---------------------------------------------------------------------------
# argument plumbing


def test_no_command_is_usage_error():
    with pytest.raises(SystemExit):
        main([])


def test_unknown_command_is_usage_error():
    with pytest.raises(SystemExit):
        main(["frobnicate"])


def test_bad_seed_rejected(tmp_path, capsys):
    _write_csv(tmp_path / "a.csv", [[10.0, 10.0]])
    code = main(["gengt", str(tmp_path), "--ifcrn", "--seed", "-1", "--quiet"])
    assert code == 1
    assert "u64" in capsys.readouterr().err


def test_bad_jobs_rejected(tmp_path, capsys):
    _write_csv(tmp_path / "a.csv", [[10.0, 10.0]])
    code = main(["gengt", str(tmp_path), "--ifcrn", "--jobs", "0", "--quiet"])
    assert code == 1
    assert "jobs" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# full pipeline: synth -> gengt -> extract -> eval


def _run_pipeline(tmp_path, mode_flags_gengt, mode_flags_extract):
    gt = tmp_path / "gt"
    maps = tmp_path / "maps"
    preds = tmp_path / "preds"
    assert main([
        "synth", "--n", "8", "--scenes", "2", "--min-sep", "24",
        "--edge-buffer", "25", "--out", str(gt), "--seed", "5", "--quiet",
    ]) == 0
    assert main(["gengt", str(gt), *mode_flags_gengt, "--out", str(maps), "--quiet"]) == 0
    assert main(["extract", str(maps), *mode_flags_extract, "--out", str(preds), "--quiet"]) == 0
    assert main([
        "eval", "--pred", str(preds), "--gt", str(gt), "--diameter", "24",
        "--out", str(tmp_path / "report"), "--quiet",
    ]) == 0
    return _read_json(tmp_path / "report.json")


def test_pipeline_ifcrn_perfect(tmp_path):
    payload = _run_pipeline(tmp_path, ["--ifcrn"], ["--ifcrn"])
    assert payload["n_images"] == 2
    assert payload["images"] == ["scene-0000", "scene-0001"]
    assert payload["total_gt_N"] == 16
    assert (payload["tp"], payload["fp"], payload["fn"]) == (16, 0, 0)
    assert payload["precision"] == payload["recall"] == payload["fscore"] == 1.0
    assert payload["el"] == {"0.3": 0.0, "1": 0.0}
    assert payload["params"] == {
        "slack_s": 6.0, "threshold_t": 24.0, "edge_margin_m": 24.0, "alphas": [0.3, 1.0],
    }
    csv_text = (tmp_path / "report.csv").read_text()
    assert csv_text.splitlines()[0].endswith("el_0.3,el_1")
    assert len(csv_text.splitlines()) == 2


def test_pipeline_fcrn_perfect(tmp_path):
    payload = _run_pipeline(
        tmp_path, ["--fcrn", "--radius", "4", "--sigma", "2"], ["--fcrn"]
    )
    assert (payload["tp"], payload["fp"], payload["fn"]) == (16, 0, 0)
    assert payload["el"]["0.3"] == 0.0


def test_reruns_are_byte_identical(tmp_path):
    gt = tmp_path / "gt"
    assert main(["synth", "--n", "6", "--scenes", "1", "--min-sep", "24",
                 "--edge-buffer", "25", "--out", str(gt), "--seed", "3", "--quiet"]) == 0
    maps_a, maps_b = tmp_path / "ma", tmp_path / "mb"
    for target, jobs in ((maps_a, "1"), (maps_b, "4")):
        assert main(["gengt", str(gt), "--ifcrn", "--out", str(target),
                     "--jobs", jobs, "--quiet"]) == 0
    assert (maps_a / "scene-0000.pfm").read_bytes() == (maps_b / "scene-0000.pfm").read_bytes()

    preds = tmp_path / "preds"
    assert main(["extract", str(maps_a), "--ifcrn", "--out", str(preds), "--quiet"]) == 0
    for rep, jobs in (("r1", "1"), ("r2", "3")):
        assert main(["eval", "--pred", str(preds), "--gt", str(gt), "--diameter", "24",
                     "--jobs", jobs, "--out", str(tmp_path / rep), "--quiet"]) == 0
    assert (tmp_path / "r1.json").read_bytes() == (tmp_path / "r2.json").read_bytes()
    assert (tmp_path / "r1.csv").read_bytes() == (tmp_path / "r2.csv").read_bytes()


def test_synth_reruns_identical(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    for out in (a, b):
        assert main(["synth", "--n", "10", "--scenes", "2", "--min-sep", "10",
                     "--out", str(out), "--seed", "11", "--quiet"]) == 0
    for name in ("scene-0000.csv", "scene-0001.csv"):
        assert (a / name).read_bytes() == (b / name).read_bytes()


# ---------------------------------------------------------------------------
# gengt diagnostics


def test_gengt_fcrn_requires_radius(tmp_path, capsys):
    _write_csv(tmp_path / "a.csv", [[10.0, 10.0]])
    code = main(["gengt", str(tmp_path), "--fcrn", "--quiet"])
    assert code == 1
    assert "radius" in capsys.readouterr().err


def test_gengt_out_of_bounds_names_row(tmp_path, capsys):
    _write_csv(tmp_path / "a.csv", [[50.0, 50.0], [600.0, 100.0]])
    code = main(["gengt", str(tmp_path), "--ifcrn", "--quiet"])
    assert code == 1
    err = capsys.readouterr().err
    assert "line 3" in err and "512x512" in err


def test_gengt_malformed_header(tmp_path, capsys):
    (tmp_path / "a.csv").write_text("a,b\n1,2\n")
    code = main(["gengt", str(tmp_path), "--ifcrn", "--quiet"])
    assert code == 1
    assert "line 1" in capsys.readouterr().err


def test_gengt_empty_csv_gives_zero_map(tmp_path):
    _write_csv(tmp_path / "a.csv", np.zeros((0, 2)))
    assert main(["gengt", str(tmp_path), "--ifcrn", "--quiet"]) == 0
    from centrokit import read_pfm

    arr = read_pfm(tmp_path / "a.pfm")
    assert arr.shape == (128, 128)  # 512/4 downsampled
    assert not arr.any()


def test_gengt_missing_input(tmp_path, capsys):
    code = main(["gengt", str(tmp_path / "nope.csv"), "--ifcrn", "--quiet"])
    assert code == 1
    assert "no such file" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# extract diagnostics


def test_extract_bad_pfm_magic(tmp_path, capsys):
    (tmp_path / "m.pfm").write_bytes(b"PF\n2 2\n-1.0\n" + b"\x00" * 16)
    code = main(["extract", str(tmp_path), "--ifcrn", "--quiet"])
    assert code == 1
    assert "byte 0" in capsys.readouterr().err


def test_extract_truncated_pfm(tmp_path, capsys):
    write_pfm(tmp_path / "m.pfm", np.ones((4, 4), dtype=np.float32))
    raw = (tmp_path / "m.pfm").read_bytes()
    (tmp_path / "m.pfm").write_bytes(raw[:-5])
    code = main(["extract", str(tmp_path), "--ifcrn", "--quiet"])
    assert code == 1
    assert "expected" in capsys.readouterr().err


def test_extract_mask_mode(tmp_path):
    from centrokit import read_centroids_csv, write_pgm16

    labels = np.zeros((32, 32), dtype=np.uint16)
    labels[2:5, 2:5] = 1
    labels[10:13, 20:23] = 2
    labels[25:28, 7:10] = 3
    write_pgm16(tmp_path / "m.pgm", labels)
    assert main(["extract", str(tmp_path), "--mask", "--quiet"]) == 0
    pts = read_centroids_csv(tmp_path / "m.csv")
    assert pts.shape == (3, 2)
    assert pts[0].tolist() == [3.0, 3.0]


# ---------------------------------------------------------------------------
# eval


def test_eval_unpaired_abort(tmp_path, capsys):
    _write_csv(tmp_path / "gt" / "a.csv", [[100.0, 100.0]])
    _write_csv(tmp_path / "gt" / "b.csv", [[100.0, 100.0]])
    _write_csv(tmp_path / "preds" / "a.csv", [[100.0, 100.0]])
    _write_csv(tmp_path / "preds" / "c.csv", [[100.0, 100.0]])
    code = main(["eval", "--pred", str(tmp_path / "preds"), "--gt", str(tmp_path / "gt"),
                 "--diameter", "24", "--out", str(tmp_path / "r"), "--quiet"])
    assert code == 1
    err = capsys.readouterr().err
    assert "b (ground truth only)" in err
    assert "c (prediction only)" in err


def test_eval_allow_missing_counts_fn(tmp_path):
    _write_csv(tmp_path / "gt" / "a.csv", [[100.0, 100.0], [200.0, 200.0]])
    _write_csv(tmp_path / "gt" / "b.csv", [[150.0, 150.0]])
    _write_csv(tmp_path / "preds" / "a.csv", [[100.0, 100.0], [200.0, 200.0]])
    assert main(["eval", "--pred", str(tmp_path / "preds"), "--gt", str(tmp_path / "gt"),
                 "--diameter", "24", "--allow-missing",
                 "--out", str(tmp_path / "r"), "--quiet"]) == 0
    payload = _read_json(tmp_path / "r.json")
    assert payload["total_gt_N"] == 3
    assert (payload["tp"], payload["fp"], payload["fn"]) == (2, 0, 1)
    assert payload["el"]["0.3"] == pytest.approx(1.0 / 3.0)


def test_eval_ten_gt_scenario(tmp_path):
    # 10 interior GTs, 8 predicted exactly, 2 spurious far from everything:
    # the far pairs saturate at 1 + alpha and count as FP + FN each.
    gts = [[50.0 * (k + 1), 50.0] for k in range(8)] + [[50.0, 120.0], [100.0, 120.0]]
    preds = gts[:8] + [[300.0, 300.0], [400.0, 400.0]]
    _write_csv(tmp_path / "gt" / "x.csv", gts)
    _write_csv(tmp_path / "preds" / "x.csv", preds)
    assert main(["eval", "--pred", str(tmp_path / "preds"), "--gt", str(tmp_path / "gt"),
                 "--diameter", "24", "--out", str(tmp_path / "r"), "--quiet"]) == 0
    payload = _read_json(tmp_path / "r.json")
    assert payload["total_gt_N"] == 10
    assert (payload["tp"], payload["fp"], payload["fn"]) == (8, 2, 2)
    assert payload["precision"] == payload["recall"] == pytest.approx(0.8)
    assert payload["el"]["0.3"] == pytest.approx(2 * 1.3 / 10)
    assert payload["el"]["1"] == pytest.approx(2 * 2.0 / 10)


def test_eval_per_image_flag(tmp_path):
    _write_csv(tmp_path / "gt" / "a.csv", [[100.0, 100.0]])
    _write_csv(tmp_path / "preds" / "a.csv", [[103.0, 104.0]])
    assert main(["eval", "--pred", str(tmp_path / "preds"), "--gt", str(tmp_path / "gt"),
                 "--diameter", "24", "--per-image",
                 "--out", str(tmp_path / "r"), "--quiet"]) == 0
    payload = _read_json(tmp_path / "r.json")
    (img,) = payload["per_image"]
    assert img["image"] == "a"
    assert img["tp"] == 1
    (pair,) = img["per_pair_errors"]["0.3"]
    assert pair[2] == pytest.approx(5.0)  # 3-4-5 triangle
    assert img["error_sum"]["0.3"] == 0.0  # d = 5 sits inside the slack s = 6


def test_eval_polygon_diameter(tmp_path):
    polys = [
        np.array([[0.0, 0.0], [10.0, 0.0], [10.0, 10.0], [0.0, 10.0]]),
        np.array([[0.0, 0.0], [20.0, 0.0], [20.0, 20.0], [0.0, 20.0]]),
    ]
    write_polygons_json(tmp_path / "polys.json", polys)
    d = estimate_avg_diameter(polys)
    _write_csv(tmp_path / "gt" / "a.csv", [[100.0, 100.0]])
    _write_csv(tmp_path / "preds" / "a.csv", [[100.0, 100.0]])
    assert main(["eval", "--pred", str(tmp_path / "preds"), "--gt", str(tmp_path / "gt"),
                 "--polygons", str(tmp_path / "polys.json"),
                 "--out", str(tmp_path / "r"), "--quiet"]) == 0
    params = _read_json(tmp_path / "r.json")["params"]
    assert params["slack_s"] == 0.25 * d
    assert params["threshold_t"] == d
    assert params["edge_margin_m"] == d


def test_eval_diameter_and_polygons_conflict(tmp_path, capsys):
    write_polygons_json(tmp_path / "p.json", [np.array([[0.0, 0.0], [4.0, 0.0], [4.0, 4.0]])])
    _write_csv(tmp_path / "gt" / "a.csv", [[100.0, 100.0]])
    _write_csv(tmp_path / "preds" / "a.csv", [[100.0, 100.0]])
    code = main(["eval", "--pred", str(tmp_path / "preds"), "--gt", str(tmp_path / "gt"),
                 "--diameter", "24", "--polygons", str(tmp_path / "p.json"),
                 "--out", str(tmp_path / "r"), "--quiet"])
    assert code == 1
    assert "exactly one" in capsys.readouterr().err


def test_eval_requires_some_diameter_source(tmp_path, capsys):
    _write_csv(tmp_path / "gt" / "a.csv", [[100.0, 100.0]])
    _write_csv(tmp_path / "preds" / "a.csv", [[100.0, 100.0]])
    code = main(["eval", "--pred", str(tmp_path / "preds"), "--gt", str(tmp_path / "gt"),
                 "--out", str(tmp_path / "r"), "--quiet"])
    assert code == 1
    assert "exactly one" in capsys.readouterr().err


def test_eval_empty_alpha_list(tmp_path, capsys):
    _write_csv(tmp_path / "gt" / "a.csv", [[100.0, 100.0]])
    _write_csv(tmp_path / "preds" / "a.csv", [[100.0, 100.0]])
    code = main(["eval", "--pred", str(tmp_path / "preds"), "--gt", str(tmp_path / "gt"),
                 "--diameter", "24", "--alpha", ",",
                 "--out", str(tmp_path / "r"), "--quiet"])
    assert code == 1
    assert "alpha" in capsys.readouterr().err


def test_eval_all_edge_el_is_null(tmp_path):
    # every GT inside the margin: El undefined, counts still reported
    _write_csv(tmp_path / "gt" / "a.csv", [[5.0, 5.0]])
    _write_csv(tmp_path / "preds" / "a.csv", [[5.0, 5.0]])
    assert main(["eval", "--pred", str(tmp_path / "preds"), "--gt", str(tmp_path / "gt"),
                 "--diameter", "24", "--out", str(tmp_path / "r"), "--quiet"]) == 0
    payload = _read_json(tmp_path / "r.json")
    assert payload["el"]["0.3"] is None
    assert payload["total_gt_N"] == 0
    assert "NA" in (tmp_path / "r.csv").read_text()


# ---------------------------------------------------------------------------
# config file


def test_config_supplies_defaults(tmp_path, capsys):
    (tmp_path / "cfg.json").write_text('{"geometry": "64x64"}')
    _write_csv(tmp_path / "a.csv", [[100.0, 100.0]])
    code = main(["gengt", str(tmp_path / "a.csv"), "--ifcrn",
                 "--config", str(tmp_path / "cfg.json"), "--quiet"])
    assert code == 1  # 100 is outside the configured 64x64
    assert "64x64" in capsys.readouterr().err


def test_flag_overrides_config(tmp_path):
    (tmp_path / "cfg.json").write_text('{"geometry": "64x64"}')
    _write_csv(tmp_path / "a.csv", [[100.0, 100.0]])
    assert main(["gengt", str(tmp_path / "a.csv"), "--ifcrn", "--geometry", "256x256",
                 "--config", str(tmp_path / "cfg.json"), "--quiet"]) == 0


def test_config_must_be_object(tmp_path, capsys):
    (tmp_path / "cfg.json").write_text("[1, 2]")
    _write_csv(tmp_path / "a.csv", [[10.0, 10.0]])
    code = main(["gengt", str(tmp_path / "a.csv"), "--ifcrn",
                 "--config", str(tmp_path / "cfg.json"), "--quiet"])
    assert code == 1
    assert "JSON object" in capsys.readouterr().err


def test_config_invalid_json_names_line(tmp_path, capsys):
    (tmp_path / "cfg.json").write_text('{\n"geometry": }\n')
    _write_csv(tmp_path / "a.csv", [[10.0, 10.0]])
    code = main(["gengt", str(tmp_path / "a.csv"), "--ifcrn",
                 "--config", str(tmp_path / "cfg.json"), "--quiet"])
    assert code == 1
    assert "line 2" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# xval


def _fold(path, n, el_03, el_1=None, precision=0.9, recall=0.9, fscore=0.9):
    el = {"0.3": el_03}
    if el_1 is not None:
        el["1"] = el_1
    path.write_text(json.dumps({
        "total_gt_N": n, "precision": precision, "recall": recall,
        "fscore": fscore, "el": el,
    }))


def test_xval_weighted_mean_and_std(tmp_path):
    weights = (8221, 9075, 7600, 9419)
    values = (0.21, 0.25, 0.18, 0.30)
    for i, (w, v) in enumerate(zip(weights, values)):
        _fold(tmp_path / f"fold{i}.json", w, v)
    assert main(["xval", str(tmp_path), "--out", str(tmp_path / "sum.json"), "--quiet"]) == 0
    summary = _read_json(tmp_path / "sum.json")
    el = summary["el"]["0.3"]
    assert el["weighted_mean"] == pytest.approx(0.23863791344892904, abs=1e-12)
    assert el["std_dev"] == pytest.approx(0.045, abs=1e-12)
    assert summary["weights"] == [8221.0, 9075.0, 7600.0, 9419.0]
    assert len(el["fold_values"]) == 4


def test_xval_single_fold(tmp_path):
    _fold(tmp_path / "only.json", 500, 0.42)
    assert main(["xval", str(tmp_path), "--out", str(tmp_path / "s.json"), "--quiet"]) == 0
    el = _read_json(tmp_path / "s.json")["el"]["0.3"]
    assert el["weighted_mean"] == 0.42
    assert el["std_dev"] == 0.0


def test_xval_mismatched_alpha_lists(tmp_path, capsys):
    _fold(tmp_path / "a.json", 100, 0.2)
    _fold(tmp_path / "b.json", 100, 0.2, el_1=0.4)
    code = main(["xval", str(tmp_path), "--out", str(tmp_path / "s.json"), "--quiet"])
    assert code == 1
    assert "different alpha lists" in capsys.readouterr().err


def test_xval_null_el_rejected(tmp_path, capsys):
    _fold(tmp_path / "a.json", 100, None)
    code = main(["xval", str(tmp_path), "--out", str(tmp_path / "s.json"), "--quiet"])
    assert code == 1
    assert "undefined" in capsys.readouterr().err


def test_xval_zero_weight_rejected(tmp_path, capsys):
    _fold(tmp_path / "a.json", 0, 0.2)
    code = main(["xval", str(tmp_path), "--out", str(tmp_path / "s.json"), "--quiet"])
    assert code == 1
    assert "positive integer" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# bench


def test_bench_empty_dir(tmp_path, capsys):
    (tmp_path / "maps").mkdir()
    code = main(["bench", str(tmp_path / "maps"), "--ifcrn", "--quiet"])
    assert code == 1
    assert "no density map files" in capsys.readouterr().err


def test_bench_report_self_consistent(tmp_path):
    assert main(["synth", "--n", "10", "--scenes", "2", "--min-sep", "24",
                 "--edge-buffer", "25", "--render", "ifcrn",
                 "--out", str(tmp_path / "scenes"), "--seed", "2", "--quiet"]) == 0
    assert main(["bench", str(tmp_path / "scenes"), "--ifcrn", "--repeats", "3",
                 "--out", str(tmp_path / "b.json"), "--quiet"]) == 0
    payload = _read_json(tmp_path / "b.json")
    assert payload["total_nuclei"] == 20
    assert payload["repeats"] == 3
    assert len(payload["per_repeat_seconds"]) == 3
    median = sorted(payload["per_repeat_seconds"])[1]
    assert payload["nuclei_per_second"] == pytest.approx(20 / median)


def test_synth_render_fcrn_requires_radius(tmp_path, capsys):
    code = main(["synth", "--n", "3", "--render", "fcrn",
                 "--out", str(tmp_path / "s"), "--quiet"])
    assert code == 1
    assert "radius" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# plot


def _plot_inputs(tmp_path):
    e1, e2 = tmp_path / "e1.json", tmp_path / "e2.json"
    b1, b2 = tmp_path / "b1.json", tmp_path / "b2.json"
    e1.write_text(json.dumps({"el": {"0.3": 0.2, "1": 0.5}}))
    e2.write_text(json.dumps({"el": {"0.3": 0.1, "1": 0.3}}))
    b1.write_text(json.dumps({"nuclei_per_second": 1000.0}))
    b2.write_text(json.dumps({"nuclei_per_second": 2500.0}))
    return e1, e2, b1, b2


def test_plot_structure_and_sizes(tmp_path):
    e1, e2, b1, b2 = _plot_inputs(tmp_path)
    assert main(["plot",
                 "--series", f"{e1}:{b1}:40000:big",
                 "--series", f"{e2}:{b2}:10000",
                 "--out", str(tmp_path / "fig"), "--quiet"]) == 0
    svg = (tmp_path / "fig.svg").read_text()
    assert svg.count("<circle") == 2
    assert svg.count('class="point-label"') == 2
    assert ">big<" in svg
    assert ">series-2<" in svg  # empty label auto-named by position
    radii = [float(r) for r in re.findall(r'<circle[^>]*\br="([0-9.]+)"', svg)]
    assert (radii[0] / radii[1]) ** 2 == pytest.approx(4.0, rel=0.01)

    csv_lines = (tmp_path / "fig.csv").read_text().splitlines()
    assert csv_lines[0] == "label,rate,el,size"
    assert csv_lines[1].startswith("big,1000.0,0.2,")
    assert csv_lines[2].startswith("series-2,2500.0,0.1,")


def test_plot_alpha_selection(tmp_path):
    e1, _, b1, _ = _plot_inputs(tmp_path)
    assert main(["plot", "--series", f"{e1}:{b1}:100:m", "--alpha", "1",
                 "--out", str(tmp_path / "f"), "--quiet"]) == 0
    assert ",0.5," in (tmp_path / "f.csv").read_text().splitlines()[1]


def test_plot_manifest(tmp_path):
    e1, e2, b1, b2 = _plot_inputs(tmp_path)
    manifest = tmp_path / "m.json"
    manifest.write_text(json.dumps([
        {"eval": str(e1), "bench": str(b1), "size": 100, "label": "one"},
        {"eval": str(e2), "bench": str(b2), "size": 200, "label": "two"},
    ]))
    assert main(["plot", "--manifest", str(manifest),
                 "--out", str(tmp_path / "f"), "--quiet"]) == 0
    assert (tmp_path / "f.svg").read_text().count("<circle") == 2


def test_plot_bad_series_format(tmp_path, capsys):
    code = main(["plot", "--series", "a:b", "--out", str(tmp_path / "f"), "--quiet"])
    assert code == 1
    assert "EVAL.json:BENCH.json:SIZE" in capsys.readouterr().err


def test_plot_null_el_rejected(tmp_path, capsys):
    e = tmp_path / "e.json"
    b = tmp_path / "b.json"
    e.write_text(json.dumps({"el": {"0.3": None}}))
    b.write_text(json.dumps({"nuclei_per_second": 10.0}))
    code = main(["plot", "--series", f"{e}:{b}:100:x",
                 "--out", str(tmp_path / "f"), "--quiet"])
    assert code == 1
    assert "undefined" in capsys.readouterr().err


def test_plot_needs_input(tmp_path, capsys):
    code = main(["plot", "--out", str(tmp_path / "f"), "--quiet"])
    assert code == 1
    assert "manifest" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# summary lines


def test_summary_line_and_quiet(tmp_path, capsys):
    assert main(["synth", "--n", "2", "--out", str(tmp_path / "a"), "--seed", "1"]) == 0
    assert "synth: wrote 1 scene(s)" in capsys.readouterr().out
    assert main(["synth", "--n", "2", "--out", str(tmp_path / "b"), "--seed", "1",
                 "--quiet"]) == 0
    assert capsys.readouterr().out == ""
