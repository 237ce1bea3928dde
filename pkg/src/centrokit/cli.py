"""Command-line interface.

Subcommands:
  gengt    render fuzzy ground-truth density maps from centroid CSVs
  extract  recover centroids from density maps or label masks
  eval     score predictions against ground truth, one El per alpha
  xval     aggregate per-fold evaluation reports (GT-count-weighted)
  synth    generate reproducible synthetic scenes
  bench    measure extraction throughput in nuclei per second
  plot     quality-versus-rate scatter as SVG plus CSV

Shared flags on every subcommand: --config <json> (defaults, overridden by
explicit flags), --seed <u64>, --jobs <n>, --quiet. All outputs are
deterministic given inputs and seed: files are enumerated in sorted order,
writers are canonical, and worker count never changes results. Exit code is
0 iff every input parsed and every output was written; diagnostics go to
stderr with the offending path and line or byte offset.

Config JSON keys mirror the long flag names with underscores, e.g.
{"alpha": [0.3, 1], "diameter": 24.0, "geometry": "512x512"}.
"""

import argparse
import json
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from . import density, extraction, io as cio, plotting
from .bench import benchmark_extraction
from .geometry import estimate_avg_diameter
from .metrics import MetricParams, aggregate_dataset, crossfold_aggregate, evaluate_image
from .synth import SceneParams, generate_scene

__all__ = ["main", "build_parser"]


def _pmap(fn, items, jobs):
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def _parse_geometry(text):
    """"WxH" -> (height, width)."""
    m = re.fullmatch(r"(\d+)x(\d+)", str(text))
    if not m:
        raise ValueError(f"geometry must look like 512x512, got {text!r}")
    w, h = int(m.group(1)), int(m.group(2))
    if w < 1 or h < 1:
        raise ValueError(f"geometry must be at least 1x1, got {text!r}")
    return h, w


def _collect(paths, suffix, what):
    """Expand files/directories into a sorted, de-duplicated file list."""
    out = []
    for p in paths:
        p = Path(p)
        if p.is_dir():
            out.extend(sorted(p.glob(f"*{suffix}")))
        elif p.is_file():
            out.append(p)
        else:
            raise ValueError(f"{p}: no such file or directory")
    if not out:
        raise ValueError(f"no {what} files found under {', '.join(map(str, paths))}")
    seen = set()
    unique = []
    for p in sorted(out):
        if p not in seen:
            seen.add(p)
            unique.append(p)
    return unique


def _opt(args, name, default=None):
    """Flag value if given, else config-file value, else default."""
    v = getattr(args, name, None)
    if v is not None:
        return v
    return args.run_config.get(name, default)


def _parse_alphas(raw):
    if raw is None:
        return [0.3, 1.0]
    if isinstance(raw, str):
        raw = [part for part in raw.split(",") if part.strip()]
    alphas = [float(a) for a in raw]
    if not alphas:
        raise ValueError("alpha list must be non-empty")
    if any(a < 0 for a in alphas):
        raise ValueError(f"alpha values must be >= 0, got {alphas}")
    return alphas


def _alpha_key(alpha):
    return f"{alpha:g}"


def _resolve_diameter(args):
    diameter = _opt(args, "diameter")
    poly_src = _opt(args, "polygons")
    if (diameter is None) == (poly_src is None):
        raise ValueError(
            "provide exactly one of --diameter or --polygons to derive s/t/margin"
        )
    if diameter is not None:
        return float(diameter)
    polygons = []
    for path in _collect([poly_src], ".json", "polygon"):
        polygons.extend(cio.read_polygons_json(path))
    return estimate_avg_diameter(polygons)


def _metric_params(args):
    """One MetricParams per alpha; s/t/margin default to 0.25 D / D / D."""
    alphas = _parse_alphas(_opt(args, "alpha"))
    slack = _opt(args, "slack")
    threshold = _opt(args, "threshold")
    margin = _opt(args, "margin")
    if slack is None or threshold is None or margin is None:
        d = _resolve_diameter(args)
        slack = 0.25 * d if slack is None else float(slack)
        threshold = d if threshold is None else float(threshold)
        margin = d if margin is None else float(margin)
    return [
        MetricParams(
            slack_s=float(slack),
            threshold_t=float(threshold),
            alpha=a,
            edge_margin_m=float(margin),
        )
        for a in alphas
    ]


def _say(args, message):
    if not args.quiet:
        print(message)


def _out_dir(args, fallback_of):
    out = _opt(args, "out")
    if out is None:
        return Path(fallback_of).parent
    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)
    return out


# ---------------------------------------------------------------- gengt


def _check_in_bounds(path, points, geometry):
    bad = density.out_of_bounds_indices(points, geometry)
    if bad.size:
        h, w = geometry
        rows = ", ".join(str(int(i) + 2) for i in bad)
        raise cio.FormatError(
            path, f"line {int(bad[0]) + 2}", f"centroid outside {w}x{h} geometry (rows {rows})"
        )


def cmd_gengt(args):
    files = _collect(args.inputs, ".csv", "centroid CSV")
    geometry = _parse_geometry(_opt(args, "geometry", "512x512"))
    sigma = float(_opt(args, "sigma", 2.0 if args.fcrn else 3.0))
    factor = int(_opt(args, "factor", 4))
    radius = _opt(args, "radius")
    if args.fcrn and radius is None:
        raise ValueError("--fcrn needs --radius (dilation radius has no default)")

    def one(path):
        points = cio.read_centroids_csv(path)
        _check_in_bounds(path, points, geometry)
        if args.fcrn:
            arr = density.render_fcrn_gt(points, geometry, int(radius), sigma)
        else:
            arr = density.render_ifcrn_gt(points, geometry, sigma, factor)
        target = _out_dir(args, path) / f"{path.stem}.pfm"
        cio.write_pfm(target, arr)
        return target

    written = _pmap(one, files, args.jobs)
    _say(args, f"gengt: wrote {len(written)} density map(s)")
    return 0


# ---------------------------------------------------------------- extract


def _build_extractor(args):
    if args.mode == "fcrn":
        threshold = float(_opt(args, "T", 0.58))
        connectivity = int(_opt(args, "connectivity", 8))
        min_area = int(_opt(args, "min_area", 1))
        return lambda arr: extraction.extract_threshold_cc(
            arr, threshold=threshold, connectivity=connectivity, min_component_area=min_area
        )
    height = float(_opt(args, "H", 0.4))
    factor = int(_opt(args, "factor", 4))
    return lambda arr: extraction.extract_local_maxima(arr, height=height, scale_factor=factor)


def cmd_extract(args):
    args.mode = "fcrn" if args.fcrn else ("ifcrn" if args.ifcrn else "mask")
    suffix = ".pgm" if args.mode == "mask" else ".pfm"
    files = _collect(args.inputs, suffix, "input")
    if args.mode == "mask":
        runner = lambda arr: extraction.mask_to_centroids(arr)
        reader = cio.read_pgm16
    else:
        runner = _build_extractor(args)
        reader = cio.read_pfm

    def one(path):
        points = runner(reader(path))
        target = _out_dir(args, path) / f"{path.stem}.csv"
        cio.write_centroids_csv(target, points)
        return len(points)

    counts = _pmap(one, files, args.jobs)
    _say(args, f"extract: {sum(counts)} centroid(s) from {len(files)} file(s)")
    return 0


# ---------------------------------------------------------------- eval


def _pair_stems(pred_dir, gt_dir, allow_missing):
    preds = {p.stem: p for p in _collect([pred_dir], ".csv", "prediction")}
    gts = {p.stem: p for p in _collect([gt_dir], ".csv", "ground-truth")}
    only_pred = sorted(set(preds) - set(gts))
    only_gt = sorted(set(gts) - set(preds))
    if (only_pred or only_gt) and not allow_missing:
        parts = [f"{s} (prediction only)" for s in only_pred]
        parts += [f"{s} (ground truth only)" for s in only_gt]
        raise ValueError("unpaired files: " + "; ".join(parts))
    stems = sorted(set(preds) | set(gts)) if allow_missing else sorted(set(preds) & set(gts))
    empty = np.zeros((0, 2))
    return [
        (stem, preds.get(stem), gts.get(stem)) for stem in stems
    ], empty


def cmd_eval(args):
    geometry = _parse_geometry(_opt(args, "geometry", "512x512"))
    params_list = _metric_params(args)
    pred_dir = _opt(args, "pred")
    gt_dir = _opt(args, "gt")
    if pred_dir is None or gt_dir is None:
        raise ValueError("eval needs --pred and --gt directories")
    pairs, empty = _pair_stems(pred_dir, gt_dir, args.allow_missing)

    def one(item):
        stem, pred_path, gt_path = item
        preds = cio.read_centroids_csv(pred_path) if pred_path else empty
        gts = cio.read_centroids_csv(gt_path) if gt_path else empty
        return stem, [evaluate_image(preds, gts, geometry, p) for p in params_list]

    results = _pmap(one, pairs, args.jobs)
    reports = {
        _alpha_key(p.alpha): aggregate_dataset([evals[k] for _, evals in results])
        for k, p in enumerate(params_list)
    }
    first = next(iter(reports.values()))

    payload = {
        "geometry": {"width": geometry[1], "height": geometry[0]},
        "params": {
            "slack_s": params_list[0].slack_s,
            "threshold_t": params_list[0].threshold_t,
            "edge_margin_m": params_list[0].edge_margin_m,
            "alphas": [p.alpha for p in params_list],
        },
        "n_images": len(results),
        "images": [stem for stem, _ in results],
        "total_gt_N": first.total_gt_N,
        "tp": first.tp,
        "fp": first.fp,
        "fn": first.fn,
        "precision": first.precision,
        "recall": first.recall,
        "fscore": first.fscore,
        "el": {key: rep.localization_error_El for key, rep in reports.items()},
    }
    if args.per_image:
        payload["per_image"] = [
            {
                "image": stem,
                "kept_gt_count": evals[0].kept_gt_count,
                "tp": evals[0].tp,
                "fp": evals[0].fp,
                "fn": evals[0].fn,
                "error_sum": {
                    _alpha_key(p.alpha): evals[k].error_sum
                    for k, p in enumerate(params_list)
                },
                "per_pair_errors": {
                    _alpha_key(p.alpha): [list(t) for t in evals[k].per_pair_errors]
                    for k, p in enumerate(params_list)
                },
            }
            for stem, evals in results
        ]

    out = Path(_opt(args, "out", "eval-report"))
    out.parent.mkdir(parents=True, exist_ok=True)
    cio.write_json(out.with_suffix(".json"), payload)
    el_cells = [
        "NA" if reports[k].localization_error_El is None else repr(reports[k].localization_error_El)
        for k in reports
    ]
    cio.write_csv_rows(
        out.with_suffix(".csv"),
        ["n_images", "total_gt_N", "tp", "fp", "fn", "precision", "recall", "fscore"]
        + [f"el_{k}" for k in reports],
        [
            [
                len(results),
                first.total_gt_N,
                first.tp,
                first.fp,
                first.fn,
                repr(first.precision),
                repr(first.recall),
                repr(first.fscore),
            ]
            + el_cells
        ],
    )
    els = " ".join(
        f"El[{k}]={'NA' if r.localization_error_El is None else format(r.localization_error_El, '.6g')}"
        for k, r in reports.items()
    )
    _say(
        args,
        f"eval: images={len(results)} N={first.total_gt_N} tp={first.tp} fp={first.fp} "
        f"fn={first.fn} P={first.precision:.6g} R={first.recall:.6g} "
        f"F={first.fscore:.6g} {els}",
    )
    return 0


# ---------------------------------------------------------------- xval


def cmd_xval(args):
    files = _collect(args.inputs, ".json", "fold report")
    folds = []
    for path in files:
        with open(path, "r", encoding="utf-8") as f:
            try:
                folds.append(json.load(f))
            except json.JSONDecodeError as e:
                raise cio.FormatError(path, f"line {e.lineno}", e.msg) from None
    weights = []
    for path, fold in zip(files, folds):
        n = fold.get("total_gt_N")
        if not isinstance(n, int) or n <= 0:
            raise ValueError(f"{path}: total_gt_N must be a positive integer, got {n!r}")
        weights.append(float(n))

    alpha_keys = sorted(folds[0].get("el", {}), key=float)
    for path, fold in zip(files, folds):
        if sorted(fold.get("el", {}), key=float) != alpha_keys:
            raise ValueError(f"{path}: fold reports use different alpha lists")

    def summarize(values):
        s = crossfold_aggregate(values, weights)
        return {
            "weighted_mean": s.weighted_mean,
            "std_dev": s.std_dev,
            "fold_values": [list(v) for v in s.fold_values],
        }

    metrics_out = {
        name: summarize([fold[name] for fold in folds])
        for name in ("precision", "recall", "fscore")
    }
    el_out = {}
    for key in alpha_keys:
        values = [fold["el"][key] for fold in folds]
        if any(v is None for v in values):
            raise ValueError(f"El[{key}] is undefined in at least one fold")
        el_out[key] = summarize(values)
    payload = {
        "folds": [p.stem for p in files],
        "weights": weights,
        "metrics": metrics_out,
        "el": el_out,
    }
    out = Path(_opt(args, "out", "xval-summary.json"))
    out.parent.mkdir(parents=True, exist_ok=True)
    cio.write_json(out, payload)
    bits = [
        f"{name}={m['weighted_mean']:.6g}+/-{m['std_dev']:.6g}"
        for name, m in metrics_out.items()
    ]
    bits += [
        f"El[{k}]={m['weighted_mean']:.6g}+/-{m['std_dev']:.6g}" for k, m in el_out.items()
    ]
    _say(args, f"xval: folds={len(files)} " + " ".join(bits))
    return 0


# ---------------------------------------------------------------- synth


def cmd_synth(args):
    geometry = _parse_geometry(_opt(args, "geometry", "512x512"))
    n = int(_opt(args, "n", 0))
    scenes = int(_opt(args, "scenes", 1))
    if scenes < 1:
        raise ValueError(f"--scenes must be >= 1, got {scenes}")
    min_sep = float(_opt(args, "min_sep", 0.0))
    edge_buffer = float(_opt(args, "edge_buffer", 0.0))
    render = _opt(args, "render", "none")
    sigma = float(_opt(args, "sigma", 2.0 if render == "fcrn" else 3.0))
    factor = int(_opt(args, "factor", 4))
    radius = _opt(args, "radius")
    if render == "fcrn" and radius is None:
        raise ValueError("--render fcrn needs --radius")
    out = Path(_opt(args, "out", "scenes"))
    out.mkdir(parents=True, exist_ok=True)

    def one(index):
        params = SceneParams(
            n=n,
            geometry=geometry,
            min_separation=min_sep,
            edge_buffer=edge_buffer,
            seed=args.seed + index,
        )
        points = generate_scene(params)
        stem = f"scene-{index:04d}"
        cio.write_centroids_csv(out / f"{stem}.csv", points)
        if render == "fcrn":
            cio.write_pfm(out / f"{stem}.pfm", density.render_fcrn_gt(points, geometry, int(radius), sigma))
        elif render == "ifcrn":
            cio.write_pfm(out / f"{stem}.pfm", density.render_ifcrn_gt(points, geometry, sigma, factor))
        return stem

    _pmap(one, range(scenes), args.jobs)
    _say(args, f"synth: wrote {scenes} scene(s) of {n} point(s) to {out}")
    return 0


# ---------------------------------------------------------------- bench


def cmd_bench(args):
    args.mode = "fcrn" if args.fcrn else "ifcrn"
    files = _collect(args.inputs, ".pfm", "density map")
    maps = [cio.read_pfm(p) for p in files]
    extractor = _build_extractor(args)
    report = benchmark_extraction(
        maps, extractor, repeats=int(_opt(args, "repeats", 3)), jobs=args.jobs
    )
    payload = {
        "total_nuclei": report.total_nuclei,
        "wall_seconds": report.wall_seconds,
        "nuclei_per_second": report.nuclei_per_second,
        "per_repeat_seconds": list(report.per_repeat_seconds),
        "repeats": report.repeats,
        "n_maps": len(maps),
        "jobs": args.jobs,
        "mode": args.mode,
    }
    out = Path(_opt(args, "out", "bench-report.json"))
    out.parent.mkdir(parents=True, exist_ok=True)
    cio.write_json(out, payload)
    _say(
        args,
        f"bench: {report.total_nuclei} nuclei over {len(maps)} map(s), "
        f"{report.nuclei_per_second:.6g} nuclei/s (median of {report.repeats})",
    )
    return 0


# ---------------------------------------------------------------- plot


def _load_series(args):
    entries = []
    manifest = _opt(args, "manifest")
    if manifest:
        with open(manifest, "r", encoding="utf-8") as f:
            try:
                listed = json.load(f)
            except json.JSONDecodeError as e:
                raise cio.FormatError(manifest, f"line {e.lineno}", e.msg) from None
        if not isinstance(listed, list):
            raise ValueError(f"{manifest}: manifest must be a JSON array")
        for item in listed:
            entries.append(
                (item.get("eval"), item.get("bench"), item.get("size"), item.get("label", ""))
            )
    for raw in args.series or []:
        parts = raw.split(":")
        if len(parts) not in (3, 4):
            raise ValueError(
                f"--series must be EVAL.json:BENCH.json:SIZE[:LABEL], got {raw!r}"
            )
        label = parts[3] if len(parts) == 4 else ""
        entries.append((parts[0], parts[1], parts[2], label))
    if not entries:
        raise ValueError("plot needs --manifest or at least one --series")

    series = []
    for eval_path, bench_path, size, label in entries:
        if not eval_path or not bench_path or size is None:
            raise ValueError("each series needs an eval report, a bench report, and a size")
        with open(eval_path, "r", encoding="utf-8") as f:
            eval_payload = json.load(f)
        with open(bench_path, "r", encoding="utf-8") as f:
            bench_payload = json.load(f)
        el_by_alpha = eval_payload.get("el", {})
        if not el_by_alpha:
            raise ValueError(f"{eval_path}: no El values in report")
        key = _alpha_key(float(args.alpha)) if args.alpha is not None else min(el_by_alpha, key=float)
        if key not in el_by_alpha:
            raise ValueError(f"{eval_path}: no El for alpha {key}")
        el = el_by_alpha[key]
        if el is None:
            raise ValueError(f"{eval_path}: El[{key}] is undefined (no ground truth kept)")
        rate = bench_payload.get("nuclei_per_second")
        if rate is None:
            raise ValueError(f"{bench_path}: no nuclei_per_second in report")
        series.append((label, rate, el, float(size)))
    return series


def cmd_plot(args):
    series = _load_series(args)
    svg = plotting.render_scatter_svg(series)
    csv_text = plotting.scatter_csv_text(series)
    out = Path(_opt(args, "out", "plot"))
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out.with_suffix(".svg"), "w", encoding="utf-8", newline="") as f:
        f.write(svg)
    with open(out.with_suffix(".csv"), "w", encoding="utf-8", newline="") as f:
        f.write(csv_text)
    _say(args, f"plot: {len(series)} point(s) -> {out.with_suffix('.svg')}")
    return 0


# ---------------------------------------------------------------- parser


def _common_flags(parser):
    parser.add_argument("--config", metavar="JSON", help="config file with default option values")
    parser.add_argument("--seed", type=int, default=None, help="base PRNG seed (u64)")
    parser.add_argument("--jobs", type=int, default=None, help="parallel workers per command")
    parser.add_argument("--quiet", action="store_true", help="suppress the human summary line")
    parser.add_argument("--out", default=None, help="output directory or path prefix")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="centrokit",
        description="Centroid-based cell-detection evaluation toolkit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gengt", help="render fuzzy ground-truth density maps")
    _common_flags(p)
    p.add_argument("inputs", nargs="+", help="centroid CSV files or directories")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--fcrn", action="store_true", help="dilated-disk, sum-one blur variant")
    mode.add_argument("--ifcrn", action="store_true", help="peak-one, max-composed, downsampled variant")
    p.add_argument("--geometry", help="image size WxH, e.g. 512x512")
    p.add_argument("--radius", type=int, help="disk dilation radius in px (fcrn, required)")
    p.add_argument("--sigma", type=float, help="Gaussian sigma in px")
    p.add_argument("--factor", type=int, help="downsample factor (ifcrn, default 4)")
    p.set_defaults(func=cmd_gengt)

    p = sub.add_parser("extract", help="recover centroids from maps or masks")
    _common_flags(p)
    p.add_argument("inputs", nargs="+", help="PFM maps or PGM masks, files or directories")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--fcrn", action="store_true", help="threshold + connected components")
    mode.add_argument("--ifcrn", action="store_true", help="local maxima above a height")
    mode.add_argument("--mask", action="store_true", help="labeled-mask centroids")
    p.add_argument("-T", type=float, default=None, help="binarization threshold (fcrn, default 0.58)")
    p.add_argument("-H", type=float, default=None, help="maxima height (ifcrn, default 0.4)")
    p.add_argument("--connectivity", type=int, choices=(4, 8), help="component connectivity (default 8)")
    p.add_argument("--min-area", dest="min_area", type=int, help="drop components smaller than this (default 1)")
    p.add_argument("--factor", type=int, help="map-to-image coordinate factor (ifcrn, default 4)")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("eval", help="score predictions against ground truth")
    _common_flags(p)
    p.add_argument("--pred", help="directory of prediction CSVs")
    p.add_argument("--gt", help="directory of ground-truth CSVs")
    p.add_argument("--geometry", help="image size WxH")
    p.add_argument("--alpha", help="comma-separated alpha list (default 0.3,1)")
    p.add_argument("--diameter", type=float, help="average nucleus diameter D in px")
    p.add_argument("--polygons", help="polygon JSON file or directory to estimate D from")
    p.add_argument("--slack", type=float, help="override slack s (default 0.25 D)")
    p.add_argument("--threshold", type=float, help="override threshold t (default D)")
    p.add_argument("--margin", type=float, help="override edge margin (default D)")
    p.add_argument("--allow-missing", action="store_true",
                   help="evaluate unpaired stems against an empty counterpart")
    p.add_argument("--per-image", action="store_true", help="include the per-image array")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("xval", help="aggregate per-fold eval reports")
    _common_flags(p)
    p.add_argument("inputs", nargs="+", help="fold report JSONs or directories")
    p.set_defaults(func=cmd_xval)

    p = sub.add_parser("synth", help="generate synthetic scenes")
    _common_flags(p)
    p.add_argument("--n", type=int, help="points per scene")
    p.add_argument("--scenes", type=int, help="number of scenes (default 1)")
    p.add_argument("--geometry", help="image size WxH (default 512x512)")
    p.add_argument("--min-sep", dest="min_sep", type=float, help="minimum pairwise separation")
    p.add_argument("--edge-buffer", dest="edge_buffer", type=float, help="keep-out band at edges")
    p.add_argument("--render", choices=("none", "fcrn", "ifcrn"), help="also write a PFM per scene")
    p.add_argument("--radius", type=int, help="disk dilation radius (render fcrn)")
    p.add_argument("--sigma", type=float, help="Gaussian sigma for rendering")
    p.add_argument("--factor", type=int, help="downsample factor (render ifcrn)")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("bench", help="time extraction throughput")
    _common_flags(p)
    p.add_argument("inputs", nargs="+", help="PFM maps, files or directories")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--fcrn", action="store_true", help="threshold + connected components")
    mode.add_argument("--ifcrn", action="store_true", help="local maxima above a height")
    p.add_argument("-T", type=float, default=None, help="binarization threshold (default 0.58)")
    p.add_argument("-H", type=float, default=None, help="maxima height (default 0.4)")
    p.add_argument("--connectivity", type=int, choices=(4, 8))
    p.add_argument("--min-area", dest="min_area", type=int)
    p.add_argument("--factor", type=int)
    p.add_argument("--repeats", type=int, help="timed passes (default 3)")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("plot", help="quality-versus-rate scatter")
    _common_flags(p)
    p.add_argument("--series", action="append",
                   help="EVAL.json:BENCH.json:SIZE[:LABEL], repeatable")
    p.add_argument("--manifest", help="JSON array of {eval, bench, size, label}")
    p.add_argument("--alpha", type=float, default=None,
                   help="which El column to plot (default: smallest alpha)")
    p.set_defaults(func=cmd_plot)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.run_config = {}
        if args.config:
            with open(args.config, "r", encoding="utf-8") as f:
                try:
                    args.run_config = json.load(f)
                except json.JSONDecodeError as e:
                    raise cio.FormatError(args.config, f"line {e.lineno}", e.msg) from None
            if not isinstance(args.run_config, dict):
                raise ValueError(f"{args.config}: config must be a JSON object")
        seed = _opt(args, "seed", 0)
        if not 0 <= int(seed) < 2**64:
            raise ValueError(f"--seed must fit in u64, got {seed}")
        args.seed = int(seed)
        args.jobs = int(_opt(args, "jobs", 1))
        if args.jobs < 1:
            raise ValueError(f"--jobs must be >= 1, got {args.jobs}")
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
