"""Localization Error, near-edge exclusion, and detection-count metrics.

The per-distance error is a saturating ramp

    eps(d) = max(0, min(1 + alpha, (d - s) / (t - s)))

so a prediction within the slack radius s of its ground truth costs
nothing, the cost grows linearly up to 1 at the acceptance threshold t,
and then keeps growing until it saturates at 1 + alpha. The ceiling equals
the cost of one missed cell (1) plus one spurious detection (alpha), which
keeps the metric continuous when a match degrades into an FP/FN pair.

Accounting rules per image:
  - matched pair, d <= t: one TP, error eps(d)
  - matched pair, d > t: one FP and one FN, error eps(d) replacing (not
    adding to) the unit FN and alpha FP costs
  - surviving unmatched ground truth: one FN, error 1
  - surviving unmatched prediction: one FP, error alpha

Ground truths closer to the image edge than the margin are excluded before
accounting, together with their matched prediction; unmatched predictions
inside the margin are excluded too, so edge effects bias neither recall
nor precision.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .geometry import distance_matrix
from .matching import Matching, solve_assignment
from .validation import check_centroids, check_image_shape

__all__ = [
    "MetricParams",
    "ImageEval",
    "EvalReport",
    "FoldSummary",
    "localization_error",
    "filter_near_edge",
    "evaluate_image",
    "aggregate_dataset",
    "crossfold_aggregate",
]


@dataclass(frozen=True)
class MetricParams:
    """Localization Error parameters, all in pixels except alpha.

    slack_s: distances up to this are error-free.
    threshold_t: distances above this stop counting as true positives.
    alpha: cost of a spurious detection; also sets the 1 + alpha ceiling.
    edge_margin_m: near-edge exclusion band width.
    """

    slack_s: float
    threshold_t: float
    alpha: float
    edge_margin_m: float

    def __post_init__(self):
        if not (0 <= self.slack_s < self.threshold_t):
            raise ValueError(
                f"require 0 <= slack_s < threshold_t, got s={self.slack_s}, t={self.threshold_t}"
            )
        if self.alpha < 0:
            raise ValueError(f"alpha must be >= 0, got {self.alpha}")
        if self.edge_margin_m < 0:
            raise ValueError(f"edge_margin_m must be >= 0, got {self.edge_margin_m}")

    @classmethod
    def from_diameter(cls, avg_diameter, alpha=0.3, edge_margin=None):
        """Conventional parameterization from the average nucleus diameter D:
        s = 0.25 D, t = D, margin = D unless overridden."""
        d = float(avg_diameter)
        if d <= 0:
            raise ValueError(f"average diameter must be positive, got {d}")
        margin = d if edge_margin is None else float(edge_margin)
        return cls(slack_s=0.25 * d, threshold_t=d, alpha=float(alpha), edge_margin_m=margin)


@dataclass(frozen=True)
class ImageEval:
    """Per-image accounting. per_pair_errors lists the surviving matched
    pairs as (pred_index, gt_index, distance, error) with original indices.
    Invariant: tp + fn == kept_gt_count."""

    kept_gt_count: int
    tp: int
    fp: int
    fn: int
    error_sum: float
    per_pair_errors: tuple = field(default_factory=tuple)


@dataclass(frozen=True)
class EvalReport:
    """Dataset-level aggregate. localization_error_El is None when no
    ground truth survived the edge filter (division by zero avoided)."""

    total_gt_N: int
    localization_error_El: float | None
    precision: float
    recall: float
    fscore: float
    tp: int
    fp: int
    fn: int
    per_image: tuple = field(default_factory=tuple)


@dataclass(frozen=True)
class FoldSummary:
    """Cross-fold aggregate: GT-count-weighted mean with the unweighted
    population standard deviation of the raw fold values."""

    weighted_mean: float
    std_dev: float
    fold_values: tuple = field(default_factory=tuple)


def localization_error(d, params):
    """eps(d) = max(0, min(1 + alpha, (d - s) / (t - s))). Scalar in,
    float out; array in, array out."""
    arr = np.asarray(d, dtype=np.float64)
    if arr.size and arr.min() < 0:
        raise ValueError("distances must be non-negative")
    ramp = (arr - params.slack_s) / (params.threshold_t - params.slack_s)
    out = np.clip(ramp, 0.0, 1.0 + params.alpha)
    if arr.ndim == 0:
        return float(out)
    return out


def _inside_margin(points, shape, margin):
    """Boolean mask: strictly closer than margin to some image edge."""
    h, w = shape
    if points.shape[0] == 0:
        return np.zeros(0, dtype=bool)
    x = points[:, 0]
    y = points[:, 1]
    border = np.minimum.reduce([x, y, (w - 1) - x, (h - 1) - y])
    return border < margin


def filter_near_edge(preds, gts, matching, geometry, margin):
    """Near-edge exclusion.

    A ground truth is discarded iff min(x, y, width-1-x, height-1-y) < margin
    (strict). Its matched prediction, if any, is discarded with it, wherever
    that prediction lies. An unmatched prediction is discarded iff it lies
    inside the margin itself. Returns (kept_gt_indices, discarded_pred_indices),
    both ascending.
    """
    preds = check_centroids(preds)
    gts = check_centroids(gts)
    shape = check_image_shape(geometry)

    gt_inside = _inside_margin(gts, shape, margin)
    kept_gts = [j for j in range(gts.shape[0]) if not gt_inside[j]]

    discarded_preds = [i for i, j, _ in matching.pairs if gt_inside[j]]
    pred_inside = _inside_margin(preds, shape, margin)
    discarded_preds.extend(i for i in matching.unmatched_preds if pred_inside[i])
    return kept_gts, sorted(discarded_preds)


def evaluate_image(preds, gts, geometry, params):
    """Full per-image pipeline: distances, optimal matching, near-edge
    exclusion, then the accounting rules in the module docstring."""
    preds = check_centroids(preds)
    gts = check_centroids(gts)
    shape = check_image_shape(geometry)

    matching = solve_assignment(distance_matrix(preds, gts))
    kept_gts, discarded_preds = filter_near_edge(
        preds, gts, matching, shape, params.edge_margin_m
    )
    kept_gt = set(kept_gts)
    dropped_pred = set(discarded_preds)

    tp = fp = fn = 0
    parts = []
    per_pair = []
    for ip, jg, d in matching.pairs:
        if jg not in kept_gt:
            continue
        err = localization_error(d, params)
        per_pair.append((ip, jg, d, err))
        parts.append(err)
        if d <= params.threshold_t:
            tp += 1
        else:
            fp += 1
            fn += 1
    for jg in matching.unmatched_gts:
        if jg in kept_gt:
            fn += 1
            parts.append(1.0)
    for ip in matching.unmatched_preds:
        if ip not in dropped_pred:
            fp += 1
            parts.append(params.alpha)

    return ImageEval(
        kept_gt_count=len(kept_gts),
        tp=tp,
        fp=fp,
        fn=fn,
        error_sum=math.fsum(parts),
        per_pair_errors=tuple(per_pair),
    )


def aggregate_dataset(evals):
    """Pool per-image accounting into one report. Precision and recall
    default to 1 when their denominators are zero (vacuously perfect);
    the F-score is 0 when precision + recall is 0."""
    evals = tuple(evals)
    n = sum(e.kept_gt_count for e in evals)
    tp = sum(e.tp for e in evals)
    fp = sum(e.fp for e in evals)
    fn = sum(e.fn for e in evals)
    el = math.fsum(e.error_sum for e in evals) / n if n > 0 else None
    precision = tp / (tp + fp) if (tp + fp) > 0 else 1.0
    recall = tp / (tp + fn) if (tp + fn) > 0 else 1.0
    denom = precision + recall
    fscore = 2.0 * precision * recall / denom if denom > 0 else 0.0
    return EvalReport(
        total_gt_N=n,
        localization_error_El=el,
        precision=precision,
        recall=recall,
        fscore=fscore,
        tp=tp,
        fp=fp,
        fn=fn,
        per_image=evals,
    )


def crossfold_aggregate(values, weights):
    """Weighted mean (weights are per-fold GT counts) and the unweighted
    population standard deviation of the fold values."""
    values = [float(v) for v in values]
    weights = [float(w) for w in weights]
    if len(values) != len(weights) or not values:
        raise ValueError(
            f"need equal-length non-empty values and weights, got {len(values)} and {len(weights)}"
        )
    if min(weights) <= 0:
        raise ValueError("weights must be positive")
    if min(values) == max(values):
        # Identical folds must report exactly their common value with zero
        # spread, not a rounding-level residue.
        return FoldSummary(
            weighted_mean=values[0], std_dev=0.0, fold_values=tuple(zip(values, weights))
        )
    mean = math.fsum(v * w for v, w in zip(values, weights)) / math.fsum(weights)
    plain = math.fsum(values) / len(values)
    var = math.fsum((v - plain) ** 2 for v in values) / len(values)
    return FoldSummary(
        weighted_mean=mean,
        std_dev=math.sqrt(var),
        fold_values=tuple(zip(values, weights)),
    )
