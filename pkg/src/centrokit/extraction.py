"""Centroid extraction from density maps and label masks.

All extractors emit (n, 2) float64 centroid arrays in full-resolution
(x, y) coordinates, deterministically ordered so that repeated runs and
downstream matching are reproducible.
"""

import numpy as np
from scipy import ndimage
from sklearn.base import BaseEstimator, TransformerMixin

from .density import to_full_coords
from .validation import check_density_map, check_label_mask

__all__ = [
    "extract_threshold_cc",
    "extract_local_maxima",
    "mask_to_centroids",
    "ThresholdCentroidExtractor",
    "LocalMaximaExtractor",
    "MaskCentroidExtractor",
]

_STRUCTURE_4 = ndimage.generate_binary_structure(2, 1)
_STRUCTURE_8 = ndimage.generate_binary_structure(2, 2)


def _component_centroids(labels, n_labels, keep=None):
    """Pixel-mean centroids per label, ordered by raster scan of each
    component's first pixel."""
    if n_labels == 0:
        return np.zeros((0, 2), dtype=np.float64)
    flat = labels.ravel()
    order = np.argsort(flat, kind="stable")
    # first occurrence (raster index) of each label 1..n
    first = np.full(n_labels + 1, flat.size, dtype=np.int64)
    sorted_labels = flat[order]
    starts = np.searchsorted(sorted_labels, np.arange(1, n_labels + 1))
    valid = starts < flat.size
    first[1:][valid] = order[starts[valid]]

    ys, xs = np.nonzero(labels)
    ids = labels[ys, xs]
    counts = np.bincount(ids, minlength=n_labels + 1).astype(np.float64)
    sum_x = np.bincount(ids, weights=xs, minlength=n_labels + 1)
    sum_y = np.bincount(ids, weights=ys, minlength=n_labels + 1)

    label_ids = np.arange(1, n_labels + 1)
    if keep is not None:
        label_ids = label_ids[keep]
    label_ids = label_ids[np.argsort(first[label_ids], kind="stable")]
    if label_ids.size == 0:
        return np.zeros((0, 2), dtype=np.float64)
    cx = sum_x[label_ids] / counts[label_ids]
    cy = sum_y[label_ids] / counts[label_ids]
    return np.column_stack([cx, cy])


def extract_threshold_cc(values, threshold=0.58, connectivity=8, min_component_area=1):
    """Binarize at threshold (>=), label connected components, drop the ones
    smaller than min_component_area, and return per-component pixel-mean
    centroids in raster-scan order."""
    arr = check_density_map(values)
    if not 0 < threshold < 1:
        raise ValueError(f"threshold must be in (0, 1), got {threshold}")
    if connectivity not in (4, 8):
        raise ValueError(f"connectivity must be 4 or 8, got {connectivity}")
    if min_component_area < 1:
        raise ValueError(f"min_component_area must be >= 1, got {min_component_area}")
    structure = _STRUCTURE_8 if connectivity == 8 else _STRUCTURE_4
    labels, n = ndimage.label(arr >= threshold, structure=structure)
    keep = None
    if min_component_area > 1 and n:
        counts = np.bincount(labels.ravel(), minlength=n + 1)
        keep = counts[1:] >= min_component_area
    return _component_centroids(labels, n, keep)


def extract_local_maxima(values, height=0.4, scale_factor=4):
    """Detect local maxima of at least the given height.

    A pixel qualifies when its value is >= height and >= every in-image
    8-neighbor. Connected plateaus of qualifying pixels (necessarily
    equal-valued) collapse to their pixel mean. Coordinates are mapped back
    to full resolution through the block-center grid alignment.
    """
    arr = check_density_map(values).astype(np.float64, copy=False)
    if not 0 < height <= 1:
        raise ValueError(f"height must be in (0, 1], got {height}")
    f = int(scale_factor)
    if f != scale_factor or f < 1:
        raise ValueError(f"scale_factor must be an integer >= 1, got {scale_factor}")
    neighborhood_max = ndimage.maximum_filter(arr, size=3, mode="constant", cval=-np.inf)
    candidates = (arr >= height) & (arr >= neighborhood_max)
    labels, n = ndimage.label(candidates, structure=_STRUCTURE_8)
    grid = _component_centroids(labels, n)
    return to_full_coords(grid, f)


def mask_to_centroids(labels):
    """One pixel-mean centroid per nonzero label, ordered by ascending label."""
    arr = check_label_mask(labels)
    ys, xs = np.nonzero(arr)
    if ys.size == 0:
        return np.zeros((0, 2), dtype=np.float64)
    ids = arr[ys, xs].astype(np.int64)
    n = int(ids.max())
    counts = np.bincount(ids, minlength=n + 1).astype(np.float64)
    sum_x = np.bincount(ids, weights=xs, minlength=n + 1)
    sum_y = np.bincount(ids, weights=ys, minlength=n + 1)
    present = np.nonzero(counts[1:] > 0)[0] + 1  # ascending labels, gaps allowed
    return np.column_stack([sum_x[present] / counts[present], sum_y[present] / counts[present]])


class ThresholdCentroidExtractor(TransformerMixin, BaseEstimator):
    """Threshold + connected-components extractor over lists of maps."""

    def __init__(self, threshold=0.58, connectivity=8, min_component_area=1):
        self.threshold = threshold
        self.connectivity = connectivity
        self.min_component_area = min_component_area

    def fit(self, X=None, y=None):
        return self

    def __sklearn_is_fitted__(self):
        return True  # stateless

    def transform(self, X):
        return [
            extract_threshold_cc(
                m, self.threshold, self.connectivity, self.min_component_area
            )
            for m in X
        ]

    predict = transform


class LocalMaximaExtractor(TransformerMixin, BaseEstimator):
    """Local-maxima extractor over lists of (possibly downsampled) maps."""

    def __init__(self, height=0.4, scale_factor=4):
        self.height = height
        self.scale_factor = scale_factor

    def fit(self, X=None, y=None):
        return self

    def __sklearn_is_fitted__(self):
        return True  # stateless

    def transform(self, X):
        return [extract_local_maxima(m, self.height, self.scale_factor) for m in X]

    predict = transform


class MaskCentroidExtractor(TransformerMixin, BaseEstimator):
    """Centroid extractor for instance label masks."""

    def fit(self, X=None, y=None):
        return self

    def __sklearn_is_fitted__(self):
        return True  # stateless

    def transform(self, X):
        return [mask_to_centroids(m) for m in X]

    predict = transform
