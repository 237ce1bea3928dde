"""Input validation helpers shared by all estimators and functions.

Conventions used throughout the package:
  - centroids are float64 arrays of shape (n, 2), columns (x, y), origin at
    the top-left pixel center, x rightward, y downward;
  - rasters (density maps, masks) are 2D arrays indexed [y, x] with
    ``shape == (height, width)``;
  - image geometry is a ``(height, width)`` tuple of positive ints.
"""

import numpy as np

__all__ = [
    "check_centroids",
    "check_polygon",
    "check_density_map",
    "check_binary_mask",
    "check_label_mask",
    "check_image_shape",
]


def check_centroids(points, name="centroids"):
    """Coerce to a float64 (n, 2) array of finite points, preserving order."""
    arr = np.asarray(points, dtype=np.float64)
    if arr.size == 0:
        return arr.reshape(0, 2)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError(f"{name} must have shape (n, 2), got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        bad = np.nonzero(~np.isfinite(arr).all(axis=1))[0]
        raise ValueError(f"{name} contains non-finite points at indices {bad.tolist()}")
    return arr


def check_polygon(vertices, name="polygon"):
    """Coerce to a float64 (k, 2) vertex array; k >= 3, all finite."""
    arr = np.asarray(vertices, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[1] != 2 or arr.shape[0] < 3:
        raise ValueError(f"{name} must have shape (k, 2) with k >= 3, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite vertices")
    return arr


def check_density_map(values, name="map"):
    """Coerce to a finite 2D float array (any float dtype accepted)."""
    arr = np.asarray(values)
    if arr.ndim != 2:
        raise ValueError(f"{name} must be 2D, got {arr.ndim}D")
    if not np.issubdtype(arr.dtype, np.floating):
        arr = arr.astype(np.float32)
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite values")
    return arr


def check_binary_mask(values, name="mask"):
    """Validate a raster whose values are exactly {0, 1}; returns a bool array."""
    arr = np.asarray(values)
    if arr.ndim != 2:
        raise ValueError(f"{name} must be 2D, got {arr.ndim}D")
    if arr.dtype == bool:
        return arr
    if not np.all((arr == 0) | (arr == 1)):
        raise ValueError(f"{name} must be binary (values in {{0, 1}})")
    return arr != 0


def check_label_mask(labels, name="labels"):
    """Validate an integer label raster (0 = background); returns uint16."""
    arr = np.asarray(labels)
    if arr.ndim != 2:
        raise ValueError(f"{name} must be 2D, got {arr.ndim}D")
    if not np.issubdtype(arr.dtype, np.integer):
        raise ValueError(f"{name} must have an integer dtype, got {arr.dtype}")
    if arr.min(initial=0) < 0 or arr.max(initial=0) > np.iinfo(np.uint16).max:
        raise ValueError(f"{name} values must fit in uint16 with 0 as background")
    return arr.astype(np.uint16, copy=False)


def check_image_shape(shape, name="image_shape"):
    """Validate a (height, width) pair of positive integers."""
    try:
        h, w = shape
    except (TypeError, ValueError):
        raise ValueError(f"{name} must be a (height, width) pair, got {shape!r}")
    h, w = int(h), int(w)
    if h < 1 or w < 1:
        raise ValueError(f"{name} must be >= 1 in both dimensions, got {(h, w)}")
    return h, w
