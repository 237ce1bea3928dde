"""Fuzzy ground-truth density rendering and the raster primitives behind it.

Two rendering styles are provided, matching the two detector families this
toolkit evaluates:

  - threshold-style ("fcrn"): a binary stamp at each rounded centroid is
    dilated by a disk of radius r and blurred with a sum-one Gaussian, so
    values stay in [0, 1] and a global binarization threshold T is
    meaningful;
  - maxima-style ("ifcrn"): a peak-one Gaussian is stamped at each centroid
    on the downsampled grid and overlaps combine by elementwise max, so
    isolated peaks have height exactly 1 and a maxima height cutoff h is
    meaningful.
"""

import numpy as np
from scipy import ndimage
from sklearn.base import BaseEstimator, TransformerMixin

from .validation import (
    check_binary_mask,
    check_centroids,
    check_density_map,
    check_image_shape,
)

__all__ = [
    "gaussian_kernel",
    "gaussian_blur",
    "dilate_disk",
    "downsample",
    "downsampled_shape",
    "to_downsampled_coords",
    "to_full_coords",
    "out_of_bounds_indices",
    "render_fcrn_gt",
    "render_ifcrn_gt",
    "FcrnGroundTruthRenderer",
    "IfcrnGroundTruthRenderer",
]


def gaussian_kernel(sigma):
    """1D Gaussian taps exp(-k^2 / (2 sigma^2)) for k in [-R, R], R = ceil(3 sigma).

    Unnormalized: the center tap is exactly 1.
    """
    if sigma <= 0:
        raise ValueError(f"sigma must be > 0, got {sigma}")
    radius = int(np.ceil(3.0 * sigma))
    k = np.arange(-radius, radius + 1, dtype=np.float64)
    return np.exp(-(k * k) / (2.0 * sigma * sigma))


def gaussian_blur(values, sigma, normalization="sum-one"):
    """Separable Gaussian filter with zero-padded borders.

    normalization:
      "sum-one"  - the implied 2D kernel sums to 1 (mass preserving away
                   from borders);
      "peak-one" - the center tap of the 2D kernel is 1.
    """
    arr = check_density_map(values).astype(np.float64, copy=False)
    taps = gaussian_kernel(sigma)
    if normalization == "sum-one":
        taps = taps / taps.sum()
    elif normalization != "peak-one":
        raise ValueError(f"normalization must be 'sum-one' or 'peak-one', got {normalization!r}")
    out = ndimage.convolve1d(arr, taps, axis=0, mode="constant", cval=0.0)
    out = ndimage.convolve1d(out, taps, axis=1, mode="constant", cval=0.0)
    return out.astype(np.float32)


def disk_footprint(radius):
    """Boolean structuring element {(dx, dy): dx^2 + dy^2 <= r^2}."""
    if radius < 0:
        raise ValueError(f"radius must be >= 0, got {radius}")
    r = int(np.floor(radius))
    dy, dx = np.mgrid[-r : r + 1, -r : r + 1]
    return (dx * dx + dy * dy) <= radius * radius


def dilate_disk(mask, radius):
    """Morphological dilation of a binary raster with a discrete disk."""
    binary = check_binary_mask(mask)
    footprint = disk_footprint(radius)
    out = ndimage.binary_dilation(binary, structure=footprint)
    return out.astype(np.float32)


def downsample(values, factor):
    """Block-mean downsampling by an integer factor.

    Dimensions not divisible by the factor are zero-padded first, so the
    output shape is the ceil-divided geometry.
    """
    arr = check_density_map(values).astype(np.float64, copy=False)
    f = int(factor)
    if f != factor or f < 1:
        raise ValueError(f"downsample factor must be an integer >= 1, got {factor}")
    if f == 1:
        return np.asarray(values, dtype=np.float32).copy()
    h, w = arr.shape
    ph, pw = (-h) % f, (-w) % f
    if ph or pw:
        arr = np.pad(arr, ((0, ph), (0, pw)))
    hh, ww = arr.shape
    blocks = arr.reshape(hh // f, f, ww // f, f)
    return blocks.mean(axis=(1, 3)).astype(np.float32)


def downsampled_shape(image_shape, factor):
    h, w = check_image_shape(image_shape)
    f = int(factor)
    return (-(-h // f), -(-w // f))


def to_downsampled_coords(points, factor):
    """Map full-resolution coordinates onto the block-center aligned grid:
    x_ds = (x + 0.5) / f - 0.5."""
    pts = check_centroids(points)
    return (pts + 0.5) / float(factor) - 0.5


def to_full_coords(points, factor):
    """Inverse grid mapping: x_full = f * (x_ds + 0.5) - 0.5."""
    pts = check_centroids(points)
    return float(factor) * (pts + 0.5) - 0.5


def out_of_bounds_indices(centroids, image_shape):
    """Indices of points whose nearest-pixel stamp would fall outside the
    raster (rounded x not in [0, w) or rounded y not in [0, h))."""
    h, w = check_image_shape(image_shape)
    pts = check_centroids(centroids)
    ix = np.rint(pts[:, 0]).astype(np.int64)
    iy = np.rint(pts[:, 1]).astype(np.int64)
    return np.nonzero((ix < 0) | (ix >= w) | (iy < 0) | (iy >= h))[0]


def _rounded_indices(centroids, image_shape, name):
    """Round centroids to pixel indices and reject ones outside the raster."""
    h, w = check_image_shape(image_shape)
    pts = check_centroids(centroids, name)
    bad = out_of_bounds_indices(pts, (h, w))
    if bad.size:
        raise ValueError(
            f"centroids outside image geometry {w}x{h}: indices {bad.tolist()}"
        )
    ix = np.rint(pts[:, 0]).astype(np.int64)
    iy = np.rint(pts[:, 1]).astype(np.int64)
    return ix, iy


def render_fcrn_gt(centroids, image_shape, dilation_radius, sigma):
    """Binary stamps -> disk dilation -> sum-one Gaussian blur; values in [0, 1]."""
    h, w = check_image_shape(image_shape)
    ix, iy = _rounded_indices(centroids, (h, w), "centroids")
    mask = np.zeros((h, w), dtype=np.float32)
    if ix.size == 0:
        return mask
    mask[iy, ix] = 1.0
    dilated = dilate_disk(mask, dilation_radius)
    return gaussian_blur(dilated, sigma, normalization="sum-one")


def render_ifcrn_gt(centroids, image_shape, sigma=3.0, downsample_factor=4):
    """Peak-one Gaussian stamps on the downsampled grid, combined by max."""
    h, w = check_image_shape(image_shape)
    f = int(downsample_factor)
    if f != downsample_factor or f < 1:
        raise ValueError(f"downsample factor must be an integer >= 1, got {downsample_factor}")
    _rounded_indices(centroids, (h, w), "centroids")  # bounds check at full res
    dh, dw = downsampled_shape((h, w), f)
    canvas = np.zeros((dh, dw), dtype=np.float64)
    pts = check_centroids(centroids)
    if pts.shape[0] == 0:
        return canvas.astype(np.float32)

    taps = gaussian_kernel(sigma)
    stamp = np.outer(taps, taps)
    radius = (stamp.shape[0] - 1) // 2

    ds = to_downsampled_coords(pts, f)
    gx = np.rint(ds[:, 0]).astype(np.int64)
    gy = np.rint(ds[:, 1]).astype(np.int64)
    for cx, cy in zip(gx, gy):
        y0, y1 = max(cy - radius, 0), min(cy + radius + 1, dh)
        x0, x1 = max(cx - radius, 0), min(cx + radius + 1, dw)
        if y0 >= y1 or x0 >= x1:
            continue
        window = stamp[
            y0 - (cy - radius) : y1 - (cy - radius),
            x0 - (cx - radius) : x1 - (cx - radius),
        ]
        np.maximum(canvas[y0:y1, x0:x1], window, out=canvas[y0:y1, x0:x1])
    return canvas.astype(np.float32)


class FcrnGroundTruthRenderer(TransformerMixin, BaseEstimator):
    """Stateless transformer mapping centroid arrays to threshold-style maps.

    Parameters
    ----------
    image_shape : (height, width) of every rendered map.
    dilation_radius : disk radius in pixels; must be set before transform
        (no universally correct default exists).
    sigma : Gaussian standard deviation in pixels.
    """

    def __init__(self, image_shape=(512, 512), dilation_radius=None, sigma=None):
        self.image_shape = image_shape
        self.dilation_radius = dilation_radius
        self.sigma = sigma

    def fit(self, X=None, y=None):
        return self

    def __sklearn_is_fitted__(self):
        return True  # stateless

    def transform(self, X):
        if self.dilation_radius is None or self.sigma is None:
            raise ValueError("dilation_radius and sigma must be set")
        return [
            render_fcrn_gt(c, self.image_shape, self.dilation_radius, self.sigma)
            for c in X
        ]


class IfcrnGroundTruthRenderer(TransformerMixin, BaseEstimator):
    """Stateless transformer mapping centroid arrays to maxima-style maps."""

    def __init__(self, image_shape=(512, 512), sigma=3.0, downsample_factor=4):
        self.image_shape = image_shape
        self.sigma = sigma
        self.downsample_factor = downsample_factor

    def fit(self, X=None, y=None):
        return self

    def __sklearn_is_fitted__(self):
        return True  # stateless

    def transform(self, X):
        return [
            render_ifcrn_gt(c, self.image_shape, self.sigma, self.downsample_factor)
            for c in X
        ]
