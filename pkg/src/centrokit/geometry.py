"""Geometric primitives: polygon centroids, diameter estimation, distances."""

import math

import numpy as np

from .validation import check_centroids, check_polygon

__all__ = [
    "polygon_area",
    "polygon_centroid",
    "estimate_avg_diameter",
    "distance_matrix",
]

DEGENERATE_AREA = 1e-12


def polygon_area(vertices):
    """Signed shoelace area of an implicitly closed polygon (CCW positive
    in a y-up frame; sign is irrelevant to callers here)."""
    v = check_polygon(vertices)
    x, y = v[:, 0], v[:, 1]
    xn, yn = np.roll(x, -1), np.roll(y, -1)
    return 0.5 * float(np.sum(x * yn - xn * y))


def polygon_centroid(vertices):
    """Area-weighted centroid of a polygon interior (shoelace formula).

    The vertex mean would be biased for unevenly sampled outlines, so the
    interior centroid is used instead. Raises ValueError for polygons whose
    signed area is below the degeneracy cutoff.
    """
    v = check_polygon(vertices)
    x, y = v[:, 0], v[:, 1]
    xn, yn = np.roll(x, -1), np.roll(y, -1)
    cross = x * yn - xn * y
    area = 0.5 * float(np.sum(cross))
    if abs(area) < DEGENERATE_AREA:
        raise ValueError("degenerate polygon")
    cx = float(np.sum((x + xn) * cross)) / (6.0 * area)
    cy = float(np.sum((y + yn) * cross)) / (6.0 * area)
    return cx, cy


def estimate_avg_diameter(polygons):
    """Mean equivalent-area diameter, 2*sqrt(area/pi), over the annotations.

    Degenerate polygons are skipped; if nothing valid remains the dataset
    carries no usable annotations and a ValueError is raised.
    """
    diameters = []
    for poly in polygons:
        v = check_polygon(poly)
        area = abs(polygon_area(v))
        if area < DEGENERATE_AREA:
            continue
        diameters.append(2.0 * math.sqrt(area / math.pi))
    if not diameters:
        raise ValueError("no annotations")
    return float(np.mean(diameters))


def distance_matrix(preds, gts):
    """Euclidean distances, shape (len(preds), len(gts)); either side may be empty."""
    p = check_centroids(preds, "preds")
    g = check_centroids(gts, "gts")
    if p.shape[0] == 0 or g.shape[0] == 0:
        return np.zeros((p.shape[0], g.shape[0]), dtype=np.float64)
    diff = p[:, None, :] - g[None, :, :]
    return np.sqrt(diff[..., 0] ** 2 + diff[..., 1] ** 2)
