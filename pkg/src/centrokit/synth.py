"""Synthetic scenes with known ground truth, plus controlled corruption.

Determinism contract: every random draw comes from numpy's Philox
counter-based generator, `np.random.Generator(np.random.Philox(seed))`,
so a given seed reproduces the same scene on any platform. Draw order is
part of the contract and documented per function.
"""

from dataclasses import dataclass

import numpy as np

from .validation import check_centroids, check_image_shape

__all__ = ["SceneParams", "PerturbParams", "generate_scene", "perturb"]


@dataclass(frozen=True)
class SceneParams:
    """Scene recipe: n points inside `geometry` (height, width), every point
    at least edge_buffer from each edge and min_separation from each other."""

    n: int
    geometry: tuple = (512, 512)
    min_separation: float = 0.0
    edge_buffer: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"n must be >= 0, got {self.n}")
        if self.min_separation < 0:
            raise ValueError(f"min_separation must be >= 0, got {self.min_separation}")
        if self.edge_buffer < 0:
            raise ValueError(f"edge_buffer must be >= 0, got {self.edge_buffer}")


@dataclass(frozen=True)
class PerturbParams:
    """Corruption recipe: independent drops, isotropic Gaussian jitter, and
    Poisson(spurious_rate * n) uniform spurious points."""

    jitter_sigma: float = 0.0
    drop_rate: float = 0.0
    spurious_rate: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if self.jitter_sigma < 0:
            raise ValueError(f"jitter_sigma must be >= 0, got {self.jitter_sigma}")
        if not 0 <= self.drop_rate <= 1:
            raise ValueError(f"drop_rate must be in [0, 1], got {self.drop_rate}")
        if self.spurious_rate < 0:
            raise ValueError(f"spurious_rate must be >= 0, got {self.spurious_rate}")


def _rng(seed):
    return np.random.Generator(np.random.Philox(int(seed)))


def generate_scene(params):
    """Dart-throwing placement: draw uniform candidates inside the buffered
    rectangle and keep those at least min_separation from everything placed
    so far. Edge distance uses pixel centers: min(x, y, w-1-x, h-1-y).
    Raises ValueError when the retry budget runs out (infeasible packing).
    """
    h, w = check_image_shape(params.geometry)
    b = float(params.edge_buffer)
    lo_x, hi_x = b, (w - 1) - b
    lo_y, hi_y = b, (h - 1) - b
    if params.n > 0 and (lo_x > hi_x or lo_y > hi_y):
        raise ValueError(
            f"edge_buffer {b} leaves no room in a {w}x{h} image"
        )

    rng = _rng(params.seed)
    sep2 = float(params.min_separation) ** 2
    budget = max(1000, 200 * params.n)
    placed = np.empty((params.n, 2), dtype=np.float64)
    count = 0
    attempts = 0
    while count < params.n:
        if attempts >= budget:
            raise ValueError(
                f"could not place {params.n} points at separation "
                f"{params.min_separation} after {budget} attempts"
            )
        attempts += 1
        x = rng.uniform(lo_x, hi_x)
        y = rng.uniform(lo_y, hi_y)
        if count:
            d2 = (placed[:count, 0] - x) ** 2 + (placed[:count, 1] - y) ** 2
            if d2.min() < sep2:
                continue
        placed[count] = (x, y)
        count += 1
    return placed


def perturb(gt, params, geometry):
    """Corrupt a ground-truth set. Draw order for a fixed seed: (1) one
    uniform per point for the drop decision, (2) one Gaussian jitter pair
    per point (drawn for dropped points too, so drops do not shift the
    jitter of survivors), (3) the Poisson spurious count, (4) uniform
    spurious positions over the full pixel-center domain. Survivors keep
    their original order; spurious points are appended."""
    gt = check_centroids(gt)
    h, w = check_image_shape(geometry)
    rng = _rng(params.seed)
    n = gt.shape[0]

    dropped = rng.uniform(0.0, 1.0, size=n) < params.drop_rate
    jitter = rng.normal(0.0, 1.0, size=(n, 2)) * params.jitter_sigma
    kept = gt[~dropped] + jitter[~dropped]

    n_spurious = int(rng.poisson(params.spurious_rate * n))
    spurious = np.empty((n_spurious, 2), dtype=np.float64)
    spurious[:, 0] = rng.uniform(0.0, w - 1.0, size=n_spurious)
    spurious[:, 1] = rng.uniform(0.0, h - 1.0, size=n_spurious)
    return np.concatenate([kept, spurious], axis=0)
