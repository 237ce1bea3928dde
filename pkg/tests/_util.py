"""Shared builders for synthetic evaluation fixtures."""

import numpy as np

from centrokit import SceneParams, distance_matrix, generate_scene


def interior_scene(n, seed, min_separation=24.0, edge_buffer=25.0, geometry=(512, 512)):
    """Well-separated points clear of the default margin band."""
    return generate_scene(
        SceneParams(
            n=n,
            geometry=geometry,
            min_separation=min_separation,
            edge_buffer=edge_buffer,
            seed=seed,
        )
    )


def far_spurious(gts, count, geometry=(512, 512), margin=25.0, min_dist=45.0):
    """Interior points at least min_dist from every GT and from each other.

    min_dist 45 exceeds s + (t - s)(1 + alpha) for the (s=6, t=24) presets
    at both alpha = 0.3 (29.4) and alpha = 1 (42), so a spurious point
    matched to a leftover GT always sits on the saturated plateau.
    """
    if count == 0:
        return np.zeros((0, 2))
    h, w = geometry
    chosen = []
    for y in range(int(margin), int(h - margin), 7):
        for x in range(int(margin), int(w - margin), 7):
            p = np.array([[float(x), float(y)]])
            if distance_matrix(p, gts).min() < min_dist:
                continue
            if chosen and distance_matrix(p, np.array(chosen)).min() < min_dist:
                continue
            chosen.append([float(x), float(y)])
            if len(chosen) == count:
                return np.array(chosen)
    raise RuntimeError(f"could not place {count} spurious points")


def corrupt(gts, k_drop, j_spurious, geometry=(512, 512)):
    """Remove the first k GTs from the predictions and append j far-away
    interior spurious points; returns the prediction set."""
    preds = gts[k_drop:]
    spurious = far_spurious(gts, j_spurious, geometry=geometry)
    return np.concatenate([preds, spurious], axis=0)
