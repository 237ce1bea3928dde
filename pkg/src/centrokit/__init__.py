"""centrokit: centroid-based cell-detection evaluation toolkit.

Render fuzzy ground-truth density maps from point annotations, recover
centroids from maps or label masks, pair predictions with ground truth by
optimal assignment, and score them with the distance-aware Localization
Error plus precision/recall/F-score, including near-edge exclusion and
weighted cross-fold aggregation. Synthetic scene generation, a throughput
benchmark, and a plotting/CLI layer round out the pipeline.
"""

from .bench import BenchReport, benchmark_extraction
from .density import (
    FcrnGroundTruthRenderer,
    IfcrnGroundTruthRenderer,
    dilate_disk,
    downsample,
    downsampled_shape,
    gaussian_blur,
    gaussian_kernel,
    out_of_bounds_indices,
    render_fcrn_gt,
    render_ifcrn_gt,
    to_downsampled_coords,
    to_full_coords,
)
from .extraction import (
    LocalMaximaExtractor,
    MaskCentroidExtractor,
    ThresholdCentroidExtractor,
    extract_local_maxima,
    extract_threshold_cc,
    mask_to_centroids,
)
from .geometry import (
    distance_matrix,
    estimate_avg_diameter,
    polygon_area,
    polygon_centroid,
)
from .io import (
    FormatError,
    read_centroids_csv,
    read_pfm,
    read_pgm16,
    read_polygons_json,
    write_centroids_csv,
    write_pfm,
    write_pgm16,
    write_polygons_json,
)
from .matching import Matching, brute_force_assignment, solve_assignment
from .metrics import (
    EvalReport,
    FoldSummary,
    ImageEval,
    MetricParams,
    aggregate_dataset,
    crossfold_aggregate,
    evaluate_image,
    filter_near_edge,
    localization_error,
)
from .synth import PerturbParams, SceneParams, generate_scene, perturb
from .validation import (
    check_binary_mask,
    check_centroids,
    check_density_map,
    check_image_shape,
    check_label_mask,
    check_polygon,
)

__version__ = "0.1.0"

__all__ = [
    "BenchReport",
    "benchmark_extraction",
    "FcrnGroundTruthRenderer",
    "IfcrnGroundTruthRenderer",
    "dilate_disk",
    "downsample",
    "downsampled_shape",
    "gaussian_blur",
    "gaussian_kernel",
    "out_of_bounds_indices",
    "render_fcrn_gt",
    "render_ifcrn_gt",
    "to_downsampled_coords",
    "to_full_coords",
    "LocalMaximaExtractor",
    "MaskCentroidExtractor",
    "ThresholdCentroidExtractor",
    "extract_local_maxima",
    "extract_threshold_cc",
    "mask_to_centroids",
    "distance_matrix",
    "estimate_avg_diameter",
    "polygon_area",
    "polygon_centroid",
    "FormatError",
    "read_centroids_csv",
    "read_pfm",
    "read_pgm16",
    "read_polygons_json",
    "write_centroids_csv",
    "write_pfm",
    "write_pgm16",
    "write_polygons_json",
    "Matching",
    "brute_force_assignment",
    "solve_assignment",
    "EvalReport",
    "FoldSummary",
    "ImageEval",
    "MetricParams",
    "aggregate_dataset",
    "crossfold_aggregate",
    "evaluate_image",
    "filter_near_edge",
    "localization_error",
    "PerturbParams",
    "SceneParams",
    "generate_scene",
    "perturb",
    "check_binary_mask",
    "check_centroids",
    "check_density_map",
    "check_image_shape",
    "check_label_mask",
    "check_polygon",
    "__version__",
]
