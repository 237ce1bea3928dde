"""Extraction throughput measurement in nuclei per second.

Timing covers extraction only; maps must already be in memory. One untimed
warm-up pass runs first, then `repeats` timed passes over the whole list.
The reported rate divides the total detection count of a single pass by
the median per-pass wall time, which is robust to OS scheduling jitter.
Absolute numbers are environment-dependent and single-threaded by default.
"""

import math
import statistics
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

__all__ = ["BenchReport", "benchmark_extraction"]


@dataclass(frozen=True)
class BenchReport:
    total_nuclei: int
    wall_seconds: float
    nuclei_per_second: float
    per_repeat_seconds: tuple = field(default_factory=tuple)
    repeats: int = 1


def benchmark_extraction(maps, extractor, repeats=3, jobs=1):
    """Time `extractor` (a callable mapping one density map to a centroid
    array) over `maps`, `repeats` times. jobs > 1 spreads per-map work over
    a thread pool; detection counts are unaffected. Raises ValueError on an
    empty map list ("nothing to benchmark") or repeats < 1."""
    maps = list(maps)
    if not maps:
        raise ValueError("nothing to benchmark")
    if repeats < 1:
        raise ValueError(f"repeats must be >= 1, got {repeats}")
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")

    def one_pass():
        if jobs == 1:
            return sum(len(extractor(m)) for m in maps)
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return sum(len(c) for c in pool.map(extractor, maps))

    total = one_pass()  # warm-up, untimed; count is deterministic
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        one_pass()
        times.append(time.perf_counter() - start)

    median = statistics.median(times)
    rate = 0.0 if total == 0 or median <= 0 else total / median
    return BenchReport(
        total_nuclei=int(total),
        wall_seconds=math.fsum(times),
        nuclei_per_second=rate,
        per_repeat_seconds=tuple(times),
        repeats=int(repeats),
    )
