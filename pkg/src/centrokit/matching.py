"""Optimal min-cost bipartite matching between predictions and ground truths.

`solve_assignment` runs a dense shortest-augmenting-path solver (Hungarian
method with dual potentials, Jonker-Volgenant flavor) that matches the whole
smaller side natively - rectangular instances are not zero-padded, because
dummy entries can distort which real pairs win.

Ties between equal-cost optima are broken toward the lexicographically
smallest pair list (pairs sorted by prediction index). The solver detects
potential ties through the zero-reduced-cost subgraph given by its dual
potentials and, only then, runs an exact refinement whose equality checks
use `math.fsum` totals, which are correctly rounded and therefore
independent of summation order.

`brute_force_assignment` is the verification oracle: exhaustive enumeration
over all injections of the smaller side into the larger, same tie-break.
"""

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

__all__ = ["Matching", "solve_assignment", "brute_force_assignment"]

_BRUTE_FORCE_MAX_SIDE = 8
_BRUTE_FORCE_MAX_CANDIDATES = 2_000_000


@dataclass(frozen=True)
class Matching:
    """An injective pairing of prediction indices to ground-truth indices.

    pairs: (pred_index, gt_index, distance) triples sorted by pred_index;
    exactly min(n_preds, n_gts) of them. The unmatched index lists hold
    whatever remains on each side, ascending.
    """

    pairs: tuple = field(default_factory=tuple)
    unmatched_preds: tuple = field(default_factory=tuple)
    unmatched_gts: tuple = field(default_factory=tuple)

    @property
    def total_cost(self):
        return math.fsum(d for _, _, d in self.pairs)

    def pair_indices(self):
        return [(i, j) for i, j, _ in self.pairs]


def _check_costs(costs):
    arr = np.asarray(costs, dtype=np.float64)
    if arr.ndim != 2:
        raise ValueError(f"cost matrix must be 2D, got {arr.ndim}D")
    if arr.size and (not np.all(np.isfinite(arr)) or arr.min() < 0):
        raise ValueError("cost matrix entries must be finite and non-negative")
    return arr


def _build(costs, pair_indices):
    n, m = costs.shape
    pairs = tuple(
        (int(i), int(j), float(costs[i, j])) for i, j in sorted(pair_indices)
    )
    matched_p = {i for i, _, _ in pairs}
    matched_g = {j for _, j, _ in pairs}
    return Matching(
        pairs=pairs,
        unmatched_preds=tuple(i for i in range(n) if i not in matched_p),
        unmatched_gts=tuple(j for j in range(m) if j not in matched_g),
    )


def _augmenting_path_solve(a):
    """Match every row of a (n x m, n <= m) matrix at minimum total cost.

    Returns (row2col, u, v): the assignment plus dual potentials with
    u[i] + v[j] <= a[i, j] everywhere and equality on matched edges.
    Indexing is 1-based internally (index 0 is the virtual slot).
    """
    n, m = a.shape
    u = np.zeros(n + 1)
    v = np.zeros(m + 1)
    p = np.zeros(m + 1, dtype=np.int64)  # p[j] = row matched to column j
    way = np.zeros(m + 1, dtype=np.int64)
    for i in range(1, n + 1):
        p[0] = i
        j0 = 0
        minv = np.full(m + 1, np.inf)
        used = np.zeros(m + 1, dtype=bool)
        while True:
            used[j0] = True
            i0 = p[j0]
            reduced = a[i0 - 1, :] - u[i0] - v[1:]
            free = ~used[1:]
            improve = free & (reduced < minv[1:])
            minv[1:][improve] = reduced[improve]
            way[1:][improve] = j0
            shielded = np.where(free, minv[1:], np.inf)
            j1 = int(np.argmin(shielded)) + 1  # first minimum: smallest index
            delta = shielded[j1 - 1]
            used_idx = np.nonzero(used)[0]
            u[p[used_idx]] += delta
            v[used_idx] -= delta
            minv[~used] -= delta
            j0 = j1
            if p[j0] == 0:
                break
        while j0 != 0:
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1
    row2col = np.zeros(n, dtype=np.int64)
    for j in range(1, m + 1):
        if p[j]:
            row2col[p[j] - 1] = j - 1
    return row2col, u[1:], v[1:]


def _solve_pairs(costs):
    """Optimal pair list (unordered) plus dual potentials oriented as
    (pred duals, gt duals)."""
    n, m = costs.shape
    if n <= m:
        row2col, u, v = _augmenting_path_solve(costs)
        return [(i, int(row2col[i])) for i in range(n)], u, v
    col2row, u, v = _augmenting_path_solve(costs.T)
    return [(int(col2row[j]), j) for j in range(m)], v, u


def _completion_total(costs, fixed_cost_parts, rows, cols):
    """fsum total of the fixed parts plus an optimal matching of the
    remaining rows x cols block (full smaller side)."""
    parts = list(fixed_cost_parts)
    if min(len(rows), len(cols)):
        sub = costs[np.ix_(rows, cols)]
        sub_pairs, _, _ = _solve_pairs(sub)
        parts.extend(float(sub[i, j]) for i, j in sub_pairs)
    return math.fsum(parts)


def _lexicographic_refine(costs, c_star, k):
    """Smallest pair list (sorted by pred index) among matchings of size k
    whose fsum total equals c_star. Decisions are verified by exact
    completion solves, so this is only invoked when ties are plausible."""
    n, m = costs.shape
    fixed = []
    fixed_costs = []
    used_cols = set()
    for i in range(n):
        if len(fixed) == k:
            break
        rows_after = list(range(i + 1, n))
        need_after = k - len(fixed) - 1
        may_skip = (n - i - 1) >= (k - len(fixed))

        chosen = None
        for j in range(m):
            if j in used_cols:
                continue
            cols_left = [c for c in range(m) if c not in used_cols and c != j]
            if min(len(rows_after), len(cols_left)) < need_after:
                continue
            total = _completion_total(
                costs, fixed_costs + [float(costs[i, j])], rows_after, cols_left
            )
            if total == c_star:
                chosen = j
                break
        if chosen is not None:
            fixed.append((i, chosen))
            fixed_costs.append(float(costs[i, chosen]))
            used_cols.add(chosen)
        elif not may_skip:
            raise RuntimeError("assignment refinement lost optimality")  # unreachable
    return fixed


def solve_assignment(costs):
    """Minimum-total-cost matching of size min(rows, cols).

    Raises ValueError on NaN, infinite, or negative entries. Ties between
    equal-cost optima go to the lexicographically smallest pair list.
    """
    arr = _check_costs(costs)
    n, m = arr.shape
    k = min(n, m)
    if k == 0:
        return _build(arr, [])

    pairs, u, v = _solve_pairs(arr)
    base = _build(arr, pairs)

    # Tie detection: every optimal matching is tight (zero reduced cost)
    # under optimal dual potentials, so a tight non-matched edge is the only
    # way an alternative optimum can exist.
    reduced = arr - u[:, None] - v[None, :]
    tol = 1e-9 * max(1.0, float(arr.max()))
    tight = reduced <= tol
    matched_mask = np.zeros_like(tight)
    for i, j, _ in base.pairs:
        matched_mask[i, j] = True
    if not np.any(tight & ~matched_mask):
        return base

    c_star = base.total_cost
    refined = _lexicographic_refine(arr, c_star, k)
    return _build(arr, refined)


def brute_force_assignment(costs):
    """Exhaustive oracle: enumerate every injection of the smaller side into
    the larger and return the min-cost matching, ties broken toward the
    lexicographically smallest pair list. Rejects instances whose smaller
    side exceeds 8 or whose enumeration would be unreasonably large."""
    arr = _check_costs(costs)
    n, m = arr.shape
    k = min(n, m)
    if k == 0:
        return _build(arr, [])
    if k > _BRUTE_FORCE_MAX_SIDE:
        raise ValueError(
            f"instance too large for brute force: min side {k} > {_BRUTE_FORCE_MAX_SIDE}"
        )
    n_candidates = math.perm(max(n, m), k)
    if n_candidates > _BRUTE_FORCE_MAX_CANDIDATES:
        raise ValueError(
            f"instance too large for brute force: {n_candidates} candidate matchings"
        )

    if n <= m:
        perms = np.array(list(itertools.permutations(range(m), n)), dtype=np.int64)
        totals = arr[np.arange(n)[None, :], perms].sum(axis=1)
        pair_lists = lambda sel: [(i, int(perms[sel, i])) for i in range(n)]
    else:
        perms = np.array(list(itertools.permutations(range(n), m)), dtype=np.int64)
        totals = arr[perms, np.arange(m)[None, :]].sum(axis=1)
        pair_lists = lambda sel: sorted((int(perms[sel, j]), j) for j in range(m))

    # Narrow with float sums, then decide exactly with fsum.
    near = np.nonzero(totals <= totals.min() + 1e-9 * max(1.0, float(arr.max())))[0]
    best = None
    for sel in near:
        pl = pair_lists(int(sel))
        exact = math.fsum(float(arr[i, j]) for i, j in pl)
        key = (exact, pl)
        if best is None or key < best:
            best = key
    return _build(arr, best[1])
