"""Exact minimum-cost assignment on square nonnegative cost matrices.

The solver is a shortest-augmenting-path method with dual potentials
(Jonker-Volgenant style), O(n^3) overall: one Dijkstra-like search per
row, with the column scan vectorized through numpy.  A factorial-time
enumerator is provided as an independent oracle for small instances.
Both are deterministic: a fixed input always yields the same assignment.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import SizeLimitError, ValidationError

#: Largest matrix the permutation enumerator will accept (9! = 362880).
BRUTE_FORCE_MAX_N = 9


@dataclass(frozen=True)
class Assignment:
    """A perfect assignment: row i is matched to column permutation[i]."""

    permutation: tuple
    total_cost: float

    def __post_init__(self):
        n = len(self.permutation)
        if sorted(self.permutation) != list(range(n)):
            raise ValidationError("assignment is not a permutation")


def _as_cost_array(cost_matrix) -> np.ndarray:
    c = np.asarray(cost_matrix, dtype=float)
    if c.ndim != 2 or c.shape[0] != c.shape[1] or c.shape[0] == 0:
        raise ValidationError(
            f"cost matrix must be square and non-empty, got shape {c.shape}")
    if not np.isfinite(c).all():
        raise ValidationError("cost matrix entries must be finite")
    if (c < 0).any():
        raise ValidationError("cost matrix entries must be nonnegative")
    return c


def solve_assignment(cost_matrix) -> Assignment:
    """Return a minimum-total-cost perfect assignment of rows to columns.

    Accepts anything convertible to a square numpy array of finite
    nonnegative reals.  Any optimal permutation may be returned when the
    optimum is not unique.
    """
    c = _as_cost_array(cost_matrix)
    n = c.shape[0]

    u = np.zeros(n)                             # row potentials
    v = np.zeros(n)                             # column potentials
    col_of_row = np.full(n, -1, dtype=np.intp)
    row_of_col = np.full(n, -1, dtype=np.intp)

    # scratch buffers reused across augmentations
    dist = np.empty(n)          # tentative path costs; +inf once a column is final
    final_dist = np.empty(n)    # frozen path cost of finalized columns
    reduced = np.empty(n)
    better = np.empty(n, dtype=bool)
    final = np.empty(n, dtype=bool)
    open_cols = np.empty(n, dtype=bool)
    parent_row = np.empty(n, dtype=np.intp)

    for start_row in range(n):
        dist.fill(np.inf)
        final_dist.fill(np.inf)
        final.fill(False)
        open_cols.fill(True)
        parent_row.fill(-1)
        tree_rows = [start_row]
        base = 0.0                  # path cost of the row being scanned
        i = start_row
        sink = -1
        while sink < 0:
            # relax every non-final column through row i
            np.subtract(c[i], v, out=reduced)
            reduced += base - u[i]
            np.less(reduced, dist, out=better)
            better &= open_cols
            np.copyto(dist, reduced, where=better)
            np.copyto(parent_row, i, where=better)
            j = int(dist.argmin())
            base = float(dist[j])
            final_dist[j] = base
            dist[j] = np.inf
            final[j] = True
            open_cols[j] = False
            r = int(row_of_col[j])
            if r < 0:
                sink = j
            else:
                i = r
                tree_rows.append(r)

        # dual update keeps reduced costs nonnegative and tree edges tight
        u[start_row] += base
        if len(tree_rows) > 1:
            rows = np.asarray(tree_rows[1:], dtype=np.intp)
            u[rows] += base - final_dist[col_of_row[rows]]
        v[final] += final_dist[final] - base

        # augment along the alternating path ending at the free column
        j = sink
        while True:
            i = int(parent_row[j])
            row_of_col[j] = i
            j, col_of_row[i] = col_of_row[i], j
            if i == start_row:
                break

    total = float(c[np.arange(n), col_of_row].sum())
    return Assignment(tuple(int(x) for x in col_of_row), total)


def brute_force_assignment(cost_matrix) -> Assignment:
    """Exact minimum by enumerating all n! permutations; oracle for the solver."""
    c = _as_cost_array(cost_matrix)
    n = c.shape[0]
    if n > BRUTE_FORCE_MAX_N:
        raise SizeLimitError(
            f"brute force limited to n <= {BRUTE_FORCE_MAX_N}, got {n}")
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.intp)
    totals = c[np.arange(n), perms].sum(axis=1)
    best = int(totals.argmin())
    return Assignment(tuple(int(x) for x in perms[best]), float(totals[best]))
