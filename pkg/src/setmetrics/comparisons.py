"""Classical set distances, for comparison with the injection-based one.

Five rivals at desk scale: Hausdorff, sum of minimum distances,
surjective, fair-surjective, and link.  All reject empty sets (their
defining formulas quantify over nonempty sets) and all are symmetric,
but apart from Hausdorff none is a metric in general, so no triangle
inequality is promised here.

The surjective variants minimize over every function from the larger
set onto the smaller one, by direct enumeration; the link distance is a
minimum-weight edge cover, solved exactly via a matching reduction and
cross-checkable against a relation-enumeration oracle.
"""

from __future__ import annotations

import enum
import itertools

import numpy as np

from .assignment import solve_assignment
from .errors import DomainError, SizeLimitError, ValidationError
from .spaces import Space
from .subset_distance import PointSet

#: Cap on max(|a|, |b|) for the surjection enumerators (7^7 functions).
SURJECTION_MAX_SET = 7
#: Cap on |a|*|b| for the relation-enumeration link oracle (2^20 masks).
LINK_ORACLE_MAX_PAIRS = 20


class ComparisonKind(str, enum.Enum):
    HAUSDORFF = "hausdorff"
    SUM_MIN = "sum_min"
    SURJECTIVE = "surjective"
    FAIR_SURJECTIVE = "fair_surjective"
    LINK = "link"


def _check_pair(space: Space, a: PointSet, b: PointSet):
    for s in (a, b):
        if s.space != space:
            raise ValidationError("point set belongs to a different space")
        if len(s) == 0:
            raise DomainError("comparison distances are undefined for empty sets")


def _distance_matrix(space: Space, a: PointSet, b: PointSet) -> np.ndarray:
    return np.array([[space.distance(x, y) for y in b.elements]
                     for x in a.elements], dtype=float)


def hausdorff_distance(space: Space, a: PointSet, b: PointSet) -> float:
    """max of the two directed distances max_x min_y d(x, y)."""
    _check_pair(space, a, b)
    d = _distance_matrix(space, a, b)
    return float(max(d.min(axis=1).max(), d.min(axis=0).max()))


def sum_min_distance(space: Space, a: PointSet, b: PointSet) -> float:
    """Half the sum, over both sides, of each element's distance to the
    nearest element of the other set."""
    _check_pair(space, a, b)
    d = _distance_matrix(space, a, b)
    return float(0.5 * (d.min(axis=1).sum() + d.min(axis=0).sum()))


def _oriented(a: PointSet, b: PointSet):
    # Larger set first; ties broken on canonical element order so both
    # argument orders run the identical enumeration.
    if (len(a), a.elements) >= (len(b), b.elements):
        return a, b
    return b, a


def _surjections(n: int, m: int) -> np.ndarray:
    """All functions {0..n-1} -> {0..m-1} that hit every target, as an
    (count, n) array.  Requires n >= m >= 1."""
    idx = np.arange(m ** n, dtype=np.int64)
    funcs = np.empty((m ** n, n), dtype=np.int8)
    for i in range(n):
        funcs[:, i] = idx % m
        idx //= m
    occupied = np.zeros(len(funcs), dtype=np.int32)
    for i in range(n):
        occupied |= np.int32(1) << funcs[:, i].astype(np.int32)
    return funcs[occupied == (1 << m) - 1]


def _min_over_functions(space, a, b, fair: bool) -> float:
    _check_pair(space, a, b)
    big, small = _oriented(a, b)
    n, m = len(big), len(small)
    if n > SURJECTION_MAX_SET:
        raise SizeLimitError(
            f"surjection enumeration limited to sets of size {SURJECTION_MAX_SET}, "
            f"got {n}")
    funcs = _surjections(n, m)
    if fair:
        counts = np.stack([(funcs == t).sum(axis=1) for t in range(m)], axis=1)
        funcs = funcs[counts.max(axis=1) - counts.min(axis=1) <= 1]
    d = _distance_matrix(space, big, small)
    costs = np.zeros(len(funcs))
    for i in range(n):
        costs += d[i, funcs[:, i]]
    return float(costs.min())


def surjective_distance(space: Space, a: PointSet, b: PointSet) -> float:
    """Cheapest way to map the larger set onto the smaller one, summing
    the distance of every element to its image."""
    return _min_over_functions(space, a, b, fair=False)


def fair_surjective_distance(space: Space, a: PointSet, b: PointSet) -> float:
    """Like surjective_distance, but only over surjections whose preimage
    sizes differ by at most one."""
    return _min_over_functions(space, a, b, fair=True)


def link_distance(space: Space, a: PointSet, b: PointSet) -> float:
    """Cheapest relation between the sets that covers every element of
    both sides, summing the distances of its pairs.

    This is a minimum-weight edge cover of the complete bipartite graph:
    each element grabs its cheapest counterpart, then a matching over the
    (truncated) reduced costs min(d - cheap_row - cheap_col, 0) undoes
    double coverage exactly where pairing is worth it.
    """
    _check_pair(space, a, b)
    big, small = _oriented(a, b)
    d = _distance_matrix(space, big, small)
    row_cheap = d.min(axis=1)
    col_cheap = d.min(axis=0)
    base = float(row_cheap.sum() + col_cheap.sum())

    reduced = np.minimum(d - row_cheap[:, None] - col_cheap[None, :], 0.0)
    n = max(d.shape)
    padded = np.zeros((n, n))
    padded[:d.shape[0], :d.shape[1]] = reduced
    # The assignment solver wants nonnegative entries; shifting every
    # entry by a constant moves the optimum value by n * shift only.
    shift = float(-padded.min())
    correction = solve_assignment(padded + shift).total_cost - n * shift
    return float(base + correction)


def brute_force_link_distance(space: Space, a: PointSet, b: PointSet) -> float:
    """Oracle: enumerate every relation on a x b as a bitmask and keep the
    cheapest one covering both sides.  Capped at |a|*|b| <= 20."""
    _check_pair(space, a, b)
    na, nb = len(a), len(b)
    if na * nb > LINK_ORACLE_MAX_PAIRS:
        raise SizeLimitError(
            f"relation enumeration limited to |a|*|b| <= {LINK_ORACLE_MAX_PAIRS}, "
            f"got {na * nb}")
    d = _distance_matrix(space, a, b).ravel()
    masks = np.arange(1, 1 << (na * nb), dtype=np.int64)
    bits = ((masks[:, None] >> np.arange(na * nb)) & 1).astype(np.int8)
    grid = bits.reshape(-1, na, nb)
    covers = grid.any(axis=2).all(axis=1) & grid.any(axis=1).all(axis=1)
    costs = bits[covers] @ d
    return float(costs.min())


_DISPATCH = {
    ComparisonKind.HAUSDORFF: hausdorff_distance,
    ComparisonKind.SUM_MIN: sum_min_distance,
    ComparisonKind.SURJECTIVE: surjective_distance,
    ComparisonKind.FAIR_SURJECTIVE: fair_surjective_distance,
    ComparisonKind.LINK: link_distance,
}


def comparison_distance(kind: ComparisonKind, space: Space, a: PointSet,
                        b: PointSet) -> float:
    return _DISPATCH[ComparisonKind(kind)](space, a, b)
