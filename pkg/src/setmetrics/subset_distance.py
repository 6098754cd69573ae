"""Distance between finite subsets of a bounded metric space.

The distance between point sets A and B is the cheapest way to injectively
match the smaller set into the larger, paying the ground distance for each
matched pair and the penalty M(y) for each element of the larger set left
out:

    cost(chi) = sum d(x, chi(x)) + sum M(y) over unmatched y,
    distance(A, B) = min over injections chi of cost(chi).

With an admissible penalty (see :mod:`setmetrics.penalties`) this is a
metric on the finite subsets of the space.  Shared elements can always be
matched to themselves by some optimal injection, so both sets are first
reduced by their intersection; the remaining minimization is a square
assignment problem whose padding rows carry the penalties.

A direct enumerator over all injections, with no reduction step, serves
as the oracle.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from typing import Iterable, Mapping, Union

import numpy as np

from .assignment import solve_assignment
from .errors import SizeLimitError, ValidationError
from .penalties import ConstantPenalty, PenaltyFunction
from .spaces import Element, HammingSpace, Space

#: Largest set size accepted by the injection enumerator (7!/1! injections).
BRUTE_FORCE_MAX_SET = 7


class DuplicateElementsWarning(UserWarning):
    """Input collection repeated elements; duplicates were dropped."""


class PointSet:
    """An immutable finite set of elements of one space, canonically ordered.

    Construction validates every element, canonicalizes it, removes
    duplicates (with a :class:`DuplicateElementsWarning`) and sorts by the
    space's total order, so iteration is deterministic.
    """

    __slots__ = ("space", "elements", "_members")

    def __init__(self, space: Space, items: Iterable = ()):
        canonical = [space.validate_element(x) for x in items]
        unique = sorted(set(canonical), key=space.sort_key)
        if len(unique) != len(canonical):
            warnings.warn(DuplicateElementsWarning(
                f"dropped {len(canonical) - len(unique)} duplicate element(s)"),
                stacklevel=2)
        self.space = space
        self.elements = tuple(unique)
        self._members = frozenset(unique)

    @classmethod
    def _from_canonical(cls, space: Space, elements: tuple) -> "PointSet":
        ps = object.__new__(cls)
        ps.space = space
        ps.elements = elements
        ps._members = frozenset(elements)
        return ps

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return x in self._members

    def __eq__(self, other) -> bool:
        return (isinstance(other, PointSet)
                and self.space == other.space
                and self.elements == other.elements)

    def __hash__(self) -> int:
        return hash((self.space, self.elements))

    def __repr__(self) -> str:
        return f"PointSet({list(self.elements)})"

    def _check_same_space(self, other: "PointSet"):
        if self.space != other.space:
            raise ValidationError("point sets belong to different spaces")

    def intersection(self, other: "PointSet") -> "PointSet":
        self._check_same_space(other)
        kept = tuple(x for x in self.elements if x in other._members)
        return PointSet._from_canonical(self.space, kept)

    def difference(self, other: "PointSet") -> "PointSet":
        self._check_same_space(other)
        kept = tuple(x for x in self.elements if x not in other._members)
        return PointSet._from_canonical(self.space, kept)

    def to_json(self) -> list:
        return [list(x) if isinstance(x, tuple) else x for x in self.elements]


@dataclass(frozen=True)
class Injection:
    """A one-to-one matching of a source set into a target set, with the
    matching cost it achieves."""

    pairs: tuple  # ((source, target), ...)
    chi_cost: float


@dataclass(frozen=True)
class SubsetDistanceResult:
    """Outcome of a subset-distance computation.

    ``witness`` is an optimal injection between the reduced sets (the two
    set differences); ``witness_from_a`` tells whether its sources come
    from the first argument's side.  ``full_witness`` extends it by the
    identity on the shared elements, giving an optimal injection between
    the original sets.
    """

    value: float
    witness: Injection
    reduced_a: PointSet
    reduced_b: PointSet
    common: PointSet
    witness_from_a: bool

    @property
    def full_witness(self) -> Injection:
        identity = tuple((x, x) for x in self.common)
        return Injection(identity + self.witness.pairs, self.value)


ChiLike = Union[Injection, Mapping, Iterable]


def _normalize_chi(chi: ChiLike):
    if isinstance(chi, Injection):
        return list(chi.pairs)
    if isinstance(chi, Mapping):
        return list(chi.items())
    return [tuple(p) for p in chi]


def validate_injection(a: PointSet, b: PointSet, chi: ChiLike) -> tuple:
    """Check that ``chi`` maps all of ``a`` one-to-one into ``b``; return the
    pairs canonically ordered by source."""
    pairs = []
    for entry in _normalize_chi(chi):
        if len(entry) != 2:
            raise ValidationError(f"injection entry {entry!r} is not a pair")
        x = a.space.validate_element(entry[0])
        y = b.space.validate_element(entry[1])
        if x not in a:
            raise ValidationError(f"injection source {x!r} is not in the source set")
        if y not in b:
            raise ValidationError(f"injection target {y!r} is not in the target set")
        pairs.append((x, y))
    sources = [x for x, _ in pairs]
    targets = [y for _, y in pairs]
    if len(set(sources)) != len(sources):
        raise ValidationError("injection maps some source twice")
    if len(set(targets)) != len(targets):
        raise ValidationError("injection reuses a target; it must be one-to-one")
    if len(pairs) != len(a):
        raise ValidationError(
            f"injection covers {len(pairs)} of {len(a)} source elements")
    return tuple(sorted(pairs, key=lambda p: a.space.sort_key(p[0])))


def _check_bound(space: Space, penalty: PenaltyFunction, *sets: PointSet):
    if penalty.space != space:
        raise ValidationError("penalty function is bound to a different space")
    for s in sets:
        if s.space != space:
            raise ValidationError("point set belongs to a different space")


def chi_distance(space: Space, penalty: PenaltyFunction, a: PointSet,
                 b: PointSet, chi: ChiLike) -> float:
    """Cost of one injection: matched ground distances plus penalties of
    the target elements left unmatched."""
    _check_bound(space, penalty, a, b)
    if len(a) > len(b):
        raise ValidationError(
            "injection cost needs |source| <= |target|; swap the arguments")
    pairs = validate_injection(a, b, chi)
    matched = {y for _, y in pairs}
    total = 0.0
    for x, y in pairs:
        total += space.distance(x, y)
    for y in b:
        if y not in matched:
            total += penalty.value(y)
    return float(total)


def symmetric_difference_reduce(a: PointSet, b: PointSet):
    """Strip the shared elements from both sets.

    The subset distance is unchanged: some optimal injection fixes every
    shared element, contributing zero for it on both sides.
    """
    a._check_same_space(b)
    return a.difference(b), b.difference(a)


def subset_distance(space: Space, penalty: PenaltyFunction, a: PointSet,
                    b: PointSet) -> SubsetDistanceResult:
    """Exact subset distance via one square assignment solve.

    After reducing by the intersection, a |larger| x |larger| cost matrix
    is assembled: row i of a real source element holds its distances to
    the target elements, and each of the remaining padding rows holds the
    targets' penalties, so a padding assignment marks its column's element
    as unmatched.  Symmetric in (a, b); the orientation of the solve is
    canonical (smaller side first, ties broken on element order), so both
    argument orders run the identical computation.
    """
    _check_bound(space, penalty, a, b)
    common = a.intersection(b)
    reduced_a = a.difference(b)
    reduced_b = b.difference(a)
    if (len(reduced_a), reduced_a.elements) <= (len(reduced_b), reduced_b.elements):
        source, target, from_a = reduced_a, reduced_b, True
    else:
        source, target, from_a = reduced_b, reduced_a, False

    value, pairs = _solve_oriented(space, penalty, source, target)
    return SubsetDistanceResult(value, Injection(pairs, value),
                                reduced_a, reduced_b, common, from_a)


def _solve_oriented(space, penalty, source: PointSet, target: PointSet):
    ns, nt = len(source), len(target)
    if nt == 0:
        return 0.0, ()
    src, tgt = source.elements, target.elements
    penalties = [penalty.value(y) for y in tgt]
    cost = np.empty((nt, nt))
    for i, x in enumerate(src):
        cost[i] = [space.distance(x, y) for y in tgt]
    cost[ns:] = penalties
    perm = solve_assignment(cost).permutation

    # Re-sum in canonical order (matched pairs by source, penalties by
    # target) so the reported value matches a chi_distance evaluation of
    # the witness term for term.
    pairs = tuple((src[i], tgt[perm[i]]) for i in range(ns))
    matched_cols = set(perm[:ns])
    value = 0.0
    for i in range(ns):
        value += cost[i, perm[i]]
    for j in range(nt):
        if j not in matched_cols:
            value += penalties[j]
    return float(value), pairs


def brute_force_subset_distance(space: Space, penalty: PenaltyFunction,
                                a: PointSet, b: PointSet) -> SubsetDistanceResult:
    """Oracle: minimize over every injection explicitly.

    Evaluates the bare definition with no intersection reduction, which
    keeps it independent of the main path and makes the reduction itself
    testable.  Capped at set size BRUTE_FORCE_MAX_SET.
    """
    _check_bound(space, penalty, a, b)
    if max(len(a), len(b)) > BRUTE_FORCE_MAX_SET:
        raise SizeLimitError(
            f"brute force limited to sets of size {BRUTE_FORCE_MAX_SET}, "
            f"got {len(a)} and {len(b)}")
    if (len(a), a.elements) <= (len(b), b.elements):
        source, target, from_a = a, b, True
    else:
        source, target, from_a = b, a, False
    ns, nt = len(source), len(target)
    empty = PointSet._from_canonical(space, ())
    if nt == 0:
        return SubsetDistanceResult(0.0, Injection((), 0.0), a, b, empty, from_a)

    src, tgt = source.elements, target.elements
    dist = np.array([[space.distance(x, y) for y in tgt] for x in src],
                    dtype=float).reshape(ns, nt)
    penalties = np.array([penalty.value(y) for y in tgt])
    injections = np.array(list(itertools.permutations(range(nt), ns)),
                          dtype=np.intp)
    if injections.ndim == 1:  # ns == 0 collapses to shape (1,)
        injections = injections.reshape(1, ns)
    totals = penalties.sum() - penalties[injections].sum(axis=1)
    if ns:
        totals += dist[np.arange(ns), injections].sum(axis=1)
    best = int(totals.argmin())
    chosen = injections[best]
    pairs = tuple((src[i], tgt[chosen[i]]) for i in range(ns))
    value = float(totals[best])
    return SubsetDistanceResult(value, Injection(pairs, value), a, b, empty, from_a)


def sequence_subset_distance(alphabet: str, length: int, a, b) -> float:
    """Distance between sets of equal-length words with the constant
    word-length penalty: each surplus word of the larger set costs the full
    length.  This is the sequence-set distance used for DNA storage codes."""
    space = HammingSpace(alphabet, length)
    penalty = ConstantPenalty(space, float(length))
    set_a = a if isinstance(a, PointSet) else PointSet(space, a)
    set_b = b if isinstance(b, PointSet) else PointSet(space, b)
    return subset_distance(space, penalty, set_a, set_b).value
