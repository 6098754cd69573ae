"""Bounded metric ground spaces.

Three families are supported, each with an exact distance, an exact
diameter, and an exact per-element eccentricity (the largest distance
from a point to anywhere in the space):

* fixed-length words over a finite alphabet with the Hamming distance,
* points of an axis-aligned box in R^n with the Euclidean distance,
* vertices of a finite connected graph with positive edge weights and
  the shortest-path distance.

Elements are plain values: a word is a ``str``, a point is a tuple of
floats, a vertex is an ``int``.  Spaces validate and canonicalize
elements on entry.  All operations are pure; instances are immutable
after construction and safe to share across threads.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterator, Optional, Sequence, Union

import numpy as np

from .errors import ParseError, ValidationError

#: Canonical element forms: word, coordinate tuple, or vertex id.
Element = Union[str, tuple, int]

#: Absolute tolerance for all real-valued comparisons in validity checks.
REAL_TOL = 1e-9


class Space:
    """Common interface of the ground-space kinds."""

    kind: str = ""

    @property
    def diameter(self) -> float:
        """Largest distance between any two elements of the space."""
        raise NotImplementedError

    def validate_element(self, x) -> Element:
        """Return the canonical form of ``x``; raise ValidationError if it
        does not belong to this space."""
        raise NotImplementedError

    def distance(self, a, b) -> float:
        """Metric distance between two elements of the space."""
        return self._distance(self.validate_element(a), self.validate_element(b))

    def _distance(self, a: Element, b: Element) -> float:
        raise NotImplementedError

    def eccentricity(self, x) -> float:
        """Largest distance from ``x`` to any element of the space."""
        raise NotImplementedError

    def sort_key(self, x: Element):
        """Total-order key used for canonical iteration of point sets."""
        return x

    def sample_element(self, rng: np.random.Generator) -> Element:
        """Draw a uniform-ish random element (used by checks and the CLI)."""
        raise NotImplementedError

    def element_count(self) -> Optional[int]:
        """Number of elements for finite kinds, None for a continuum."""
        return None

    def elements(self) -> Iterator[Element]:
        """Iterate all elements; only available when element_count() is set."""
        raise ValidationError(f"{self.kind} space is not finitely enumerable")

    def to_json(self) -> dict:
        raise NotImplementedError

    def _key(self) -> tuple:
        raise NotImplementedError

    def __eq__(self, other) -> bool:
        return isinstance(other, Space) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.to_json()})"


class HammingSpace(Space):
    """Words of a fixed length over a finite alphabet, Hamming distance."""

    kind = "hamming"

    def __init__(self, alphabet: str, length: int):
        if not isinstance(alphabet, str) or not alphabet:
            raise ValidationError("alphabet must be a non-empty string")
        if len(set(alphabet)) != len(alphabet):
            raise ValidationError("alphabet must not repeat symbols")
        if not isinstance(length, int) or isinstance(length, bool) or length < 1:
            raise ValidationError("word length must be a positive integer")
        self.alphabet = "".join(sorted(alphabet))
        self.length = length
        self._symbols = frozenset(alphabet)

    @property
    def diameter(self) -> float:
        # A longest pair differs in every coordinate; with a single symbol
        # the space has one word and the diameter collapses to 0.
        return float(self.length) if len(self.alphabet) >= 2 else 0.0

    def validate_element(self, x) -> str:
        if not isinstance(x, str):
            raise ValidationError(f"expected a word (str), got {type(x).__name__}")
        if len(x) != self.length:
            raise ValidationError(
                f"word {x!r} has length {len(x)}, space requires {self.length}")
        bad = set(x) - self._symbols
        if bad:
            raise ValidationError(
                f"word {x!r} uses symbols {sorted(bad)} outside alphabet {self.alphabet!r}")
        return x

    def _distance(self, a: str, b: str) -> float:
        return float(sum(1 for u, v in zip(a, b) if u != v))

    def eccentricity(self, x) -> float:
        self.validate_element(x)
        # With >= 2 symbols a word differing in every coordinate exists.
        return self.diameter

    def sample_element(self, rng) -> str:
        picks = rng.integers(0, len(self.alphabet), size=self.length)
        return "".join(self.alphabet[i] for i in picks)

    def element_count(self) -> int:
        return len(self.alphabet) ** self.length

    def elements(self) -> Iterator[str]:
        for word in itertools.product(self.alphabet, repeat=self.length):
            yield "".join(word)

    def to_json(self) -> dict:
        return {"kind": self.kind, "alphabet": self.alphabet, "length": self.length}

    def _key(self) -> tuple:
        return (self.kind, self.alphabet, self.length)


class EuclideanBoxSpace(Space):
    """Points of an axis-aligned closed box in R^n, Euclidean distance."""

    kind = "euclidean_box"

    def __init__(self, bounds: Sequence[Sequence[float]]):
        cleaned = []
        for i, pair in enumerate(bounds):
            lo, hi = (float(v) for v in pair)
            if not (math.isfinite(lo) and math.isfinite(hi)):
                raise ValidationError(f"bounds for coordinate {i} must be finite")
            if lo > hi:
                raise ValidationError(
                    f"bounds for coordinate {i} are inverted: [{lo}, {hi}]")
            cleaned.append((lo, hi))
        if not cleaned:
            raise ValidationError("box must have at least one dimension")
        self.bounds = tuple(cleaned)
        self.dimension = len(cleaned)

    @property
    def diameter(self) -> float:
        return math.sqrt(sum((hi - lo) ** 2 for lo, hi in self.bounds))

    def validate_element(self, x) -> tuple:
        if isinstance(x, str) or not isinstance(x, Sequence):
            raise ValidationError(
                f"expected a coordinate sequence, got {type(x).__name__}")
        if len(x) != self.dimension:
            raise ValidationError(
                f"point has {len(x)} coordinates, space requires {self.dimension}")
        point = []
        for i, (value, (lo, hi)) in enumerate(zip(x, self.bounds)):
            v = float(value)
            if not math.isfinite(v):
                raise ValidationError(f"coordinate {i} is not finite")
            if v < lo - REAL_TOL or v > hi + REAL_TOL:
                raise ValidationError(
                    f"coordinate {i} = {v} outside bounds [{lo}, {hi}]")
            point.append(min(max(v, lo), hi))
        return tuple(point)

    def _distance(self, a: tuple, b: tuple) -> float:
        return math.dist(a, b)

    def eccentricity(self, x) -> float:
        p = self.validate_element(x)
        # The squared distance to a corner separates per coordinate, so the
        # farthest corner takes the farther bound in each coordinate.
        return math.sqrt(sum(max(v - lo, hi - v) ** 2
                             for v, (lo, hi) in zip(p, self.bounds)))

    def sample_element(self, rng: np.random.Generator) -> tuple:
        return tuple(float(rng.uniform(lo, hi)) for lo, hi in self.bounds)

    def to_json(self) -> dict:
        return {"kind": self.kind, "bounds": [list(pair) for pair in self.bounds]}

    def _key(self) -> tuple:
        return (self.kind, self.bounds)


class GraphSpace(Space):
    """Vertices of a finite connected weighted graph, shortest-path distance.

    Vertices are integers 0..n-1.  Edges are undirected with strictly
    positive finite weights; zero-weight edges would collapse distinct
    vertices to distance 0 and are rejected.  All-pairs distances are
    precomputed with Floyd-Warshall at construction.
    """

    kind = "graph"

    def __init__(self, edges: Sequence[Sequence[float]],
                 vertex_count: Optional[int] = None):
        cleaned = []
        max_id = -1
        for e in edges:
            if len(e) != 3:
                raise ValidationError(f"edge {e!r} must be [u, v, weight]")
            u, v, w = e
            if isinstance(u, bool) or isinstance(v, bool) \
                    or not isinstance(u, int) or not isinstance(v, int):
                raise ValidationError(f"edge {e!r} endpoints must be integers")
            if u < 0 or v < 0:
                raise ValidationError(f"edge {e!r} has a negative vertex id")
            if u == v:
                raise ValidationError(f"edge {e!r} is a self-loop")
            w = float(w)
            if not math.isfinite(w) or w <= 0:
                raise ValidationError(
                    f"edge ({u}, {v}) weight must be positive and finite, got {w}")
            cleaned.append((min(u, v), max(u, v), w))
            max_id = max(max_id, u, v)

        n = vertex_count if vertex_count is not None else max_id + 1
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ValidationError("graph must have at least one vertex")
        if max_id >= n:
            raise ValidationError(
                f"edge endpoint {max_id} exceeds declared vertex count {n}")
        self.vertex_count = n
        self.edges = tuple(sorted(set(cleaned)))

        dm = np.full((n, n), np.inf)
        np.fill_diagonal(dm, 0.0)
        for u, v, w in self.edges:
            if w < dm[u, v]:  # parallel edges: keep the cheapest
                dm[u, v] = dm[v, u] = w
        for k in range(n):
            np.minimum(dm, dm[:, k, None] + dm[None, k, :], out=dm)
        if not np.isfinite(dm).all():
            raise ValidationError(
                "graph is not connected; shortest-path distances are unbounded")
        self._dist = dm
        self._dist.setflags(write=False)

    @property
    def diameter(self) -> float:
        return float(self._dist.max())

    def validate_element(self, x) -> int:
        if isinstance(x, bool) or not isinstance(x, int):
            raise ValidationError(f"expected a vertex id (int), got {type(x).__name__}")
        if not 0 <= x < self.vertex_count:
            raise ValidationError(
                f"vertex {x} outside range 0..{self.vertex_count - 1}")
        return x

    def _distance(self, a: int, b: int) -> float:
        return float(self._dist[a, b])

    def eccentricity(self, x) -> float:
        v = self.validate_element(x)
        return float(self._dist[v].max())

    def sample_element(self, rng: np.random.Generator) -> int:
        return int(rng.integers(self.vertex_count))

    def element_count(self) -> int:
        return self.vertex_count

    def elements(self) -> Iterator[int]:
        return iter(range(self.vertex_count))

    def to_json(self) -> dict:
        return {"kind": self.kind,
                "vertices": self.vertex_count,
                "edges": [[u, v, w] for u, v, w in self.edges]}

    def _key(self) -> tuple:
        return (self.kind, self.vertex_count, self.edges)


def space_from_json(obj: dict) -> Space:
    """Build a space from its JSON descriptor (see the CLI file format).

    Any defect in the descriptor, including one the space constructor
    itself would reject, is reported as a ParseError: at this layer the
    input is an untrusted document, not a programming mistake.
    """
    if not isinstance(obj, dict):
        raise ParseError("space descriptor must be a JSON object")
    kind = obj.get("kind")
    try:
        if kind == "hamming":
            _require_keys(obj, {"kind", "alphabet", "length"})
            return HammingSpace(obj["alphabet"], obj["length"])
        if kind == "euclidean_box":
            _require_keys(obj, {"kind", "bounds"})
            return EuclideanBoxSpace(obj["bounds"])
        if kind == "graph":
            _require_keys(obj, {"kind", "edges", "vertices"}, optional={"vertices"})
            return GraphSpace(obj["edges"], obj.get("vertices"))
    except ValidationError as exc:
        raise ParseError(f"bad {kind} space descriptor: {exc}") from exc
    raise ParseError(f"unknown space kind {kind!r}")


def _require_keys(obj: dict, allowed: set, optional: set = frozenset()):
    extra = set(obj) - allowed
    if extra:
        raise ParseError(f"unexpected keys in space descriptor: {sorted(extra)}")
    missing = allowed - optional - set(obj)
    if missing:
        raise ParseError(f"missing keys in space descriptor: {sorted(missing)}")


def element_to_json(x: Element):
    """JSON form of an element: vectors become lists, the rest map as-is."""
    return list(x) if isinstance(x, tuple) else x


def element_from_json(space: Space, value) -> Element:
    """Decode one element from its JSON form and validate it in the space."""
    return space.validate_element(tuple(value) if isinstance(value, list) else value)
