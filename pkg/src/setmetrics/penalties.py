"""Penalty functions charging elements left unmatched by a subset distance.

A penalty function M assigns each element of the ground space the cost of
leaving it unmatched.  For the subset distance to be a metric, M must be
admissible: for all x, y, z,

    d(x, y) <= M(x)    and    M(x) <= d(x, z) + M(z),

i.e. M(x) dominates every distance out of x, and M varies by at most the
distance between evaluation points.  The built-in variants are admissible
by construction:

* ``constant`` with any value >= the space diameter,
* ``diameter``, the constant equal to the diameter,
* ``eccentricity``, M(x) = largest distance from x (the pointwise-least
  admissible choice),

plus an experimentation-only ``table`` variant that carries explicit
per-element values and must be vetted with :func:`validate_penalty`
before use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import ParseError, ValidationError
from .spaces import (Element, REAL_TOL, Space, element_from_json,
                     element_to_json)


class PenaltyFunction:
    """Base class binding a penalty variant to a ground space."""

    variant: str = ""

    def __init__(self, space: Space):
        if space.diameter <= 0:
            raise ValidationError(
                "penalty functions need a space with at least two elements")
        self.space = space

    def value(self, x) -> float:
        """Penalty charged when ``x`` is left unmatched."""
        raise NotImplementedError

    def to_json(self) -> dict:
        raise NotImplementedError

    def _key(self) -> tuple:
        raise NotImplementedError

    def __eq__(self, other) -> bool:
        return (isinstance(other, PenaltyFunction)
                and self._key() == other._key()
                and self.space == other.space)

    def __hash__(self) -> int:
        return hash((self._key(), self.space))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.to_json()})"


class ConstantPenalty(PenaltyFunction):
    """A constant penalty; admissible iff the constant covers the diameter."""

    variant = "constant"

    def __init__(self, space: Space, value: float):
        super().__init__(space)
        c = float(value)
        if not math.isfinite(c):
            raise ValidationError("constant penalty must be finite")
        if c < space.diameter - REAL_TOL:
            raise ValidationError(
                f"constant penalty {c} is below the space diameter "
                f"{space.diameter}; admissibility cannot be certified")
        self.constant = c

    def value(self, x) -> float:
        self.space.validate_element(x)
        return self.constant

    def to_json(self) -> dict:
        return {"variant": self.variant, "value": self.constant}

    def _key(self) -> tuple:
        return (self.variant, self.constant)


class DiameterPenalty(PenaltyFunction):
    """The constant penalty equal to the space diameter."""

    variant = "diameter"

    def value(self, x) -> float:
        self.space.validate_element(x)
        return self.space.diameter

    def to_json(self) -> dict:
        return {"variant": self.variant}

    def _key(self) -> tuple:
        return (self.variant,)


class EccentricityPenalty(PenaltyFunction):
    """M(x) = largest distance from x; the least admissible penalty."""

    variant = "eccentricity"

    def value(self, x) -> float:
        return self.space.eccentricity(x)

    def to_json(self) -> dict:
        return {"variant": self.variant}

    def _key(self) -> tuple:
        return (self.variant,)


class TablePenalty(PenaltyFunction):
    """Explicit per-element penalty values, for experimentation.

    Construction checks only structure (valid elements, finite nonnegative
    values).  Admissibility is NOT certified here; run
    :func:`validate_penalty` over the table's domain and reject on
    violations before trusting distances computed with it.
    """

    variant = "table"

    def __init__(self, space: Space, entries: Mapping[Element, float]
                 | Iterable[Sequence]):
        super().__init__(space)
        items = entries.items() if isinstance(entries, Mapping) else entries
        table = {}
        for element, value in items:
            key = space.validate_element(element)
            v = float(value)
            if not math.isfinite(v) or v < 0:
                raise ValidationError(
                    f"table penalty for {key!r} must be finite and >= 0, got {v}")
            if key in table and table[key] != v:
                raise ValidationError(f"conflicting table entries for {key!r}")
            table[key] = v
        if not table:
            raise ValidationError("table penalty needs at least one entry")
        self.table = table

    def value(self, x) -> float:
        key = self.space.validate_element(x)
        try:
            return self.table[key]
        except KeyError:
            raise ValidationError(f"no table entry for element {key!r}") from None

    def domain(self) -> tuple:
        """Elements the table defines a value for, in canonical order."""
        return tuple(sorted(self.table, key=self.space.sort_key))

    def to_json(self) -> dict:
        entries = [[element_to_json(k), v] for k, v in sorted(
            self.table.items(), key=lambda kv: self.space.sort_key(kv[0]))]
        return {"variant": self.variant, "entries": entries}

    def _key(self) -> tuple:
        return (self.variant, tuple(sorted(self.table.items(),
                                           key=lambda kv: self.space.sort_key(kv[0]))))


@dataclass(frozen=True)
class PenaltyViolation:
    """One failed admissibility inequality over a sampled pair."""

    check: str  # "distance_bound": d(x,y) > M(x); "growth_bound": M(x) > d(x,z)+M(z)
    x: Element
    other: Element
    distance: float
    penalty_x: float
    penalty_other: float

    def describe(self) -> str:
        if self.check == "distance_bound":
            return (f"d({self.x!r}, {self.other!r}) = {self.distance} "
                    f"exceeds M({self.x!r}) = {self.penalty_x}")
        return (f"M({self.x!r}) = {self.penalty_x} exceeds "
                f"d({self.x!r}, {self.other!r}) + M({self.other!r}) "
                f"= {self.distance + self.penalty_other}")

    def to_json(self) -> dict:
        return {"check": self.check,
                "x": element_to_json(self.x), "other": element_to_json(self.other),
                "distance": self.distance, "penalty_x": self.penalty_x,
                "penalty_other": self.penalty_other}


@dataclass(frozen=True)
class PenaltyValidityReport:
    """Outcome of an admissibility check over a sample of elements."""

    violations: tuple
    min_penalty: float
    sample_size: int

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"ok": self.ok,
                "sample_size": self.sample_size,
                "min_penalty": self.min_penalty,
                "violations": [v.to_json() for v in self.violations]}


def validate_penalty(space: Space, penalty: PenaltyFunction,
                     sample: Iterable) -> PenaltyValidityReport:
    """Check the two admissibility inequalities over a sample of elements.

    Every ordered pair drawn from the sample is checked both as (x, y) in
    d(x, y) <= M(x) and as (x, z) in M(x) <= d(x, z) + M(z); this covers
    exactly the constraints any ordered triple from the sample would,
    since each inequality involves two of the three points.  Returns the
    violations found (none means the sample certifies nothing was broken)
    together with the smallest sampled penalty value.
    """
    if penalty.space != space:
        raise ValidationError("penalty is bound to a different space")
    elements = []
    seen = set()
    for x in sample:
        key = space.validate_element(x)
        if key not in seen:
            seen.add(key)
            elements.append(key)
    if not elements:
        raise ValidationError("admissibility check needs a non-empty sample")

    values = {x: penalty.value(x) for x in elements}
    violations = []
    for x in elements:
        mx = values[x]
        for other in elements:
            dxo = space.distance(x, other)
            if dxo > mx + REAL_TOL:
                violations.append(PenaltyViolation(
                    "distance_bound", x, other, dxo, mx, values[other]))
            if mx > dxo + values[other] + REAL_TOL:
                violations.append(PenaltyViolation(
                    "growth_bound", x, other, dxo, mx, values[other]))
    return PenaltyValidityReport(tuple(violations),
                                 min(values.values()), len(elements))


def penalty_from_json(space: Space, obj: dict) -> PenaltyFunction:
    """Build a penalty function from its JSON descriptor.

    Structural defects raise ParseError; an admissibility failure (a
    constant below the diameter) stays a ValidationError, since the
    document is well-formed but the function breaks the metric contract.
    """
    if not isinstance(obj, dict) or "variant" not in obj:
        raise ParseError("penalty descriptor must be an object with 'variant'")
    variant = obj["variant"]
    if variant == "constant":
        _penalty_keys(obj, {"variant", "value"})
        if "value" not in obj:
            raise ParseError("constant penalty descriptor needs 'value'")
        value = obj["value"]
        if isinstance(value, bool) or not isinstance(value, (int, float)) \
                or not math.isfinite(value):
            raise ParseError(f"constant penalty value must be a finite number, "
                             f"got {value!r}")
        return ConstantPenalty(space, float(value))
    if variant == "diameter":
        _penalty_keys(obj, {"variant"})
        return DiameterPenalty(space)
    if variant == "eccentricity":
        _penalty_keys(obj, {"variant"})
        return EccentricityPenalty(space)
    if variant == "table":
        _penalty_keys(obj, {"variant", "entries"})
        if "entries" not in obj:
            raise ParseError("table penalty descriptor needs 'entries'")
        entries = obj["entries"]
        if not isinstance(entries, list) \
                or any(not isinstance(e, list) or len(e) != 2 for e in entries):
            raise ParseError("table penalty 'entries' must be a list of "
                             "[element, value] pairs")
        try:
            return TablePenalty(space, [(element_from_json(space, e), v)
                                        for e, v in entries])
        except ValidationError as exc:
            raise ParseError(f"bad table penalty: {exc}") from exc
    raise ParseError(f"unknown penalty variant {variant!r}")


def _penalty_keys(obj: dict, allowed: set):
    extra = set(obj) - allowed
    if extra:
        raise ParseError(f"unexpected keys in penalty descriptor: {sorted(extra)}")


def parse_penalty_spec(space: Space, text: str) -> PenaltyFunction:
    """Parse a command-line penalty spec: constant:<v> | diameter | eccentricity."""
    if text == "diameter":
        return DiameterPenalty(space)
    if text == "eccentricity":
        return EccentricityPenalty(space)
    if text.startswith("constant:"):
        raw = text.split(":", 1)[1]
        try:
            value = float(raw)
        except ValueError:
            raise ParseError(f"bad constant penalty value {raw!r}") from None
        return ConstantPenalty(space, value)
    raise ParseError(
        f"unknown penalty spec {text!r}; use constant:<v>, diameter or eccentricity")


