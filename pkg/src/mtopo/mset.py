"""Multisets over a bounded finite universe ``[X]^w``.

An :class:`MSet` is a count vector aligned with the domain order of its
:class:`MSpace`.  Every operation is pure and returns a new value.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import (
    CountExceedsBound,
    EmptyFamilyWithoutAmbient,
    MTopoError,
    NegativeCount,
    NotASubmset,
    PointNotInGround,
    SpaceMismatch,
    UnknownElement,
)

__all__ = [
    "MSpace",
    "MSet",
    "MPoint",
    "make_mset",
    "equals",
    "is_submset",
    "union",
    "intersect",
    "add",
    "subtract",
    "complement_in",
    "family_union",
    "family_intersection",
    "support",
    "is_whole_submset",
    "is_partial_whole_submset",
    "is_full_submset",
    "is_full_submset_literal",
    "parse_counts",
    "parse_mset",
    "canonical_key",
]


@dataclass(frozen=True)
class MSpace:
    """The M-set space: an ordered domain and a multiplicity cap ``w``."""

    domain: tuple[str, ...]
    w: int

    def __post_init__(self):
        object.__setattr__(self, "domain", tuple(self.domain))
        if len(set(self.domain)) != len(self.domain):
            raise MTopoError(f"domain labels must be distinct: {self.domain!r}")
        for label in self.domain:
            if not isinstance(label, str) or not label:
                raise MTopoError(f"domain labels must be non-empty strings, got {label!r}")
        if isinstance(self.w, bool) or not isinstance(self.w, int) or self.w < 1:
            raise MTopoError(f"multiplicity cap w must be a positive integer, got {self.w!r}")

    @cached_property
    def index(self) -> dict[str, int]:
        return {x: i for i, x in enumerate(self.domain)}

    def __len__(self):
        return len(self.domain)

    def empty(self) -> MSet:
        return MSet._raw(self, (0,) * len(self.domain))


class MSet:
    """An immutable multiset drawn from an :class:`MSpace`.

    Zero counts are semantically present but never rendered.  Python
    operators mirror the multiset algebra: ``|`` union, ``&`` intersection,
    ``+`` capped addition, ``-`` truncated subtraction, ``<=`` sub-M-set.
    """

    __slots__ = ("space", "counts", "_hash")

    def __init__(self, space: MSpace, counts: Sequence[int]):
        counts = tuple(int(c) for c in counts)
        if len(counts) != len(space.domain):
            raise MTopoError(
                f"count vector has length {len(counts)}, domain has {len(space.domain)}"
            )
        for x, c in zip(space.domain, counts):
            _check_count(space, x, c)
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "counts", counts)
        object.__setattr__(self, "_hash", hash((space, counts)))

    @classmethod
    def _raw(cls, space, counts):
        # trusted path: counts already validated
        obj = object.__new__(cls)
        object.__setattr__(obj, "space", space)
        object.__setattr__(obj, "counts", counts)
        object.__setattr__(obj, "_hash", hash((space, counts)))
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("MSet is immutable")

    def __reduce__(self):
        return (MSet, (self.space, self.counts))

    def count(self, x: str) -> int:
        """C_M(x); zero for domain elements not in the support."""
        try:
            return self.counts[self.space.index[x]]
        except KeyError:
            raise UnknownElement(f"{x!r} is not in the domain {self.space.domain}") from None

    def as_dict(self) -> dict[str, int]:
        return {x: c for x, c in zip(self.space.domain, self.counts) if c}

    def is_empty(self) -> bool:
        return not any(self.counts)

    def cardinality(self) -> int:
        return sum(self.counts)

    def __eq__(self, other):
        if not isinstance(other, MSet):
            return NotImplemented
        return self.space == other.space and self.counts == other.counts

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"MSet({self})"

    def __str__(self):
        return "{" + ",".join(f"{c}/{x}" for x, c in zip(self.space.domain, self.counts) if c) + "}"

    def __le__(self, other):
        return is_submset(self, other)

    def __ge__(self, other):
        return is_submset(other, self)

    def __or__(self, other):
        return union(self, other)

    def __and__(self, other):
        return intersect(self, other)

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return subtract(self, other)


@dataclass(frozen=True, order=True)
class MPoint:
    """A point ``k/x``: element ``x`` taken with multiplicity ``k >= 1``."""

    element: str
    multiplicity: int

    def __post_init__(self):
        if self.multiplicity < 1:
            raise PointNotInGround(f"point multiplicity must be >= 1, got {self.multiplicity}")

    def __str__(self):
        return f"{self.multiplicity}/{self.element}"

    def as_mset(self, space: MSpace) -> MSet:
        return make_mset(space, {self.element: self.multiplicity})


def _check_count(space, x, c):
    if c < 0:
        raise NegativeCount(f"count of {x!r} is negative ({c})")
    if c > space.w:
        raise CountExceedsBound(f"count of {x!r} is {c}, exceeding w={space.w}")


def make_mset(space: MSpace, counts: Mapping[str, int] | None = None) -> MSet:
    """Build a canonical MSet from an element -> count mapping."""
    vec = [0] * len(space.domain)
    for x, c in (counts or {}).items():
        if x not in space.index:
            raise UnknownElement(f"{x!r} is not in the domain {space.domain}")
        if isinstance(c, bool) or int(c) != c:
            raise MTopoError(f"count of {x!r} must be a whole number, got {c!r}")
        c = int(c)
        _check_count(space, x, c)
        vec[space.index[x]] = c
    return MSet._raw(space, tuple(vec))


def _same_space(a: MSet, b: MSet):
    if a.space is not b.space and a.space != b.space:
        raise SpaceMismatch(f"multisets drawn from different spaces: {a.space} vs {b.space}")


def equals(a: MSet, b: MSet) -> bool:
    _same_space(a, b)
    return a.counts == b.counts


def is_submset(a: MSet, b: MSet) -> bool:
    """Pointwise ``C_A(x) <= C_B(x)``."""
    _same_space(a, b)
    return all(p <= q for p, q in zip(a.counts, b.counts))


def union(a: MSet, b: MSet) -> MSet:
    _same_space(a, b)
    return MSet._raw(a.space, tuple(map(max, a.counts, b.counts)))


def intersect(a: MSet, b: MSet) -> MSet:
    _same_space(a, b)
    return MSet._raw(a.space, tuple(map(min, a.counts, b.counts)))


def add(a: MSet, b: MSet) -> MSet:
    """Addition capped at the space bound ``w``."""
    _same_space(a, b)
    w = a.space.w
    return MSet._raw(a.space, tuple(min(w, p + q) for p, q in zip(a.counts, b.counts)))


def subtract(a: MSet, b: MSet) -> MSet:
    """Truncated difference ``max(C_A(x) - C_B(x), 0)``."""
    _same_space(a, b)
    return MSet._raw(a.space, tuple(p - q if p > q else 0 for p, q in zip(a.counts, b.counts)))


def complement_in(a: MSet, ground: MSet) -> MSet:
    """M-complement ``ground ⊖ a``; ``a`` must be a sub-M-set of ``ground``."""
    if not is_submset(a, ground):
        raise NotASubmset(f"{a} is not a sub-M-set of {ground}")
    return MSet._raw(a.space, tuple(q - p for p, q in zip(a.counts, ground.counts)))


def _common_space(family):
    space = family[0].space
    for m in family[1:]:
        _same_space(family[0], m)
    return space


def family_union(family: Iterable[MSet], space: MSpace | None = None) -> MSet:
    """Pointwise max over the family.  The empty family yields the empty M-set,
    which needs ``space`` to be known."""
    family = list(family)
    if not family:
        if space is None:
            raise EmptyFamilyWithoutAmbient("union of an empty family needs a space")
        return space.empty()
    space = _common_space(family)
    return MSet._raw(space, tuple(map(max, zip(*(m.counts for m in family)))))


def family_intersection(family: Iterable[MSet], ambient: MSet | None = None) -> MSet:
    """Pointwise min over the family.  The empty family yields ``ambient``."""
    family = list(family)
    if not family:
        if ambient is None:
            raise EmptyFamilyWithoutAmbient(
                "intersection of an empty family requires the ambient M-set"
            )
        return ambient
    _common_space(family)
    if ambient is not None:
        _same_space(family[0], ambient)
    return MSet._raw(family[0].space, tuple(map(min, zip(*(m.counts for m in family)))))


def support(a: MSet) -> frozenset[str]:
    return frozenset(x for x, c in zip(a.space.domain, a.counts) if c > 0)


def _require_sub(n, m):
    if not is_submset(n, m):
        raise NotASubmset(f"{n} is not a sub-M-set of {m}")


def is_whole_submset(n: MSet, m: MSet) -> bool:
    """Counts agree with ``m`` at every element of ``support(n)``.  ∅ is whole."""
    _require_sub(n, m)
    return all(p == q for p, q in zip(n.counts, m.counts) if p)


def is_partial_whole_submset(n: MSet, m: MSet) -> bool:
    """Counts agree with ``m`` at some element of ``support(n)``."""
    _require_sub(n, m)
    return any(p == q for p, q in zip(n.counts, m.counts) if p)


def is_full_submset(n: MSet, m: MSet) -> bool:
    """``support(n) == support(m)``.

    The literally printed condition (``C_N(x) <= C_M(x)`` on the support of
    ``n``) holds for every sub-M-set, see :func:`is_full_submset_literal`;
    this predicate is the usual reading that makes the power full M-set
    a proper sub-family.
    """
    _require_sub(n, m)
    return support(n) == support(m)


def is_full_submset_literal(n: MSet, m: MSet) -> bool:
    """The literal condition; vacuously true for any sub-M-set."""
    _require_sub(n, m)
    return all(p <= q for p, q in zip(n.counts, m.counts) if p)


def canonical_key(a: MSet):
    """Sort key: total cardinality first, then the count vector."""
    return (sum(a.counts), a.counts)


_TOKEN = re.compile(r"^\s*(\d+)\s*/\s*(\S+?)\s*$")


def parse_counts(text: str) -> dict[str, int]:
    """Parse ``{k1/x1, k2/x2}`` into an ordered label -> count dict."""
    body = text.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise MTopoError(f"multiset literal must be wrapped in braces: {text!r}")
    body = body[1:-1].strip()
    out: dict[str, int] = {}
    if not body:
        return out
    for token in body.split(","):
        match = _TOKEN.match(token)
        if not match:
            raise MTopoError(f"bad multiset token {token.strip()!r} in {text!r}")
        k, x = int(match.group(1)), match.group(2)
        if x in out:
            raise MTopoError(f"element {x!r} repeated in {text!r}")
        out[x] = k
    return out


def parse_mset(text: str, space: MSpace) -> MSet:
    return make_mset(space, parse_counts(text))


def point_in(ground: MSet, p: MPoint) -> None:
    """Raise unless ``p`` is a point of ``ground``."""
    if p.element not in ground.space.index:
        raise PointNotInGround(f"{p} names an element outside the domain")
    if p.multiplicity > ground.count(p.element):
        raise PointNotInGround(f"{p} exceeds the ground count {ground.count(p.element)}")
