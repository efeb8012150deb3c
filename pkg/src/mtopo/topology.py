"""M-topologies: validation, open/closed classification, interior, closure,
subspaces and the basis predicate."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

import numpy as np

from . import kernels
from .errors import (
    MissingEmpty,
    MissingGround,
    NotASubmset,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
    NotSubmsetOfGround,
)
from .lattice import sublattice
from .mset import (
    MSet,
    canonical_key,
    complement_in,
    family_intersection,
    family_union,
    intersect,
    is_submset,
    support,
    union,
)

__all__ = [
    "MTopology",
    "build_topology",
    "generated_topology",
    "is_open",
    "is_closed",
    "is_clopen",
    "closed_family",
    "interior",
    "closure",
    "subspace",
    "is_basis",
]


def _canonical(family: Iterable[MSet]) -> tuple[MSet, ...]:
    return tuple(sorted(set(family), key=canonical_key))


@dataclass(frozen=True, eq=True)
class MTopology:
    """A ground M-set and its family of open sub-M-sets.

    Build through :func:`build_topology` or :func:`generated_topology`;
    the constructor itself does not validate.
    """

    ground: MSet
    opens: tuple[MSet, ...]
    _open_set: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_open_set", frozenset(self.opens))

    @property
    def space(self):
        return self.ground.space

    def __contains__(self, m: MSet) -> bool:
        return m in self._open_set

    @cached_property
    def closed(self) -> tuple[MSet, ...]:
        return _canonical(complement_in(u, self.ground) for u in self.opens)

    @cached_property
    def _closed_set(self) -> frozenset:
        return frozenset(self.closed)

    @cached_property
    def tables(self) -> "TopologyTables":
        return TopologyTables(self)

    def __str__(self):
        return "[" + ", ".join(str(u) for u in self.opens) + "]"


class TopologyTables:
    """Interior and closure of every sub-M-set, as lattice row indices."""

    def __init__(self, topo: MTopology):
        lat = sublattice(topo.ground)
        self.lattice = lat
        self.open_vecs = np.array([u.counts for u in topo.opens], dtype=np.int64).reshape(
            len(topo.opens), len(lat.ground_vec)
        )
        self.closed_vecs = np.array([k.counts for k in topo.closed], dtype=np.int64).reshape(
            len(topo.closed), len(lat.ground_vec)
        )
        self.is_open = np.zeros(len(lat), dtype=bool)
        self.is_open[lat.index(self.open_vecs)] = True
        self.is_closed = np.zeros(len(lat), dtype=bool)
        self.is_closed[lat.index(self.closed_vecs)] = True
        self.interior = lat.index(kernels.interior(lat.vectors, self.open_vecs))
        self.closure = lat.index(kernels.closure(lat.vectors, self.closed_vecs, lat.ground_vec))

    @cached_property
    def limit_hull(self) -> np.ndarray:
        lat = self.lattice
        return lat.index(kernels.limit_hull(lat.vectors, self.open_vecs, lat.ground_vec))

    @cached_property
    def disjoint_open_hull(self) -> np.ndarray:
        lat = self.lattice
        return lat.index(kernels.disjoint_open_hull(lat.vectors, self.open_vecs))


def _require_sub(a: MSet, ground: MSet):
    if not is_submset(a, ground):
        raise NotASubmset(f"{a} is not a sub-M-set of the ground {ground}")


def build_topology(ground: MSet, family: Iterable[MSet]) -> MTopology:
    """Validate ``family`` as an M-topology on ``ground``.

    Pairwise closure under union and intersection suffices on a finite
    family.  The first violation in canonical order is raised with its
    witness.
    """
    opens = _canonical(family)
    for u in opens:
        if not is_submset(u, ground):
            raise NotSubmsetOfGround(f"{u} is not a sub-M-set of the ground {ground}", (u,))
    members = set(opens)
    empty = ground.space.empty()
    if empty not in members:
        raise MissingEmpty("the empty M-set is not open", (empty,))
    if ground not in members:
        raise MissingGround(f"the ground {ground} is not open", (ground,))
    for a, b in itertools.combinations(opens, 2):
        j = union(a, b)
        if j not in members:
            raise NotClosedUnderUnion(f"{a} ∪ {b} = {j} is not open", (a, b, j))
        m = intersect(a, b)
        if m not in members:
            raise NotClosedUnderIntersection(f"{a} ∩ {b} = {m} is not open", (a, b, m))
    return MTopology(ground, opens)


def generated_topology(ground: MSet, family: Iterable[MSet]) -> MTopology:
    """Smallest M-topology containing ``family``: add ∅ and the ground, then
    close under pairwise union and intersection until nothing changes."""
    members = set(family)
    for u in members:
        _require_sub(u, ground)
    members |= {ground.space.empty(), ground}
    frontier = list(members)
    while frontier:
        fresh = []
        current = list(members)
        for a in frontier:
            for b in current:
                for c in (union(a, b), intersect(a, b)):
                    if c not in members:
                        members.add(c)
                        fresh.append(c)
        frontier = fresh
    return MTopology(ground, _canonical(members))


def is_open(topo: MTopology, a: MSet) -> bool:
    _require_sub(a, topo.ground)
    return a in topo


def is_closed(topo: MTopology, a: MSet) -> bool:
    _require_sub(a, topo.ground)
    return a in topo._closed_set


def is_clopen(topo: MTopology, a: MSet) -> bool:
    return is_open(topo, a) and is_closed(topo, a)


def closed_family(topo: MTopology) -> list[MSet]:
    return list(topo.closed)


def interior(topo: MTopology, a: MSet) -> MSet:
    """Union of all opens contained in ``a``."""
    _require_sub(a, topo.ground)
    return family_union((u for u in topo.opens if is_submset(u, a)), topo.space)


def closure(topo: MTopology, a: MSet) -> MSet:
    """Intersection of all closed M-sets containing ``a``."""
    _require_sub(a, topo.ground)
    return family_intersection((k for k in topo.closed if is_submset(a, k)), topo.ground)


def subspace(topo: MTopology, n: MSet) -> MTopology:
    _require_sub(n, topo.ground)
    return build_topology(n, (intersect(n, u) for u in topo.opens))


def is_basis(ground: MSet, basis: Iterable[MSet]) -> bool:
    """M-basis predicate.

    Cover: every supported element appears with positive count in some
    member.  Intersection: for members P, Q and every x with
    ``C_{P∩Q}(x) >= 1`` some member R ⊆ P ∩ Q has ``C_R(x) = C_{P∩Q}(x)``.
    The condition does not depend on which multiplicity ``m <= C_{P∩Q}(x)``
    is picked, so one check per element suffices.
    """
    basis = list(basis)
    for b in basis:
        _require_sub(b, ground)
    covered = set()
    for b in basis:
        covered |= support(b)
    if not support(ground) <= covered:
        return False
    for p in basis:
        for q in basis:
            pq = intersect(p, q)
            for i, c in enumerate(pq.counts):
                if c == 0:
                    continue
                if not any(is_submset(r, pq) and r.counts[i] == c for r in basis):
                    return False
    return True
