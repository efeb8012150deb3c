"""Exterior, boundary, neighborhoods and limit points of sub-M-sets."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MTopoError, NotASubmset
from .mset import MPoint, MSet, complement_in, intersect, is_submset, make_mset, point_in, subtract
from .topology import MTopology, closure, interior

__all__ = [
    "OperatorResult",
    "apply",
    "exterior",
    "boundary",
    "neighborhoods",
    "is_limit_point",
    "limit_points",
    "limit_hull",
    "contains_all_boundary_points",
    "contains_all_limit_points",
    "OPERATORS",
]


@dataclass(frozen=True)
class OperatorResult:
    input: MSet
    operator: str
    output: MSet


def exterior(topo: MTopology, a: MSet) -> MSet:
    """Interior of the M-complement of ``a``."""
    return interior(topo, complement_in(a, topo.ground))


def boundary(topo: MTopology, a: MSet) -> MSet:
    """``cl(a) ∩ cl(M ⊖ a)``."""
    return intersect(closure(topo, a), closure(topo, complement_in(a, topo.ground)))


def neighborhoods(topo: MTopology, p: MPoint) -> list[MSet]:
    """Opens whose count at ``p.element`` reaches ``p.multiplicity``."""
    point_in(topo.ground, p)
    return [u for u in topo.opens if u.count(p.element) >= p.multiplicity]


def is_limit_point(topo: MTopology, a: MSet, p: MPoint) -> bool:
    """Every neighborhood U of ``p`` has ``(U ∩ a) ⊖ {p}`` nonempty."""
    if not is_submset(a, topo.ground):
        raise NotASubmset(f"{a} is not a sub-M-set of the ground {topo.ground}")
    nbhds = neighborhoods(topo, p)
    single = p.as_mset(topo.space)
    return all(
        not subtract(intersect(u, a), single).is_empty() for u in nbhds
    )


def points(ground: MSet) -> list[MPoint]:
    """Every ``k/x`` with ``1 <= k <= C_M(x)``, domain order then ascending k."""
    return [
        MPoint(x, k) for x, c in zip(ground.space.domain, ground.counts) for k in range(1, c + 1)
    ]


def limit_points(topo: MTopology, a: MSet) -> list[MPoint]:
    return [p for p in points(topo.ground) if is_limit_point(topo, a, p)]


def limit_hull(topo: MTopology, a: MSet) -> MSet:
    """Per element, the largest multiplicity at which it is a limit point of ``a``."""
    best: dict[str, int] = {}
    for p in limit_points(topo, a):
        best[p.element] = max(best.get(p.element, 0), p.multiplicity)
    return make_mset(topo.space, best)


def contains_all_boundary_points(topo: MTopology, a: MSet) -> bool:
    return is_submset(boundary(topo, a), a)


def contains_all_limit_points(topo: MTopology, a: MSet) -> bool:
    return all(p.multiplicity <= a.count(p.element) for p in limit_points(topo, a))


OPERATORS = {
    "interior": interior,
    "closure": closure,
    "exterior": exterior,
    "boundary": boundary,
}


def apply(topo: MTopology, name: str, a: MSet) -> OperatorResult:
    try:
        fn = OPERATORS[name]
    except KeyError:
        raise MTopoError(f"unknown operator {name!r}; expected one of {sorted(OPERATORS)}") from None
    return OperatorResult(a, name, fn(topo, a))
