"""Mechanical checks of the exterior/boundary theorems and remarks.

Every theorem has two evaluators:

* ``evaluate`` works on :class:`MSet` values through the operators module
  and produces both sides of the statement for reporting;
* ``batch`` works on lattice row indices and the precomputed interior and
  closure tables, returning a failure mask over many instances at once.

:func:`check_space` scans with ``batch`` and then re-derives the first
failure with ``evaluate``; the two must agree or an
:class:`InternalConsistencyError` is raised.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import ArityMismatch, InstanceBudgetExceeded, InternalConsistencyError, NotASubmset, UnknownTheorem
from .lattice import sublattice
from .mset import MSet, complement_in, family_union, intersect, is_submset, subtract, union
from .operators import boundary, exterior, limit_hull
from .topology import MTopology, closure, interior, is_closed, is_open

log = logging.getLogger(__name__)

__all__ = [
    "Theorem",
    "Outcome",
    "Witness",
    "Verdict",
    "THEOREMS",
    "THEOREM_IDS",
    "PROVABLE",
    "get_theorem",
    "normalize_id",
    "check_instance",
    "check_space",
    "verify_all",
    "DEFAULT_MAX_SUBMSETS",
]

DEFAULT_MAX_SUBMSETS = 20_000
_PAIR_BLOCK = 1 << 18

FORWARD = "→"
BACKWARD = "←"


@dataclass(frozen=True)
class Outcome:
    holds: bool
    lhs: MSet
    rhs: MSet
    direction: str | None = None
    part: str | None = None


@dataclass(frozen=True)
class Theorem:
    id: str
    arity: int
    statement: str
    evaluate: Callable
    batch: Callable
    provable: bool = False


@dataclass(frozen=True)
class Witness:
    topology: MTopology
    a: MSet
    b: MSet | None
    lhs: MSet
    rhs: MSet
    direction: str | None = None
    part: str | None = None


@dataclass(frozen=True)
class Verdict:
    theorem: str
    status: str
    instances_checked: int
    witness: Witness | None = None

    @property
    def holds(self) -> bool:
        return self.status == "holds"

    @property
    def suspect(self) -> bool:
        """A failure of an identity that is provable under count semantics."""
        return not self.holds and self.theorem in PROVABLE

    def as_dict(self) -> dict:
        out = {"theorem": self.theorem, "status": self.status.upper()}
        if self.holds:
            out["n"] = self.instances_checked
            return out
        w = self.witness
        out["A"] = str(w.a)
        if w.b is not None:
            out["B"] = str(w.b)
        out["lhs"] = str(w.lhs)
        out["rhs"] = str(w.rhs)
        if w.direction:
            out["direction"] = w.direction
        if w.part:
            out["part"] = w.part
        if self.suspect:
            out["suspect"] = "provable-identity"
        return out

    def line(self) -> str:
        d = self.as_dict()
        head = f"{d.pop('theorem')} {d.pop('status')}"
        return " ".join([head] + [f"{k}={v}" for k, v in d.items()])


# ------------------------------------------------------- definition level


def _c(t, a):
    return complement_in(a, t.ground)


def _empty(t):
    return t.space.empty()


def _eq(lhs, rhs):
    return Outcome(lhs == rhs, lhs, rhs)


def _le(lhs, rhs):
    return Outcome(is_submset(lhs, rhs), lhs, rhs)


def _iff(left, right, lhs, rhs):
    direction = None
    if left and not right:
        direction = FORWARD
    elif right and not left:
        direction = BACKWARD
    return Outcome(direction is None, lhs, rhs, direction)


def _ev_3_8i(t, a, b):
    return _eq(exterior(t, union(a, b)), intersect(exterior(t, a), exterior(t, b)))


def _ev_3_8ii(t, a, b):
    lhs = exterior(t, intersect(a, b))
    rhs = union(exterior(t, a), exterior(t, b))
    return Outcome(is_submset(rhs, lhs), lhs, rhs)


def _ev_3_9i(t, a, b=None):
    return _eq(_c(t, boundary(t, a)), union(interior(t, a), exterior(t, a)))


def _ev_3_9ii(t, a, b=None):
    return _eq(closure(t, a), union(interior(t, a), boundary(t, a)))


def _ev_3_9iii(t, a, b=None):
    return _eq(boundary(t, a), subtract(closure(t, a), interior(t, a)))


def _ev_3_9iv(t, a, b=None):
    return _eq(interior(t, a), subtract(a, boundary(t, a)))


def _ev_3_10(t, a, b=None):
    meet = intersect(a, boundary(t, a))
    return _iff(is_open(t, a), meet.is_empty(), meet, _empty(t))


def _ev_3_11(t, a, b=None):
    bd = boundary(t, a)
    return _iff(is_closed(t, a), is_submset(bd, a), bd, a)


def _ev_3_12(t, a, b=None):
    bd = boundary(t, a)
    return _iff(is_open(t, a) and is_closed(t, a), bd.is_empty(), bd, _empty(t))


def _ev_3_13i(t, a, b):
    return _le(boundary(t, union(a, b)), union(boundary(t, a), boundary(t, b)))


def _ev_3_13ii(t, a, b):
    return _le(boundary(t, intersect(a, b)), intersect(boundary(t, a), boundary(t, b)))


def _ev_3_14(t, a, b=None):
    bb = boundary(t, boundary(t, a))
    return _eq(closure(t, bb), bb)


def _ev_3_15i(t, a, b=None):
    bd = boundary(t, a)
    return _le(boundary(t, bd), bd)


def _ev_3_15ii(t, a, b=None):
    bb = boundary(t, boundary(t, a))
    return _eq(boundary(t, bb), bb)


def _ev_3_16(t, a, b=None):
    bd = boundary(t, a)
    return _eq(bd, union(interior(t, bd), boundary(t, bd)))


def _ev_3_17(t, a, b=None):
    bd = boundary(t, a)
    hull = limit_hull(t, a)
    return _iff(is_submset(bd, a), is_submset(hull, a), bd, hull)


def _ev_3_18(t, a, b=None):
    ext = exterior(t, a)
    missing = [u for u in t.opens if not u.is_empty() and intersect(u, a).is_empty()]
    return _iff(ext.is_empty(), not missing, ext, family_union(missing, t.space))


def _ev_r3_3(t, a, b=None):
    ext = exterior(t, a)
    ac = _c(t, a)
    largest = family_union([u for u in t.opens if is_submset(u, ac)], t.space)
    part = None
    if not is_open(t, ext):
        part = "open"
    elif not is_submset(ext, ac):
        part = "inside-complement"
    elif not is_submset(largest, ext):
        part = "largest"
    return Outcome(part is None, ext, largest, part=part)


def _ev_r3_6(t, a, b=None):
    bd = boundary(t, a)
    ac = _c(t, a)
    smallest = closure(t, ac)
    part = None
    if not is_closed(t, bd):
        part = "closed"
    elif not is_submset(ac, bd):
        part = "contains-complement"
    elif not all(is_submset(bd, k) for k in t.closed if is_submset(ac, k)):
        part = "smallest"
    return Outcome(part is None, bd, smallest, part=part)


def _ev_r3_7(t, a, b=None):
    return _eq(boundary(t, a), boundary(t, _c(t, a)))


# ---------------------------------------------------------- table level


class _Ops:
    """Index arithmetic on one topology's lattice tables."""

    def __init__(self, topo: MTopology):
        tb = topo.tables
        self.tb = tb
        self.lat = tb.lattice
        self.v = self.lat.vectors
        self.open = tb.is_open
        self.closed = tb.is_closed

    def int_(self, i):
        return self.tb.interior[i]

    def cl(self, i):
        return self.tb.closure[i]

    def comp(self, i):
        return self.lat.complement[i]

    def ext(self, i):
        return self.int_(self.comp(i))

    def bd(self, i):
        return self.meet(self.cl(i), self.cl(self.comp(i)))

    def join(self, i, j):
        return self.lat.index(np.maximum(self.v[i], self.v[j]))

    def meet(self, i, j):
        return self.lat.index(np.minimum(self.v[i], self.v[j]))

    def sub(self, i, j):
        return self.lat.index(np.maximum(self.v[i] - self.v[j], 0))

    def le(self, i, j):
        return (self.v[i] <= self.v[j]).all(axis=1)


def _bt_3_8i(o, a, b):
    return o.ext(o.join(a, b)) != o.meet(o.ext(a), o.ext(b))


def _bt_3_8ii(o, a, b):
    return ~o.le(o.join(o.ext(a), o.ext(b)), o.ext(o.meet(a, b)))


def _bt_3_9i(o, a, b=None):
    return o.comp(o.bd(a)) != o.join(o.int_(a), o.ext(a))


def _bt_3_9ii(o, a, b=None):
    return o.cl(a) != o.join(o.int_(a), o.bd(a))


def _bt_3_9iii(o, a, b=None):
    return o.bd(a) != o.sub(o.cl(a), o.int_(a))


def _bt_3_9iv(o, a, b=None):
    return o.int_(a) != o.sub(a, o.bd(a))


def _bt_3_10(o, a, b=None):
    return o.open[a] != (o.meet(a, o.bd(a)) == 0)


def _bt_3_11(o, a, b=None):
    return o.closed[a] != o.le(o.bd(a), a)


def _bt_3_12(o, a, b=None):
    return (o.open[a] & o.closed[a]) != (o.bd(a) == 0)


def _bt_3_13i(o, a, b):
    return ~o.le(o.bd(o.join(a, b)), o.join(o.bd(a), o.bd(b)))


def _bt_3_13ii(o, a, b):
    return ~o.le(o.bd(o.meet(a, b)), o.meet(o.bd(a), o.bd(b)))


def _bt_3_14(o, a, b=None):
    return ~o.closed[o.bd(o.bd(a))]


def _bt_3_15i(o, a, b=None):
    bd = o.bd(a)
    return ~o.le(o.bd(bd), bd)


def _bt_3_15ii(o, a, b=None):
    bb = o.bd(o.bd(a))
    return o.bd(bb) != bb


def _bt_3_16(o, a, b=None):
    bd = o.bd(a)
    return bd != o.join(o.int_(bd), o.bd(bd))


def _bt_3_17(o, a, b=None):
    return o.le(o.bd(a), a) != o.le(o.tb.limit_hull[a], a)


def _bt_3_18(o, a, b=None):
    return (o.ext(a) == 0) != (o.tb.disjoint_open_hull[a] == 0)


def _bt_r3_3(o, a, b=None):
    e = o.ext(a)
    return ~(o.open[e] & o.le(e, o.comp(a)))


def _bt_r3_6(o, a, b=None):
    bd = o.bd(a)
    ac = o.comp(a)
    return ~(o.closed[bd] & o.le(ac, bd) & o.le(bd, o.cl(ac)))


def _bt_r3_7(o, a, b=None):
    return o.bd(a) != o.bd(o.comp(a))


THEOREMS: dict[str, Theorem] = {
    t.id: t
    for t in [
        Theorem("T3.8i", 2, "ext(A∪B) = ext(A) ∩ ext(B)", _ev_3_8i, _bt_3_8i, True),
        Theorem("T3.8ii", 2, "ext(A∩B) ⊇ ext(A) ∪ ext(B)", _ev_3_8ii, _bt_3_8ii, True),
        Theorem("T3.9i", 1, "M ⊖ bd(A) = int(A) ∪ ext(A)", _ev_3_9i, _bt_3_9i, True),
        Theorem("T3.9ii", 1, "cl(A) = int(A) ∪ bd(A)", _ev_3_9ii, _bt_3_9ii),
        Theorem("T3.9iii", 1, "bd(A) = cl(A) ⊖ int(A)", _ev_3_9iii, _bt_3_9iii),
        Theorem("T3.9iv", 1, "int(A) = A ⊖ bd(A)", _ev_3_9iv, _bt_3_9iv),
        Theorem("T3.10", 1, "A open ⇔ A ∩ bd(A) = ∅", _ev_3_10, _bt_3_10),
        Theorem("T3.11", 1, "A closed ⇔ bd(A) ⊆ A", _ev_3_11, _bt_3_11),
        Theorem("T3.12", 1, "A clopen ⇔ bd(A) = ∅", _ev_3_12, _bt_3_12),
        Theorem("T3.13i", 2, "bd(A∪B) ⊆ bd(A) ∪ bd(B)", _ev_3_13i, _bt_3_13i, True),
        Theorem("T3.13ii", 2, "bd(A∩B) ⊆ bd(A) ∩ bd(B)", _ev_3_13ii, _bt_3_13ii),
        Theorem("T3.14", 1, "bd(bd(A)) is closed", _ev_3_14, _bt_3_14, True),
        Theorem("T3.15i", 1, "bd(bd(A)) ⊆ bd(A)", _ev_3_15i, _bt_3_15i, True),
        Theorem("T3.15ii", 1, "bd(bd(bd(A))) = bd(bd(A))", _ev_3_15ii, _bt_3_15ii),
        Theorem("T3.16", 1, "bd(A) = int(bd(A)) ∪ bd(bd(A))", _ev_3_16, _bt_3_16),
        Theorem("T3.17", 1, "bd(A) ⊆ A ⇔ A contains its limit points", _ev_3_17, _bt_3_17),
        Theorem("T3.18", 1, "ext(A) = ∅ ⇔ every nonempty open meets A", _ev_3_18, _bt_3_18),
        Theorem("R3.3", 1, "ext(A) is the largest open sub-M-set of A^c", _ev_r3_3, _bt_r3_3, True),
        Theorem("R3.6", 1, "bd(A) is the smallest closed sub-M-set containing A^c", _ev_r3_6, _bt_r3_6),
        Theorem("R3.7", 1, "bd(A) = bd(A^c)", _ev_r3_7, _bt_r3_7, True),
    ]
}
THEOREM_IDS = tuple(THEOREMS)
PROVABLE = frozenset(t.id for t in THEOREMS.values() if t.provable)


def normalize_id(text: str) -> str:
    """Accept ``3.8i``, ``T3.8i``, ``t3.8I``, ``R3.3``, ``r3.3``."""
    s = text.strip()
    if s[:1] in ("T", "t"):
        s = s[1:]
    if s[:1] in ("R", "r"):
        cand = "R" + s[1:]
    else:
        cand = "T" + s.lower()
    if cand not in THEOREMS:
        raise UnknownTheorem(f"unknown theorem id {text!r}; expected one of {', '.join(THEOREM_IDS)}")
    return cand


def get_theorem(theorem) -> Theorem:
    if isinstance(theorem, Theorem):
        return theorem
    return THEOREMS[normalize_id(theorem)]


def _evaluate(topo, th, a, b):
    for m in (a, b):
        if m is not None and not is_submset(m, topo.ground):
            raise NotASubmset(f"{m} is not a sub-M-set of the ground {topo.ground}")
    return th.evaluate(topo, a, b)


def check_instance(topo: MTopology, theorem, a: MSet, b: MSet | None = None) -> Verdict:
    """Evaluate one binding of a theorem at the definition level."""
    th = get_theorem(theorem)
    if (b is None) != (th.arity == 1):
        raise ArityMismatch(f"{th.id} binds {th.arity} sub-M-set(s)")
    out = _evaluate(topo, th, a, b)
    if out.holds:
        return Verdict(th.id, "holds", 1)
    return Verdict(th.id, "fails", 1, Witness(topo, a, b, out.lhs, out.rhs, out.direction, out.part))


def check_space(
    topo: MTopology,
    theorem,
    *,
    max_submsets: int = DEFAULT_MAX_SUBMSETS,
    whole_only: bool = False,
) -> Verdict:
    """Quantify a theorem over every sub-M-set (or pair) of the ground.

    Instances are visited in canonical order; the first failure is
    returned as the witness.  ``whole_only`` restricts the bindings to
    whole sub-M-sets.
    """
    th = get_theorem(theorem)
    lat = sublattice(topo.ground)
    if len(lat) > max_submsets:
        raise InstanceBudgetExceeded(
            f"{topo.ground} has {len(lat)} sub-M-sets, above the cap of {max_submsets}"
        )
    ops = _Ops(topo)
    dom = np.flatnonzero(lat.whole_mask) if whole_only else np.arange(len(lat))
    first = None
    if th.arity == 1:
        bad = np.flatnonzero(th.batch(ops, dom, None))
        if len(bad):
            first = (int(bad[0]) + 1, int(dom[bad[0]]), None)
        total = len(dom)
    else:
        total = len(dom) * len(dom)
        rows = max(1, _PAIR_BLOCK // max(1, len(dom)))
        for lo in range(0, len(dom), rows):
            block = dom[lo : lo + rows]
            ia = np.repeat(block, len(dom))
            ib = np.tile(dom, len(block))
            bad = np.flatnonzero(th.batch(ops, ia, ib))
            if len(bad):
                k = int(bad[0])
                first = (lo * len(dom) + k + 1, int(ia[k]), int(ib[k]))
                break
    if first is None:
        return Verdict(th.id, "holds", total)
    checked, ia, ib = first
    a = lat.mset(ia)
    b = lat.mset(ib) if ib is not None else None
    out = _evaluate(topo, th, a, b)
    if out.holds:
        raise InternalConsistencyError(
            f"{th.id}: table check flags A={a} B={b} but definition-level evaluation holds"
        )
    verdict = Verdict(th.id, "fails", checked, Witness(topo, a, b, out.lhs, out.rhs, out.direction, out.part))
    if verdict.suspect:
        log.error("%s failed although it is provable; implementation bug: %s", th.id, verdict.line())
    return verdict


def verify_all(topo: MTopology, **kwargs) -> list[Verdict]:
    """One verdict per theorem id, in canonical id order."""
    return [check_space(topo, tid, **kwargs) for tid in THEOREM_IDS]
