"""Brute-force reference implementations used by the tests.

Multisets here are plain tuples of counts over a fixed domain order; a
topology is a list of such tuples.  Nothing in this module imports the
package's operators, so agreement with it is a genuine cross-check.
"""

import itertools


def leq(a, b):
    return all(x <= y for x, y in zip(a, b))


def cup(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def cap(a, b):
    return tuple(min(x, y) for x, y in zip(a, b))


def minus(a, b):
    return tuple(max(x - y, 0) for x, y in zip(a, b))


def empty_like(m):
    return tuple(0 for _ in m)


def submsets(ground):
    return [tuple(v) for v in itertools.product(*(range(c + 1) for c in ground))]


def closed_sets(ground, opens):
    return [minus(ground, u) for u in opens]


def interior(ground, opens, a):
    out = empty_like(ground)
    for u in opens:
        if leq(u, a):
            out = cup(out, u)
    return out


def closure(ground, opens, a):
    out = tuple(ground)
    for k in closed_sets(ground, opens):
        if leq(a, k):
            out = cap(out, k)
    return out


def exterior(ground, opens, a):
    return interior(ground, opens, minus(ground, a))


def boundary(ground, opens, a):
    return cap(closure(ground, opens, a), closure(ground, opens, minus(ground, a)))


def is_limit_point(ground, opens, a, x, k):
    """Every open with count >= k at x meets a outside the single point k/x."""
    point = tuple(k if i == x else 0 for i in range(len(ground)))
    for u in opens:
        if u[x] >= k and not any(minus(cap(u, a), point)):
            return False
    return True


def limit_points(ground, opens, a):
    return [
        (x, k)
        for x in range(len(ground))
        for k in range(1, ground[x] + 1)
        if is_limit_point(ground, opens, a, x, k)
    ]


def is_topology(ground, family):
    fam = set(family)
    if empty_like(ground) not in fam or tuple(ground) not in fam:
        return False
    if not all(leq(u, ground) for u in fam):
        return False
    # every subcollection: unions and intersections
    members = sorted(fam)
    for r in range(2, len(members) + 1):
        for sub in itertools.combinations(members, r):
            u = sub[0]
            i = sub[0]
            for s in sub[1:]:
                u = cup(u, s)
                i = cap(i, s)
            if u not in fam or i not in fam:
                return False
    return True


def all_topologies(ground):
    """Filter every family of sub-M-sets containing ∅ and the ground."""
    subs = submsets(ground)
    e, g = empty_like(ground), tuple(ground)
    inner = [s for s in subs if s != e and s != g]
    found = []
    for r in range(len(inner) + 1):
        for chosen in itertools.combinations(inner, r):
            fam = {e, g, *chosen}
            if is_topology(ground, fam):
                found.append(frozenset(fam))
    return found


def theorem_holds(tid, ground, opens, a, b=None):
    """Definition-level truth value of one theorem instance."""
    ints = lambda s: interior(ground, opens, s)  # noqa: E731
    cls = lambda s: closure(ground, opens, s)  # noqa: E731
    ext = lambda s: exterior(ground, opens, s)  # noqa: E731
    bd = lambda s: boundary(ground, opens, s)  # noqa: E731
    comp = lambda s: minus(ground, s)  # noqa: E731
    e = empty_like(ground)
    openset = set(opens)
    closedset = set(closed_sets(ground, opens))
    if tid == "T3.8i":
        return ext(cup(a, b)) == cap(ext(a), ext(b))
    if tid == "T3.8ii":
        return leq(cup(ext(a), ext(b)), ext(cap(a, b)))
    if tid == "T3.9i":
        return comp(bd(a)) == cup(ints(a), ext(a))
    if tid == "T3.9ii":
        return cls(a) == cup(ints(a), bd(a))
    if tid == "T3.9iii":
        return bd(a) == minus(cls(a), ints(a))
    if tid == "T3.9iv":
        return ints(a) == minus(a, bd(a))
    if tid == "T3.10":
        return (a in openset) == (cap(a, bd(a)) == e)
    if tid == "T3.11":
        return (a in closedset) == leq(bd(a), a)
    if tid == "T3.12":
        return (a in openset and a in closedset) == (bd(a) == e)
    if tid == "T3.13i":
        return leq(bd(cup(a, b)), cup(bd(a), bd(b)))
    if tid == "T3.13ii":
        return leq(bd(cap(a, b)), cap(bd(a), bd(b)))
    if tid == "T3.14":
        return bd(bd(a)) in closedset
    if tid == "T3.15i":
        return leq(bd(bd(a)), bd(a))
    if tid == "T3.15ii":
        return bd(bd(bd(a))) == bd(bd(a))
    if tid == "T3.16":
        return bd(a) == cup(ints(bd(a)), bd(bd(a)))
    if tid == "T3.17":
        lim_ok = all(k <= a[x] for x, k in limit_points(ground, opens, a))
        return leq(bd(a), a) == lim_ok
    if tid == "T3.18":
        every_meets = all(any(cap(u, a)) for u in opens if any(u))
        return (ext(a) == e) == every_meets
    if tid == "R3.3":
        x = ext(a)
        return x in openset and leq(x, comp(a)) and all(
            leq(u, x) for u in opens if leq(u, comp(a))
        )
    if tid == "R3.6":
        x = bd(a)
        return x in closedset and leq(comp(a), x) and all(
            leq(x, k) for k in closedset if leq(comp(a), k)
        )
    if tid == "R3.7":
        return bd(a) == bd(comp(a))
    raise KeyError(tid)
