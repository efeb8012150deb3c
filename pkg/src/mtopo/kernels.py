"""Hot numeric kernels with a numba path and a pure-numpy path.

Both paths compute identical integer results.  numba is used when it can be
imported unless ``MTOPO_DISABLE_NUMBA`` is set to a truthy value; the
choice only affects speed.  ``BACKENDS`` exposes both implementations so the
test suite and the benchmark can compare them directly.

Conventions: ``subs`` is an ``(n, d)`` int64 matrix of count vectors,
``opens``/``closed`` are ``(k, d)`` matrices of family members.
"""

from __future__ import annotations

import os

import numpy as np

_FLAG = os.environ.get("MTOPO_DISABLE_NUMBA", "").strip().lower()
_DISABLED = _FLAG not in ("", "0", "false", "no")

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

HAVE_NUMBA = numba is not None
_CHUNK_ELEMS = 1 << 22


def _chunk_rows(k, d):
    return max(1, _CHUNK_ELEMS // max(1, k * max(d, 1)))


# ---------------------------------------------------------------- numpy path


def interior_np(subs, opens):
    """Row-wise max over the members of ``opens`` lying under each row."""
    n, d = subs.shape
    out = np.zeros((n, d), dtype=np.int64)
    step = _chunk_rows(len(opens), d)
    for lo in range(0, n, step):
        v = subs[lo : lo + step]
        fits = (opens[None, :, :] <= v[:, None, :]).all(axis=2)
        cand = np.where(fits[:, :, None], opens[None, :, :], 0)
        out[lo : lo + step] = cand.max(axis=1, initial=0)
    return out


def closure_np(subs, closed, ground):
    """Row-wise min over the members of ``closed`` lying over each row."""
    n, d = subs.shape
    out = np.empty((n, d), dtype=np.int64)
    step = _chunk_rows(len(closed), d)
    for lo in range(0, n, step):
        v = subs[lo : lo + step]
        fits = (closed[None, :, :] >= v[:, None, :]).all(axis=2)
        cand = np.where(fits[:, :, None], closed[None, :, :], ground[None, None, :])
        out[lo : lo + step] = cand.min(axis=1, initial=np.iinfo(np.int64).max)
    return out


def limit_hull_np(subs, opens, ground):
    """For each row A and element x: the largest k such that k/x is a limit
    point of A (0 when there is none).

    k/x is a limit point when every open U with ``U[x] >= k`` satisfies
    ``(U ∩ A) ⊖ {k/x} ≠ ∅``.
    """
    n, d = subs.shape
    out = np.zeros((n, d), dtype=np.int64)
    for x in range(d):
        others = np.array([y for y in range(d) if y != x], dtype=np.int64)
        for k in range(1, int(ground[x]) + 1):
            nbhd = opens[opens[:, x] >= k]
            if len(nbhd) == 0:
                out[:, x] = k
                continue
            step = _chunk_rows(len(nbhd), d)
            for lo in range(0, n, step):
                v = subs[lo : lo + step]
                meets_other = np.zeros((len(v), len(nbhd)), dtype=bool)
                if len(others):
                    meets_other = (
                        np.minimum(nbhd[None, :, others], v[:, None, others]) > 0
                    ).any(axis=2)
                beyond = np.minimum(nbhd[None, :, x], v[:, None, x]) > k
                limit = (meets_other | beyond).all(axis=1)
                block = out[lo : lo + step]
                block[limit, x] = k
    return out


def disjoint_open_hull_np(subs, opens):
    """Union of the nonempty opens that share no element with each row."""
    n, d = subs.shape
    out = np.zeros((n, d), dtype=np.int64)
    nonempty = opens[(opens > 0).any(axis=1)]
    if len(nonempty) == 0:
        return out
    step = _chunk_rows(len(nonempty), d)
    for lo in range(0, n, step):
        v = subs[lo : lo + step]
        meets = ((nonempty[None, :, :] > 0) & (v[:, None, :] > 0)).any(axis=2)
        cand = np.where(~meets[:, :, None], nonempty[None, :, :], 0)
        out[lo : lo + step] = cand.max(axis=1, initial=0)
    return out


def scan_families_np(join, meet, lo, hi):
    """Masks in ``[lo, hi)`` whose selected inner elements are closed under
    the lattice operations.

    Bit ``b`` of a mask selects lattice row ``b + 1``; rows ``0`` (∅) and
    ``n - 1`` (the ground) are always present.
    """
    n = join.shape[0]
    m = n - 2
    masks = np.arange(lo, hi, dtype=np.int64)
    if m <= 0:
        return masks
    bits = ((masks[:, None] >> np.arange(m, dtype=np.int64)) & 1).astype(bool)
    bits = np.concatenate([bits, np.ones((len(masks), 1), dtype=bool)], axis=1)
    ii, jj = np.triu_indices(m, k=1)
    if len(ii) == 0:
        return masks
    # map lattice rows to bit columns; ∅ and ground map to the always-true column
    col = np.full(n, m, dtype=np.int64)
    col[1 : n - 1] = np.arange(m)
    jn = col[join[ii + 1, jj + 1]]
    mt = col[meet[ii + 1, jj + 1]]
    ok = np.ones(len(masks), dtype=bool)
    step = max(1, _CHUNK_ELEMS // max(1, m))
    for p in range(0, len(ii), step):
        sl = slice(p, p + step)
        both = bits[:, ii[sl]] & bits[:, jj[sl]]
        closed = bits[:, jn[sl]] & bits[:, mt[sl]]
        ok &= ~(both & ~closed).any(axis=1)
    return masks[ok]


# ---------------------------------------------------------------- numba path

if HAVE_NUMBA:
    _jit = numba.njit(cache=True, nogil=True)

    @_jit
    def interior_nb(subs, opens):
        n, d = subs.shape
        k = opens.shape[0]
        out = np.zeros((n, d), dtype=np.int64)
        for i in range(n):
            for u in range(k):
                fits = True
                for x in range(d):
                    if opens[u, x] > subs[i, x]:
                        fits = False
                        break
                if fits:
                    for x in range(d):
                        if opens[u, x] > out[i, x]:
                            out[i, x] = opens[u, x]
        return out

    @_jit
    def closure_nb(subs, closed, ground):
        n, d = subs.shape
        k = closed.shape[0]
        out = np.empty((n, d), dtype=np.int64)
        for i in range(n):
            for x in range(d):
                out[i, x] = ground[x]
            for u in range(k):
                fits = True
                for x in range(d):
                    if closed[u, x] < subs[i, x]:
                        fits = False
                        break
                if fits:
                    for x in range(d):
                        if closed[u, x] < out[i, x]:
                            out[i, x] = closed[u, x]
        return out

    @_jit
    def limit_hull_nb(subs, opens, ground):
        n, d = subs.shape
        k_open = opens.shape[0]
        out = np.zeros((n, d), dtype=np.int64)
        for i in range(n):
            for x in range(d):
                for k in range(1, ground[x] + 1):
                    limit = True
                    for u in range(k_open):
                        if opens[u, x] < k:
                            continue
                        hit = min(opens[u, x], subs[i, x]) > k
                        if not hit:
                            for y in range(d):
                                if y != x and opens[u, y] > 0 and subs[i, y] > 0:
                                    hit = True
                                    break
                        if not hit:
                            limit = False
                            break
                    if limit:
                        out[i, x] = k
        return out

    @_jit
    def disjoint_open_hull_nb(subs, opens):
        n, d = subs.shape
        k = opens.shape[0]
        out = np.zeros((n, d), dtype=np.int64)
        for i in range(n):
            for u in range(k):
                nonempty = False
                meets = False
                for x in range(d):
                    if opens[u, x] > 0:
                        nonempty = True
                        if subs[i, x] > 0:
                            meets = True
                            break
                if nonempty and not meets:
                    for x in range(d):
                        if opens[u, x] > out[i, x]:
                            out[i, x] = opens[u, x]
        return out

    @_jit
    def _scan_families_nb(join, meet, lo, hi):
        n = join.shape[0]
        m = n - 2
        found = np.empty(hi - lo, dtype=np.int64)
        count = 0
        sel = np.empty(max(m, 1), dtype=np.int64)
        for mask in range(lo, hi):
            s = 0
            for b in range(m):
                if (mask >> b) & 1:
                    sel[s] = b + 1
                    s += 1
            ok = True
            for p in range(s):
                if not ok:
                    break
                for q in range(p + 1, s):
                    j = join[sel[p], sel[q]]
                    if 0 < j < n - 1 and not ((mask >> (j - 1)) & 1):
                        ok = False
                        break
                    t = meet[sel[p], sel[q]]
                    if 0 < t < n - 1 and not ((mask >> (t - 1)) & 1):
                        ok = False
                        break
            if ok:
                found[count] = mask
                count += 1
        return found[:count]

    def scan_families_nb(join, meet, lo, hi):
        return _scan_families_nb(
            np.ascontiguousarray(join, dtype=np.int64),
            np.ascontiguousarray(meet, dtype=np.int64),
            np.int64(lo),
            np.int64(hi),
        )


BACKENDS = {
    "numpy": {
        "interior": interior_np,
        "closure": closure_np,
        "limit_hull": limit_hull_np,
        "disjoint_open_hull": disjoint_open_hull_np,
        "scan_families": scan_families_np,
    }
}
if HAVE_NUMBA:
    BACKENDS["numba"] = {
        "interior": interior_nb,
        "closure": closure_nb,
        "limit_hull": limit_hull_nb,
        "disjoint_open_hull": disjoint_open_hull_nb,
        "scan_families": scan_families_nb,
    }

BACKEND = "numba" if HAVE_NUMBA and not _DISABLED else "numpy"
_active = BACKENDS[BACKEND]

interior = _active["interior"]
closure = _active["closure"]
limit_hull = _active["limit_hull"]
disjoint_open_hull = _active["disjoint_open_hull"]
scan_families = _active["scan_families"]
