"""Enumeration of sub-M-sets, power M-set variants and M-topologies."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import kernels
from .errors import BudgetExceeded, CapExceeded, MTopoError
from .lattice import sublattice
from .mset import MSet, canonical_key
from .topology import MTopology, generated_topology

__all__ = [
    "EnumConfig",
    "enumerate_submsets",
    "enumerate_whole_submsets",
    "enumerate_full_submsets",
    "enumerate_topologies",
    "count_topologies",
    "random_topology",
    "make_rng",
]

_BLOCK = 1 << 14


@dataclass(frozen=True)
class EnumConfig:
    max_submsets: int = 12
    seed: int | None = None
    budget: int | None = None

    def __post_init__(self):
        if self.max_submsets < 1:
            raise MTopoError("max_submsets must be positive")
        if self.budget is not None and self.budget < 1:
            raise MTopoError("budget must be positive")


def enumerate_submsets(ground: MSet) -> list[MSet]:
    """All count vectors pointwise below ``ground``, in canonical order."""
    return sublattice(ground).msets()


def enumerate_whole_submsets(ground: MSet) -> list[MSet]:
    """One member per subset of the support, carrying the ground's counts there."""
    idx = [i for i, c in enumerate(ground.counts) if c]
    out = []
    for r in range(len(idx) + 1):
        for chosen in itertools.combinations(idx, r):
            vec = [0] * len(ground.counts)
            for i in chosen:
                vec[i] = ground.counts[i]
            out.append(MSet._raw(ground.space, tuple(vec)))
    return sorted(out, key=canonical_key)


def enumerate_full_submsets(ground: MSet) -> list[MSet]:
    """Sub-M-sets whose support equals the ground's support."""
    ranges = [range(1, c + 1) if c else range(0, 1) for c in ground.counts]
    out = [MSet._raw(ground.space, tuple(v)) for v in itertools.product(*ranges)]
    return sorted(out, key=canonical_key)


def enumerate_topologies(ground: MSet, cfg: EnumConfig | None = None) -> Iterator[MTopology]:
    """Lazily yield every M-topology on ``ground``.

    Candidate families are bitmasks over the sub-M-sets other than ∅ and the
    ground, scanned in increasing mask order; a mask survives when its
    members are pairwise closed under union and intersection.
    """
    cfg = cfg or EnumConfig()
    lat = sublattice(ground)
    n = len(lat)
    if n > cfg.max_submsets:
        raise CapExceeded(
            f"{ground} has {n} sub-M-sets, above the enumeration cap of {cfg.max_submsets}"
        )
    subs = lat.msets()
    if n == 1:
        yield MTopology(ground, (ground,))
        return
    m = n - 2
    join, meet = lat.join_table(), lat.meet_table()
    total = 1 << m
    examined = 0
    for lo in range(0, total, _BLOCK):
        hi = min(total, lo + _BLOCK)
        if cfg.budget is not None and examined + (hi - lo) > cfg.budget:
            raise BudgetExceeded(
                f"topology enumeration stopped after {examined} of {total} families",
                {"families": examined, "total": total},
            )
        for mask in kernels.scan_families(join, meet, lo, hi):
            mask = int(mask)
            opens = [subs[0]] + [subs[b + 1] for b in range(m) if mask >> b & 1] + [subs[-1]]
            yield MTopology(ground, tuple(sorted(opens, key=canonical_key)))
        examined += hi - lo


def count_topologies(ground: MSet, cfg: EnumConfig | None = None) -> int:
    return sum(1 for _ in enumerate_topologies(ground, cfg))


def make_rng(seed: int) -> np.random.Generator:
    """PCG64 stream fully determined by ``seed``."""
    return np.random.Generator(np.random.PCG64(seed))


def random_topology(ground: MSet, seed: int, size_hint: int) -> MTopology:
    """Topology generated by ``size_hint`` sub-M-sets drawn uniformly with
    a PCG64 generator seeded by ``seed``."""
    if size_hint < 0:
        raise MTopoError("size_hint must be non-negative")
    rng = make_rng(seed)
    upper = np.asarray(ground.counts, dtype=np.int64) + 1
    family = []
    for _ in range(size_hint):
        vec = rng.integers(0, upper) if len(upper) else np.zeros(0, dtype=np.int64)
        family.append(MSet._raw(ground.space, tuple(int(c) for c in vec)))
    return generated_topology(ground, family)
