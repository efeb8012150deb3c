"""Counterexample search over enumerated or randomly drawn small spaces."""

from __future__ import annotations

import itertools
import string
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from .enumeration import EnumConfig, enumerate_topologies, make_rng, random_topology
from .errors import BudgetExceeded, MTopoError
from .mset import MSet, MSpace
from .theorems import DEFAULT_MAX_SUBMSETS, Verdict, check_space, get_theorem
from .topology import MTopology

__all__ = ["SearchConfig", "SearchReport", "iter_spaces", "search_counterexample"]


@dataclass(frozen=True)
class SearchConfig:
    max_domain: int = 2
    max_w: int = 2
    exhaustive: bool = True
    seed: int | None = None
    budget: int | None = None
    max_submsets: int = 16
    workers: int = 1
    whole_only: bool = False

    def __post_init__(self):
        if not 1 <= self.max_domain <= len(string.ascii_lowercase):
            raise MTopoError("max_domain must be between 1 and 26")
        if self.max_w < 1:
            raise MTopoError("max_w must be positive")
        if not self.exhaustive and self.seed is None:
            raise MTopoError("seeded search needs a seed")
        if self.workers < 1:
            raise MTopoError("workers must be positive")


@dataclass(frozen=True)
class SearchReport:
    verdict: Verdict
    spaces_checked: int

    def line(self) -> str:
        d = self.as_dict()
        head = f"{d.pop('theorem')} {d.pop('status')}"
        return " ".join([head] + [f"{k}={v}" for k, v in d.items()])

    def as_dict(self) -> dict:
        out = self.verdict.as_dict()
        if not self.verdict.holds:
            out["n"] = self.verdict.instances_checked
        out["spaces"] = self.spaces_checked
        return out


def _grounds(d: int, max_w: int, space: MSpace) -> list[MSet]:
    vecs = sorted(itertools.product(range(1, max_w + 1), repeat=d), key=lambda v: (sum(v), v))
    return [MSet(space, v) for v in vecs]


def iter_spaces(cfg: SearchConfig) -> Iterator[MTopology]:
    """Exhaustive mode: every topology on every fully supported ground with
    ``1..max_domain`` elements and counts in ``1..max_w``, in canonical order.
    Seeded mode: ``budget`` (default 100) random topologies from a PCG64 stream."""
    labels = string.ascii_lowercase
    if cfg.exhaustive:
        ecfg = EnumConfig(max_submsets=cfg.max_submsets)
        for d in range(1, cfg.max_domain + 1):
            space = MSpace(tuple(labels[:d]), cfg.max_w)
            for ground in _grounds(d, cfg.max_w, space):
                yield from enumerate_topologies(ground, ecfg)
        return
    rng = make_rng(cfg.seed)
    for _ in range(cfg.budget or 100):
        d = int(rng.integers(1, cfg.max_domain + 1))
        counts = tuple(int(c) for c in rng.integers(1, cfg.max_w + 1, size=d))
        size_hint = int(rng.integers(0, 5))
        sub_seed = int(rng.integers(0, 2**63 - 1))
        ground = MSet(MSpace(tuple(labels[:d]), cfg.max_w), counts)
        yield random_topology(ground, sub_seed, size_hint)


def _check(args) -> Verdict:
    topo, theorem, whole_only = args
    return check_space(topo, theorem, max_submsets=DEFAULT_MAX_SUBMSETS, whole_only=whole_only)


def search_counterexample(theorem, cfg: SearchConfig) -> SearchReport:
    """First failing space in iteration order, or a holds summary.

    Parallel workers only change scheduling: results are consumed in
    iteration order, so the reported witness does not depend on ``workers``.
    """
    th = get_theorem(theorem)
    spaces = iter_spaces(cfg)
    if cfg.exhaustive and cfg.budget is not None:
        spaces = itertools.islice(spaces, cfg.budget + 1)
    jobs = ((topo, th.id, cfg.whole_only) for topo in spaces)
    checked = 0
    instances = 0
    pool = ProcessPoolExecutor(cfg.workers) if cfg.workers > 1 else None
    try:
        results = pool.map(_check, jobs, chunksize=8) if pool else map(_check, jobs)
        for verdict in results:
            if cfg.exhaustive and cfg.budget is not None and checked == cfg.budget:
                raise BudgetExceeded(
                    f"search budget of {cfg.budget} spaces exhausted before the space was covered",
                    {"spaces": checked, "instances": instances},
                )
            checked += 1
            instances += verdict.instances_checked
            if not verdict.holds:
                failed = Verdict(th.id, "fails", instances, verdict.witness)
                return SearchReport(failed, checked)
    finally:
        if pool:
            pool.shutdown(wait=True, cancel_futures=True)
    return SearchReport(Verdict(th.id, "holds", instances), checked)
