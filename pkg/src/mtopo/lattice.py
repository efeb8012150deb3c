"""Array view of the sub-M-set lattice of a ground multiset.

Sub-M-sets of ``M`` are stored as rows of an integer matrix in canonical
order (cardinality, then count vector).  A mixed-radix code maps any count
vector back to its row, so union/intersection/complement become index
arithmetic.  This is what the numeric kernels and the bulk theorem checker
run on.
"""

from __future__ import annotations

import itertools
from functools import cached_property, lru_cache

import numpy as np

from .mset import MSet

INDEX_DTYPE = np.int64


class SubLattice:
    def __init__(self, ground: MSet):
        self.ground = ground
        self.space = ground.space
        g = np.asarray(ground.counts, dtype=np.int64)
        self.ground_vec = g
        radix = g + 1
        # strides for the mixed-radix code, last element fastest
        strides = np.ones(len(g), dtype=np.int64)
        for i in range(len(g) - 2, -1, -1):
            strides[i] = strides[i + 1] * radix[i + 1]
        self.strides = strides
        size = int(np.prod(radix)) if len(g) else 1
        vecs = np.array(
            list(itertools.product(*(range(int(r)) for r in radix))), dtype=np.int64
        ).reshape(size, len(g))
        order = np.lexsort(tuple(vecs[:, i] for i in range(len(g) - 1, -1, -1)) + (vecs.sum(axis=1),))
        self.vectors = np.ascontiguousarray(vecs[order])
        self.vectors.setflags(write=False)
        self.pos = np.empty(size, dtype=INDEX_DTYPE)
        self.pos[self.code(self.vectors)] = np.arange(size, dtype=INDEX_DTYPE)

    def __len__(self):
        return len(self.vectors)

    def code(self, vecs) -> np.ndarray:
        return np.asarray(vecs, dtype=np.int64) @ self.strides

    def index(self, vecs) -> np.ndarray:
        """Canonical row index of each count vector (vectors must lie under the ground)."""
        return self.pos[self.code(vecs)]

    def index_of(self, m: MSet) -> int:
        return int(self.pos[int(np.dot(m.counts, self.strides))]) if len(m.counts) else 0

    def mset(self, i) -> MSet:
        return MSet._raw(self.space, tuple(int(c) for c in self.vectors[int(i)]))

    def msets(self) -> list[MSet]:
        return [MSet._raw(self.space, tuple(map(int, row))) for row in self.vectors]

    @cached_property
    def complement(self) -> np.ndarray:
        return self.index(self.ground_vec[None, :] - self.vectors)

    @cached_property
    def whole_mask(self) -> np.ndarray:
        v = self.vectors
        return ((v == 0) | (v == self.ground_vec[None, :])).all(axis=1)

    def join_table(self) -> np.ndarray:
        v = self.vectors
        return self.index(np.maximum(v[:, None, :], v[None, :, :]))

    def meet_table(self) -> np.ndarray:
        v = self.vectors
        return self.index(np.minimum(v[:, None, :], v[None, :, :]))


@lru_cache(maxsize=64)
def sublattice(ground: MSet) -> SubLattice:
    return SubLattice(ground)
