"""Edge coverage maps with AFL-style hit-count buckets."""

from __future__ import annotations

from enum import Enum

import numpy as np

MAP_SIZE = 1 << 16


def _bucket_lut() -> np.ndarray:
    lut = np.zeros(256, dtype=np.uint8)
    lut[1] = 1
    lut[2] = 2
    lut[3] = 4
    lut[4:8] = 8
    lut[8:16] = 16
    lut[16:32] = 32
    lut[32:128] = 64
    lut[128:256] = 128
    return lut


BUCKET_LUT = _bucket_lut()


def nonzero_cells(cells: np.ndarray) -> np.ndarray:
    """Indices of nonzero counters (scans 64-bit words first; much faster than a byte scan)."""
    if len(cells) % 8:
        return np.flatnonzero(cells)
    words = (cells.view(np.uint64) != 0).nonzero()[0]
    if not len(words):
        return words
    rows, cols = (cells.reshape(-1, 8)[words] != 0).nonzero()
    return words[rows] * 8 + cols


class Novelty(str, Enum):
    NEW_EDGE = "new_edge"
    NEW_BUCKET = "new_bucket"
    NOTHING = "nothing"


class SizeMismatch(ValueError):
    pass


def check_size(size: int) -> int:
    if size < 1 or size & (size - 1):
        raise ValueError(f"map size must be a power of two, got {size}")
    return size


class CoverageMap:
    """Saturating 8-bit hit counters, one per hashed edge."""

    __slots__ = ("cells",)

    def __init__(self, size: int = MAP_SIZE, cells: np.ndarray | None = None):
        if cells is None:
            cells = np.zeros(check_size(size), dtype=np.uint8)
        else:
            check_size(len(cells))
        self.cells = cells

    @property
    def size(self) -> int:
        return len(self.cells)

    @classmethod
    def from_counts(cls, counts: dict[int, int], size: int = MAP_SIZE) -> "CoverageMap":
        cov = cls(size)
        if counts:
            idx = np.fromiter(counts.keys(), dtype=np.int64, count=len(counts))
            val = np.fromiter(counts.values(), dtype=np.int64, count=len(counts))
            cov.cells[idx & (size - 1)] = np.minimum(val, 255)
        return cov

    def clear(self) -> None:
        self.cells[:] = 0

    def edges(self) -> np.ndarray:
        return nonzero_cells(self.cells)

    def signature(self) -> bytes:
        """Bucketized (edge, class) pairs; equal signatures mean equal coverage classes."""
        idx = nonzero_cells(self.cells)
        return idx.astype("<u4").tobytes() + BUCKET_LUT[self.cells[idx]].tobytes()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CoverageMap) and np.array_equal(self.cells, other.cells)

    def __repr__(self) -> str:
        return f"CoverageMap(size={self.size}, edges={len(self.edges())})"


def record_edge(trace: CoverageMap, prev_loc: int, cur_loc: int) -> int:
    """Bump the counter for edge prev->cur and return the next prev_loc."""
    cells = trace.cells
    i = (prev_loc ^ cur_loc) & (len(cells) - 1)
    if cells[i] < 255:
        cells[i] += 1
    return cur_loc >> 1


def bucketize(count: int) -> int:
    """Count-class bit for a hit count (0 for no hits)."""
    if not 0 <= count <= 255:
        raise ValueError("hit counts are 8-bit")
    return int(BUCKET_LUT[count])


class GlobalCoverage:
    """Union of all bucket classes seen per edge over a campaign."""

    def __init__(self, size: int = MAP_SIZE):
        self.virgin = np.zeros(check_size(size), dtype=np.uint8)
        self.edges_seen = 0

    @property
    def size(self) -> int:
        return len(self.virgin)

    def has_new_bits(self, trace: CoverageMap, update: bool = True) -> Novelty:
        if trace.size != self.size:
            raise SizeMismatch(f"trace has {trace.size} cells, global map {self.size}")
        cells = trace.cells
        idx = nonzero_cells(cells)
        if not len(idx):
            return Novelty.NOTHING
        classes = BUCKET_LUT[cells[idx]]
        seen = self.virgin[idx]
        fresh = classes & ~seen
        if not fresh.any():
            return Novelty.NOTHING
        new_edges = int(np.count_nonzero(seen == 0))
        if update:
            self.virgin[idx] = seen | classes
            self.edges_seen += new_edges
        return Novelty.NEW_EDGE if new_edges else Novelty.NEW_BUCKET

    def copy(self) -> "GlobalCoverage":
        g = GlobalCoverage(self.size)
        g.virgin[:] = self.virgin
        g.edges_seen = self.edges_seen
        return g
