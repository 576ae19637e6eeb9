"""Coverage probes for the MiniJS interpreter.

A probe site id is the CRC-32 of ``"<node-kind>:<production>"``, so ids are
stable across runs and processes.  Edges are hashed AFL style:
``cell = (prev ^ cur) & mask`` followed by ``prev = cur >> 1``.
"""

from __future__ import annotations

import zlib

_SITES: dict[tuple[str, str], int] = {}


def site(kind: str, production: str) -> int:
    key = (kind, production)
    sid = _SITES.get(key)
    if sid is None:
        sid = _SITES[key] = zlib.crc32(f"{kind}:{production}".encode())
    return sid


class Recorder:
    """Sparse edge hit counts for one execution."""

    __slots__ = ("counts", "prev", "mask")

    def __init__(self, map_size: int = 1 << 16):
        self.counts: dict[int, int] = {}
        self.prev = 0
        self.mask = map_size - 1

    def reset(self) -> None:
        self.counts = {}
        self.prev = 0

    def hit(self, sid: int) -> None:
        i = (self.prev ^ sid) & self.mask
        counts = self.counts
        counts[i] = counts.get(i, 0) + 1
        self.prev = sid >> 1

    def hit_named(self, kind: str, production: str) -> None:
        self.hit(site(kind, production))

    def saturated(self) -> dict[int, int]:
        return {i: (c if c < 255 else 255) for i, c in self.counts.items()}


class NullRecorder(Recorder):
    __slots__ = ()

    def hit(self, sid: int) -> None:
        pass
