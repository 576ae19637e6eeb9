"""AFL-style byte-level havoc with dictionary insertion (the baseline mode).

The operation table mirrors AFL's havoc stage with user extras: bit flips,
interesting values, arithmetic, random bytes, block delete/clone/overwrite
and dictionary overwrite/insert, stacked ``1 << (1 + R(7))`` deep.
"""

from __future__ import annotations

import random
from typing import Callable, Sequence

INTERESTING_8 = (-128, -1, 0, 1, 16, 32, 64, 100, 127)
INTERESTING_16 = INTERESTING_8 + (-32768, -129, 128, 255, 256, 512, 1000, 1024, 4096, 32767)
INTERESTING_32 = INTERESTING_16 + (-2147483648, -100663046, -32769, 32768, 65535, 65536,
                                   100663045, 2147483647)
ARITH_MAX = 35
HAVOC_STACK_POW2 = 7
HAVOC_BLK_SMALL = 32
HAVOC_BLK_MEDIUM = 128
HAVOC_BLK_LARGE = 1500
HAVOC_BLK_XL = 32768
MAX_INPUT_BYTES = 16384


def choose_block_len(limit: int, rng: random.Random, queue_cycle: int = 1) -> int:
    rlim = min(queue_cycle, 3)
    case = rng.randrange(rlim)
    if case == 0:
        lo, hi = 1, HAVOC_BLK_SMALL
    elif case == 1:
        lo, hi = HAVOC_BLK_SMALL, HAVOC_BLK_MEDIUM
    elif rng.randrange(10):
        lo, hi = HAVOC_BLK_MEDIUM, HAVOC_BLK_LARGE
    else:
        lo, hi = HAVOC_BLK_LARGE, HAVOC_BLK_XL
    if lo >= limit:
        lo = 1
    return lo + rng.randrange(min(hi, limit) - lo + 1)


def _put(buf: bytearray, pos: int, value: int, width: int, rng: random.Random) -> None:
    order = "little" if rng.randrange(2) else "big"
    buf[pos:pos + width] = (value & ((1 << (8 * width)) - 1)).to_bytes(width, order)


def _get(buf: bytearray, pos: int, width: int, rng: random.Random) -> tuple[int, str]:
    order = "little" if rng.randrange(2) else "big"
    return int.from_bytes(buf[pos:pos + width], order), order


def havoc_bytes(data: bytes, dictionary: Sequence[bytes], rng: random.Random,
                queue_cycle: int = 1, stack_pow2: int = HAVOC_STACK_POW2) -> bytes:
    buf = bytearray(data)
    n_ops = 17 if dictionary else 15
    for _ in range(1 << (1 + rng.randrange(stack_pow2))):
        op = rng.randrange(n_ops)
        n = len(buf)
        if op == 0:
            if n:
                bit = rng.randrange(n * 8)
                buf[bit >> 3] ^= 128 >> (bit & 7)
        elif op == 1:
            if n:
                buf[rng.randrange(n)] = rng.choice(INTERESTING_8) & 0xFF
        elif op == 2:
            if n >= 2:
                _put(buf, rng.randrange(n - 1), rng.choice(INTERESTING_16), 2, rng)
        elif op == 3:
            if n >= 4:
                _put(buf, rng.randrange(n - 3), rng.choice(INTERESTING_32), 4, rng)
        elif op in (4, 5):
            if n:
                pos = rng.randrange(n)
                delta = 1 + rng.randrange(ARITH_MAX)
                buf[pos] = (buf[pos] + (delta if op == 5 else -delta)) & 0xFF
        elif op in (6, 7, 8, 9):
            width = 2 if op < 8 else 4
            if n >= width:
                pos = rng.randrange(n - width + 1)
                value, order = _get(buf, pos, width, rng)
                delta = 1 + rng.randrange(ARITH_MAX)
                value += delta if op % 2 else -delta
                buf[pos:pos + width] = (value & ((1 << (8 * width)) - 1)).to_bytes(width, order)
        elif op == 10:
            if n:
                buf[rng.randrange(n)] ^= 1 + rng.randrange(255)
        elif op in (11, 12):
            if n >= 2:
                dl = choose_block_len(n - 1, rng, queue_cycle)
                pos = rng.randrange(n - dl + 1)
                del buf[pos:pos + dl]
        elif op == 13:
            if n + HAVOC_BLK_XL < MAX_INPUT_BYTES or n < MAX_INPUT_BYTES // 2:
                actually_clone = rng.randrange(4)
                if actually_clone:
                    if not n:
                        continue
                    cl = choose_block_len(n, rng, queue_cycle)
                    src = rng.randrange(n - cl + 1)
                    block = bytes(buf[src:src + cl])
                else:
                    cl = choose_block_len(HAVOC_BLK_XL, rng, queue_cycle)
                    fill = rng.randrange(256) if rng.randrange(2) else buf[rng.randrange(n)] if n else 0
                    block = bytes([fill]) * cl
                pos = rng.randrange(n + 1)
                buf[pos:pos] = block
        elif op == 14:
            if n >= 2:
                cl = choose_block_len(n - 1, rng, queue_cycle)
                src = rng.randrange(n - cl + 1)
                dst = rng.randrange(n - cl + 1)
                if rng.randrange(4):
                    if src != dst:
                        buf[dst:dst + cl] = bytes(buf[src:src + cl])
                else:
                    fill = rng.randrange(256) if rng.randrange(2) else buf[rng.randrange(n)]
                    buf[dst:dst + cl] = bytes([fill]) * cl
        elif op == 15:
            word = dictionary[rng.randrange(len(dictionary))]
            if len(word) <= n:
                pos = rng.randrange(n - len(word) + 1)
                buf[pos:pos + len(word)] = word
        else:
            word = dictionary[rng.randrange(len(dictionary))]
            if n + len(word) < MAX_INPUT_BYTES:
                pos = rng.randrange(n + 1)
                buf[pos:pos] = word
    if len(buf) > MAX_INPUT_BYTES:
        del buf[MAX_INPUT_BYTES:]
    return bytes(buf)


def splice_bytes(data: bytes, donor: bytes, rng: random.Random) -> bytes | None:
    """AFL splice: head of *data* up to a split point inside the differing region, tail of *donor*."""
    limit = min(len(data), len(donor))
    first = last = -1
    for i in range(limit):
        if data[i] != donor[i]:
            if first < 0:
                first = i
            last = i
    if first < 0 or last < 2 or first == last:
        return None
    split = first + rng.randrange(last - first)
    return data[:split] + donor[split:]


def make_byte_mutator(dictionary: Sequence[bytes], sample_donor: Callable[[random.Random], bytes],
                      splice_prob: float = 0.2) -> Callable[[bytes, random.Random, int], bytes]:
    def mutate(data: bytes, rng: random.Random, queue_cycle: int = 1) -> bytes:
        if rng.random() < splice_prob:
            spliced = splice_bytes(data, sample_donor(rng), rng)
            if spliced is not None:
                data = spliced
        out = havoc_bytes(data, dictionary, rng, queue_cycle)
        return out or bytes([rng.randrange(256)])
    return mutate
