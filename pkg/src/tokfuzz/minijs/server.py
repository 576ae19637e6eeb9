"""Persistent target server speaking the EXEC/STAT protocol on stdin/stdout."""

from __future__ import annotations

import mmap
import os
import sys
from typing import BinaryIO

from .. import protocol
from ..protocol import Status
from .probes import Recorder
from .runner import run_source

EXIT_PROTOCOL = 2
EXIT_ASSERTION = 70


class ProtocolViolation(Exception):
    pass


def _read_exact(stream: BinaryIO, n: int) -> bytes | None:
    buf = bytearray()
    while len(buf) < n:
        chunk = stream.read(n - len(buf))
        if not chunk:
            if buf:
                raise ProtocolViolation("truncated message")
            return None
        buf += chunk
    return bytes(buf)


class SharedRegion:
    """The coverage bytes plus step-count trailer, backed by a shared file."""

    def __init__(self, path: str | None, map_size: int):
        self.map_size = map_size
        self.length = map_size + protocol.TRAILER.size
        self.zero = bytes(map_size)
        if path:
            fd = os.open(path, os.O_RDWR)
            try:
                if os.fstat(fd).st_size < self.length:
                    raise ProtocolViolation(f"shared region {path} is smaller than {self.length} bytes")
                self.mm = mmap.mmap(fd, self.length)
            finally:
                os.close(fd)
        else:
            self.mm = mmap.mmap(-1, self.length)

    def publish(self, counts: dict[int, int], steps: int) -> None:
        mm = self.mm
        mm[:self.map_size] = self.zero
        for i, c in counts.items():
            mm[i] = c
        protocol.TRAILER.pack_into(mm, self.map_size, steps)


def serve(stdin: BinaryIO, stdout: BinaryIO, map_size: int, shm_path: str | None,
          step_limit: int, armed: bool = True, exit_on_crash: bool = True) -> int:
    """Handshake, then answer EXEC requests until the channel closes."""
    hello = _read_exact(stdin, protocol.HELLO.size)
    if hello is None:
        return 0
    magic, version, _their_size = protocol.HELLO.unpack(hello)
    if magic != b"HELO":
        raise ProtocolViolation("expected HELO")
    stdout.write(protocol.pack_hello(map_size))
    stdout.flush()
    if version != protocol.VERSION:
        return EXIT_PROTOCOL
    region = SharedRegion(shm_path, map_size)
    recorder = Recorder(map_size)
    while True:
        header = _read_exact(stdin, protocol.EXEC_HEADER.size)
        if header is None:
            return 0
        magic, length = protocol.EXEC_HEADER.unpack(header)
        if magic != b"EXEC" or length > protocol.MAX_PROGRAM_BYTES:
            raise ProtocolViolation("expected EXEC")
        body = _read_exact(stdin, length) if length else b""
        if body is None:
            raise ProtocolViolation("missing program body")
        source = body.decode("utf-8", errors="replace")
        outcome = run_source(source, map_size, step_limit, armed, recorder)
        region.publish(outcome.counts, outcome.steps)
        stdout.write(protocol.pack_stat(outcome.status, outcome.assertion_id))
        stdout.flush()
        if outcome.status == Status.CRASH and exit_on_crash:
            return EXIT_ASSERTION


def main_serve(map_size: int, step_limit: int, armed: bool, exit_on_crash: bool) -> int:
    shm = os.environ.get(protocol.SHM_ENV)
    try:
        return serve(sys.stdin.buffer, sys.stdout.buffer, map_size, shm, step_limit, armed,
                     exit_on_crash)
    except ProtocolViolation as exc:
        print(f"minijs: protocol violation: {exc}", file=sys.stderr)
        return EXIT_PROTOCOL
    except BrokenPipeError:
        return 0
