"""Wire format shared by the executor and target servers.

All integers little-endian::

    handshake  fuzzer -> target  b"HELO" u16 version u32 map_size
               target -> fuzzer  b"HELO" u16 version u32 map_size
    request    b"EXEC" u32 length, then `length` bytes of UTF-8 program text
    response   b"STAT" u8 status u16 assertion_id

Coverage travels through a shared file-backed memory region named by the
TOKFUZZ_SHM environment variable: ``map_size`` hit-count bytes followed by a
u64 count of interpreter steps for the last execution.
"""

from __future__ import annotations

import struct
from enum import IntEnum

VERSION = 1
SHM_ENV = "TOKFUZZ_SHM"
SHM_NAME_ENV = "TOKFUZZ_SHM_NAME"
TRAILER = struct.Struct("<Q")

HELLO = struct.Struct("<4sHI")
EXEC_HEADER = struct.Struct("<4sI")
STAT = struct.Struct("<4sBH")
MAX_PROGRAM_BYTES = 1 << 20


class Status(IntEnum):
    PARSE_OK = 0
    PARSE_ERROR = 1
    RUNTIME_ERROR = 2
    CRASH = 3
    TIMEOUT = 4

    @property
    def label(self) -> str:
        return self.name.lower()


# Higher wins when several outcomes apply to one execution.
PRECEDENCE = {
    Status.CRASH: 4, Status.TIMEOUT: 3, Status.PARSE_ERROR: 2,
    Status.RUNTIME_ERROR: 1, Status.PARSE_OK: 0,
}


def worst(*statuses: Status) -> Status:
    return max(statuses, key=PRECEDENCE.__getitem__)


def pack_hello(map_size: int, version: int = VERSION) -> bytes:
    return HELLO.pack(b"HELO", version, map_size)


def pack_exec(program: bytes) -> bytes:
    return EXEC_HEADER.pack(b"EXEC", len(program)) + program


def pack_stat(status: int, assertion_id: int = 0) -> bytes:
    return STAT.pack(b"STAT", status, assertion_id)
