"""Run decoded inputs against a target and collect status, coverage and timing.

A target is either an external process speaking the EXEC/STAT protocol
(``minijs`` names the bundled interpreter server; anything else is a path to
an executable) or ``inprocess``, which calls the bundled interpreter
directly with identical results and no IPC.
"""

from __future__ import annotations

import logging
import mmap
import os
import select
import shlex
import signal
import subprocess
import sys
import tempfile
import time
import uuid
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import protocol
from .codec import decode
from .coverage import MAP_SIZE, CoverageMap
from .preproc import TokenMap
from .protocol import Status

log = logging.getLogger(__name__)

TARGET_DIED = 0xFFFE
BUILTIN_TARGET = "minijs"
INPROCESS_TARGET = "inprocess"


class SpawnFailure(RuntimeError):
    pass


class HandshakeMismatch(SpawnFailure):
    pass


class ProtocolError(RuntimeError):
    pass


@dataclass
class TargetConfig:
    target_path: str = BUILTIN_TARGET
    timeout_ms: float = 100.0
    memory_limit: int | None = 1 << 30
    persistent: bool = True
    map_size: int = MAP_SIZE
    target_args: Sequence[str] = ()
    disarm: bool = False
    step_limit: int | None = None
    shm_name: str | None = None

    def __post_init__(self):
        if self.timeout_ms <= 0:
            raise ValueError("timeout must be positive")

    def command(self) -> list[str]:
        if self.target_path == BUILTIN_TARGET:
            cmd = [sys.executable, "-m", "tokfuzz.minijs", "--serve"]
        else:
            cmd = shlex.split(self.target_path) + ["--serve"]
        cmd += ["--map-size", str(self.map_size)]
        if self.disarm:
            cmd.append("--disarm")
        if self.step_limit is not None:
            cmd += ["--step-limit", str(self.step_limit)]
        return cmd + list(self.target_args)


@dataclass
class ExecResult:
    status: Status
    trace: CoverageMap
    assertion_id: int | None = None
    exec_micros: int = 0
    steps: int = 0

    @property
    def crashed(self) -> bool:
        return self.status == Status.CRASH


def _shm_dir() -> str:
    return "/dev/shm" if os.path.isdir("/dev/shm") and os.access("/dev/shm", os.W_OK) \
        else tempfile.gettempdir()


class TargetHandle:
    """One live target process with its private shared coverage region."""

    def __init__(self, config: TargetConfig):
        self.config = config
        self.map_size = config.map_size
        name = config.shm_name or os.environ.get(protocol.SHM_NAME_ENV)
        name = f"{name}-{uuid.uuid4().hex[:8]}" if name else f"tokfuzz-{uuid.uuid4().hex}"
        self.shm_path = os.path.join(_shm_dir(), name)
        length = self.map_size + protocol.TRAILER.size
        fd = os.open(self.shm_path, os.O_RDWR | os.O_CREAT | os.O_EXCL, 0o600)
        try:
            os.ftruncate(fd, length)
            self.mm = mmap.mmap(fd, length)
        finally:
            os.close(fd)
        self.cells = np.frombuffer(self.mm, dtype=np.uint8, count=self.map_size)
        self.proc: subprocess.Popen | None = None
        self.spawns = 0
        self.respawn_failures = 0
        self.protocol_errors = 0
        self.closed = False

    # -- process management -----------------------------------------------------

    def _preexec(self):
        limit = self.config.memory_limit
        if limit:
            import resource
            try:
                resource.setrlimit(resource.RLIMIT_AS, (limit, limit))
            except (ValueError, OSError):
                pass

    def start(self) -> None:
        env = dict(os.environ)
        env[protocol.SHM_ENV] = self.shm_path
        try:
            self.proc = subprocess.Popen(
                self.config.command(), stdin=subprocess.PIPE, stdout=subprocess.PIPE,
                stderr=subprocess.DEVNULL, env=env, bufsize=0,
                preexec_fn=self._preexec if os.name == "posix" else None)
        except OSError as exc:
            raise SpawnFailure(f"cannot start target {self.config.target_path!r}: {exc}") from exc
        self.spawns += 1
        try:
            self._write(protocol.pack_hello(self.map_size))
            reply = self._read(protocol.HELLO.size, 10.0)
        except (ProtocolError, TimeoutError, OSError) as exc:
            self.kill()
            raise SpawnFailure(f"target did not complete the handshake: {exc}") from exc
        magic, version, size = protocol.HELLO.unpack(reply)
        if magic != b"HELO" or version != protocol.VERSION or size != self.map_size:
            self.kill()
            raise HandshakeMismatch(
                f"target speaks version {version} with map size {size}, "
                f"expected version {protocol.VERSION} with map size {self.map_size}")

    def ensure_running(self) -> None:
        if self.proc is not None and self.proc.poll() is None:
            return
        self.kill()
        while True:
            try:
                self.start()
                self.respawn_failures = 0
                return
            except HandshakeMismatch:
                raise
            except SpawnFailure:
                self.respawn_failures += 1
                if self.respawn_failures >= 3:
                    raise

    def kill(self) -> None:
        proc, self.proc = self.proc, None
        if proc is None:
            return
        if proc.poll() is None:
            try:
                proc.send_signal(signal.SIGKILL)
            except ProcessLookupError:
                pass
        for stream in (proc.stdin, proc.stdout):
            try:
                stream.close()
            except OSError:
                pass
        proc.wait()

    def close(self) -> None:
        if self.closed:
            return
        self.closed = True
        self.kill()
        del self.cells
        self.mm.close()
        try:
            os.unlink(self.shm_path)
        except FileNotFoundError:
            pass

    def __enter__(self) -> "TargetHandle":
        return self

    def __exit__(self, *exc) -> None:
        self.close()

    def __del__(self):
        try:
            self.close()
        except Exception:
            pass

    # -- raw I/O ----------------------------------------------------------------

    def _write(self, data: bytes) -> None:
        assert self.proc is not None
        try:
            self.proc.stdin.write(data)
        except (BrokenPipeError, ValueError) as exc:
            raise ProtocolError(f"target closed its input: {exc}") from exc

    def _read(self, n: int, timeout: float) -> bytes:
        assert self.proc is not None
        fd = self.proc.stdout.fileno()
        deadline = time.monotonic() + timeout
        buf = b""
        while len(buf) < n:
            remaining = deadline - time.monotonic()
            if remaining <= 0:
                raise TimeoutError
            ready, _, _ = select.select([fd], [], [], remaining)
            if not ready:
                raise TimeoutError
            chunk = os.read(fd, n - len(buf))
            if not chunk:
                raise ProtocolError("target closed its output")
            buf += chunk
        return buf

    # -- execution ----------------------------------------------------------------

    def run(self, program: bytes | str) -> ExecResult:
        if isinstance(program, str):
            program = program.encode("utf-8")
        if len(program) > protocol.MAX_PROGRAM_BYTES:
            program = program[:protocol.MAX_PROGRAM_BYTES]
        if not self.config.persistent:
            self.kill()
        self.ensure_running()
        t0 = time.perf_counter_ns()
        try:
            self._write(protocol.pack_exec(program))
            reply = self._read(protocol.STAT.size, self.config.timeout_ms / 1000.0)
        except TimeoutError:
            micros = (time.perf_counter_ns() - t0) // 1000
            self.kill()
            return ExecResult(Status.TIMEOUT, CoverageMap(self.map_size), None, micros, 0)
        except ProtocolError as exc:
            micros = (time.perf_counter_ns() - t0) // 1000
            self.protocol_errors += 1
            log.debug("target failure: %s", exc)
            self.kill()
            return ExecResult(Status.CRASH, CoverageMap(self.map_size), TARGET_DIED, micros, 0)
        micros = (time.perf_counter_ns() - t0) // 1000
        magic, status, assertion = protocol.STAT.unpack(reply)
        if magic != b"STAT" or status > Status.CRASH:
            self.protocol_errors += 1
            self.kill()
            return ExecResult(Status.CRASH, CoverageMap(self.map_size), TARGET_DIED, micros, 0)
        trace = CoverageMap(self.map_size, self.cells.copy())
        steps = protocol.TRAILER.unpack_from(self.mm, self.map_size)[0]
        status = Status(status)
        if status == Status.CRASH:
            # The server exits after an assertion; reap it now.
            self.kill()
        return ExecResult(status, trace, assertion if status == Status.CRASH else None,
                          micros, steps)


class InProcessTarget:
    """The bundled interpreter called directly; same results as the server."""

    def __init__(self, config: TargetConfig):
        from .minijs.interp import DEFAULT_STEP_LIMIT
        from .minijs.probes import Recorder
        self.config = config
        self.map_size = config.map_size
        self.step_limit = config.step_limit or DEFAULT_STEP_LIMIT
        self.recorder = Recorder(self.map_size)
        self.spawns = 1
        self.protocol_errors = 0

    def ensure_running(self) -> None:
        pass

    def run(self, program: bytes | str) -> ExecResult:
        from .minijs.runner import run_source
        if isinstance(program, bytes):
            program = program.decode("utf-8", errors="replace")
        t0 = time.perf_counter_ns()
        out = run_source(program, self.map_size, self.step_limit, not self.config.disarm,
                         self.recorder)
        micros = (time.perf_counter_ns() - t0) // 1000
        trace = CoverageMap.from_counts(out.counts, self.map_size)
        return ExecResult(out.status, trace,
                          out.assertion_id if out.status == Status.CRASH else None,
                          micros, out.steps)

    def close(self) -> None:
        pass

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        pass


def spawn(config: TargetConfig):
    """Start a target and complete the handshake (or build the in-process runner)."""
    if config.target_path == INPROCESS_TARGET:
        return InProcessTarget(config)
    if config.target_path != BUILTIN_TARGET:
        exe = shlex.split(config.target_path)[0]
        if not (os.path.exists(exe) or any(
                os.path.exists(os.path.join(d, exe)) for d in os.environ.get("PATH", "").split(os.pathsep))):
            raise SpawnFailure(f"target {exe!r} not found")
    handle = TargetHandle(config)
    try:
        handle.start()
    except Exception:
        handle.close()
        raise
    return handle


def run_input(handle, codes: Sequence[int], tmap: TokenMap) -> ExecResult:
    return handle.run(decode(codes, tmap))
