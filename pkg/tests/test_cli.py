import os
import random
import re

import pytest

from tokfuzz.cli import EXIT_CRASHES, EXIT_OK, EXIT_TARGET, EXIT_USAGE, main, parse_rates, read_stats
from tokfuzz.preproc import write_codes

from test_minijs import WITNESSES


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_preprocess_bundled(tmp_path, capsys):
    code, out, _ = run(capsys, "preprocess", "--corpus", tmp_path / "c")
    assert code == EXIT_OK
    m = re.match(r"100 seeds, (\d+) tokens \(0 skipped\)", out)
    assert m and int(m.group(1)) == len((tmp_path / "c" / "tokenmap.txt").read_text().splitlines()) - 1


def test_preprocess_is_idempotent(tmp_path, capsys):
    def snapshot():
        root = tmp_path / "c"
        return {str(p.relative_to(root)): p.read_bytes() for p in root.rglob("*") if p.is_file()}
    run(capsys, "preprocess", "--corpus", tmp_path / "c", "--rng-seed", 3)
    first = snapshot()
    run(capsys, "preprocess", "--corpus", tmp_path / "c", "--rng-seed", 3)
    assert snapshot() == first


def test_preprocess_empty_dir(tmp_path, capsys):
    (tmp_path / "seeds").mkdir()
    code, _, err = run(capsys, "preprocess", "--seeds", tmp_path / "seeds", "--corpus", tmp_path / "c")
    assert code == EXIT_USAGE and "no usable seeds" in err


def test_preprocess_extra_tokens(tmp_path, capsys):
    extra = tmp_path / "extra.txt"
    extra.write_text('class\n"\n')
    code, out, _ = run(capsys, "preprocess", "--corpus", tmp_path / "c", "--extra-tokens", extra)
    assert code == EXIT_OK
    assert "\tkeyword\tclass\t" in (tmp_path / "c" / "tokenmap.txt").read_text()


def test_usage_errors(tmp_path, capsys):
    assert run(capsys, "fuzz", "--corpus", tmp_path / "missing", "--max-execs", 10)[0] == EXIT_USAGE
    assert run(capsys, "bogus")[0] == EXIT_USAGE
    assert run(capsys, "fuzz", "--corpus", tmp_path, "--mode", "bits")[0] == EXIT_USAGE


def test_fuzz_report_and_conservation(corpus, capsys):
    code, out, err = run(capsys, "fuzz", "--corpus", corpus, "--target", "inprocess",
                         "--max-execs", 3000, "--rng-seed", 1)
    assert code in (EXIT_OK, EXIT_CRASHES)
    assert out.startswith("token: 3000 execs")
    assert "execs" in err  # live status line
    code, out, _ = run(capsys, "report", corpus)
    assert code == EXIT_OK
    last = read_stats(corpus)[-1]
    shares = {m.group(1): float(m.group(2)) for m in re.finditer(r"^(\w+)\s+([\d.]+)%$", out, re.M)}
    assert abs(sum(shares.values()) - 100.0) < 0.05
    assert shares["parse_ok"] == pytest.approx(100 * last["parse_ok"] / last["total_execs"], abs=0.005)
    assert shares == {k: round(100 * v, 2) for k, v in parse_rates(last).items()}


def test_fuzz_appends_stats(corpus, capsys):
    run(capsys, "fuzz", "--corpus", corpus, "--target", "inprocess", "--max-execs", 1000, "-q")
    n = len(read_stats(corpus))
    run(capsys, "fuzz", "--corpus", corpus, "--target", "inprocess", "--max-execs", 1000, "-q")
    assert len(read_stats(corpus)) > n


def test_report_two_corpora(tmp_path, capsys):
    dirs = []
    for mode in ("token", "byte"):
        d = tmp_path / mode
        run(capsys, "preprocess", "--corpus", d)
        run(capsys, "fuzz", "--corpus", d, "--target", "inprocess", "--mode", mode,
            "--max-execs", 2000, "-q")
        dirs.append(d)
    code, out, _ = run(capsys, "report", *dirs)
    a, b = (read_stats(d)[-1] for d in dirs)
    ra, rb = a["parse_ok"] / a["total_execs"], b["parse_ok"] / b["total_execs"]
    line = next(l for l in out.splitlines() if l.startswith("parse_ok token"))
    assert line.endswith(f"ratio {ra / rb:.2f}x")


def test_report_empty(tmp_path, capsys):
    code, out, _ = run(capsys, "report", tmp_path)
    assert code == EXIT_OK and "no data" in out


def test_replay(corpus, tmp_path, capsys):
    code, out, _ = run(capsys, "replay", "--corpus", corpus, corpus / "queue" / "id_000000.tok")
    assert (code, out.split()[0]) == (EXIT_OK, "parse_ok")
    w = tmp_path / "w.js"
    w.write_text(WITNESSES[4])
    code, out, _ = run(capsys, "replay", w, "--target", "inprocess")
    assert code == EXIT_CRASHES and "assertion=4" in out
    junk = tmp_path / "junk.tok"
    rng = random.Random(0)
    write_codes(junk, [rng.randrange(65536) for _ in range(50)])
    code, out, _ = run(capsys, "replay", "--corpus", corpus, junk)
    assert code in (EXIT_OK, EXIT_CRASHES) and out.split()[0] in (
        "parse_ok", "parse_error", "runtime_error", "crash")


def test_replay_target_failure(tmp_path, capsys):
    w = tmp_path / "w.js"
    w.write_text("let var1 = 1 ;")
    assert run(capsys, "replay", w, "--target", "/nonexistent/t")[0] == EXIT_TARGET


def test_fuzz_target_failure(corpus, capsys):
    code = run(capsys, "fuzz", "--corpus", corpus, "--target", "/nonexistent/t", "--max-execs", 10)[0]
    assert code == EXIT_TARGET


def test_plot(corpus, tmp_path, capsys):
    pytest.importorskip("matplotlib")
    run(capsys, "fuzz", "--corpus", corpus, "--target", "inprocess", "--max-execs", 1500, "-q")
    png = tmp_path / "cov.png"
    assert run(capsys, "plot", corpus, "-o", png)[0] == EXIT_OK
    assert png.read_bytes()[:4] == b"\x89PNG"
    assert run(capsys, "plot", tmp_path / "nothing", "-o", png)[0] == EXIT_USAGE
