"""
Token-level versus byte-level mutation
======================================

Two short campaigns against MiniJS from the same 100 seeds: one mutating
token codes, one mutating raw bytes with the token texts as a dictionary.
The share of inputs that still parse is the number to watch.
"""

import tempfile
from pathlib import Path

import numpy as np
import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

import tokfuzz
from tokfuzz.cli import read_stats
from tokfuzz.engine import BYTE, TOKEN, Campaign, EngineConfig, Limits
from tokfuzz.executor import TargetConfig
from tokfuzz.preproc import preprocess_corpus

seeds = Path(tokfuzz.__file__).parent / "seeds"
work = Path(tempfile.mkdtemp(prefix="tokfuzz-demo-"))
execs = 20_000

curves = {}
for mode in (TOKEN, BYTE):
    corpus = work / mode
    preprocess_corpus(seeds, 0, corpus)
    campaign = Campaign(corpus, TargetConfig(target_path="inprocess"),
                        EngineConfig(mode=mode), rng_seed=1, limits=Limits(max_execs=execs))
    stats = campaign.run()
    print(f"{mode:5s}  parse_ok {stats.parse_ok_rate:6.2%}  edges {stats.edges_seen}  "
          f"queue {len(campaign.queue)}  bugs {campaign.store.bug_ids()}")
    rows = read_stats(corpus)
    curves[mode] = np.array([(r["total_execs"], r["edges_seen"]) for r in rows])

# coverage over executions
fig, ax = plt.subplots(figsize=(7, 4))
for mode, xy in curves.items():
    ax.plot(xy[:, 0], xy[:, 1], label=mode)
ax.set_xlabel("executions")
ax.set_ylabel("edges seen")
ax.legend()
out = work / "coverage.png"
plt.savefig(out, dpi=100)
print("plot written to", out)
