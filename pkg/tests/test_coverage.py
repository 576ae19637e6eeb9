import numpy as np
import pytest
from hypothesis import given, strategies as st

from tokfuzz.coverage import (
    BUCKET_LUT, CoverageMap, GlobalCoverage, Novelty, SizeMismatch, bucketize, check_size,
    nonzero_cells, record_edge,
)


@pytest.mark.parametrize("count,cls", [(0, 0), (1, 1), (2, 2), (3, 4), (4, 8), (7, 8), (8, 16),
                                       (15, 16), (16, 32), (31, 32), (32, 64), (127, 64),
                                       (128, 128), (255, 128)])
def test_bucket_classes(count, cls):
    assert bucketize(count) == cls == BUCKET_LUT[count]


def test_bucketize_range():
    with pytest.raises(ValueError):
        bucketize(256)


def test_check_size():
    assert check_size(1 << 16) == 1 << 16
    for bad in (0, 1000, -8):
        with pytest.raises(ValueError):
            check_size(bad)


def test_record_edge_xor_shift():
    trace = CoverageMap(64)
    prev = record_edge(trace, 0, 10)
    assert prev == 5
    record_edge(trace, prev, 12)
    assert trace.cells[10] == 1 and trace.cells[5 ^ 12] == 1


def test_counters_saturate():
    trace = CoverageMap(64)
    for _ in range(300):
        record_edge(trace, 0, 3)
    assert trace.cells[3] == 255
    assert CoverageMap.from_counts({3: 1000}, 64).cells[3] == 255


@given(st.dictionaries(st.integers(0, 4095), st.integers(1, 255), max_size=200))
def test_nonzero_cells_matches_flatnonzero(counts):
    cells = CoverageMap.from_counts(counts, 4096).cells
    assert nonzero_cells(cells).tolist() == np.flatnonzero(cells).tolist()


def test_has_new_bits_progression():
    g = GlobalCoverage(64)
    assert g.has_new_bits(CoverageMap(64)) == Novelty.NOTHING
    t = CoverageMap.from_counts({1: 1, 2: 1}, 64)
    assert g.has_new_bits(t) == Novelty.NEW_EDGE
    assert g.edges_seen == 2
    assert g.has_new_bits(t) == Novelty.NOTHING
    assert g.has_new_bits(CoverageMap.from_counts({1: 3}, 64)) == Novelty.NEW_BUCKET
    assert g.has_new_bits(CoverageMap.from_counts({1: 3, 2: 1}, 64)) == Novelty.NOTHING
    assert g.has_new_bits(CoverageMap.from_counts({9: 1}, 64), update=False) == Novelty.NEW_EDGE
    assert g.edges_seen == 2


def test_has_new_bits_size_mismatch():
    with pytest.raises(SizeMismatch):
        GlobalCoverage(64).has_new_bits(CoverageMap(128))


def test_signature_ignores_counts_within_a_bucket():
    a = CoverageMap.from_counts({5: 4, 9: 40}, 64)
    b = CoverageMap.from_counts({5: 7, 9: 100}, 64)
    c = CoverageMap.from_counts({5: 8, 9: 100}, 64)
    assert a.signature() == b.signature() != c.signature()
    assert a != b


@given(st.lists(st.dictionaries(st.integers(0, 255), st.integers(1, 255), max_size=20), max_size=20))
def test_edges_seen_is_monotone(traces):
    g = GlobalCoverage(256)
    last = 0
    for counts in traces:
        g.has_new_bits(CoverageMap.from_counts(counts, 256))
        assert g.edges_seen >= last
        last = g.edges_seen
    assert g.edges_seen == int(np.count_nonzero(g.virgin))
