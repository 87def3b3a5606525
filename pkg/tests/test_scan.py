import json
import os

import pytest

from hamroots.hamming import DOMAIN0
from hamroots.scan import (CountTable, ScanConfig, format_scan_output,
                           read_scan_output, scan_frequencies, scan_range)


def test_scan_first_rows_frozen():
    profiles = scan_range(ScanConfig(lo=3, hi=7))
    rows = [(p.p, p.w, p.W, p.delta, p.witnesses) for p in profiles]
    assert rows == [
        (3, 1, 1, 2, (1,)),
        (5, 1, 1, 2, (0, 4)),
        (7, 2, 2, 2, (6,)),
    ]


def test_scan_includes_p2_with_weight_only():
    profiles = scan_range(ScanConfig(lo=2, hi=7))
    first = profiles[0]
    assert (first.p, first.r, first.w, first.W, first.delta) == (2, 0, None, 1, None)


def test_scan_deterministic_across_task_counts():
    cfg1 = ScanConfig(lo=2, hi=1500, tasks=1, block_size=32)
    cfg8 = ScanConfig(lo=2, hi=1500, tasks=8, block_size=32)
    assert format_scan_output(cfg1, scan_range(cfg1)) == \
        format_scan_output(cfg8, scan_range(cfg8))


def test_scan_domain0_variant_rows():
    profiles = scan_range(ScanConfig(lo=3, hi=23, variant="domain0"))
    by_p = {p.p: p for p in profiles}
    assert by_p[23].delta == 2  # canonical would give 1
    assert all(p.W <= p.delta for p in profiles)


def test_checkpoint_resume_and_fingerprint(tmp_path):
    ckpt = str(tmp_path / "scan.ckpt")
    cfg = ScanConfig(lo=2, hi=500, block_size=16, checkpoint=ckpt)
    first = format_scan_output(cfg, scan_range(cfg))
    # every block is journaled once
    with open(ckpt) as fh:
        recs = [json.loads(line) for line in fh]
    assert recs[0]["meta"]
    n_blocks = len([r for r in recs if "block" in r])
    # resume: all blocks already done, output identical
    again = format_scan_output(cfg, scan_range(cfg))
    assert first == again
    with open(ckpt) as fh:
        assert len(fh.readlines()) == n_blocks + 1  # nothing re-journaled
    # a different configuration must refuse the same journal
    other = ScanConfig(lo=2, hi=600, block_size=16, checkpoint=ckpt)
    with pytest.raises(ValueError):
        scan_range(other)


def test_partial_checkpoint_resumes_to_identical_bytes(tmp_path):
    ckpt = str(tmp_path / "partial.ckpt")
    cfg = ScanConfig(lo=2, hi=500, block_size=16, checkpoint=ckpt)
    reference = format_scan_output(cfg, scan_range(cfg))
    # truncate the journal to simulate an interrupted run
    with open(ckpt) as fh:
        lines = fh.readlines()
    with open(ckpt, "w") as fh:
        fh.writelines(lines[: 1 + len(lines) // 2])
    resumed = format_scan_output(cfg, scan_range(cfg))
    assert resumed == reference


def test_csv_round_trip(tmp_path):
    cfg = ScanConfig(lo=2, hi=100)
    profiles = scan_range(cfg)
    path = tmp_path / "scan.csv"
    path.write_text(format_scan_output(cfg, profiles), encoding="utf-8")
    meta, parsed = read_scan_output(str(path))
    assert meta["variant"] == "canonical"
    assert [(a.p, a.w, a.W, a.delta, a.witnesses) for a in parsed] == \
        [(b.p, b.w, b.W, b.delta, b.witnesses) for b in profiles]


def test_jsonl_round_trip(tmp_path):
    cfg = ScanConfig(lo=2, hi=100, fmt="jsonl")
    profiles = scan_range(cfg)
    path = tmp_path / "scan.jsonl"
    path.write_text(format_scan_output(cfg, profiles), encoding="utf-8")
    meta, parsed = read_scan_output(str(path))
    assert meta["schema"].endswith("v1")
    assert [(a.p, a.delta) for a in parsed] == [(b.p, b.delta) for b in profiles]


def test_unknown_schema_rejected(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("# hamroots.scan.v9 variant=canonical\np,r\n", encoding="utf-8")
    with pytest.raises(ValueError):
        read_scan_output(str(path))
    jpath = tmp_path / "bad.jsonl"
    jpath.write_text(json.dumps({"schema": "other"}) + "\n", encoding="utf-8")
    with pytest.raises(ValueError):
        read_scan_output(str(jpath))


def test_count_table_identities():
    profiles = scan_range(ScanConfig(lo=2, hi=1000, tasks=2))
    table = CountTable.from_profiles(profiles, [1000])
    row = table.rows[1000]
    assert row["pi"] == 168
    assert row["w"] == [87, 80, 0, 0]
    assert row["W"] == [68, 100, 0, 0]
    assert table.sum_identity_ok(1000, "w")
    assert table.sum_identity_ok(1000, "W")
    assert table.sum_identity_ok(1000, "delta")


def test_frequencies_at_1000():
    profiles = scan_range(ScanConfig(lo=2, hi=1000, compute=("w", "W")))
    freq = scan_frequencies(profiles, 1000)
    assert (freq["w1"], freq["W1"], freq["pi"]) == (87, 68, 168)


def test_config_validation():
    with pytest.raises(ValueError):
        ScanConfig(lo=5, hi=3)
    with pytest.raises(ValueError):
        ScanConfig(lo=1, hi=10)
    with pytest.raises(ValueError):
        ScanConfig(lo=3, hi=10, variant="mystery")
    with pytest.raises(ValueError):
        ScanConfig(lo=3, hi=10, compute=("w", "Z"))
    with pytest.raises(ValueError):
        ScanConfig(lo=3, hi=10, fmt="xml")
    with pytest.raises(ValueError):
        ScanConfig(lo=3, hi=10, tasks=0)


def test_fingerprint_sensitivity():
    base = ScanConfig(lo=3, hi=100)
    assert base.fingerprint() == ScanConfig(lo=3, hi=100).fingerprint()
    assert base.fingerprint() != ScanConfig(lo=3, hi=101).fingerprint()
    assert base.fingerprint() != ScanConfig(lo=3, hi=100, variant="domain0").fingerprint()
    assert base.fingerprint() != ScanConfig(lo=3, hi=100, compute=("w",)).fingerprint()
