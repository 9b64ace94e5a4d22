import json

import pytest

from lattice_gap import runner as R
from lattice_gap.errors import CheckpointMismatch
from lattice_gap.verifier import scan_modulus, search_range


def _collect(cfg, **kwargs):
    rows = []
    summary = R.run_search(cfg, rows.append, **kwargs)
    return rows, summary


def reference_rows(n_lo, n_hi, include_half_t=False):
    return [R.row_for_record(rec) for rec in search_range(n_lo, n_hi, include_half_t)]


def test_row_shape():
    rec = scan_modulus(12)[0]
    row = R.row_for_record(rec)
    assert list(row) == [
        "n",
        "s",
        "t",
        "normalized_t",
        "verdict",
        "witness_p",
        "tags",
        "literal_family_match",
    ]
    assert row["n"] == 12
    assert row["s"] == 1
    assert row["verdict"] == "holds"
    assert row["witness_p"] is None


def test_sequential_matches_reference():
    cfg = R.RunConfig(n_lo=3, n_hi=100, jobs=1, block_size=7)
    rows, summary = _collect(cfg)
    assert rows == reference_rows(3, 100)
    assert summary.total == len(rows)
    assert not summary.aborted
    assert summary.unexplained == 0


def test_parallel_matches_sequential():
    cfg1 = R.RunConfig(n_lo=3, n_hi=200, jobs=1, block_size=16)
    cfg3 = R.RunConfig(n_lo=3, n_hi=200, jobs=3, block_size=16)
    rows1, sum1 = _collect(cfg1)
    rows3, sum3 = _collect(cfg3)
    assert rows1 == rows3
    assert sum1.counts == sum3.counts


def test_include_half_t_flag():
    plain = reference_rows(12, 12)
    full = reference_rows(12, 12, include_half_t=True)
    assert len(full) == len(plain) + 1
    assert any(row["tags"] == ["half_t"] for row in full)
    assert not any(row["tags"] == ["half_t"] for row in plain)


def test_summary_counts_every_tag_key():
    cfg = R.RunConfig(n_lo=3, n_hi=30)
    _, summary = _collect(cfg)
    assert set(summary.counts) == {tag.value for tag in R.TAG_ORDER}


def test_fingerprint_sensitivity():
    base = R.RunConfig(n_lo=3, n_hi=100)
    assert R.config_fingerprint(base) == R.config_fingerprint(
        R.RunConfig(n_lo=3, n_hi=100, jobs=8, block_size=5, checkpoint_path="x")
    )
    assert R.config_fingerprint(base) != R.config_fingerprint(R.RunConfig(n_lo=4, n_hi=100))
    assert R.config_fingerprint(base) != R.config_fingerprint(R.RunConfig(n_lo=3, n_hi=101))
    assert R.config_fingerprint(base) != R.config_fingerprint(
        R.RunConfig(n_lo=3, n_hi=100, include_half_t=True)
    )


def test_abort_and_resume(tmp_path):
    ckpt = str(tmp_path / "run.json")
    cfg = R.RunConfig(n_lo=3, n_hi=120, block_size=10, checkpoint_path=ckpt)

    rows, summary = _collect(cfg, abort_after_blocks=3)
    assert summary.aborted
    assert rows == reference_rows(3, 32)

    stored = json.loads(open(ckpt).read())
    assert stored["high_water"] == 32
    assert stored["schema_version"] == R.SCHEMA_VERSION

    rows2, summary2 = _collect(cfg)
    assert not summary2.aborted
    assert rows2 == reference_rows(3, 120)
    assert json.loads(open(ckpt).read())["high_water"] == 120


def test_abort_and_resume_parallel(tmp_path):
    ckpt = str(tmp_path / "run.json")
    cfg = R.RunConfig(n_lo=3, n_hi=150, jobs=3, block_size=8, checkpoint_path=ckpt)
    _, summary = _collect(cfg, abort_after_blocks=2)
    assert summary.aborted
    rows, _ = _collect(cfg)
    assert rows == reference_rows(3, 150)


def test_finished_checkpoint_replays_without_scanning(tmp_path):
    ckpt = str(tmp_path / "run.json")
    cfg = R.RunConfig(n_lo=3, n_hi=60, checkpoint_path=ckpt)
    first, _ = _collect(cfg)
    again, summary = _collect(cfg)
    assert again == first
    assert summary.total == len(first)


def test_checkpoint_config_mismatch(tmp_path):
    ckpt = str(tmp_path / "run.json")
    _collect(R.RunConfig(n_lo=3, n_hi=40, checkpoint_path=ckpt), abort_after_blocks=1)
    with pytest.raises(CheckpointMismatch):
        _collect(R.RunConfig(n_lo=3, n_hi=41, checkpoint_path=ckpt))


def test_checkpoint_rejects_garbage(tmp_path):
    ckpt = tmp_path / "run.json"
    ckpt.write_text("not json at all")
    cfg = R.RunConfig(n_lo=3, n_hi=40, checkpoint_path=str(ckpt))
    with pytest.raises(CheckpointMismatch):
        _collect(cfg)


def test_checkpoint_rejects_wrong_schema(tmp_path):
    ckpt = tmp_path / "run.json"
    cfg = R.RunConfig(n_lo=3, n_hi=40, checkpoint_path=str(ckpt))
    payload = {
        "schema_version": 99,
        "fingerprint": R.config_fingerprint(cfg),
        "high_water": 10,
        "rows": [],
    }
    ckpt.write_text(json.dumps(payload))
    with pytest.raises(CheckpointMismatch):
        _collect(cfg)


def test_no_checkpoint_file_when_unset():
    cfg = R.RunConfig(n_lo=3, n_hi=20)
    rows, summary = _collect(cfg, abort_after_blocks=1)
    assert summary.aborted
    assert rows == reference_rows(3, 20)  # one block of default size covers it
