"""Parallel range driver with ordered output and resumable checkpoints.

The n-range is cut into fixed blocks; workers scan blocks in any order
and the parent emits rows strictly in block order, so the output stream
is byte-identical for every worker count. A checkpoint is rewritten
atomically after each emitted block and a resumed run replays the stored
rows before continuing, reproducing the uninterrupted output.
"""

from __future__ import annotations

import hashlib
import json
import os
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass

from .errors import CheckpointMismatch
from .verifier import ExceptionalRecord, FamilyTag, scan_modulus

SCHEMA_VERSION = 1
DEFAULT_BLOCK = 64

TAG_ORDER = (
    FamilyTag.S_PLUS_T,
    FamilyTag.S_PLUS_2T,
    FamilyTag.TWO_S_PLUS_T,
    FamilyTag.HALF_DIFFERENCE,
    FamilyTag.HALF_T,
    FamilyTag.SPORADIC,
    FamilyTag.UNEXPLAINED,
)


def row_for_record(rec: ExceptionalRecord) -> dict:
    """Flatten a record to the fixed-order row used by every output format."""
    return {
        "n": rec.triple.n,
        "s": rec.triple.s,
        "t": rec.triple.t,
        "normalized_t": rec.normalized_t,
        "verdict": "holds",
        "witness_p": None,
        "tags": [tag.value for tag in TAG_ORDER if tag in rec.tags],
        "literal_family_match": [tag.value for tag in TAG_ORDER if tag in rec.literal_tags],
    }


@dataclass(frozen=True)
class RunConfig:
    n_lo: int
    n_hi: int
    include_half_t: bool = False
    jobs: int = 1
    block_size: int = DEFAULT_BLOCK
    checkpoint_path: str | None = None


@dataclass
class RunSummary:
    counts: dict[str, int]
    total: int
    aborted: bool = False

    @property
    def unexplained(self) -> int:
        return self.counts[FamilyTag.UNEXPLAINED.value]


def config_fingerprint(cfg: RunConfig) -> str:
    """Digest of the fields that determine the record stream.

    Worker count, block size and output format are deliberately left
    out: they cannot change the rows, so any of them may vary between
    a run and its resume.
    """
    payload = json.dumps(
        {
            "schema_version": SCHEMA_VERSION,
            "n_lo": cfg.n_lo,
            "n_hi": cfg.n_hi,
            "include_half_t": cfg.include_half_t,
        },
        sort_keys=True,
        separators=(",", ":"),
    )
    return hashlib.sha256(payload.encode("ascii")).hexdigest()


def _scan_block_rows(n_lo: int, n_hi: int, include_half_t: bool) -> list[dict]:
    rows = []
    for n in range(n_lo, n_hi + 1):
        rows.extend(row_for_record(rec) for rec in scan_modulus(n, include_half_t))
    return rows


def _load_checkpoint(cfg: RunConfig) -> tuple[list[dict], int]:
    """Stored rows plus the first n still to scan."""
    path = cfg.checkpoint_path
    if path is None or not os.path.exists(path):
        return [], cfg.n_lo
    try:
        with open(path, "r", encoding="ascii") as fh:
            data = json.load(fh)
    except (OSError, ValueError) as exc:
        raise CheckpointMismatch(f"unreadable checkpoint {path}: {exc}") from None
    if data.get("schema_version") != SCHEMA_VERSION:
        raise CheckpointMismatch(f"checkpoint schema {data.get('schema_version')!r} unsupported")
    if data.get("fingerprint") != config_fingerprint(cfg):
        raise CheckpointMismatch("checkpoint belongs to a different search configuration")
    return data["rows"], data["high_water"] + 1


def _write_checkpoint(cfg: RunConfig, high_water: int, rows: list[dict]) -> None:
    path = cfg.checkpoint_path
    if path is None:
        return
    payload = {
        "schema_version": SCHEMA_VERSION,
        "fingerprint": config_fingerprint(cfg),
        "high_water": high_water,
        "rows": rows,
    }
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="ascii") as fh:
        json.dump(payload, fh, separators=(",", ":"))
    os.replace(tmp, path)


def run_search(cfg: RunConfig, emit, abort_after_blocks: int | None = None) -> RunSummary:
    """Drive the search, calling emit(row) in deterministic order.

    abort_after_blocks stops the run cleanly after that many newly
    completed blocks, leaving a valid checkpoint behind; tests use it to
    model a killed run.
    """
    done_rows, start = _load_checkpoint(cfg)
    kept_rows = list(done_rows)
    for row in kept_rows:
        emit(row)

    blocks = []
    lo = start
    while lo <= cfg.n_hi:
        hi = min(lo + cfg.block_size - 1, cfg.n_hi)
        blocks.append((lo, hi))
        lo = hi + 1

    fresh = 0
    aborted = False

    def finish_block(block, rows):
        nonlocal fresh, aborted
        for row in rows:
            emit(row)
        kept_rows.extend(rows)
        _write_checkpoint(cfg, block[1], kept_rows)
        fresh += 1
        if abort_after_blocks is not None and fresh >= abort_after_blocks:
            aborted = True

    if cfg.jobs <= 1:
        for block in blocks:
            finish_block(block, _scan_block_rows(block[0], block[1], cfg.include_half_t))
            if aborted:
                break
    elif blocks:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            pending = {
                pool.submit(_scan_block_rows, b[0], b[1], cfg.include_half_t): i
                for i, b in enumerate(blocks)
            }
            results: dict[int, list[dict]] = {}
            next_idx = 0
            while pending and not aborted:
                finished, _ = wait(pending, return_when=FIRST_COMPLETED)
                for fut in finished:
                    results[pending.pop(fut)] = fut.result()
                while next_idx in results and not aborted:
                    finish_block(blocks[next_idx], results.pop(next_idx))
                    next_idx += 1
            if aborted:
                for fut in pending:
                    fut.cancel()

    counts = {tag.value: 0 for tag in TAG_ORDER}
    for row in kept_rows:
        for tag in row["tags"]:
            counts[tag] += 1
    return RunSummary(counts=counts, total=len(kept_rows), aborted=aborted)
