"""CSV / JSON export, report envelopes and the on-disk table cache.

Big integers are always written as decimal strings.
"""
from __future__ import annotations

import csv
import hashlib
import io
import json
import os
import random
from pathlib import Path

import numpy as np

from .partitions import INT64_SAFE, PolyTable, partition_table
from .sets import SetSpec, parse_spec
from .sums import SumTable

SCHEMA_VERSION = 1
CACHE_ENV = "SIGNPART_CACHE_DIR"
SPOT_CHECK_ROWS = 3
SPOT_CHECK_MAX_ROW = 150


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def envelope(kind: str, config: dict, payload, wall_time: float | None = None) -> str:
    """Wrap a payload with schema version, config and a hash of the payload.

    ``wall_time`` sits outside the hashed part so reruns hash identically.
    """
    body = {"schema_version": SCHEMA_VERSION, "kind": kind, "config": config, "payload": payload}
    digest = hashlib.sha256(canonical_json(body).encode()).hexdigest()
    out = dict(body, payload_sha256=digest)
    if wall_time is not None:
        out["wall_time_s"] = round(wall_time, 3)
    return json.dumps(out, sort_keys=True, indent=1, ensure_ascii=False) + "\n"


def _csv(rows, header):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


# --------------------------------------------------------------- poly tables

def table_rows(table: PolyTable) -> list[list[str]]:
    return [[str(c) for c in table.row(n).coeffs] or ["0"] for n in range(table.bound + 1)]


def table_to_csv(table: PolyTable) -> str:
    """``n,i,c`` triples for every nonzero coefficient."""
    rows = []
    for n in range(table.bound + 1):
        for i, c in enumerate(table.row(n).coeffs):
            if c:
                rows.append((n, i, str(c)))
    return _csv(rows, ("n", "i", "c"))


def table_payload(table: PolyTable) -> dict:
    return {"spec": str(table.spec), "N": table.bound, "parts": list(table.parts), "rows": table_rows(table)}


def table_from_payload(obj: dict) -> PolyTable:
    spec = parse_spec(obj["spec"])
    N = obj["N"]
    rows = [[int(c) for c in r] for r in obj["rows"]]
    if len(rows) != N + 1:
        raise ValueError("row count does not match N")
    parts = spec.upto(N)
    width = (N // parts[0] + 1) if parts else 1
    data = np.zeros((N + 1, width), dtype=object)
    for n, r in enumerate(rows):
        data[n, : len(r)] = r
    max_count = max(sum(r) for r in rows)
    if max_count < INT64_SAFE:
        data = data.astype(np.int64)
    return PolyTable(spec, N, tuple(parts), data, max_count)


# ---------------------------------------------------------------- sum tables

def sums_to_csv(table: SumTable) -> str:
    rows = [(k, n, str(table[k, n])) for k in range(table.K + 1) for n in range(table.N + 1)]
    return _csv(rows, ("k", "n", "S"))


def sums_payload(table: SumTable) -> dict:
    return {
        "spec": str(table.spec), "K": table.K, "N": table.N, "method": table.method,
        "values": [[str(v) for v in row] for row in table.values],
    }


def u_table_to_csv(values) -> str:
    rows = [(n, i, str(c)) for n, v in enumerate(values) for i, c in enumerate(v.coeffs)]
    return _csv(rows, ("n", "i", "u"))


# --------------------------------------------------------------------- cache

def cache_dir(explicit: str | None = None) -> Path | None:
    d = explicit or os.environ.get(CACHE_ENV)
    return Path(d) if d else None


def cache_key(spec: SetSpec, N: int) -> str:
    h = hashlib.sha256(str(spec).encode()).hexdigest()[:20]
    return f"{h}_N{N}.json"


class CacheMismatch(RuntimeError):
    pass


def load_or_build(spec: SetSpec, N: int, directory: Path | None) -> PolyTable:
    """Partition table through the cache.

    Reloaded tables are spot-checked: three rows picked deterministically from
    the key are recomputed from scratch and must agree coefficientwise.
    """
    if directory is None:
        return partition_table(spec, N)
    path = Path(directory) / cache_key(spec, N)
    if path.exists():
        obj = json.loads(path.read_text())
        if obj.get("spec") != str(spec) or obj.get("N") != N:
            raise CacheMismatch(f"cache file {path} holds a different table")
        table = table_from_payload(obj)
        rng = random.Random(cache_key(spec, N))
        top = min(N, SPOT_CHECK_MAX_ROW)
        picks = sorted(rng.randint(0, top) for _ in range(SPOT_CHECK_ROWS))
        fresh = partition_table(spec, picks[-1])
        for n in picks:
            if fresh.row(n) != table.row(n):
                raise CacheMismatch(f"cached row {n} of {spec} differs from a fresh computation")
        return table
    table = partition_table(spec, N)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(canonical_json(table_payload(table)))
    tmp.replace(path)
    return table
