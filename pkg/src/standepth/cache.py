"""Append-only JSONL result cache keyed by canonical input hashes.

One record per line: {"key": ..., "op": ..., "value": ..., "certificate":
..., "engine": ...}.  The key hashes the operation name, the canonical
serialization of the module, the characteristic, the box, and the engine
version, so any change to those invalidates the entry by construction.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path

from .monomials import QuotientModule

ENGINE_VERSION = "0.1.0"


@dataclass(frozen=True)
class CacheRecord:
    key: str
    operation: str
    value: int
    certificate: dict | None
    engine: str


def cache_key(
    operation: str,
    module: QuotientModule,
    characteristic: int | None = None,
    box=None,
    engine: str = ENGINE_VERSION,
) -> str:
    payload = {
        "op": operation,
        "arity": module.arity,
        "top": [list(g) for g in module.top.gens],
        "bottom": [list(g) for g in module.bottom.gens],
        "char": characteristic,
        "box": list(box) if box is not None else None,
        "engine": engine,
    }
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


class ResultCache:
    """Cache backed by one JSONL file; records are never rewritten."""

    def __init__(self, path):
        self.path = Path(path)
        self._records: dict[str, CacheRecord] = {}
        if self.path.exists():
            for line in self.path.read_text().splitlines():
                if not line.strip():
                    continue
                doc = json.loads(line)
                record = CacheRecord(
                    doc["key"], doc["op"], doc["value"], doc.get("certificate"), doc["engine"]
                )
                self._records.setdefault(record.key, record)

    def get(self, key: str) -> CacheRecord | None:
        return self._records.get(key)

    def put(self, record: CacheRecord) -> None:
        if record.key in self._records:
            return
        self._records[record.key] = record
        with self.path.open("a") as fh:
            fh.write(
                json.dumps(
                    {
                        "key": record.key,
                        "op": record.operation,
                        "value": record.value,
                        "certificate": record.certificate,
                        "engine": record.engine,
                    },
                    sort_keys=True,
                )
                + "\n"
            )
