"""On-disk cache for results that are reused across commands.

Entries are JSON files keyed by (kind, k, package version) and carry a
SHA-256 checksum of their canonical payload; an entry whose checksum does not
match is treated as a miss and overwritten.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable

from . import __version__

KINDS = ("hasse", "submonoid-lattice", "counts")
ENV_VAR = "UBP_CACHE_DIR"
DEFAULT_DIR = ".ubp-cache"


def canonical(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def checksum(payload: Any) -> str:
    return hashlib.sha256(canonical(payload).encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class CacheEntry:
    k: int
    kind: str
    payload: Any
    checksum: str

    @classmethod
    def build(cls, k: int, kind: str, payload: Any) -> CacheEntry:
        if kind not in KINDS:
            raise ValueError(f"unknown cache kind {kind!r}")
        return cls(k, kind, payload, checksum(payload))

    def is_valid(self) -> bool:
        return checksum(self.payload) == self.checksum

    def to_json(self) -> dict:
        return {"k": self.k, "kind": self.kind, "version": __version__, "checksum": self.checksum, "payload": self.payload}


def cache_dir() -> Path:
    return Path(os.environ.get(ENV_VAR, DEFAULT_DIR))


def _path(kind: str, k: int, root: Path | None) -> Path:
    return (root or cache_dir()) / f"{kind}-k{k}-v{__version__}.json"


def load(kind: str, k: int, root: Path | None = None) -> CacheEntry | None:
    path = _path(kind, k, root)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
        entry = CacheEntry(int(data["k"]), data["kind"], data["payload"], data["checksum"])
    except (OSError, ValueError, KeyError, TypeError):
        return None
    if entry.k != k or entry.kind != kind or not entry.is_valid():
        return None
    return entry


def store(kind: str, k: int, payload: Any, root: Path | None = None) -> CacheEntry:
    entry = CacheEntry.build(k, kind, payload)
    path = _path(kind, k, root)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(entry.to_json(), ensure_ascii=False), encoding="utf-8")
    tmp.replace(path)
    return entry


def cached(kind: str, k: int, compute: Callable[[], Any], enabled: bool = True, root: Path | None = None) -> Any:
    """Return the cached payload, computing and storing it on a miss."""
    if enabled:
        hit = load(kind, k, root)
        if hit is not None:
            return hit.payload
    payload = compute()
    if enabled:
        store(kind, k, payload, root)
    return payload
