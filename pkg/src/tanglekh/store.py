"""On-disk cache for invariant tables.

Entries are JSON files keyed by (kind, parameters, engine version) and carry a
sha256 checksum of their payload.  A missing, corrupt or stale entry is a
miss; the cache never affects results.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path
from typing import Callable

ENV_VAR = "TANGLEKH_CACHE_DIR"


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def checksum(payload) -> str:
    return hashlib.sha256(canonical_json(payload).encode()).hexdigest()


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(base) / "tanglekh"


class TableCache:
    def __init__(self, root: str | os.PathLike | None = None, engine_version: str | None = None):
        if engine_version is None:
            from . import ENGINE_VERSION as engine_version
        self.root = Path(root) if root is not None else default_cache_dir()
        self.engine_version = engine_version

    def key(self, kind: str, params: dict) -> dict:
        return {"kind": kind, "params": params, "engine": self.engine_version}

    def path(self, kind: str, params: dict) -> Path:
        digest = hashlib.sha256(canonical_json(self.key(kind, params)).encode()).hexdigest()[:24]
        return self.root / f"{kind}-{digest}.json"

    def get(self, kind: str, params: dict):
        """Cached payload, or None on a miss."""
        try:
            entry = json.loads(self.path(kind, params).read_text())
        except (OSError, ValueError):
            return None
        if not isinstance(entry, dict) or entry.get("key") != self.key(kind, params):
            return None
        if entry.get("checksum") != checksum(entry.get("payload")):
            return None
        return entry["payload"]

    def put(self, kind: str, params: dict, payload) -> None:
        entry = {"key": self.key(kind, params), "payload": payload, "checksum": checksum(payload)}
        target = self.path(kind, params)
        try:
            self.root.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.root, prefix=".tmp-", suffix=".json")
        except OSError:
            return  # the cache is best effort
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(canonical_json(entry))
            os.replace(tmp, target)
        except OSError:
            try:
                os.unlink(tmp)
            except OSError:
                pass

    def get_or_compute(self, kind: str, params: dict, compute: Callable[[], object]):
        payload = self.get(kind, params)
        if payload is None:
            payload = compute()
            self.put(kind, params, payload)
        return payload
