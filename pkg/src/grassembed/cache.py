"""Append-only on-disk cache for expensive decompositions.

File layout: a sequence of entries, each a 4-byte big-endian length followed by
that many bytes of UTF-8 JSON ``{"key", "engine_version", "value"}``. Keys are
SHA-256 digests of the canonical (operation, arguments, schema version) triple.
The cache is advisory: a damaged file is ignored with a warning and rewritten
on the next store.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import struct
from pathlib import Path

from . import ENGINE_VERSION, SCHEMA_VERSION

log = logging.getLogger(__name__)

ENV_VAR = "GRASSEMBED_CACHE"
_HEADER = struct.Struct(">I")


def cache_key(op: str, args) -> str:
    blob = json.dumps([op, args, SCHEMA_VERSION], sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


class Cache:
    def __init__(self, path: str | os.PathLike, engine_version: str = ENGINE_VERSION):
        self.path = Path(path)
        self.engine_version = engine_version
        self.entries: dict[str, object] = {}
        self.corrupt = False
        self.hits = 0
        self.misses = 0
        self._load()

    def _load(self):
        try:
            data = self.path.read_bytes()
        except FileNotFoundError:
            return
        except OSError as exc:
            log.warning("cache %s unreadable (%s); ignoring it", self.path, exc)
            self.corrupt = True
            return
        entries = {}
        pos = 0
        try:
            while pos < len(data):
                if pos + _HEADER.size > len(data):
                    raise ValueError("truncated length header")
                (size,) = _HEADER.unpack_from(data, pos)
                pos += _HEADER.size
                if pos + size > len(data):
                    raise ValueError("truncated entry")
                record = json.loads(data[pos : pos + size].decode("utf-8"))
                pos += size
                if not isinstance(record, dict) or not {"key", "engine_version", "value"} <= record.keys():
                    raise ValueError("malformed entry")
                if record["engine_version"] == self.engine_version:
                    entries[record["key"]] = record["value"]
        except (ValueError, UnicodeDecodeError) as exc:
            log.warning("cache %s is corrupted (%s at byte %d); ignoring it", self.path, exc, pos)
            self.corrupt = True
            return
        self.entries = entries

    def get(self, op: str, args):
        key = cache_key(op, args)
        if key in self.entries:
            self.hits += 1
            return self.entries[key]
        self.misses += 1
        return None

    def put(self, op: str, args, value) -> None:
        key = cache_key(op, args)
        self.entries[key] = value
        payload = json.dumps(
            {"key": key, "engine_version": self.engine_version, "value": value},
            sort_keys=True,
            separators=(",", ":"),
        ).encode()
        mode = "ab"
        if self.corrupt:
            # start over rather than append after garbage
            mode = "wb"
            self.corrupt = False
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with open(self.path, mode) as fh:
                fh.write(_HEADER.pack(len(payload)) + payload)
        except OSError as exc:
            log.warning("could not write cache %s: %s", self.path, exc)


def resolve_cache(path: str | None, disabled: bool) -> Cache | None:
    """Flag beats environment; no path anywhere means no cache."""
    if disabled:
        return None
    path = path or os.environ.get(ENV_VAR)
    return Cache(path) if path else None


def cached(cache: Cache | None, op: str, args, compute, dump, load):
    if cache is None:
        return compute()
    hit = cache.get(op, args)
    if hit is not None:
        try:
            return load(hit)
        except (KeyError, TypeError, ValueError) as exc:
            log.warning("discarding unusable cache entry for %s%s: %s", op, args, exc)
    value = compute()
    cache.put(op, args, dump(value))
    return value
