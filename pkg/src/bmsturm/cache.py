"""Append-only on-disk store for Boros-Moll rows.

The file is line-delimited JSON: a header line carrying the format
version, then one ``{"n": ..., "d": ["num/den", ...]}`` record per row.
"""
from __future__ import annotations

import json
import os
import threading
from pathlib import Path
from typing import Iterator

from .boros_moll import BMRow

FORMAT = "bmsturm-rows"
VERSION = 1
ENV_VAR = "BMSTURM_CACHE"


class CacheFormatError(ValueError):
    pass


class RowStore:
    def __init__(self, path):
        self.path = Path(path)
        self._lock = threading.Lock()

    def _header(self) -> str:
        return json.dumps({"format": FORMAT, "version": VERSION}, sort_keys=True)

    def load(self) -> Iterator[BMRow]:
        if not self.path.exists():
            return
        with self.path.open("r", encoding="utf-8") as fh:
            first = fh.readline()
            if not first.strip():
                return
            try:
                head = json.loads(first)
            except json.JSONDecodeError as exc:
                raise CacheFormatError(f"{self.path}: unreadable header") from exc
            if head.get("format") != FORMAT or head.get("version") != VERSION:
                raise CacheFormatError(f"{self.path}: unsupported cache header {head!r}")
            for lineno, line in enumerate(fh, start=2):
                if not line.strip():
                    continue
                try:
                    yield BMRow.from_record(json.loads(line))
                except (ValueError, KeyError) as exc:
                    raise CacheFormatError(f"{self.path}:{lineno}: bad row record") from exc

    def append(self, row: BMRow) -> None:
        line = json.dumps(row.to_record(), separators=(",", ":"))
        with self._lock:
            fresh = not self.path.exists() or self.path.stat().st_size == 0
            with self.path.open("a", encoding="utf-8") as fh:
                if fresh:
                    fh.write(self._header() + "\n")
                fh.write(line + "\n")


def default_cache_path():
    return os.environ.get(ENV_VAR) or None
