"""Content-addressed on-disk cache of double coset tables.

A table for (family, r, n) lists every double coset of every pair of
compositions with its stabilizer counts. Files are named by the sha256 of the
key; the first line holds the sha256 of the payload so tampering is detected.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
import warnings
from pathlib import Path

from .cosets import coset_table
from .monoid import Family
from .shapes import enumerate_compositions

ENV_VAR = "GSCHUR_CACHE_DIR"
FORMAT_VERSION = 1


class CacheWarning(UserWarning):
    pass


def dumps(obj) -> bytes:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, separators=(",", ":")).encode("utf-8")


def default_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "gschur"


def cache_key(family: Family | str, r: int, n: int) -> str:
    family = Family.parse(family)
    return f"cosets/v{FORMAT_VERSION}/{family.value}/r={r}/n={n}"


def cache_path(family: Family | str, r: int, n: int, cache_dir: str | Path | None = None) -> Path:
    digest = hashlib.sha256(cache_key(family, r, n).encode()).hexdigest()
    return Path(cache_dir or default_dir()) / f"{digest}.json"


def compute_table(family: Family | str, r: int, n: int) -> bytes:
    family = Family.parse(family)
    rows = []
    comps = enumerate_compositions(r, n)
    for lam in comps:
        for mu in comps:
            t = coset_table(family, lam, mu)
            for rep in t.reps:
                row = {"lambda": list(lam), "mu": list(mu), "rep": list(rep)}
                row.update(t.counts(rep).to_json())
                rows.append(row)
    return dumps({"family": family.value, "r": r, "n": n, "version": FORMAT_VERSION,
                  "cosets": rows})


def cache_put(family: Family | str, r: int, n: int, payload: bytes,
              cache_dir: str | Path | None = None) -> Path:
    path = cache_path(family, r, n, cache_dir)
    path.parent.mkdir(parents=True, exist_ok=True)
    blob = hashlib.sha256(payload).hexdigest().encode() + b"\n" + payload
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(blob)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def cache_get(family: Family | str, r: int, n: int,
              cache_dir: str | Path | None = None) -> bytes | None:
    """Cached payload, or None when missing or corrupt (corruption warns)."""
    path = cache_path(family, r, n, cache_dir)
    try:
        blob = path.read_bytes()
    except FileNotFoundError:
        return None
    head, sep, payload = blob.partition(b"\n")
    if not sep or hashlib.sha256(payload).hexdigest().encode() != head:
        warnings.warn(f"checksum mismatch in {path}; recomputing", CacheWarning, stacklevel=2)
        return None
    return payload


def load_table(family: Family | str, r: int, n: int,
               cache_dir: str | Path | None = None) -> tuple[bytes, bool]:
    """Payload bytes and whether they came from the cache."""
    payload = cache_get(family, r, n, cache_dir)
    if payload is not None:
        return payload, True
    payload = compute_table(family, r, n)
    cache_put(family, r, n, payload, cache_dir)
    return payload, False
