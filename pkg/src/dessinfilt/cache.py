"""
JSON-lines cache of enumerated classes.

One file per edge count and mode, ``dessins_n<k>_<mode>.jsonl``. The first
line is the header ``{"format": 1}``; every following line is a Dessin JSON
object (the canonical representative) with ``key`` and ``passport`` fields.
"""
from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

from .dessin import Dessin, DessinError, canonical_form, from_key, passport
from .enumeration import DEFAULT_BOUND, BasisWindow, _check_mode, enumerate_exact

FORMAT = 1


class CacheError(RuntimeError):
    pass


def cache_path(cache_dir, n: int, mode: str) -> Path:
    return Path(cache_dir) / f"dessins_n{n}_{mode}.jsonl"


def _record(key: str) -> dict:
    D = from_key(key)
    rec = D.to_json()
    rec["key"] = key
    rec["passport"] = passport(D).to_json()
    return rec


def save_block(cache_dir, n: int, mode: str, keys) -> Path:
    path = cache_path(cache_dir, n, mode)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [json.dumps({"format": FORMAT})]
    lines += [json.dumps(_record(k), separators=(",", ":")) for k in sorted(keys)]
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    with os.fdopen(fd, "w") as f:
        f.write("\n".join(lines) + "\n")
    os.replace(tmp, path)
    return path


def load_block(cache_dir, n: int, mode: str) -> list[str] | None:
    """Keys stored for ``(n, mode)``, or ``None`` on a cache miss. Every record is re-validated."""
    path = cache_path(cache_dir, n, mode)
    if not path.exists():
        return None
    keys = []
    with open(path) as f:
        for lineno, line in enumerate(f, 1):
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as e:
                raise CacheError(f"{path}:{lineno}: invalid JSON ({e.msg})") from None
            if lineno == 1:
                if not isinstance(obj, dict) or obj.get("format") != FORMAT:
                    found = obj.get("format") if isinstance(obj, dict) else None
                    raise CacheError(f"{path}: cache format version mismatch "
                                     f"(found {found!r}, expected {FORMAT})")
                continue
            try:
                D = Dessin.from_json(obj)
                key = canonical_form(D)[0]
            except DessinError as e:
                raise CacheError(f"{path}:{lineno}: {e}") from None
            if obj.get("key") != key or D.edges != n:
                raise CacheError(f"{path}:{lineno}: record is not the canonical representative of its key")
            if obj.get("passport") != passport(D).to_json():
                raise CacheError(f"{path}:{lineno}: passport does not match the dessin")
            keys.append(key)
    if keys != sorted(set(keys)):
        raise CacheError(f"{path}: keys are not sorted and unique")
    return keys


def cached_enumerate(n: int, mode: str, cache_dir=None, bound: int = DEFAULT_BOUND, workers: int = 1) -> list[str]:
    if cache_dir is None:
        return enumerate_exact(n, mode, bound, workers)
    keys = load_block(cache_dir, n, mode)
    if keys is None:
        keys = enumerate_exact(n, mode, bound, workers)
        save_block(cache_dir, n, mode, keys)
    return keys


def load_window(N: int, mode: str = "all", include_empty: bool = True, cache_dir=None,
                bound: int = DEFAULT_BOUND, workers: int = 1) -> BasisWindow:
    """Like :func:`enumerate_window`, reading and filling the cache when ``cache_dir`` is given."""
    _check_mode(mode)
    blocks = [cached_enumerate(n, mode, cache_dir, bound, workers) for n in range(N + 1)]
    return BasisWindow.from_blocks(N, blocks, mode, include_empty)


def cache_roundtrip(window: BasisWindow, cache_dir) -> BasisWindow:
    """Save every block of ``window`` and load it back."""
    for n in range(window.max_edges + 1):
        block = window.keys_with_edges(n)
        if n == 0 and window.mode == "all":
            block = ["0:/"]
        save_block(cache_dir, n, window.mode, block)
    blocks = [load_block(cache_dir, n, window.mode) for n in range(window.max_edges + 1)]
    return BasisWindow.from_blocks(window.max_edges, blocks, window.mode, window.include_empty)
