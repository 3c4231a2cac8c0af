"""On-disk JSON cache of computed count tables.

One file per (variant, k), named ``<variant>-k<k>.json``::

    {"k": 3, "variant": "plain",
     "entries": [{"n": 7, "l": null, "count": "105"}, ...]}

Counts are strings because they outgrow 64-bit integers quickly.  Writes go
to a temporary file in the same directory followed by an atomic rename.
"""
from __future__ import annotations

import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Dict, Optional, Tuple

log = logging.getLogger(__name__)

ENV_VAR = "PSEUDOKNOT_CACHE"

Key = Tuple[int, Optional[int]]


def resolve_cache_dir(flag: Optional[str]) -> Optional[Path]:
    """The ``--cache-dir`` flag wins over the environment; None disables caching."""
    value = flag if flag else os.environ.get(ENV_VAR)
    return Path(value) if value else None


def _sort_key(key: Key):
    n, l = key
    return (n, -1 if l is None else l)


class TableCache:
    def __init__(self, directory):
        self.directory = Path(directory)

    def path(self, variant: str, k: int) -> Path:
        return self.directory / f"{variant}-k{k}.json"

    def load(self, variant: str, k: int) -> Dict[Key, int]:
        path = self.path(variant, k)
        if not path.exists():
            return {}
        try:
            doc = json.loads(path.read_text(encoding="utf-8"))
            if doc["k"] != k or doc["variant"] != variant:
                raise ValueError("header does not match file name")
            out = {}
            for e in doc["entries"]:
                n, l, c = e["n"], e["l"], e["count"]
                if not isinstance(n, int) or not (l is None or isinstance(l, int)):
                    raise ValueError(f"bad entry {e!r}")
                if not isinstance(c, str):
                    raise ValueError(f"count must be a string in {e!r}")
                out[(n, l)] = int(c)
            return out
        except (OSError, ValueError, KeyError, TypeError) as exc:
            log.warning("ignoring corrupt cache file %s: %s", path, exc)
            return {}

    def store(self, variant: str, k: int, table: Dict[Key, int]) -> None:
        self.directory.mkdir(parents=True, exist_ok=True)
        doc = {
            "k": k,
            "variant": variant,
            "entries": [{"n": n, "l": l, "count": str(table[(n, l)])}
                        for n, l in sorted(table, key=_sort_key)],
        }
        fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(doc, fh, indent=1)
                fh.write("\n")
            os.replace(tmp, self.path(variant, k))
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
