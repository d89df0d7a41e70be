"""On-disk store for computed F_{g,n}, one JSON file per (g, n).

Files carry a schema version; anything unreadable, malformed or from another
schema is ignored (and removed) so the value is simply recomputed. Writes go
to a temporary file in the same directory and are renamed into place.
"""
from __future__ import annotations

import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Optional

from .algebra import LaurentPolynomial, poly_from_records, poly_to_records

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1
ENV_VAR = "CATALAN_CACHE_DIR"


def default_cache_dir() -> Optional[Path]:
    value = os.environ.get(ENV_VAR)
    return Path(value) if value else None


class DiskCache:
    def __init__(self, root: os.PathLike | str):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)

    def path(self, g: int, n: int) -> Path:
        return self.root / f"F_g{g}_n{n}.json"

    def load(self, g: int, n: int) -> Optional[LaurentPolynomial]:
        p = self.path(g, n)
        if not p.exists():
            return None
        try:
            doc = json.loads(p.read_text())
            if doc.get("schema") != SCHEMA_VERSION or doc.get("g") != g or doc.get("n") != n:
                raise ValueError("schema or key mismatch")
            poly = poly_from_records(doc["terms"], n)
            if poly.degree() != 3 * (2 * g - 2 + n):
                raise ValueError("stored polynomial has the wrong degree")
            return poly
        except (OSError, ValueError, KeyError, TypeError, AttributeError, ZeroDivisionError) as exc:
            log.warning("discarding cache entry %s: %s", p, exc)
            try:
                p.unlink()
            except OSError:
                pass
            return None

    def save(self, g: int, n: int, poly: LaurentPolynomial) -> None:
        doc = {"schema": SCHEMA_VERSION, "g": g, "n": n, "terms": poly_to_records(poly)}
        fd, tmp = tempfile.mkstemp(dir=self.root, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump(doc, fh, sort_keys=True)
            os.replace(tmp, self.path(g, n))
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise
