"""
Persistent memo of Kostka numbers.

The cache maps a condition multiset, stored as a weakly decreasing tuple, to
its exact count. On disk it is a JSON-lines file, one object per line:

    {"problem": [3, 2, 2, 2, 1], "kostka": "5"}

Counts are decimal strings so that arbitrary precision survives JSON.
Concurrent writers of the same key always store the same value, so the
last writer wins without harm.
"""
import json
import logging
import os
from pathlib import Path
from typing import Dict, Iterable, Optional, Tuple, Union

from schublines.utils.constants import CACHE_DIR_ENV, CACHE_FILE_NAME

logger = logging.getLogger(__name__)

Key = Tuple[int, ...]

class KostkaCache:
    """
    Dictionary-backed memo of Kostka numbers with optional JSON-lines
    persistence.

    Example:
    cache = KostkaCache.from_environment()
    cache.put((2, 2), 1)
    cache.flush()
    """
    def __init__(self, path: Optional[Union[Path, str]]=None):
        self.path = Path(path) if path is not None else None
        self._values: Dict[Key, int] = {}
        self._pending: Dict[Key, int] = {}
        if self.path is not None and self.path.is_file():
            self.load(self.path)

    @classmethod
    def from_environment(cls) -> "KostkaCache":
        """
        Build a cache persisted in `$SCHUBLINES_CACHE_DIR/kostka.jsonl`, or an
        in-memory cache when the variable is unset.
        """
        directory = os.environ.get(CACHE_DIR_ENV)
        if not directory:
            return cls()

        directory = Path(directory)
        if not directory.is_dir():
            Path.mkdir(directory, parents=True)
        return cls(directory.joinpath(CACHE_FILE_NAME))

    def __len__(self) -> int:
        return len(self._values)

    def __contains__(self, key: Iterable[int]) -> bool:
        return self._key(key) in self._values

    @staticmethod
    def _key(key: Iterable[int]) -> Key:
        return tuple(sorted((int(k) for k in key), reverse=True))

    def get(self, key: Iterable[int]) -> Optional[int]:
        return self._values.get(self._key(key))

    def put(self, key: Iterable[int], value: int) -> None:
        key = self._key(key)
        if key not in self._values:
            self._pending[key] = value
        self._values[key] = value

    def load(self, path: Union[Path, str]) -> int:
        """
        Read a JSON-lines file into the cache and return the number of
        entries read. Malformed lines are skipped with a warning.
        """
        n_read = 0
        with open(path, "r", encoding="utf-8") as handle:
            for line_number, line in enumerate(handle, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    entry = json.loads(line)
                    key = self._key(entry["problem"])
                    value = int(entry["kostka"])
                except (ValueError, KeyError, TypeError) as e:
                    logger.warning("%s:%d: skipping malformed entry (%s)",
                                   path, line_number, e)
                    continue
                self._values[key] = value
                n_read += 1
        logger.debug("loaded %d cached counts from %s", n_read, path)
        return n_read

    def flush(self) -> int:
        """
        Append the entries added since the last flush to the backing file
        and return their number. A cache without backing file is a no-op.
        """
        if self.path is None or not self._pending:
            self._pending.clear()
            return 0

        with open(self.path, "a", encoding="utf-8") as handle:
            for key, value in self._pending.items():
                handle.write(json.dumps(
                    {"problem": list(key), "kostka": str(value)}
                ) + "\n")
        n_written = len(self._pending)
        self._pending.clear()
        logger.debug("appended %d counts to %s", n_written, self.path)
        return n_written
