"""Irreducible characters of the symmetric group.

Character values chi^lambda_mu are computed by the Murnaghan-Nakayama
border-strip recursion, phrased on beta-numbers (first-column hook
lengths).  For a partition lambda with r rows, the beta-set is

    B = { lambda_i + (r - i) : i = 1..r },

a set of r distinct nonnegative integers.  Removing a border strip of
length s from lambda corresponds to picking b in B with b - s >= 0 and
b - s not in B, and replacing b by b - s; the height of the strip is the
number of elements of B strictly between b - s and b.  So

    chi^lambda_(s, rest) = sum over such b of (-1)^height * chi^(lambda')_rest,

which we memoize on (lambda, mu).  This handles d up to the configured
table maximum (default 10) instantly and stays fast well beyond it when
only a few columns of the table are needed.

Full tables can be cached on disk, one JSON file per d.  Cache files are
versioned, written atomically (temporary file, then rename), and ignored
and recomputed if corrupt.  Completed tables are immutable; concurrent
readers are safe.
"""

import json
import os
import tempfile
from dataclasses import dataclass
from functools import cache

from .partitions import Partition, partitions_of, z_order

CACHE_FORMAT_VERSION = 1
DEFAULT_MAX_TABLE_D = 10

_memory_tables: dict[int, "CharacterTable"] = {}


def _beta_set(lam: Partition) -> tuple[int, ...]:
    r = len(lam)
    return tuple(lam[i] + (r - 1 - i) for i in range(r))


def _partition_from_beta(beta: list[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    r = len(beta)
    return tuple(b - (r - 1 - i) for i, b in enumerate(beta) if b - (r - 1 - i) > 0)


@cache
def character(lam: Partition, mu: Partition) -> int:
    """Character value chi^lambda_mu, both partitions of the same d."""
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{lam!r}| != |{mu!r}|")
    return _char(lam, mu)


@cache
def _char(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1
    s, rest = mu[0], mu[1:]
    beta = _beta_set(lam)
    present = set(beta)
    total = 0
    for b in beta:
        lo = b - s
        if lo < 0 or lo in present:
            continue
        height = sum(1 for c in beta if lo < c < b)
        new_beta = [lo if c == b else c for c in beta]
        term = _char(_partition_from_beta(new_beta), rest)
        total += -term if height % 2 else term
    return total


def sign_of_class(mu: Partition) -> int:
    """Sign (+1 or -1) of the permutations with cycle type mu."""
    return -1 if (sum(mu) - len(mu)) % 2 else 1


@dataclass(frozen=True)
class CharacterTable:
    """Complete character table of S(d).

    ``order`` is the canonical reverse-lexicographic list of partitions of
    d; ``entries[i][j]`` is chi^lambda_mu for lambda = order[i] (row) and
    mu = order[j] (column).
    """

    d: int
    order: tuple[Partition, ...]
    entries: tuple[tuple[int, ...], ...]

    def index(self, p: Partition) -> int:
        return self.order.index(p)

    def value(self, lam: Partition, mu: Partition) -> int:
        return self.entries[self.index(lam)][self.index(mu)]

    def column(self, mu: Partition) -> tuple[int, ...]:
        j = self.index(mu)
        return tuple(row[j] for row in self.entries)

    def to_json_obj(self) -> dict:
        return {
            "version": CACHE_FORMAT_VERSION,
            "d": self.d,
            "order": [list(p) for p in self.order],
            "entries": [list(row) for row in self.entries],
        }


def _compute_table(d: int) -> CharacterTable:
    order = partitions_of(d)
    # Row-parallel construction would be deterministic here too; rows are
    # independent given the memoized recursion.
    entries = tuple(tuple(character(lam, mu) for mu in order) for lam in order)
    return CharacterTable(d=d, order=order, entries=entries)


def _cache_path(cache_dir: str, d: int) -> str:
    return os.path.join(cache_dir, f"character-table-{d}.json")


def _load_cached(cache_dir: str, d: int) -> CharacterTable | None:
    path = _cache_path(cache_dir, d)
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
        if obj.get("version") != CACHE_FORMAT_VERSION or obj.get("d") != d:
            return None
        order = tuple(tuple(p) for p in obj["order"])
        entries = tuple(tuple(int(x) for x in row) for row in obj["entries"])
        if order != partitions_of(d) or len(entries) != len(order):
            return None
        if any(len(row) != len(order) for row in entries):
            return None
        return CharacterTable(d=d, order=order, entries=entries)
    except (OSError, ValueError, KeyError, TypeError):
        # Corrupt or unreadable cache files are never trusted.
        return None


def _store_cached(cache_dir: str, table: CharacterTable) -> None:
    os.makedirs(cache_dir, exist_ok=True)
    payload = json.dumps(table.to_json_obj(), sort_keys=True, separators=(",", ":"))
    fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(payload)
        os.replace(tmp, _cache_path(cache_dir, table.d))
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def character_table(
    d: int,
    cache_dir: str | None = None,
    max_d: int = DEFAULT_MAX_TABLE_D,
) -> CharacterTable:
    """Full character table of S(d), 1 <= d <= max_d.

    With ``cache_dir`` set, a valid cached file is loaded verbatim and a
    freshly computed table is written back atomically.
    """
    if d < 1 or d > max_d:
        raise ValueError(f"character_table requires 1 <= d <= {max_d}, got {d}")
    if d in _memory_tables:
        table = _memory_tables[d]
        if cache_dir is not None and not os.path.exists(_cache_path(cache_dir, d)):
            _store_cached(cache_dir, table)
        return table
    table = None
    if cache_dir is not None:
        table = _load_cached(cache_dir, d)
    if table is None:
        table = _compute_table(d)
        if cache_dir is not None:
            _store_cached(cache_dir, table)
    _memory_tables[d] = table
    return table
