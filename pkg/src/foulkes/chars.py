"""Ordinary characters of S_n via the Murnaghan-Nakayama rule.

Provides exact class data (centralizer orders, class sizes), single
character values, full cached character tables, and exact inner products
of class functions.  No floating point anywhere.

The border-strip recursion runs on a compiled kernel when the extension
built, with a pure-Python kernel as fallback; set FOULKES_FORCE_PURE=1 to
force the fallback.  Both produce identical integers.
"""

import json
import math
import os
import warnings
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import _mn_py
from .errors import CacheCorrupt, DomainMismatch, LimitExceeded, SizeMismatch
from .partitions import Partition, partitions_of

if os.environ.get("FOULKES_FORCE_PURE"):
    _mn = _mn_py
else:
    try:
        from . import _mn_cy as _mn
    except ImportError:
        _mn = _mn_py

MN_BACKEND = _mn.BACKEND

DEFAULT_MAX_DEGREE = 24
CACHE_FORMAT_VERSION = 1


def _kernel_for(n):
    if n > getattr(_mn, "MAX_N", n):
        return _mn_py
    return _mn


@dataclass(frozen=True)
class ClassData:
    cycle_type: Partition
    centralizer_order: int
    class_size: int


def class_data(rho):
    """Exact centralizer order z_rho and class size n!/z_rho."""
    z = 1
    mult = {}
    for part in rho:
        mult[part] = mult.get(part, 0) + 1
    for part, m in mult.items():
        z *= part**m * math.factorial(m)
    return ClassData(rho, z, math.factorial(rho.size) // z)


def mn_character(lam, rho):
    """chi^lam(rho) by signed border-strip removal, longest cycle first."""
    if lam.size != rho.size:
        raise SizeMismatch(f"|{lam}| = {lam.size} but |{rho}| = {rho.size}")
    return _kernel_for(lam.size).value(tuple(lam), tuple(rho))


def mn_row(lam, rhos):
    """chi^lam on many cycle types with one shared memo."""
    return _kernel_for(lam.size).row(tuple(lam), [tuple(r) for r in rhos])


class CharacterTable:
    """Integer matrix chi^lam(rho), rows and columns in reverse-lex order."""

    def __init__(self, n, partitions, values):
        self.n = n
        self.partitions = list(partitions)
        self.values = [list(r) for r in values]
        self._index = {lam: i for i, lam in enumerate(self.partitions)}
        # revlex puts the identity class (1^n) in the last column
        self._identity_col = self._index[Partition((1,) * n)]
        for i, lam in enumerate(self.partitions):
            if self.values[i][self._identity_col] <= 0:
                raise ValueError(f"degree of chi^{lam} not positive")
            if any(not isinstance(v, int) for v in self.values[i]):
                raise ValueError("character table entries must be integers")

    def index(self, lam):
        return self._index[lam]

    def value(self, lam, rho):
        return self.values[self._index[lam]][self._index[rho]]

    def degree(self, lam):
        return self.values[self._index[lam]][self._identity_col]

    def row_function(self, lam):
        """chi^lam as a class function: mapping cycle type -> value."""
        row = self.values[self._index[lam]]
        return dict(zip(self.partitions, row))


def cache_path(cache_dir, n):
    return Path(cache_dir) / f"chartab-{n}.json"


def _load_cache(path, n, expected):
    try:
        with open(path, "r", encoding="ascii") as fh:
            data = json.load(fh)
    except (OSError, ValueError) as exc:
        raise CacheCorrupt(f"{path}: unreadable ({exc})") from exc
    if not isinstance(data, dict):
        raise CacheCorrupt(f"{path}: not a JSON object")
    if data.get("version") != CACHE_FORMAT_VERSION:
        raise CacheCorrupt(f"{path}: version {data.get('version')!r}")
    if data.get("n") != n or data.get("order") != "revlex":
        raise CacheCorrupt(f"{path}: wrong header for n={n}")
    parts = data.get("partitions")
    values = data.get("values")
    if parts != [list(lam) for lam in expected]:
        raise CacheCorrupt(f"{path}: partition list mismatch")
    if (
        not isinstance(values, list)
        or len(values) != len(expected)
        or any(
            not isinstance(row, list)
            or len(row) != len(expected)
            or any(not isinstance(v, int) for v in row)
            for row in values
        )
    ):
        raise CacheCorrupt(f"{path}: malformed value matrix")
    return values


def _save_cache(path, n, partitions, values):
    payload = {
        "version": CACHE_FORMAT_VERSION,
        "n": n,
        "order": "revlex",
        "partitions": [list(lam) for lam in partitions],
        "values": values,
    }
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    with open(tmp, "w", encoding="ascii") as fh:
        json.dump(payload, fh, sort_keys=True, separators=(",", ":"))
    tmp.replace(path)


def character_table(n, cache_dir=None, max_degree=DEFAULT_MAX_DEGREE, progress=None):
    """Full character table of S_n, persisted under cache_dir when given."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > max_degree:
        raise LimitExceeded(f"character table degree {n} exceeds the limit {max_degree}")
    parts = partitions_of(n)
    path = cache_path(cache_dir, n) if cache_dir is not None else None
    if path is not None and path.exists():
        try:
            values = _load_cache(path, n, parts)
            return CharacterTable(n, parts, values)
        except CacheCorrupt as exc:
            warnings.warn(f"character table cache rejected, recomputing: {exc}")
    if progress is not None:
        progress(f"computing character table of S_{n} ({len(parts)} x {len(parts)})")
    raw = [tuple(lam) for lam in parts]
    values = _kernel_for(n).table(raw, raw)
    table = CharacterTable(n, parts, values)
    if path is not None:
        _save_cache(path, n, parts, values)
    return table


def inner_product(f, g):
    """Exact (1/n!) sum over classes of class_size * f * g."""
    keys = set(f)
    if keys != set(g):
        raise DomainMismatch("class functions defined on different cycle-type sets")
    if not keys:
        raise DomainMismatch("empty class functions")
    n = next(iter(keys)).size
    if keys != set(partitions_of(n)):
        raise DomainMismatch(f"class functions must cover every cycle type of S_{n}")
    total = Fraction(0)
    for rho in keys:
        total += class_data(rho).class_size * Fraction(f[rho]) * Fraction(g[rho])
    return total / math.factorial(n)
