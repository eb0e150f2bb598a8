"""Partitions of n: enumeration, dominance, conjugation, hooks, p-regularity.

A partition is a weakly decreasing tuple of positive integers.  Partitions
of the same n compare in reverse-lexicographic order under plain tuple
comparison ((n) largest, (1,...,1) smallest); every module that serializes
partition-indexed data relies on that order.
"""

from functools import lru_cache

from .errors import LimitExceeded, ParseError, SizeMismatch

# Enumerations stay tractable up to here; raise via partitions_of(limit=...).
DEFAULT_MAX_SIZE = 60


class Partition(tuple):
    """Weakly decreasing tuple of positive integers; the empty tuple is ()."""

    __slots__ = ()

    def __new__(cls, parts=()):
        self = super().__new__(cls, parts)
        prev = None
        for part in self:
            if not isinstance(part, int) or part < 1:
                raise ValueError(f"parts must be positive integers, got {part!r}")
            if prev is not None and part > prev:
                raise ValueError(f"parts not weakly decreasing: {tuple(self)}")
            prev = part
        return self

    @property
    def size(self):
        return sum(self)

    def __repr__(self):
        return f"Partition({tuple(self)})"

    def __str__(self):
        return ",".join(str(part) for part in self) if self else "-"

    @classmethod
    def parse(cls, text):
        """Parse "18,2" form; "-" is the empty partition."""
        text = text.strip()
        if text == "-" or text == "":
            return cls()
        parts = []
        for token in text.split(","):
            token = token.strip()
            try:
                parts.append(int(token))
            except ValueError:
                raise ParseError(f"bad partition part {token!r}") from None
        try:
            return cls(parts)
        except ValueError as exc:
            raise ParseError(f"not a partition: {text!r} ({exc})") from None


def partitions_of(n, max_part=None, limit=DEFAULT_MAX_SIZE):
    """All partitions of n in reverse-lexicographic order, (n) first.

    max_part restricts the largest part (used for tails of cycle types).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > limit:
        raise LimitExceeded(f"partitions_of({n}) exceeds the size limit {limit}")
    out = []
    first = n if max_part is None else min(n, max_part)

    def descend(remaining, cap, prefix):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for part in range(min(cap, remaining), 0, -1):
            descend(remaining - part, part, prefix + (part,))

    descend(n, first, ())
    return out


@lru_cache(maxsize=None)
def partition_count(n, max_part=None):
    """Number of partitions of n (largest part <= max_part if given)."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    if max_part is None:
        max_part = n
    max_part = min(max_part, n)
    if max_part == 0:
        return 0
    return partition_count(n - max_part, max_part) + partition_count(n, max_part - 1)


def dominates(lam, mu):
    """True iff every prefix sum of lam is >= the matching prefix sum of mu."""
    if lam.size != mu.size:
        raise SizeMismatch(f"dominance needs equal sizes: |{lam}|={lam.size}, |{mu}|={mu.size}")
    total_l = total_m = 0
    for i in range(max(len(lam), len(mu))):
        total_l += lam[i] if i < len(lam) else 0
        total_m += mu[i] if i < len(mu) else 0
        if total_l < total_m:
            return False
    return True


def conjugate(lam):
    """Transpose of the Young diagram."""
    if not lam:
        return Partition()
    cols = [0] * lam[0]
    for part in lam:
        for j in range(part):
            cols[j] += 1
    return Partition(cols)


def is_p_regular(lam, p):
    """True iff no part value occurs p or more times."""
    if p < 2:
        raise ValueError("p must be at least 2")
    run = 0
    prev = None
    for part in lam:
        run = run + 1 if part == prev else 1
        if run >= p:
            return False
        prev = part
    return True


def hook_lengths(lam):
    """Map (row, column) -> hook length, 1-based cells."""
    conj = conjugate(lam)
    return {
        (i, j): (lam[i - 1] - j) + (conj[j - 1] - i) + 1
        for i in range(1, len(lam) + 1)
        for j in range(1, lam[i - 1] + 1)
    }
