"""Decomposition-matrix column bounds from the Foulkes character.

For a p-regular lambda of weight < a that is dominance-maximal among the
partitions of an with its p-core and positive Foulkes multiplicity, the
column of lambda is supported on that set, each entry bounded by the
multiplicity, and rows with more than n parts vanish outright.
"""

from dataclasses import dataclass

from .abacus import block_label, p_core, p_weight
from .chars import character_table
from .errors import NotACoreError, PreconditionsNotMet, SizeMismatch
from .partitions import dominates, is_p_regular, partitions_of
from .plethysm import foulkes_character, foulkes_multiplicity

ZERO_NOT_IN_F = "zero:not-in-F"
ZERO_TOO_MANY_PARTS = "zero:more-than-n-parts"
BOUNDED = "bounded"
OUTSIDE_BLOCK = "outside-block"


@dataclass(frozen=True)
class FGammaSet:
    """Partitions of an with p-core gamma and positive Foulkes multiplicity."""

    a: int
    n: int
    p: int
    gamma: object
    members: frozenset
    multiplicities: dict


@dataclass(frozen=True)
class ReportRow:
    mu: object
    status: str
    mult: int = None
    bound: int = None

    def to_json(self):
        out = {"mu": list(self.mu), "status": self.status}
        if self.mult is not None:
            out["mult"] = self.mult
        if self.bound is not None:
            out["bound"] = self.bound
        return out


@dataclass(frozen=True)
class BoundsReport:
    lam: object
    a: int
    n: int
    p: int
    block: object
    preconditions: dict
    rows: tuple

    @property
    def preconditions_met(self):
        return all(self.preconditions.values())

    @property
    def failed_preconditions(self):
        return [name for name, ok in self.preconditions.items() if not ok]

    def to_json(self):
        return {
            "lambda": list(self.lam),
            "a": self.a,
            "n": self.n,
            "p": self.p,
            "block": self.block.to_json(),
            "preconditions": dict(self.preconditions),
            "rows": [row.to_json() for row in self.rows],
        }


def f_gamma(a, n, p, gamma, table=None, cache_dir=None, max_degree=24, progress=None):
    """Filter the partitions of an by p-core, then by positive multiplicity."""
    if p_core(gamma, p) != gamma:
        raise NotACoreError(f"{gamma} has a removable {p}-hook")
    phi = foulkes_character(a, n, max_degree)
    if table is None:
        table = character_table(a * n, cache_dir, max_degree, progress)
    members = set()
    mults = {}
    for mu in partitions_of(a * n):
        if p_core(mu, p) != gamma:
            continue
        m = foulkes_multiplicity(phi, mu, table)
        if m > 0:
            members.add(mu)
            mults[mu] = m
    return FGammaSet(a, n, p, gamma, frozenset(members), mults)


def maximal_members(f):
    """Members with no distinct dominating member."""
    return {
        mu
        for mu in f.members
        if not any(nu != mu and dominates(nu, mu) for nu in f.members)
    }


def ttt1_report(
    a,
    n,
    p,
    lam,
    table=None,
    cache_dir=None,
    include_outside=False,
    max_degree=24,
    progress=None,
):
    """Evaluate the column-bound hypotheses for lambda and, when they all
    hold, classify every partition in its block."""
    if lam.size != a * n:
        raise SizeMismatch(f"|{lam}| = {lam.size}, expected {a * n}")
    if table is None:
        table = character_table(a * n, cache_dir, max_degree, progress)
    block = block_label(lam, p)
    f = f_gamma(a, n, p, block.core, table, cache_dir, max_degree)
    preconditions = {
        "a_lt_p_le_n": a < p <= n,
        "lambda_p_regular": is_p_regular(lam, p),
        "weight_lt_a": p_weight(lam, p) < a,
        "lambda_maximal_in_F": lam in maximal_members(f),
    }
    rows = []
    if all(preconditions.values()):
        for mu in partitions_of(a * n):
            in_block = block_label(mu, p) == block
            if not in_block:
                if include_outside:
                    rows.append(ReportRow(mu, OUTSIDE_BLOCK))
                continue
            mult = f.multiplicities.get(mu, 0)
            if len(mu) > n:
                # Zeros from the part-count bound take precedence; the
                # computed multiplicity is recorded whatever it is, so a
                # conflict between the two routes stays visible.
                rows.append(ReportRow(mu, ZERO_TOO_MANY_PARTS, mult=mult))
            elif mu not in f.members:
                rows.append(ReportRow(mu, ZERO_NOT_IN_F, mult=0))
            else:
                rows.append(ReportRow(mu, BOUNDED, mult=mult, bound=mult))
    return BoundsReport(lam, a, n, p, block, preconditions, tuple(rows))


def column_zero_predictions(report):
    """All block members reported zero, reverse-lex sorted."""
    if not report.preconditions_met:
        raise PreconditionsNotMet(
            f"failed preconditions: {', '.join(report.failed_preconditions)}"
        )
    out = []
    seen = set()
    for row in report.rows:
        if row.status in (ZERO_NOT_IN_F, ZERO_TOO_MANY_PARTS) and row.mu not in seen:
            seen.add(row.mu)
            out.append(row.mu)
    return sorted(out, reverse=True)
