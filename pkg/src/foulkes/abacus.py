"""James' abacus: beta-numbers, p-cores, p-weights, and Nakayama block labels.

The p-core is computed on the abacus by pushing every bead to the lowest
free position on its runner, which is order-independent; diagram-level
border-strip removal is kept only as a test oracle.
"""

from dataclasses import dataclass

from .errors import BeadCountTooSmall
from .partitions import Partition


@dataclass(frozen=True)
class AbacusState:
    """First-column beta-numbers on p runners."""

    bead_positions: tuple
    runner_count: int

    def __post_init__(self):
        beads = self.bead_positions
        if any(b < 0 for b in beads) or any(
            beads[i] >= beads[i + 1] for i in range(len(beads) - 1)
        ):
            raise ValueError("bead positions must be strictly increasing and nonnegative")
        if self.runner_count < 1:
            raise ValueError("runner_count must be positive")


@dataclass(frozen=True, eq=False)
class BlockLabel:
    """Nakayama label (p-core, weight) of a p-block of S_n.

    Equality uses (core, prime) only; the weight is derived from the size
    of any partition carrying the label and is stored for reports.
    """

    core: Partition
    weight: int
    prime: int

    def __eq__(self, other):
        if not isinstance(other, BlockLabel):
            return NotImplemented
        return self.core == other.core and self.prime == other.prime

    def __hash__(self):
        return hash((self.core, self.prime))

    def __str__(self):
        return f"core={self.core} w={self.weight} p={self.prime}"

    def to_json(self):
        return {"core": list(self.core), "weight": self.weight, "p": self.prime}


def default_bead_count(lam, p):
    """Number of parts rounded up to the next multiple of p."""
    return -(-len(lam) // p) * p


def to_abacus(lam, p, bead_count):
    """Beta-numbers lam_i + (bead_count - i) for i = 1..bead_count."""
    if bead_count < len(lam):
        raise BeadCountTooSmall(
            f"{bead_count} beads cannot hold {len(lam)} parts"
        )
    beads = []
    for i in range(1, bead_count + 1):
        part = lam[i - 1] if i <= len(lam) else 0
        beads.append(part + bead_count - i)
    return AbacusState(tuple(sorted(beads)), p)


def from_abacus(state):
    """Partition recovered from beta-numbers; inverse of to_abacus."""
    beads = sorted(state.bead_positions, reverse=True)
    b = len(beads)
    parts = [beads[i] - (b - 1 - i) for i in range(b)]
    return Partition(tuple(part for part in parts if part > 0))


def _pushed_up(state):
    """Slide every bead to the lowest free slots of its runner."""
    p = state.runner_count
    per_runner = [0] * p
    for bead in state.bead_positions:
        per_runner[bead % p] += 1
    beads = []
    for runner, count in enumerate(per_runner):
        beads.extend(runner + p * level for level in range(count))
    return AbacusState(tuple(sorted(beads)), p)


def p_core(lam, p, bead_count=None):
    """The p-core of lam; independent of the bead count used."""
    if bead_count is None:
        bead_count = default_bead_count(lam, p)
    return from_abacus(_pushed_up(to_abacus(lam, p, bead_count)))


def p_weight(lam, p):
    """Number of p-hooks stripped to reach the core."""
    diff = lam.size - p_core(lam, p).size
    assert diff % p == 0
    return diff // p


def block_label(lam, p):
    return BlockLabel(p_core(lam, p), p_weight(lam, p), p)
