"""Set partitions of {1..an} into n sets of size a, and their fixed points
under the order-p elements R_l.

Fixed set partitions are produced two ways: by filtering the full
enumeration, and constructively from a type (a set partition of the orbit
indices) plus a vector of orbit offsets.  verify_lemmas cross-checks the
two routes and the counting/factorization identities around them.
"""

import itertools
import math
from dataclasses import dataclass

from .errors import CapExceeded, DegreeMismatch, MixedBlockError, NotFixedError
from .perms import make_R, sigma_product
from .partitions import Partition

DEFAULT_ENUM_CAP = 10**7


class SetPartition:
    """Blocks of equal size, stored canonically.

    Canonical form: elements ascending within a block, blocks sorted by
    their minimum.  Equality and hashing are canonical-form comparisons.
    """

    __slots__ = ("blocks",)

    def __init__(self, blocks):
        blocks = tuple(tuple(sorted(block)) for block in blocks)
        blocks = tuple(sorted(blocks, key=lambda b: b[0]))
        if not blocks:
            raise ValueError("a set partition needs at least one block")
        size = len(blocks[0])
        if any(len(b) != size for b in blocks):
            raise ValueError("blocks must all have the same size")
        seen = [x for block in blocks for x in block]
        if sorted(seen) != list(range(1, len(seen) + 1)):
            raise ValueError("blocks must partition 1..ground-set size")
        self.blocks = blocks

    @property
    def block_size(self):
        return len(self.blocks[0])

    @property
    def block_count(self):
        return len(self.blocks)

    @property
    def ground_size(self):
        return self.block_size * self.block_count

    def apply(self, g):
        if g.degree != self.ground_size:
            raise DegreeMismatch(
                f"permutation degree {g.degree} vs ground set {self.ground_size}"
            )
        return SetPartition(tuple(g(x) for x in block) for block in self.blocks)

    def __eq__(self, other):
        return isinstance(other, SetPartition) and self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __lt__(self, other):
        return self.blocks < other.blocks

    def __str__(self):
        return "|".join(".".join(map(str, block)) for block in self.blocks)

    def __repr__(self):
        return f"SetPartition[{self}]"

    def to_json(self):
        return [list(block) for block in self.blocks]


@dataclass(frozen=True)
class TypeLabel:
    """The orbit-incidence pattern of an R_{as}-fixed set partition."""

    delta: SetPartition


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def omega_size(a, n):
    """|Omega^(a^n)| = (an)! / (a!^n n!)."""
    return math.factorial(a * n) // (math.factorial(a) ** n * math.factorial(n))


def omega_stream(a, n, cap=DEFAULT_ENUM_CAP):
    """Every set partition of {1..an} into n blocks of size a, in
    lexicographic order of canonical forms."""
    size = omega_size(a, n)
    if size > cap:
        raise CapExceeded(
            f"Omega^({a}^{n}) has exactly {size} elements, above the cap {cap}",
            required=size,
        )

    def gen(rest):
        if not rest:
            yield ()
            return
        first = rest[0]
        pool = rest[1:]
        for chosen in itertools.combinations(pool, a - 1):
            block = (first,) + chosen
            left = [x for x in pool if x not in chosen]
            for tail in gen(left):
                yield (block,) + tail

    return (SetPartition(blocks) for blocks in gen(list(range(1, a * n + 1))))


def act(omega, g):
    """Blocks mapped pointwise, then recanonicalized."""
    return omega.apply(g)


def fixed_filter(a, n, spec, cap=DEFAULT_ENUM_CAP):
    """All omega fixed by every generator of the group (hence the group)."""
    gens = spec.generators
    out = []
    for omega in omega_stream(a, n, cap):
        if all(omega.apply(g) == omega for g in gens):
            out.append(omega)
    return out


def fixed_constructive(a, s, p, cap=DEFAULT_ENUM_CAP):
    """The R_{as}-fixed elements of Omega^(a^sp), built from types.

    For a type delta and one offset in {0..p-1} per non-anchor orbit, the
    transversal block A_i takes the first element of its lowest incident
    orbit and the offset-shifted first elements of the others; the fixed
    set partition is the sigma-closure of the transversals.
    """
    total = omega_size(a, s) * p ** ((a - 1) * s)
    if total > cap:
        raise CapExceeded(
            f"constructive enumeration has exactly {total} elements, above the cap {cap}",
            required=total,
        )
    degree = a * s * p
    sigma = sigma_product(a * s, p, degree)
    powers = []
    current = list(range(1, degree + 1))
    for _ in range(p):
        powers.append(tuple(current))
        current = [sigma(x) for x in current]

    out = []
    for delta in omega_stream(a, s, cap):
        for offsets in itertools.product(range(p), repeat=(a - 1) * s):
            blocks = []
            pos = 0
            for dblock in delta.blocks:
                anchor = (dblock[0] - 1) * p + 1
                rep = [anchor]
                for j in dblock[1:]:
                    rep.append((j - 1) * p + 1 + offsets[pos])
                    pos += 1
                for m in range(p):
                    blocks.append(tuple(powers[m][x - 1] for x in rep))
            out.append(SetPartition(blocks))
    return out


def type_of(omega, a, s, p):
    """The type delta of an R_{as}-fixed element of Omega^(a^sp)."""
    degree = a * s * p
    if omega.ground_size != degree or omega.block_size != a:
        raise NotFixedError(
            f"expected an element of Omega^({a}^{s * p}), got {omega}"
        )
    sigma = sigma_product(a * s, p, degree)
    if omega.apply(sigma) != omega:
        raise NotFixedError(f"{omega} is not fixed by R_{a * s}")
    remaining = set(omega.blocks)
    incidences = []
    while remaining:
        block = min(remaining)
        orbit = set()
        current = block
        while current not in orbit:
            orbit.add(current)
            current = tuple(sorted(sigma(x) for x in current))
        remaining -= orbit
        incidences.append(tuple(sorted({(x - 1) // p + 1 for x in block})))
    return TypeLabel(SetPartition(incidences))


def factorize(omega, a, n, s, p):
    """Split a fixed omega into its part inside supp(R_{as}) = {1..asp}
    and the relabeled remainder on {asp+1..an}."""
    if s * p > n:
        raise ValueError(f"sp = {s * p} exceeds n = {n}")
    degree = a * n
    support = a * s * p
    if omega.ground_size != degree or omega.block_size != a:
        raise NotFixedError(f"expected an element of Omega^({a}^{n}), got {omega}")
    generator = make_R(a * s, p, degree).generators[0]
    if omega.apply(generator) != omega:
        raise NotFixedError(f"{omega} is not fixed by R_{a * s}")
    inside = []
    outside = []
    for block in omega.blocks:
        low = sum(1 for x in block if x <= support)
        if low == len(block):
            inside.append(block)
        elif low == 0:
            outside.append(tuple(x - support for x in block))
        else:
            raise MixedBlockError(f"block {block} straddles the support split")
    return SetPartition(inside), SetPartition(outside)


def recombine(u, v, offset):
    """Inverse of factorize: shift v up by offset and take the union."""
    return SetPartition(
        u.blocks + tuple(tuple(x + offset for x in block) for block in v.blocks)
    )


@dataclass
class LemmaReport:
    a: int
    s: int
    p: int
    n: object
    checks: list

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def to_json(self):
        return {
            "a": self.a,
            "s": self.s,
            "p": self.p,
            "n": self.n,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in self.checks
            ],
        }


def verify_lemmas(a, s, p, n=None, cap=DEFAULT_ENUM_CAP):
    """Cross-check both fixed-point routes and the counting, structure,
    type-decomposition and (with n) factorization identities."""
    checks = []
    degree = a * s * p
    sigma = sigma_product(a * s, p, degree)
    by_filter = fixed_filter(a, s * p, make_R(a * s, p, degree), cap)
    constructive = fixed_constructive(a, s, p, cap)

    dup_free = len(set(constructive)) == len(constructive)
    same = set(constructive) == set(by_filter)
    checks.append(
        CheckResult(
            "filter-equals-constructive",
            same and dup_free,
            f"filter {len(by_filter)}, constructive {len(constructive)}"
            + ("" if dup_free else " (duplicates!)"),
        )
    )

    expected = omega_size(a, s) * p ** ((a - 1) * s)
    checks.append(
        CheckResult(
            "count",
            len(by_filter) == expected,
            f"{len(by_filter)} fixed, expected |Omega^({a}^{s})| * p^((a-1)s) = {expected}",
        )
    )

    structure_ok = True
    for omega in by_filter:
        for block in omega.blocks:
            orbits = [(x - 1) // p + 1 for x in block]
            if len(set(orbits)) != len(orbits):
                structure_ok = False
        seen = set()
        for block in omega.blocks:
            if block in seen:
                continue
            orbit = []
            current = block
            while current not in seen:
                seen.add(current)
                orbit.append(current)
                current = tuple(sorted(sigma(x) for x in current))
            if len(orbit) != p:
                structure_ok = False
    checks.append(
        CheckResult(
            "structure",
            structure_ok,
            "each block meets incident orbits once; block orbits have length p",
        )
    )

    per_type = {}
    for omega in by_filter:
        label = type_of(omega, a, s, p)
        per_type[label] = per_type.get(label, 0) + 1
    want = p ** ((a - 1) * s)
    type_ok = (
        len(per_type) == omega_size(a, s)
        and all(count == want for count in per_type.values())
    )
    checks.append(
        CheckResult(
            "type-counts",
            type_ok,
            f"{len(per_type)} types, counts {sorted(set(per_type.values()))}, expected {want} each",
        )
    )

    if n is not None:
        fixed_big = fixed_filter(a, n, make_R(a * s, p, a * n), cap)
        pairs = [factorize(omega, a, n, s, p) for omega in fixed_big]
        expected_pairs = len(by_filter) * omega_size(a, n - s * p)
        bijective = (
            len(set(pairs)) == len(pairs)
            and len(pairs) == expected_pairs
            and all(u in set(by_filter) for u, _ in pairs)
            and all(
                recombine(u, v, a * s * p) == omega
                for (u, v), omega in zip(pairs, fixed_big)
            )
        )
        checks.append(
            CheckResult(
                "factorization",
                bijective,
                f"{len(pairs)} fixed = {len(by_filter)} x {omega_size(a, n - s * p)}",
            )
        )

        vanishing_ok = True
        bad = []
        for ell in range(1, a * n // p + 1):
            if ell % a == 0:
                continue
            if fixed_filter(a, n, make_R(ell, p, a * n), cap):
                vanishing_ok = False
                bad.append(ell)
        checks.append(
            CheckResult(
                "vanishing",
                vanishing_ok,
                "no fixed points for l not a multiple of a"
                + (f" (failed at l in {bad})" if bad else ""),
            )
        )

    return LemmaReport(a, s, p, n, checks)
