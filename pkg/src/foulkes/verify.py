"""Independent oracles and the verification suites behind `foulkes verify`.

Every oracle here recomputes its target along a second route: character
values through the Jacobi-Trudi determinant instead of border strips,
p-cores by removing border strips from the diagram instead of the abacus,
Foulkes values by enumerating and filtering set partitions instead of
plethysm.  The suites compare the routes and report per-check results.
"""

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .chars import character_table, class_data, mn_character
from .errors import CapExceeded
from .partitions import Partition, partitions_of
from .perms import GroupSpec, Permutation, closure, make_C, make_Q, normalizer_bruteforce
from .plethysm import PowerSumPolynomial, foulkes_character, foulkes_multiplicity, h_in_p
from .setparts import CheckResult, omega_size, omega_stream

ORTHOGONALITY_SEED = 0


@dataclass
class SuiteReport:
    name: str
    params: dict
    checks: list

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def to_json(self):
        return {
            "suite": self.name,
            "params": self.params,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in self.checks
            ],
        }


def _perm_sign(perm):
    inversions = sum(
        1
        for i in range(len(perm))
        for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )
    return -1 if inversions & 1 else 1


def jt_character(lam, rho):
    """chi^lam(rho) through the h-determinant of the Schur function.

    Expands det(h_{lam_i - i + j}) in the power-sum basis and reads off
    z_rho times the coefficient of p_rho.  No border strips anywhere.
    """
    ell = len(lam)
    if ell == 0:
        return 1
    total = PowerSumPolynomial(lam.size)
    for tau in itertools.permutations(range(ell)):
        degrees = [lam[i] - (i + 1) + (tau[i] + 1) for i in range(ell)]
        if any(d < 0 for d in degrees):
            continue
        term = PowerSumPolynomial(0, {Partition(): Fraction(1)})
        for d in degrees:
            term = term * h_in_p(d)
        total = total.plus(term.scaled(_perm_sign(tau)))
    value = class_data(rho).centralizer_order * total.coefficient(rho)
    assert value.denominator == 1
    return int(value)


def _cells(lam):
    return {(i, j) for i, part in enumerate(lam, 1) for j in range(1, part + 1)}


def _is_border_strip(cells):
    if not cells:
        return False
    for (i, j) in cells:
        if (i + 1, j) in cells and (i, j + 1) in cells and (i + 1, j + 1) in cells:
            return False
    start = next(iter(cells))
    frontier = [start]
    seen = {start}
    while frontier:
        i, j = frontier.pop()
        for nbr in ((i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)):
            if nbr in cells and nbr not in seen:
                seen.add(nbr)
                frontier.append(nbr)
    return seen == cells


def strip_removals(lam, p):
    """All partitions left after removing one border strip of length p."""
    if lam.size < p:
        return []
    out = []
    lam_cells = _cells(lam)
    for mu in partitions_of(lam.size - p):
        if len(mu) > len(lam) or any(mu[i] > lam[i] for i in range(len(mu))):
            continue
        if _is_border_strip(lam_cells - _cells(mu)):
            out.append(mu)
    return out


def rim_core_and_weight(lam, p):
    """Diagram-level stripping oracle for the p-core and weight."""
    weight = 0
    while True:
        removals = strip_removals(lam, p)
        if not removals:
            return lam, weight
        lam = removals[0]
        weight += 1


def canonical_permutation(rho, degree=None):
    """A permutation with cycle type rho, cycles on consecutive points."""
    if degree is None:
        degree = rho.size
    cycles = []
    start = 1
    for part in rho:
        cycles.append(tuple(range(start, start + part)))
        start += part
    return Permutation.from_cycles(degree, cycles)


def brute_foulkes_values(a, n, cap=10**7):
    """Fixed-set-partition count for every cycle type, by enumeration."""
    omegas = list(omega_stream(a, n, cap))
    out = {}
    for rho in partitions_of(a * n):
        g = canonical_permutation(rho)
        out[rho] = sum(1 for omega in omegas if omega.apply(g) == omega)
    return out


def foulkes_oracle_suite(a, n, cap=10**7, table=None, cache_dir=None, max_degree=24):
    """Plethysm-side values and multiplicities against the enumeration."""
    checks = []
    phi = foulkes_character(a, n, max_degree)
    brute = brute_foulkes_values(a, n, cap)
    mismatches = [
        rho for rho in partitions_of(a * n) if phi.value(rho) != brute[rho]
    ]
    checks.append(
        CheckResult(
            "values-match-bruteforce",
            not mismatches,
            f"{len(brute)} cycle types compared"
            + (f"; mismatch at {mismatches[:3]}" if mismatches else ""),
        )
    )
    if table is None:
        table = character_table(a * n, cache_dir, max_degree)
    degree_sum = 0
    for mu in partitions_of(a * n):
        m = foulkes_multiplicity(phi, mu, table)
        degree_sum += m * table.degree(mu)
    expected = omega_size(a, n)
    checks.append(
        CheckResult(
            "degree-identity",
            degree_sum == expected,
            f"sum of mult * degree = {degree_sum}, orbit size {expected}",
        )
    )
    return SuiteReport("foulkes-oracle", {"a": a, "n": n}, checks)


def characters_suite(
    cache_dir=None,
    jt_max_n=6,
    orthogonality_max_n=7,
    big_n=20,
    spot_pairs=50,
    max_degree=24,
    progress=None,
):
    """MN against Jacobi-Trudi, exact orthogonality, and big-n spot checks."""
    checks = []

    bad = []
    for n in range(1, jt_max_n + 1):
        for lam in partitions_of(n):
            for rho in partitions_of(n):
                if mn_character(lam, rho) != jt_character(lam, rho):
                    bad.append((lam, rho))
    checks.append(
        CheckResult(
            "mn-equals-jacobi-trudi",
            not bad,
            f"all pairs up to n = {jt_max_n}"
            + (f"; first mismatch {bad[0]}" if bad else ""),
        )
    )

    orth_ok = True
    degs_ok = True
    for n in range(1, orthogonality_max_n + 1):
        table = character_table(n, cache_dir, max_degree)
        sizes = [class_data(rho).class_size for rho in table.partitions]
        fact = math.factorial(n)
        for i, lam in enumerate(table.partitions):
            for j in range(i, len(table.partitions)):
                dot = sum(
                    sizes[k] * table.values[i][k] * table.values[j][k]
                    for k in range(len(sizes))
                )
                if dot != (fact if i == j else 0):
                    orth_ok = False
        if sum(table.degree(lam) ** 2 for lam in table.partitions) != fact:
            degs_ok = False
    checks.append(
        CheckResult(
            "row-orthogonality-exact",
            orth_ok,
            f"all pairs up to n = {orthogonality_max_n}",
        )
    )
    checks.append(
        CheckResult(
            "degrees-squared-sum",
            degs_ok,
            f"sum of squared degrees equals n! up to n = {orthogonality_max_n}",
        )
    )

    if big_n:
        table = character_table(big_n, cache_dir, max_degree, progress)
        sizes = [class_data(rho).class_size for rho in table.partitions]
        fact = math.factorial(big_n)
        rng = random.Random(ORTHOGONALITY_SEED)
        count = len(table.partitions)
        spot_ok = True
        for _ in range(spot_pairs):
            i = rng.randrange(count)
            j = rng.randrange(count)
            dot = sum(
                sizes[k] * table.values[i][k] * table.values[j][k]
                for k in range(count)
            )
            if dot != (fact if i == j else 0):
                spot_ok = False
        checks.append(
            CheckResult(
                "spot-orthogonality",
                spot_ok,
                f"{spot_pairs} seeded pairs at n = {big_n}",
            )
        )

    return SuiteReport(
        "characters",
        {"jt_max_n": jt_max_n, "orthogonality_max_n": orthogonality_max_n, "big_n": big_n},
        checks,
    )


def p_part(order, p):
    out = 1
    while order % p == 0:
        order //= p
        out *= p
    return out


def normalizer_suite(a, s, p, cap=4 * 10**6):
    """Brute-force desk check: the p-elements of N(Q_s) form <D_s, Q_s>."""
    degree = a * s * p
    if math.factorial(degree) > cap:
        raise CapExceeded(
            f"normalizer sweep needs {math.factorial(degree)} > cap {cap}",
            required=math.factorial(degree),
        )
    checks = []
    q_spec = make_Q(s, a, p)
    normalizer = normalizer_bruteforce(degree, q_spec, cap)
    c_set = closure(make_C(a * s, p, degree), cap)
    d_set = c_set & normalizer
    generated = closure(
        GroupSpec(degree, tuple(sorted(d_set)) + q_spec.generators), cap
    )
    p_elements = {x for x in normalizer if p_part(x.order(), p) == x.order()}
    expected_order = p_part(len(normalizer), p)

    checks.append(
        CheckResult(
            "generated-inside-normalizer",
            generated <= normalizer,
            f"|<D_s, Q_s>| = {len(generated)}, |N| = {len(normalizer)}",
        )
    )
    checks.append(
        CheckResult(
            "sylow-order",
            len(generated) == expected_order,
            f"|<D_s, Q_s>| = {len(generated)}, p-part of |N| = {expected_order}",
        )
    )
    checks.append(
        CheckResult(
            "unique-sylow",
            p_elements == generated,
            f"{len(p_elements)} p-elements in N, subgroup size {len(generated)}",
        )
    )
    return SuiteReport("normalizer", {"a": a, "s": s, "p": p}, checks)
