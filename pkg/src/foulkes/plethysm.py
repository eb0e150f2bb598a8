"""The Foulkes character as the plethysm h_n[h_a] in the power-sum basis.

A FoulkesCharacter is the permutation character of S_{an} acting on set
partitions of {1..an} into n sets of size a.  It is computed symbolically
(enumerating the set partitions themselves is hopeless already at a=4,
n=5) and checked against brute-force fixed-point counts at desk scale by
the verification suites.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .chars import class_data, mn_row
from .errors import LimitExceeded, SizeMismatch
from .partitions import Partition, partitions_of
from .setparts import omega_size


class PowerSumPolynomial:
    """Exact-rational combination of power sums, keyed by cycle type."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree, coeffs=None):
        self.degree = degree
        self.coeffs = {}
        for rho, c in (coeffs or {}).items():
            c = Fraction(c)
            if c == 0:
                continue
            if rho.size != degree:
                raise ValueError(f"key {rho} has size {rho.size}, expected {degree}")
            self.coeffs[rho] = c

    def coefficient(self, rho):
        return self.coeffs.get(rho, Fraction(0))

    def __eq__(self, other):
        return (
            isinstance(other, PowerSumPolynomial)
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        terms = ", ".join(f"p[{rho}]: {c}" for rho, c in sorted(self.coeffs.items(), reverse=True))
        return f"PowerSumPolynomial({self.degree}, {{{terms}}})"

    def __mul__(self, other):
        out = {}
        for rho, c in self.coeffs.items():
            for tau, d in other.coeffs.items():
                key = Partition(tuple(sorted(rho + tau, reverse=True)))
                prod = c * d
                prev = out.get(key)
                out[key] = prod if prev is None else prev + prod
        return PowerSumPolynomial(self.degree + other.degree, out)

    def scaled(self, scalar):
        scalar = Fraction(scalar)
        return PowerSumPolynomial(
            self.degree, {rho: c * scalar for rho, c in self.coeffs.items()}
        )

    def plus(self, other):
        if self.degree != other.degree:
            raise ValueError("cannot add different degrees")
        out = dict(self.coeffs)
        for rho, c in other.coeffs.items():
            out[rho] = out.get(rho, Fraction(0)) + c
        return PowerSumPolynomial(self.degree, out)


def h_in_p(m, limit=60):
    """Complete homogeneous h_m = sum over rho of p_rho / z_rho."""
    if m > limit:
        raise LimitExceeded(f"h_{m} exceeds the degree limit {limit}")
    return PowerSumPolynomial(
        m, {rho: Fraction(1, class_data(rho).centralizer_order) for rho in partitions_of(m)}
    )


def p_applied(k, g):
    """Plethysm p_k[g]: every part j of every key becomes jk."""
    return PowerSumPolynomial(
        k * g.degree,
        {Partition(tuple(part * k for part in rho)): c for rho, c in g.coeffs.items()},
    )


def plethysm_h(n, g):
    """h_n[g] = sum over rho of (1/z_rho) * prod_i p_{rho_i}[g]."""
    if not g.coeffs:
        raise ValueError("plethysm into the zero polynomial")
    out = PowerSumPolynomial(n * g.degree)
    for rho in partitions_of(n):
        term = PowerSumPolynomial(0, {Partition(): Fraction(1)})
        for part in rho:
            term = term * p_applied(part, g)
        out = out.plus(term.scaled(Fraction(1, class_data(rho).centralizer_order)))
    return out


@dataclass(frozen=True)
class FoulkesCharacter:
    a: int
    n: int
    symfunc: PowerSumPolynomial = field(compare=False)

    def value(self, rho):
        """Number of set partitions fixed by a permutation of type rho."""
        if rho.size != self.a * self.n:
            raise SizeMismatch(
                f"|{rho}| = {rho.size}, expected {self.a * self.n}"
            )
        v = class_data(rho).centralizer_order * self.symfunc.coefficient(rho)
        assert v.denominator == 1 and v >= 0
        return int(v)


def foulkes_character(a, n, max_degree=24):
    """phi^(a^n) as h_n[h_a]; integrality checked on construction."""
    if a < 1 or n < 1:
        raise ValueError("a and n must be positive")
    if a * n > max_degree:
        raise LimitExceeded(f"degree {a * n} exceeds the limit {max_degree}")
    sym = plethysm_h(n, h_in_p(a))
    for rho, c in sym.coeffs.items():
        v = class_data(rho).centralizer_order * c
        if v.denominator != 1 or v < 0:
            raise AssertionError(f"non-integral or negative value at {rho}: {v}")
    phi = FoulkesCharacter(a, n, sym)
    identity = Partition((1,) * (a * n))
    if phi.value(identity) != omega_size(a, n):
        raise AssertionError("identity value does not match the orbit size")
    return phi


def foulkes_char_value(phi, rho):
    return phi.value(rho)


def foulkes_class_function(phi):
    """phi as a mapping defined on every cycle type of S_{an}."""
    return {rho: phi.value(rho) for rho in partitions_of(phi.a * phi.n)}


def foulkes_multiplicity(phi, mu, table=None):
    """Exact <phi^(a^n), chi^mu>; a character table speeds up sweeps."""
    if mu.size != phi.a * phi.n:
        raise SizeMismatch(f"|{mu}| = {mu.size}, expected {phi.a * phi.n}")
    support = sorted(phi.symfunc.coeffs)
    if table is not None:
        chi = [table.value(mu, rho) for rho in support]
    else:
        chi = mn_row(mu, support)
    total = Fraction(0)
    for rho, x in zip(support, chi):
        total += phi.symfunc.coeffs[rho] * x
    assert total.denominator == 1 and total >= 0, f"bad multiplicity {total} at {mu}"
    return int(total)
