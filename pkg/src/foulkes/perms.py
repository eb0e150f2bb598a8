"""Concrete permutations and the specific p-subgroups used by the checks.

Groups are tiny here (desk scale, ambient degree <= 10 for the
group-theoretic sweeps), so they are represented extensionally: a
GroupSpec holds generators, closure() lists the elements, and normalizers
are found by sweeping the full ambient symmetric group.
"""

import itertools
import math
from dataclasses import dataclass

from .errors import CapExceeded, DegreeMismatch, OutOfRange, UnsupportedS
from .partitions import Partition

DEFAULT_GROUP_CAP = 4 * 10**6


class Permutation:
    """Bijection of {1..m}; images[i-1] is the image of i.

    Products compose left to right: (x * y)(i) = y(x(i)), matching the
    right-action notation used throughout.
    """

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a bijection of 1..{len(images)}: {images}")
        self.images = images

    @classmethod
    def identity(cls, degree):
        return cls(range(1, degree + 1))

    @classmethod
    def from_cycles(cls, degree, cycles):
        images = list(range(1, degree + 1))
        for cycle in cycles:
            for idx, point in enumerate(cycle):
                if not 1 <= point <= degree:
                    raise OutOfRange(f"point {point} outside 1..{degree}")
                images[point - 1] = cycle[(idx + 1) % len(cycle)]
        return cls(images)

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, point):
        return self.images[point - 1]

    def __mul__(self, other):
        if len(self.images) != len(other.images):
            raise DegreeMismatch("cannot compose permutations of different degrees")
        return Permutation(other.images[i - 1] for i in self.images)

    def inverse(self):
        out = [0] * len(self.images)
        for i, img in enumerate(self.images, start=1):
            out[img - 1] = i
        return Permutation(out)

    def __pow__(self, k):
        result = Permutation.identity(self.degree)
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            result = result * base
        return result

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other):
        return self.images < other.images

    def cycles(self):
        """Nontrivial cycles, each starting at its minimum, sorted by minimum."""
        seen = [False] * self.degree
        out = []
        for start in range(1, self.degree + 1):
            if seen[start - 1]:
                continue
            cycle = [start]
            seen[start - 1] = True
            point = self(start)
            while point != start:
                cycle.append(point)
                seen[point - 1] = True
                point = self(point)
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def order(self):
        return math.lcm(*(len(c) for c in self.cycles()), 1)

    def __str__(self):
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def __repr__(self):
        return f"Permutation[{self}]"


def cycle_type(x):
    """Sorted cycle lengths including fixed points."""
    lengths = sorted((len(c) for c in x.cycles()), reverse=True)
    fixed = x.degree - sum(lengths)
    return Partition(tuple(lengths) + (1,) * fixed)


@dataclass(frozen=True)
class GroupSpec:
    degree: int
    generators: tuple
    name_tag: str = "custom"

    def __post_init__(self):
        for g in self.generators:
            if g.degree != self.degree:
                raise DegreeMismatch(
                    f"generator of degree {g.degree} in a degree-{self.degree} group"
                )


def make_z(j, p, degree):
    """The p-cycle z_j = (p(j-1)+1 ... pj) inside S_degree."""
    if p * j > degree:
        raise OutOfRange(f"z_{j} with p={p} needs degree >= {p * j}, got {degree}")
    return Permutation.from_cycles(degree, [tuple(range(p * (j - 1) + 1, p * j + 1))])


def sigma_product(ell, p, degree):
    """z_1 z_2 ... z_ell."""
    out = Permutation.identity(degree)
    for j in range(1, ell + 1):
        out = out * make_z(j, p, degree)
    return out


def make_R(ell, p, degree):
    """Cyclic group of order p generated by z_1 z_2 ... z_ell."""
    return GroupSpec(degree, (sigma_product(ell, p, degree),), "R_ell")


def make_C(ell, p, degree=None):
    """C = <z_1> x <z_2> x ... x <z_ell>."""
    if degree is None:
        degree = ell * p
    return GroupSpec(degree, tuple(make_z(j, p, degree) for j in range(1, ell + 1)), "C")


def bar_lift(g, copies):
    """Diagonal action on `copies` consecutive translates of {1..degree}."""
    block = g.degree
    images = []
    for k in range(copies):
        images.extend(g(j) + k * block for j in range(1, block + 1))
    return Permutation(images)


def make_E(s, a, p):
    """E_s = <pi_1> x ... x <pi_s>, pi_j = z_j z_{j+s} ... z_{j+(a-1)s}."""
    degree = a * s * p
    gens = tuple(bar_lift(make_z(j, p, s * p), a) for j in range(1, s + 1))
    return GroupSpec(degree, gens, "E_s")


def make_P(s, p):
    """Sylow p-subgroup of S_sp with base <z_1..z_s> and z_1...z_s central.

    Iterated-wreath construction, one level only: write s = q*p + r with
    q < p; each of the q full p^2 segments gets a block-shift level
    generator alongside its base p-cycles.  Supports s < p^2.
    """
    if s >= p * p:
        raise UnsupportedS(f"wreath tower for s = {s} >= p^2 = {p * p} not supported")
    degree = s * p
    gens = [make_z(j, p, degree) for j in range(1, s + 1)]
    q = s // p
    for t in range(q):
        # shift x -> x + p cyclically inside the t-th p^2 segment
        base = t * p * p
        images = list(range(1, degree + 1))
        for i in range(1, p * p + 1):
            images[base + i - 1] = base + (i + p - 1) % (p * p) + 1
        gens.append(Permutation(images))
    return GroupSpec(degree, tuple(gens), "P_s")


def make_Q(s, a, p):
    """Q_s: the bar lift of P_s acting diagonally on a copies of {1..sp}."""
    p_s = make_P(s, p)
    return GroupSpec(a * s * p, tuple(bar_lift(g, a) for g in p_s.generators), "Q_s")


def closure(spec, cap=DEFAULT_GROUP_CAP):
    """All group elements by breadth-first products, if at most cap many."""
    seen = {Permutation.identity(spec.degree)}
    frontier = list(seen)
    while frontier:
        new = []
        for x in frontier:
            for g in spec.generators:
                y = x * g
                if y not in seen:
                    if len(seen) >= cap:
                        raise CapExceeded(
                            f"group closure exceeds cap {cap} (at least {len(seen) + 1} elements)",
                            required=len(seen) + 1,
                        )
                    seen.add(y)
                    new.append(y)
        frontier = new
    return seen


def normalizer_bruteforce(ambient_degree, spec, cap=DEFAULT_GROUP_CAP):
    """All x in S_m with G^x = G, by sweeping the full symmetric group."""
    required = math.factorial(ambient_degree)
    if required > cap:
        raise CapExceeded(
            f"normalizer sweep needs {required} permutations, cap {cap}",
            required=required,
        )
    group = closure(spec, cap)
    element_images = {x.images for x in group}
    generator_images = [g.images for g in spec.generators]
    out = set()
    m = ambient_degree
    for images in itertools.permutations(range(1, m + 1)):
        ok = True
        for g_img in generator_images:
            conj = [0] * m
            for i in range(m):
                conj[images[i] - 1] = images[g_img[i] - 1]
            if tuple(conj) not in element_images:
                ok = False
                break
        if ok:
            out.add(Permutation(images))
    return out
