"""Galois orbits of the eigenvalue indices of C_n.

The group (Z/nZ)^* acts on indices by j -> j*a mod n. Orbits are found by
the compiled kernel (or its pure-Python twin); see :mod:`circprime.kernels`.

Two orbit counts live here and are deliberately kept apart:
:func:`orbit_count_direct` counts the partition, while
:func:`orbit_count_divisor_formula` counts unitary divisors as the
shortcut formula prescribes. They differ on prime powers (n = 4 gives 3
versus 2), so nothing in the package swaps one for the other implicitly.
"""

import json
from dataclasses import dataclass
from math import gcd

from circprime import kernels
from circprime.errors import DomainError
from circprime.numtheory import divisors


@dataclass(frozen=True)
class OrbitPartition:
    n: int
    orbits: tuple

    def __len__(self):
        return len(self.orbits)

    def orbit_of(self, j):
        for orbit in self.orbits:
            if j in orbit:
                return orbit
        raise DomainError(f"index {j} outside 0..{self.n - 1}")

    def to_dict(self):
        return {"n": self.n, "orbits": [list(o) for o in self.orbits]}

    def to_json(self):
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data):
        return cls(int(data["n"]), tuple(tuple(int(j) for j in o) for o in data["orbits"]))


def _check_n(n):
    if n < 3:
        raise DomainError(f"orbits are only considered for n >= 3, got {n}")


def compute_orbits(n):
    """Orbit partition of 0..n-1 under multiplication by units mod n.

    Orbits come out sorted internally and ordered by their smallest member,
    so ``{0}`` is always first.
    """
    _check_n(n)
    labels = kernels.orbit_labels(n)
    groups = {}
    for j, k in enumerate(labels):
        groups.setdefault(k, []).append(j)
    # labels are numbered in order of first (smallest) member
    return OrbitPartition(n, tuple(tuple(groups[k]) for k in sorted(groups)))


def orbit_count_direct(n):
    """Number of orbits in :func:`compute_orbits`, without materialising them."""
    _check_n(n)
    return kernels.count_orbits(n)


def cyclotomic_is_irreducible(d):
    """Whether Phi_d is irreducible over Q. It always is."""
    if d < 1:
        raise DomainError(f"cyclotomic index must be >= 1, got {d}")
    return True


def unitary_divisors(n):
    """Divisors d > 1 of n with gcd(d, n/d) == 1."""
    return [d for d in divisors(n) if d > 1 and gcd(d, n // d) == 1]


def orbit_count_divisor_formula(n):
    """1 + #{d | n : d > 1, gcd(d, n/d) = 1, Phi_d irreducible}.

    Implemented exactly as the shortcut states. It matches the direct count
    on squarefree n and undercounts prime powers.
    """
    _check_n(n)
    return 1 + sum(1 for d in unitary_divisors(n) if cyclotomic_is_irreducible(d))


def orbit_divisor(n, orbit):
    """The d with orbit == {j : gcd(j, n) == n // d}; validates the orbit."""
    g = gcd(orbit[0], n)
    if any(gcd(j, n) != g for j in orbit):
        raise DomainError(f"{sorted(orbit)[:6]}... is not a single orbit for n={n}")
    return n // g
