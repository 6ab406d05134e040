import pytest

from circprime import kernels
from oracle import brute_orbits, sieve


def _partition(labels):
    groups = {}
    for j, k in enumerate(labels):
        groups.setdefault(k, []).append(j)
    return sorted(tuple(g) for g in groups.values())


@pytest.mark.parametrize("n", [3, 4, 6, 7, 12, 30, 64, 97, 210, 360])
def test_orbit_labels_match_union_find(backend, n):
    assert _partition(backend.orbit_labels(n)) == sorted(brute_orbits(n).orbits)


def test_labels_numbered_by_first_member(backend):
    labels = backend.orbit_labels(90)
    firsts = []
    for k in labels:
        if k not in firsts:
            firsts.append(k)
    assert firsts == list(range(len(firsts)))


def test_count_matches_labels(backend):
    for n in range(3, 500):
        assert backend.count_orbits(n) == len(set(backend.orbit_labels(n)))


def test_trial_division_kernels(backend):
    table = sieve(5000)
    for n in range(2, 5001):
        assert bool(backend.trial_division(n)) == table.is_prime(n)
        assert bool(backend.optimized_trial_division(n)) == table.is_prime(n)


def test_backends_agree():
    names = kernels.backends()
    mods = [kernels.get_backend(name) for name in names]
    for n in list(range(3, 300)) + [1009, 4096, 9973, 10**4]:
        assert len({tuple(m.orbit_labels(n)) for m in mods}) == 1


@pytest.mark.parametrize("n", [2**64 + 1, 3 * 2**70, (2**64 + 13) * 7])
def test_large_values_route_to_python(n):
    # above the native limits, with a small factor so the loop ends quickly
    assert kernels.trial_division(n) is False
    assert kernels.optimized_trial_division(n) is False


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.get_backend("fortran")
