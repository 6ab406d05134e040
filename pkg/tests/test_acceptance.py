"""End-to-end acceptance checks, one test per criterion.

Each test records a PASS/FAIL line that is echoed in the pytest terminal
summary, then asserts.
"""

import time

import pytest

import conftest
from circprime import baselines, bench
from circprime.galois import orbit_count_direct, orbit_count_divisor_formula
from circprime.minpoly import minimal_polynomial_factors
from circprime.primality import ALL_METHODS, Method, is_prime_circulant_full, is_prime_circulant_simplified
from circprime.spectral import phase_point
from circprime.spectrum import full_spectrum, stable_spectrum
from oracle import brute_divisor_count, brute_min_poly, sieve


def report(tag, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] {tag} {detail}"
    conftest.ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_ac1_methods_agree_to_1e5():
    limit = 10**5
    table = sieve(limit)
    checks = {
        "circulant-full": lambda n: is_prime_circulant_full(n).is_prime,
        "circulant-simplified": lambda n: is_prime_circulant_simplified(n).is_prime,
        "trial-division": baselines.trial_division,
        "optimized-trial-division": baselines.optimized_trial_division,
        "miller-rabin": lambda n: baselines.miller_rabin(n, 20, 1),
    }
    bad = {name: [n for n in range(2, limit + 1) if fn(n) != table.is_prime(n)]
           for name, fn in checks.items()}
    wrong = {k: v[:5] for k, v in bad.items() if v}
    report("AC1", not wrong, f"5 methods vs sieve on [2, {limit}]: mismatches {wrong or 'none'}")


def test_ac2_two_orbits_iff_prime():
    table = sieve(2000)
    bad = [n for n in range(3, 2001) if (orbit_count_direct(n) == 2) != table.is_prime(n)]
    report("AC2", not bad, f"orbit count == 2 iff prime on [3, 2000]: mismatches {bad[:5] or 'none'}")


def test_ac3_orbits_and_factors():
    bad_counts = [n for n in range(3, 2001) if orbit_count_direct(n) != brute_divisor_count(n)]
    bad_polys = [n for n in range(3, 301) if minimal_polynomial_factors(n) != brute_min_poly(n)]
    ok = not bad_counts and not bad_polys
    report("AC3", ok, f"orbit count == tau(n) on [3, 2000] (bad {bad_counts[:5] or 'none'}); "
                      f"factors == oracle on [3, 300] (bad {bad_polys[:5] or 'none'})")


def test_ac4_golden_factors():
    f7 = minimal_polynomial_factors(7)
    f6 = minimal_polynomial_factors(6)
    ok = (
        [f.coefficients for f in f7.factors] == [(-2, 1), (1, 4, 9, 8, 4, 2, 1)]
        and [f.coefficients for f in f6.factors] == [(-2, 1), (0, 1), (1, 1), (3, 0, 1)]
        and len(f7) == 2 and len(f6) == 4
        and max(f7.rounding_residual, f6.rounding_residual) < 1e-6
    )
    report("AC4", ok, f"n=7: {f7.product_string()}; n=6: {f6.product_string()}")


def test_ac5_spectrum_accuracy():
    worst = 0.0
    for n in range(5, 501):
        s = full_spectrum(n).values
        worst = max(worst, abs(sum(s)), abs(sum(z * z for z in s)))
    n = 10**4
    fast = full_spectrum(n).values
    slow = stable_spectrum(n).values
    drift = max(abs(complex(b) - a) for a, b in zip(fast, slow))
    ok = worst < 1e-8 and drift < 1e-12
    report("AC5", ok, f"max |trace| on [5, 500] = {worst:.2e}; stable vs double at 1e4 = {drift:.2e}")


def test_ac6_divisor_formula_kept_distinct():
    formula, direct = orbit_count_divisor_formula(4), orbit_count_direct(4)
    report("AC6", formula == 2 and direct == 3, f"n=4: divisor formula {formula}, direct {direct}")


def test_ac7_sweep_above_1e6():
    t0 = time.perf_counter()
    rep = bench.sweep_validate(10**6, 10**6 + 1000, "circulant-full", "miller-rabin")
    elapsed = time.perf_counter() - t0
    ok = rep.ok and elapsed < 60
    report("AC7", ok, f"[1e6, 1e6+1e3]: {len(rep.disagreements)} disagreements, "
                      f"{rep.primes_found} primes, {elapsed:.1f} s")


@pytest.mark.slow
def test_ac8_benchmark_table():
    records = bench.run_suite(bench.table1_config(repetitions=3))
    table = bench.render_table(records)
    header = table.splitlines()[0]
    shape_ok = len(records) == 24 and header.count("n~1e") == 4 and "Det.?" in header
    verdicts_ok = all(r.verdict is True for r in records)
    slowest = bench.aks_slowest(records)
    print(table)
    report("AC8", shape_ok and verdicts_ok,
           f"{len(records)} cells, all verdicts prime: {verdicts_ok}; AKS slowest: {slowest}")


def test_ac9_phase_separation():
    points = [phase_point(n) for n in range(3, 131)]
    bad = [p.n for p in points
           if p.classified_prime != p.is_prime or (p.factor_count == 2) != p.is_prime
           or (not p.is_prime and p.factor_count < 3)]
    report("AC9", not bad, f"factor count < 2.5 iff prime on [3, 130]: misplaced {bad or 'none'}")
