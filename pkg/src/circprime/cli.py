"""``circprime`` command line.

Exit codes: 0 prime / success, 1 composite / sweep disagreement,
2 runtime error, 64 usage error, 65 bad domain value, 73 unwritable output.
"""

import argparse
import contextlib
import csv
import io
import json
import os
import sys
from math import gcd

from circprime import bench, galois, minpoly, primality, spectral, spectrum
from circprime.errors import ConfigurationError, DomainError, PrecisionError, ResourceError
from circprime.numtheory import divisors, euler_totient

EXIT_PRIME = 0
EXIT_COMPOSITE = 1
EXIT_ERROR = 2
EXIT_USAGE = 64
EXIT_DATAERR = 65
EXIT_CANTCREAT = 73

LARGE_N_GUARD = 10**5
FORMATS = ("text", "json", "csv")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _integer(text):
    try:
        return int(text.replace("_", ""))
    except ValueError:
        pass
    try:
        return bench.resolve_input(text) if text.startswith("~") else int(float(text))
    except (ValueError, ConfigurationError, OverflowError):
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def _env_int(name, default):
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"environment variable {name} must be an integer, got {raw!r}") from None


def _common():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=FORMATS, default="text", help="output format")
    p.add_argument("--output", "-o", help="write output to this file instead of stdout")
    p.add_argument("--precision", type=int, default=None, help="working digits for mpmath routes")
    p.add_argument("--seed", type=int, default=None, help="Miller-Rabin witness seed")
    p.add_argument("--rounds", type=int, default=None, help="Miller-Rabin rounds")
    p.add_argument("--threshold", type=_integer, default=None, help="orbit/factorization branch point")
    return p


def build_parser():
    common = _common()
    parser = _Parser(prog="circprime", description="Circulant-matrix primality tools.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("test", parents=[common], help="test one integer")
    p.add_argument("n", type=_integer)
    p.add_argument("--method", default="circulant-full")

    for name, helptext in (
        ("orbits", "Galois orbit partition of 0..n-1"),
        ("minpoly", "integer factors of the minimal polynomial of C_n"),
        ("spectral", "spectral statistic and phase point"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("n", type=_integer)
        if name != "spectral":
            p.add_argument("--force", action="store_true", help=f"allow n > {LARGE_N_GUARD}")

    p = sub.add_parser("bench", parents=[common], help="timing table")
    p.add_argument("--config", help="key = value file (methods, inputs, repetitions, timeout, seed, preset)")
    p.add_argument("--preset", choices=("table1", "scaling"), default=None)
    p.add_argument("--methods", default=None, help="comma separated method names")
    p.add_argument("--inputs", default=None, help="comma separated integers or ~1eK anchors")
    p.add_argument("--repetitions", type=int, default=None)
    p.add_argument("--timeout", type=float, default=None, help="seconds per cell")
    p.add_argument("--memory", action="store_true", help="record tracemalloc peak per cell")
    p.add_argument("--csv", dest="csv_path", help="also write raw records as CSV here")

    p = sub.add_parser("sweep", parents=[common], help="agreement check over a range")
    p.add_argument("lo", type=_integer)
    p.add_argument("hi", type=_integer)
    p.add_argument("--methods", default="circulant-full,miller-rabin",
                   help="method,baseline (two comma separated names)")

    p = sub.add_parser("plot-data", parents=[common], help="CSV data for plotting")
    p.add_argument("kind", choices=("coefficients", "phase", "eigenvalues", "fields"))
    p.add_argument("--from", dest="lo", type=_integer, default=3)
    p.add_argument("--to", dest="hi", type=_integer, default=130)
    p.add_argument("--n", type=_integer, default=None)
    return parser


def read_config(path):
    """Parse a ``key = value`` file; ``#`` starts a comment."""
    values = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key = value")
            key, value = line.split("=", 1)
            values[key.strip().lower()] = value.strip()
    return values


class _Settings:
    def __init__(self, args):
        self.precision = args.precision or _env_int("CIRCPRIME_PRECISION", minpoly.BASE_DIGITS)
        self.seed = args.seed if args.seed is not None else _env_int("CIRCPRIME_SEED", 1)
        self.rounds = args.rounds or primality.baselines.DEFAULT_MR_ROUNDS
        self.threshold = args.threshold or primality.BRANCH_THRESHOLD
        self.format = args.format

    def method(self, text):
        # explicit miller-rabin:R:S parameters win over --rounds/--seed
        return primality.MethodId.parse(text, self.rounds, self.seed)


def _emit_rows(out, header, rows):
    writer = csv.writer(out)
    writer.writerow(header)
    writer.writerows(rows)


def _check_n3(n):
    if n < 3:
        raise DomainError(f"n must be >= 3, got {n}")


def _guard(n, force):
    if n > LARGE_N_GUARD and not force:
        raise DomainError(f"n > {LARGE_N_GUARD} needs --force (O(n * phi(n)) work)")


def cmd_test(args, cfg, out):
    if args.n < 2:
        raise UsageError(f"n must be an integer >= 2, got {args.n}")
    v = primality.test(args.n, cfg.method(args.method), threshold=cfg.threshold)
    if cfg.format == "json":
        print(v.to_json(), file=out)
    elif cfg.format == "csv":
        _emit_rows(out, ["n", "is_prime", "method", "evidence"],
                   [[v.n, int(v.is_prime), str(v.method), str(v.evidence)]])
    else:
        word = "prime" if v.is_prime else "composite"
        print(f"{v.n} is {word} [{v.method}; {v.evidence}]", file=out)
    return EXIT_PRIME if v.is_prime else EXIT_COMPOSITE


def cmd_orbits(args, cfg, out):
    _check_n3(args.n)
    _guard(args.n, args.force)
    part = galois.compute_orbits(args.n)
    formula = galois.orbit_count_divisor_formula(args.n)
    if cfg.format == "json":
        d = part.to_dict()
        d["orbit_count_direct"] = len(part)
        d["orbit_count_divisor_formula"] = formula
        print(json.dumps(d), file=out)
    elif cfg.format == "csv":
        _emit_rows(out, ["orbit", "index"], [[k, j] for k, o in enumerate(part.orbits) for j in o])
    else:
        print(f"n = {args.n}: {len(part)} orbits", file=out)
        for o in part.orbits:
            shown = ", ".join(map(str, o[:12])) + (", ..." if len(o) > 12 else "")
            print(f"  size {len(o):>6}: {{{shown}}}", file=out)
        note = "agrees" if formula == len(part) else "DISAGREES with the direct count"
        print(f"divisor-formula count: {formula} ({note})", file=out)
    return 0


def cmd_minpoly(args, cfg, out):
    _check_n3(args.n)
    _guard(args.n, args.force)
    fs = minpoly.minimal_polynomial_factors(args.n, cfg.precision)
    if cfg.format == "json":
        print(fs.to_json(), file=out)
    elif cfg.format == "csv":
        _emit_rows(out, ["factor", "index", "coefficient"],
                   [[k, i, c] for k, f in enumerate(fs.factors) for i, c in enumerate(f.coefficients)])
    else:
        print(f"n = {args.n}: {len(fs)} irreducible factors", file=out)
        print(fs.product_string(), file=out)
        print(f"max rounding residual: {fs.rounding_residual:.3g}", file=out)
    return 0


def cmd_spectral(args, cfg, out):
    _check_n3(args.n)
    pt = spectral.phase_point(args.n)
    if cfg.format == "json":
        print(json.dumps(pt.to_dict()), file=out)
    elif cfg.format == "csv":
        spectral.write_phase_csv([pt], out)
    else:
        kind = "prime" if pt.is_prime else "composite"
        print(f"n = {pt.n}: S = {pt.spectral_value:.12g}, factors = {pt.factor_count} ({kind})", file=out)
    return 0


def _suite_from(args, cfg):
    values = read_config(args.config) if args.config else {}
    preset = args.preset or values.get("preset")
    seed = cfg.seed if args.seed is not None or "seed" not in values else int(values["seed"])
    timeout = args.timeout if args.timeout is not None else (
        float(values["timeout"]) if "timeout" in values else None)
    reps = args.repetitions or int(values.get("repetitions", 3))
    if preset == "table1":
        config = bench.table1_config(reps, timeout, seed)
    elif preset == "scaling":
        config = bench.scaling_config(timeout if timeout is not None else 10.0, reps, seed)
    elif preset is None:
        methods = args.methods or values.get("methods")
        inputs = args.inputs or values.get("inputs")
        if not methods or not inputs:
            raise UsageError("bench needs --preset, or both methods and inputs")
        config = bench.SuiteConfig(
            methods=[cfg.method(m) for m in methods.split(",") if m.strip()],
            inputs=[s.strip() for s in inputs.split(",") if s.strip()],
            repetitions=reps,
            timeout_seconds=timeout,
            seed=seed,
        )
    else:
        raise UsageError(f"unknown preset {preset!r}")
    if args.methods and preset:
        config.methods = [cfg.method(m) for m in args.methods.split(",") if m.strip()]
    config.measure_memory = args.memory
    return config


def cmd_bench(args, cfg, out):
    config = _suite_from(args, cfg)
    records = bench.run_suite(config)
    if args.csv_path:
        with open(args.csv_path, "w", newline="") as fh:
            bench.write_csv(records, fh)
    if cfg.format == "json":
        print(bench.to_json(records), file=out)
    elif cfg.format == "csv":
        bench.write_csv(records, out)
    else:
        print(bench.render_table(records), file=out)
        slowest = bench.aks_slowest(records)
        flags = ", ".join(f"{n}: {'yes' if v else 'no' if v is not None else 'n/a'}" for n, v in slowest.items())
        print(f"AKS slowest per input: {flags}", file=out)
    return 0


def cmd_sweep(args, cfg, out):
    names = [m for m in args.methods.split(",") if m.strip()]
    if len(names) != 2:
        raise UsageError("--methods takes exactly two names: method,baseline")
    report = bench.sweep_validate(args.lo, args.hi, cfg.method(names[0]), cfg.method(names[1]))
    if cfg.format == "json":
        print(json.dumps(report.to_dict()), file=out)
    elif cfg.format == "csv":
        _emit_rows(out, ["n", str(report.method), str(report.baseline)],
                   [[n, int(a), int(b)] for n, a, b in report.disagreements])
    else:
        print(report.summary(), file=out)
    return 0 if report.ok else EXIT_COMPOSITE


def cmd_plot_data(args, cfg, out):
    if args.kind == "eigenvalues":
        n = args.n if args.n is not None else 97
        _check_n3(n)
        spec = spectrum.full_spectrum(n) if cfg.precision <= 15 else spectrum.stable_spectrum(n, cfg.precision)
        spec.write_csv(out)
    elif args.kind == "fields":
        n = args.n if args.n is not None else 90
        _check_n3(n)
        _emit_rows(out, ["d", "phi_d", "unitary"],
                   [[d, euler_totient(d), int(d > 1 and gcd(d, n // d) == 1)] for d in divisors(n)])
    else:
        lo, hi = max(args.lo, 3), args.hi
        if lo > hi:
            raise DomainError(f"empty range [{lo}, {hi}]")
        if args.kind == "phase":
            spectral.write_phase_csv([spectral.phase_point(n) for n in range(lo, hi + 1)], out)
        else:
            spectral.write_coefficient_csv(range(lo, hi + 1), out)
    return 0


COMMANDS = {
    "test": cmd_test,
    "orbits": cmd_orbits,
    "minpoly": cmd_minpoly,
    "spectral": cmd_spectral,
    "bench": cmd_bench,
    "sweep": cmd_sweep,
    "plot-data": cmd_plot_data,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError(parser.format_usage().strip())
        cfg = _Settings(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE

    buffer = io.StringIO()
    try:
        code = COMMANDS[args.command](args, cfg, buffer)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except ConfigurationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATAERR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CANTCREAT
    except (PrecisionError, ResourceError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR

    text = buffer.getvalue()
    if args.output:
        try:
            with open(args.output, "w", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write {args.output}: {exc}", file=sys.stderr)
            return EXIT_CANTCREAT
    else:
        with contextlib.suppress(BrokenPipeError):
            sys.stdout.write(text)
    return code


def run():
    sys.exit(main())
