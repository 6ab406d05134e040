"""Timing and validation harness.

Cells (method, n) run one after another. Each cell does one untimed
warm-up call and then ``repetitions`` timed calls on the monotonic clock;
the record keeps mean and min. With a timeout set, every cell runs in a
forked child process that is killed when the budget runs out, and the
record is kept with empty timing fields and ``timeout=True``.
"""

import csv
import json
import math
import multiprocessing
import time
import tracemalloc
from dataclasses import asdict, dataclass, field

from circprime.errors import ConfigurationError
from circprime.numtheory import is_probable_prime
from circprime.primality import ALL_METHODS, Method, MethodId, test

CSV_FIELDS = (
    "method",
    "n",
    "repetitions",
    "mean_seconds",
    "min_seconds",
    "verdict",
    "peak_memory_bytes",
    "timeout",
)

TABLE1_MAGNITUDES = (6, 8, 9, 10)
SCALING_MAGNITUDES = tuple(range(2, 16))


@dataclass
class BenchRecord:
    method: MethodId
    n: int
    repetitions: int
    mean_seconds: float = None
    min_seconds: float = None
    verdict: bool = None
    peak_memory_bytes: int = None
    timeout: bool = False
    error: str = None

    def row(self):
        return {
            "method": str(self.method),
            "n": self.n,
            "repetitions": self.repetitions,
            "mean_seconds": "" if self.mean_seconds is None else repr(self.mean_seconds),
            "min_seconds": "" if self.min_seconds is None else repr(self.min_seconds),
            "verdict": "" if self.verdict is None else int(self.verdict),
            "peak_memory_bytes": "" if self.peak_memory_bytes is None else self.peak_memory_bytes,
            "timeout": int(self.timeout),
        }

    @classmethod
    def from_row(cls, row):
        def opt(value, cast):
            return None if value in ("", None) else cast(value)

        return cls(
            method=MethodId.parse(row["method"]),
            n=int(row["n"]),
            repetitions=int(row["repetitions"]),
            mean_seconds=opt(row["mean_seconds"], float),
            min_seconds=opt(row["min_seconds"], float),
            verdict=opt(row["verdict"], lambda v: bool(int(v))),
            peak_memory_bytes=opt(row["peak_memory_bytes"], int),
            timeout=bool(int(row["timeout"])),
        )


@dataclass
class SuiteConfig:
    methods: list
    inputs: list
    repetitions: int = 3
    timeout_seconds: float = None
    seed: int = 1
    measure_memory: bool = False

    def __post_init__(self):
        if self.repetitions < 1:
            raise ConfigurationError("repetitions must be >= 1")
        self.methods = [self._method(m) for m in self.methods]
        self.inputs = [resolve_input(x) for x in self.inputs]

    def _method(self, m):
        if isinstance(m, str):
            m = MethodId.parse(m)
        if m.tag is Method.MILLER_RABIN and m.seed != self.seed:
            m = MethodId(Method.MILLER_RABIN, m.rounds, self.seed)
        return m


def next_prime(n):
    """Smallest prime >= n."""
    n = max(n, 2)
    while not is_probable_prime(n):
        n += 1
    return n


def resolve_input(x):
    """An int as is; ``"~1e6"`` or ``"~10^6"`` means the first prime >= 10**6."""
    if isinstance(x, int):
        return x
    text = str(x).strip()
    if text.startswith("~"):
        return next_prime(_magnitude(text[1:]))
    try:
        return int(text)
    except ValueError:
        raise ConfigurationError(f"bad input {x!r}") from None


def _magnitude(text):
    if "e" in text:
        base, exp = text.split("e", 1)
        return int(base or 1) * 10 ** int(exp)
    if "^" in text:
        base, exp = text.split("^", 1)
        return int(base) ** int(exp)
    return int(text)


def table1_config(repetitions=3, timeout_seconds=None, seed=1):
    """Six methods against the first prime above 10^6, 10^8, 10^9, 10^10."""
    return SuiteConfig(
        methods=list(ALL_METHODS),
        inputs=[f"~1e{k}" for k in TABLE1_MAGNITUDES],
        repetitions=repetitions,
        timeout_seconds=timeout_seconds,
        seed=seed,
    )


def scaling_config(timeout_seconds=10.0, repetitions=3, seed=1):
    """Every method against the first prime above 10^2 .. 10^15."""
    return SuiteConfig(
        methods=list(ALL_METHODS),
        inputs=[f"~1e{k}" for k in SCALING_MAGNITUDES],
        repetitions=repetitions,
        timeout_seconds=timeout_seconds,
        seed=seed,
    )


def _measure(method, n, repetitions, measure_memory):
    test(n, method)  # warm-up
    times = []
    verdicts = set()
    for _ in range(repetitions):
        t0 = time.perf_counter()
        v = test(n, method)
        times.append(time.perf_counter() - t0)
        verdicts.add(v.is_prime)
    if len(verdicts) != 1:
        raise RuntimeError(f"{method} gave inconsistent verdicts on {n}")
    peak = None
    if measure_memory:
        tracemalloc.start()
        try:
            test(n, method)
            peak = tracemalloc.get_traced_memory()[1]
        finally:
            tracemalloc.stop()
    return math.fsum(times) / len(times), min(times), verdicts.pop(), peak


def _child(conn, method, n, repetitions, measure_memory):
    try:
        conn.send(("ok", _measure(method, n, repetitions, measure_memory)))
    except BaseException as exc:  # report anything back to the parent
        conn.send(("error", f"{type(exc).__name__}: {exc}"))
    finally:
        conn.close()


def time_method(method, n, repetitions=3, timeout_seconds=None, measure_memory=False):
    """Time ``repetitions`` calls of ``method`` on ``n`` after one warm-up."""
    if isinstance(method, str):
        method = MethodId.parse(method)
    if repetitions < 1:
        raise ConfigurationError("repetitions must be >= 1")
    record = BenchRecord(method, n, repetitions)
    if timeout_seconds is None:
        try:
            result = _measure(method, n, repetitions, measure_memory)
        except Exception as exc:
            record.error = f"{type(exc).__name__}: {exc}"
            return record
    else:
        ctx = multiprocessing.get_context("fork")
        parent, child = ctx.Pipe(duplex=False)
        proc = ctx.Process(target=_child, args=(child, method, n, repetitions, measure_memory))
        proc.start()
        child.close()
        if not parent.poll(timeout_seconds):
            proc.terminate()
            proc.join()
            record.timeout = True
            return record
        status, result = parent.recv()
        proc.join()
        if status != "ok":
            record.error = result
            return record
    record.mean_seconds, record.min_seconds, record.verdict, record.peak_memory_bytes = result
    return record


def run_suite(config, progress=None):
    """Every method against every input, in config order; never aborts."""
    records = []
    for method in config.methods:
        for n in config.inputs:
            rec = time_method(
                method, n, config.repetitions, config.timeout_seconds, config.measure_memory
            )
            records.append(rec)
            if progress is not None:
                progress(rec)
    return records


def _fmt_seconds(rec):
    if rec.timeout:
        return "timeout"
    if rec.mean_seconds is None:
        return "error"
    return f"{rec.mean_seconds:.2e}"


def magnitude_label(n):
    return f"n~1e{int(math.floor(math.log10(n)))}"


def render_table(records):
    """Methods as rows, inputs as columns, mean seconds in the cells."""
    methods = list(dict.fromkeys(r.method for r in records))
    inputs = list(dict.fromkeys(r.n for r in records))
    cells = {(r.method, r.n): r for r in records}
    headers = ["Method"] + [magnitude_label(n) for n in inputs] + ["Det.?"]
    rows = []
    for m in methods:
        det = "No*" if m.tag is Method.MILLER_RABIN else "Yes"
        row = [m.label]
        for n in inputs:
            rec = cells.get((m, n))
            row.append("-" if rec is None else _fmt_seconds(rec))
        rows.append(row + [det])
    widths = [max(len(str(x)) for x in col) for col in zip(headers, *rows)]
    lines = [" | ".join(h.ljust(w) for h, w in zip(headers, widths))]
    lines.append("-+-".join("-" * w for w in widths))
    for row in rows:
        lines.append(" | ".join(str(c).ljust(w) for c, w in zip(row, widths)))
    lines.append("inputs: " + ", ".join(str(n) for n in inputs))
    return "\n".join(lines)


def aks_slowest(records):
    """For each input, whether AKS has the largest mean time (None if unknown)."""
    out = {}
    for n in dict.fromkeys(r.n for r in records):
        timed = [r for r in records if r.n == n and r.mean_seconds is not None]
        aks = [r for r in timed if r.method.tag is Method.AKS]
        if not aks:
            out[n] = None
            continue
        out[n] = all(aks[0].mean_seconds >= r.mean_seconds for r in timed)
    return out


def write_csv(records, stream):
    writer = csv.DictWriter(stream, fieldnames=CSV_FIELDS)
    writer.writeheader()
    for r in records:
        writer.writerow(r.row())


def read_csv(stream):
    return [BenchRecord.from_row(row) for row in csv.DictReader(stream)]


def to_json(records):
    return json.dumps([r.row() for r in records], indent=2)


@dataclass
class SweepReport:
    lo: int
    hi: int
    method: MethodId
    baseline: MethodId
    tested: int = 0
    primes_found: int = 0
    baseline_primes: int = 0
    disagreements: list = field(default_factory=list)
    elapsed_seconds: float = 0.0

    @property
    def ok(self):
        return not self.disagreements

    def to_dict(self):
        d = asdict(self)
        d["method"] = str(self.method)
        d["baseline"] = str(self.baseline)
        d["disagreements"] = [
            {"n": n, "method": a, "baseline": b} for n, a, b in self.disagreements
        ]
        return d

    def summary(self):
        lines = [
            f"range [{self.lo}, {self.hi}]: {self.tested} integers tested",
            f"{self.method}: {self.primes_found} primes; {self.baseline}: {self.baseline_primes} primes",
            f"disagreements: {len(self.disagreements)}",
        ]
        for n, a, b in self.disagreements:
            lines.append(f"  n={n}: {self.method} says {a}, {self.baseline} says {b}")
        lines.append(f"elapsed: {self.elapsed_seconds:.3f} s")
        return "\n".join(lines)


def sweep_validate(lo, hi, method, baseline):
    """Run both methods on every n in [lo, hi] and list where they differ."""
    if not 2 <= lo <= hi:
        raise ConfigurationError(f"need 2 <= lo <= hi, got [{lo}, {hi}]")
    if isinstance(method, str):
        method = MethodId.parse(method)
    if isinstance(baseline, str):
        baseline = MethodId.parse(baseline)
    report = SweepReport(lo, hi, method, baseline)
    t0 = time.perf_counter()
    for n in range(lo, hi + 1):
        a = test(n, method).is_prime
        b = test(n, baseline).is_prime
        report.tested += 1
        report.primes_found += a
        report.baseline_primes += b
        if a != b:
            report.disagreements.append((n, a, b))
    report.elapsed_seconds = time.perf_counter() - t0
    return report
