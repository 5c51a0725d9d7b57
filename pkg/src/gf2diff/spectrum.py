"""Differential spectra of power maps x -> x^d on GF(2^m).

For each b the number of x with x^d + (x+1)^d = b is tallied; the spectrum
w_i counts the b hit exactly i times. ``brute_spectrum`` works for any d by a
single vectorized pass over the field. ``closed_form_spectrum`` gives the
four-bin answer for d = q^3 + q^2 + q - 1 on F_{q^4}, and
``verify_conjecture`` checks the two against each other b by b.
"""

from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .decomp import subgroup_values
from .errors import ScanLimitError
from .parallel import map_ranges
from .solver import EXHAUSTIVE_MAX_N, exponent_d, lambda_enumerate

BRUTE_MAX_DEGREE = 24


@dataclass
class SpectrumHistogram:
    m: int
    d: int
    w: dict

    def __post_init__(self):
        self.w = {int(i): int(c) for i, c in sorted(self.w.items()) if c}

    def pairs(self):
        """[(i, w_i), ...] ascending in i."""
        return sorted(self.w.items())

    @property
    def delta_f(self):
        return diff_uniformity(self)

    def check(self):
        """Violated histogram identities, as messages."""
        size = 1 << self.m
        problems = []
        if sum(self.w.values()) != size:
            problems.append(f"sum w_i = {sum(self.w.values())} != 2^m = {size}")
        if sum(i * c for i, c in self.w.items()) != size:
            problems.append(f"sum i*w_i = {sum(i * c for i, c in self.w.items())} != 2^m = {size}")
        odd = [i for i in self.w if i % 2]
        if odd:
            problems.append(f"odd solution counts present: {odd}")
        return problems


def merge_bins(bins):
    """Sum (i, w) pairs that share the same i."""
    merged = Counter()
    for i, c in bins:
        merged[i] += c
    return dict(merged)


def diff_uniformity(h):
    keys = [i for i, c in h.w.items() if c and i > 0]
    if not keys:
        raise ValueError("histogram has no positive solution count")
    return max(keys)


def _count_chunk(ctx, lo, hi, d):
    exp, log = ctx.np_tables()
    order = ctx.order
    dr = d % order
    zero_val = 1 if d == 0 else 0

    def powvec(v):
        out = exp[(log[v] * dr) % order]
        return np.where(v == 0, zero_val, out)

    xs = np.arange(lo, hi, dtype=np.int64)
    b = powvec(xs) ^ powvec(xs ^ 1)
    return np.bincount(b, minlength=ctx.size)


def solution_counts(ctx, d, jobs=1):
    """Array c with c[b] = #{x : x^d + (x+1)^d = b}."""
    if ctx.m > BRUTE_MAX_DEGREE:
        raise ScanLimitError(f"brute force is capped at m <= {BRUTE_MAX_DEGREE}, got m={ctx.m}")
    if d < 0:
        raise ValueError("exponent must be non-negative")
    parts = map_ranges(_count_chunk, ctx, ctx.size, jobs, d)
    return sum(parts[1:], parts[0])


def brute_spectrum(ctx, d, jobs=1):
    counts = solution_counts(ctx, d, jobs)
    w = np.bincount(counts)
    return SpectrumHistogram(ctx.m, d, {i: int(c) for i, c in enumerate(w) if c})


def closed_form_bins(q):
    """The four (i, w_i) bins for d = q^3 + q^2 + q - 1, before merging."""
    return [
        (0, (q ** 3 // 2 - 1) * (q + 1)),
        (2, q ** 3 * (q - 1) // 2),
        (q * q, 1),
        (q * q - q, q),
    ]


def closed_form_spectrum(ctx):
    q = ctx.q
    return SpectrumHistogram(ctx.m, exponent_d(q), merge_bins(closed_form_bins(q)))


@dataclass
class VerifyReport:
    n: int
    q: int
    brute: SpectrumHistogram
    closed: SpectrumHistogram
    top_bin: list = field(default_factory=list)
    mu_bin: list = field(default_factory=list)
    lambda_size: int = 0
    discrepancies: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.discrepancies


def verify_conjecture(ctx, closed_form=None, jobs=1):
    """Compare the brute-force per-b counts with the predicted structure.

    ``closed_form`` overrides the histogram under test (used to check that a
    wrong prediction is caught).
    """
    n, q = ctx.n, ctx.q
    if n > EXHAUSTIVE_MAX_N:
        raise ScanLimitError(f"verification is capped at n <= {EXHAUSTIVE_MAX_N}")
    d = exponent_d(q)
    counts = solution_counts(ctx, d, jobs)
    brute = SpectrumHistogram(ctx.m, d, {i: int(c) for i, c in enumerate(np.bincount(counts)) if c})
    closed = closed_form if closed_form is not None else closed_form_spectrum(ctx)
    report = VerifyReport(n, q, brute, closed)
    bad = report.discrepancies

    if brute.w != closed.w:
        bad.append(f"spectrum mismatch: brute {brute.pairs()} vs closed form {closed.pairs()}")
    bad.extend(f"brute histogram: {p}" for p in brute.check())

    def where(k):
        return {int(b) for b in np.flatnonzero(counts == k)}

    mu = subgroup_values(ctx, q + 1) - {1}
    lam = {b.value for b in lambda_enumerate(ctx, jobs)}
    report.lambda_size = len(lam)
    top = where(q * q)
    report.top_bin = sorted(top)
    if top != {1}:
        bad.append(f"b with q^2 solutions: {sorted(top)} (expected [1])")
    # at q = 2 the q^2 - q bin coincides with the 2-solution bin
    mid = where(q * q - q)
    report.mu_bin = sorted(mid & mu) if q == 2 else sorted(mid)
    if mid != (mu | lam if q * q - q == 2 else mu):
        bad.append(f"b with q^2-q solutions differ from mu_(q+1)\\{{1}}: {sorted(mid ^ mu)}")
    if len(mu) != q:
        bad.append(f"|mu_(q+1)\\{{1}}| = {len(mu)} != q")
    two = where(2)
    if two - mu != lam:
        bad.append(f"b with 2 solutions differ from Lambda on {len((two - mu) ^ lam)} elements")
    allowed = {0, 2, q * q, q * q - q}
    stray = sorted(int(b) for b in np.flatnonzero(~np.isin(counts, list(allowed))))
    if stray:
        bad.append(f"b with unexpected solution counts: {stray[:10]}")
    return report
