"""Acceptance gate: one test per criterion, each at its stated tolerance."""

import json
import random
import subprocess
import sys
import time

import jsonschema
import pytest

from gf2diff import schemas
from gf2diff.decomp import decompose, exponents_for_n, is_unity_root, subgroup_values
from gf2diff.field import FieldElement, make_binary_field, make_field
from gf2diff.solver import (
    Group,
    brute_force_solutions,
    count_trace_system,
    exponent_d,
    image_set_phi,
    lambda_enumerate,
    phi_image_by_trace,
    solve_artin_schreier,
    solve_constructive,
    solve_mu_case,
)
from gf2diff.spectrum import brute_spectrum, closed_form_spectrum, solution_counts

DESK = [1, 2, 3]


def timed(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


@pytest.mark.criterion(1, "brute spectrum equals the closed form, n = 1..3")
def test_spectrum_reproduction():
    expected = {
        1: {0: 9, 2: 6, 4: 1},
        2: {0: 155, 2: 96, 12: 4, 16: 1},
        3: {0: 2295, 2: 1792, 56: 8, 64: 1},
    }
    make_field(3).np_tables()  # table construction is not part of the count

    def body():
        for n in DESK:
            ctx = make_field(n)
            brute = brute_spectrum(ctx, exponent_d(ctx.q))
            assert brute.w == closed_form_spectrum(ctx).w == expected[n]

    assert timed(body) < 1.0


@pytest.mark.criterion(2, "b = 1 alone has q^2 solutions; q^2-q bin is mu_(q+1) minus 1")
def test_conjectured_structure():
    def body():
        for n in DESK:
            ctx = make_field(n)
            q = ctx.q
            counts = solution_counts(ctx, exponent_d(q))
            mu = subgroup_values(ctx, q + 1) - {1}
            assert len(mu) == q
            assert [b for b in range(ctx.size) if counts[b] == q * q] == [1]
            mid = {b for b in range(ctx.size) if counts[b] == q * q - q}
            if q == 2:
                # q^2 - q = 2 here, so the Lambda elements share the bin
                lam = {b.value for b in lambda_enumerate(ctx)}
                assert mid == mu | lam
            else:
                assert mid == mu
            rest = set(range(ctx.size)) - mu - {1}
            assert all(counts[b] in (0, 2) for b in rest)

    assert timed(body) < 5.0


@pytest.mark.criterion(3, "|Lambda| = q^3(q-1)/2 for n = 1..4")
def test_lambda_census():
    sizes = {}

    def body():
        for n in (1, 2, 3, 4):
            t0 = time.perf_counter()
            sizes[n] = len(lambda_enumerate(make_field(n)))
            if n == 4:
                assert time.perf_counter() - t0 < 10.0

    body()
    assert sizes == {1: 4, 2: 96, 3: 1792, 4: 30720}


@pytest.mark.criterion(4, "constructive solvers equal brute force on Lambda and mu_(q+1)")
def test_constructive_equals_oracle():
    def body():
        for n in DESK:
            ctx = make_field(n)
            for b in lambda_enumerate(ctx):
                assert solve_constructive(b).values() == brute_force_solutions(b).values()
            for v in sorted(subgroup_values(ctx, ctx.q + 1)):
                b = FieldElement(ctx, v)
                assert solve_mu_case(b).values() == brute_force_solutions(b).values()

    assert timed(body) < 30.0


@pytest.mark.criterion(5, "decomposition round trip and exponent identities")
def test_decomposition():
    for n in range(1, 16):
        assert exponents_for_n(n).check() == []
    for n in DESK:
        ctx = make_field(n)
        q = ctx.q
        for v in range(1, ctx.size):
            x = FieldElement(ctx, v)
            x1, x2, x3 = decompose(x)
            assert x1 * x2 * x3 == x
            assert is_unity_root(x1, q - 1) and is_unity_root(x2, q + 1)
            assert is_unity_root(x3, q * q + 1)


@pytest.mark.criterion(6, "x^2 + x + delta root counts follow the absolute trace, m <= 12")
def test_artin_schreier():
    for m in range(1, 13):
        ctx = make_binary_field(m)
        for v in range(ctx.size):
            roots = solve_artin_schreier(FieldElement(ctx, v))
            assert len(roots) == (0 if ctx.trace(v) else 2)
            for r in roots:
                assert ctx.square(r.value) ^ r.value ^ v == 0


@pytest.mark.criterion(7, "two-trace system counts are 0, q/2 or q/4")
def test_trace_system():
    for n in (1, 2, 3, 4):
        ctx = make_field(n)
        q = ctx.q
        fq = ctx.subfield(n)
        for beta in fq:
            if not beta:
                continue
            for gamma in fq:
                want = 0 if gamma == 0 else q // 2 if gamma == beta else q // 4
                got = count_trace_system(FieldElement(ctx, beta), FieldElement(ctx, gamma))
                assert got == want


@pytest.mark.criterion(8, "image of x + 1/x on the four groups matches the trace description")
def test_phi_images():
    for n in DESK:
        ctx = make_field(n)
        for group in Group:
            assert image_set_phi(ctx, group) == phi_image_by_trace(ctx, group)


@pytest.mark.criterion(9, "histogram identities for 50 random exponents at m = 8, 12, 16")
def test_histogram_identities():
    rng = random.Random(20240601)

    def body():
        for m in (8, 12, 16):
            ctx = make_binary_field(m)
            for _ in range(50):
                h = brute_spectrum(ctx, rng.randrange(ctx.order))
                assert sum(h.w.values()) == 1 << m
                assert sum(i * c for i, c in h.w.items()) == 1 << m

    assert timed(body) < 30.0


def _cli(*argv):
    return subprocess.run(
        [sys.executable, "-m", "gf2diff", *argv], capture_output=True, text=True, timeout=300
    )


@pytest.mark.criterion(10, "verify --n 2 --format json contract, mutation and --jobs determinism")
def test_cli_contract():
    base = ["verify", "--n", "2", "--format", "json"]
    good = _cli(*base)
    assert good.returncode == 0, good.stderr
    doc = json.loads(good.stdout)
    jsonschema.validate(doc, schemas.VERIFY)
    assert doc["discrepancies"] == []

    bad = _cli(*base, "--mutate-closed-form")
    assert bad.returncode == 1
    jsonschema.validate(json.loads(bad.stdout), schemas.VERIFY)

    for jobs in ("2", "0"):
        again = _cli(*base, "--jobs", jobs)
        assert again.returncode == 0
        assert again.stdout == good.stdout
