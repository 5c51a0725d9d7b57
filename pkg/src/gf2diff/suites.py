"""Exhaustive self-check suites over one field F_{q^4}.

Each suite returns a list of discrepancy messages; an empty list is a pass.
They are what ``gf2diff verify`` runs, and the test-suite reuses them.
"""

import random

from .decomp import decompose, exponents_for_n, subgroup_values
from .field import FieldElement, MAX_N
from .solver import (
    Domain,
    Group,
    _x_plus_inv_values,
    brute_solution_table,
    count_trace_system,
    image_set_phi,
    lambda_enumerate,
    lambda_size_formula,
    phi_image_by_trace,
    solve_artin_schreier,
    solve_closed,
    trace_system_count_formula,
)
from .spectrum import verify_conjecture


def suite_conjecture(ctx, closed_form=None, jobs=1):
    return verify_conjecture(ctx, closed_form, jobs).discrepancies


def suite_lambda_census(ctx, jobs=1):
    got, want = len(lambda_enumerate(ctx, jobs)), lambda_size_formula(ctx.q)
    return [] if got == want else [f"|Lambda| = {got}, expected {want}"]


def suite_decomposition(ctx):
    bad = []
    for n in range(1, MAX_N + 1):
        bad.extend(f"n={n}: {p}" for p in exponents_for_n(n).check())
    q = ctx.q
    for v in range(1, ctx.size):
        x = FieldElement(ctx, v)
        x1, x2, x3 = decompose(x)
        if (x1 * x2 * x3) != x:
            bad.append(f"{x}: x1*x2*x3 != x")
        if (x1 ** (q - 1)) != 1 or (x2 ** (q + 1)) != 1 or (x3 ** (q * q + 1)) != 1:
            bad.append(f"{x}: a factor is outside its subgroup")
    return bad


def suite_artin_schreier(ctx):
    bad = []
    for v in range(ctx.size):
        delta = FieldElement(ctx, v)
        roots = solve_artin_schreier(delta)
        want = 2 * (1 - ctx.trace(v))
        if len(roots) != want:
            bad.append(f"delta={delta}: {len(roots)} roots, expected {want}")
        for r in roots:
            if r * r + r + delta:
                bad.append(f"delta={delta}: {r} is not a root")
    return bad


def suite_x_plus_inv(ctx):
    """x + 1/x = a on both levels, and the four image-set descriptions."""
    n = ctx.n
    bad = []
    for level in (1, 2):
        k = level * n
        for a in ctx.subfield(k):
            if not a:
                continue
            tr = ctx.trace(ctx.inv(a), 1, k)
            mu = _x_plus_inv_values(ctx, a, Domain.MU, level)
            sub = _x_plus_inv_values(ctx, a, Domain.SUBFIELD, level)
            if len(mu) != (2 if tr == 1 else 0):
                bad.append(f"level {level}, a={ctx.fmt(a)}: {len(mu)} roots in mu")
            if len(sub) != (0 if tr == 1 else 2):
                bad.append(f"level {level}, a={ctx.fmt(a)}: {len(sub)} roots in subfield")
            for pair in (mu, sub):
                if len(pair) == 2 and ctx.mul(pair[0], pair[1]) != 1:
                    bad.append(f"level {level}, a={ctx.fmt(a)}: roots are not inverse")
    for group in Group:
        if image_set_phi(ctx, group) != phi_image_by_trace(ctx, group):
            bad.append(f"image of x + 1/x on {group.value} differs from its trace description")
    return bad


def suite_trace_system(ctx):
    n, q = ctx.n, ctx.q
    fq = ctx.subfield(n)
    bad = []
    for beta in fq:
        if not beta:
            continue
        for gamma in fq:
            got = count_trace_system(FieldElement(ctx, beta), FieldElement(ctx, gamma))
            want = trace_system_count_formula(q, beta, gamma)
            if got != want:
                bad.append(f"beta={ctx.fmt(beta)} gamma={ctx.fmt(gamma)}: {got} != {want}")
    return bad


def suite_constructive(ctx, jobs=1):
    """Constructive solutions equal the brute-force ones for every b in
    Lambda, in mu_{q+1} (which contains 1)."""
    table = brute_solution_table(ctx, jobs)
    targets = {b.value for b in lambda_enumerate(ctx, jobs)} | subgroup_values(ctx, ctx.q + 1)
    bad = []
    for b in sorted(targets):
        got = solve_closed(FieldElement(ctx, b)).values()
        if got != table.get(b, []):
            bad.append(f"b={ctx.fmt(b)}: constructive {len(got)} vs brute {len(table.get(b, []))}")
    return bad


def suite_field_axioms(ctx, seed=0, samples=200):
    rng = random.Random(seed)
    bad = []
    for _ in range(samples):
        a, b, c = (FieldElement(ctx, rng.randrange(ctx.size)) for _ in range(3))
        if (a * b) * c != a * (b * c) or a * b != b * a or a * (b + c) != a * b + a * c:
            bad.append(f"axiom failure at ({a}, {b}, {c})")
        if a and a * a.inverse() != 1:
            bad.append(f"{a} * inverse != 1")
        if ctx.mul(a.value, b.value) != ctx.mul_schoolbook(a.value, b.value):
            bad.append(f"table and schoolbook products differ at ({a}, {b})")
    return bad


def run_all(ctx, closed_form=None, jobs=1, seed=0, progress=None):
    """Run every suite; returns [(name, discrepancies), ...]."""
    suites = [
        ("conjecture", lambda: suite_conjecture(ctx, closed_form, jobs)),
        ("lambda_census", lambda: suite_lambda_census(ctx, jobs)),
        ("decomposition", lambda: suite_decomposition(ctx)),
        ("artin_schreier", lambda: suite_artin_schreier(ctx)),
        ("x_plus_inverse", lambda: suite_x_plus_inv(ctx)),
        ("trace_system", lambda: suite_trace_system(ctx)),
        ("constructive", lambda: suite_constructive(ctx, jobs)),
        ("field_axioms", lambda: suite_field_axioms(ctx, seed)),
    ]
    results = []
    for name, run in suites:
        if progress:
            progress(name)
        results.append((name, run()))
    return results
