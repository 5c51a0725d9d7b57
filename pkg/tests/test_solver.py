import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gf2diff.decomp import subgroup_values
from gf2diff.errors import DomainError, ScanLimitError
from gf2diff.field import FieldElement, make_binary_field, make_field
from gf2diff.solver import (
    BClass,
    Domain,
    Group,
    Method,
    _degenerate_solutions,
    brute_force_solutions,
    brute_solution_table,
    classify_b,
    count_solutions,
    count_trace_system,
    exponent_d,
    image_set_phi,
    lambda_condition,
    lambda_enumerate,
    lambda_size_formula,
    lambda_witness,
    phi_image_by_trace,
    predicted_count,
    solve_artin_schreier,
    solve_closed,
    solve_constructive,
    solve_mu_case,
    solve_x_plus_inv,
    trace_system_count_formula,
)

from oracles import brute_preimage_counts, naive_trace


def vals(elements):
    return sorted(e.value for e in elements)


# -- frozen examples in GF(16), q = 2 ---------------------------------------

def test_gf16_lambda_and_classes():
    ctx = make_field(1)
    assert vals(lambda_enumerate(ctx)) == [0x9, 0xB, 0xD, 0xE]
    assert classify_b(ctx(1)) is BClass.ONE
    assert classify_b(ctx(0x6)) is BClass.MU_Q1_NOT_ONE
    assert classify_b(ctx(0xB)) is BClass.LAMBDA
    assert classify_b(ctx(0x5)) is BClass.NONE
    assert classify_b(ctx(0)) is BClass.NONE


def test_gf16_solution_sets():
    ctx = make_field(1)
    assert vals(solve_constructive(ctx(0xB))) == [0xC, 0xD]
    assert vals(solve_mu_case(ctx(0x6))) == [0x2, 0x3]
    assert vals(solve_mu_case(ctx(0x1))) == [0x0, 0x1, 0x6, 0x7]
    assert vals(solve_closed(ctx(0x5))) == []
    assert vals(brute_force_solutions(ctx(0xB))) == [0xC, 0xD]
    assert brute_force_solutions(ctx(0xB)).method is Method.BRUTE


def test_gf256_mu_bin():
    ctx = make_field(2)
    twelve = [b for b in range(ctx.size) if len(brute_force_solutions(ctx(b))) == 12]
    assert twelve == [0x0C, 0x50, 0xB0, 0xED]
    assert set(twelve) == subgroup_values(ctx, 5) - {1}


def test_gf16_quadratics():
    ctx = make_field(1)
    assert vals(solve_artin_schreier(ctx(0x2))) == [0xA, 0xB]
    assert vals(solve_artin_schreier(ctx(0x8))) == []
    assert vals(solve_artin_schreier(make_binary_field(2)(0x1))) == [0x2, 0x3]
    # inside GF(16) the copy of GF(4) is {0, 1, 6, 7}
    assert vals(solve_artin_schreier(ctx(0x1), k=2)) == [0x6, 0x7]
    assert vals(solve_x_plus_inv(ctx(0x7), Domain.MU)) == [0x8, 0xF]
    # Tr over F_4 of 1/g^10 = g^5 is 1, so the roots sit on the unit circle
    assert ctx.trace(ctx.inv(0x7), 1, 2) == 1
    assert vals(solve_x_plus_inv(ctx(0x7), Domain.SUBFIELD)) == []
    # image of mu_5 \ {1} under x + 1/x is {6, 7}
    assert {v ^ ctx.inv(v) for v in (0x8, 0xC, 0xA, 0xF)} == {6, 7}
    assert vals(image_set_phi(ctx, Group.MU_Q2P1)) == [6, 7]


def test_solver_domain_errors():
    ctx = make_field(1)
    with pytest.raises(DomainError):
        solve_constructive(ctx(0x5))
    with pytest.raises(DomainError):
        solve_mu_case(ctx(0xB))
    with pytest.raises(DomainError):
        solve_x_plus_inv(ctx(0), Domain.MU)
    with pytest.raises(DomainError):
        solve_x_plus_inv(ctx(0x2), Domain.MU)  # not in F_4
    with pytest.raises(DomainError):
        count_trace_system(ctx(0), ctx(1))


def test_scan_limits():
    with pytest.raises(ScanLimitError):
        lambda_enumerate(make_field(5))
    with pytest.raises(ScanLimitError):
        brute_force_solutions(make_field(5)(1))


def test_closed_solver_beyond_scan_cap():
    ctx = make_field(5)
    b = ctx(1)
    sols = solve_closed(b)
    d = exponent_d(ctx.q)
    assert len(sols) == ctx.q ** 2
    assert all(ctx.pow(x.value, d) ^ ctx.pow(x.value ^ 1, d) == 1 for x in sols)


def test_predicted_counts():
    assert [predicted_count(c, 4) for c in BClass] == [16, 12, 2, 0]


# -- exhaustive properties, n <= 3 -----------------------------------------

def test_brute_table_matches_naive_oracle(quartic_field):
    ctx = quartic_field
    table = brute_solution_table(ctx)
    counts = brute_preimage_counts(ctx.modulus, exponent_d(ctx.q))
    assert [len(table.get(b, [])) for b in range(ctx.size)] == counts


def test_partition_and_oracle_agreement(quartic_field):
    ctx = quartic_field
    table = brute_solution_table(ctx)
    total = 0
    for b in range(ctx.size):
        predicted = count_solutions(ctx(b))
        assert predicted == len(table.get(b, [])), hex(b)
        total += predicted
    assert total == ctx.size


def test_constructive_agreement(quartic_field):
    ctx = quartic_field
    table = brute_solution_table(ctx)
    for b in lambda_enumerate(ctx):
        assert solve_constructive(b).values() == table[b.value]
    for v in subgroup_values(ctx, ctx.q + 1):
        assert solve_mu_case(ctx(v)).values() == table[v]


def test_closed_solver_all_b(quartic_field):
    ctx = quartic_field
    table = brute_solution_table(ctx)
    for b in range(ctx.size):
        assert solve_closed(ctx(b)).values() == table.get(b, [])


def test_solutions_closed_under_adding_one(quartic_field):
    ctx = quartic_field
    for b, xs in brute_solution_table(ctx).items():
        assert sorted(x ^ 1 for x in xs) == xs
        assert len(xs) % 2 == 0


def test_degenerate_branch_count(quartic_field):
    # b'' = 1 with x2 = 1: x1 ranges over F_q \ {0, 1}
    ctx = quartic_field
    sols = _degenerate_solutions(ctx, 1, 1)
    assert len(sols) == ctx.q - 2


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_lambda_census(n):
    ctx = make_field(n)
    assert len(lambda_enumerate(ctx, jobs=2 if n == 4 else 1)) == lambda_size_formula(ctx.q)
    assert lambda_size_formula(ctx.q) == [4, 96, 1792, 30720][n - 1]


def test_lambda_condition_frobenius_invariant(quartic_field):
    ctx = quartic_field
    for b in range(ctx.size):
        assert lambda_condition(ctx(b)) == lambda_condition(ctx(ctx.square(b)))


def test_lambda_witness_consistent(quartic_field):
    ctx = quartic_field
    for b in range(1, ctx.size, 7):
        w = lambda_witness(ctx(b))
        assert w.holds == lambda_condition(ctx(b))
        assert ctx.in_subfield(w.t.value, 2 * ctx.n) and ctx.in_subfield(w.t_prime.value, ctx.n)


def test_lambda_at_q2_independent_reduction():
    # for q = 2: b in Lambda iff Tr(b) = 1 and b not in mu_5
    ctx = make_field(1)
    mu5 = subgroup_values(ctx, 5)
    expected = [b for b in range(1, 16) if naive_trace(b, ctx.modulus) == 1 and b not in mu5]
    assert vals(lambda_enumerate(ctx)) == expected


@pytest.mark.parametrize("m", range(1, 13))
def test_artin_schreier_counts(m):
    ctx = make_binary_field(m)
    for v in range(ctx.size):
        roots = solve_artin_schreier(ctx(v))
        assert len(roots) == 2 * (1 - ctx.trace(v))
        assert all(ctx.square(r.value) ^ r.value ^ v == 0 for r in roots)


def test_artin_schreier_roots_differ_by_one(gf16):
    for v in range(16):
        roots = vals(solve_artin_schreier(gf16(v)))
        if roots:
            assert roots[0] ^ roots[1] == 1


def test_x_plus_inverse_roots(quartic_field):
    ctx = quartic_field
    for level in (1, 2):
        k = level * ctx.n
        for a in ctx.subfield(k):
            if not a:
                continue
            tr = ctx.trace(ctx.inv(a), 1, k)
            for domain, want in ((Domain.MU, 2 * tr), (Domain.SUBFIELD, 2 * (1 - tr))):
                roots = solve_x_plus_inv(ctx(a), domain, level)
                assert len(roots) == want
                for r in roots:
                    assert r + r.inverse() == a and r != 1


@pytest.mark.parametrize("group", list(Group))
def test_phi_images(quartic_field, group):
    assert image_set_phi(quartic_field, group) == phi_image_by_trace(quartic_field, group)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_trace_system(n):
    ctx = make_field(n)
    fq = ctx.subfield(n)
    seen = set()
    for beta in fq[1:]:
        for gamma in fq:
            got = count_trace_system(ctx(beta), ctx(gamma))
            assert got == trace_system_count_formula(ctx.q, beta, gamma)
            seen.add(got)
    assert seen <= {0, ctx.q // 2, ctx.q // 4}


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 3), st.data())
def test_closed_solutions_solve_equation(n, data):
    ctx = make_field(n)
    b = ctx(data.draw(st.integers(0, ctx.order)))
    d = exponent_d(ctx.q)
    sols = solve_closed(b)
    assert len(sols) == count_solutions(b)
    for x in sols:
        assert x ** d + (x + 1) ** d == b
