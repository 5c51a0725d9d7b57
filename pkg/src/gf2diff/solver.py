"""Solving x^d + (x+1)^d = b over F_{q^4} with d = q^3 + q^2 + q - 1.

Contents:

* the equation subroutines used along the way: x^2 + x = delta, x + 1/x = a
  restricted to a unity-root subgroup or a subfield, and a two-equation
  trace system over F_q;
* the set Lambda of right-hand sides with exactly two solutions;
* the classification of b and the resulting solution count;
* a constructive solver that rebuilds every solution from the
  mu_{q-1} . mu_{q+1} . mu_{q^2+1} factorization, and a brute-force oracle.

Internally everything runs on integer encodings through ``FieldCtx``;
public functions take and return ``FieldElement`` values.
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .decomp import decomp_exponents, subgroup_values
from .errors import DomainError, FieldError, InvariantViolation, ScanLimitError
from .field import FieldElement
from .parallel import map_ranges

EXHAUSTIVE_MAX_N = 4


class BClass(str, Enum):
    ONE = "ONE"
    MU_Q1_NOT_ONE = "MU_Q1_NOT_ONE"
    LAMBDA = "LAMBDA"
    NONE = "NONE"


class Domain(str, Enum):
    MU = "MU"
    SUBFIELD = "SUBFIELD"


class Group(str, Enum):
    MU_Q2P1 = "MU_Q2P1"      # mu_{q^2+1}
    F_Q2_STAR = "F_Q2_STAR"  # F_{q^2}^*
    MU_QP1 = "MU_QP1"        # mu_{q+1}
    F_Q_STAR = "F_Q_STAR"    # F_q^*


class Method(str, Enum):
    BRUTE = "BRUTE"
    CLOSED_CONSTRUCTIVE = "CLOSED_CONSTRUCTIVE"


@dataclass(frozen=True)
class LambdaWitness:
    t: FieldElement
    nrm: FieldElement
    t_prime: FieldElement
    n_prime: FieldElement
    criterion_bit: int

    @property
    def holds(self):
        return bool(self.t_prime) and self.criterion_bit == 1


@dataclass(frozen=True)
class SolutionSet:
    b: FieldElement
    solutions: tuple
    method: Method

    def __len__(self):
        return len(self.solutions)

    def __iter__(self):
        return iter(self.solutions)

    def values(self):
        return [x.value for x in self.solutions]


def exponent_d(q):
    return q ** 3 + q ** 2 + q - 1


def _quartic_params(ctx):
    if ctx.n is None:
        raise FieldError(f"GF(2^{ctx.m}) is not of the form F_(q^4)")
    return ctx.n, ctx.q


def _scan_guard(ctx, what):
    n, _ = _quartic_params(ctx)
    if n > EXHAUSTIVE_MAX_N:
        raise ScanLimitError(f"{what} scans the field; n={n} exceeds the cap n<={EXHAUSTIVE_MAX_N}")


def _solution_set(ctx, b, values, method):
    return SolutionSet(FieldElement(ctx, b), tuple(FieldElement(ctx, v) for v in sorted(values)), method)


# ---------------------------------------------------------------------------
# quadratic subroutines
# ---------------------------------------------------------------------------

def solve_artin_schreier(delta, k=None):
    """Roots of x^2 + x + delta in the field of ``delta``.

    With ``k`` given, only roots lying in the subfield GF(2^k) are kept.
    Roots come from the echelonized GF(2)-linear map x -> x^2 + x, whose
    kernel is {0, 1}; the result is empty or a pair {r, r+1}.
    """
    ctx = delta.ctx
    r = ctx.artin_schreier_preimage(delta.value)
    if r is None:
        return []
    roots = [r, r ^ 1]
    if k is not None:
        roots = [v for v in roots if ctx.in_subfield(v, k)]
    return [FieldElement(ctx, v) for v in sorted(roots)]


def _x_plus_inv_values(ctx, a, domain, level):
    # x^2 + a x + 1 = 0; with x = a u this is u^2 + u + 1/a^2 = 0
    n = ctx.n
    k = level * n
    ainv = ctx.inv(a)
    u = ctx.artin_schreier_preimage(ctx.mul(ainv, ainv))
    if u is None:
        return []
    xs = {ctx.mul(a, u), ctx.mul(a, u ^ 1)}
    if domain is Domain.MU:
        e = (1 << k) + 1
        xs = [x for x in xs if x != 1 and ctx.pow(x, e) == 1]
    else:
        xs = [x for x in xs if x != 1 and ctx.in_subfield(x, k)]
    return sorted(xs)


def solve_x_plus_inv(a, domain, level=2):
    """Solutions of x + 1/x = a in mu_{q^level+1} \\ {1} (``Domain.MU``) or in
    F_{q^level} \\ {1} (``Domain.SUBFIELD``), for a in F_{q^level}^*.

    The two solutions, when present, are inverse to each other.
    """
    ctx = a.ctx
    n, _ = _quartic_params(ctx)
    domain = Domain(domain)
    if level not in (1, 2):
        raise ValueError("level must be 1 (over F_q) or 2 (over F_{q^2})")
    if not a:
        raise DomainError("x + 1/x = 0 has no solution besides x = 1")
    if not ctx.in_subfield(a.value, level * n):
        raise DomainError(f"{a} is not in F_(q^{level})")
    return [FieldElement(ctx, v) for v in _x_plus_inv_values(ctx, a.value, domain, level)]


def _group_values(ctx, group):
    n, q = ctx.n, ctx.q
    group = Group(group)
    if group is Group.MU_Q2P1:
        return subgroup_values(ctx, q * q + 1)
    if group is Group.F_Q2_STAR:
        return subgroup_values(ctx, q * q - 1)
    if group is Group.MU_QP1:
        return subgroup_values(ctx, q + 1)
    return subgroup_values(ctx, q - 1)


def image_set_phi(ctx, group):
    """{x + 1/x : x in group, x != 1}, by enumerating the group."""
    _scan_guard(ctx, "image_set_phi")
    return {
        FieldElement(ctx, x ^ ctx.inv(x)) for x in _group_values(ctx, group) if x != 1
    }


def phi_image_by_trace(ctx, group):
    """The trace description of the image of x -> x + 1/x on ``group`` \\ {1}.

    mu_{q^2+1}: a in F_{q^2}^* with Tr_{F_{q^2}/F_2}(1/a) = 1;
    F_{q^2}^*:  a in F_{q^2}^* with that trace 0;
    mu_{q+1}:   a in F_q^* with Tr_{F_q/F_2}(1/a) = 1;
    F_q^*:      a in F_q^* with that trace 0.
    """
    _scan_guard(ctx, "phi_image_by_trace")
    n = ctx.n
    group = Group(group)
    if group in (Group.MU_Q2P1, Group.F_Q2_STAR):
        k, want = 2 * n, 1 if group is Group.MU_Q2P1 else 0
    else:
        k, want = n, 1 if group is Group.MU_QP1 else 0
    return {
        FieldElement(ctx, a)
        for a in ctx.subfield(k)
        if a and ctx.trace(ctx.inv(a), 1, k) == want
    }


def count_trace_system(beta, gamma):
    """#{x in F_q : Tr(beta x) = 1 and Tr(gamma x) = 1}, by scanning F_q."""
    ctx = beta.ctx
    n, _ = _quartic_params(ctx)
    if not beta:
        raise DomainError("beta must be nonzero")
    for v in (beta, gamma):
        if not ctx.in_subfield(v.value, n):
            raise DomainError(f"{v} is not in F_q")
    b, g = beta.value, gamma.value
    return sum(
        1
        for x in ctx.subfield(n)
        if ctx.trace(ctx.mul(b, x), 1, n) == 1 and ctx.trace(ctx.mul(g, x), 1, n) == 1
    )


def trace_system_count_formula(q, beta, gamma):
    """0 if gamma = 0, q/2 if gamma = beta, q/4 otherwise."""
    if not gamma:
        return 0
    if gamma == beta:
        return q // 2
    return q // 4


# ---------------------------------------------------------------------------
# Lambda and classification
# ---------------------------------------------------------------------------

def _lambda_parts(ctx, b):
    n, q = ctx.n, ctx.q
    t = ctx.trace(b, 2 * n)
    nrm = ctx.norm(b, 2 * n)
    t_prime = t ^ ctx.frobenius(t, n)
    n_prime = nrm ^ 1
    bit = 0
    if b and t_prime and n_prime:
        # (q+1)/2 as a residue mod q^2 - 1, applied to n' in F_{q^2}^*
        e = (q + 1) * pow(2, -1, q * q - 1) % (q * q - 1)
        val = ctx.div(ctx.pow(n_prime, e), t_prime)
        bit = ctx.trace(val, 1, n)
    return t, nrm, t_prime, n_prime, bit


def _in_lambda(ctx, b):
    if not b:
        return False
    _, _, t_prime, _, bit = _lambda_parts(ctx, b)
    return bool(t_prime) and bit == 1


def lambda_witness(b):
    ctx = b.ctx
    _quartic_params(ctx)
    t, nrm, tp, np_, bit = _lambda_parts(ctx, b.value)
    wrap = lambda v: FieldElement(ctx, v)  # noqa: E731
    return LambdaWitness(wrap(t), wrap(nrm), wrap(tp), wrap(np_), bit)


def lambda_condition(b):
    """Membership of b in Lambda: t' != 0 and Tr_{F_q/F_2}(n'^((q+1)/2) / t') = 1,
    where t = Tr_{q^4/q^2}(b), n = N_{q^4/q^2}(b), t' = t + t^q, n' = n + 1.
    A vanishing n' makes the criterion false."""
    _quartic_params(b.ctx)
    return _in_lambda(b.ctx, b.value)


def lambda_size_formula(q):
    return q ** 3 * (q - 1) // 2


def _lambda_chunk(ctx, lo, hi):
    return [b for b in range(max(lo, 1), hi) if _in_lambda(ctx, b)]


def lambda_enumerate(ctx, jobs=1):
    """Lambda by a full-field scan, sorted by encoding."""
    _scan_guard(ctx, "lambda_enumerate")
    parts = map_ranges(_lambda_chunk, ctx, ctx.size, jobs)
    return [FieldElement(ctx, b) for part in parts for b in part]


def _classify(ctx, b):
    q = ctx.q
    if b == 1:
        return BClass.ONE
    if b and ctx.pow(b, q + 1) == 1:
        return BClass.MU_Q1_NOT_ONE
    if _in_lambda(ctx, b):
        return BClass.LAMBDA
    return BClass.NONE


def classify_b(b):
    _quartic_params(b.ctx)
    return _classify(b.ctx, b.value)


def predicted_count(cls, q):
    cls = BClass(cls)
    return {
        BClass.ONE: q * q,
        BClass.MU_Q1_NOT_ONE: q * q - q,
        BClass.LAMBDA: 2,
        BClass.NONE: 0,
    }[cls]


def count_solutions(b):
    return predicted_count(classify_b(b), b.ctx.q)


# ---------------------------------------------------------------------------
# brute-force oracle
# ---------------------------------------------------------------------------

def _difference_map(ctx, lo, hi, d):
    return [ctx.pow(x, d) ^ ctx.pow(x ^ 1, d) for x in range(lo, hi)]


def brute_force_solutions(b):
    """All x with x^d + (x+1)^d = b, by scanning the field."""
    ctx = b.ctx
    _scan_guard(ctx, "brute_force_solutions")
    d = exponent_d(ctx.q)
    target = b.value
    hits = [x for x in range(ctx.size) if ctx.pow(x, d) ^ ctx.pow(x ^ 1, d) == target]
    return _solution_set(ctx, target, hits, Method.BRUTE)


@lru_cache(maxsize=8)
def _brute_table(ctx, jobs):
    d = exponent_d(ctx.q)
    parts = map_ranges(_difference_map, ctx, ctx.size, jobs, d)
    table = {}
    x = 0
    for part in parts:
        for b in part:
            table.setdefault(b, []).append(x)
            x += 1
    return table


def brute_solution_table(ctx, jobs=1):
    """Map b -> sorted encodings of the solutions, from one pass over all x."""
    _scan_guard(ctx, "brute_solution_table")
    return _brute_table(ctx, jobs)


# ---------------------------------------------------------------------------
# constructive solver
# ---------------------------------------------------------------------------

def _b_prime(ctx, b):
    # b^(q^2/2) with the half taken mod q^4 - 1
    q = ctx.q
    return ctx.pow(b, q * q * pow(2, -1, ctx.order) % ctx.order)


def _trivial_solutions(ctx, b):
    """x in {0, 1}: these solve the equation exactly when b = 1."""
    return [0, 1] if b == 1 else []


def _degenerate_solutions(ctx, x2, b2):
    """Delta = 0 with x3 = y3 = 1: pairs x1 + y1 = b'' in F_q^* x F_q^*.

    Only possible when b'' = 1, giving the q - 2 solutions x = x1 * x2 with
    x1 in F_q \\ {0, 1}.
    """
    if b2 != 1:
        return []
    return [ctx.mul(x1, x2) for x1 in ctx.subfield(ctx.n) if x1 not in (0, 1)]


def _case_equal_mu(ctx, bp):
    """Delta = 0 (x2 = y2): requires b' in mu_{q+1}; x2 = y2 = b'^(-1/2)."""
    n, q = ctx.n, ctx.q
    if not bp or ctx.pow(bp, q + 1) != 1:
        return []
    b2 = ctx.sqrt(bp)
    x2 = ctx.inv(b2)
    out = _degenerate_solutions(ctx, x2, b2)
    fq_star = [v for v in ctx.subfield(n) if v]
    e3 = q * q + 1
    b2sq = ctx.mul(b2, b2)
    for x1 in fq_star:
        x1b2 = ctx.mul(x1, b2)
        x1sq = ctx.mul(x1, x1)
        for y1 in fq_star:
            num = x1sq ^ ctx.mul(y1, y1) ^ b2sq
            if not num:
                continue  # degenerate branch, handled above
            rhs = ctx.div(num, x1b2)
            for x3 in _x_plus_inv_values(ctx, rhs, Domain.MU, 2):
                y3 = ctx.div(ctx.mul(x1, x3) ^ b2, y1)
                if ctx.pow(y3, e3) != 1:
                    raise InvariantViolation("y3 left mu_{q^2+1}")
                x = ctx.mul(ctx.mul(x1, x2), x3)
                y = ctx.mul(ctx.mul(y1, x2), y3)
                if x ^ y != 1:
                    raise InvariantViolation("x + y != 1 in the Delta = 0 branch")
                out.append(x)
    return out


def _assemble(ctx, exps, x2, y2, bp):
    """Recover x from (x2, y2) via Cramer's rule, or None if S or T vanishes."""
    den = ctx.div(x2, y2) ^ ctx.div(y2, x2)
    S = ctx.div(ctx.mul(y2, bp) ^ ctx.inv(y2), den)
    T = ctx.div(ctx.mul(x2, bp) ^ ctx.inv(x2), den)
    if not S or not T:
        return None
    if ctx.pow(S, exps.n2) != 1 or ctx.pow(T, exps.n2) != 1:
        raise InvariantViolation("S^n2 = T^n2 = 1 fails for a root of the z-quadratic")
    x = ctx.mul(ctx.mul(ctx.pow(S, exps.n1), x2), ctx.pow(S, exps.n3))
    y = ctx.mul(ctx.mul(ctx.pow(T, exps.n1), y2), ctx.pow(T, exps.n3))
    if x ^ y != 1:
        raise InvariantViolation("x + y != 1 in the Delta != 0 branch")
    return x


def _z_pairs(ctx, bp):
    """Ordered pairs (x2^2, y2^2) of distinct roots of
    n' z^2 + t' z + n'^q = 0 that lie in mu_{q+1}."""
    n, q = ctx.n, ctx.q
    t = ctx.trace(bp, 2 * n)
    t_prime = t ^ ctx.frobenius(t, n)
    n_prime = ctx.norm(bp, 2 * n) ^ 1
    if not n_prime and not t_prime:
        # b' = 1: every ordered pair of distinct points of mu_{q+1} \ {1}
        mu = sorted(subgroup_values(ctx, q + 1) - {1})
        return [(z1, z2) for z1 in mu for z2 in mu if z1 != z2]
    if not n_prime or not t_prime:
        return []
    # (n'/t' z)^2 + (n'/t' z) + n'^(q+1)/t'^2 = 0
    delta = ctx.div(ctx.pow(n_prime, q + 1), ctx.mul(t_prime, t_prime))
    w = ctx.artin_schreier_preimage(delta)
    if w is None:
        raise InvariantViolation("z-quadratic has no root although its trace vanishes")
    scale = ctx.div(t_prime, n_prime)
    z1, z2 = ctx.mul(w, scale), ctx.mul(w ^ 1, scale)
    if ctx.pow(z1, q + 1) != 1 or ctx.pow(z2, q + 1) != 1:
        return []
    return [(z1, z2), (z2, z1)]


def _case_distinct(ctx, bp):
    exps = decomp_exponents(ctx)
    out = []
    for z1, z2 in _z_pairs(ctx, bp):
        x = _assemble(ctx, exps, ctx.sqrt(z1), ctx.sqrt(z2), bp)
        if x is not None:
            out.append(x)
    return out


def _closed_values(ctx, b):
    bp = _b_prime(ctx, b)
    found = _trivial_solutions(ctx, b) + _case_equal_mu(ctx, bp) + _case_distinct(ctx, bp)
    if len(set(found)) != len(found):
        raise InvariantViolation("the same solution was produced twice")
    d = exponent_d(ctx.q)
    for x in found:
        if ctx.pow(x, d) ^ ctx.pow(x ^ 1, d) != b:
            raise InvariantViolation(f"{ctx.fmt(x)} does not solve the equation")
    return found


def solve_closed(b):
    """All solutions for any b, built from the decomposition (no field scan)."""
    ctx = b.ctx
    _quartic_params(ctx)
    return _solution_set(ctx, b.value, _closed_values(ctx, b.value), Method.CLOSED_CONSTRUCTIVE)


def solve_constructive(b):
    """The two solutions for b in Lambda."""
    ctx = b.ctx
    if classify_b(b) is not BClass.LAMBDA:
        raise DomainError(f"{b} is not in Lambda")
    sols = solve_closed(b)
    if len(sols) != 2:
        raise InvariantViolation(f"{b} in Lambda yielded {len(sols)} solutions")
    return sols


def solve_mu_case(b):
    """The q^2 (b = 1) or q^2 - q (b in mu_{q+1} \\ {1}) solutions."""
    cls = classify_b(b)
    if cls not in (BClass.ONE, BClass.MU_Q1_NOT_ONE):
        raise DomainError(f"{b} is neither 1 nor in mu_(q+1)")
    sols = solve_closed(b)
    if len(sols) != predicted_count(cls, b.ctx.q):
        raise InvariantViolation(f"{b}: {len(sols)} solutions, expected {predicted_count(cls, b.ctx.q)}")
    return sols
