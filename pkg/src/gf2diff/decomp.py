"""The decomposition F_{q^4}* = mu_{q-1} . mu_{q+1} . mu_{q^2+1}.

Every nonzero x factors uniquely as x = x1 * x2 * x3 with x1^(q-1) = 1,
x2^(q+1) = 1 and x3^(q^2+1) = 1, and each factor is a fixed power of x.
The exponents contain halves; they are taken as residues modulo the odd
group order q^4 - 1, where 2 is invertible.
"""

from dataclasses import dataclass

from .errors import DomainError, FieldError
from .field import FieldElement, MAX_N
from .intmath import prime_divisors


@dataclass(frozen=True)
class DecompExponents:
    n1: int
    n2: int
    n3: int
    q: int

    @property
    def order(self):
        return self.q ** 4 - 1

    def check(self):
        """Return the list of violated exponent identities (empty if fine)."""
        N, q = self.order, self.q
        problems = []
        if self.n1 * (q - 1) % N:
            problems.append("n1*(q-1) != 0")
        if self.n2 * (q + 1) % N:
            problems.append("n2*(q+1) != 0")
        if self.n3 * (q * q + 1) % N:
            problems.append("n3*(q^2+1) != 0")
        if (self.n1 + self.n2 + self.n3) % N != 1 % N:
            problems.append("n1+n2+n3 != 1")
        return problems


@dataclass(frozen=True)
class Decomposition:
    x1: FieldElement
    x2: FieldElement
    x3: FieldElement

    def recompose(self):
        return self.x1 * self.x2 * self.x3

    def __iter__(self):
        return iter((self.x1, self.x2, self.x3))


def exponents_for_n(n):
    """Decomposition exponents for q = 2^n, pure integer arithmetic."""
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n={n} outside [1, {MAX_N}]")
    q = 1 << n
    N = q ** 4 - 1
    half = pow(2, -1, N)
    a = (1 + q * q) * half % N
    n1 = a * ((1 + q) * half % N) % N
    n2 = a * ((1 - q) * half % N) % N
    n3 = (1 - q * q) * half % N
    return DecompExponents(n1, n2, n3, q)


def decomp_exponents(ctx):
    if ctx.n is None:
        raise FieldError(f"GF(2^{ctx.m}) is not of the form F_(q^4)")
    return exponents_for_n(ctx.n)


def _check_divisor(ctx, s):
    if s <= 0 or ctx.order % s:
        raise DomainError(f"{s} does not divide the group order {ctx.order}")


def is_unity_root(x, s):
    """True iff x^s = 1, i.e. x lies in mu_s."""
    if not x:
        raise DomainError("0 is not in the multiplicative group")
    _check_divisor(x.ctx, s)
    return x.ctx.pow(x.value, s) == 1


def decompose(x):
    if not x:
        raise DomainError("0 has no multiplicative decomposition")
    ctx = x.ctx
    e = decomp_exponents(ctx)
    return Decomposition(
        FieldElement(ctx, ctx.pow(x.value, e.n1)),
        FieldElement(ctx, ctx.pow(x.value, e.n2)),
        FieldElement(ctx, ctx.pow(x.value, e.n3)),
    )


def find_generator(ctx):
    """A multiplicative generator, searched upward from 0x2.

    Order is certified by g^((2^m-1)/p) != 1 for every prime p | 2^m - 1.
    """
    g = ctx.generator
    assert all(ctx.pow(g, ctx.order // p) != 1 for p in prime_divisors(ctx.order))
    return FieldElement(ctx, g)


def enumerate_subgroup(ctx, s):
    """mu_s as [h^0, h^1, ..., h^(s-1)] with h = g^((2^m-1)/s)."""
    _check_divisor(ctx, s)
    h = ctx.pow(ctx.generator, ctx.order // s)
    out, v = [], 1
    for _ in range(s):
        out.append(FieldElement(ctx, v))
        v = ctx.mul(v, h)
    return out


def subgroup_values(ctx, s):
    """Encodings of mu_s as a set."""
    return {e.value for e in enumerate_subgroup(ctx, s)}


def element_order(x):
    """Multiplicative order of x != 0."""
    if not x:
        raise DomainError("0 has no multiplicative order")
    ctx = x.ctx
    order = ctx.order
    for p in prime_divisors(ctx.order):
        while order % p == 0 and ctx.pow(x.value, order // p) == 1:
            order //= p
    return order
