"""Independent reference computations used as test oracles.

Nothing here touches gf2diff: polynomials are coefficient lists, products are
plain convolutions followed by long division, and powers are repeated
multiplication.
"""


def bits(v, width):
    return [(v >> i) & 1 for i in range(width)]


def unbits(coeffs):
    return sum(c << i for i, c in enumerate(coeffs))


def naive_mul(a, b, modulus):
    m = modulus.bit_length() - 1
    ca, cb, cf = bits(a, m), bits(b, m), bits(modulus, m + 1)
    prod = [0] * (2 * m)
    for i, x in enumerate(ca):
        for j, y in enumerate(cb):
            prod[i + j] ^= x & y
    for deg in range(2 * m - 1, m - 1, -1):
        if prod[deg]:
            for k in range(m + 1):
                prod[deg - m + k] ^= cf[k]
    return unbits(prod[:m])


def naive_pow(a, e, modulus):
    r = 1
    for _ in range(e):
        r = naive_mul(r, a, modulus)
    return r


def naive_trace(a, modulus, s=1, k=None):
    """Sum of a^(2^(s*i)) computed by repeated naive squaring."""
    m = modulus.bit_length() - 1
    k = m if k is None else k
    t, v = 0, a
    for _ in range(k // s):
        t ^= v
        for _ in range(s):
            v = naive_mul(v, v, modulus)
    return t


def poly_degree(f):
    return f.bit_length() - 1


def poly_rem(a, f):
    while a and poly_degree(a) >= poly_degree(f):
        a ^= f << (poly_degree(a) - poly_degree(f))
    return a


def irreducible_by_trial_division(f):
    d = poly_degree(f)
    if d < 1:
        return False
    for g in range(2, 1 << (d // 2 + 1)):
        if 1 <= poly_degree(g) <= d // 2 and poly_rem(f, g) == 0:
            return False
    return True


def power_table(g, modulus):
    """[g^0, g^1, ..., g^(order-1)] by repeated naive multiplication."""
    m = modulus.bit_length() - 1
    out, v = [], 1
    for _ in range((1 << m) - 1):
        out.append(v)
        v = naive_mul(v, g, modulus)
    return out


def brute_preimage_counts(modulus, d):
    """c[b] = #{x : x^d + (x+1)^d = b}, pure Python with naive arithmetic."""
    m = modulus.bit_length() - 1
    size = 1 << m
    table = power_table(_any_generator(modulus), modulus)
    log = {v: i for i, v in enumerate(table)}
    order = size - 1

    def pw(x):
        if x == 0:
            return 1 if d == 0 else 0
        return table[log[x] * d % order]

    counts = [0] * size
    for x in range(size):
        counts[pw(x) ^ pw(x ^ 1)] += 1
    return counts


def _any_generator(modulus):
    m = modulus.bit_length() - 1
    order = (1 << m) - 1
    for g in range(1, 1 << m):
        seen, v = set(), 1
        for _ in range(order):
            seen.add(v)
            v = naive_mul(v, g, modulus)
        if len(seen) == order:
            return g
    raise AssertionError


def histogram(counts):
    w = {}
    for c in counts:
        w[c] = w.get(c, 0) + 1
    return dict(sorted(w.items()))
