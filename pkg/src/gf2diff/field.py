"""Arithmetic in binary extension fields GF(2^m) over a polynomial basis.

Elements are encoded as integers whose bit i is the coefficient of x^i.
``FieldCtx`` carries the modulus and exposes the arithmetic on raw integer
encodings (the hot path for exhaustive scans); ``FieldElement`` wraps an
encoding together with its context and supports the usual operators.

For m <= 16 a log/antilog table is built once per context and used for
multiplication, inversion and exponentiation. The table path is checked
bit-for-bit against the shift-XOR schoolbook path in the test-suite.
"""

from functools import lru_cache

import numpy as np

from .errors import FieldError, FieldMismatchError, ReducibleModulusError
from .intmath import prime_divisors

MAX_DEGREE = 60
MAX_N = 15
TABLE_MAX_DEGREE = 16
NUMPY_TABLE_MAX_DEGREE = 24


# ---------------------------------------------------------------------------
# GF(2)[x] polynomials as ints
# ---------------------------------------------------------------------------

def poly_mul(a, b):
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def poly_mod(a, f):
    df = f.bit_length()
    while a.bit_length() >= df:
        a ^= f << (a.bit_length() - df)
    return a


def poly_divmod(a, f):
    df = f.bit_length()
    quo = 0
    while a.bit_length() >= df:
        shift = a.bit_length() - df
        quo ^= 1 << shift
        a ^= f << shift
    return quo, a


def poly_gcd(a, b):
    while b:
        a, b = b, poly_mod(a, b)
    return a


def poly_mulmod(a, b, f):
    """Schoolbook product of two reduced polynomials, reduced on the fly."""
    m = f.bit_length() - 1
    top = 1 << m
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= f
    return r


def is_irreducible(f):
    """Ben-Or test: f of degree m is irreducible iff gcd(x^(2^i) - x, f) = 1
    for every 1 <= i <= m/2."""
    m = f.bit_length() - 1
    if m < 1:
        return False
    if m == 1:
        return True
    if not f & 1:
        return False
    h = 2  # x
    for _ in range(m // 2):
        h = poly_mulmod(h, h, f)
        if poly_gcd(f, h ^ 2) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def default_modulus(m):
    """Smallest (as an integer) irreducible polynomial of degree m."""
    if not 1 <= m <= MAX_DEGREE:
        raise FieldError(f"degree {m} outside [1, {MAX_DEGREE}]")
    f = 1 << m
    while not is_irreducible(f):
        f += 1
    return f


# ---------------------------------------------------------------------------
# Field context
# ---------------------------------------------------------------------------

class FieldCtx:
    """The field GF(2^m) = GF(2)[x]/(modulus).

    Contexts compare equal when degree and modulus agree. When m is a multiple
    of 4 the context also describes F_{q^4} with q = 2^n, n = m/4.
    """

    def __init__(self, m, modulus=None):
        if not isinstance(m, int) or not 1 <= m <= MAX_DEGREE:
            raise FieldError(f"degree {m!r} outside [1, {MAX_DEGREE}]")
        if modulus is None:
            modulus = default_modulus(m)
        if modulus.bit_length() - 1 != m:
            raise FieldError(f"modulus {modulus:#x} does not have degree {m}")
        if not is_irreducible(modulus):
            raise ReducibleModulusError(f"modulus {modulus:#x} is reducible over GF(2)")
        self.m = m
        self.modulus = modulus
        self.size = 1 << m
        self.order = self.size - 1
        self.mask = self.order
        self._exp = self._log = None
        self._np_tables = None
        self._generator = None
        self._as_solver = None
        if m <= TABLE_MAX_DEGREE:
            self._build_tables()

    # q = 2^n parameters for F_(q^4) -------------------------------------------

    @property
    def n(self):
        return self.m // 4 if self.m % 4 == 0 else None

    @property
    def q(self):
        if self.n is None:
            raise FieldError(f"GF(2^{self.m}) is not of the form F_(q^4)")
        return 1 << self.n

    # identity / serialization --------------------------------------------

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and (self.m, self.modulus) == (other.m, other.modulus)

    def __hash__(self):
        return hash((self.m, self.modulus))

    def __repr__(self):
        return f"FieldCtx(m={self.m}, modulus={self.modulus:#x})"

    def __getstate__(self):
        return {"m": self.m, "modulus": self.modulus}

    def __setstate__(self, state):
        self.__init__(state["m"], state["modulus"])

    def spec(self):
        """Render in the ``n=<int>`` / ``m=<int>,modulus=0x<hex>`` format."""
        if self.n is not None and self.modulus == default_modulus(self.m):
            return f"n={self.n}"
        return f"m={self.m},modulus={self.modulus:#x}"

    @property
    def hex_width(self):
        return (self.m + 3) // 4

    def fmt(self, v):
        return f"0x{int(v):0{self.hex_width}X}"

    def parse(self, text):
        """Parse a hex element string into a FieldElement."""
        text = text.strip()
        try:
            v = int(text, 16)
        except ValueError:
            raise FieldError(f"malformed element {text!r}") from None
        if not 0 <= v < self.size:
            raise FieldError(f"element {text} out of range for GF(2^{self.m})")
        return FieldElement(self, v)

    # elements -------------------------------------------------------------

    def __call__(self, v):
        return FieldElement(self, v)

    element = __call__

    @property
    def zero(self):
        return FieldElement(self, 0)

    @property
    def one(self):
        return FieldElement(self, 1)

    def elements(self):
        return (FieldElement(self, v) for v in range(self.size))

    # tables ---------------------------------------------------------------

    @property
    def generator(self):
        """Smallest encoding (from 0x2 upward) of a multiplicative generator."""
        if self._generator is None:
            self._generator = self._find_generator()
        return self._generator

    def _find_generator(self):
        if self.order == 1:
            return 1
        cofactors = [self.order // p for p in prime_divisors(self.order)]
        for g in range(2, self.size):
            if all(self._pow_schoolbook(g, c) != 1 for c in cofactors):
                return g
        raise AssertionError("no generator found")  # unreachable for a field

    def _build_tables(self):
        g = self.generator
        order = self.order
        exp = [0] * (2 * order + 1)
        log = [0] * self.size
        v = 1
        for i in range(order):
            exp[i] = v
            log[v] = i
            v = poly_mulmod(v, g, self.modulus)
        for i in range(order, 2 * order + 1):
            exp[i] = exp[i - order]
        self._exp, self._log = exp, log

    def np_tables(self):
        """(exp, log) as numpy int64 arrays of length 2^m - 1 and 2^m."""
        if self.m > NUMPY_TABLE_MAX_DEGREE:
            raise FieldError(f"log tables unsupported above degree {NUMPY_TABLE_MAX_DEGREE}")
        if self._np_tables is None:
            if self._exp is not None:
                exp = np.array(self._exp[: self.order], dtype=np.int64)
            else:
                exp = np.array([1], dtype=np.int64)
                while len(exp) < self.order:
                    step = self._pow_schoolbook(self.generator, len(exp))
                    exp = np.concatenate([exp, self.vec_mul_scalar(exp, step)])
                exp = exp[: self.order]
            log = np.zeros(self.size, dtype=np.int64)
            log[exp] = np.arange(self.order, dtype=np.int64)
            self._np_tables = (exp, log)
        return self._np_tables

    def vec_mul_scalar(self, arr, c):
        """Multiply every encoding in ``arr`` by the scalar ``c`` (numpy)."""
        arr = np.asarray(arr, dtype=np.int64)
        acc = np.zeros_like(arr)
        shift = self.m - 1
        low = self.modulus ^ (1 << self.m)
        for i in reversed(range(c.bit_length())):
            carry = (acc >> shift) * low
            acc = ((acc << 1) & self.mask) ^ carry
            if (c >> i) & 1:
                acc ^= arr
        return acc

    # arithmetic on encodings ---------------------------------------------

    @staticmethod
    def add(a, b):
        return a ^ b

    def mul(self, a, b):
        if not a or not b:
            return 0
        if self._log is not None:
            return self._exp[self._log[a] + self._log[b]]
        return poly_mulmod(a, b, self.modulus)

    def mul_schoolbook(self, a, b):
        return poly_mulmod(a, b, self.modulus)

    def square(self, a):
        return self.mul(a, a)

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero in GF(2^%d)" % self.m)
        if self._log is not None:
            return self._exp[self.order - self._log[a]]
        return self.inv_euclid(a)

    def inv_euclid(self, a):
        """Inverse via the extended Euclidean algorithm in GF(2)[x]."""
        if not a:
            raise ZeroDivisionError("inverse of zero")
        r0, r1 = self.modulus, a
        s0, s1 = 0, 1
        while r1 != 1:
            quo, rem = poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, s0 ^ poly_mul(quo, s1)
        return poly_mod(s1, self.modulus)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        """a^e; negative e allowed for a != 0, and 0^0 = 1."""
        if not a:
            if e > 0:
                return 0
            if e == 0:
                return 1
            raise ZeroDivisionError("zero raised to a negative power")
        e %= self.order
        if self._log is not None:
            return self._exp[self._log[a] * e % self.order]
        return self._pow_schoolbook(a, e)

    def _pow_schoolbook(self, a, e):
        r = 1
        f = self.modulus
        while e:
            if e & 1:
                r = poly_mulmod(r, a, f)
            e >>= 1
            if e:
                a = poly_mulmod(a, a, f)
        return r

    def frobenius(self, a, j=1):
        """a^(2^j)."""
        j %= self.m
        if not a or not j:
            return a
        if self._log is not None:
            return self._exp[(self._log[a] << j) % self.order]
        for _ in range(j):
            a = poly_mulmod(a, a, self.modulus)
        return a

    def sqrt(self, a):
        return self.frobenius(a, self.m - 1)

    def _check_tower(self, s, k):
        k = self.m if k is None else k
        if k <= 0 or self.m % k:
            raise FieldError(f"GF(2^{k}) is not a subfield of GF(2^{self.m})")
        if s <= 0 or k % s:
            raise FieldError(f"{s} does not divide {k}")
        return k

    def trace(self, a, s=1, k=None):
        """Trace from the subfield GF(2^k) (default: whole field) to GF(2^s)."""
        k = self._check_tower(s, k)
        t = 0
        for _ in range(k // s):
            t ^= a
            a = self.frobenius(a, s)
        return t

    def norm(self, a, s=1, k=None):
        """Norm from the subfield GF(2^k) (default: whole field) to GF(2^s)."""
        k = self._check_tower(s, k)
        return self.pow(a, ((1 << k) - 1) // ((1 << s) - 1))

    def in_subfield(self, a, k):
        return self.frobenius(a, k) == a

    def subfield(self, k):
        """All encodings of GF(2^k) inside this field, ascending by encoding."""
        if k <= 0 or self.m % k:
            raise FieldError(f"GF(2^{k}) is not a subfield of GF(2^{self.m})")
        step = self.order // ((1 << k) - 1)
        h = self.pow(self.generator, step)
        out, v = [0], 1
        for _ in range((1 << k) - 1):
            out.append(v)
            v = self.mul(v, h)
        return sorted(out)

    def artin_schreier_preimage(self, delta):
        """One root of x^2 + x = delta, or None if the absolute trace is 1."""
        if self._as_solver is None:
            self._as_solver = _build_as_solver(self)
        rows = self._as_solver
        pre = 0
        for pivot, image, preimage in rows:
            if (delta >> pivot) & 1:
                delta ^= image
                pre ^= preimage
        return None if delta else pre


def _build_as_solver(ctx):
    """Echelon form of the GF(2)-linear map x -> x^2 + x on the polynomial basis.

    Each row is (pivot bit, image vector, a preimage of that image). Rows are
    ordered by descending pivot so a single forward pass reduces any target.
    """
    rows = {}
    for i in range(ctx.m):
        basis = 1 << i
        img = ctx.mul_schoolbook(basis, basis) ^ basis
        pre = basis
        while img:
            p = img.bit_length() - 1
            if p not in rows:
                rows[p] = (img, pre)
                break
            img ^= rows[p][0]
            pre ^= rows[p][1]
    # full reduction so each pivot bit appears in exactly one row
    for p in sorted(rows, reverse=True):
        img, pre = rows[p]
        for other in list(rows):
            if other != p and (rows[other][0] >> p) & 1:
                oi, op = rows[other]
                rows[other] = (oi ^ img, op ^ pre)
    return [(p, rows[p][0], rows[p][1]) for p in sorted(rows, reverse=True)]


@lru_cache(maxsize=64)
def make_binary_field(m, modulus=None):
    """GF(2^m) for any 1 <= m <= 60, default modulus when none is given."""
    return FieldCtx(m, modulus)


def make_field(n, modulus=None):
    """The field F_{q^4} = GF(2^(4n)), q = 2^n, for 1 <= n <= 15."""
    if not isinstance(n, int) or not 1 <= n <= MAX_N:
        raise ValueError(f"n={n!r} outside [1, {MAX_N}]")
    return make_binary_field(4 * n, modulus)


def parse_field_spec(text):
    """Parse ``n=<int>`` or ``m=<int>,modulus=0x<hex>``."""
    parts = {}
    for item in text.replace(" ", "").split(","):
        if not item:
            continue
        key, sep, value = item.partition("=")
        if not sep:
            raise FieldError(f"malformed field spec {text!r}")
        parts[key.lower()] = value
    try:
        if set(parts) == {"n"}:
            return make_field(int(parts["n"]))
        if set(parts) <= {"m", "modulus"} and "m" in parts:
            modulus = int(parts["modulus"], 16) if "modulus" in parts else None
            return make_binary_field(int(parts["m"]), modulus)
    except ValueError as exc:
        if isinstance(exc, FieldError):
            raise
        raise FieldError(f"malformed field spec {text!r}: {exc}") from None
    raise FieldError(f"malformed field spec {text!r}")


# ---------------------------------------------------------------------------
# Elements
# ---------------------------------------------------------------------------

class FieldElement:
    """An element of a FieldCtx. Immutable; ordered by encoding."""

    __slots__ = ("ctx", "value")

    def __init__(self, ctx, value):
        value = int(value)
        if not 0 <= value < ctx.size:
            raise FieldError(f"{value:#x} is not a reduced element of GF(2^{ctx.m})")
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise FieldMismatchError(f"{self.ctx!r} vs {other.ctx!r}")
            return other.value
        if isinstance(other, int):
            return FieldElement(self.ctx, other).value
        return NotImplemented

    def _wrap(self, v):
        return FieldElement(self.ctx, v)

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.value ^ o)

    __radd__ = __sub__ = __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.ctx.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.ctx.div(self.value, o))

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.ctx.div(o, self.value))

    def __pow__(self, e):
        return self._wrap(self.ctx.pow(self.value, e))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.value == other.value and self.ctx == other.ctx
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __lt__(self, other):
        return self.value < self._other(other)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    __index__ = __int__

    def __repr__(self):
        return self.ctx.fmt(self.value)

    __str__ = __repr__

    def inverse(self):
        return self._wrap(self.ctx.inv(self.value))

    def frobenius(self, j=1):
        return self._wrap(self.ctx.frobenius(self.value, j))

    def sqrt(self):
        return self._wrap(self.ctx.sqrt(self.value))

    def trace(self, s=1, k=None):
        return self._wrap(self.ctx.trace(self.value, s, k))

    def norm(self, s=1, k=None):
        return self._wrap(self.ctx.norm(self.value, s, k))


# module-level operation names -------------------------------------------

def _same_ctx(a, b):
    if a.ctx is not b.ctx and a.ctx != b.ctx:
        raise FieldMismatchError(f"{a.ctx!r} vs {b.ctx!r}")


def add(a, b):
    _same_ctx(a, b)
    return a + b


def mul(a, b):
    _same_ctx(a, b)
    return a * b


def inv(a):
    return a.inverse()


def power(a, e):
    """a^e with e reduced mod 2^m - 1 for a != 0; 0^0 = 1."""
    return a ** e


def frobenius(a, j):
    return a.frobenius(j)


def rel_trace(a, s, k=None):
    return a.trace(s, k)


def rel_norm(a, s, k=None):
    return a.norm(s, k)


def sqrt(a):
    return a.sqrt()
