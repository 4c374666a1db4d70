"""Exact field arithmetic: prime fields F_p, small extensions F_{p^k}, and Q.

Every field object works on *raw* values so that polynomial and series
kernels can run tight loops without wrapper overhead:

  * F_p        -- raw values are residues, ints in [0, p)
  * F_{p^k}    -- raw values are element codes, ints in [0, q) encoding the
                  coefficient vector c_0 + c_1*t + ... + c_{k-1}*t^{k-1}
                  base p (c_0 least significant); arithmetic is table-driven
  * Q          -- raw values are ints or fractions.Fraction (ints are kept
                  as long as no division happens; the two interoperate and
                  hash/compare equal when numerically equal)

Raw zero is always falsy and raw nonzero always truthy, so ``if v:`` is the
idiomatic zero test throughout the package.  :class:`FieldElement` wraps a
raw value with its field for operator-overloaded use at API boundaries.
No floating point is used anywhere.
"""

import functools
import math
from fractions import Fraction

from ..errors import AlgSeriesError

# Irreducible moduli (coefficient tuples, constant first) for the built-in
# extension cardinalities.  Each is verified again at construction time.
_BUILTIN_MODULI = {
    4: (2, (1, 1, 1)),          # t^2 + t + 1 over F_2
    8: (2, (1, 1, 0, 1)),       # t^3 + t + 1 over F_2
    9: (3, (1, 0, 1)),          # t^2 + 1 over F_3
    16: (2, (1, 1, 0, 0, 1)),   # t^4 + t + 1 over F_2
    25: (5, (1, 1, 1)),         # t^2 + t + 1 over F_5
    27: (3, (1, 2, 0, 1)),      # t^3 + 2t + 1 over F_3
}

_TABLE_CAP = 1024  # largest extension cardinality backed by lookup tables


def _is_prime(n):
    """Deterministic Miller-Rabin, exact for all n below 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# -- tuple-based F_p[t] helpers used only to build extension tables ---------

def _ptrim(a):
    while a and not a[-1]:
        a = a[:-1]
    return a


def _pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _ptrim(tuple(out))


def _pmod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        if a[-1]:
            f = a[-1] * inv_lead % p
            off = len(a) - 1 - dm
            for i, c in enumerate(m):
                a[off + i] = (a[off + i] - f * c) % p
        a.pop()
    return _ptrim(tuple(a))


def _irreducible(m, p):
    """Brute-force trial division by all monic factors of degree <= deg/2."""
    deg = len(m) - 1
    if deg < 1 or not m[-1]:
        return False
    for d in range(1, deg // 2 + 1):
        for code in range(p ** d):
            cand, c = [], code
            for _ in range(d):
                c, r = divmod(c, p)
                cand.append(r)
            cand.append(1)  # monic
            if not _pmod(m, tuple(cand), p):
                return False
    return True


class Field:
    """Descriptor of an exact coefficient field; see module docstring.

    Subclasses provide the raw operations ``add``, ``sub``, ``neg``, ``mul``,
    ``inv``, ``div``, ``from_int`` plus ``zero``/``one`` constants.  ``char``
    is the characteristic (0 for Q) and ``order`` the cardinality (None for
    Q).  Descriptors are immutable, hashable and safe to share.
    """

    kind = None
    char = None
    order = None

    @property
    def is_finite(self):
        return self.order is not None

    def element(self, x):
        """Coerce an int, Fraction or FieldElement into this field."""
        if isinstance(x, FieldElement):
            if x.field != self:
                raise AlgSeriesError(f"element of {x.field} used in {self}")
            return x
        if isinstance(x, Fraction) and self.kind == "rationals":
            return FieldElement(self, x)
        if isinstance(x, int):
            return FieldElement(self, self.from_int(x))
        raise AlgSeriesError(f"cannot coerce {x!r} into {self}")

    def pow(self, a, n):
        """Raw a**n by square and multiply; negative n inverts first."""
        if n < 0:
            a = self.inv(a)
            n = -n
        result = self.one
        while n:
            if n & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            n >>= 1
        return result

    def sum(self, values):
        acc = self.zero
        for v in values:
            acc = self.add(acc, v)
        return acc

    # Serialization of raw values for JSON automata and reports.
    def to_literal(self, a):
        raise NotImplementedError

    def from_literal(self, lit):
        raise NotImplementedError


class PrimeField(Field):
    """F_p with residue arithmetic."""

    kind = "prime"

    def __init__(self, p):
        if not _is_prime(p):
            raise AlgSeriesError(f"{p} is not prime")
        self.char = p
        self.order = p
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        return (a + b) % self.char

    def sub(self, a, b):
        return (a - b) % self.char

    def neg(self, a):
        return -a % self.char

    def mul(self, a, b):
        return a * b % self.char

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.char - 2, self.char)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def from_int(self, n):
        return n % self.char

    def elements(self):
        return range(self.order)

    def fmt(self, a):
        return str(a)

    def to_literal(self, a):
        return str(a)

    def from_literal(self, lit):
        return int(lit) % self.char

    def __repr__(self):
        return f"F{self.char}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.char == self.char

    def __hash__(self):
        return hash(("prime", self.char))


class ExtensionField(Field):
    """F_{p^k} = F_p[t]/(m(t)) with table-driven code arithmetic."""

    kind = "extension"

    def __init__(self, p, k, modulus):
        if not _is_prime(p):
            raise AlgSeriesError(f"{p} is not prime")
        if k < 2:
            raise AlgSeriesError("extension degree must be >= 2")
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != k + 1 or not modulus[-1]:
            raise AlgSeriesError(f"modulus must have degree {k}")
        if not _irreducible(modulus, p):
            raise AlgSeriesError("modulus is reducible over F_p")
        q = p ** k
        if q > _TABLE_CAP:
            raise AlgSeriesError(
                f"extension of size {q} exceeds table cap {_TABLE_CAP}")
        self.char = p
        self.degree = k
        self.order = q
        self.modulus = modulus
        self.zero = 0
        self.one = 1
        self._build_tables()

    def _decode(self, code):
        out = []
        for _ in range(self.degree):
            code, r = divmod(code, self.char)
            out.append(r)
        return tuple(out)

    def _encode(self, coeffs):
        code = 0
        for c in reversed(coeffs[:self.degree]):
            code = code * self.char + c
        return code

    def _build_tables(self):
        p, q = self.char, self.order
        vecs = [self._decode(c) for c in range(q)]
        add = [0] * (q * q)
        mul = [0] * (q * q)
        for a in range(q):
            va = vecs[a]
            for b in range(a, q):
                vb = vecs[b]
                s = self._encode(tuple((x + y) % p for x, y in zip(va, vb)))
                add[a * q + b] = add[b * q + a] = s
                prod = _pmod(_pmul(_ptrim(va), _ptrim(vb), p), self.modulus, p)
                m = self._encode(tuple(prod) + (0,) * self.degree)
                mul[a * q + b] = mul[b * q + a] = m
        self._add = add
        self._mul = mul
        neg = [0] * q
        for a in range(q):
            neg[a] = self._encode(tuple(-x % p for x in vecs[a]))
        self._neg = neg
        inv = [0] * q
        for a in range(1, q):
            inv[a] = self.pow(a, q - 2)
        self._inv = inv

    def add(self, a, b):
        return self._add[a * self.order + b]

    def sub(self, a, b):
        return self._add[a * self.order + self._neg[b]]

    def neg(self, a):
        return self._neg[a]

    def mul(self, a, b):
        return self._mul[a * self.order + b]

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return self._inv[a]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def from_int(self, n):
        return n % self.char

    def elements(self):
        return range(self.order)

    def coeff_vector(self, a):
        """Coefficient tuple (c_0, ..., c_{k-1}) of the code ``a``."""
        return self._decode(a)

    def fmt(self, a):
        coeffs = self._decode(a)
        parts = []
        for i, c in enumerate(coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                head = "" if c == 1 else f"{c}*"
                parts.append(f"{head}t" + (f"^{i}" if i > 1 else ""))
        return "+".join(parts) if parts else "0"

    def to_literal(self, a):
        return list(self._decode(a))

    def from_literal(self, lit):
        if not isinstance(lit, list) or not all(isinstance(c, int) for c in lit):
            raise AlgSeriesError("extension literal must be a list of ints")
        if len(lit) > self.degree:
            raise AlgSeriesError("extension literal has too many coefficients")
        coeffs = tuple(c % self.char for c in lit) + (0,) * self.degree
        return self._encode(coeffs)

    def modulus_text(self):
        parts = []
        for i, c in enumerate(self.modulus):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                head = "" if c == 1 else f"{c}*"
                parts.append(f"{head}t" + (f"^{i}" if i > 1 else ""))
        return "+".join(parts)

    def __repr__(self):
        return f"F{self.order}"

    def __eq__(self, other):
        return (isinstance(other, ExtensionField) and other.char == self.char
                and other.modulus == self.modulus)

    def __hash__(self):
        return hash(("ext", self.char, self.modulus))


class RationalField(Field):
    """Q with exact int/Fraction arithmetic; characteristic 0."""

    kind = "rationals"
    char = 0
    order = None
    zero = 0
    one = 1

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if isinstance(a, int):
            return Fraction(1, a)
        return 1 / a

    def div(self, a, b):
        if not b:
            raise ZeroDivisionError("division by zero")
        if isinstance(a, int) and isinstance(b, int):
            return Fraction(a, b)
        return Fraction(a) / b

    def from_int(self, n):
        return n

    def fmt(self, a):
        return str(a)

    def to_literal(self, a):
        return str(a)

    def from_literal(self, lit):
        frac = Fraction(lit)
        return int(frac) if frac.denominator == 1 else frac

    def __repr__(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rationals")


QQ = RationalField()

# Alias used at API boundaries: a Field object *is* the descriptor.
FieldDescriptor = Field


@functools.lru_cache(maxsize=None)
def _cached_field(p, k, modulus):
    if k == 1:
        return PrimeField(p)
    return ExtensionField(p, k, modulus)


def _prime_power(q):
    for cand in range(2, math.isqrt(q) + 1):
        if q % cand == 0:
            n, k = q, 0
            while n % cand == 0:
                n //= cand
                k += 1
            if n != 1:
                raise AlgSeriesError(f"{q} is not a prime power")
            return cand, k
    return q, 1  # q itself is prime


def GF(q, modulus=None):
    """Finite field of cardinality q.

    q must be a prime power; for extensions the modulus (an iterable of
    coefficient ints, constant term first, or anything with a ``coeffs``
    attribute) may be supplied, otherwise a built-in table or a brute-force
    search provides one.
    """
    if q < 2:
        raise AlgSeriesError("field cardinality must be >= 2")
    p, k = _prime_power(q)
    if k == 1 and not _is_prime(p):
        raise AlgSeriesError(f"{q} is not a prime power")
    if k == 1:
        if modulus is not None:
            raise AlgSeriesError("prime fields take no modulus")
        return _cached_field(p, 1, None)
    if modulus is None:
        if q in _BUILTIN_MODULI:
            modulus = _BUILTIN_MODULI[q][1]
        else:
            modulus = _search_modulus(p, k)
    else:
        coeffs = getattr(modulus, "coeffs", modulus)
        modulus = tuple(int(c) % p for c in coeffs)
    return _cached_field(p, k, tuple(modulus))


def _search_modulus(p, k):
    for code in range(p ** k):
        cand, c = [], code
        for _ in range(k):
            c, r = divmod(c, p)
            cand.append(r)
        cand.append(1)
        if _irreducible(tuple(cand), p):
            return tuple(cand)
    raise AlgSeriesError(f"no irreducible modulus of degree {k} found")  # unreachable


class FieldElement:
    """A raw value paired with its field; supports the usual operators."""

    __slots__ = ("field", "raw")

    def __init__(self, field, raw):
        self.field = field
        self.raw = raw

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise AlgSeriesError("mixed-field arithmetic")
            return other.raw
        if isinstance(other, int):
            return self.field.from_int(other)
        if isinstance(other, Fraction) and self.field.kind == "rationals":
            return other
        return None

    def __add__(self, other):
        raw = self._coerce(other)
        if raw is None:
            return NotImplemented
        return FieldElement(self.field, self.field.add(self.raw, raw))

    __radd__ = __add__

    def __sub__(self, other):
        raw = self._coerce(other)
        if raw is None:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(self.raw, raw))

    def __rsub__(self, other):
        raw = self._coerce(other)
        if raw is None:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(raw, self.raw))

    def __mul__(self, other):
        raw = self._coerce(other)
        if raw is None:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.raw, raw))

    __rmul__ = __mul__

    def __truediv__(self, other):
        raw = self._coerce(other)
        if raw is None:
            return NotImplemented
        return FieldElement(self.field, self.field.div(self.raw, raw))

    def __rtruediv__(self, other):
        raw = self._coerce(other)
        if raw is None:
            return NotImplemented
        return FieldElement(self.field, self.field.div(raw, self.raw))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.raw))

    def __pow__(self, n):
        return FieldElement(self.field, self.field.pow(self.raw, n))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return other.field == self.field and other.raw == self.raw
        raw = self._coerce(other)
        return raw is not None and raw == self.raw

    def __hash__(self):
        return hash((self.field, self.raw))

    def __bool__(self):
        return bool(self.raw)

    def __repr__(self):
        return f"{self.field.fmt(self.raw)}"
