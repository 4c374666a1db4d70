"""Sparse exact polynomials and gcd-canonical rational functions.

UniPoly stores a dense coefficient tuple (no trailing zeros, () is zero);
BiPoly stores a sparse (i, j) -> coefficient map with deterministic sorted
iteration so downstream output is byte-stable.  RationalFn keeps univariate
fractions gcd-reduced with a monic denominator, which makes equality of
rational functions a structural comparison; bivariate fractions are reduced
only by their common monomial content (full bivariate gcd is out of scope).
"""

from ..errors import AlgSeriesError, ZeroDenominator


def _term_text(field, coeff, mono):
    """One formatted term; ``mono`` like "X^2*Y" or "" for the constant."""
    if not mono:
        return field.fmt(coeff)
    if coeff == field.one:
        return mono
    cs = field.fmt(coeff)
    if "+" in cs:
        cs = f"({cs})"
    return f"{cs}*{mono}"


class UniPoly:
    """Univariate polynomial with exact coefficients over a field.

    ``coeffs`` is a tuple, constant term first, with a nonzero last entry;
    the zero polynomial is the empty tuple and has degree -1.  Instances are
    immutable.
    """

    __slots__ = ("field", "coeffs", "var")

    def __init__(self, field, coeffs, var="X"):
        coeffs = list(coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)
        self.var = var

    @classmethod
    def zero(cls, field, var="X"):
        return cls(field, (), var)

    @classmethod
    def one(cls, field, var="X"):
        return cls(field, (field.one,), var)

    @classmethod
    def x(cls, field, var="X"):
        return cls(field, (field.zero, field.one), var)

    @classmethod
    def constant(cls, field, c, var="X"):
        return cls(field, (c,), var)

    @classmethod
    def from_int_coeffs(cls, field, ints, var="X"):
        return cls(field, [field.from_int(c) for c in ints], var)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def lead(self):
        if not self.coeffs:
            return self.field.zero
        return self.coeffs[-1]

    def __getitem__(self, n):
        if 0 <= n < len(self.coeffs):
            return self.coeffs[n]
        return self.field.zero

    def _same(self, other):
        if not isinstance(other, UniPoly) or other.field != self.field:
            raise AlgSeriesError("univariate arithmetic needs matching fields")
        return other

    def __add__(self, other):
        other = self._same(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return UniPoly(f, out, self.var)

    def __sub__(self, other):
        other = self._same(other)
        f = self.field
        out = [f.zero] * max(len(self.coeffs), len(other.coeffs))
        for i, c in enumerate(self.coeffs):
            out[i] = c
        for i, c in enumerate(other.coeffs):
            out[i] = f.sub(out[i], c)
        return UniPoly(f, out, self.var)

    def __neg__(self):
        f = self.field
        return UniPoly(f, [f.neg(c) for c in self.coeffs], self.var)

    def __mul__(self, other):
        other = self._same(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly.zero(f, self.var)
        out = [f.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = f.add(out[i + j], f.mul(x, y))
        return UniPoly(f, out, self.var)

    def scale(self, c):
        f = self.field
        if not c:
            return UniPoly.zero(f, self.var)
        return UniPoly(f, [f.mul(c, x) for x in self.coeffs], self.var)

    def shift(self, k):
        """Multiply by X^k."""
        if not self.coeffs:
            return self
        return UniPoly(self.field, (self.field.zero,) * k + self.coeffs, self.var)

    def __pow__(self, n):
        result = UniPoly.one(self.field, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other):
        other = self._same(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly.zero(f, self.var), self
        quot = [f.zero] * (dq + 1)
        inv_lead = f.inv(other.lead())
        for k in range(dq, -1, -1):
            top = rem[k + other.degree]
            if top:
                c = f.mul(top, inv_lead)
                quot[k] = c
                for i, oc in enumerate(other.coeffs):
                    rem[k + i] = f.sub(rem[k + i], f.mul(c, oc))
        return UniPoly(f, quot, self.var), UniPoly(f, rem[:other.degree], self.var)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self):
        if self.is_zero() or self.lead() == self.field.one:
            return self
        return self.scale(self.field.inv(self.lead()))

    def gcd(self, other):
        """Monic greatest common divisor via Euclid."""
        a, b = self, self._same(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def derivative(self):
        f = self.field
        out = []
        for n, c in enumerate(self.coeffs[1:], start=1):
            out.append(f.mul(f.from_int(n), c))
        return UniPoly(f, out, self.var)

    def evaluate(self, x):
        """Horner evaluation at a raw field value."""
        f = self.field
        acc = f.zero
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc

    def subst_power(self, e):
        """Substitute X -> X^e (exponent spreading)."""
        if e == 1 or self.is_zero():
            return self
        out = [self.field.zero] * (self.degree * e + 1)
        for n, c in enumerate(self.coeffs):
            out[n * e] = c
        return UniPoly(self.field, out, self.var)

    def valuation(self):
        """Index of the lowest nonzero coefficient (None for zero)."""
        for n, c in enumerate(self.coeffs):
            if c:
                return n
        return None

    def __eq__(self, other):
        return (isinstance(other, UniPoly) and other.field == self.field
                and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def to_text(self):
        if not self.coeffs:
            return "0"
        field = self.field
        parts = []
        for n, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if n == 0 else (self.var if n == 1 else f"{self.var}^{n}")
            parts.append((_is_negative(field, c), _term_text(field, _abs(field, c), mono)))
        return _join_signed(parts)

    def __repr__(self):
        return self.to_text()


def _is_negative(field, c):
    return field.kind == "rationals" and c < 0


def _abs(field, c):
    return -c if _is_negative(field, c) else c


def _join_signed(parts):
    out = []
    for k, (neg, text) in enumerate(parts):
        if k == 0:
            out.append(f"-{text}" if neg else text)
        else:
            out.append(f" - {text}" if neg else f" + {text}")
    return "".join(out)


class BiPoly:
    """Bivariate polynomial as a sparse {(i, j): coefficient} map.

    No zero coefficients are stored; iteration via :meth:`items` is sorted
    by (i, j).  Instances are treated as immutable.
    """

    __slots__ = ("field", "terms")

    def __init__(self, field, terms):
        self.field = field
        self.terms = {k: v for k, v in terms.items() if v}

    @classmethod
    def zero(cls, field):
        return cls(field, {})

    @classmethod
    def constant(cls, field, c):
        return cls(field, {(0, 0): c})

    @classmethod
    def one(cls, field):
        return cls.constant(field, field.one)

    @classmethod
    def x(cls, field):
        return cls(field, {(1, 0): field.one})

    @classmethod
    def y(cls, field):
        return cls(field, {(0, 1): field.one})

    @classmethod
    def from_terms(cls, field, pairs):
        """Accumulate ((i, j), coeff) pairs (coeffs may be ints)."""
        acc = {}
        for (i, j), c in pairs:
            if isinstance(c, int):
                c = field.from_int(c)
            key = (i, j)
            acc[key] = field.add(acc.get(key, field.zero), c)
        return cls(field, acc)

    @classmethod
    def from_unipoly(cls, poly, axis="X"):
        terms = {}
        for n, c in enumerate(poly.coeffs):
            if c:
                terms[(n, 0) if axis == "X" else (0, n)] = c
        return cls(poly.field, terms)

    def items(self):
        return sorted(self.terms.items())

    def is_zero(self):
        return not self.terms

    def coefficient(self, i, j):
        return self.terms.get((i, j), self.field.zero)

    @property
    def deg_x(self):
        return max((i for i, _ in self.terms), default=-1)

    @property
    def deg_y(self):
        return max((j for _, j in self.terms), default=-1)

    @property
    def total_degree(self):
        return max((i + j for i, j in self.terms), default=-1)

    def _same(self, other):
        if not isinstance(other, BiPoly) or other.field != self.field:
            raise AlgSeriesError("bivariate arithmetic needs matching fields")
        return other

    def __add__(self, other):
        other = self._same(other)
        f = self.field
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = f.add(out.get(k, f.zero), v)
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return BiPoly(f, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        f = self.field
        return BiPoly(f, {k: f.neg(v) for k, v in self.terms.items()})

    def __mul__(self, other):
        other = self._same(other)
        f = self.field
        add, mul = f.add, f.mul
        out = {}
        for (i, j), v in self.terms.items():
            for (a, b), w in other.terms.items():
                key = (i + a, j + b)
                prev = out.get(key)
                out[key] = mul(v, w) if prev is None else add(prev, mul(v, w))
        return BiPoly(f, out)

    def scale(self, c):
        f = self.field
        if not c:
            return BiPoly.zero(f)
        return BiPoly(f, {k: f.mul(c, v) for k, v in self.terms.items()})

    def mul_monomial(self, a, b):
        return BiPoly(self.field, {(i + a, j + b): v for (i, j), v in self.terms.items()})

    def __pow__(self, n):
        result = BiPoly.one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def eval_x(self, x):
        """Partial substitution X := x, giving a UniPoly in Y."""
        f = self.field
        out = {}
        for (i, j), v in self.terms.items():
            c = f.mul(v, f.pow(x, i)) if i else v
            if c:
                out[j] = f.add(out.get(j, f.zero), c)
        coeffs = [f.zero] * (max(out, default=-1) + 1)
        for j, c in out.items():
            coeffs[j] = c
        return UniPoly(f, coeffs, "Y")

    def eval_y(self, y):
        """Partial substitution Y := y, giving a UniPoly in X."""
        f = self.field
        out = {}
        for (i, j), v in self.terms.items():
            c = f.mul(v, f.pow(y, j)) if j else v
            if c:
                out[i] = f.add(out.get(i, f.zero), c)
        coeffs = [f.zero] * (max(out, default=-1) + 1)
        for i, c in out.items():
            coeffs[i] = c
        return UniPoly(f, coeffs, "X")

    def evaluate(self, x, y):
        return self.eval_y(y).evaluate(x)

    def y_slices(self):
        """Map j -> UniPoly in X with [X^i] = [X^i Y^j] self."""
        f = self.field
        rows = {}
        for (i, j), v in self.terms.items():
            rows.setdefault(j, {})[i] = v
        out = {}
        for j, row in rows.items():
            coeffs = [f.zero] * (max(row) + 1)
            for i, c in row.items():
                coeffs[i] = c
            out[j] = UniPoly(f, coeffs, "X")
        return out

    def as_unipoly_x(self):
        if self.deg_y > 0:
            raise AlgSeriesError("polynomial involves Y")
        f = self.field
        coeffs = [f.zero] * (self.deg_x + 1)
        for (i, _), v in self.terms.items():
            coeffs[i] = v
        return UniPoly(f, coeffs, "X")

    def key(self):
        """Canonical hashable identity (used for kernel-state dedup)."""
        return tuple((i, j, v) for (i, j), v in self.items())

    def __eq__(self, other):
        return (isinstance(other, BiPoly) and other.field == self.field
                and other.terms == self.terms)

    def __hash__(self):
        return hash((self.field, self.key()))

    def to_text(self):
        if not self.terms:
            return "0"
        field = self.field
        parts = []
        for (i, j), c in sorted(self.terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], -kv[0][0])):
            mono = []
            if i:
                mono.append("X" if i == 1 else f"X^{i}")
            if j:
                mono.append("Y" if j == 1 else f"Y^{j}")
            parts.append((_is_negative(field, c),
                          _term_text(field, _abs(field, c), "*".join(mono))))
        return _join_signed(parts)

    def __repr__(self):
        return self.to_text()


def substitute_xy(P):
    """X^a Y^b  |->  X^a Y^(a+b), i.e. P(X, Y) -> P(XY, Y)."""
    return BiPoly(P.field, {(a, a + b): c for (a, b), c in P.terms.items()})


def derivative_y(P):
    """Formal partial derivative in Y (in char p the factor j acts mod p)."""
    f = P.field
    out = {}
    for (a, b), c in P.terms.items():
        if b:
            v = f.mul(f.from_int(b), c)
            if v:
                out[(a, b - 1)] = v
    return BiPoly(f, out)


class RationalFn:
    """num/den in canonical form; ``arity`` is 1 or 2.

    Univariate: gcd(num, den) = 1 and den monic, so equality is structural.
    Bivariate: only the common monomial content is cancelled and the
    lex-least denominator coefficient is scaled to 1.
    """

    __slots__ = ("num", "den", "arity")

    def __init__(self, num, den):
        if isinstance(num, UniPoly) and isinstance(den, UniPoly):
            self.arity = 1
            if den.is_zero():
                raise ZeroDenominator("denominator is zero")
            if num.is_zero():
                num, den = UniPoly.zero(num.field, num.var), UniPoly.one(num.field, num.var)
            else:
                g = num.gcd(den)
                if g.degree > 0:
                    num, den = num // g, den // g
                lead = den.lead()
                if lead != den.field.one:
                    inv = den.field.inv(lead)
                    num, den = num.scale(inv), den.scale(inv)
        elif isinstance(num, BiPoly) and isinstance(den, BiPoly):
            self.arity = 2
            if den.is_zero():
                raise ZeroDenominator("denominator is zero")
            if num.is_zero():
                den = BiPoly.one(num.field)
            else:
                ni = min(i for i, _ in num.terms)
                nj = min(j for _, j in num.terms)
                di = min(i for i, _ in den.terms)
                dj = min(j for _, j in den.terms)
                ci, cj = min(ni, di), min(nj, dj)
                if ci or cj:
                    num = BiPoly(num.field, {(i - ci, j - cj): v for (i, j), v in num.terms.items()})
                    den = BiPoly(den.field, {(i - ci, j - cj): v for (i, j), v in den.terms.items()})
                lead = den.terms[min(den.terms)]
                if lead != den.field.one:
                    inv = den.field.inv(lead)
                    num, den = num.scale(inv), den.scale(inv)
        else:
            raise AlgSeriesError("numerator and denominator kinds must match")
        self.num = num
        self.den = den

    @property
    def field(self):
        return self.num.field

    @classmethod
    def from_poly(cls, poly):
        if isinstance(poly, BiPoly):
            return cls(poly, BiPoly.one(poly.field))
        return cls(poly, UniPoly.one(poly.field, poly.var))

    @classmethod
    def zero(cls, field, var="X"):
        return cls(UniPoly.zero(field, var), UniPoly.one(field, var))

    @classmethod
    def one(cls, field, var="X"):
        return cls(UniPoly.one(field, var), UniPoly.one(field, var))

    def is_zero(self):
        return self.num.is_zero()

    def _arith(self, other):
        if self.arity != 1:
            raise AlgSeriesError("bivariate rational arithmetic is not supported")
        if isinstance(other, UniPoly):
            other = RationalFn.from_poly(other)
        if not isinstance(other, RationalFn) or other.field != self.field:
            raise AlgSeriesError("rational arithmetic needs matching fields")
        return other

    def __add__(self, other):
        other = self._arith(other)
        return RationalFn(self.num * other.den + other.num * self.den,
                          self.den * other.den)

    def __sub__(self, other):
        other = self._arith(other)
        return RationalFn(self.num * other.den - other.num * self.den,
                          self.den * other.den)

    def __neg__(self):
        out = RationalFn.__new__(RationalFn)
        out.num, out.den, out.arity = -self.num, self.den, self.arity
        return out

    def __mul__(self, other):
        other = self._arith(other)
        return RationalFn(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        other = self._arith(other)
        if other.is_zero():
            raise ZeroDenominator("division by the zero rational function")
        return RationalFn(self.num * other.den, self.den * other.num)

    def inverse(self):
        if self.is_zero():
            raise ZeroDenominator("inverse of the zero rational function")
        return RationalFn(self.den, self.num)

    def key(self):
        if self.arity == 1:
            return (self.num.coeffs, self.den.coeffs)
        return (self.num.key(), self.den.key())

    def __eq__(self, other):
        return (isinstance(other, RationalFn) and other.arity == self.arity
                and other.field == self.field and other.key() == self.key())

    def __hash__(self):
        return hash((self.field, self.arity, self.key()))

    def is_one(self):
        return (self.arity == 1 and self.num.degree == 0
                and self.num.coeffs[0] == self.field.one and self.den.degree == 0)

    def to_text(self):
        num = self.num.to_text()
        if (self.arity == 1 and self.den.degree == 0) or \
           (self.arity == 2 and self.den == BiPoly.one(self.field)):
            return num
        den = self.den.to_text()
        if " " in num or "+" in num:
            num = f"({num})"
        if " " in den or "+" in den or "*" in den or "^" in den:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return self.to_text()


def ratfun_normalize(num, den):
    """Canonical rational function num/den (see RationalFn for the form)."""
    return RationalFn(num, den)
