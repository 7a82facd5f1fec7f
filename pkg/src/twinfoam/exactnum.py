"""Exact scalars: Gaussian rationals Q(i) and integer Laurent polynomials in q."""
from fractions import Fraction
import re


class GaussianRational:
    """An element re + im*i of Q(i).  Immutable."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def coerce(cls, x):
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, complex):
            return cls(Fraction(x.real), Fraction(x.imag))
        if isinstance(x, str):
            return parse_gq(x)
        return cls(x, 0)

    def __add__(self, other):
        o = _gq(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _gq(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _gq(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = _gq(other)
        if o is NotImplemented:
            return o
        if not self.im and not o.im:
            return GaussianRational(self.re * o.re, 0)
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def inverse(self):
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        o = _gq(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _gq(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        out = ONE
        for _ in range(abs(n)):
            out = out * base
        return out

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = _gq(other)
        if o is NotImplemented:
            return False
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return "GaussianRational(%s)" % str(self)

    def __str__(self):
        if not self.im:
            return str(self.re)
        im = "i" if abs(self.im) == 1 else "%s*i" % abs(self.im)
        if not self.re:
            return ("-" if self.im < 0 else "") + im
        return "%s%s%s" % (self.re, "-" if self.im < 0 else "+", im)


def _gq(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x, 0)
    return NotImplemented


ZERO = GaussianRational(0, 0)
ONE = GaussianRational(1, 0)
I = GaussianRational(0, 1)

_GQ_TERM = re.compile(r"([+-]?)([^+-]+)")


def parse_gq(text):
    """Parse strings such as "1/2", "-i", "3/4*i", "1/2-3*i", "2+i"."""
    s = text.strip().replace(" ", "").replace("j", "i")
    if not s:
        raise ValueError("empty Gaussian rational")
    re_part = Fraction(0)
    im_part = Fraction(0)
    pos = 0
    while pos < len(s):
        m = _GQ_TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError("malformed Gaussian rational: %r" % text)
        sign = -1 if m.group(1) == "-" else 1
        body = m.group(2)
        try:
            if body.endswith("i"):
                coeff = body[:-1]
                if coeff.endswith("*"):
                    coeff = coeff[:-1]
                    if not coeff:
                        raise ValueError(body)
                im_part += sign * (Fraction(coeff) if coeff else 1)
            else:
                re_part += sign * Fraction(body)
        except (ValueError, ZeroDivisionError):
            raise ValueError("malformed Gaussian rational: %r" % text) from None
        pos = m.end()
    return GaussianRational(re_part, im_part)


def gq_add(x, y):
    return GaussianRational.coerce(x) + GaussianRational.coerce(y)


def gq_mul(x, y):
    return GaussianRational.coerce(x) * GaussianRational.coerce(y)


def gq_neg(x):
    return -GaussianRational.coerce(x)


def gq_inv(x):
    return GaussianRational.coerce(x).inverse()


class LaurentPolynomial:
    """Integer Laurent polynomial in q, stored as {exponent: coefficient}."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        for e, v in dict(coeffs or {}).items():
            v = int(v)
            if v:
                c[int(e)] = c.get(int(e), 0) + v
                if not c[int(e)]:
                    del c[int(e)]
        self._c = c

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls({exp: coeff})

    @property
    def coefficients(self):
        return dict(self._c)

    def __add__(self, other):
        other = _lp(other)
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return LaurentPolynomial(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        return self + (-_lp(other))

    def __rsub__(self, other):
        return _lp(other) - self

    def __mul__(self, other):
        other = _lp(other)
        c = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return LaurentPolynomial(c)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = LaurentPolynomial({0: 1})
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial({0: other})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def evaluate(self, q):
        total = 0
        for e, v in self._c.items():
            total += v * (Fraction(q) ** e)
        return total

    def __repr__(self):
        return "LaurentPolynomial(%r)" % (str(self),)

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c):
            v = self._c[e]
            if e == 0:
                mono = str(abs(v))
            else:
                base = "q" if e == 1 else "q^%d" % e
                mono = base if abs(v) == 1 else "%d*%s" % (abs(v), base)
            if not parts:
                parts.append(("-" if v < 0 else "") + mono)
            else:
                parts.append(("- " if v < 0 else "+ ") + mono)
        return " ".join(parts)


def _lp(x):
    if isinstance(x, LaurentPolynomial):
        return x
    if isinstance(x, int):
        return LaurentPolynomial({0: x})
    raise TypeError("cannot use %r as a Laurent polynomial" % (x,))


Q = LaurentPolynomial({1: 1})
QINV = LaurentPolynomial({-1: 1})


def lp_add(p, r):
    return _lp(p) + _lp(r)


def lp_mul(p, r):
    return _lp(p) * _lp(r)


def lp_eval(p, q):
    return _lp(p).evaluate(q)
