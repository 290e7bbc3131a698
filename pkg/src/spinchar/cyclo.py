"""Exact arithmetic in the cyclotomic field Q(w), w a primitive cube root of unity.

Elements are stored on the basis {1, w} as a pair of rationals, with the
relation w^2 + w + 1 = 0 folded into multiplication.  Rationals are
`fractions.Fraction`, so everything is arbitrary precision and canonically
reduced (positive denominator, gcd 1).  Equality is field-by-field, which the
{1, w} basis keeps syntactic.

The canonical text form is "p/q+r/s*w" with zero terms omitted; see
`cyc_str` / `parse_cyc`.
"""

from fractions import Fraction
import math
import re


class CycError(ArithmeticError):
    """Raised for invalid field operations (division by zero, bad parse)."""


class Cyc:
    """A number a + b*w in Q(w), immutable."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        object.__setattr__(self, "a", a if type(a) is Fraction else Fraction(a))
        object.__setattr__(self, "b", b if type(b) is Fraction else Fraction(b))

    def __setattr__(self, name, value):
        raise AttributeError("Cyc is immutable")

    @classmethod
    def zero(cls):
        return ZERO

    @classmethod
    def one(cls):
        return ONE

    @classmethod
    def from_scalar(cls, x):
        return as_cyc(x)

    def denominator_lcm(self):
        d = self.a.denominator
        return d * self.b.denominator // math.gcd(d, self.b.denominator)

    # -- ring structure -------------------------------------------------
    # binary ops return NotImplemented for foreign types so that a larger
    # field's reflected operation can take over

    def __add__(self, other):
        if not isinstance(other, (Cyc, int, Fraction)):
            return NotImplemented
        other = as_cyc(other)
        return Cyc(self.a + other.a, self.b + other.b)

    def __radd__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return as_cyc(other) + self

    def __sub__(self, other):
        if not isinstance(other, (Cyc, int, Fraction)):
            return NotImplemented
        other = as_cyc(other)
        return Cyc(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return as_cyc(other) - self

    def __neg__(self):
        return Cyc(-self.a, -self.b)

    def __mul__(self, other):
        if not isinstance(other, (Cyc, int, Fraction)):
            return NotImplemented
        other = as_cyc(other)
        a, b, c, d = self.a, self.b, other.a, other.b
        # (a+bw)(c+dw) = ac + (ad+bc)w + bd(w^2) and w^2 = -1-w
        bd = b * d
        return Cyc(a * c - bd, a * d + b * c - bd)

    def __rmul__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return as_cyc(other) * self

    def __truediv__(self, other):
        if not isinstance(other, (Cyc, int, Fraction)):
            return NotImplemented
        other = as_cyc(other)
        n = other.norm()
        if n == 0:
            raise CycError("division by zero in Q(w)")
        # 1/z = conj(z)/norm(z)
        c = other.conj()
        return Cyc(self.a, self.b) * Cyc(c.a / n, c.b / n)

    def __rtruediv__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return as_cyc(other) / self

    def __pow__(self, k):
        if k < 0:
            return (ONE / self) ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- field-specific pieces ------------------------------------------

    def conj(self):
        """Complex conjugate; sends w to w^2 = -1-w."""
        return Cyc(self.a - self.b, -self.b)

    def norm(self):
        """z * conj(z) as a Fraction; nonnegative, zero iff z = 0."""
        return self.a * self.a - self.a * self.b + self.b * self.b

    def is_zero(self):
        return not self.a and not self.b

    def is_rational(self):
        return not self.b

    # -- comparison / hashing -------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if not isinstance(other, Cyc):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return "Cyc(%r)" % cyc_str(self)

    def __complex__(self):
        w = complex(-0.5, math.sqrt(3) / 2)
        return float(self.a) + float(self.b) * w


def as_cyc(x):
    if isinstance(x, Cyc):
        return x
    if isinstance(x, (int, Fraction)):
        return Cyc(x)
    raise TypeError("cannot coerce %r into Q(w)" % (x,))


ZERO = Cyc(0)
ONE = Cyc(1)
OMEGA = Cyc(0, 1)
OMEGA2 = Cyc(-1, -1)

_ROOTS = (ONE, OMEGA, OMEGA2)


def root_of_unity(k):
    """w^(k mod 3) as an exact Cyc."""
    return _ROOTS[k % 3]


def root_exponent(z):
    """Inverse of root_of_unity: return k with z = w^k, or None."""
    for k in range(3):
        if z == _ROOTS[k]:
            return k
    return None


# -- canonical text form -------------------------------------------------

def _frac_str(f):
    return str(f.numerator) if f.denominator == 1 else "%d/%d" % (f.numerator, f.denominator)


def cyc_str(z):
    """Canonical serialization: "0", "1", "w", "-1-1*w", "5/3+2*w", ..."""
    z = as_cyc(z)
    if z.is_zero():
        return "0"
    parts = []
    if z.a:
        parts.append(_frac_str(z.a))
    if z.b:
        if z.b == 1:
            term = "w"
        else:
            term = _frac_str(z.b) + "*w"
        if parts and z.b > 0:
            parts.append("+")
        parts.append(term)
    return "".join(parts)


_TERM_RE = re.compile(
    r"""^(?:
        (?P<coef>[+-]?\d+(?:/\d+)?)\*w   # explicit coefficient times w
        | (?P<bare>[+-]?)w               # bare w with optional sign
        | (?P<rat>[+-]?\d+(?:/\d+)?)     # rational term
    )$""",
    re.VERBOSE,
)


def parse_cyc(text):
    """Parse the canonical text form back into a Cyc (round-trips cyc_str)."""
    s = text.strip().replace(" ", "")
    if not s:
        raise CycError("empty Q(w) literal")
    # split into signed terms, keeping each sign attached to its term
    terms = re.findall(r"[+-]?[^+-]+", s)
    if "".join(terms) != s:
        raise CycError("malformed Q(w) literal: %r" % text)
    a = Fraction(0)
    b = Fraction(0)
    for term in terms:
        m = _TERM_RE.match(term)
        if m is None:
            raise CycError("malformed term %r in Q(w) literal %r" % (term, text))
        if m.group("coef") is not None:
            b += Fraction(m.group("coef"))
        elif m.group("rat") is not None:
            a += Fraction(m.group("rat"))
        else:
            b += -1 if m.group("bare") == "-" else 1
    return Cyc(a, b)


# -- exact cube roots ----------------------------------------------------

def _icbrt(n):
    """Integer cube root of n >= 0 if exact, else None."""
    if n < 0:
        raise ValueError
    r = round(n ** (1.0 / 3.0)) if n else 0
    for c in (r - 1, r, r + 1):
        if c >= 0 and c * c * c == n:
            return c
    return None


def _frac_cbrt(f):
    """Exact rational cube root of a Fraction, or None."""
    if f < 0:
        num = _icbrt(-f.numerator)
        den = _icbrt(f.denominator)
        return None if num is None or den is None else Fraction(-num, den)
    num = _icbrt(f.numerator)
    den = _icbrt(f.denominator)
    return None if num is None or den is None else Fraction(num, den)


def _frac_sqrt(f):
    """Exact rational square root of a nonnegative Fraction, or None."""
    if f < 0:
        return None
    num = math.isqrt(f.numerator)
    den = math.isqrt(f.denominator)
    if num * num != f.numerator or den * den != f.denominator:
        return None
    return Fraction(num, den)


def _rational_roots(c0, c1):
    """All rational roots of T^3 + c1*T + c0 with c0, c1 Fractions."""
    # clear denominators: T = u/v with u | a0, v | a3 after scaling
    den = math.lcm(c0.denominator, c1.denominator)
    a3, a1, a0 = den, c1 * den, c0 * den
    a1, a0 = int(a1), int(a0)
    roots = set()
    if a0 == 0:
        roots.add(Fraction(0))
    cands_num = _divisors(abs(a0)) if a0 else {0}
    cands_den = _divisors(a3)
    for u in cands_num:
        for v in cands_den:
            for t in (Fraction(u, v), Fraction(-u, v)):
                if a3 * t**3 + a1 * t + a0 == 0:
                    roots.add(t)
    return roots


def _divisors(n):
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return out


def cyc_cbrt(v):
    """One exact cube root of v in Q(w), or None if none exists there.

    The other roots are w and w^2 times the returned one.  Works by reducing
    to rational data: norm(t) and trace(t) of a root t satisfy rational
    equations determined by v.
    """
    v = as_cyc(v)
    if v.is_zero():
        return ZERO
    s = _frac_cbrt(v.norm())
    if s is None:
        return None
    trace_v = 2 * v.a - v.b  # v + conj(v)
    # (t + conj t)^3 - 3 norm(t) (t + conj t) - (v + conj v) = 0
    for tau in _rational_roots(-trace_v, -3 * s):
        disc = 3 * (4 * s - tau * tau)
        r = _frac_sqrt(disc)
        if r is None:
            continue
        for sign in (1, -1):
            x = (3 * tau + sign * r) / 6
            y = 2 * x - tau
            t = Cyc(x, y)
            if t * t * t == v:
                return t
    return None
