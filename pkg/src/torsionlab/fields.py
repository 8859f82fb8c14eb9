"""Exact arithmetic for the two base fields: Q and Q(sqrt(-3)).

Everything downstream (polynomials, curves, torsion bookkeeping) works over
one of these fields or over a rational-function field built on top of them.
Rationals are `fractions.Fraction` (always reduced, positive denominator);
elements of Q(sqrt(-3)) are `K3` values `re + im*sqrt(-3)` with Fraction
components.  All values are immutable.
"""

from __future__ import annotations

import math
import re as _re
from fractions import Fraction

Rational = Fraction

_RAT_RE = _re.compile(r"^[+-]?\d+(/\d+)?$")


def rational_from_str(text: str) -> Fraction:
    """Parse "p/q" or "p" into a Fraction (strict grammar, no whitespace)."""
    text = text.strip()
    if not _RAT_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    return Fraction(text)


def rational_to_str(q: Fraction) -> str:
    """Canonical text form: "p/q", or just "p" when the denominator is 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rational_sqrt(v: Fraction) -> Fraction | None:
    """The nonnegative rational square root of v, or None when none exists.

    Uses exact integer square roots of numerator and denominator; a reduced
    fraction is a square iff both parts are.
    """
    if v < 0:
        return None
    num, den = v.numerator, v.denominator
    rn = math.isqrt(num)
    if rn * rn != num:
        return None
    rd = math.isqrt(den)
    if rd * rd != den:
        return None
    return Fraction(rn, rd)


def _as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError(f"cannot interpret {v!r} as a rational")


class K3:
    """An element re + im*sqrt(-3) of Q(sqrt(-3)).

    Equality is componentwise; arithmetic is exact.  The class interoperates
    with int and Fraction on the left and right.
    """

    __slots__ = ("re", "im")

    def __init__(self, re, im=0):
        object.__setattr__(self, "re", _as_fraction(re))
        object.__setattr__(self, "im", _as_fraction(im))

    def __setattr__(self, *_):
        raise AttributeError("K3 values are immutable")

    # -- structure ---------------------------------------------------------

    def conjugate(self) -> K3:
        return K3(self.re, -self.im)

    def norm(self) -> Fraction:
        """re^2 + 3*im^2; nonnegative, zero iff the element is zero."""
        return self.re * self.re + 3 * self.im * self.im

    @property
    def is_rational(self) -> bool:
        return self.im == 0

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _lift(other):
        if isinstance(other, K3):
            return other
        if isinstance(other, (int, Fraction)):
            return K3(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return K3(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return K3(-self.re, -self.im)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return K3(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        # (a + b w)(c + d w) with w^2 = -3
        return K3(self.re * o.re - 3 * self.im * o.im,
                  self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt(-3))")
        c = o.conjugate()
        return K3((self.re * c.re - 3 * self.im * c.im) / n,
                  (self.re * c.im + self.im * c.re) / n)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if n < 0:
            return (K3(1) / self) ** (-n)
        result = K3(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison / hashing ------------------------------------------------

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __repr__(self):
        return f"K3({self.re!r}, {self.im!r})"

    def __str__(self):
        return k3_to_str(self)


def k3_norm(z: K3 | Fraction | int) -> Fraction:
    """Field norm of z in Q(sqrt(-3)): re^2 + 3*im^2."""
    if isinstance(z, (int, Fraction)):
        z = K3(z)
    return z.norm()


def k3_sqrt(v: K3 | Fraction | int) -> K3 | None:
    """A square root of v in Q(sqrt(-3)), or None.

    Writing w = p + q*sqrt(-3), w^2 = v means p^2 - 3 q^2 = re(v) and
    2 p q = im(v).  When im(v) = 0 try p = 0 and q = 0 separately; otherwise
    p^2 is a root of X^2 - re(v) X - (3/4) im(v)^2, which requires re(v)^2 +
    3 im(v)^2 (the norm) to be a rational square first.
    """
    if isinstance(v, (int, Fraction)):
        v = K3(v)
    if not v:
        return K3(0)
    if v.im == 0:
        r = rational_sqrt(v.re)
        if r is not None:
            return K3(r)
        r = rational_sqrt(-v.re / 3)
        if r is not None:
            return K3(0, r)
        return None
    n = rational_sqrt(v.norm())
    if n is None:
        return None
    for sign in (1, -1):
        psq = (v.re + sign * n) / 2
        p = rational_sqrt(psq)
        if p is not None and p != 0:
            q = v.im / (2 * p)
            w = K3(p, q)
            if w * w == v:
                return w
    return None


_K3_TERM = _re.compile(
    r"^(?P<sign>[+-]?)(?:(?P<coef>\d+(/\d+)?)(?P<star>\*)?)?(?P<w>w)?$"
)


def k3_from_str(text: str) -> K3:
    """Parse the strict "a+b*w" grammar, w = sqrt(-3).

    Accepted terms: rational literals, "w", "b*w" with b rational; terms are
    joined by "+" or "-".  Examples: "-53+6*w", "8/9*w-2171/243", "w", "5".
    """
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty Q(sqrt(-3)) literal")
    # split into signed terms
    terms: list[str] = []
    cur = ""
    for i, ch in enumerate(s):
        if ch in "+-" and i > 0 and s[i - 1] not in "+-":
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    terms.append(cur)
    re_part = Fraction(0)
    im_part = Fraction(0)
    for term in terms:
        m = _K3_TERM.match(term)
        if not m or (m.group("coef") is None and m.group("w") is None):
            raise ValueError(f"bad Q(sqrt(-3)) literal: {text!r}")
        if m.group("star") and not m.group("w"):
            raise ValueError(f"bad Q(sqrt(-3)) literal: {text!r}")
        sign = -1 if m.group("sign") == "-" else 1
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("w"):
            im_part += sign * coef
        else:
            re_part += sign * coef
    return K3(re_part, im_part)


def k3_to_str(z: K3) -> str:
    """Canonical "a+b*w" form; omits zero parts ("0" for zero)."""
    if z.im == 0:
        return rational_to_str(z.re)
    wpart = "w" if abs(z.im) == 1 else f"{rational_to_str(abs(z.im))}*w"
    sign = "-" if z.im < 0 else ("+" if z.re != 0 else "")
    if z.re == 0:
        return f"{sign}{wpart}"
    return f"{rational_to_str(z.re)}{sign}{wpart}"


def k3_to_json(z: K3) -> dict:
    """Serialization per the wire format: {"re": "p/q", "im": "p/q"}."""
    return {"re": rational_to_str(z.re), "im": rational_to_str(z.im)}


def k3_from_json(obj: dict) -> K3:
    return K3(rational_from_str(obj["re"]), rational_from_str(obj["im"]))


class _QQField:
    """Field object for Q; gives generic code zero/one/coerce/sqrt."""

    name = "Q"
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, v):
        if isinstance(v, Fraction):
            return v
        if isinstance(v, int):
            return Fraction(v)
        if isinstance(v, K3) and v.im == 0:
            return v.re
        raise TypeError(f"cannot coerce {v!r} into Q")

    def sqrt(self, v):
        return rational_sqrt(self.coerce(v))

    def conjugate(self, v):
        return v

    def to_str(self, v) -> str:
        return rational_to_str(v)

    def from_str(self, text: str):
        return rational_from_str(text)

    def __repr__(self):
        return "QQ"


class _K3Field:
    """Field object for Q(sqrt(-3)); sqrt(-3) is the only extension built in."""

    name = "Q(sqrt-3)"
    zero = K3(0)
    one = K3(1)

    def coerce(self, v):
        if isinstance(v, K3):
            return v
        if isinstance(v, (int, Fraction)):
            return K3(v)
        raise TypeError(f"cannot coerce {v!r} into Q(sqrt(-3))")

    def sqrt(self, v):
        return k3_sqrt(self.coerce(v))

    def conjugate(self, v):
        return self.coerce(v).conjugate()

    def to_str(self, v) -> str:
        return k3_to_str(self.coerce(v))

    def from_str(self, text: str):
        return k3_from_str(text)

    def __repr__(self):
        return "QS3"


QQ = _QQField()
QS3 = _K3Field()

SQRT_M3 = K3(0, 1)


def field_of(value):
    """The smallest of the two base fields containing a concrete value."""
    if isinstance(value, (int, Fraction)):
        return QQ
    if isinstance(value, K3):
        return QS3
    raise TypeError(f"no base field for {value!r}")
