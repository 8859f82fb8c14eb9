"""Rational-function fields Q(t) / Q(sqrt(-3))(t) and quadratic extensions.

`FunctionField(base, "s")` is the coefficient field used for the "for all s"
identity checks: an identity verified by one exact computation with RatFunc
coefficients holds for every admissible specialization.  `QuadExtField` is a
small internal tool: the function field of a curve y^2 = h(x) is the
quadratic extension of Q(x) by h, which lets rational-map identities be
checked at the generic point of the curve.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import dense
from .fields import QQ, QS3, K3


def _gcd_lists(base, a: list, b: list) -> list:
    """Monic gcd of dense lists over the base field; modular over Q."""
    if base is QQ and (len(a) > 8 or len(b) > 8):
        ai = _fractions_to_int(a)
        bi = _fractions_to_int(b)
        g = dense.int_poly_gcd(ai, bi)
        return [Fraction(c, g[-1]) for c in g]
    return dense.gcd_field(a, b)


def _fractions_to_int(a: list[Fraction]) -> list[int]:
    lcm = 1
    for c in a:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    return dense.int_primitive([int(c * lcm) for c in a])


class RatFunc:
    """A reduced fraction num/den of dense univariate polynomials.

    Canonical form: den monic, gcd(num, den) = 1.  Instances are immutable
    and compare structurally.
    """

    __slots__ = ("field", "num", "den")

    def __init__(self, field: FunctionField, num: list, den: list | None = None, *, _reduced=False):
        if den is None:
            den = [field.base.one]
        num = dense.trim(list(num))
        den = dense.trim(list(den))
        if not den:
            raise ZeroDivisionError("zero denominator in rational function")
        if not _reduced:
            if num:
                g = _gcd_lists(field.base, num, den)
                if dense.deg(g) > 0:
                    num, _ = dense.divmod_field(num, g)
                    den, _ = dense.divmod_field(den, g)
            else:
                den = [field.base.one]
            lc = den[-1]
            if lc != field.base.one:
                num = [c / lc for c in num]
                den = [c / lc for c in den]
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "num", tuple(num))
        object.__setattr__(self, "den", tuple(den))

    def __setattr__(self, *_):
        raise AttributeError("RatFunc values are immutable")

    # -- helpers -------------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, RatFunc):
            if other.field is not self.field and other.field != self.field:
                return None
            return other
        try:
            c = self.field.base.coerce(other)
        except TypeError:
            return None
        return RatFunc(self.field, [c], _reduced=True)

    @property
    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def constant_value(self):
        if not self.is_constant:
            raise ValueError(f"{self} is not constant")
        return self.num[0] if self.num else self.field.base.zero

    def is_polynomial(self) -> bool:
        return len(self.den) == 1

    def eval(self, x):
        """Specialize the parameter to a base-field value (poles raise)."""
        x = self.field.base.coerce(x)
        d = dense.eval_at(list(self.den), x, self.field.base.zero)
        if not d:
            raise ZeroDivisionError(f"pole of {self} at {x}")
        n = dense.eval_at(list(self.num), x, self.field.base.zero)
        return n / d

    def conjugate(self) -> RatFunc:
        """Coefficient-wise sqrt(-3) conjugation (parameter fixed)."""
        conj = self.field.base.conjugate
        return RatFunc(self.field, [conj(c) for c in self.num],
                       [conj(c) for c in self.den])

    def derivative(self) -> RatFunc:
        n, d = list(self.num), list(self.den)
        return RatFunc(self.field,
                       dense.sub(dense.mul(dense.deriv(n), d),
                                 dense.mul(n, dense.deriv(d))),
                       dense.mul(d, d))

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        num = dense.add(dense.mul(list(self.num), list(o.den)),
                        dense.mul(list(o.num), list(self.den)))
        return RatFunc(self.field, num, dense.mul(list(self.den), list(o.den)))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(self.field, [-c for c in self.num], list(self.den), _reduced=True)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.field, dense.mul(list(self.num), list(o.num)),
                       dense.mul(list(self.den), list(o.den)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.field, dense.mul(list(self.num), list(o.den)),
                       dense.mul(list(self.den), list(o.num)))

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if n < 0:
            return (self.field.one / self) ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def __repr__(self):
        t = self.field.var

        def side(cs):
            parts = []
            for i, c in enumerate(cs):
                if not c:
                    continue
                if i == 0:
                    parts.append(str(c))
                elif i == 1:
                    parts.append(f"{c}*{t}")
                else:
                    parts.append(f"{c}*{t}^{i}")
            return " + ".join(parts) if parts else "0"

        if len(self.den) == 1:
            return f"({side(self.num)})"
        return f"(({side(self.num)}) / ({side(self.den)}))"


class FunctionField:
    """The field of rational functions over a base field in one parameter."""

    def __init__(self, base, var: str):
        self.base = base
        self.var = var
        self.name = f"{base.name}({var})"
        self.zero = RatFunc(self, [], _reduced=True)
        self.one = RatFunc(self, [base.one], _reduced=True)
        self.gen = RatFunc(self, [base.zero, base.one], _reduced=True)

    def __eq__(self, other):
        return (isinstance(other, FunctionField)
                and other.base is self.base and other.var == self.var)

    def __hash__(self):
        return hash((id(self.base), self.var))

    def coerce(self, v):
        if isinstance(v, RatFunc):
            if v.field == self:
                return v
            raise TypeError(f"cannot coerce {v!r} from {v.field.name} into {self.name}")
        return RatFunc(self, [self.base.coerce(v)], _reduced=True)

    def from_coeffs(self, num, den=None) -> RatFunc:
        num = [self.base.coerce(c) for c in num]
        den = None if den is None else [self.base.coerce(c) for c in den]
        return RatFunc(self, num, den)

    def conjugate(self, v):
        return self.coerce(v).conjugate()

    def sqrt(self, v):
        v = self.coerce(v)
        if not v:
            return self.zero
        ns = poly_sqrt(self.base, list(v.num))
        if ns is None:
            return None
        ds = poly_sqrt(self.base, list(v.den))
        if ds is None:
            return None
        return RatFunc(self, ns, ds)

    def to_str(self, v) -> str:
        return repr(self.coerce(v))

    def __repr__(self):
        return self.name


def poly_sqrt(base, f: list) -> list | None:
    """Exact square root of a dense polynomial over a field, or None.

    Coefficients of the root are solved top-down from the coefficient
    identity g*g = f; the final product check rejects non-squares.
    """
    f = dense.trim(list(f))
    if not f:
        return []
    n = dense.deg(f)
    if n % 2:
        return None
    lc_root = base.sqrt(f[-1])
    if lc_root is None:
        return None
    m = n // 2
    g = [base.zero] * (m + 1)
    g[m] = lc_root
    for k in range(m - 1, -1, -1):
        # coefficient of x^(m+k) in g^2: 2 g[m] g[k] + known cross terms
        cross = base.zero
        i = k + 1
        while True:
            j = m + k - i
            if j < i or j > m or i > m:
                break
            if j < m:
                term = g[i] * g[j]
                cross = cross + (term if i == j else term + term)
            i += 1
        g[k] = (f[m + k] - cross) / (2 * lc_root)
    if dense.mul(g, g) == dense.trim(list(f)):
        return dense.trim(g)
    return None


class QuadExtElem:
    """a + b*alpha with alpha^2 = d over a base field."""

    __slots__ = ("ext", "a", "b")

    def __init__(self, ext: QuadExtField, a, b):
        object.__setattr__(self, "ext", ext)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __setattr__(self, *_):
        raise AttributeError("immutable")

    def _lift(self, other):
        if isinstance(other, QuadExtElem):
            return other if other.ext is self.ext else None
        try:
            return QuadExtElem(self.ext, self.ext.base.coerce(other), self.ext.base.zero)
        except TypeError:
            return None

    def __add__(self, o):
        o = self._lift(o)
        return NotImplemented if o is None else QuadExtElem(self.ext, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadExtElem(self.ext, -self.a, -self.b)

    def __sub__(self, o):
        o = self._lift(o)
        return NotImplemented if o is None else self + (-o)

    def __rsub__(self, o):
        o = self._lift(o)
        return NotImplemented if o is None else o - self

    def __mul__(self, o):
        o = self._lift(o)
        if o is None:
            return NotImplemented
        d = self.ext.d
        return QuadExtElem(self.ext, self.a * o.a + self.b * o.b * d,
                           self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = self._lift(o)
        if o is None:
            return NotImplemented
        n = o.a * o.a - o.b * o.b * self.ext.d
        if not n:
            raise ZeroDivisionError("non-invertible quadratic extension element")
        return QuadExtElem(self.ext, (self.a * o.a - self.b * o.b * self.ext.d) / n,
                           (self.b * o.a - self.a * o.b) / n)

    def __rtruediv__(self, o):
        o = self._lift(o)
        return NotImplemented if o is None else o / self

    def __pow__(self, n: int):
        result = self.ext.one
        base = self
        if n < 0:
            base = self.ext.one / self
            n = -n
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, o):
        o = self._lift(o)
        return NotImplemented if o is None else (self.a == o.a and self.b == o.b)

    def __hash__(self):
        return hash((self.a, self.b))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __repr__(self):
        return f"({self.a} + {self.b}*alpha)"


class QuadExtField:
    """base[alpha]/(alpha^2 - d); a field when d is not a square in base."""

    def __init__(self, base, d):
        self.base = base
        self.d = d
        self.zero = QuadExtElem(self, base.zero, base.zero)
        self.one = QuadExtElem(self, base.one, base.zero)
        self.gen = QuadExtElem(self, base.zero, base.one)
        self.name = f"{base.name}[sqrt]"

    def coerce(self, v):
        if isinstance(v, QuadExtElem) and v.ext is self:
            return v
        return QuadExtElem(self, self.base.coerce(v), self.base.zero)
