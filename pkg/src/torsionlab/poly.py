"""Sparse multivariate polynomials over an exact field, with elimination.

A Poly carries its coefficient field, an ordered variable tuple (at most
four names) and a term map {exponent tuple: nonzero coefficient}.  The
coefficient field may itself be a rational-function field, which is how
"identity in s" statements become single exact computations.

The elimination toolkit (subresultant PRS resultants, discriminants, gcd,
exact division, root finding) is what the halving/trisection procedures,
the duality checks and the parametrization verifications run on.
"""

from __future__ import annotations

import itertools
import re as _re
from fractions import Fraction

from . import dense, roots as _roots
from .fields import QQ, QS3, K3, field_of

MAX_VARS = 4


class PolyError(Exception):
    pass


class NotDivisible(PolyError):
    """Exact division was requested but the remainder is nonzero."""


class VariableMismatch(PolyError):
    pass


class Poly:
    __slots__ = ("field", "vars", "terms")

    def __init__(self, field, vars: tuple[str, ...], terms: dict):
        if len(vars) > MAX_VARS:
            raise VariableMismatch(f"more than {MAX_VARS} variables: {vars}")
        clean = {}
        for exp, c in terms.items():
            if c:
                clean[tuple(exp)] = c
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "vars", tuple(vars))
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *_):
        raise AttributeError("Poly values are immutable")

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(field, vars=()):
        return Poly(field, tuple(vars), {})

    @staticmethod
    def const(field, c, vars=()):
        c = field.coerce(c)
        vars = tuple(vars)
        return Poly(field, vars, {(0,) * len(vars): c} if c else {})

    @staticmethod
    def variable(field, name: str, vars=None):
        vars = (name,) if vars is None else tuple(vars)
        if name not in vars:
            raise VariableMismatch(f"{name} not among {vars}")
        exp = tuple(1 if v == name else 0 for v in vars)
        return Poly(field, vars, {exp: field.one})

    @staticmethod
    def from_univariate(field, var: str, coeffs: list):
        terms = {}
        for i, c in enumerate(coeffs):
            c = field.coerce(c)
            if c:
                terms[(i,)] = c
        return Poly(field, (var,), terms)

    # -- structure -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exp) for exp in self.terms)

    def constant_value(self):
        if self.is_zero:
            return self.field.zero
        if not self.is_constant:
            raise PolyError(f"{self} is not constant")
        return next(iter(self.terms.values()))

    def degree(self, var: str | None = None) -> int:
        """Total degree, or degree in one variable; -1 for the zero poly."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(exp) for exp in self.terms)
        i = self._vindex(var)
        return max(exp[i] for exp in self.terms)

    def _vindex(self, var: str) -> int:
        try:
            return self.vars.index(var)
        except ValueError:
            raise VariableMismatch(f"{var} not a variable of this polynomial") from None

    def uses(self, var: str) -> bool:
        if var not in self.vars:
            return False
        i = self.vars.index(var)
        return any(exp[i] for exp in self.terms)

    def coefficient(self, var: str, k: int) -> Poly:
        """Coefficient of var^k, as a Poly in the same variable tuple."""
        i = self._vindex(var)
        terms = {}
        for exp, c in self.terms.items():
            if exp[i] == k:
                e2 = list(exp)
                e2[i] = 0
                terms[tuple(e2)] = c
        return Poly(self.field, self.vars, terms)

    def leading_key(self):
        """Graded-lex largest exponent tuple (None for zero)."""
        if not self.terms:
            return None
        return max(self.terms, key=lambda e: (sum(e), e))

    def leading_coefficient(self):
        key = self.leading_key()
        return self.field.zero if key is None else self.terms[key]

    def monic(self) -> Poly:
        """Scale so the graded-lex leading coefficient is one."""
        if self.is_zero:
            return self
        lc = self.leading_coefficient()
        return self * (self.field.one / lc)

    # -- variable bookkeeping --------------------------------------------------

    def with_vars(self, vars: tuple[str, ...]) -> Poly:
        vars = tuple(vars)
        if vars == self.vars:
            return self
        for v in self.vars:
            if v not in vars and self.uses(v):
                raise VariableMismatch(f"dropping used variable {v}")
        pos = [vars.index(v) if v in vars else None for v in self.vars]
        terms = {}
        for exp, c in self.terms.items():
            e2 = [0] * len(vars)
            for i, e in enumerate(exp):
                if e:
                    e2[pos[i]] = e
            terms[tuple(e2)] = c
        return Poly(self.field, vars, terms)

    @staticmethod
    def _merge_vars(a: Poly, b: Poly) -> tuple[str, ...]:
        if a.vars == b.vars:
            return a.vars
        merged = list(a.vars)
        for v in b.vars:
            if v not in merged:
                merged.append(v)
        return tuple(merged)

    def _lift(self, other) -> Poly | None:
        if isinstance(other, Poly):
            if other.field != self.field:
                return None
            return other
        try:
            return Poly.const(self.field, other, self.vars)
        except TypeError:
            return None

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        vars = self._merge_vars(self, o)
        a, b = self.with_vars(vars), o.with_vars(vars)
        terms = dict(a.terms)
        for exp, c in b.terms.items():
            cur = terms.get(exp)
            terms[exp] = c if cur is None else cur + c
        return Poly(self.field, vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.field, self.vars, {e: -c for e, c in self.terms.items()})

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
        vars = self._merge_vars(self, o)
        a, b = self.with_vars(vars), o.with_vars(vars)
        terms: dict = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                prod = c1 * c2
                cur = terms.get(key)
                terms[key] = prod if cur is None else cur + prod
        return Poly(self.field, vars, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise PolyError("negative polynomial power")
        result = Poly.const(self.field, self.field.one, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        """Division by a field scalar only; use exact_divide for polynomials."""
        try:
            c = self.field.coerce(other)
        except TypeError:
            return NotImplemented
        inv = self.field.one / c
        return Poly(self.field, self.vars, {e: v * inv for e, v in self.terms.items()})

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        vars = self._merge_vars(self, o)
        return self.with_vars(vars).terms == o.with_vars(vars).terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- calculus / substitution -------------------------------------------------

    def partial(self, var: str) -> Poly:
        i = self._vindex(var)
        terms = {}
        for exp, c in self.terms.items():
            if exp[i]:
                e2 = list(exp)
                e2[i] -= 1
                key = tuple(e2)
                add = c * exp[i]
                cur = terms.get(key)
                terms[key] = add if cur is None else cur + add
        return Poly(self.field, self.vars, terms)

    def substitute(self, var: str, value) -> Poly:
        """Replace var by a Poly or a field scalar (Horner in var)."""
        i = self._vindex(var)
        if not isinstance(value, Poly):
            value = Poly.const(self.field, value, self.vars)
        coeffs = self.univariate_coefficients(var)
        acc = Poly.zero(self.field, self.vars)
        for c in reversed(coeffs):
            acc = acc * value + c
        return acc

    def univariate_coefficients(self, var: str) -> list[Poly]:
        """Dense list of Poly coefficients of var^0, var^1, ... (var kept in vars)."""
        d = self.degree(var)
        if d < 0:
            return []
        return [self.coefficient(var, k) for k in range(d + 1)]

    def to_dense(self, var: str) -> list:
        """Field-coefficient list; requires the poly to use only this variable."""
        for v in self.vars:
            if v != var and self.uses(v):
                raise VariableMismatch(f"{v} still occurs; not univariate in {var}")
        out = [self.field.zero] * (max(self.degree(var) + 1, 0))
        i = self._vindex(var) if var in self.vars else None
        for exp, c in self.terms.items():
            out[exp[i]] = c
        return dense.trim(out)

    def evaluate(self, assignment: dict, field=None):
        """Full evaluation; values may live in any field containing the coefficients."""
        missing = [v for v in self.vars if self.uses(v) and v not in assignment]
        if missing:
            raise PolyError(f"unassigned variables {missing}")
        values = dict(assignment)
        if field is None:
            probe = next(iter(values.values()), None)
            if probe is None:
                return self.constant_value()
            field = _field_of_value(probe)
        total = field.zero
        for exp, c in self.terms.items():
            term = field.coerce(c)
            for i, e in enumerate(exp):
                if e:
                    term = term * field.coerce(values[self.vars[i]]) ** e
            total = total + term
        return total

    def homogenize(self, var: str, degree: int | None = None) -> Poly:
        """Pad every term with powers of var up to the target degree."""
        if var in self.vars and self.uses(var):
            raise VariableMismatch(f"{var} already occurs")
        vars = self.vars if var in self.vars else self.vars + (var,)
        d = self.degree() if degree is None else degree
        if self.degree() > d:
            raise PolyError("degree target below actual degree")
        i = vars.index(var)
        terms = {}
        for exp, c in self.with_vars(vars).terms.items():
            e2 = list(exp)
            e2[i] = d - (sum(exp) - exp[i])
            terms[tuple(e2)] = c
        return Poly(self.field, vars, terms)

    def dehomogenize(self, var: str) -> Poly:
        return self.substitute(var, self.field.one)

    def is_homogeneous(self) -> bool:
        degs = {sum(exp) for exp in self.terms}
        return len(degs) <= 1

    def conjugate_coefficients(self) -> Poly:
        conj = self.field.conjugate
        return Poly(self.field, self.vars, {e: conj(c) for e, c in self.terms.items()})

    # -- printing ---------------------------------------------------------------

    def __repr__(self):
        return poly_to_str(self)


def _field_of_value(v):
    from .funcfield import QuadExtElem, RatFunc

    if isinstance(v, RatFunc):
        return v.field
    if isinstance(v, QuadExtElem):
        return v.ext
    return field_of(v)


# ----------------------------------------------------------------------
# exact division
# ----------------------------------------------------------------------


def exact_divide(f: Poly, g: Poly) -> Poly:
    """The quotient f/g when g divides f exactly; NotDivisible otherwise."""
    if g.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero:
        return Poly.zero(f.field, f.vars)
    vars = Poly._merge_vars(f, g)
    a, b = f.with_vars(vars), g.with_vars(vars)
    lead_b = b.leading_key()
    lc_b = b.terms[lead_b]
    quot: dict = {}
    terms = dict(a.terms)

    def lead(ts):
        return max(ts, key=lambda e: (sum(e), e))

    while terms:
        e = lead(terms)
        diff = tuple(x - y for x, y in zip(e, lead_b))
        if any(d < 0 for d in diff):
            raise NotDivisible(f"{g!r} does not divide {f!r}")
        c = terms[e] / lc_b
        quot[diff] = c
        for eb, cb in b.terms.items():
            key = tuple(x + y for x, y in zip(diff, eb))
            cur = terms.get(key, f.field.zero)
            new = cur - c * cb
            if new:
                terms[key] = new
            else:
                terms.pop(key, None)
    return Poly(f.field, vars, quot)


def divides(g: Poly, f: Poly) -> bool:
    try:
        exact_divide(f, g)
        return True
    except NotDivisible:
        return False


# ----------------------------------------------------------------------
# subresultant PRS: resultant / discriminant / gcd
# ----------------------------------------------------------------------


def _prem(A: list[Poly], B: list[Poly], field, vars) -> list[Poly]:
    """Pseudo-remainder of coefficient lists: lc(B)^(dA-dB+1) A mod B."""
    dB = len(B) - 1
    lb = B[-1]
    R = list(A)
    e = len(A) - len(B) + 1
    while len(R) >= len(B) and R:
        s = R[-1]
        R = [lb * c for c in R[:-1]]
        shift = len(R) - dB
        for i, bc in enumerate(B[:-1]):
            R[shift + i] = R[shift + i] - s * bc
        while R and R[-1].is_zero:
            R.pop()
        e -= 1
    lbp = _poly_pow(lb, max(e, 0))
    return [lbp * c for c in R]


def _poly_pow(p: Poly, n: int) -> Poly:
    out = Poly.const(p.field, p.field.one, p.vars)
    for _ in range(n):
        out = out * p
    return out


def _univar_lists(f: Poly, g: Poly, var: str):
    vars = Poly._merge_vars(f, g)
    if var not in vars:
        raise VariableMismatch(f"{var} not a variable of either input")
    fa, ga = f.with_vars(vars), g.with_vars(vars)
    return fa.univariate_coefficients(var), ga.univariate_coefficients(var), vars


def resultant(f: Poly, g: Poly, var: str) -> Poly:
    """Res_var(f, g) via the subresultant PRS (Ducos/Collins bookkeeping).

    The result is a Poly in the remaining variables (a constant Poly when
    both inputs are univariate).  Sign conventions follow the Sylvester
    determinant; this is cross-checked against a Bareiss determinant in the
    test suite.
    """
    A, B, vars = _univar_lists(f, g, var)
    field = f.field
    one = Poly.const(field, field.one, vars)
    if not A or not B:
        raise PolyError("resultant with the zero polynomial")
    s = 1
    if len(A) - 1 == 0 and len(B) - 1 == 0:
        return one
    if len(A) < len(B):
        if ((len(A) - 1) * (len(B) - 1)) % 2 == 1:
            s = -s
        A, B = B, A
    if len(B) == 1:
        return _scale_sign(_poly_pow(B[0], len(A) - 1), s)
    g_ = one
    h = one
    while True:
        dA, dB = len(A) - 1, len(B) - 1
        delta = dA - dB
        if dA % 2 == 1 and dB % 2 == 1:
            s = -s
        R = _prem(A, B, field, vars)
        if not R:
            return Poly.zero(field, vars)
        divisor = g_ * _poly_pow(h, delta)
        A = B
        B = [exact_divide(c, divisor) for c in R]
        g_ = A[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g_
        else:
            h = exact_divide(_poly_pow(g_, delta), _poly_pow(h, delta - 1))
        if len(B) - 1 > 0:
            continue
        # deg B == 0: final correction
        dA = len(A) - 1
        if dA == 0:
            raise AssertionError("PRS invariant broken")
        num = _poly_pow(B[0], dA)
        res = exact_divide(num, _poly_pow(h, dA - 1))
        return _scale_sign(res, s)


def _scale_sign(p: Poly, s: int) -> Poly:
    return p if s >= 0 else -p


def sylvester_resultant(f: Poly, g: Poly, var: str) -> Poly:
    """Naive Sylvester determinant via Bareiss elimination (test oracle)."""
    A, B, vars = _univar_lists(f, g, var)
    field = f.field
    m, n = len(A) - 1, len(B) - 1
    if m < 0 or n < 0:
        raise PolyError("resultant with the zero polynomial")
    size = m + n
    if size == 0:
        return Poly.const(field, field.one, vars)
    zero = Poly.zero(field, vars)
    mat = []
    for i in range(n):
        row = [zero] * size
        for j, c in enumerate(reversed(A)):
            row[i + j] = c
        mat.append(row)
    for i in range(m):
        row = [zero] * size
        for j, c in enumerate(reversed(B)):
            row[i + j] = c
        mat.append(row)
    # Bareiss fraction-free elimination
    sign = 1
    prev = Poly.const(field, field.one, vars)
    for k in range(size - 1):
        if mat[k][k].is_zero:
            for r in range(k + 1, size):
                if not mat[r][k].is_zero:
                    mat[k], mat[r] = mat[r], mat[k]
                    sign = -sign
                    break
            else:
                return Poly.zero(field, vars)
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                num = mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]
                mat[i][j] = exact_divide(num, prev)
            mat[i][k] = zero
        prev = mat[k][k]
    return _scale_sign(mat[size - 1][size - 1], sign)


def discriminant(f: Poly, var: str) -> Poly:
    """(-1)^(n(n-1)/2) Res(f, f_var) / lc_var(f)."""
    n = f.degree(var)
    if n < 2:
        raise PolyError("discriminant needs degree >= 2")
    res = resultant(f, f.partial(var), var)
    lc = f.coefficient(var, n)
    out = exact_divide(res, lc)
    return _scale_sign(out, -1 if (n * (n - 1) // 2) % 2 else 1)


def content(polys: list[Poly]) -> Poly:
    """Gcd of a list of polynomials (recursive; canonical monic scaling)."""
    acc = None
    for p in polys:
        if p.is_zero:
            continue
        acc = p if acc is None else gcd_poly(acc, p)
        if acc.is_constant:
            break
    if acc is None:
        return Poly.zero(polys[0].field if polys else QQ, ())
    return acc.monic()


def gcd_poly(f: Poly, g: Poly, var: str | None = None) -> Poly:
    """Gcd, canonical up to the monic graded-lex normalization."""
    if f.is_zero:
        return g.monic()
    if g.is_zero:
        return f.monic()
    if f.is_constant or g.is_constant:
        return Poly.const(f.field, f.field.one, f.vars)
    if var is None:
        var = next(v for v in Poly._merge_vars(f, g) if f.uses(v) or g.uses(v))
    if not (f.uses(var) and g.uses(var)):
        # var-free content comes out of both
        fc = content(f.univariate_coefficients(var)) if f.uses(var) else f
        gc = content(g.univariate_coefficients(var)) if g.uses(var) else g
        return gcd_poly(fc, gc)
    A, B, vars = _univar_lists(f, g, var)
    contA = content(A)
    contB = content(B)
    A = [exact_divide(c, contA) for c in A]
    B = [exact_divide(c, contB) for c in B]
    if len(A) < len(B):
        A, B = B, A
    field = f.field
    one = Poly.const(field, field.one, vars)
    g_, h = one, one
    while True:
        delta = len(A) - len(B)
        R = _prem(A, B, field, vars)
        while R and R[-1].is_zero:
            R.pop()
        if not R:
            break
        if len(R) == 1:
            B = [one]
            break
        divisor = g_ * _poly_pow(h, delta)
        A = B
        B = [exact_divide(c, divisor) for c in R]
        g_ = A[-1]
        if delta == 1:
            h = g_
        elif delta > 1:
            h = exact_divide(_poly_pow(g_, delta), _poly_pow(h, delta - 1))
    # primitive part of B times shared content
    Bcont = content(B)
    prim = [exact_divide(c, Bcont) for c in B]
    result = Poly.zero(field, vars)
    vpow = Poly.variable(field, var, vars)
    for i, c in enumerate(prim):
        result = result + c * _poly_pow(vpow, i)
    return (result * gcd_poly(contA, contB)).monic()


def squarefree_part(f: Poly, var: str) -> Poly:
    """f with repeated var-factors collapsed (monic-normalized quotient)."""
    if f.degree(var) < 1:
        return f.monic()
    g = gcd_poly(f, f.partial(var), var)
    if g.is_constant:
        return f.monic()
    return exact_divide(f.monic(), g.monic()).monic()


# ----------------------------------------------------------------------
# root finding entry points
# ----------------------------------------------------------------------


def rational_roots(f: Poly, var: str | None = None) -> set[Fraction]:
    """Complete set of roots in Q of a nonzero univariate polynomial."""
    if f.is_zero:
        raise PolyError("root finding on the zero polynomial")
    var = var or next((v for v in f.vars if f.uses(v)), f.vars[0] if f.vars else "x")
    coeffs = f.to_dense(var)
    if f.field is QS3:
        rational = []
        for c in coeffs:
            if c.im != 0:
                raise PolyError("coefficients not rational; use k3_roots")
            rational.append(c.re)
        coeffs = rational
    return _roots.rational_roots_dense([Fraction(c) for c in coeffs])


def k3_roots(f: Poly, var: str | None = None) -> set[K3]:
    """Complete set of roots in Q(sqrt(-3)) of a nonzero univariate polynomial."""
    if f.is_zero:
        raise PolyError("root finding on the zero polynomial")
    var = var or next((v for v in f.vars if f.uses(v)), f.vars[0] if f.vars else "x")
    coeffs = [QS3.coerce(c) for c in f.to_dense(var)]
    if dense.deg(coeffs) <= 6:
        return k3_roots_elimination(coeffs)
    return _roots.k3_roots_dense(coeffs)


def k3_roots_elimination(coeffs: list[K3]) -> set[K3]:
    """Roots in Q(sqrt(-3)) by the two-variable elimination route.

    Write the unknown as p + q*sqrt(-3), expand into rational components
    A(p, q) + B(p, q)*sqrt(-3), eliminate q with Res_q(A, B), take rational
    roots in p, then solve gcd(A(p0, .), B(p0, .)) for q.  Every candidate is
    verified exactly.
    """
    coeffs = dense.trim([QS3.coerce(c) for c in coeffs])
    if not coeffs:
        raise PolyError("zero polynomial")
    if dense.deg(coeffs) == 0:
        return set()
    if all(c.re == 0 for c in coeffs):
        # purely imaginary: divide out sqrt(-3) (a unit) to get rational parts
        w_inv = K3(0, Fraction(-1, 3))
        coeffs = [c * w_inv for c in coeffs]
    vars = ("p", "q")
    zero = Poly.zero(QQ, vars)
    p = Poly.variable(QQ, "p", vars)
    q = Poly.variable(QQ, "q", vars)
    A, B = zero, zero
    Rk, Ik = Poly.const(QQ, 1, vars), zero  # (p + q w)^k components
    for c in coeffs:
        A = A + c.re * Rk - 3 * c.im * Ik
        B = B + c.re * Ik + c.im * Rk
        Rk, Ik = Rk * p - 3 * Ik * q, Rk * q + Ik * p
    out: set[K3] = set()
    if A.is_zero or B.is_zero:
        raise PolyError("component vanished identically after normalization")
    R = resultant(A, B, "q")
    if R.is_zero:
        raise PolyError("degenerate elimination (common component)")
    for p0 in rational_roots(R, "p"):
        Ap = A.substitute("p", p0)
        Bp = B.substitute("p", p0)
        if Ap.is_zero and Bp.is_zero:
            continue
        g = Ap if Bp.is_zero else (Bp if Ap.is_zero else gcd_poly(Ap, Bp, "q"))
        if g.is_constant:
            continue
        for q0 in rational_roots(g, "q"):
            cand = K3(p0, q0)
            if not _eval_k3(coeffs, cand):
                out.add(cand)
    return out


def _eval_k3(coeffs: list[K3], z: K3) -> K3:
    acc = K3(0)
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


# ----------------------------------------------------------------------
# text format
# ----------------------------------------------------------------------


def _coef_to_str(field, c) -> str:
    s = field.to_str(c)
    if any(ch in s for ch in "+-") and not (s.startswith("-") and "+" not in s[1:] and "-" not in s[1:]):
        return f"({s})"
    return s


def poly_to_str(f: Poly) -> str:
    """Canonical text: graded-lex descending, explicit ^, * separators."""
    if f.is_zero:
        return "0"
    keys = sorted(f.terms, key=lambda e: (sum(e), e), reverse=True)
    parts = []
    for n, key in enumerate(keys):
        c = f.terms[key]
        mono = "*".join(
            (v if e == 1 else f"{v}^{e}")
            for v, e in zip(f.vars, key) if e
        )
        cs = _coef_to_str(f.field, c)
        if mono:
            body = mono if cs == "1" else (f"-{mono}" if cs == "-1" else f"{cs}*{mono}")
        else:
            body = cs
        if n == 0:
            parts.append(body)
        elif body.startswith("-"):
            parts.append(f"- {body[1:]}")
        else:
            parts.append(f"+ {body}")
    return " ".join(parts)


_TOKEN = _re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[()+\-*^]))"
)


def poly_from_str(field, text: str, vars: tuple[str, ...]) -> Poly:
    """Parse the canonical text format (plus harmless variations)."""
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise PolyError(f"cannot tokenize {text[pos:]!r}")
            break
        pos = m.end()
        if m.group("num"):
            tokens.append(("num", Fraction(m.group("num"))))
        elif m.group("name"):
            tokens.append(("name", m.group("name")))
        else:
            tokens.append(("op", m.group("op")))
    parser = _PolyParser(field, vars, tokens)
    result = parser.parse_sum()
    if parser.i != len(tokens):
        raise PolyError(f"trailing tokens in {text!r}")
    return result


class _PolyParser:
    def __init__(self, field, vars, tokens):
        self.field = field
        self.vars = tuple(vars)
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def parse_sum(self) -> Poly:
        acc = self.parse_term(initial=True)
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.i += 1
                t = self.parse_term()
                acc = acc + t if val == "+" else acc - t
            else:
                return acc

    def parse_term(self, initial=False) -> Poly:
        sign = 1
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.i += 1
                if val == "-":
                    sign = -sign
            else:
                break
        acc = self.parse_power()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.i += 1
                acc = acc * self.parse_power()
            elif kind in ("num", "name") or (kind == "op" and val == "("):
                acc = acc * self.parse_power()
            else:
                break
        return acc if sign > 0 else -acc

    def parse_power(self) -> Poly:
        base = self.parse_atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.i += 1
            kind, val = self.peek()
            if kind != "num" or val.denominator != 1:
                raise PolyError("exponent must be an integer")
            self.i += 1
            return base ** int(val)
        return base

    def parse_atom(self) -> Poly:
        kind, val = self.peek()
        if kind == "num":
            self.i += 1
            return Poly.const(self.field, val, self.vars)
        if kind == "name":
            self.i += 1
            if val == "w" and self.field is QS3 and "w" not in self.vars:
                return Poly.const(self.field, K3(0, 1), self.vars)
            if val not in self.vars:
                raise PolyError(f"unknown variable {val!r}")
            return Poly.variable(self.field, val, self.vars)
        if kind == "op" and val == "(":
            self.i += 1
            inner = self.parse_sum()
            kind, val = self.peek()
            if kind != "op" or val != ")":
                raise PolyError("unbalanced parentheses")
            self.i += 1
            return inner
        raise PolyError(f"unexpected token {val!r}")
