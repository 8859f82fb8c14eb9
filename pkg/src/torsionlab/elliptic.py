"""Short-Weierstrass curves over any field of the tower, plus torsion tools.

The group law, point orders and division polynomials work over Q,
Q(sqrt(-3)) and rational-function fields alike.  `torsion_subgroup` is the
brute-force oracle used to cross-check every classification: division
polynomial roots, y-lifting by exact square roots, closure under the group
law, invariant-factor decomposition.  `halving_candidates` and
`trisection_candidates` implement the tangent-line procedures for solving
2Q = P and 3Q = P over the base field.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import dense
from .dense import padd, pmod, pmul, psub, ptrim
from .fields import QQ, QS3, K3
from .intutil import FactorizationTooHard
from .poly import Poly, discriminant, exact_divide, gcd_poly, k3_roots, rational_roots, resultant
from .roots import k3_roots_dense, rational_roots_dense


class EllipticError(Exception):
    pass


class SingularCurve(EllipticError):
    pass


class NotOnCurve(EllipticError):
    pass


class TorsionUndecided(EllipticError):
    """Root finding gave up (propagated FactorizationTooHard)."""


class WeierstrassCurve:
    """y^2 = x^3 + a x + b over a field; rejects singular equations."""

    __slots__ = ("field", "a", "b", "_cache")

    def __init__(self, field, a, b):
        a = field.coerce(a)
        b = field.coerce(b)
        disc = -16 * (4 * a * a * a + 27 * b * b)
        if not disc:
            raise SingularCurve(f"discriminant vanishes for a={a}, b={b}")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, *_):
        raise AttributeError("curves are immutable")

    @property
    def disc(self):
        a, b = self.a, self.b
        return -16 * (4 * a * a * a + 27 * b * b)

    def j_invariant(self):
        a = self.a
        num = -1728 * (4 * a) ** 3
        return num / self.disc

    def rhs(self, x):
        x = self.field.coerce(x)
        return x * x * x + self.a * x + self.b

    def contains(self, x, y) -> bool:
        x, y = self.field.coerce(x), self.field.coerce(y)
        return y * y == self.rhs(x)

    def infinity(self) -> ECPoint:
        return ECPoint(self, None, None)

    def point(self, x, y) -> ECPoint:
        x, y = self.field.coerce(x), self.field.coerce(y)
        if not self.contains(x, y):
            raise NotOnCurve(f"({x}, {y}) not on y^2 = x^3 + {self.a} x + {self.b}")
        return ECPoint(self, x, y)

    def __eq__(self, other):
        return (isinstance(other, WeierstrassCurve)
                and other.field == self.field
                and other.a == self.a and other.b == self.b)

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return f"WeierstrassCurve(a={self.a}, b={self.b})"


class ECPoint:
    """Affine point or the point at infinity O = (0:1:0)."""

    __slots__ = ("curve", "x", "y")

    def __init__(self, curve: WeierstrassCurve, x, y):
        object.__setattr__(self, "curve", curve)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    def __setattr__(self, *_):
        raise AttributeError("points are immutable")

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __neg__(self):
        if self.is_infinity:
            return self
        return ECPoint(self.curve, self.x, -self.y)

    def __add__(self, other: ECPoint):
        if not isinstance(other, ECPoint):
            return NotImplemented
        if self.curve != other.curve:
            raise EllipticError("points on different curves")
        if self.is_infinity:
            return other
        if other.is_infinity:
            return self
        x1, y1, x2, y2 = self.x, self.y, other.x, other.y
        if x1 == x2:
            if y1 == -y2:
                return self.curve.infinity()
            m = (3 * x1 * x1 + self.curve.a) / (2 * y1)
        else:
            m = (y2 - y1) / (x2 - x1)
        x3 = m * m - x1 - x2
        y3 = m * (x1 - x3) - y1
        return ECPoint(self.curve, x3, y3)

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        return scalar_mul(self.curve, n, self)

    def __eq__(self, other):
        if not isinstance(other, ECPoint):
            return NotImplemented
        if self.is_infinity or other.is_infinity:
            return self.is_infinity and other.is_infinity
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        if self.is_infinity:
            return hash("O")
        return hash((self.x, self.y))

    def __repr__(self):
        if self.is_infinity:
            return "O"
        return f"({self.x}, {self.y})"


def add(E: WeierstrassCurve, P: ECPoint, Q: ECPoint) -> ECPoint:
    return P + Q


def neg(E: WeierstrassCurve, P: ECPoint) -> ECPoint:
    return -P


def scalar_mul(E: WeierstrassCurve, n: int, P: ECPoint) -> ECPoint:
    if n < 0:
        return scalar_mul(E, -n, -P)
    result = E.infinity()
    base = P
    while n:
        if n & 1:
            result = result + base
        base = base + base
        n >>= 1
    return result


ORDER_INFINITE = None


def order(E: WeierstrassCurve, P: ECPoint, bound: int = 12):
    """Smallest n <= bound with nP = O, else ORDER_INFINITE (None).

    The default bound 12 is a valid torsion verdict over Q and Q(sqrt(-3))
    for every case arising here; it is a parameter so the oracle can be
    stress-tested.
    """
    acc = E.infinity()
    for n in range(1, bound + 1):
        acc = acc + P
        if acc.is_infinity:
            return n
    return ORDER_INFINITE


# ----------------------------------------------------------------------
# division polynomials
# ----------------------------------------------------------------------


def _divpoly_pairs(ops, n_max: int):
    """psi_n as (coeff list, y-parity) pairs under y^2 -> h, for n <= n_max.

    ops supplies add/sub/mul/scale/half and the cubic h as a dense list.
    """
    h = ops.h
    A, B = ops.A, ops.B
    one = ops.one

    def mulp(p1, p2):
        poly = ops.mul(p1[0], p2[0])
        parity = p1[1] + p2[1]
        if parity >= 2:
            poly = ops.mul(poly, h)
            parity -= 2
        return (poly, parity)

    psi = {0: ([], 0), 1: ([one], 0)}
    psi[2] = ([ops.scale([one], 2)[0]] if False else ops.scale([one], 2), 1)
    # psi3 = 3x^4 + 6A x^2 + 12B x - A^2
    psi[3] = (ptrimlike(ops, [ops.neg_sq_A(), ops.smul(B, 12), ops.smul(A, 6), ops.zero(), ops.int3()]), 0)
    # psi4 = 4y (x^6 + 5A x^4 + 20B x^3 - 5A^2 x^2 - 4AB x - 8B^2 - A^3)
    inner = [
        ops.c(-8 * 1, B, B, extra=ops.cube_neg(A)),
        ops.prod2(-4, A, B),
        ops.prod2(-5, A, A),
        ops.smul(B, 20),
        ops.smul(A, 5),
        ops.zero(),
        one,
    ]
    psi[4] = (ops.scale(inner, 4), 1)
    for n in range(5, n_max + 1):
        if n % 2 == 1:
            m = (n - 1) // 2
            t1 = mulp(psi_pair(psi, m + 2), pow3(mulp, psi_pair(psi, m)))
            t2 = mulp(psi_pair(psi, m - 1), pow3(mulp, psi_pair(psi, m + 1)))
            assert t1[1] == t2[1]
            psi[n] = (ops.sub(t1[0], t2[0]), t1[1])
        else:
            m = n // 2
            t1 = mulp(psi_pair(psi, m + 2), pow2(mulp, psi_pair(psi, m - 1)))
            t2 = mulp(psi_pair(psi, m - 2), pow2(mulp, psi_pair(psi, m + 1)))
            assert t1[1] == t2[1]
            bracket = (ops.sub(t1[0], t2[0]), t1[1])
            prod = mulp(psi_pair(psi, m), bracket)
            # divide by 2y
            poly, parity = prod
            if parity == 1:
                psi[n] = (ops.half(poly), 0)
            else:
                q = ops.exact_div(poly, h)
                psi[n] = (ops.half(q), 1)
    return psi


def psi_pair(psi, k):
    return psi[k]


def pow2(mulp, p):
    return mulp(p, p)


def pow3(mulp, p):
    return mulp(mulp(p, p), p)


def ptrimlike(ops, lst):
    return ops.trim(lst)


class _FieldOps:
    """Dense-list arithmetic over the curve's field for the psi recurrence."""

    def __init__(self, field, a, b):
        self.field = field
        self.A, self.B = a, b
        self.one = field.one
        self.h = [b, a, field.zero, field.one]

    def add(self, p, q):
        return dense.add(p, q)

    def sub(self, p, q):
        return dense.sub(p, q)

    def mul(self, p, q):
        return dense.mul(p, q)

    def scale(self, p, k: int):
        c = self.field.coerce(k)
        return [x * c for x in p]

    def smul(self, elem, k: int):
        return elem * self.field.coerce(k)

    def zero(self):
        return self.field.zero

    def int3(self):
        return self.field.coerce(3)

    def neg_sq_A(self):
        return -(self.A * self.A)

    def cube_neg(self, A):
        return -(A * A * A)

    def c(self, k, u, v, extra):
        return self.field.coerce(k) * u * v + extra

    def prod2(self, k, u, v):
        return self.field.coerce(k) * u * v

    def half(self, p):
        inv2 = self.field.one / self.field.coerce(2)
        return [x * inv2 for x in p]

    def exact_div(self, p, q):
        quo, rem = dense.divmod_field(p, q)
        assert not rem, "psi recurrence division not exact"
        return quo

    def trim(self, p):
        return dense.trim(p)


class _ModOps:
    """Same recurrence mod a prime (int coefficient lists)."""

    def __init__(self, p: int, A: int, B: int):
        self.p = p
        self.A, self.B = A % p, B % p
        self.one = 1
        self.h = ptrim([B % p, A % p, 0, 1])

    def add(self, a, b):
        return padd(a, b, self.p)

    def sub(self, a, b):
        return psub(a, b, self.p)

    def mul(self, a, b):
        return pmul(a, b, self.p)

    def scale(self, a, k: int):
        return ptrim([x * k % self.p for x in a])

    def smul(self, elem, k: int):
        return elem * k % self.p

    def zero(self):
        return 0

    def int3(self):
        return 3

    def neg_sq_A(self):
        return -self.A * self.A % self.p

    def cube_neg(self, A):
        return -A * A * A % self.p

    def c(self, k, u, v, extra):
        return (k * u * v + extra) % self.p

    def prod2(self, k, u, v):
        return k * u * v % self.p

    def half(self, a):
        inv2 = pow(2, self.p - 2, self.p)
        return ptrim([x * inv2 % self.p for x in a])

    def exact_div(self, a, b):
        quo, rem = dense.pdivmod(a, b, self.p)
        assert not rem
        return quo

    def trim(self, a):
        return ptrim([x % self.p for x in a])


def division_poly(E: WeierstrassCurve, n: int) -> Poly:
    """The x-polynomial whose roots are x-coordinates of points of order
    dividing n (2-torsion handled by x^3 + a x + b)."""
    if not 2 <= n <= 12:
        raise EllipticError("division_poly supports 2 <= n <= 12")
    cache = E._cache.setdefault("divpoly", {})
    if n not in cache:
        pairs = E._cache.get("psi_pairs")
        if pairs is None or max(pairs) < n:
            ops = _FieldOps(E.field, E.a, E.b)
            pairs = _divpoly_pairs(ops, 12)
            E._cache["psi_pairs"] = pairs
        poly, parity = pairs[n]
        if parity == 0:
            coeffs = poly
        else:
            half = [c * (E.field.one / E.field.coerce(2)) for c in poly]
            coeffs = dense.mul([E.b, E.a, E.field.zero, E.field.one], half)
        cache[n] = Poly.from_univariate(E.field, "x", coeffs)
    return cache[n]


# ----------------------------------------------------------------------
# torsion oracle
# ----------------------------------------------------------------------


class TorsionGroup:
    """Invariant factors d1 | d2 with generator points of those orders."""

    def __init__(self, invariants: tuple[int, ...], generators: list[ECPoint], points: set[ECPoint]):
        self.invariants = tuple(invariants)
        self.generators = list(generators)
        self.points = points

    @property
    def group_order(self) -> int:
        n = 1
        for d in self.invariants:
            n *= d
        return n

    def structure(self) -> str:
        return "+".join(f"Z/{d}" for d in sorted(self.invariants, reverse=True))

    def __eq__(self, other):
        if isinstance(other, TorsionGroup):
            return self.invariants == other.invariants
        return NotImplemented

    def __repr__(self):
        return f"TorsionGroup({self.structure()})"


def _integral_model(E: WeierstrassCurve):
    """Smallest k with k^4 a and k^6 b integral (keeps oracle heights down)."""
    if E.field is QQ:
        dens = [(E.a.denominator, 4), (E.b.denominator, 6)]
    elif E.field is QS3:
        dens = [(E.a.re.denominator, 4), (E.a.im.denominator, 4),
                (E.b.re.denominator, 6), (E.b.im.denominator, 6)]
    else:
        raise EllipticError("torsion oracle needs K = Q or Q(sqrt(-3))")
    from .intutil import FactorizationTooHard, factorize

    try:
        need: dict[int, int] = {}
        for den, w in dens:
            for pr, e in factorize(den).items():
                need[pr] = max(need.get(pr, 0), -(-e // w))
        k = 1
        for pr, e in need.items():
            k *= pr**e
        return Fraction(k)
    except FactorizationTooHard:
        l = 1
        for den, _ in dens:
            l = _lcm(l, den)
        return Fraction(l)


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def _prime_power_orders(bound: int) -> list[int]:
    out = []
    for n in range(2, bound + 1):
        m, p = n, min(f for f in (2, 3, 5, 7, 11) if n % f == 0)
        while m % p == 0:
            m //= p
        if m == 1:
            out.append(n)
    return out


def _smallest_prime_factor(n: int) -> int:
    for p in (2, 3, 5, 7, 11):
        if n % p == 0:
            return p
    return n


def _exact_psi_pairs(E: WeierstrassCurve, n_max: int = 12):
    pairs = E._cache.get("psi_pairs")
    if pairs is None or max(pairs) < n_max:
        pairs = _divpoly_pairs(_FieldOps(E.field, E.a, E.b), n_max)
        E._cache["psi_pairs"] = pairs
    return pairs


def _new_order_dense(E: WeierstrassCurve, n: int) -> list:
    """x-polynomial whose roots are x-coordinates of points of EXACT order n
    (n a prime power): the quotient psi-part(n) / psi-part(n/p)."""
    if n == 2:
        return [E.b, E.a, E.field.zero, E.field.one]
    pairs = _exact_psi_pairs(E, n)
    pn = pairs[n][0]
    p = _smallest_prime_factor(n)
    if n // p <= 2:
        base = pairs[n // p][0] if n // p == 2 else None
        if base is None:
            return pn
    else:
        base = pairs[n // p][0]
    quo, rem = dense.divmod_field(pn, base)
    assert not rem, "exact-order division polynomial quotient not exact"
    return quo


_SMALL_PRIME_SEED = 0x7A57E
_small_prime_pool: list[int] = []


def _small_prime_stream():
    from .intutil import is_probable_prime

    i = 0
    cand = (1 << 24) + 7 + _SMALL_PRIME_SEED % 1000 * 2
    while True:
        while len(_small_prime_pool) <= i:
            cand += 2
            if is_probable_prime(cand):
                _small_prime_pool.append(cand)
        yield _small_prime_pool[i]
        i += 1


def _orders_with_possible_roots(E_int: WeierstrassCurve, bound: int) -> set[int] | None:
    """Mod-p certificate pass: which prime-power orders can have K-rational
    x-coordinates.

    A rational (or Q(sqrt(-3))-rational) x of exact order n reduces to a root
    of the mod-p exact-order polynomial whenever p is odd, p > bound and (for
    the quadratic field) p = 1 mod 3: the leading coefficients involved all
    divide orders <= bound.  An empty mod-p root set therefore certifies
    emptiness.  Returns None when no usable prime was found.
    """
    orders = _prime_power_orders(bound)
    tries = 0
    for p in _small_prime_stream():
        tries += 1
        if tries > 12:
            return None
        if E_int.field is QQ:
            A, B = int(E_int.a), int(E_int.b)
        else:
            if p % 3 != 1:
                continue
            from .intutil import sqrt_mod_prime

            r = sqrt_mod_prime(p - 3, p)
            a, b = E_int.a, E_int.b
            A = int(a.re + a.im * r) % p
            B = int(b.re + b.im * r) % p
        ops = _ModOps(p, A, B)
        if not ops.h or dense.deg(ops.h) != 3:
            continue
        pairs = _divpoly_pairs(ops, max(orders))
        good = True
        result: set[int] = set()
        for n in orders:
            expected = (n * n - 1) // 2 if n % 2 else (n * n - 4) // 2
            pn = pairs[n][0]
            if dense.deg(pn) != expected:
                good = False
                break
            if n == 2:
                g = ops.h
            else:
                q = _smallest_prime_factor(n)
                if n // q <= 2:
                    base = pairs[2][0] if n // q == 2 else [1]
                else:
                    base = pairs[n // q][0]
                g, rem = dense.pdivmod(pn, base, p) if dense.deg(base) >= 0 else (pn, [])
                if rem:
                    good = False
                    break
            if dense.proots(g, p):
                result.add(n)
        if good:
            return result
    return None


def _field_roots(E: WeierstrassCurve, f: Poly):
    try:
        if E.field is QQ:
            return rational_roots(f)
        return k3_roots(f)
    except FactorizationTooHard as exc:
        raise TorsionUndecided(str(exc)) from exc


def torsion_subgroup(E: WeierstrassCurve, bound: int = 12) -> TorsionGroup:
    """Brute-force torsion oracle over Q or Q(sqrt(-3)).

    Finds K-rational roots of the exact-order division polynomials at every
    prime power n <= bound (a cheap one-prime modular certificate skips the
    provably empty ones), lifts y by an exact square root, then closes the
    collected points under the group law and decomposes into invariant
    factors.  Composite orders are regenerated by the closure, so the group
    returned is the full torsion subgroup of exponent <= bound.
    """
    if E.field not in (QQ, QS3):
        raise EllipticError("torsion oracle needs K = Q or Q(sqrt(-3))")
    k = _integral_model(E)
    E_int = WeierstrassCurve(E.field, E.a * k**4, E.b * k**6) if k != 1 else E
    pts: set[ECPoint] = set()
    candidates = _orders_with_possible_roots(E_int, bound)
    orders_to_try = _prime_power_orders(bound) if candidates is None else sorted(candidates)
    for n in orders_to_try:
        g = Poly.from_univariate(E.field, "x", _new_order_dense(E_int, n))
        if g.is_constant:
            continue
        for x0 in _field_roots(E_int, g):
            y2 = E_int.rhs(x0)
            y0 = E.field.sqrt(y2)
            if y0 is None:
                continue
            pts.add(E_int.point(x0, y0))
            pts.add(E_int.point(x0, -y0))
    pts.add(E_int.infinity())
    pts = _close_under_addition(pts)
    if k != 1:
        inv2, inv3 = 1 / k**2, 1 / k**3
        mapped = set()
        for P in pts:
            mapped.add(E.infinity() if P.is_infinity else E.point(P.x * inv2, P.y * inv3))
        pts = mapped
    return _group_structure(E, pts, bound)


def _close_under_addition(pts: set[ECPoint]) -> set[ECPoint]:
    pts = set(pts)
    frontier = list(pts)
    while frontier:
        new = []
        for P in frontier:
            for Q in list(pts):
                R = P + Q
                if R not in pts:
                    pts.add(R)
                    new.append(R)
        frontier = new
        if len(pts) > 144:
            raise EllipticError("torsion closure exceeded sanity bound")
    return pts


def _group_structure(E: WeierstrassCurve, pts: set[ECPoint], bound: int) -> TorsionGroup:
    orders = {P: order(E, P, bound=len(pts) + 1) for P in pts}
    assert all(o is not None for o in orders.values())
    total = len(pts)
    max_order = max(orders.values())
    gen1 = next(P for P, o in orders.items() if o == max_order)
    gen1 = _canonical_choice([P for P, o in orders.items() if o == max_order])
    if max_order == total:
        return TorsionGroup((max_order,), [gen1], pts)
    d1 = total // max_order
    cyclic1 = {scalar_mul(E, i, gen1) for i in range(max_order)}
    candidates = []
    for Q, o in orders.items():
        if o != d1 or Q in cyclic1:
            continue
        sub_q = {scalar_mul(E, i, Q) for i in range(o)}
        if sub_q & cyclic1 == {E.infinity()}:
            candidates.append(Q)
    if not candidates:
        raise EllipticError("could not split torsion into invariant factors")
    gen2 = _canonical_choice(candidates)
    return TorsionGroup((d1, max_order), [gen2, gen1], pts)


def _sort_key(value):
    if isinstance(value, Fraction):
        return (value.denominator, value)
    if isinstance(value, K3):
        return (value.re.denominator + value.im.denominator, value.re, value.im)
    return (0, 0)


def _canonical_choice(points: list[ECPoint]) -> ECPoint:
    def key(P):
        if P.is_infinity:
            return (0, 0, 0)
        kx, ky = _sort_key(P.x), _sort_key(P.y)
        return (1,) + tuple(str(k) for k in (kx, ky))

    return sorted(points, key=key)[0]


# ----------------------------------------------------------------------
# Prop 2Q / Prop 3Q machinery
# ----------------------------------------------------------------------


def _line_setup(E: WeierstrassCurve, P: ECPoint, vars: tuple[str, ...]):
    """q(x; m) for the pencil of lines y = m(x - alpha) - beta through -P."""
    field = E.field
    alpha, beta = P.x, P.y
    x = Poly.variable(field, "x", vars)
    m = Poly.variable(field, "m", vars)
    ell = m * (x - Poly.const(field, alpha, vars)) - Poly.const(field, beta, vars)
    h = x**3 + Poly.const(field, E.a, vars) * x + Poly.const(field, E.b, vars)
    q = exact_divide(h - ell * ell, x - Poly.const(field, alpha, vars))
    return q, ell, h


def halving_q(E: WeierstrassCurve, P: ECPoint) -> Poly:
    q, _, _ = _line_setup(E, P, ("x", "m"))
    return q


def canonical_flex_slope(E: WeierstrassCurve, P: ECPoint):
    """Slope of the tangent at -P; the excluded root when P is a flex."""
    hprime = 3 * P.x * P.x + E.a
    return -hprime / (2 * P.y)


def halving_candidates(E: WeierstrassCurve, P: ECPoint) -> set[ECPoint]:
    """All K-points Q with 2Q = P found via the tangent-through--P pencil.

    The discriminant of q(x; m) vanishes exactly when the line with slope m
    through -P is tangent; the contact point then halves P.  When P has
    order 3 the canonical slope (tangent at -P itself) is excluded, matching
    the order-doubling statement.
    """
    if P.is_infinity:
        raise EllipticError("halving_candidates needs an affine P")
    q, _, _ = _line_setup(E, P, ("x", "m"))
    disc_m = discriminant(q, "x")
    slopes = _field_roots(E, _as_univar_poly(disc_m, "m"))
    is_flex = scalar_mul(E, 3, P).is_infinity
    excluded = canonical_flex_slope(E, P) if is_flex else None
    out: set[ECPoint] = set()
    for m0 in slopes:
        if excluded is not None and E.field.coerce(m0) == excluded:
            continue
        q0 = q.substitute("m", m0)
        c1 = q0.coefficient("x", 1).constant_value()
        x1 = -c1 / E.field.coerce(2)
        y1 = E.field.coerce(m0) * (x1 - P.x) - P.y
        if not E.contains(x1, y1):
            continue
        Q = E.point(x1, y1)
        if scalar_mul(E, 2, Q) == P:
            out.add(Q)
    return out


def _as_univar_poly(p: Poly, var: str) -> Poly:
    return Poly.from_univariate(p.field, var, p.to_dense(var))


def trisection_data(E: WeierstrassCurve, P: ECPoint):
    """The (q, disc_x q, R1, R2) tower for the 3Q = P condition.

    R(X) eliminates y between the curve and the tangent line at the running
    point (x, m(x - alpha) - beta); substituting X -> sum-of-roots - x gives
    R1, and R2(m) = Res_x(q, R1) is the existence condition on slopes.
    """
    vars = ("x", "m", "X")
    field = E.field
    q, ell, h = _line_setup(E, P, vars)
    x = Poly.variable(field, "x", vars)
    X = Poly.variable(field, "X", vars)
    hprime = 3 * x * x + Poly.const(field, E.a, vars)
    c = -2 * ell
    d = hprime * (X - x) + 2 * ell * ell
    hX = X**3 + Poly.const(field, E.a, vars) * X + Poly.const(field, E.b, vars)
    R = c * c * hX - d * d
    sigma = -q.coefficient("x", 1)  # q is monic in x
    R1 = R.substitute("X", sigma - x)
    R2 = resultant(q, R1, "x")
    disc_m = discriminant(q, "x")
    return q, disc_m, R1, R2


def trisection_candidates(E: WeierstrassCurve, P: ECPoint) -> set[ECPoint]:
    """All K-points Q with 3Q = P: slopes solve R2(m) = 0, disc_x q(m) != 0;
    x(Q) is a common root of q and R1."""
    if P.is_infinity:
        raise EllipticError("trisection_candidates needs an affine P")
    q, disc_m, R1, R2 = trisection_data(E, P)
    if R2.is_zero:
        raise EllipticError("degenerate trisection resultant")
    slopes = _field_roots(E, _as_univar_poly(R2, "m"))
    out: set[ECPoint] = set()
    for m0 in slopes:
        if not disc_m.evaluate({"m": m0}, E.field):
            continue
        q0 = _as_univar_poly(q.substitute("m", m0), "x")
        R10 = _as_univar_poly(R1.substitute("m", m0), "x")
        if R10.is_zero:
            continue
        g = gcd_poly(q0, R10, "x")
        if g.is_constant:
            continue
        for x1 in _field_roots(E, g):
            y1 = E.field.coerce(m0) * (E.field.coerce(x1) - P.x) - P.y
            if not E.contains(x1, y1):
                continue
            Q = E.point(x1, y1)
            if scalar_mul(E, 3, Q) == P:
                out.add(Q)
    return out
