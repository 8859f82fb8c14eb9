"""Dense univariate polynomial kernels.

Polynomials are coefficient lists, constant term first, no trailing zeros
(empty list = 0).  Three layers share this representation:

* generic routines over any exact field whose elements support + - * / and
  truth testing (Fraction, K3, rational functions);
* mod-p routines on plain ints (the root-finding hot loop);
* Z[x] routines: content, modular gcd, squarefree part, factor bounds and
  Hensel lifting used by the rational root finder.
"""

from __future__ import annotations

import math
import random

from .intutil import is_probable_prime

# ----------------------------------------------------------------------
# generic field coefficients
# ----------------------------------------------------------------------


def trim(c: list) -> list:
    while c and not c[-1]:
        c.pop()
    return c


def deg(c: list) -> int:
    return len(c) - 1


def add(a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] = out[i] + x
    return trim(out)


def neg(a: list) -> list:
    return [-x for x in a]


def sub(a: list, b: list) -> list:
    return add(a, neg(b))


def mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [None] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            t = x * y
            out[i + j] = t if out[i + j] is None else out[i + j] + t
    zero = a[0] - a[0]
    return trim([zero if v is None else v for v in out])


def scale(a: list, s) -> list:
    return trim([x * s for x in a])


def divmod_field(a: list, b: list) -> tuple[list, list]:
    """Quotient and remainder with exact field division by lc(b)."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q: list = []
    db, lb = deg(b), b[-1]
    while deg(a) >= db:
        coef = a[-1] / lb
        k = deg(a) - db
        q.append((k, coef))
        for i, x in enumerate(b):
            a[i + k] = a[i + k] - coef * x
        a.pop()
        trim(a)
    if not q:
        return [], a
    out = [lb - lb] * (q[0][0] + 1)
    for k, coef in q:
        out[k] = coef
    return trim(out), a


def monic(a: list) -> list:
    if not a:
        return a
    lc = a[-1]
    return [x / lc for x in a]


def gcd_field(a: list, b: list) -> list:
    """Monic gcd over a field (Euclid)."""
    a, b = list(a), list(b)
    while b:
        a, b = b, divmod_field(a, b)[1]
    return monic(a)


def deriv(a: list) -> list:
    return trim([i * a[i] for i in range(1, len(a))])


def eval_at(a: list, x, zero):
    acc = zero
    for c in reversed(a):
        acc = acc * x + c
    return acc


def from_roots(roots: list, one) -> list:
    out = [one]
    for r in roots:
        out = mul(out, [-r, one])
    return out


# ----------------------------------------------------------------------
# coefficients mod a prime p (plain ints)
# ----------------------------------------------------------------------


def ptrim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def pmod(c: list[int], p: int) -> list[int]:
    return ptrim([x % p for x in c])


def padd(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] = (out[i] + x) % p
    return ptrim(out)


def psub(a, b, p):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, x in enumerate(b):
        out[i] = (out[i] - x) % p
    return ptrim(out)


def pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
            if i % 16 == 15:
                out = [v % p for v in out]
    return ptrim([v % p for v in out])


def pdivmod(a, b, p):
    if not b:
        raise ZeroDivisionError
    inv = pow(b[-1], p - 2, p)
    a = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and a:
        coef = a[-1] * inv % p
        k = len(a) - len(b)
        q[k] = coef
        for i, x in enumerate(b):
            a[i + k] = (a[i + k] - coef * x) % p
        a.pop()
        ptrim(a)
    return ptrim(q), a


def pgcd(a, b, p):
    a, b = pmod(a, p), pmod(b, p)
    while b:
        a, b = b, pdivmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [x * inv % p for x in a]
    return a


def ppowmod(base, e, modpoly, p):
    """base^e mod (modpoly, p) by square-and-multiply."""
    result = [1]
    base = pdivmod(base, modpoly, p)[1]
    while e:
        if e & 1:
            result = pdivmod(pmul(result, base, p), modpoly, p)[1]
        base = pdivmod(pmul(base, base, p), modpoly, p)[1]
        e >>= 1
    return result


def proots(f: list[int], p: int, rng: random.Random | None = None) -> list[int]:
    """All roots in F_p of f (not identically 0 mod p), via x^p - x splitting."""
    f = pmod(f, p)
    if not f:
        raise ValueError("polynomial vanishes mod p")
    roots: list[int] = []
    if f[0] == 0:
        roots.append(0)
        while f and f[0] == 0:
            f = f[1:]
    if len(f) <= 1:
        return roots
    xp = ppowmod([0, 1], p, f, p)
    g = pgcd(psub(xp, [0, 1], p), f, p)
    if deg(g) <= 0:
        return roots
    rng = rng or random.Random(0x5EED)
    stack = [g]
    while stack:
        h = stack.pop()
        d = deg(h)
        if d == 0:
            continue
        if d == 1:
            roots.append(-h[0] * pow(h[1], p - 2, p) % p)
            continue
        while True:
            a = rng.randrange(p)
            t = ppowmod([a, 1], (p - 1) // 2, h, p)
            t = psub(t, [1], p)
            w = pgcd(t, h, p)
            if 0 < deg(w) < d:
                stack.append(w)
                stack.append(pdivmod(h, w, p)[0])
                break
    return sorted(roots)


# ----------------------------------------------------------------------
# Z[x] machinery for the rational root finder
# ----------------------------------------------------------------------


def int_content(c: list[int]) -> int:
    g = 0
    for x in c:
        g = math.gcd(g, x)
        if g == 1:
            break
    return g


def int_primitive(c: list[int]) -> list[int]:
    g = int_content(c)
    if g <= 1:
        return list(c)
    return [x // g for x in c]


def l2_norm_sq(c: list[int]) -> int:
    return sum(x * x for x in c)


def factor_height_bound(c: list[int], factor_degree: int) -> int:
    """Mignotte: any degree-d factor of c has |coefficients| <= 2^d * ||c||_2."""
    return (1 << factor_degree) * (math.isqrt(l2_norm_sq(c)) + 1)


_PRIME_SEED = random.Random(0xABCD1234)
_PRIME_POOL: list[int] = []


def good_prime_stream(start_index: int = 0):
    """Deterministic stream of ~62-bit primes."""
    i = start_index
    while True:
        while len(_PRIME_POOL) <= i:
            cand = (_PRIME_SEED.getrandbits(62) | (1 << 61)) | 1
            if is_probable_prime(cand):
                _PRIME_POOL.append(cand)
        yield _PRIME_POOL[i]
        i += 1


def int_poly_gcd(f: list[int], g: list[int]) -> list[int]:
    """Primitive gcd in Z[x] by modular images + CRT + division check."""
    f, g = ptrim(list(f)), ptrim(list(g))
    if not f:
        return int_primitive(g)
    if not g:
        return int_primitive(f)
    cf, cg = int_content(f), int_content(g)
    f = [x // cf for x in f]
    g = [x // cg for x in g]
    cont = math.gcd(cf, cg)
    lcg = math.gcd(f[-1], g[-1])
    best: list[int] | None = None
    modulus = 0
    for p in good_prime_stream():
        if f[-1] % p == 0 or g[-1] % p == 0:
            continue
        hp = pgcd(pmod(f, p), pmod(g, p), p)
        if deg(hp) == 0:
            return [cont] if cont else [1]
        hp = [x * (lcg % p) % p for x in hp]
        if best is None or deg(hp) < deg(best):
            best, modulus = hp, p
        elif deg(hp) > deg(best):
            continue
        else:
            inv = pow(modulus, p - 2, p)
            combined = []
            for a, b in zip(best, hp):
                t = (b - a) * inv % p
                combined.append(a + modulus * t)
            modulus *= p
            best = combined
        lifted = [x - modulus if 2 * x > modulus else x for x in best]
        cand = int_primitive(ptrim(list(lifted)))
        if cand and _int_divides(cand, f) and _int_divides(cand, g):
            if cand[-1] < 0:
                cand = [-x for x in cand]
            return [cont * x for x in cand] if cont != 1 else cand
    raise AssertionError("unreachable")


def _int_divides(d: list[int], f: list[int]) -> bool:
    """Does d divide f in Q[x] with integer primitive quotient sense."""
    from fractions import Fraction

    q, r = divmod_field([Fraction(x) for x in f], [Fraction(x) for x in d])
    return not r and all(x.denominator == 1 for x in q)


def int_squarefree_part(f: list[int]) -> list[int]:
    """Primitive squarefree part of f in Z[x] (same root set, each simple)."""
    f = int_primitive(ptrim(list(f)))
    if deg(f) <= 1:
        return f
    g = int_poly_gcd(f, deriv(f))
    if deg(g) == 0:
        return f
    from fractions import Fraction

    q, r = divmod_field([Fraction(x) for x in f], [Fraction(x) for x in g])
    assert not r
    den_lcm = 1
    for x in q:
        den_lcm = den_lcm * x.denominator // math.gcd(den_lcm, x.denominator)
    out = int_primitive([int(x * den_lcm) for x in q])
    if out[-1] < 0:
        out = [-x for x in out]
    return out


def int_eval_mod(f: list[int], x: int, m: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % m
    return acc


def hensel_lift_roots(f: list[int], p: int, roots: list[int], target: int) -> tuple[list[int], int]:
    """Newton-lift simple roots of f from mod p to mod p^(2^k) >= target.

    Requires f'(r) != 0 mod p for each r (f squarefree mod p).
    Returns (lifted roots, modulus).
    """
    df = deriv(f)
    m = p
    rs = list(roots)
    while m < target:
        m2 = m * m
        new = []
        for r in rs:
            fr = int_eval_mod(f, r, m2)
            dr = int_eval_mod(df, r, m2)
            inv = pow(dr, -1, m2)
            new.append((r - fr * inv) % m2)
        rs, m = new, m2
    return rs, m


def rational_reconstruct(a: int, m: int, num_bound: int, den_bound: int):
    """Recover n/d with a*d = n (mod m), |n| <= num_bound, 0 < d <= den_bound."""
    a %= m
    r0, r1 = m, a
    s0, s1 = 0, 1
    while r1 > num_bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0:
        return None
    n, d = (r1, s1) if s1 > 0 else (-r1, -s1)
    if d > den_bound or math.gcd(n, d) != 1:
        return None
    return n, d
