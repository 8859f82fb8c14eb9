"""Complete root finding over Q and Q(sqrt(-3)) for dense polynomials.

Two engines back the public entry points in `poly`:

* a divisor-enumeration path (candidates p/q with p | trailing, q | leading
  coefficient) for small inputs, which needs integer factorization and can
  raise FactorizationTooHard;
* a p-adic path: roots mod a good prime, Newton/Hensel lifting past the
  Mignotte factor bound, rational reconstruction, exact verification.  This
  one is complete at any size that matters here and is the default for large
  inputs.

Roots in Q(sqrt(-3)) are found by pairing the two modular embeddings
sqrt(-3) -> +-r of the norm polynomial f * conj(f).
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from . import dense
from .dense import (
    deg,
    deriv,
    factor_height_bound,
    good_prime_stream,
    hensel_lift_roots,
    int_eval_mod,
    int_primitive,
    int_squarefree_part,
    pgcd,
    pmod,
    proots,
    ptrim,
    rational_reconstruct,
)
from .fields import K3
from .intutil import FactorizationTooHard, divisors, sqrt_mod_prime

_FAST_PATH_DEGREE = 8
_FAST_PATH_HEIGHT = 10**12
_MAX_PRIME_TRIES = 60


def _clear_denominators(f: list[Fraction]) -> list[int]:
    lcm = 1
    for c in f:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    return [int(c * lcm) for c in f]


def _verify_rational_root(f_int: list[int], n: int, d: int) -> bool:
    """Exact check of f(n/d) = 0 via sum f_i n^i d^(deg-i)."""
    m = len(f_int) - 1
    acc = 0
    npow = 1
    dpows = [1] * (m + 1)
    for i in range(m - 1, -1, -1):
        dpows[i] = dpows[i + 1] * d
    for i, c in enumerate(f_int):
        acc += c * npow * dpows[i]
        npow *= n
    return acc == 0


def rational_roots_dense(f: list[Fraction]) -> set[Fraction]:
    """All roots of a nonzero f in Q."""
    f = dense.trim([Fraction(c) for c in f])
    if not f:
        raise ValueError("zero polynomial has every rational as a root")
    roots: set[Fraction] = set()
    fi = int_primitive(_clear_denominators(f))
    while fi and fi[0] == 0:
        roots.add(Fraction(0))
        fi = fi[1:]
    if deg(fi) <= 0:
        return roots
    fsf = int_squarefree_part(fi)
    if deg(fsf) == 1:
        roots.add(Fraction(-fsf[0], fsf[1]))
        return roots
    height = max(abs(c) for c in fsf)
    if deg(fsf) <= _FAST_PATH_DEGREE and height <= _FAST_PATH_HEIGHT:
        try:
            return roots | _roots_by_divisors(fsf)
        except FactorizationTooHard:
            pass
    return roots | _roots_padic(fsf)


def _roots_by_divisors(fsf: list[int]) -> set[Fraction]:
    """Candidate enumeration p | a0, q | lc; every candidate verified."""
    out: set[Fraction] = set()
    for p in divisors(fsf[0]):
        for q in divisors(fsf[-1]):
            if math.gcd(p, q) != 1:
                continue
            for n in (p, -p):
                if _verify_rational_root(fsf, n, q):
                    out.add(Fraction(n, q))
    return out


def _roots_padic(fsf: list[int]) -> set[Fraction]:
    bound = factor_height_bound(fsf, 1)
    target = 2 * bound * bound + 1
    tries = 0
    for p in good_prime_stream():
        tries += 1
        if tries > _MAX_PRIME_TRIES:
            raise FactorizationTooHard("no usable prime for p-adic root finding")
        if fsf[-1] % p == 0:
            continue
        fp = pmod(fsf, p)
        if deg(pgcd(fp, pmod(deriv(fsf), p), p)) > 0:
            continue
        residues = proots(fp, p)
        if not residues:
            return set()
        lifted, modulus = hensel_lift_roots(fsf, p, residues, target)
        out: set[Fraction] = set()
        for r in lifted:
            rec = rational_reconstruct(r, modulus, bound, bound)
            if rec and _verify_rational_root(fsf, rec[0], rec[1]):
                out.add(Fraction(rec[0], rec[1]))
        return out
    raise AssertionError("unreachable")


# ----------------------------------------------------------------------
# roots in Q(sqrt(-3))
# ----------------------------------------------------------------------


def _k3_eval(f: list[K3], z: K3) -> K3:
    acc = K3(0)
    for c in reversed(f):
        acc = acc * z + c
    return acc


def k3_roots_dense(f: list[K3]) -> set[K3]:
    """All roots of a nonzero f in Q(sqrt(-3)) (embedding-pairing engine)."""
    f = dense.trim([c if isinstance(c, K3) else K3(c) for c in f])
    if not f:
        raise ValueError("zero polynomial")
    if deg(f) == 0:
        return set()
    if deg(f) == 1:
        return {-f[0] / f[1]}
    fbar = [c.conjugate() for c in f]
    norm_poly = dense.mul(f, fbar)
    assert all(c.im == 0 for c in norm_poly)
    nq = [c.re for c in norm_poly]
    roots: set[K3] = set()
    # rational roots of f are rational roots of the norm polynomial
    for x in rational_roots_dense(nq):
        if not _k3_eval(f, K3(x)):
            roots.add(K3(x))
    nint = int_primitive(_clear_denominators(nq))
    while nint and nint[0] == 0:
        nint = nint[1:]
    if deg(nint) <= 1:
        return roots
    nsf = int_squarefree_part(nint)
    if deg(nsf) == 1:
        return roots
    b2 = factor_height_bound(nsf, 2)
    target = 32 * b2 * b2 + 1
    tries = 0
    for p in good_prime_stream():
        tries += 1
        if tries > _MAX_PRIME_TRIES:
            raise FactorizationTooHard("no usable prime for Q(sqrt(-3)) roots")
        if p % 3 != 1 or nsf[-1] % p == 0:
            continue
        fp = pmod(nsf, p)
        if deg(pgcd(fp, pmod(deriv(nsf), p), p)) > 0:
            continue
        residues = proots(fp, p)
        if len(residues) < 2:
            return roots
        r = sqrt_mod_prime(p - 3, p)
        assert r is not None
        lifted, modulus = hensel_lift_roots(nsf, p, residues, target)
        # lift sqrt(-3) alongside, by Newton on x^2 + 3
        m = p
        while m < target:
            m2 = m * m
            r = (r - (r * r + 3) * pow(2 * r, -1, m2)) % m2
            m = m2
        inv2 = pow(2, -1, modulus)
        inv2r = pow(2 * r, -1, modulus)
        seen: set[tuple[int, int]] = set()
        for r1, r2 in itertools.permutations(lifted, 2):
            u_mod = (r1 + r2) * inv2 % modulus
            v_mod = (r1 - r2) * inv2r % modulus
            if (u_mod, v_mod) in seen:
                continue
            seen.add((u_mod, v_mod))
            ru = rational_reconstruct(u_mod, modulus, b2, 2 * b2)
            if ru is None:
                continue
            rv = rational_reconstruct(v_mod, modulus, 3 * b2, 4 * b2)
            if rv is None or rv[0] == 0:
                continue
            z = K3(Fraction(*ru), Fraction(*rv))
            if not _k3_eval(f, z):
                roots.add(z)
        return roots
    raise AssertionError("unreachable")
