"""Integer helpers: primality, modular square roots, bounded factorization.

The factorization entry point backs the divisor-enumeration fast path of the
rational root finder.  It is deliberately bounded: beyond the configured
effort it raises FactorizationTooHard so callers can report "undecided"
instead of silently missing candidates.
"""

from __future__ import annotations

import math
import os
import random


class FactorizationTooHard(Exception):
    """An integer cofactor resisted factoring within the effort bound."""


DEFAULT_FACTOR_BOUND = 10**18


def factor_effort_bound() -> int:
    """Effort bound for factorization; TORSIONLAB_FACTOR_BOUND overrides."""
    raw = os.environ.get("TORSIONLAB_FACTOR_BOUND")
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return DEFAULT_FACTOR_BOUND


_SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin; deterministic for n < 3.3e24 with the fixed base set."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    n += 1 + (n % 2)
    while not is_probable_prime(n):
        n += 2
    return n


def random_prime(bits: int, rng: random.Random) -> int:
    while True:
        n = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
        if is_probable_prime(n):
            return n


def sqrt_mod_prime(a: int, p: int) -> int | None:
    """A square root of a modulo an odd prime p (Tonelli-Shanks), or None."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # write p-1 = q * 2^s with q odd
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        t2, i = t, 0
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def _pollard_brent(n: int, rng: random.Random) -> int:
    """One nontrivial factor of composite odd n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int, effort: int | None = None) -> dict[int, int]:
    """Prime factorization of |n| as {prime: exponent}.

    Trial division up to 10^6, then Pollard-Brent rho on what remains.  Any
    composite cofactor larger than the effort bound that rho does not crack
    quickly raises FactorizationTooHard.
    """
    if effort is None:
        effort = factor_effort_bound()
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    factors: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    d = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    w = 0
    while d * d <= n and d < 10**6:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += wheel[w]
        w = (w + 1) % 8
    if n == 1:
        return factors
    rng = random.Random(0xC0FFEE ^ n)
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_probable_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        if m > effort:
            raise FactorizationTooHard(f"composite cofactor {m} exceeds effort bound")
        g = _pollard_brent(m, rng)
        stack.append(g)
        stack.append(m // g)
    return factors


def divisors(n: int, effort: int | None = None) -> list[int]:
    """All positive divisors of |n| (requires full factorization)."""
    if n == 0:
        raise ValueError("0 has no finite divisor list")
    divs = [1]
    for p, e in factorize(n, effort).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)
