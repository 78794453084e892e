"""Integer arithmetic for desk-scale exhaustive searches.

Everything here works on plain Python ints capped at 64 bits.  Factoring is
trial division by a cached sieve up to 2^21, then deterministic Miller-Rabin
on the cofactor, with Brent's rho to split the rare composite survivor.
"""
from __future__ import annotations

import math
from functools import lru_cache
from typing import NamedTuple, Optional

from .errors import DomainError, PropertyViolation

MAX_INT = 1 << 63
TRIAL_LIMIT = 1 << 21

# witnesses proving primality for every n < 3.3 * 10^24 (covers 64 bits)
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_sieve_limit = 0
_small_primes: list[int] = []


def _extend_sieve(limit: int) -> None:
    global _sieve_limit, _small_primes
    limit = min(max(limit, 1 << 10), TRIAL_LIMIT)
    if limit <= _sieve_limit:
        return
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = b"\x00" * len(flags[i * i :: i])
    _small_primes = [i for i in range(limit + 1) if flags[i]]
    _sieve_limit = limit


def small_primes(limit: int) -> list[int]:
    """All primes <= limit; limit must stay below the 2^21 sieve cap."""
    if limit > TRIAL_LIMIT:
        raise DomainError(f"small_primes: limit above sieve cap 2^21, got {limit}")
    _extend_sieve(limit)
    import bisect

    return _small_primes[: bisect.bisect_right(_small_primes, limit)]


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n below 64 bits."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int) -> int:
    """A nontrivial factor of composite odd n; deterministic parameter sweep."""
    if n % 2 == 0:
        return 2
    for c in range(1, 64):
        y, m, g, r, q = 2, 128, 1, 1, 1
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
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise PropertyViolation(f"rho failed to split {n}")


class Factorization(NamedTuple):
    n: int
    factors: tuple[tuple[int, int], ...]  # (prime, exponent), sorted by prime

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


@lru_cache(maxsize=1 << 16)
def factor(n: int) -> Factorization:
    """Full prime factorization of 2 <= n < 2^63."""
    if not 2 <= n < MAX_INT:
        raise DomainError(f"factor: n must be in [2, 2^63), got {n}")
    m = n
    found: dict[int, int] = {}
    _extend_sieve(min(math.isqrt(m) + 1, TRIAL_LIMIT))
    for p in _small_primes:
        if p * p > m:
            break
        while m % p == 0:
            found[p] = found.get(p, 0) + 1
            m //= p
    stack = [m] if m > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m):
            found[m] = found.get(m, 0) + 1
            continue
        d = _brent_rho(m)
        stack.extend((d, m // d))
    return Factorization(n, tuple(sorted(found.items())))


def prime_support(n: int) -> tuple[int, ...]:
    """Sorted distinct primes dividing n; empty for n = 1."""
    if n < 1:
        raise DomainError(f"prime_support: n must be >= 1, got {n}")
    if n == 1:
        return ()
    return factor(n).primes()


def prime_power(n: int) -> Optional[tuple[int, int]]:
    """(u, alpha) with n = u^alpha and u prime, or None."""
    if n < 2:
        return None
    fz = factor(n)
    if len(fz.factors) != 1:
        return None
    return fz.factors[0]


def zsigmondy(p: int, n: int) -> Optional[int]:
    """Least prime dividing p^n - 1 but no p^k - 1 with 1 <= k < n, if any."""
    if p < 2 or not is_prime(p):
        raise DomainError(f"zsigmondy: p must be prime, got {p}")
    if n < 1:
        raise DomainError(f"zsigmondy: n must be >= 1, got {n}")
    if p**n >= MAX_INT:
        raise DomainError(f"zsigmondy: p^n exceeds 64 bits ({p}^{n})")
    for t in prime_support(p**n - 1):
        if all(pow(p, k, t) != 1 for k in range(1, n)):
            return t
    return None


class CatalanSolution(NamedTuple):
    p: int
    f: int
    r: int
    m: int
    case: str  # "a", "b" or "c"


def _iroot(v: int, m: int) -> int:
    """Floor of the m-th root of v >= 1."""
    if m == 1:
        return v
    r = int(round(v ** (1.0 / m)))
    while r > 1 and r**m > v:
        r -= 1
    while (r + 1) ** m <= v:
        r += 1
    return r


def _classify_catalan(p: int, f: int, r: int, m: int) -> str:
    if (p, f, r, m) == (2, 3, 3, 2):
        return "a"
    if p == 2 and m == 1 and f & (f - 1) == 0 and is_prime(r):
        return "b"  # r = 2^f + 1 is a Fermat prime
    if r == 2 and f == 1 and is_prime(p) and is_prime(m):
        return "c"  # p = 2^m - 1 is a Mersenne prime
    raise PropertyViolation(f"solution {p}^{f}+1={r}^{m} fits no known case")


def catalan_solutions(p_max: int, f_max: int, r_max: int, m_max: int) -> list[CatalanSolution]:
    """All (p, f, r, m) with p, r prime and p^f + 1 = r^m, within the bounds."""
    if min(p_max, f_max, r_max, m_max) < 2:
        raise DomainError("catalan_solutions: all bounds must be >= 2")
    out = []
    for p in small_primes(p_max):
        val = p
        for f in range(1, f_max + 1):
            if f > 1:
                val *= p
            if val + 1 >= MAX_INT:
                break
            target = val + 1
            for m in range(1, m_max + 1):
                r = _iroot(target, m)
                if r < 2 or (m > 1 and r == 1):
                    break
                if r**m == target and r <= r_max and is_prime(r):
                    out.append(CatalanSolution(p, f, r, m, _classify_catalan(p, f, r, m)))
    out.sort(key=lambda s: (s.p, s.f, s.r, s.m))
    return out


class FlankClass(NamedTuple):
    """Classification of 2^f by the prime supports of its two flanks.

    tag "A": f prime, 2^f - 1 prime, 2 or 3 primes divide 2^f + 1.
    tag "B": f = 4 (flanks 3*5 and 17).  tag "C": f = 8 (3*5*17 and 257).
    tag None: no epsilon makes one flank a prime power and the other
    a product of exactly two or three primes.
    """

    f: int
    tag: Optional[str]
    epsilon: Optional[int]
    minus: Factorization  # of 2^f - 1
    plus: Factorization  # of 2^f + 1


def classify_flanks(f: int) -> FlankClass:
    """Decide whether q = 2^f has a flank pattern |pi(q+e)|=1, |pi(q-e)| in {2,3}."""
    if not 2 <= f <= 62:
        raise DomainError(f"classify_flanks: f must be in [2, 62], got {f}")
    q = 1 << f
    fm, fp = factor(q - 1), factor(q + 1)
    for eps, near, far in ((-1, fm, fp), (1, fp, fm)):
        if len(near.factors) == 1 and len(far.factors) in (2, 3):
            if eps == -1:
                if not (is_prime(f) and is_prime(q - 1)):
                    raise PropertyViolation(f"f={f}: minus-flank case with non-Mersenne q-1")
                return FlankClass(f, "A", -1, fm, fp)
            if f == 4:
                return FlankClass(f, "B", 1, fm, fp)
            if f == 8:
                return FlankClass(f, "C", 1, fm, fp)
            raise PropertyViolation(f"f={f}: plus-flank case outside f in {{4, 8}}")
    return FlankClass(f, None, None, fm, fp)


class FlankScanRow(NamedTuple):
    f: int
    holds: bool  # both |pi(2^f - 1)| and |pi(2^f + 1)| equal 2
    pi_minus: int
    pi_plus: int


def scan_two_prime_flanks(f_max: int) -> list[FlankScanRow]:
    """For 2 <= f <= f_max, report whether both flanks of 2^f have exactly
    two prime divisors; checks that every such f is prime or 6 or 9.

    Rows carry both flank sizes so the one-sided reading can be derived
    without being asserted here.
    """
    if not 2 <= f_max <= 62:
        raise DomainError(f"scan_two_prime_flanks: f_max must be in [2, 62], got {f_max}")
    rows = []
    for f in range(2, f_max + 1):
        q = 1 << f
        a = len(prime_support(q - 1))
        b = len(prime_support(q + 1))
        holds = a == 2 and b == 2
        if holds and not (is_prime(f) or f in (6, 9)):
            raise PropertyViolation(f"two-prime flanks at composite f={f} outside {{6, 9}}")
        rows.append(FlankScanRow(f, holds, a, b))
    return rows
