"""Modular arithmetic, factorization and primitive-root machinery for prime moduli."""

from __future__ import annotations

import math
from functools import lru_cache

from .errors import CapabilityError

# Discrete-log (index) tables are built by enumerating powers of the least
# primitive root, so character work is capped to moduli where an O(p) table
# is reasonable.
INDEX_TABLE_CAP = 100_000

# Trial division handles factors up to this bound; anything larger goes to
# the deterministic Brent/rho fallback.
TRIAL_DIVISION_BOUND = 1_000_000

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def sieve_primes(limit: int) -> list[int]:
    """All primes <= limit, ascending, by a byte sieve of Eratosthenes."""
    if limit < 2:
        raise ValueError(f"prime sieve needs limit >= 2, got {limit}")
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = b"\x00" * len(flags[i * i :: i])
    return [i for i, f in enumerate(flags) if f]


def is_prime(n: int) -> bool:
    """Miller-Rabin with fixed witnesses, deterministic below 3.3e24."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int) -> int:
    """One nontrivial factor of composite n; deterministic parameter sweep."""
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
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
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho sweep exhausted on {n}")


def factorize(n: int) -> list[int]:
    """Prime factors of n with multiplicity, sorted ascending.

    Trial division below TRIAL_DIVISION_BOUND, then Brent's cycle-finding
    variant of Pollard rho with a fixed parameter sweep, so the result is
    deterministic. factorize(1) == [].
    """
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    out = []
    for q in (2, 3):
        while n % q == 0:
            out.append(q)
            n //= q
    d = 5
    while d <= TRIAL_DIVISION_BOUND and d * d <= n:
        for q in (d, d + 2):
            while n % q == 0:
                out.append(q)
                n //= q
        d += 6
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out.append(m)
            continue
        g = _brent_rho(m)
        stack.append(g)
        stack.append(m // g)
    out.sort()
    return out


def mod_pow(a: int, e: int, p: int) -> int:
    """a**e mod p by binary square-and-multiply.

    Python integers never overflow, so no widening tricks are needed; the
    explicit loop is kept so tests can cross-check the builtin pow.
    """
    if p < 2:
        raise ValueError(f"modulus must be >= 2, got {p}")
    if e < 0:
        raise ValueError("negative exponent")
    result = 1
    base = a % p
    while e:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


def legendre_symbol(a: int, p: int) -> int:
    """(a|p) in {-1, 0, +1} by Euler's criterion a^((p-1)/2) mod p."""
    if p < 3 or p % 2 == 0:
        raise ValueError(f"Legendre symbol needs an odd prime modulus, got {p}")
    a %= p
    if a == 0:
        return 0
    t = pow(a, (p - 1) // 2, p)
    return -1 if t == p - 1 else t


def multiplicative_order(a: int, p: int, factors_pm1: list[int] | None = None) -> int:
    """Least t >= 1 with a^t = 1 mod p, via dividing prime factors out of p-1."""
    a %= p
    if a == 0:
        raise ValueError("order of 0 is undefined")
    if factors_pm1 is None:
        factors_pm1 = factorize(p - 1)
    t = p - 1
    for q in set(factors_pm1):
        while t % q == 0 and pow(a, t // q, p) == 1:
            t //= q
    return t


@lru_cache(maxsize=4096)
def euler_phi(n: int) -> int:
    phi = n
    for q in set(factorize(n)) if n > 1 else ():
        phi -= phi // q
    return phi


@lru_cache(maxsize=4096)
def mobius(n: int) -> int:
    if n == 1:
        return 1
    fs = factorize(n)
    if len(fs) != len(set(fs)):
        return 0
    return -1 if len(fs) % 2 else 1


@lru_cache(maxsize=4096)
def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for q in sorted(set(factorize(n))) if n > 1 else ():
        e = factorize(n).count(q)
        divs = [d * q**i for d in divs for i in range(e + 1)]
    return tuple(sorted(divs))


class PrimeContext:
    """A prime modulus with its bit geometry and lazily built caches.

    r is the exponent with 2^r < p <= 2^(r+1); bit_len = r+1 is the width of
    the fixed-length binary expansions used throughout. For odd p this means
    p itself fits in bit_len bits.
    """

    __slots__ = ("p", "r", "bit_len", "factors_pm1", "index_cap",
                 "_pr_bitmap", "_index_table", "_least_g", "_pr_exponents")

    def __init__(self, p: int, factors_pm1: list[int], index_cap: int = INDEX_TABLE_CAP):
        self.p = p
        self.r = (p - 1).bit_length() - 1
        self.bit_len = self.r + 1
        self.factors_pm1 = tuple(factors_pm1)
        self.index_cap = index_cap
        self._pr_bitmap = None
        self._index_table = None
        self._least_g = None
        self._pr_exponents = None

    @classmethod
    def for_prime(cls, p: int, index_cap: int = INDEX_TABLE_CAP) -> "PrimeContext":
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        return cls(p, factorize(p - 1) if p > 1 else [], index_cap)

    def __repr__(self):
        return f"PrimeContext(p={self.p})"

    @property
    def distinct_factors(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.factors_pm1)))

    @property
    def phi_pm1(self) -> int:
        phi = self.p - 1
        for q in self.distinct_factors:
            phi -= phi // q
        return phi

    def pr_test_exponents(self) -> tuple[int, ...]:
        if self._pr_exponents is None:
            m = self.p - 1
            self._pr_exponents = tuple(m // q for q in self.distinct_factors)
        return self._pr_exponents

    def pr_bitmap(self) -> int:
        if self._pr_bitmap is None:
            self._pr_bitmap = _build_pr_bitmap(self)
        return self._pr_bitmap

    def index_table(self) -> list[int]:
        """ind[a] with g^ind[a] = a mod p for the least primitive root g.

        Entry 0 is a placeholder (-1); indices for a in [1, p-1] form a
        bijection onto [0, p-2].
        """
        if self._index_table is None:
            if self.p > self.index_cap:
                raise CapabilityError(
                    f"index table for p={self.p} exceeds cap {self.index_cap}")
            g = least_primitive_root(self)
            table = [-1] * self.p
            x = 1
            for t in range(self.p - 1):
                table[x] = t
                x = x * g % self.p
            self._index_table = table
        return self._index_table

    def build_caches(self) -> "PrimeContext":
        """Force-build the bitmap (and index table when within cap).

        Contexts are treated as immutable once shared across workers, so
        callers that fan out should build caches first.
        """
        self.pr_bitmap()
        if self.p <= self.index_cap:
            self.index_table()
        return self


def is_primitive_root(a: int, ctx: PrimeContext) -> bool:
    """True iff a generates the multiplicative group mod p.

    Tests a^((p-1)/q) != 1 for every prime q | p-1; no full order computation.
    """
    p = ctx.p
    a %= p
    if a == 0:
        return False
    if p == 2:
        return a == 1
    return all(pow(a, e, p) != 1 for e in ctx.pr_test_exponents())


def least_primitive_root(ctx: PrimeContext) -> int:
    """Smallest g >= 1 generating the group mod p."""
    if ctx._least_g is None:
        if ctx.p == 2:
            ctx._least_g = 1
        else:
            ctx._least_g = next(g for g in range(2, ctx.p) if is_primitive_root(g, ctx))
    return ctx._least_g


def _build_pr_bitmap(ctx: PrimeContext) -> int:
    p = ctx.p
    if p == 2:
        return 0b10  # the single root {1}
    m = p - 1
    g = least_primitive_root(ctx)
    # g^t is a generator iff gcd(t, m) == 1; sieve the exponents, then walk
    # the powers of g incrementally.
    coprime = bytearray([1]) * m
    for q in ctx.distinct_factors:
        coprime[0::q] = b"\x00" * len(coprime[0::q])
    bitmap = 0
    x = 1
    for t in range(m):
        if coprime[t]:
            bitmap |= 1 << x
        x = x * g % p
    return bitmap


def primitive_roots(ctx: PrimeContext) -> int:
    """Bitmap over [0, 2^bit_len) with bit a set iff a is a primitive root.

    Exactly phi(p-1) bits are set; the result is cached on the context.
    """
    return ctx.pr_bitmap()


def bitmap_to_set(bitmap: int) -> list[int]:
    """Indices of set bits, ascending."""
    out = []
    while bitmap:
        low = bitmap & -bitmap
        out.append(low.bit_length() - 1)
        bitmap ^= low
    return out
