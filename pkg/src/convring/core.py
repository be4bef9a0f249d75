"""Integer substrate: factorization, divisors, gcd, sieve, prime counting.

Everything here is a pure function of its arguments over arbitrary-precision
integers.  0 is rejected wherever the multiplicative monoid of positive
integers is meant; nothing in this module ever touches floating point.
"""

import math
import threading

__all__ = [
    "factorize",
    "divisors",
    "gcd",
    "lcm",
    "big_omega",
    "mobius",
    "binomial",
    "is_prime",
    "sieve_primes",
    "prime_count",
]


def _check_positive(n, what="n"):
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"{what} must be an int, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"{what} must be >= 1, got {n}")


def _sieve_bytes(limit):
    """Boolean sieve as a bytearray, flags[i] == 1 iff i is prime."""
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = b"\x00" * ((limit - p * p) // p + 1)
    return flags


def sieve_primes(limit):
    """All primes <= limit, ascending.

    sieve_primes(1) == []; the list is complete and deterministic.
    """
    _check_positive(limit, "limit")
    if limit < 2:
        return []
    flags = _sieve_bytes(limit)
    return [i for i in range(2, limit + 1) if flags[i]]


# Trial-division primes, grown on demand; guarded so concurrent callers
# never observe a partially built list.
_cache_lock = threading.Lock()
_cached_primes = sieve_primes(1000)
_cached_limit = 1000


def _trial_primes(limit):
    global _cached_primes, _cached_limit
    if limit > _cached_limit:
        with _cache_lock:
            if limit > _cached_limit:
                new_limit = max(limit, 2 * _cached_limit)
                _cached_primes = sieve_primes(new_limit)
                _cached_limit = new_limit
    return _cached_primes


def factorize(n):
    """Canonical factorization of n >= 1 as a list of (prime, exponent) pairs.

    Pairs are ascending by prime with all exponents >= 1; factorize(1) == [].
    """
    _check_positive(n)
    pairs = []
    m = n
    for p in _trial_primes(math.isqrt(n)):
        if p * p > m:
            break
        if m % p == 0:
            r = 0
            while m % p == 0:
                m //= p
                r += 1
            pairs.append((p, r))
    if m > 1:
        pairs.append((m, 1))
    return pairs


def divisors(n):
    """All divisors of n >= 1, sorted ascending."""
    _check_positive(n)
    divs = [1]
    for p, r in factorize(n):
        powers = [p**k for k in range(1, r + 1)]
        divs += [d * q for d in divs for q in powers]
    divs.sort()
    return divs


def gcd(n, m):
    """Greatest common divisor of two positive integers."""
    _check_positive(n)
    _check_positive(m, "m")
    return math.gcd(n, m)


def lcm(n, m):
    """Least common multiple of two positive integers."""
    _check_positive(n)
    _check_positive(m, "m")
    return n * m // math.gcd(n, m)


def big_omega(n):
    """Number of prime factors of n counted with multiplicity; 0 for n == 1."""
    return sum(r for _, r in factorize(n))


def mobius(n):
    """+1/-1 on squarefree n by parity of its prime count, 0 otherwise."""
    pairs = factorize(n)
    if any(r > 1 for _, r in pairs):
        return 0
    return -1 if len(pairs) % 2 else 1


def binomial(n, k):
    """Binomial coefficient C(n, k); 0 outside 0 <= k <= n."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def is_prime(n):
    """Primality by trial division; intended for desk-scale n."""
    if n < 2:
        return False
    return factorize(n) == [(n, 1)]


def prime_count(x):
    """pi(x): the number of primes <= x."""
    _check_positive(x, "x")
    if x < 2:
        return 0
    return sum(_sieve_bytes(x))
