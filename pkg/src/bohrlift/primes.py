"""Prime sieve and the bijection n <-> prime-exponent multi-index.

Every integer n >= 1 factors uniquely as prod_j p_j^alpha_j over the
increasing primes p_1 = 2, p_2 = 3, ...; the exponent sequence is the
multi-index of n.  `factorize` and `index_of` realize the two directions.

The sieve is a process-wide smallest-prime-factor table that grows on
demand (amortized doubling) and never shrinks.  Growth happens under a
lock and installs fresh arrays atomically, so concurrent readers always
see a consistent snapshot.  The environment variable BOHRLIFT_SIEVE_CAP
caps the table size; requests past the cap fail loudly instead of
swallowing memory.
"""

from __future__ import annotations

import math
import os
import threading
from bisect import bisect_left, bisect_right

import numpy as np

from .errors import IndexRangeError, SieveCapError
from .multiindex import EMPTY_INDEX, MultiIndex

#: Largest integer index handled anywhere in the package (signed 64-bit).
MAX_INDEX = 2**63 - 1

SIEVE_CAP_ENV = "BOHRLIFT_SIEVE_CAP"
_DEFAULT_CAP = 1 << 24

_lock = threading.Lock()
_spf = np.zeros(2, dtype=np.int32)
_primes: list[int] = []
_limit = 1


def _size_cap() -> int:
    raw = os.environ.get(SIEVE_CAP_ENV)
    if raw is None:
        return _DEFAULT_CAP
    cap = int(raw)
    if cap < 1024:
        raise ValueError(f"{SIEVE_CAP_ENV} must be at least 1024, got {cap}")
    return cap


def _grow(target: int) -> None:
    """Extend the smallest-prime-factor table to cover [2, target]."""
    global _spf, _primes, _limit
    with _lock:
        if target <= _limit:
            return
        cap = _size_cap()
        if target > cap:
            raise SieveCapError(
                f"sieve request {target} exceeds cap {cap}; raise {SIEVE_CAP_ENV} to allow it"
            )
        limit = min(max(2 * _limit, target, 1 << 10), cap)
        spf = np.zeros(limit + 1, dtype=np.int32)
        for p in range(2, math.isqrt(limit) + 1):
            if spf[p] == 0:
                block = spf[p * p :: p]
                block[block == 0] = p
        tail = spf[2:]
        unset = tail == 0
        tail[unset] = np.arange(2, limit + 1, dtype=np.int32)[unset]
        primes = (np.flatnonzero(tail == np.arange(2, limit + 1, dtype=np.int32)) + 2).tolist()
        _spf = spf
        _primes = primes
        _limit = limit


def sieve_limit() -> int:
    """Largest integer currently covered by the factor table."""
    return _limit


def primes_up_to(x: int) -> list[int]:
    """All primes p <= x in increasing order."""
    if x < 2:
        return []
    _grow(x)
    return _primes[: bisect_right(_primes, x)]


def prime_count(x: int) -> int:
    """pi(x), the number of primes <= x."""
    if x < 2:
        return 0
    _grow(x)
    return bisect_right(_primes, x)


def nth_prime(position: int) -> int:
    """The prime at 0-based position: nth_prime(0) = 2, nth_prime(2) = 5."""
    if position < 0:
        raise ValueError("position must be non-negative")
    while position >= len(_primes):
        k = max(position + 1, 6)
        # p_k < k (ln k + ln ln k) for k >= 6, so one growth step suffices
        bound = int(k * (math.log(k) + math.log(math.log(k)))) + 16
        _grow(max(bound, 2 * _limit))
    return _primes[position]


def factorize(n: int) -> MultiIndex:
    """Exponent multi-index of n: factorize(1) = (), factorize(360) = (3, 2, 1).

    Rejects n < 1; n = 0 has no factorization.  Indices inside the
    factor table walk the smallest-prime-factor chain; larger ones are
    peeled by trial division, so any n whose prime factors fit under
    the sieve cap factors fine no matter how large n itself is.
    """
    n = int(n)
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    if n > MAX_INDEX:
        raise IndexRangeError(f"{n} is beyond the 64-bit index range")
    if n == 1:
        return EMPTY_INDEX
    m = n
    if m > _limit and m <= _size_cap():
        _grow(m)
    found: list[tuple[int, int]] = []
    if m > _limit:
        cap = _size_cap()
        bound = min(math.isqrt(m), cap)
        _grow(bound)
        for p in _primes:
            if p > bound or m <= _limit:
                break
            if m % p == 0:
                e = 0
                while m % p == 0:
                    m //= p
                    e += 1
                found.append((p, e))
                bound = min(math.isqrt(m), cap)
        if m > _limit:
            # no factor up to min(sqrt(m), cap): m is prime, or its
            # factors all exceed the cap; either way its position needs
            # the prime table out to m
            if m > cap:
                raise SieveCapError(
                    f"factorize({n}) needs primes near {m}, past the cap {cap}; "
                    f"raise {SIEVE_CAP_ENV} to allow it"
                )
            _grow(m)
    spf = _spf
    while m > 1:
        p = spf.item(m)
        e = 1
        m //= p
        while m % p == 0:
            e += 1
            m //= p
        found.append((p, e))
    found.sort()
    primes = _primes
    pairs = tuple((bisect_left(primes, p), e) for p, e in found)
    return MultiIndex._trusted(pairs)


def index_of(alpha: MultiIndex) -> int:
    """Integer addressed by a multi-index: index_of(()) = 1, index_of((2, 1)) = 12.

    The reconstruction prod_j p_j^alpha_j must fit a signed 64-bit
    integer; anything larger raises IndexRangeError rather than wrapping.
    """
    n = 1
    for pos, e in alpha.pairs:
        n *= nth_prime(pos) ** e
        if n > MAX_INDEX:
            raise IndexRangeError(
                f"index_of({alpha.exponents}) exceeds the 64-bit index range"
            )
    return n
