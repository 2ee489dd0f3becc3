"""Resource limits shared across modules.

All enumeration-style computations refuse to run past these ceilings so a
bad input degrades into a clean error instead of an hour of spinning.
"""

# Depth cap for truncations mod p^N.
DEFAULT_TRUNCATION_BOUND = 12

# Total elements an enumeration-style check may visit.
ENUMERATION_CEILING = 2**24

# Trial division gives up past this; larger factors raise FactorError.
FACTOR_BOUND = 10**6


class CeilingError(RuntimeError):
    """A requested computation exceeds a configured resource ceiling."""


class FactorError(ValueError):
    """An integer resisted trial division up to FACTOR_BOUND."""


def factorize(n, bound=FACTOR_BOUND):
    """Prime factorization {p: e} of |n| by trial division, n != 0."""
    if n == 0:
        raise ValueError("cannot factor 0")
    n = abs(n)
    out = {}
    p = 2
    while p * p <= n:
        if p > bound:
            raise FactorError(f"factor of {n} exceeds trial-division bound {bound}")
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        if n > bound:
            raise FactorError(f"factor {n} exceeds trial-division bound {bound}")
        out[n] = out.get(n, 0) + 1
    return out
