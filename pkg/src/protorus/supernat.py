"""Supernatural numbers and types.

A supernatural number is a formal product over all primes, prod_p p^(e_p),
with exponents in {0, 1, 2, ...} u {inf}.  Here every value is stored
sparsely: a two-valued default exponent (0 or inf) applying to all primes
not listed, plus finitely many exceptions.  Every supernatural number that
arises from a finitely described group has this shape; exponent patterns
with infinitely many distinct finite values are not finitely describable
and are rejected at parse time.

>>> a = Supernatural({2: 3})
>>> a.exponent(2), a.exponent(5)
(3, 0)
>>> print(sn_mul(a, Supernatural({2: INF, 3: 1})))
2^inf * 3^1
>>> sn_divides(a, ZHAT)
True
"""

from __future__ import annotations

from math import inf as INF

from .limits import FACTOR_BOUND


def is_prime(n) -> bool:
    if not isinstance(n, int) or n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _check_prime(p):
    if not is_prime(p):
        raise ValueError(f"{p!r} is not a prime")


def _check_exponent(e):
    if e == INF:
        return INF
    if isinstance(e, int) and not isinstance(e, bool) and e >= 0:
        return e
    raise ValueError(f"exponent must be a nonnegative integer or inf, got {e!r}")


class Supernatural:
    """Sparse supernatural number: finitely many exceptions over a default.

    Canonical sparsity is enforced at construction (no stored exponent ever
    equals the default), so structural equality is semantic equality.
    Instances are immutable and hashable.
    """

    __slots__ = ("_items", "default")

    def __init__(self, exponents=None, default=0):
        if default not in (0, INF):
            raise ValueError("default exponent must be 0 or inf")
        items = []
        for p, e in sorted((exponents or {}).items()):
            _check_prime(p)
            e = _check_exponent(e)
            if e != default:
                items.append((p, e))
        object.__setattr__(self, "_items", tuple(items))
        object.__setattr__(self, "default", default)

    def __setattr__(self, name, value):
        raise AttributeError("Supernatural is immutable")

    def exponent(self, p):
        """Exponent at prime p; total over all primes via the default."""
        _check_prime(p)
        for q, e in self._items:
            if q == p:
                return e
        return self.default

    @property
    def exceptions(self):
        """Sorted tuple of (prime, exponent) pairs differing from default."""
        return self._items

    @property
    def support_primes(self):
        """Primes where the exponent differs from the default."""
        return tuple(p for p, _ in self._items)

    def is_finite_everywhere(self):
        return self.default == 0 and all(e != INF for _, e in self._items)

    def is_infinite_everywhere(self):
        return self.default == INF and not self._items

    def positive_primes_are_cofinite(self):
        """True when the exponent is positive at all but finitely many primes."""
        return self.default == INF

    def finite_value(self):
        """The ordinary integer prod p^e, defined only for finite values."""
        if not self.is_finite_everywhere():
            raise ValueError("supernatural number is not an ordinary integer")
        n = 1
        for p, e in self._items:
            n *= p**e
        return n

    def __eq__(self, other):
        if not isinstance(other, Supernatural):
            return NotImplemented
        return self._items == other._items and self.default == other.default

    def __hash__(self):
        return hash((self._items, self.default))

    def __repr__(self):
        return f"Supernatural({dict(self._items)!r}, default={self.default})"

    def __str__(self):
        return sn_to_text(self)


ONE = Supernatural()
ZHAT = Supernatural(default=INF)  # exponent inf at every prime


def sn_p_exponent(s: Supernatural, p: int):
    """Exponent of s at the prime p (rejects non-prime p)."""
    return s.exponent(p)


def _joint_primes(a, b):
    return sorted(set(a.support_primes) | set(b.support_primes))


def sn_mul(a: Supernatural, b: Supernatural) -> Supernatural:
    """Pointwise exponent sum, with inf absorbing.

    >>> print(sn_mul(Supernatural({2: 1}), Supernatural({2: 2})))
    2^3
    """
    default = a.default + b.default  # inf absorbs
    exps = {}
    for p in _joint_primes(a, b):
        exps[p] = a.exponent(p) + b.exponent(p)
    return Supernatural(exps, default=default)


def sn_sup(a: Supernatural, b: Supernatural) -> Supernatural:
    """Pointwise maximum of exponents."""
    default = max(a.default, b.default)
    exps = {p: max(a.exponent(p), b.exponent(p)) for p in _joint_primes(a, b)}
    return Supernatural(exps, default=default)


def sn_divides(a: Supernatural, b: Supernatural) -> bool:
    """True iff the exponent of a is <= that of b at every prime."""
    if a.default > b.default:
        return False
    return all(a.exponent(p) <= b.exponent(p) for p in _joint_primes(a, b))


def sn_equivalent(a: Supernatural, b: Supernatural) -> bool:
    """Equality of types: exponents agree at all but finitely many primes,
    and every disagreement is between two finite exponents.

    With the sparse representation this reduces to comparing defaults and
    the finitely many exceptional primes.
    """
    if a.default != b.default:
        return False
    for p in _joint_primes(a, b):
        ea, eb = a.exponent(p), b.exponent(p)
        if ea != eb and (ea == INF or eb == INF):
            return False
    return True


class TypeClass:
    """Equivalence class of a height sequence.

    Two classes are equal iff their representatives are sn_equivalent.  The
    stored representative is kept exact (callers that need the literal
    supremum sequence, not just its class, read `representative`).
    """

    __slots__ = ("representative",)

    def __init__(self, representative: Supernatural):
        object.__setattr__(self, "representative", representative)

    def __setattr__(self, name, value):
        raise AttributeError("TypeClass is immutable")

    def __eq__(self, other):
        if not isinstance(other, TypeClass):
            return NotImplemented
        return sn_equivalent(self.representative, other.representative)

    def __hash__(self):
        # Invariants of the class: the default and the set of primes whose
        # exponent disagrees with the default in finiteness.
        r = self.representative
        marks = frozenset(p for p, e in r.exceptions if (e == INF) != (r.default == INF))
        return hash((r.default, marks))

    def __repr__(self):
        return f"TypeClass({self.representative!r})"

    def __str__(self):
        return f"[{self.representative}]"


ZERO_TYPE = TypeClass(ONE)


def parse_supernatural(text: str) -> Supernatural:
    """Parse `p1^e1 * p2^e2 [default 0|inf]`, with `inf` for infinity.

    The bare body `1` denotes the empty product.

    >>> parse_supernatural("2^inf * 3^2")
    Supernatural({2: inf, 3: 2}, default=0)
    >>> parse_supernatural("1 default inf") == ZHAT
    True
    """
    s = text.strip()
    if not s:
        raise ValueError("empty supernatural")
    default = 0
    if "default" in s:
        body, _, dflt = s.partition("default")
        dflt = dflt.strip()
        if dflt == "inf":
            default = INF
        elif dflt != "0":
            raise ValueError(f"default must be 0 or inf, got {dflt!r}")
        s = body.strip()
        if not s:
            s = "1"
    exps = {}
    if s != "1":
        for term in s.split("*"):
            term = term.strip()
            base, caret, e_text = term.partition("^")
            if not caret:
                raise ValueError(f"expected p^e, got {term!r}")
            try:
                p = int(base)
            except ValueError:
                raise ValueError(f"bad prime {base!r}") from None
            if not is_prime(p) or p > FACTOR_BOUND:
                raise ValueError(f"{base!r} is not a prime within bounds")
            if p in exps:
                raise ValueError(f"prime {p} repeated")
            e_text = e_text.strip()
            if e_text == "inf":
                exps[p] = INF
            else:
                try:
                    e = int(e_text)
                except ValueError:
                    raise ValueError(f"bad exponent {e_text!r}") from None
                if e < 0:
                    raise ValueError(f"negative exponent {e} not allowed")
                exps[p] = e
    return Supernatural(exps, default=default)


def sn_to_text(s: Supernatural) -> str:
    """Canonical textual form; inverse of parse_supernatural."""
    body = " * ".join(
        f"{p}^{'inf' if e == INF else e}" for p, e in s.exceptions
    ) or "1"
    return body + (" default inf" if s.default == INF else "")
