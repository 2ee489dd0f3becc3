"""Exact lattice calculus in Q^n.

Full-rank subgroups of Q^n model the profinite-subgroup lattice of a
protorus: joins are sums, meets are intersections, nested pairs have
finite index, and any two lattices are commensurable.  Every lattice is
kept in row-style Hermite normal form (upper triangular, positive
diagonal, reduced entries above each pivot), so two values describe the
same subgroup exactly when their stored bases are identical.

>>> L = hnf_basis([(2, 2), (0, 4)])
>>> L.basis
((Fraction(2, 1), Fraction(2, 1)), (Fraction(0, 1), Fraction(4, 1)))
>>> lattice_index(identity_lattice(2), hnf_basis([(2, 0), (0, 3)]))
6
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from ._matrices import frac, hnf_int, mat_inv, row_times_mat


class LatticeError(ValueError):
    pass


class Lattice:
    """Full-rank subgroup of Q^n, stored as its canonical HNF row basis."""

    __slots__ = ("basis",)

    def __init__(self, basis):
        object.__setattr__(self, "basis", tuple(tuple(frac(x) for x in row) for row in basis))

    def __setattr__(self, name, value):
        raise AttributeError("Lattice is immutable")

    @property
    def rank(self):
        return len(self.basis)

    def det(self) -> Fraction:
        d = Fraction(1)
        for i in range(self.rank):
            d *= self.basis[i][i]
        return d

    def coordinates(self, w):
        """Coordinates x with w = x . basis (back substitution)."""
        w = [frac(x) for x in w]
        n = self.rank
        if len(w) != n:
            raise LatticeError(f"vector has dimension {len(w)}, lattice rank {n}")
        coords = [Fraction(0)] * n
        for i in range(n):
            c = w[i] / self.basis[i][i]
            coords[i] = c
            if c:
                for j in range(i, n):
                    w[j] -= c * self.basis[i][j]
        return tuple(coords)

    def denominator_of(self, w) -> int:
        """Least k >= 1 with k*w in the lattice."""
        return lcm(*(x.denominator for x in self.coordinates(w)))

    def __contains__(self, w):
        return all(x.denominator == 1 for x in self.coordinates(w))

    def __eq__(self, other):
        if not isinstance(other, Lattice):
            return NotImplemented
        return self.basis == other.basis

    def __hash__(self):
        return hash(self.basis)

    def __repr__(self):
        return f"Lattice({[list(r) for r in self.basis]!r})"


def identity_lattice(n: int) -> Lattice:
    return Lattice([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])


def hnf_basis(generators) -> Lattice:
    """Canonical lattice generated by rational row vectors.

    Idempotent on already-canonical input; rejects generator sets that do
    not span Q^n.
    """
    gens = [tuple(frac(x) for x in row) for row in generators]
    if not gens:
        raise LatticeError("no generators")
    n = len(gens[0])
    if any(len(g) != n for g in gens):
        raise LatticeError("generators of mixed dimension")
    scale = lcm(*(x.denominator for g in gens for x in g), 1)
    int_rows = [[int(x * scale) for x in g] for g in gens]
    rows = hnf_int(int_rows, n)
    if len(rows) != n:
        raise LatticeError(f"generators span only rank {len(rows)} of Q^{n}")
    return Lattice([[Fraction(x, scale) for x in row] for row in rows])


def dual_lattice(L: Lattice) -> Lattice:
    """{y : x . y in Z for all x in L}; basis rows are columns of basis^-1."""
    inv = mat_inv(L.basis)
    cols = [tuple(inv[i][j] for i in range(L.rank)) for j in range(L.rank)]
    return hnf_basis(cols)


def lattice_sum(L1: Lattice, L2: Lattice) -> Lattice:
    if L1.rank != L2.rank:
        raise LatticeError("rank mismatch")
    return hnf_basis(list(L1.basis) + list(L2.basis))


def lattice_meet(L1: Lattice, L2: Lattice) -> Lattice:
    """Intersection, computed through the dual-basis route: the dual of the
    sum of duals.  The enumeration cross-check lives in the oracle.
    """
    if L1.rank != L2.rank:
        raise LatticeError("rank mismatch")
    return dual_lattice(lattice_sum(dual_lattice(L1), dual_lattice(L2)))


def lattice_index(L_big: Lattice, L_small: Lattice) -> int:
    """[L_big : L_small] for nested lattices; rejects non-nested input
    with a witness basis vector.
    """
    if L_big.rank != L_small.rank:
        raise LatticeError("rank mismatch")
    for row in L_small.basis:
        if row not in L_big:
            raise LatticeError(f"not nested: witness vector {tuple(map(str, row))}")
    ratio = abs(L_small.det() / L_big.det())
    if ratio.denominator != 1:
        raise LatticeError("index is not integral")  # pragma: no cover
    return ratio.numerator


def scaling_witness(L1: Lattice, L2: Lattice) -> int:
    """Minimal k > 0 with k*L1 contained in L2 (the exponent of L1 over
    L1 meet L2).  Always exists for full-rank pairs.
    """
    if L1.rank != L2.rank:
        raise LatticeError("rank mismatch")
    return lcm(*(L2.denominator_of(row) for row in L1.basis))


class HemispherePoint:
    """Canonical primitive integer point on a line through 0: coordinates
    have gcd 1 and the first nonzero one is positive.
    """

    __slots__ = ("coords",)

    def __init__(self, coords):
        coords = tuple(int(x) for x in coords)
        if not any(coords):
            raise ValueError("zero vector has no hemisphere representative")
        if gcd(*coords) != 1:
            raise ValueError("coordinates are not coprime")
        first = next(x for x in coords if x)
        if first < 0:
            raise ValueError("first nonzero coordinate must be positive")
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("HemispherePoint is immutable")

    def __eq__(self, other):
        if not isinstance(other, HemispherePoint):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"HemispherePoint({self.coords!r})"


def hemisphere_rep(z):
    """Canonical primitive point on the line Q.z and the radius of the
    minimal integer rescaling of z.

    >>> hemisphere_rep((2, 4))
    (HemispherePoint((1, 2)), 2)
    >>> hemisphere_rep((Fraction(1, 2), Fraction(1, 3)))
    (HemispherePoint((3, 2)), 1)
    """
    z = [frac(x) for x in z]
    if not any(z):
        raise ValueError("zero vector")
    scale = lcm(*(x.denominator for x in z))
    w = [int(x * scale) for x in z]
    radius = gcd(*w)
    prim = [x // radius for x in w]
    if next(x for x in prim if x) < 0:
        prim = [-x for x in prim]
    return HemispherePoint(prim), radius
