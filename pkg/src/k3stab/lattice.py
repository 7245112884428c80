"""Exact arithmetic in a Neron-Severi lattice given by an integer Gram matrix."""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

from .errors import DegenerateSublattice, DimensionError
from .rational import fmt, to_fraction


@dataclass(frozen=True)
class DivisorClass:
    """A rational divisor class, stored as coordinates in a lattice basis."""

    coords: tuple

    def __init__(self, coords):
        object.__setattr__(self, "coords", tuple(to_fraction(c) for c in coords))

    @classmethod
    def _from_fractions(cls, coords):
        # arithmetic results are already Fractions; skip re-coercion
        obj = object.__new__(cls)
        object.__setattr__(obj, "coords", tuple(coords))
        return obj

    @classmethod
    def zero(cls, rank):
        return cls([0] * rank)

    @classmethod
    def basis_vector(cls, rank, i):
        return cls([1 if j == i else 0 for j in range(rank)])

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def _check(self, other):
        if len(other.coords) != len(self.coords):
            raise DimensionError(
                "divisor classes of different rank",
                clause="rank",
                left=len(self.coords),
                right=len(other.coords),
            )

    def __add__(self, other):
        self._check(other)
        return DivisorClass._from_fractions(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other):
        self._check(other)
        return DivisorClass._from_fractions(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self):
        return DivisorClass._from_fractions(-a for a in self.coords)

    def __mul__(self, scalar):
        scalar = to_fraction(scalar)
        return DivisorClass._from_fractions(scalar * a for a in self.coords)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        scalar = to_fraction(scalar)
        return DivisorClass._from_fractions(a / scalar for a in self.coords)

    def is_zero(self):
        return not any(self.coords)

    def __str__(self):
        return ",".join(fmt(c) for c in self.coords)


def _integral(coords):
    """Integer numerators over a common denominator."""
    den = 1
    for c in coords:
        d = c.denominator
        if d != 1:
            den = den * d // gcd(den, d)
    return [c.numerator * (den // c.denominator) for c in coords], den


@dataclass(frozen=True)
class IntersectionLattice:
    """Named basis plus a symmetric integer Gram matrix."""

    basis_names: tuple
    gram: tuple

    def __init__(self, basis_names, gram):
        names = tuple(str(n) for n in basis_names)
        rows = []
        for row in gram:
            out = []
            for entry in row:
                value = to_fraction(entry)
                if value.denominator != 1:
                    raise ValueError(f"Gram entries must be integers, got {fmt(value)}")
                out.append(int(value))
            rows.append(tuple(out))
        n = len(names)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise DimensionError(
                "Gram matrix shape does not match the basis", clause="gram", rank=n
            )
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"Gram matrix is not symmetric at ({i}, {j})")
        if len(set(names)) != n:
            raise ValueError("basis names must be distinct")
        object.__setattr__(self, "basis_names", names)
        object.__setattr__(self, "gram", tuple(rows))

    @property
    def rank(self):
        return len(self.basis_names)

    def index(self, name):
        return self.basis_names.index(name)

    def basis_class(self, name_or_index):
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        return DivisorClass.basis_vector(self.rank, i)

    def element(self, coords):
        d = DivisorClass(coords)
        self._check(d)
        return d

    def _check(self, a):
        if len(a.coords) != self.rank:
            raise DimensionError(
                "class does not live in this lattice",
                clause="rank",
                expected=self.rank,
                got=len(a.coords),
            )

    def pair(self, a, b):
        self._check(a)
        self._check(b)
        # clear denominators once and do the bilinear form in integers
        A, da = _integral(a.coords)
        B, db = _integral(b.coords)
        total = 0
        for i, ai in enumerate(A):
            if ai:
                row = self.gram[i]
                total += ai * sum(row[j] * bj for j, bj in enumerate(B) if bj)
        return Fraction(total, da * db)

    def square(self, a):
        return self.pair(a, a)


def pair(a, b, lattice):
    """Intersection number ``a . b`` computed as ``a^T G b``."""
    return lattice.pair(a, b)


def cd_coordinates(a, C, D, lattice):
    """Coefficients ``(x, y)`` and remainder with ``a = x C + y D + remainder``.

    The remainder pairs to zero with both C and D.
    """
    cc, cd, dd = lattice.pair(C, C), lattice.pair(C, D), lattice.pair(D, D)
    det = cc * dd - cd * cd
    if det == 0:
        raise DegenerateSublattice(
            "Gram block on (C, D) is singular", clause="det", CC=cc, CD=cd, DD=dd
        )
    ac, ad = lattice.pair(a, C), lattice.pair(a, D)
    x = (dd * ac - cd * ad) / det
    y = (cc * ad - cd * ac) / det
    return x, y, a - x * C - y * D


def decompose_cd(a, C, D, lattice):
    """Split ``a`` into ``(span_part, orthogonal_part)`` against span(C, D)."""
    x, y, orth = cd_coordinates(a, C, D, lattice)
    return x * C + y * D, orth


def enumerate_coefficients(n_generators, height_bound):
    """Nonzero coefficient vectors with entry sum at most ``height_bound``.

    Vectors are listed in the order of their generator words: a vector
    ``k`` is the nondecreasing index word with ``k[i]`` copies of ``i``, and
    words are sorted lexicographically (a prefix sorts first).  For two
    generators and bound 2 this gives (1,0), (2,0), (1,1), (0,1), (0,2).
    """
    if height_bound < 0:
        raise ValueError("height_bound must be nonnegative")
    out = []
    coeffs = [0] * n_generators

    def extend(start, remaining):
        for i in range(start, n_generators):
            coeffs[i] += 1
            out.append(tuple(coeffs))
            if remaining > 1:
                extend(i, remaining - 1)
            coeffs[i] -= 1

    if height_bound > 0:
        extend(0, height_bound)
    return out


def enumerate_cone_classes(generators, height_bound):
    """Nonnegative integer combinations of ``generators`` up to total height.

    Zero is excluded.  Order follows :func:`enumerate_coefficients`.
    """
    generators = list(generators)
    if not generators:
        return []
    rank = len(generators[0])
    classes = []
    for k in enumerate_coefficients(len(generators), height_bound):
        total = DivisorClass.zero(rank)
        for ki, g in zip(k, generators):
            if ki:
                total = total + ki * g
        classes.append(total)
    return classes


def simplex_point_count(n_generators, height_bound):
    """Number of nonzero points returned by :func:`enumerate_coefficients`."""
    return comb(n_generators + height_bound, n_generators) - 1


__all__ = [
    "DivisorClass",
    "IntersectionLattice",
    "pair",
    "decompose_cd",
    "cd_coordinates",
    "enumerate_coefficients",
    "enumerate_cone_classes",
    "simplex_point_count",
]
