"""Mukai vectors, Chern characters and Euler pairings on a K3 surface."""

from dataclasses import dataclass
from fractions import Fraction

from .lattice import DivisorClass
from .rational import fmt, to_fraction

#: -C^2 for the smooth rational curve C.
E_CURVE = 2


@dataclass(frozen=True)
class ChernCharacter:
    ch0: Fraction
    ch1: DivisorClass
    ch2: Fraction

    def __init__(self, ch0, ch1, ch2):
        object.__setattr__(self, "ch0", to_fraction(ch0))
        object.__setattr__(self, "ch1", ch1 if isinstance(ch1, DivisorClass) else DivisorClass(ch1))
        object.__setattr__(self, "ch2", to_fraction(ch2))

    def __add__(self, other):
        return ChernCharacter(self.ch0 + other.ch0, self.ch1 + other.ch1, self.ch2 + other.ch2)

    def __sub__(self, other):
        return ChernCharacter(self.ch0 - other.ch0, self.ch1 - other.ch1, self.ch2 - other.ch2)

    def __neg__(self):
        return ChernCharacter(-self.ch0, -self.ch1, -self.ch2)

    def __mul__(self, k):
        k = to_fraction(k)
        return ChernCharacter(k * self.ch0, k * self.ch1, k * self.ch2)

    __rmul__ = __mul__

    def __str__(self):
        return f"{fmt(self.ch0)},({self.ch1}),{fmt(self.ch2)}"


@dataclass(frozen=True)
class MukaiVector:
    """``(r, c1, s)`` with ``s = ch2 + r`` on a K3 surface."""

    r: Fraction
    c1: DivisorClass
    s: Fraction

    def __init__(self, r, c1, s):
        object.__setattr__(self, "r", to_fraction(r))
        object.__setattr__(self, "c1", c1 if isinstance(c1, DivisorClass) else DivisorClass(c1))
        object.__setattr__(self, "s", to_fraction(s))

    def __add__(self, other):
        return MukaiVector(self.r + other.r, self.c1 + other.c1, self.s + other.s)

    def __sub__(self, other):
        return MukaiVector(self.r - other.r, self.c1 - other.c1, self.s - other.s)

    def __neg__(self):
        return MukaiVector(-self.r, -self.c1, -self.s)

    def __mul__(self, k):
        k = to_fraction(k)
        return MukaiVector(k * self.r, k * self.c1, k * self.s)

    __rmul__ = __mul__

    def __str__(self):
        return f"{fmt(self.r)},({self.c1}),{fmt(self.s)}"


def mukai_from_chern(ch):
    return MukaiVector(ch.ch0, ch.ch1, ch.ch2 + ch.ch0)


def chern_from_mukai(v):
    return ChernCharacter(v.r, v.c1, v.s - v.r)


def mukai_pairing(v, w, lattice):
    """``<(r,c,s),(r',c',s')> = c.c' - r s' - s r'``."""
    return lattice.pair(v.c1, w.c1) - v.r * w.s - v.s * w.r


def euler_chi(v, w, lattice):
    """chi(E, F) = -<v(E), v(F)>."""
    return -mukai_pairing(v, w, lattice)


def is_spherical(v, lattice):
    return mukai_pairing(v, v, lattice) == -2


def twisted_chern(ch, B, lattice):
    """ch . exp(-B)."""
    return ChernCharacter(
        ch.ch0,
        ch.ch1 - ch.ch0 * B,
        ch.ch2 - lattice.pair(ch.ch1, B) + ch.ch0 * lattice.pair(B, B) / 2,
    )


def structure_sheaf(rank):
    """v(O_X) = (1, 0, 1)."""
    return MukaiVector(1, DivisorClass.zero(rank), 1)


def skyscraper(rank):
    """v(O_p) = (0, 0, 1)."""
    return MukaiVector(0, DivisorClass.zero(rank), 1)


def curve_sheaf(C, t):
    """v(O_C(t)) = (0, C, t + 1)."""
    return MukaiVector(0, C, t + 1)


def hom_ext_on_c(a, b):
    """Dimensions (hom, ext1, ext2) from O_C(a) to O_C(b) on the K3 surface.

    C is a smooth rational curve, so Hom is H^0(O_P1(b - a)), Ext^2 is dual
    to Hom(O_C(b), O_C(a)), and the Euler characteristic is -C^2 = 2.
    """
    hom = max(b - a + 1, 0)
    ext2 = max(a - b + 1, 0)
    ext1 = hom + ext2 - E_CURVE
    return hom, ext1, ext2
