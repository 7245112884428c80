"""Spherical twists along O_C(t), seen on Mukai vectors."""

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotSpherical
from .mukai import MukaiVector, curve_sheaf, mukai_pairing, skyscraper
from .rational import to_fraction


@dataclass(frozen=True)
class TwistParams:
    """Twist along a spherical class; ``t`` is set when the class is v(O_C(t))."""

    spherical_class: MukaiVector
    t: int = None

    @classmethod
    def along_curve(cls, C, t):
        return cls(curve_sheaf(C, t), t)


def twist_mukai(v, tw, lattice):
    """Reflection ``v + <v_S, v> v_S`` in the spherical class ``v_S``."""
    vs = tw.spherical_class
    if mukai_pairing(vs, vs, lattice) != -2:
        raise NotSpherical(
            "twist class is not spherical",
            clause="<v,v>=-2",
            pairing=mukai_pairing(vs, vs, lattice),
        )
    return v + mukai_pairing(vs, v, lattice) * vs


def twist_invariants(n, c, d, s, t):
    """(n, c, d, s) of ST_{O_C(t)}(E) from those of E.

    Here c = ch1.C and d = ch1.D for a class D with D.C = 1, D^2 = 0.
    """
    n, c, d, s = map(to_fraction, (n, c, d, s))
    k = c - n * (t + 1)
    return n, -c + 2 * n * (t + 1), d + k, s + k * (t + 1)


@dataclass(frozen=True)
class SheafLabel:
    """O_p (``curve_twist is None``) or O_C(curve_twist)."""

    curve_twist: int = None

    def __str__(self):
        return "O_p" if self.curve_twist is None else f"O_C({self.curve_twist})"

    def mukai(self, C):
        if self.curve_twist is None:
            return skyscraper(len(C))
        return curve_sheaf(C, self.curve_twist)


def skyscraper_twist(on_curve, t, direction="forward"):
    """Cohomology sheaves of ST^{+-1}_{O_C(t)}(O_p) as ``{degree: sheaf}``."""
    if direction not in ("forward", "inverse"):
        raise ValueError("direction must be 'forward' or 'inverse'")
    if not on_curve:
        return {0: SheafLabel()}
    if direction == "forward":
        return {-1: SheafLabel(t - 1), 0: SheafLabel(t)}
    return {-1: SheafLabel(t), 0: SheafLabel(t + 1)}


def alternating_mukai(table, C):
    """Sum of (-1)^i v(H^i) over a cohomology table."""
    total = MukaiVector(0, C * 0, 0)
    for degree, sheaf in table.items():
        total = total + Fraction((-1) ** abs(degree)) * sheaf.mukai(C)
    return total
