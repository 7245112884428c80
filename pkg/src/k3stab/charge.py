"""Central charges Z_{V,nu,B}, phases and slopes of numerical classes."""

from dataclasses import dataclass
from fractions import Fraction
import math

from .errors import (
    KernelPhaseUndefined,
    KernelSlopeUndefined,
    OutOfDomain,
    OutsideRegion,
)
from .lattice import DivisorClass
from .mukai import MukaiVector, chern_from_mukai, twisted_chern
from .rational import fmt, to_fraction


@dataclass(frozen=True)
class ChargeParams:
    V: Fraction
    nu: DivisorClass
    B: DivisorClass = None

    def __init__(self, V, nu, B=None):
        V = to_fraction(V)
        if V <= 0:
            raise OutOfDomain("V must be positive", clause="V>0", V=V)
        object.__setattr__(self, "V", V)
        object.__setattr__(self, "nu", nu)
        object.__setattr__(self, "B", DivisorClass.zero(len(nu)) if B is None else B)


@dataclass(frozen=True)
class ComplexExact:
    re: Fraction
    im: Fraction

    def __init__(self, re, im):
        object.__setattr__(self, "re", to_fraction(re))
        object.__setattr__(self, "im", to_fraction(im))

    def __add__(self, other):
        return ComplexExact(self.re + other.re, self.im + other.im)

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __str__(self):
        return f"{fmt(self.re)}{'+' if self.im >= 0 else '-'}{fmt(abs(self.im))}i"


@dataclass(frozen=True)
class Phase:
    """A phase in (0, 1].

    ``exact`` is True when ``value`` is known exactly (1/2 or 1); otherwise
    the value is a float approximation of a transcendental number.
    """

    value: float
    exact: bool = False

    def __post_init__(self):
        if not 0 < self.value <= 1:
            raise OutsideRegion("phase outside (0, 1]", clause="0<phi<=1", value=self.value)

    @property
    def exactness_flag(self):
        return "exact" if self.exact else "transcendental-approx"

    def __str__(self):
        if self.exact:
            return fmt(Fraction(self.value))
        return repr(self.value)


HALF = Phase(0.5, exact=True)
ONE = Phase(1.0, exact=True)

#: Phase assigned to kernel objects of Z_{V,nu}: 1/2 in both the B_{nu,-2}
#: heart (limit along nu + eps*omega) and in the tilted heart A_{nu,-2}.
KERNEL_RULES = {"b": HALF, "a": HALF}


def kernel_rule(regime="b"):
    return KERNEL_RULES[regime]


def _as_chern(x):
    return chern_from_mukai(x) if isinstance(x, MukaiVector) else x


def central_charge(p, ch, lattice):
    """Z(E) = -ch2^B + V ch0^B + i nu.ch1^B.

    ``ch`` may be a :class:`ChernCharacter` or a :class:`MukaiVector`.
    """
    ch = _as_chern(ch)
    tw = twisted_chern(ch, p.B, lattice)
    return ComplexExact(-tw.ch2 + p.V * tw.ch0, lattice.pair(p.nu, tw.ch1))


def phase_of(z, kernel_phase=None):
    """(1/pi) arg z with arg in (0, pi]."""
    if z.is_zero():
        if kernel_phase is None:
            raise KernelPhaseUndefined("Z = 0 and no kernel rule given", clause="Z=0")
        return kernel_phase
    if z.im < 0 or (z.im == 0 and z.re > 0):
        raise OutsideRegion(
            "central charge outside H u R_{<=0}; shift the object", clause="region", Z=z
        )
    if z.im == 0:
        return ONE
    if z.re == 0:
        return HALF
    return Phase(math.atan2(z.im, z.re) / math.pi)


def phase(p, ch, lattice, kernel_rule=None):
    return phase_of(central_charge(p, ch, lattice), kernel_rule)


def slope_of(z):
    """-Re Z / Im Z exactly, or +inf on the negative real axis."""
    if z.is_zero():
        raise KernelSlopeUndefined("slope of a kernel class", clause="Z=0")
    if z.im == 0:
        if z.re > 0:
            raise OutsideRegion("Z on the positive real axis", clause="region", Z=z)
        return math.inf
    if z.im < 0:
        raise OutsideRegion("Z in the lower half-plane", clause="region", Z=z)
    return -z.re / z.im


def slope(p, ch, lattice):
    return slope_of(central_charge(p, ch, lattice))


def kernel_contains(p, ch, lattice):
    return central_charge(p, ch, lattice).is_zero()


def limit_phase(p_ratio, omega_dot_c):
    """(1/pi) arccot(k p_ratio) with k = 2/(omega.C), arccot valued in (0, pi).

    ``p_ratio`` may be a rational or +-inf.  At ``-inf`` the phase is 1; at
    ``+inf`` the limit 0 is not a phase and OutsideRegion is raised.
    """
    omega_dot_c = to_fraction(omega_dot_c)
    if omega_dot_c <= 0:
        raise OutOfDomain("omega.C must be positive", clause="omega.C>0", omega_dot_c=omega_dot_c)
    if isinstance(p_ratio, float) and math.isinf(p_ratio):
        if p_ratio < 0:
            return ONE
        raise OutsideRegion("limit phase 0 is not in (0, 1]", clause="p=+inf")
    x = Fraction(2) / omega_dot_c * to_fraction(p_ratio)
    if x == 0:
        return HALF
    # arccot(x) = atan2(1, x) lands in (0, pi)
    return Phase(math.atan2(1.0, float(x)) / math.pi)


__all__ = [
    "ChargeParams",
    "ComplexExact",
    "Phase",
    "HALF",
    "ONE",
    "kernel_rule",
    "central_charge",
    "phase",
    "phase_of",
    "slope",
    "slope_of",
    "kernel_contains",
    "limit_phase",
]
