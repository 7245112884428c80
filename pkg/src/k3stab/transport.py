"""Transport of central charges under ST_{O_C(t)}.

Classes are written in the coordinates

    omega = C + (e + D_omega) D + G_omega psi
    B     = R_B (C + (D_B + e) D + G_B chi)

with D.C = 1, D^2 = 0, e = -C^2 = 2 and psi, chi orthogonal to C and D.
The identity checked everywhere is

    Z_{V,omega,B}(ST(E)) = g . Z_{Vbar,omegabar,Bbar}(E)

for a real 2x2 matrix g acting on (Re Z, Im Z).
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .charge import HALF, ONE, ChargeParams, ComplexExact, Phase, central_charge
from .errors import (
    CoordinateOutOfRange,
    DimensionError,
    NotNormalized,
    OutOfDomain,
    OutsideRegion,
    Singular,
)
from .lattice import DivisorClass, cd_coordinates
from .mukai import E_CURVE, MukaiVector
from .rational import fmt, to_fraction
from .twist import TwistParams, twist_mukai


@dataclass(frozen=True)
class TransportCoords:
    e: int
    D_omega: Fraction
    G_omega: Fraction
    psi: DivisorClass
    R_B: Fraction = Fraction(0)
    D_B: Fraction = Fraction(0)
    G_B: Fraction = Fraction(0)
    chi: DivisorClass = None

    def omega(self, C, D):
        return C + (self.e + self.D_omega) * D + self.G_omega * self.psi

    def B(self, C, D):
        chi = self.chi if self.chi is not None else C * 0
        return self.R_B * (C + (self.D_B + self.e) * D + self.G_B * chi)


@dataclass(frozen=True)
class Gl2Factor:
    """Element g = (g0, f) of the universal cover of GL+(2, R).

    ``matrix`` is g0 as ((a, b), (c, d)).  For positive diagonal g0 the lift
    with 0 < f(phi) <= 1 is f(phi) = arg(a cos(pi phi) + i d sin(pi phi))/pi:
    monotone, fixing 1/2 and 1, and the identity exactly when a = d.  Other
    matrices get no canonical lift here.
    """

    matrix: tuple
    phase_shift: str = "identity"

    def __init__(self, matrix, phase_shift=None):
        (a, b), (c, d) = matrix
        m = ((to_fraction(a), to_fraction(b)), (to_fraction(c), to_fraction(d)))
        det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
        if det <= 0:
            raise OutOfDomain("g must have positive determinant", clause="det>0", det=det)
        if phase_shift is None:
            if not self._is_positive_diagonal(m):
                phase_shift = "unspecified lift"
            elif m[0][0] == m[1][1]:
                phase_shift = "identity"
            else:
                phase_shift = "diagonal: arg(a cos + i d sin)/pi"
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "phase_shift", phase_shift)

    @staticmethod
    def _is_positive_diagonal(m):
        return m[0][1] == 0 and m[1][0] == 0 and m[0][0] > 0 and m[1][1] > 0

    def phase_map(self, phi):
        """f(phi) for positive diagonal g0; a Phase, exact at 1/2 and 1."""
        if not self._is_positive_diagonal(self.matrix):
            raise OutOfDomain("no canonical lift for a non-diagonal g0", clause="diagonal")
        value = float(phi.value if isinstance(phi, Phase) else phi)
        if not 0 < value <= 1:
            raise OutsideRegion("phase outside (0, 1]", clause="0<phi<=1", value=value)
        if value == 1:
            return ONE
        if value == 0.5:
            return HALF
        a, d = float(self.matrix[0][0]), float(self.matrix[1][1])
        return Phase(math.atan2(d * math.sin(math.pi * value), a * math.cos(math.pi * value)) / math.pi)

    @classmethod
    def diagonal(cls, a, d):
        return cls(((a, 0), (0, d)))

    @classmethod
    def identity(cls):
        return cls.diagonal(1, 1)

    @property
    def determinant(self):
        (a, b), (c, d) = self.matrix
        return a * d - b * c

    def apply(self, z):
        (a, b), (c, d) = self.matrix
        return ComplexExact(a * z.re + b * z.im, c * z.re + d * z.im)

    def __str__(self):
        return ";".join(",".join(fmt(x) for x in row) for row in self.matrix)


def coords_from_divisor(omega, C, D, lattice, e=E_CURVE):
    """omega-part of :class:`TransportCoords` for a class ``omega``.

    A nonzero orthogonal remainder is returned as ``psi`` with G_omega = 1.
    """
    x, y, orth = cd_coordinates(omega, C, D, lattice)
    if x != 1:
        raise NotNormalized("C-coefficient of omega must be 1", clause="C-coeff=1", coefficient=x)
    d_omega = y - e
    if d_omega <= -1:
        raise CoordinateOutOfRange("D_omega must exceed -1", clause="D_omega>-1", D_omega=d_omega)
    g_omega = Fraction(0) if orth.is_zero() else Fraction(1)
    return TransportCoords(e=e, D_omega=d_omega, G_omega=g_omega, psi=orth)


def omega_from_coords(C, D, D_omega, G_omega=0, psi=None, e=E_CURVE):
    D_omega = to_fraction(D_omega)
    if D_omega <= -1:
        raise CoordinateOutOfRange("D_omega must exceed -1", clause="D_omega>-1", D_omega=D_omega)
    psi = C * 0 if psi is None else psi
    return TransportCoords(e, D_omega, to_fraction(G_omega), psi).omega(C, D)


def solve_case_one(D_omega_bar):
    """t = -1, B = Bbar = 0: returns ``(D_omega, g)``.

    D_omega = -Dbar/(Dbar + 1) and g = diag(1, 1/(Dbar + 1)); V is unchanged.
    """
    dbar = to_fraction(D_omega_bar)
    if dbar == -1:
        raise Singular("D_omega_bar = -1", clause="D_omega_bar+1!=0")
    if dbar < -1:
        raise CoordinateOutOfRange(
            "D_omega_bar must exceed -1", clause="D_omega_bar>-1", D_omega_bar=dbar
        )
    return -dbar / (dbar + 1), Gl2Factor.diagonal(1, 1 / (dbar + 1))


def solve_case_two(t, C):
    """D_omega_bar = 0, Bbar = 0: B = -(t + 1) C and g = identity."""
    return -(t + 1) * C, Gl2Factor.identity()


def solve_case_three(u_bar):
    """t = -1, D_omega_bar = 0, Bbar = u_bar C: B = u C with u = -u_bar."""
    return -to_fraction(u_bar), Gl2Factor.identity()


def transport_spanning_set(rank):
    """(1,0,0), (0,0,1) and (0,e_i,0) for each lattice basis vector."""
    zero = DivisorClass.zero(rank)
    vecs = [MukaiVector(1, zero, 0), MukaiVector(0, zero, 1)]
    vecs += [MukaiVector(0, DivisorClass.basis_vector(rank, i), 0) for i in range(rank)]
    return vecs


def transport_residuals(params, params_bar, g, t, C, lattice):
    """Per spanning vector: Z(ST v) - g Z_bar(v) as (re, im) pairs."""
    for cls in (params.nu, params.B, params_bar.nu, params_bar.B, C):
        if len(cls) != lattice.rank:
            raise DimensionError(
                "class does not live in this lattice", clause="rank", expected=lattice.rank
            )
    tw = TwistParams.along_curve(C, t)
    out = []
    for v in transport_spanning_set(lattice.rank):
        lhs = central_charge(params, twist_mukai(v, tw, lattice), lattice)
        rhs = g.apply(central_charge(params_bar, v, lattice))
        out.append((v, lhs.re - rhs.re, lhs.im - rhs.im))
    return out


def verify_transport(params, params_bar, g, t, C, lattice):
    """Exact check of the transport identity on a spanning set.

    Both sides are additive in the Mukai vector, so agreement on the
    spanning set is agreement on every class.
    """
    return all(
        re == 0 and im == 0
        for _, re, im in transport_residuals(params, params_bar, g, t, C, lattice)
    )


def case_one_params(V, D_omega_bar, C, D):
    """(params, params_bar, g) for the t = -1 solve at given D_omega_bar."""
    d_omega, g = solve_case_one(D_omega_bar)
    params = ChargeParams(V, omega_from_coords(C, D, d_omega))
    params_bar = ChargeParams(V, omega_from_coords(C, D, D_omega_bar))
    return params, params_bar, g


def case_two_params(V, t, C, D):
    B, g = solve_case_two(t, C)
    omega = omega_from_coords(C, D, 0)
    return ChargeParams(V, omega, B), ChargeParams(V, omega), g


def case_three_params(V, u_bar, C, D):
    u, g = solve_case_three(u_bar)
    omega = omega_from_coords(C, D, 0)
    return ChargeParams(V, omega, u * C), ChargeParams(V, omega, to_fraction(u_bar) * C), g


def non_nef_image(a):
    """b = -a/(a + 1): nu + aD is carried to nu + bD, and (nu + bD).C = b < 0."""
    a = to_fraction(a)
    if a <= 0:
        raise OutOfDomain("a must be positive", clause="a>0", a=a)
    return -a / (a + 1)
