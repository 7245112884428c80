# # Carrying a central charge across the twist
#
# Given parameters on one side, find parameters on the other side and a
# positive GL2 factor g so that Z(ST v) = g Zbar(v) for every class v.

# %%
from fractions import Fraction

from k3stab import transport
from k3stab.lattice import IntersectionLattice

L = IntersectionLattice(["C", "D", "P", "Q"], [[-2, 1, 0, 0], [1, 0, 0, 0], [0, 0, -2, 1], [0, 0, 1, -4]])
C, D = L.basis_class("C"), L.basis_class("D")

# %% [markdown]
# Coordinates: omega = C + (2 + D_omega) D + G_omega psi with psi orthogonal to C and D.

# %%
tc = transport.coords_from_divisor(C + 5 * D + 2 * L.basis_class("P"), C, D, L)
print("D_omega =", tc.D_omega, " G_omega =", tc.G_omega, " psi =", tc.psi)

# %% [markdown]
# Case one: no B-field, t = -1.  The D-coordinate changes and g rescales Im.

# %%
for dbar in (Fraction(0), Fraction(1, 2), Fraction(3), Fraction(-1, 2)):
    params, params_bar, g = transport.case_one_params(2, dbar, C, D)
    ok = transport.verify_transport(params, params_bar, g, -1, C, L)
    d_omega = transport.solve_case_one(dbar)[0]
    print(f"D_bar = {str(dbar):>4}: D = {str(d_omega):>5}  g = {g}  verified {ok}")

# %% [markdown]
# Case two: a B-field proportional to C absorbs the twist parameter t.

# %%
for t in (-3, -1, 0, 2):
    params, params_bar, g = transport.case_two_params(2, t, C, D)
    print(f"t = {t:2d}: B = {params.B}  verified {transport.verify_transport(params, params_bar, g, t, C, L)}")

# %% [markdown]
# Case three: B = u C on both sides, with u = -u_bar.

# %%
params, params_bar, g = transport.case_three_params(2, Fraction(1, 3), C, D)
print("B =", params.B, " B_bar =", params_bar.B, " verified", transport.verify_transport(params, params_bar, g, -1, C, L))

# %% [markdown]
# A wrong g is caught exactly.  The residuals show which spanning vectors fail.

# %%
params, params_bar, _ = transport.case_one_params(2, 1, C, D)
for v, re, im in transport.transport_residuals(params, params_bar, transport.Gl2Factor.identity(), -1, C, L):
    print(f"v = {v}: residual (re, im) = ({re}, {im})")

# %% [markdown]
# nu + aD with a > 0 is carried to nu + bD, b = -a/(a+1), which meets C negatively.

# %%
for a in (Fraction(1, 10), 1, 5, 1000):
    print(f"a = {a}: b = {transport.non_nef_image(a)}")
