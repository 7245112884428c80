# # Central charges, phases and the kernel
#
# Z(E) = -ch2^B + V ch0^B + i nu.ch1^B, evaluated exactly.

# %%
from fractions import Fraction

from k3stab import charge
from k3stab.mukai import ChernCharacter, curve_sheaf, skyscraper
from k3stab.surface_models import read_surface

s = read_surface("minimal.k3.json")
L, C, D, nu = s.lattice, s.curve_c, s.d_class, s.nu

p = charge.ChargeParams(3, nu)
for name, obj in [("O_X", ChernCharacter(1, C * 0, 0)), ("O_p", skyscraper(2)), ("O_C(-1)", curve_sheaf(C, -1))]:
    print(f"Z({name}) =", charge.central_charge(p, obj, L))

# %% [markdown]
# O_C(-1) sits in the kernel because nu.C = 0.  Its phase is undefined
# until a kernel rule is chosen; both regimes assign 1/2.

# %%
print("in kernel:", charge.kernel_contains(p, curve_sheaf(C, -1), L))
print("phase with rule b:", charge.phase(p, curve_sheaf(C, -1), L, charge.kernel_rule("b")))
try:
    charge.phase(p, curve_sheaf(C, -1), L)
except charge.KernelPhaseUndefined as exc:
    print("without a rule:", exc.to_record()["code"])

# %% [markdown]
# Deform nu in the direction omega.  The charge of O_C(-1) becomes i eps omega.C.

# %%
omega = C + 3 * D
for eps in (Fraction(1, 2), Fraction(1, 10), Fraction(1, 1000)):
    z = charge.central_charge(charge.ChargeParams(3, nu + eps * omega), curve_sheaf(C, -1), L)
    print(f"eps = {eps}: Z = {z}")

# %% [markdown]
# Adding a B-field u C as well, the phase of O_C(-1) depends only on u/eps.
# limit_phase takes that ratio with the sign convention p = -u/eps.

# %%
for ratio in (-10, -1, 0, 1, 10, 1000):
    print(f"p = {ratio:5}: phase = {charge.limit_phase(ratio, L.pair(omega, C))}")

# %% [markdown]
# Slopes are exact rationals; phase is a float except at 1/2 and 1.

# %%
ch = ChernCharacter(2, C + 3 * D, Fraction(1, 2))
z = charge.central_charge(p, ch, L)
print("Z =", z, " slope =", charge.slope_of(z), " phase =", charge.phase_of(z))
