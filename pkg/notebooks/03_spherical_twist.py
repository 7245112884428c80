# # The spherical twist along O_C(t)
#
# On Mukai vectors the twist is the reflection v -> v + <v_S, v> v_S.

# %%
from k3stab import twist
from k3stab.mukai import MukaiVector, mukai_pairing, skyscraper, structure_sheaf
from k3stab.surface_models import read_surface

s = read_surface("minimal.k3.json")
L, C, D = s.lattice, s.curve_c, s.d_class

tw = twist.TwistParams.along_curve(C, -1)
for name, v in [("O_C(-1)", MukaiVector(0, C, 0)), ("O_X", structure_sheaf(2)), ("O_p", skyscraper(2))]:
    print(f"ST v({name}) = {twist.twist_mukai(v, tw, L)}")

# %% [markdown]
# It is an isometry and squares to the identity on classes.

# %%
v, w = MukaiVector(2, 3 * C + D, 5), MukaiVector(-1, C - 4 * D, 2)
tv, tww = twist.twist_mukai(v, tw, L), twist.twist_mukai(w, tw, L)
print("<v,w> =", mukai_pairing(v, w, L), "  <Tv,Tw> =", mukai_pairing(tv, tww, L))
print("T(Tv) == v:", twist.twist_mukai(tv, tw, L) == v)

# %% [markdown]
# The same map written in the invariants (n, c1.C, c1.D, s).

# %%
for t in (-2, -1, 0, 2):
    tv = twist.twist_mukai(v, twist.TwistParams.along_curve(C, t), L)
    direct = (tv.r, L.pair(tv.c1, C), L.pair(tv.c1, D), tv.s)
    formula = twist.twist_invariants(v.r, L.pair(v.c1, C), L.pair(v.c1, D), v.s, t)
    print(f"t={t:2d}  reflection {tuple(map(str, direct))}  formula {tuple(map(str, formula))}")

# %% [markdown]
# Skyscrapers: off C nothing happens; on C the image is a two-term complex of
# line bundles on C whose classes still add up to v(O_p).

# %%
for t in (-1, 0, 2):
    for direction in ("forward", "inverse"):
        table = twist.skyscraper_twist(True, t, direction)
        terms = ", ".join(f"H^{k} = {lab}" for k, lab in sorted(table.items()))
        print(f"t={t:2d} {direction:8s} {terms}   alternating sum {twist.alternating_mukai(table, C)}")
print("off C:", {k: str(lab) for k, lab in twist.skyscraper_twist(False, 0).items()})
