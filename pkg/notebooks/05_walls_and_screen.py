# # Walls, the rank bound and the semistability screen
#
# Line bundles L with c1(L) = alpha, alpha.C = 0, along the ray V nu.

# %%
from fractions import Fraction

from k3stab import walls
from k3stab.mukai import ChernCharacter, MukaiVector, mukai_from_chern
from k3stab.surface_models import build_example_rank2, read_surface, save_surface, validate_surface

m = read_surface("minimal.k3.json")
L, C, D, nu = m.lattice, m.curve_c, m.d_class, m.nu

# %% [markdown]
# A wall is where two phases agree; along V nu that equation is linear in V.

# %%
vL = mukai_from_chern(ChernCharacter(1, 2 * nu, 4))
vA = mukai_from_chern(ChernCharacter(2, 3 * D, 13))
print("wall at V =", walls.wall_value(vA, vL, nu, L).v_value)
print("same object:", walls.wall_value(vL, vL, nu, L).kind)

# %% [markdown]
# An upper bound on the rank of a destabilizing subobject.  For alpha
# proportional to nu it is identically 1.

# %%
for V in (Fraction(1, 100), 1, 100):
    print(f"V = {V}: bound {walls.rank_bound(2 * nu, nu, V, L)}")

# %% [markdown]
# On the q = 4 surface with alpha = C1 + C2 the bound rises to 3/2 as V -> 0
# and falls to 1 as V grows.  3/2 < 2, so rank two never opens.

# %%
q4 = build_example_rank2(4, 2)
alpha = q4.lattice.basis_class(0) + q4.lattice.basis_class(1)
for k in (-9, -6, -3, 0, 3, 6, 12):
    print(f"V = 1e{k:<3d} bound {float(walls.rank_bound(alpha, q4.nu, Fraction(10) ** k, q4.lattice)):.15f}")
print("supremum:", walls.rank_bound_supremum(alpha, q4.nu, q4.lattice))
print("rank-2 threshold:", walls.rank_threshold(alpha, q4.nu, 2, q4.lattice).kind)

# %% [markdown]
# When alpha^2 is small the bound does reach 2 and the threshold is an exact rational.

# %%
beta = q4.lattice.element([-1, 3])
thr = walls.rank_threshold(beta, q4.nu, 2, q4.lattice)
print("V* =", thr.value)
print("bound(V*) vs 2:", walls.rank_bound(beta, q4.nu, thr.value, q4.lattice).compare(2))
print("just above:", walls.rank_bound(beta, q4.nu, thr.value * Fraction(1001, 1000), q4.lattice).compare(2))

# %% [markdown]
# Bogomolov-Gieseker in Mukai form: <v,v> + 2 >= 0.

# %%
print("BG discriminant of (2, 3D, 15):", walls.bg_discriminant(MukaiVector(2, 3 * D, 15), L))

# %% [markdown]
# The screen.  On the q = 4 surface C2 meets C in 4 points, so only C can be
# cut away and L(-C) has strictly smaller slope.

# %%
res = walls.semistable_screen(q4, 2 * q4.nu, 6)
print(res.verdict)
cert = res.certificate
print("  generators meet C in:", [str(x) for x in cert["generator_meets_C"]])
print("  survivors:", [str(c) for c in cert["survivors"]])
print("  slope gap:", cert["slope_gap"], " from", cert["slope_gap_formula"])
print("  rank-2 threshold:", cert["rank2_threshold"].kind, " supremum", cert["rank2_threshold"].supremum)
print("  clause (c):", cert["clause_c"])
print("  assumption:", cert["assumption"])

# %% [markdown]
# A rank-3 instance where a generator meets C in exactly 2 points fails clause (a).

# %%
meet2 = read_surface("rank3-meet2.k3.json")
res = walls.semistable_screen(meet2, meet2.nu, 6)
print(res.verdict, res.failing_clauses, "survivors:", [str(c) for c in res.certificate["survivors"]])

# %% [markdown]
# Surface files keep rationals as "p/q" strings.

# %%
print(save_surface(q4))
print("valid:", validate_surface(q4) == [])
