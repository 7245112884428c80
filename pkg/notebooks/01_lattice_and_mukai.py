# # Lattices, Mukai vectors and the pairing
#
# Everything is exact: coordinates are Fractions and the Gram matrix is integral.

# %%
from fractions import Fraction

from k3stab import lattice, mukai

# The smallest lattice carrying the data we need: a (-2)-curve C and a class D
# with D.C = 1, D^2 = 0.
L = lattice.IntersectionLattice(["C", "D"], [[-2, 1], [1, 0]])
C, D = L.basis_class("C"), L.basis_class("D")
nu = C + 2 * D
print("C^2 =", L.pair(C, C), " nu^2 =", L.pair(nu, nu), " nu.C =", L.pair(nu, C))

# %% [markdown]
# Splitting a class into its part in span(C, D) and the orthogonal remainder.
# With only two basis vectors the remainder is always zero, so use a bigger lattice.

# %%
L4 = lattice.IntersectionLattice(
    ["C", "D", "P", "Q"],
    [[-2, 1, 0, 0], [1, 0, 0, 0], [0, 0, -2, 1], [0, 0, 1, -4]],
)
a = L4.element([1, Fraction(5, 2), 3, -1])
span, orth = lattice.decompose_cd(a, L4.basis_class("C"), L4.basis_class("D"), L4)
print("span part:", span, "  orthogonal part:", orth)

# %% [markdown]
# Effective classes of bounded height, listed in a fixed order.

# %%
for cls in lattice.enumerate_cone_classes([C, D], 2):
    print(cls)
print("count for 3 generators, height 4:", lattice.simplex_point_count(3, 4))

# %% [markdown]
# Mukai vectors v = (r, c1, ch2 + r).  O_C(t) is spherical for every t.

# %%
for t in (-2, -1, 0, 3):
    v = mukai.curve_sheaf(C, t)
    print(f"v(O_C({t})) = {v}   <v,v> = {mukai.mukai_pairing(v, v, L)}")
print("chi(O_X, O_p) =", mukai.euler_chi(mukai.structure_sheaf(2), mukai.skyscraper(2), L))

# %% [markdown]
# hom, ext1, ext2 between line bundles on C = P^1.

# %%
print(" i  hom ext1 ext2   for Hom(O_C(i), O_C(-1))")
for i in range(-2, 6):
    print(f"{i:2d}", *(f"{x:4d}" for x in mukai.hom_ext_on_c(i, -1)))
