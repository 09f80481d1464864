# %% [markdown]
# # Series Euler characteristic
#
# The generating function of nondegenerate chains is rational, and its
# value at -1 recovers the Euler characteristic when the category has
# only invertible endomorphisms.

# %%
from burnside_induction.decomposition import fusion_category, orbit_category
from burnside_induction.fincat import euler_char, nerve_count, one_object, series_euler, series_generating
from burnside_induction import named_group
from burnside_induction.induction import cyclic_subgroups

# %% One object with n morphisms
for n in (1, 2, 6, 24):
    print(n, series_euler(one_object(n)))

# %% Chains in the orbit category of cyclic subgroups of S4
C = orbit_category(cyclic_subgroups(named_group("S4")))
f = series_generating(C)
print([int(c) for c in f.taylor(6)])
print([nerve_count(C, k) for k in range(7)])
print("series:", series_euler(C), " weighting:", euler_char(C))

# %% Same for the fusion side
D = fusion_category(cyclic_subgroups(named_group("D8")))
print("series:", series_euler(D), " weighting:", euler_char(D))
