# %% [markdown]
# # Does the formula restrict to the formula?
#
# Restricting the S4 centralizer formula to A4 with the Mackey formula
# gives a valid formula for A4, but not the one built directly on A4.
# The subgroup-closed cyclic recipe does commute with restriction.

# %%
from burnside_induction import named_group
from burnside_induction.induction import canonicity_check

G = named_group("S4")
A4 = next(H for H in G.all_subgroups() if H.order == 12)

# %%
rep = canonicity_check(G, "centralizers-of-cyclic", A4)
print("direct:    ", rep.direct.display())
print("restricted:", rep.restricted.display())
print("canonical: ", rep.canonical)

# %% Now every subgroup of S4 with the cyclic recipe
bad = [K.order for K in G.all_subgroups() if not canonicity_check(G, "subgroup-closed-cyclic", K).canonical]
print("non-canonical restrictions:", bad or "none")
