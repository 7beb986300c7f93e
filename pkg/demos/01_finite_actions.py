"""
Higher-order Euler characteristics of finite group actions
==========================================================

Three ways of computing chi^(k)(X, G) for a finite group acting on a finite
set, checked against each other on a few small actions.
"""

# %%
from orbieuler.group_core import build_group, conjugacy_classes
from orbieuler.gspace import disjoint_union, natural_gset, orbit_count, regular_gset, trivial_gset
from orbieuler.orbifold import chi_k, chi_k_by_orbit_types, chi_k_oracle, commuting_tuple_sum

S3 = build_group("S_3")
print("S_3 class sizes:", [c.size for c in conjugacy_classes(S3)])

# %%
# S_3 permuting three letters, plus one fixed point
X = disjoint_union(natural_gset(S3), trivial_gset(S3, 1))
print("points:", X.size, "orbits:", orbit_count(X))

# %%
# recursion over classes, commuting tuples, orbit types
for k in range(1, 4):
    print(k, chi_k(X, k), chi_k_oracle(X, k), chi_k_by_orbit_types(X, k))

# %%
# the raw tuple sum is always a multiple of |G|
print(commuting_tuple_sum(X, 2), "=", S3.order, "*", commuting_tuple_sum(X, 2) // S3.order)

# %%
# on a point, chi^(k) counts commuting (k+1)-tuples up to simultaneous conjugation
for name in ("Z_4", "Q_8", "D_4", "S_4"):
    G = build_group(name)
    print(name, [chi_k(trivial_gset(G, 1), k) for k in range(4)])

# %%
# a free action contributes one orbit and nothing else
print([chi_k(regular_gset(build_group("Q_8")), k) for k in range(4)])
