"""
Wreath products and the generating series
=========================================

chi^(k)(X^n, G wr S_n) computed type by type, compared with the infinite
product built from chi^(k)(X, G) alone.
"""

# %%
from orbieuler.group_core import build_group
from orbieuler.gspace import natural_gset, regular_gset
from orbieuler.orbifold import chi_k
from orbieuler.series import lhs_series, rhs_series, weight
from orbieuler.wreath import enumerate_types, type_class_data, wreath_group

Z2 = build_group("Z_2")

# %%
# conjugacy classes of Z_2 wr S_2 (the dihedral group of order 8) from types
W = wreath_group(Z2, 2)
for tau in enumerate_types(Z2, 2):
    print(f"{str(tau):22s} class size, centralizer = {type_class_data(Z2, 2, tau)}")
print("brute-force class sizes:", sorted(c.size for c in W.classes))

# %%
# two points swapped by Z_2: the coefficients are partition numbers
swap = regular_gset(Z2)
print(lhs_series(swap, 1, 8).tolist())
print(rhs_series(1, chi_k(swap, 1), 8).tolist())

# %%
# S_3 on three letters, order 2
X = natural_gset(build_group("S_3"))
E = chi_k(X, 2)
print("chi^(2) =", E)
print(lhs_series(X, 2, 5).tolist())
print(rhs_series(2, E, 5).tolist())

# %%
# exponents of the product, grouped by degree; at k = 2 they are divisor sums
for k in range(4):
    print(k, [weight(k, m) for m in range(1, 11)])
