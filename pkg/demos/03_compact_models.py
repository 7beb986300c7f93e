"""
Circle and O(2) actions
=======================

For S^1 and O(2) the class sum becomes an integral over the space of
conjugacy classes with respect to the compactly supported Euler
characteristic.
"""

# %%
from orbieuler import euler_calc as ec
from orbieuler.lie_models import (O2, check_paper_examples, chi_k_model, class_space, integrand,
                                  parse_model)

print("chi_c of the O(2) class space:", ec.euler_char(class_space(O2)))

# %%
for text in ("S1/Z_3", "S1/S1", "O2/Z_4", "O2/Z_5"):
    print(text, [chi_k_model(parse_model(text), k) for k in range(5)])

# %%
# the integrand for O(2)/Z_4 at order 1, stratum by stratum
f = integrand(parse_model("O2/Z_4"), 1)
for s, v in f.pieces:
    print(f"{s.component:4s} {s.kind:9s} {str(s.lo):>4s}..{str(s.hi):<4s} chi_c={s.chi_c:+d} value={v}")
print("integral:", ec.integrate(f))

# %%
# O(2)/SO(2): the interior rotation classes see two points under SO(2),
# which cancels the two endpoint contributions
for r in check_paper_examples(1, 3):
    if r.model == "O2/SO2":
        print(r.k, "computed", r.computed, "closed form", r.reference, "flagged" if r.known_deviation else "")
