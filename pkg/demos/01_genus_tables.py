# %% [markdown]
# # chi_y in Chern numbers
#
# Expand the chi_y-genus of an n-dimensional almost-complex manifold into
# Chern numbers, re-expand around y = -1, and read off the moments h(p^m).

# %%
from fractions import Fraction

from chiy import (
    ChernNumbers,
    chern_power_moments,
    evaluate_genus,
    hrr_genus_formula,
    taylor_at_minus_one,
)

# %%
for n in range(4):
    print(f"n={n}: chi_y = {hrr_genus_formula(n)}")

# %% [markdown]
# The Taylor coefficients a_i at y = -1. The first two are always c_n and
# -(n/2) c_n; a_2 brings in c_1 c_{n-1}.

# %%
for i, a in enumerate(taylor_at_minus_one(6, 4)):
    print(f"a_{i} = {a}")

# %%
for m, h in enumerate(chern_power_moments(6, 4)):
    print(f"h(p^{m}) = {h}")

# %% [markdown]
# Plugging in the Chern numbers of the projective plane gives 1 - y + y^2.
# At y = 0 this is the Todd genus, at y = 1 the signature, at y = -1 the
# Euler number.

# %%
p2 = ChernNumbers(2, {(1, 1): 9, (2,): 3})
chi = evaluate_genus(hrr_genus_formula(2), p2)
print(chi)
print({y: chi.evaluate(Fraction(y)) for y in (0, 1, -1)})
