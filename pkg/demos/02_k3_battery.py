# %% [markdown]
# # Betti-number constraints on a K3 surface
#
# The K3 diamond is mirror symmetric and of non-pure type, so every bound is
# strict and the Salamon residual vanishes.

# %%
from chiy import ChernNumbers, HodgeDiamond, Tier, betti_from_diamond, validate
from chiy.constraints import (
    c1cn1_lower_bound,
    c2cn2_lower_bound,
    calabi_yau_residual,
    check_c1cn1,
    check_c2cn2,
    minus_one_consistency,
    salamon_residual,
)
from chiy.hodge import chi_profile, f_moment, h_moment

# %%
k3 = HodgeDiamond.from_rows([[1, 0, 1], [0, 20, 0], [1, 0, 1]])
print(k3)
print("mirror-valid:", validate(k3, Tier.MIRROR) == [])
b = betti_from_diamond(k3)
print("betti:", tuple(b))
print("chi^p:", chi_profile(k3)[0])

# %% [markdown]
# Moments of the diamond: f(2) = 2 h(p^2) + 2 h(pq).

# %%
print(f_moment(b, 2), "=", 2 * h_moment(k3, (2, 0)), "+", 2 * h_moment(k3, (1, 1)))

# %%
chern = ChernNumbers(2, {(1, 1): 0, (2,): 24})
for rep in minus_one_consistency(k3, chern):
    print(rep)

# %%
print("salamon residual:", salamon_residual(b, 2))
print("c1c1 bound:", c1cn1_lower_bound(b, 2), "->", check_c1cn1(b, 2, 0, k3).status.value)
print("Calabi-Yau residual:", calabi_yau_residual(b, 2))
print("c2 bound:", c2cn2_lower_bound(b, 2), "->", check_c2cn2(b, 2, 24).status.value)

# %% [markdown]
# Varying b_2 in (1, 0, b, 0, 1) moves the c_2 bound linearly.

# %%
from chiy.hodge import BettiVector

for b2 in (0, 10, 22, 30):
    print(b2, c2cn2_lower_bound(BettiVector((1, 0, b2, 0, 1)), 2))
