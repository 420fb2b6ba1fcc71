# %% [markdown]
# # Hamiltonian torus actions with isolated fixed points
#
# Each fixed point contributes (-y)^d to chi_y and y^(2d) to the Poincare
# polynomial, where d counts negative weights.

# %%
from chiy import ChernNumbers, FixedPointData, hamiltonian_obstruction_report
from chiy.localization import is_realizable, localized_chi_y, localized_poincare

# %% [markdown]
# The standard action on the projective plane.

# %%
p2 = FixedPointData.from_weights(2, [(1, 2), (-1, 1), (-2, -1)])
print(localized_chi_y(p2), "|", localized_poincare(p2))
for rep in hamiltonian_obstruction_report(p2, chern=ChernNumbers(2, {(1, 1): 9, (2,): 3})):
    print(rep)

# %% [markdown]
# A product of two spheres, given by indices only.

# %%
s2s2 = FixedPointData.from_indices(2, [0, 1, 1, 2])
reports = hamiltonian_obstruction_report(s2s2, chern=ChernNumbers(2, {(1, 1): 8, (2,): 4}))
print("realizable:", is_realizable(reports))

# %% [markdown]
# An unbalanced index set breaks the duality of chi_y.

# %%
bad = FixedPointData.from_indices(1, [0, 0, 1])
for rep in hamiltonian_obstruction_report(bad):
    print(rep)
