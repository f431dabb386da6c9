"""
Telling Delta and E_4 * Delta apart
===================================

Delta (weight 12) and E_4 Delta (weight 16) are level-one eigenforms.
Since E_4 == 1 mod 5 they agree mod 5; mod 7 the weights differ by 4,
which 6 does not divide, so they must differ at n = 3 or n = 9.
"""

# %%
from eigendist.modforms import (
    delta_qexpansion,
    distinguish_exact,
    distinguish_mod_p,
    hecke_identity_check,
    times_eisenstein,
)

delta = delta_qexpansion(130)
e4_delta = times_eisenstein(delta, 5, eigenform=True)
print("Delta    :", delta.coeffs[:8])
print("E4*Delta :", e4_delta.coeffs[:8])

# %% [markdown]
# Both satisfy a_l^2 - a_{l^2} = l^(k-1).

# %%
for ell in (2, 3, 5, 7, 11):
    print(ell, hecke_identity_check(delta, ell).ok, hecke_identity_check(e4_delta, ell).ok)

# %%
for p in (5, 7, 11, 13):
    rep = distinguish_mod_p(delta, e4_delta, p)
    print(f"p={p:2d}  {rep.outcome.value:22s} n={rep.witness_n}  residues={rep.residues}  "
          f"bound={rep.bound}  fast_path={rep.fast_path_used}")

# %%
print(distinguish_exact(delta, e4_delta))
