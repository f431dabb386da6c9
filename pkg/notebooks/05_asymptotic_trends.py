"""
Watching the limits converge (slowly)
=====================================

x_t ~ c t log t with c = (p - 1)/phi(p - 1), gstar(p, N_t)/log N_t -> c,
and the Gamma_0 index over primorials approaches 6 e^gamma / pi^2.
"""

# %%
from eigendist.experiments import asymp_gstar_table, asymp_xt_table, index_ratio_table

xt = asymp_xt_table(5, 10 ** 4)
for t in (10, 100, 1000, 10 ** 4):
    r = xt.row(t)
    print(f"t={t:6d}  x_t={r.observed:>8}  ratio={r.ratio:.6f}")

# %%
gs = asymp_gstar_table(5, 3000)
for t in (1, 10, 100, 1000, 3000):
    print(f"t={t:5d}  x_(t+1)/log N_t = {gs.row(t).observed:.6f}")

# %%
print(index_ratio_table(15).to_csv())
