"""
Prime primitive roots and the coefficient bound
===============================================

How many Fourier coefficients must two eigenforms share mod p before they
are congruent?  The answer is the larger of gstar(p, N)**2 and a Sturm
bound.  This script walks through both terms.
"""

# %%
from eigendist.bounds import gamma0_index, main_bound, murty_bound, sturm_bound
from eigendist.primroots import gstar, worst_case_sequence

# %% [markdown]
# The prime primitive roots mod 5 are the primes congruent to 2 or 3 mod 5.
# Multiplying them together gives the levels that push gstar up fastest.

# %%
seq = worst_case_sequence(5, 6)
for t, (x, N) in enumerate(zip(seq.xs, seq.Ns), 1):
    print(f"t={t}  x_t={x:3d}  N_t={N:8d}  gstar(5, N_t)={gstar(5, N)}")

# %% [markdown]
# Level 6 kills both 2 and 3, so the least usable prime is 7.

# %%
print("gstar(5, 6) =", gstar(5, 6))
print("index of Gamma_0(15) =", gamma0_index(15))
print("Sturm bound, weight 2, level 11 =", sturm_bound(2, 11))
print("Murty bound at level 6 =", murty_bound(6))

# %% [markdown]
# The combined bound, including the level adjustments for p = 2 and 3.

# %%
for p, N, k in [(5, 1, 12), (3, 9, 12), (2, 3, 2), (11, 210, 24)]:
    b = main_bound(p, N, k)
    print(f"p={p:2d} N={N:4d} k2={k:2d}  case={b.table_case.value:14s} "
          f"level->{b.adjusted_level:4d}  gstar^2={b.gstar_term:4d}  sturm={str(b.sturm_term):>6s}  "
          f"bound={b.selected}")
