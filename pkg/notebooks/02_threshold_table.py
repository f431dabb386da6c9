"""
When does the Sturm term win?
=============================

For p >= 5 the comparison 12 gstar(p, N)**2 <= [SL_2(Z) : Gamma_0(N)]
eventually holds for every level.  compute_nhat finds the exact point past
which it never fails, and brute_nhat cross-checks it by scanning.
"""

# %%
import time

from eigendist.nhat import brute_nhat, compute_nhat, nhat_range

# %%
for p in (5, 7, 13, 19, 43):
    fast, slow = compute_nhat(p), brute_nhat(p)
    print(f"p={p:3d}  nhat={fast.nhat:6d}  candidates={fast.candidates_tested:4d}  "
          f"brute={slow.nhat:6d}  ceiling={fast.ceiling_used}")

# %% [markdown]
# Maximum of nhat over all primes below each cut-off.  The maximum for a
# cut-off is always attained at the previous cut-off.

# %%
start = time.perf_counter()
_, _, reports = nhat_range(5, 4243, jobs=4)
for below in (19, 43, 151, 199, 271, 691, 2791, 4243):
    rows = [r for r in reports if r.p < below]
    top = max(rows, key=lambda r: (r.nhat, -r.p))
    print(f"p < {below:5d}:  max nhat = {top.nhat:7d}  (attained at p = {top.p})")
print(f"{len(reports)} primes in {time.perf_counter() - start:.1f}s")
