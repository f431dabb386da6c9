"""
Explicit prime-in-progression bounds, checked numerically
=========================================================

Under GRH every progression a mod q contains a prime below
1.56 (q log q)^2.  We cannot prove that here, but we can look.
"""

# %%
import math

from eigendist.arith import count_primes_in_ap, least_prime_in_ap
from eigendist.bounds import bs_refined_bound, ceil_decimal, dist_lower_bound, lemma_ap_threshold

# %%
worst = (0.0, None)
for q in range(3, 301):
    cap = ceil_decimal(bs_refined_bound(q))
    for a in range(1, q):
        if math.gcd(a, q) == 1:
            ell = least_prime_in_ap(a, q, cap)
            worst = max(worst, (ell / cap, (a, q, ell, cap)))
print("largest least-prime / bound ratio:", round(worst[0], 4), "at (a, q, prime, bound) =", worst[1])

# %% [markdown]
# Counting version: past 6.24 q^4 (log q)^2 each class holds more than x^(1/9) primes.

# %%
for q in (5, 7):
    X = ceil_decimal(lemma_ap_threshold(q))
    counts = [count_primes_in_ap(a, q, X) for a in range(1, q)]
    print(f"q={q}  x={X}  x^(1/9)={X ** (1 / 9):.3f}  counts={counts}")

# %%
x, c = dist_lower_bound(5, 2)
print(f"pi_(a,5)({x:.2f}) >= {c}:", [count_primes_in_ap(a, 5, x) for a in range(1, 5)])
