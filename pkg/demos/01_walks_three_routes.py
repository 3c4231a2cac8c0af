"""Counting chamber walks three ways.

Run with ``python demos/01_walks_three_routes.py``.
"""
# %% [markdown]
# Walks in Z^(k-1) with steps 0, +-e_i that start and end at (k-1, ..., 1)
# and never leave x_1 > ... > x_{k-1} > 0.  For k = 3 these are planar walks.

# %%
from pseudoknot.core import chamber_origin
from pseudoknot.walks import (
    bessel_series,
    chamber_walk_counts,
    coefficient_counts,
    reflection_counts,
    signed_group_elements,
)

k, n_max = 3, 12
a = chamber_origin(k)

# %% Route 1: dynamic program restricted to the chamber
dp = chamber_walk_counts(k, n_max, allow_zero_steps=True)
print("chamber DP      ", dp)

# %% Route 2: unconstrained counts, signed over the 8 elements of B_2
for g, sign in signed_group_elements(k):
    print(f"  {sign:+d}  a -> {g(a)}")
refl = reflection_counts(k, n_max, a, a, allow_zero_steps=True)
print("reflection sum  ", refl)

# %% Route 3: n! [x^n] e^x det[I_{i-j}(2x) - I_{i+j}(2x)]
print("I_2(2x) =", bessel_series(2, 8))
series = coefficient_counts(k, n_max, allow_zero_steps=True)
print("Bessel series   ", series)

assert dp == refl == series

# %% Without zero steps only even lengths survive
print("no zero steps   ", chamber_walk_counts(k, n_max, allow_zero_steps=False))
