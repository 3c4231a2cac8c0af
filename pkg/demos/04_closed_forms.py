"""Closed forms and recursions for k = 2 and k = 3."""
# %%
from pseudoknot import transforms
from pseudoknot.closedforms import (
    s2_recursion_check,
    s2_waterman,
    s3_closed,
    s3_recursion_check,
    s3_recursion_coefficients,
)

# %% Secondary structures with l unpaired vertices: closed form vs inclusion-exclusion
n = 12
print([s2_waterman(n, l) for l in range(n + 1)])
print([transforms.S(2, n, l) for l in range(n + 1)])

# %% k = 3: a single alternating sum of Catalan products
print([s3_closed(n, l) for l in range(n + 1)])

# %% Both recursions hold exactly
assert all(s2_recursion_check(m, l) for m in range(4, 41) for l in range(m % 2, m - 1, 2))
assert all(s3_recursion_check(m, l) for m in range(7, 31) for l in range(m % 2, m + 1, 2))
print("doubled coefficients at (n, l) = (20, 4):", s3_recursion_coefficients(20, 4))
