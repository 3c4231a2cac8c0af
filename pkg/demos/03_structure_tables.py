"""Structure counts by inclusion-exclusion, checked against brute force."""
# %%
from pseudoknot import transforms
from pseudoknot.oracle import oracle_count

# %% 3-noncrossing structures (no 1-arcs) and restricted ones (no 1- or 2-arcs)
print("n  plain  restricted  circular")
for n in range(1, 16):
    print(f"{n:<2} {transforms.S_total(3, n):>8} {transforms.S_restricted_total(3, n):>8}"
          f" {transforms.S_circular_total(3, n):>8}")

# %% Split by number of unpaired vertices
n = 10
print([transforms.S(3, n, l) for l in range(n + 1)])

# %% Every value agrees with exhaustive enumeration of partial matchings
for kind in ("plain", "restricted", "circular"):
    assert all(transforms.count(kind, 3, n) == oracle_count(n, 3, kind) for n in range(10))
print("oracle agrees for n < 10")

# %% Exact integers, no overflow
print("S_3(100) =", transforms.S_total(3, 100))
