"""From a diagram to an oscillating tableau to a walk, and back."""
# %%
from pseudoknot.bijection import (
    crossing_number,
    diagram_to_walk,
    diagram_trace,
    format_walk,
    walk_to_diagram,
)
from pseudoknot.core import Diagram

# %% A 3-crossing on six vertices plus two isolated points
d = Diagram(8, ((1, 5), (2, 6), (3, 7)))
print("crossing number:", crossing_number(d))

# %% The tableaux are built right to left: termini insert their origins
trace = diagram_trace(d)
for i, t in enumerate(trace.tableaux):
    print(f"T_{i}: {t}")

# %% A 3-crossing needs k = 4, i.e. walks in Z^3
w = diagram_to_walk(4, d)
print("walk:", format_walk(w))
for p in w.positions():
    print("  ", p)

# %% Reading the walk left to right recovers every arc by reverse bumping
assert walk_to_diagram(w) == d
print("round trip ok")

# %% With k = 3 the diagram is outside the domain
try:
    diagram_to_walk(3, d)
except ValueError as exc:
    print("k=3:", exc)
