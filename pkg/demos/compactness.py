"""
Coloring an infinite graph layer by layer
=========================================

G1 is an infinite spine with a triangle-forming blob at every spine vertex.
A finite program only ever sees a truncation, so the extender colors layers
0..d after searching a few layers further, and keeps the prefix.
"""
from symcolor.constructive.compactness import compactness_extend
from symcolor.errors import RefutationError
from symcolor.gadgets import GadgetSpec, generate
from symcolor.graph import truncate_layers

gen = generate(GadgetSpec("g1", n=2))

# %% Odd colorings with 8 colors, certified two layers ahead
for d in (2, 5, 10):
    c = compactness_extend(gen, 8, "odd", d, lookahead=2)
    print(f"depth {d}: {len(c.vertex)} vertices, colors used {sorted(c.palette())}")

# %% Two colors cannot even be proper: the first blob closes a triangle
try:
    compactness_extend(gen, 2, "proper-vertex", 6)
except RefutationError as exc:
    t = truncate_layers(gen, exc.depth).graph
    print("refuted at depth", exc.depth, "with", t.order, "vertices")
