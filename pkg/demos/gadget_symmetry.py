"""
Symmetry of the spine-and-blob gadget
=====================================

The gadget G is a path (the spine) with a pendant blob of n leaves hanging
off each spine vertex t_i. The only symmetries are the permutations inside
each blob, so with blob size 2 and N+1 blobs the group has 2^(N+1) elements
and fixes the spine pointwise.
"""
from symcolor.autgroup import enumerate_automorphisms, fixed_vertices, orbits
from symcolor.colorings import Notion, verify_distinguishing, verify_structural, vertex_coloring
from symcolor.gadgets import GadgetSpec, blob_partition, realize, spine
from symcolor.solvers import compute_parameter

# %% Build the gadget with four blobs and look at it
g = realize(GadgetSpec("g", n=2, horizon=4))
print("order", g.order, "max degree", g.max_degree)
print("spine", [g.labels[v] for v in spine(g)])

# %% The automorphism group
auts = enumerate_automorphisms(g)
print("|Aut| =", len(auts))
print("fixed vertices are the spine:", fixed_vertices(auts) == set(spine(g)))
for orb in orbits(auts):
    if len(orb) > 1:
        print("  blob orbit", sorted(g.labels[v] for v in orb))

# %% Breaking the symmetry
# Color the spine alternately 0, 1 and give the two leaves of each blob the
# two colors their hub does not use. Leaves only touch their hub, so this is
# proper, and no swap inside a blob preserves it.
col = {v: i % 2 for i, v in enumerate(spine(g))}
for blob in blob_partition(g):
    hub = g.adjacency[blob[0]][0]
    col[blob[0]], col[blob[1]] = sorted({0, 1, 2} - {col[hub]})
c = vertex_coloring(col)
print("proper:", verify_structural(g, c, Notion.PROPER_VERTEX).valid)
print("distinguishing:", verify_distinguishing(g, c, auts).valid)

# %% Exact values for comparison
for tag in ("chi", "d", "chi-d"):
    print(tag, compute_parameter(g, tag, auts=auts).value)
