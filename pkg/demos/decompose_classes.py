"""
Integral classes as sums of circuits
====================================

Any integral class splits into simple circuits that never run through an
edge in opposite directions, and then the lengths add up to the norm.
"""

from stablenorm import decompose_class, gen_corpus, homology_basis, merge_circuits, stable_norm
from stablenorm.circuits import canonicalize

G = gen_corpus("K4")
H = homology_basis(G)
for a in ([2, 0, 0], [1, -1, 1], [3, 2, -4]):
    d = decompose_class(G, H, a)
    parts = " + ".join(f"{m} x [{c.signed_string()}]" for c, m in zip(d.circuits, d.multiplicities))
    print(f"class {a}: norm {stable_norm(G, H, a)} = {d.total_length()}   {parts}")

# %%
# Merging two theta circuits that share an edge in opposite directions
# cancels that edge.
T = gen_corpus("theta")
c1 = canonicalize(T, [(0, 1), (1, -1)])
c2 = canonicalize(T, [(1, 1), (2, -1)])
print([c.signed_string() for c in merge_circuits(T, c1, c2)])
