"""
How many vertices can the ball have?
====================================

Distinct circuits have distinct edge supports, and each support is a
nonzero element of the cycle space over GF(2), so there are at most
2^b - 1 geometric circuits and at most 2(2^b - 1) vertices. Theta, K4 and
K3,3 reach the bound.
"""

from stablenorm import enumerate_circuits, gen_corpus, homology_basis, stable_ball

for name in ["bouquet-3", "theta", "K4", "K33", "random(1,6,9)"]:
    G = gen_corpus(name)
    H = homology_basis(G)
    ball = stable_ball(G, H, enumerate_circuits(G))
    bound = 2 * (2 ** H.betti - 1)
    print(f"{name:14s} b={H.betti}  vertices={len(ball):3d}  bound={bound}")
