"""
Checking the ball without circuits
==================================

The same ball is the slice of the weighted l1 ball of chain space by the
cycle subspace. Recomputing its vertices from the 2^k sign-vector
inequalities never touches circuit enumeration, so agreement is a real
check. The norm is also recomputed as a linear program.
"""

import random
from fractions import Fraction

from stablenorm import (
    ball_by_intersection,
    gen_corpus,
    homology_basis,
    norm_by_infimum,
    stable_ball,
    stable_norm,
    verify_vertices,
)

rng = random.Random(0)
for seed in range(8):
    G = gen_corpus("random", seed=seed, vertices=rng.randint(2, 6), edges=9)
    H = homology_basis(G)
    if H.betti == 0:
        continue
    ball = stable_ball(G, H)
    oracle = ball_by_intersection(G, H)
    y = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(H.betti)]
    print(f"seed {seed}: b={H.betti} vertices={len(ball):3d} "
          f"oracle agrees={set(oracle.points) == set(ball.vertices_basis)} "
          f"certified={verify_vertices(ball).passed} "
          f"LP norm matches={norm_by_infimum(G, H, y) == stable_norm(G, H, y)}")
