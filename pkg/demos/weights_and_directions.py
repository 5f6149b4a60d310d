"""
Weights move vertices along fixed rays
======================================

Changing the weights rescales each normalized circuit but never changes
its direction, so the set of vertex rays depends only on the graph.
"""

from fractions import Fraction

from stablenorm import gen_corpus, homology_basis, stable_ball
from stablenorm.norm import vertex_directions

G = gen_corpus("K4")
for weights in ([1] * 6, [1, 2, 3, 4, 5, 6], [Fraction(1, 7), 3, 1, 9, Fraction(5, 2), 2]):
    W = G.with_weights(weights)
    ball = stable_ball(W, homology_basis(W))
    first = ball.vertices_basis[0]
    print(f"weights {[str(w) for w in W.weights]}: first vertex {[str(x) for x in first]}, "
          f"rays {sorted(vertex_directions(ball))[:3]} ...")
