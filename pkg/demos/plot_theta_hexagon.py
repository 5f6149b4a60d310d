"""
The stable ball of the theta graph
==================================

Two vertices joined by three parallel edges. The cycle space is
two-dimensional and there are three geometric circuits, each giving two
oriented ones, so the unit ball is a hexagon.
"""

from stablenorm import enumerate_circuits, gen_corpus, homology_basis, stable_ball
from stablenorm.io import export_plot, format_rational

G = gen_corpus("theta")
H = homology_basis(G)
print("betti number:", H.betti, " cotree edges:", H.cotree_edges)

# %%
# Every simple oriented circuit, scaled to unit length, is a vertex.
circuits = enumerate_circuits(G)
ball = stable_ball(G, H, circuits)
for c, v in zip(ball.source_circuits, ball.vertices_basis):
    print(f"{c.signed_string():8s} length {c.length}  ->  ({', '.join(map(format_rational, v))})")

# %%
# The CSV export carries the vertex coordinates and the 1-skeleton.
csv = export_plot(G, ball)
print(csv)

# %%
# Draw it if matplotlib is around.
try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    pts = [tuple(float(x) for x in v) for v in ball.vertices_basis]
    fig, ax = plt.subplots(figsize=(4, 4))
    for line in csv.splitlines():
        if line.startswith("edge,"):
            _, i, j = line.split(",")
            (x0, y0), (x1, y1) = pts[int(i)], pts[int(j)]
            ax.plot([x0, x1], [y0, y1], "k-")
    ax.scatter(*zip(*pts))
    ax.set_aspect("equal")
    ax.set_title("theta graph, unit weights")
    fig.savefig("theta_hexagon.png", dpi=100)
    print("saved theta_hexagon.png")
