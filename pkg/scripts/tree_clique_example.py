"""The 8-vertex tree-clique graph: h = 4 exceeds the improved bound of 3."""

from hadwiger.bounds import ek_bound, improved_bound
from hadwiger.exact import hadwiger_witness, has_acyclic_contraction_to_clique
from hadwiger.families import build_figure_1a

g = build_figure_1a()
witness = hadwiger_witness(g)
print(f"n={g.n} m={g.m}")
print(f"h={len(witness)} via {witness.sorted_classes()}")
print(f"ek_bound={ek_bound(g.n, g.m)} improved_bound={improved_bound(g.n, g.m)}")
print(f"acyclic contraction to K4: {has_acyclic_contraction_to_clique(g, 4)}")
