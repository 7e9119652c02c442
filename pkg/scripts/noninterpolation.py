"""Degree-based colouring bounds do not bound h: D_{r,n} has max degree 3 and a K_r minor."""

import argparse
from math import isqrt

from hadwiger.bounds import evaluate_all
from hadwiger.exact import verify_minor_witness
from hadwiger.families import build_d_r_n, d_r_n_witness
from hadwiger.graph import greedy_color, num_colors

ap = argparse.ArgumentParser(description=__doc__)
ap.add_argument("--n", type=int, nargs="+", default=[9, 16, 24, 25, 35, 36, 49, 100])
args = ap.parse_args()

print(f"{'r':>3} {'n':>4} {'h>=':>4} {'greedy':>6} {'brooks':>6} {'wp':>3} {'st_d2':>5} {'st_s':>4}")
for n in args.n:
    r = isqrt(n + 1)
    g = build_d_r_n(r, n)
    w = d_r_n_witness(r, n)
    assert verify_minor_witness(g, w)
    rep = evaluate_all(g)
    print(f"{r:>3} {n:>4} {len(w):>4} {num_colors(greedy_color(g)):>6} {rep.brooks:>6} "
          f"{rep.welsh_powell:>3} {rep.stacho_delta2:>5} {rep.stacho_s:>4}")
