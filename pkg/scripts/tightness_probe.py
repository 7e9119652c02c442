"""Largest h over connected graphs with given (n, m), against ek_bound."""

import argparse

from hadwiger.experiment import tightness_probe

ap = argparse.ArgumentParser(description=__doc__)
ap.add_argument("--n", type=int, nargs="+", default=[4, 5, 6])
args = ap.parse_args()

print(f"{'n':>3} {'m':>3} {'max h':>5} {'ek':>3}")
for n, m, h, ek in tightness_probe(tuple(args.n)):
    print(f"{n:>3} {m:>3} {h:>5} {ek:>3}{'' if h == ek else '  <'}")
