"""Self-similarity: cognate arcs and fractal windows.

Run: python3 demos/03_fractal_and_cognates.py
"""
import numpy as np

from oriented_riordan import series as ps
from oriented_riordan.graph import skew_from_pair
from oriented_riordan.riordan import RiordanPair, a_sequence, f_from_a_sequence, pascal
from oriented_riordan.structure import a_gap, check_fractal, cognate_set, fractal_parameters

pg = pascal(3, 19)
s = skew_from_pair(pg, 19).matrix

# the top-left 10 x 10 window repeats starting at vertex 10
print(np.array_equal(s[:10, :10], s[9:, 9:]))
print(check_fractal(pg, 19, 2, 0, 1))

# arc 2 -> 1 repeats at every shift
print(sorted(cognate_set(pg, 19, 2, 1))[:6])

# an A-sequence with one zero after a_0 gives gap 1 and coarser cognate steps
order = 28
a = ps.make([1, 0, 1, -1, 1], 3, order)
f = f_from_a_sequence(a, order)
pair = RiordanPair(ps.make([1, 1, 0, -1], 3, order), f)
print("A:", a_sequence(pair, 6).tolist(), "gap:", a_gap(pair))
print(sorted(cognate_set(pair, order, 1, 6)))

results = [check_fractal(pair, order, *t) for t in fractal_parameters(3, order, a_gap(pair))]
print(len(results), "fractal windows checked, all equal:", all(results))
