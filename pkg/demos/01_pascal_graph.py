"""Build the oriented Pascal graph of order 13 and take it apart.

Run: python3 demos/01_pascal_graph.py
"""
import numpy as np

from oriented_riordan import series as ps
from oriented_riordan.graph import format_text, graph_from_skew, skew_from_pair
from oriented_riordan.riordan import a_sequence, leading_matrix, pascal
from oriented_riordan.structure import decompose

n = 13
pair = pascal(3, n)  # (1/(1-z), z/(1-z)) over Z_3

# the Riordan matrix is Pascal's triangle mod 3, written with residues -1, 0, 1
print(leading_matrix(pair, 6))

# the graph: s[i, j] = [z^(i-2)] g f^(j-1) below the diagonal, minus its transpose
s = skew_from_pair(pair, n)
print(format_text(s))
print("arcs:", len(graph_from_skew(s).arcs))

# every later row is rebuilt from the previous one with the A-sequence
print("A-sequence:", a_sequence(pair, 6).tolist())

# one cube of the geometric series is the geometric series in z^3
g = ps.pascal_g(3, 12)
print("(1/(1-z))^3 =", ps.power(g, 3).tolist())

# grouping vertices by residue mod 3 turns S into a 3 x 3 block matrix
dec = decompose(pair, n)
print("parts:", dec.parts)
print(dec.block_matrix())
print("B_12 =\n", dec.off_blocks[(1, 2)])
print("blocks agree with the sieve formulas:", dec.formula_matches_direct)

# V_2 and V_3 are null, V_1 is PG_5 again
x1, x2, x3 = dec.diag_blocks
print(x2.is_null(), x3.is_null(), np.array_equal(x1.matrix, skew_from_pair(pascal(3, 5), 5).matrix))
