"""Bell-type pairs (g, zg): i1-decomposability and closed-form last rows.

Run: python3 demos/04_bell_type.py
"""
from oriented_riordan import series as ps
from oriented_riordan.bell import bell_from_a_sequence, i1_report, last_row_formula
from oriented_riordan.graph import skew_from_pair
from oriented_riordan.riordan import catalan_pair, pascal

# Pascal passes all three tests, Catalan none
print(i1_report(pascal(3, 13), 13))
print(i1_report(catalan_pair(3, 13), 13))

# g = 1/(1+z) has A = (1, -1, 0, ...), the minus pattern, and g' = -g^2
minus = bell_from_a_sequence(ps.make([1, -1], 3, 60))
print(minus.g.tolist()[:8])
print(i1_report(minus, 20).to_json())

# last rows at n = 3^i + 1 and n = 2*3^i + 1
for n in (4, 10, 7, 19):
    print(n, "plus: ", last_row_formula(pascal(3, 60), n))
    print(n, "minus:", last_row_formula(minus, n))

# last_row_formula checks itself against the matrix; do it by hand once
print(skew_from_pair(pascal(3, 19), 19).row(19))
