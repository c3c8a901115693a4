"""How many oriented Riordan graphs are there, and which small graphs are not one?

Run: python3 demos/02_counting_and_classification.py   (about a second)
"""
from oriented_riordan.classify import classify_up_to, is_riordan_graph, kn1_orientations
from oriented_riordan.graph import OrientedGraph, count_formula, enumerate_all

# distinct skew matrices against (p^(2(n-1)) + p) / (p + 1)
for n in range(1, 7):
    print(n, len(enumerate_all(n, 3)), count_formula(n, 3))
print("p=5, n=3:", len(enumerate_all(3, 5)), count_formula(3, 5))

# all 52 oriented graphs of order <= 4 up to isomorphism; only one is not Riordan
classes = classify_up_to(4)
bad = [c for c in classes if not c.is_riordan]
print(len(classes), "classes,", len(bad), "not Riordan:", bad[0].arcs())

# a Riordan graph comes back with a witness: a relabelling and a generating pair
res = is_riordan_graph(OrientedGraph.from_arcs(4, [(2, 1), (3, 1), (4, 1), (3, 2)]), 3)
print(res)

# no orientation of K_4 plus an isolated vertex is Riordan
verdicts = [is_riordan_graph(g, 3).is_riordan for g in kn1_orientations(5)]
print(len(verdicts), "orientations, Riordan:", sum(verdicts))
