"""Explicit relations of low degree that certify the failure of the WLP."""

from wlpci.constructions import high_n_witness, relation_2k_minus_1, verify_non_koszul
from wlpci.lefschetz import E
from wlpci.syzygy import verify_syzygy

# the degree 2k-1 relation for (k:4) built from two polynomials g and h
eta = relation_2k_minus_1(5, 2)
print("(2:4) over F_5:", eta.format(), "degree", eta.total_degree)

# above the threshold in five or more variables, each failing case gets a relation below E
for p, n, d in [(3, 5, 4), (5, 5, 7), (5, 6, 6), (2, 7, 3), (3, 8, 5)]:
    choice = high_n_witness(p, n, d)
    rel = choice.relation
    assert verify_syzygy(rel) and verify_non_koszul(rel)
    print(f"p={p} n={n} d={d}: case {choice.case} via {choice.method} {choice.params},"
          f" degree {rel.total_degree} < E = {E(n, (d,) * n)}")
