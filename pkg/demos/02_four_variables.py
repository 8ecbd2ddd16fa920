"""Which (d:4) have the WLP in characteristic p, by rank and by the arithmetic rule."""

from wlpci.classify import classify, cond_decompose
from wlpci.lefschetz import wlp_bruteforce

for p in (3, 5):
    rows = []
    for d in range(1, 11):
        v = wlp_bruteforce(p, 4, (d,) * 4)
        dec = cond_decompose(p, d)
        assert v.has_wlp == (dec is not None) == classify(p, 4, d).has_wlp
        rows.append(d if v.has_wlp else ".")
    print(f"p={p}: {rows}")

# a failing case carries its kernel element
v = wlp_bruteforce(3, 4, (3, 3, 3, 3))
print("p=3, d=3:", v.decision.value, "kernel element", v.witness.poly.format(signed=True),
      "in degree", v.witness.source_degree)
