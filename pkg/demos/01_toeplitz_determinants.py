"""Binomial Toeplitz determinants three ways, and their p-adic orders."""

from wlpci.classify import cond_decompose
from wlpci.exactarith import padic_order
from wlpci.toeplitz import build_matrix, ToeplitzSpec, det_direct, det_roberts, valuation_by_counting

# the 2x2 matrix with entries binomial(4, 2 + i - j)
print(build_matrix(ToeplitzSpec.square(4, 2, 2)))
print("Bareiss:", det_direct(4, 2, 2), " product formula:", det_roberts(4, 2, 2))

# v_3 of det M(d, c, c, c), counted from factors and read off the integer
p = 3
for d in range(1, 9):
    row = []
    for c in range(1, d + 1):
        counted, _ = valuation_by_counting(d, c, p)
        assert counted == padic_order(det_direct(d, c, c), p)
        row.append(counted)
    tag = "decomposable" if cond_decompose(p, d) else ""
    print(f"d={d}: orders {row} {tag}")
# decomposable d give order 0 for every c, which is what keeps x1+..+x4 injective
