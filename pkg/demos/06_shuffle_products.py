"""Shuffle products for the three preset kernels, and their relation checks."""

from yangianpp import Kernel, Params, SymPoly, shuffle_mul
from yangianpp.shuffle import check_a1_anticomm, check_assoc, check_c3_ee, check_jordan_ee

params = Params.make(101, 47, 7)  # integer draw keeps coefficients plain ints

print("arrowless kernel: x^0 * x^1 =", dict(shuffle_mul(SymPoly.power(0), SymPoly.power(1), Kernel.a1()).poly.terms))

c3 = Kernel.c3(params)
prod = shuffle_mul(SymPoly.power(0), SymPoly.power(0), c3)
print("three-loop kernel: 1 * 1 =", dict(sorted(prod.poly.terms.items())))
print("  (= 2(x1-x2)^2 + 2*sigma2, sigma2 =", params.sigma2, ")")

for report in (
    check_a1_anticomm(5),
    check_c3_ee(params, imax=2),
    check_jordan_ee(5),
    check_assoc(c3, trials=10),
):
    print(f"{report.relation:18s} {report.status:5s} domain={report.domain:3d} {report.detail}")
