"""Build the raising/lowering operators and verify the relation suite.

The commutator [e_i, f_j] must be diagonal with eigenvalues read off the
diagonal rational series h(z); the quadratic and Serre relations must vanish
as exact zero matrices on every level the truncation can see.
"""

from fractions import Fraction as F

from yangianpp import Geometry, Params, Representation
from yangianpp.relations import run_suite

params = Params.make(F(101, 13), F(47, 7), F(7))

print("== 3D partitions, five levels ==")
g = Geometry("c3", params, 5)
rep = Representation(g)
print("basis sizes:", [len(L) for L in rep.basis.levels])

e0, f0 = rep.build_e(0), rep.build_f(0)
print("e_0 level-0 block:", e0.blocks[0])
comm = e0.commutator(f0)
print("[e_0,f_0] on the vacuum:", comm.entry(0, 0, 0))

reports, shift = run_suite(g, imax=2)
for r in reports:
    print(f"  {r.relation:15s} {r.status:6s} domain={r.domain:4d} {r.detail}")
print("shift factor:", shift)

print("\n== resolved conifold, m=3, sector 1 ==")
reports, shift = run_suite(Geometry("conifold", params, 3, m=3, sector=1), imax=2)
for r in reports:
    print(f"  {r.relation:15s} {r.status:12s} domain={r.domain:4d} {r.detail}")
print("shift factor:", shift, " (z1 = chi + 3t =", params.chi + 3 * params.t, ")")
