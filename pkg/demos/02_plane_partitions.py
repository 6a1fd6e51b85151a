"""3D plane partitions: the fixed-point basis on the Hilbert-scheme side."""

from fractions import Fraction as F

from yangianpp import Params, box_weight, enumerate_plane_partitions

levels = enumerate_plane_partitions(6)
print("plane partitions by box count:", [len(L) for L in levels])

lam = levels[3][0]
print("\na 3-box partition:", lam)
print("addible boxes:  ", lam.addible_boxes())
print("removable boxes:", lam.removable_boxes())

params = Params.make(F(101, 13), F(47, 7), F(7))
print("\nequivariant weights (chi + i*h1 + j*h2 + k*h3):")
for b in lam:
    print(f"  {b} -> {box_weight(b, params)}")
print("note: (1,1,1) would weigh", box_weight((1, 1, 1), params), "= chi, the CY collision")
