"""Factored rational functions: evaluation, residues, truncated expansions.

Everything in this package runs on exact arithmetic; this demo shows the
basic moves on a few small functions.
"""

from fractions import Fraction as F

from yangianpp import LinForm, expand

# f(z) = z / ((z-1)(z-2)^2), kept in factored form
f = LinForm(1, [(F(0), 1), (F(1), -1), (F(2), -2)])
print("f(z) =", f)
print("f(5) =", f.eval(F(5)))

print("\nresidues:")
print("  at z=1:", f.residue_at(F(1)))
print("  at z=2 (double pole):", f.residue_at(F(2)))
print("  at infinity:", f.residue_at_infinity())
total = f.residue_at(F(1)) + f.residue_at(F(2)) + f.residue_at_infinity()
print("  sum over all residues (must be 0):", total)

print("\nexpansion of 1/(z-3) at infinity: coefficients of z^-1..z^-5")
g = LinForm(1, [(F(3), -1)])
print(" ", expand(g, "inf", 5).coeffs)

print("\nTaylor expansion of f at z=0 (regular point), 4 terms:")
print(" ", expand(f, F(0), 4).coeffs)

print("\nLaurent data of f at the double pole z=2 via an order offset:")
print(" ", expand(f, F(2), 3, pole_order=2).coeffs, "(coefficients of (z-2)^-2, (z-2)^-1, 1)")
