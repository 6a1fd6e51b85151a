"""Independent brute-force oracles used only by the tests.

These deliberately avoid the library's incremental algorithms: partitions by
filtering raw box subsets, pyramids by filtering raw stone subsets, counts by
the classical generating function, residues by an independent CAS.
"""

from fractions import Fraction
from itertools import combinations


def plane_partition_subsets(n):
    """All n-box order ideals, by filtering subsets of {i+j+k <= n-1}."""
    if n == 0:
        return [tuple()]
    cells = [
        (i, j, k)
        for i in range(n)
        for j in range(n)
        for k in range(n)
        if i + j + k <= n - 1
    ]
    out = []
    for combo in combinations(cells, n):
        s = set(combo)
        ok = True
        for (i, j, k) in combo:
            for p in ((i - 1, j, k), (i, j - 1, k), (i, j, k - 1)):
                if min(p) >= 0 and p not in s:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(tuple(sorted(combo)))
    return sorted(out)


def plane_partition_counts_gf(nmax):
    """Counts from the classical product generating function
    prod_k (1 - q^k)^(-k), exact integer arithmetic."""
    coeffs = [0] * (nmax + 1)
    coeffs[0] = 1
    for k in range(1, nmax + 1):
        # multiply by (1 - q^k)^(-k): repeated geometric factors
        for _ in range(k):
            for idx in range(k, nmax + 1):
                coeffs[idx] += coeffs[idx - k]
    return coeffs


def upward_closed_subsets(erc):
    """All upward-closed stone subsets of an ERC, by raw subset filter."""
    stones = sorted(erc.stones)
    n = len(stones)
    out = []
    for mask in range(1 << n):
        subset = {stones[i] for i in range(n) if mask >> i & 1}
        if all(c in subset for s in subset for c in erc.covers(s)):
            out.append(frozenset(subset))
    return out


def sympy_residue(form, a, power=0):
    """Residue via sympy, fully independent of the LinForm code path."""
    import sympy as sp

    z = sp.symbols("z")
    expr = sp.Rational(Fraction(form.const))
    for r, e in form.factors:
        expr *= (z - sp.Rational(Fraction(r))) ** e
    val = sp.residue(expr * z**power, z, sp.Rational(Fraction(a)))
    return Fraction(sp.nsimplify(val))


def partial_fraction_residue(form, a):
    """Coefficient of 1/(z-a) by exact linear solve.

    Writes form = polynomial + sum A_{p,k}/(z-p)^k, samples the function at
    enough non-pole rational points, solves the dense linear system by
    Gaussian elimination over Fraction, and reads off A_{a,1}.
    """
    poles = {p: -e for p, e in form.factors if e < 0}
    if a not in poles:
        return Fraction(0)
    poly_deg = max(0, form.degree()) + 1  # poly part has degree <= degree()
    unknowns = []  # (kind, data)
    for _ in range(poly_deg + 1):
        unknowns.append(("poly", len(unknowns)))
    keys = {}
    for p, m in sorted(poles.items()):
        for k in range(1, m + 1):
            keys[(p, k)] = len(unknowns)
            unknowns.append(("pole", (p, k)))
    n = len(unknowns)
    # sample points avoiding poles
    samples = []
    x = Fraction(1, 7)
    while len(samples) < n:
        if all(x != p for p in poles):
            samples.append(x)
        x += Fraction(3, 5)
    rows = []
    for x in samples:
        row = []
        for kind, data in unknowns:
            if kind == "poly":
                row.append(x**data)
            else:
                p, k = data
                row.append(Fraction(1) / (x - p) ** k)
        rows.append(row + [form.eval(x)])
    # gaussian elimination
    for col in range(n):
        piv = next(r for r in range(col, n) if rows[r][col] != 0)
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = Fraction(1) / rows[col][col]
        rows[col] = [v * inv for v in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [v - f * w for v, w in zip(rows[r], rows[col])]
    return rows[keys[(a, 1)]][n]
