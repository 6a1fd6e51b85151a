"""Exact scalar arithmetic and factored rational functions in one variable.

Everything downstream (operator matrix coefficients, diagonal series,
relation checks) reduces to arithmetic in this module.  Scalars are either
arbitrary-precision rationals (`fractions.Fraction`) or elements of a fixed
prime field used as a fast verification mode.  Univariate rational functions
are kept in fully factored form: a constant times a product of (z - root)^e
with exact roots, so products, quotients, residues and truncated expansions
never lose the factor structure.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotRegular, PoleAtPoint, Resonance, RetrySpecialization

#: Modulus of the prime-field fast mode.  2^61 - 1 is a Mersenne prime above
#: the 2^60 floor that makes accidental collisions of random data
#: essentially impossible.
PRIME = (1 << 61) - 1


class Fp:
    """Element of GF(PRIME).

    Supports mixed arithmetic with ints; never with Fraction (conversion
    between modes happens once, at parameter specialization).
    """

    __slots__ = ("v",)

    def __init__(self, v):
        self.v = v.v if isinstance(v, Fp) else int(v) % PRIME

    @staticmethod
    def _coerce(other):
        if isinstance(other, Fp):
            return other
        if isinstance(other, int):
            return Fp(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else Fp(self.v + o.v)

    __radd__ = __add__

    def __neg__(self):
        return Fp(-self.v)

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else Fp(self.v - o.v)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else Fp(o.v - self.v)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else Fp(self.v * o.v)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.v == 0:
            raise RetrySpecialization("division by zero mod PRIME")
        return Fp(self.v * pow(o.v, PRIME - 2, PRIME))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else o.__truediv__(self)

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if self.v == 0:
                raise RetrySpecialization("inverting zero mod PRIME")
            return Fp(pow(pow(self.v, PRIME - 2, PRIME), -n, PRIME))
        return Fp(pow(self.v, n, PRIME))

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.v == other.v
        if isinstance(other, int):
            return self.v == other % PRIME
        return NotImplemented

    def __hash__(self):
        return hash(("Fp", self.v))

    def __bool__(self):
        return self.v != 0

    def __lt__(self, other):
        # arbitrary but total; used only for canonical sorting
        return self.v < Fp(other).v

    def __repr__(self):
        return f"Fp({self.v})"


def _inv(x):
    """Exact multiplicative inverse across scalar types."""
    if isinstance(x, int):
        return Fraction(1, x)
    return 1 / x


def _div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        return Fraction(a, b)
    return a / b


def _pow(b, e: int):
    """b**e, exact for negative e even when b is a plain int."""
    if e >= 0 or not isinstance(b, int):
        return b**e
    return Fraction(1, b ** (-e))


def scalar_zero(x) -> bool:
    """True when the scalar x is zero (Fraction, Fp or int)."""
    return x == 0


def scalar_key(x):
    """Canonical sort key for roots of one mode."""
    if isinstance(x, Fp):
        return (1, x.v, 1)
    fr = Fraction(x)
    return (0, fr.numerator, fr.denominator)


def rational_str(x) -> str:
    """Serialize an exact scalar as 'p/q' (or the residue in prime mode)."""
    if isinstance(x, Fp):
        return str(x.v)
    fr = Fraction(x)
    return f"{fr.numerator}/{fr.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


def to_mode(x, mode: str):
    """Map an exact rational into the scalar domain of the given mode."""
    fr = Fraction(x)
    if mode == "rational":
        return fr
    if mode == "prime-field":
        if fr.denominator % PRIME == 0:
            raise RetrySpecialization("denominator divisible by PRIME")
        return Fp(fr.numerator) / Fp(fr.denominator)
    raise ValueError(f"unknown mode {mode!r}")


class TruncSeries:
    """Truncated power series with exact coefficients.

    `center` is either the string "inf" (coefficients of z^-1 .. z^-K) or a
    scalar a (coefficients of (z-a)^0 .. (z-a)^(K-1)).  Arithmetic is closed
    at the stated order.
    """

    __slots__ = ("center", "coeffs")

    def __init__(self, center, coeffs):
        self.center = center
        self.coeffs = list(coeffs)

    @property
    def order(self):
        return len(self.coeffs)

    def _check(self, other):
        if self.center != other.center or self.order != other.order:
            raise ValueError("series centers/orders differ")

    def __add__(self, other):
        self._check(other)
        return TruncSeries(self.center, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check(other)
        return TruncSeries(self.center, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return TruncSeries(self.center, [c * other for c in self.coeffs])
        self._check(other)
        K = self.order
        if self.center == "inf":
            # products of z^-i and z^-j land at z^-(i+j): shift indices by one
            out = [self.coeffs[0] * 0] * K
            for i, a in enumerate(self.coeffs):
                if scalar_zero(a):
                    continue
                for j, b in enumerate(other.coeffs):
                    if i + j + 1 < K:
                        out[i + j + 1] = out[i + j + 1] + a * b
            return TruncSeries("inf", out)
        return TruncSeries(self.center, _poly_mul(self.coeffs, other.coeffs, K))

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse; the constant term must be a unit."""
        if self.center == "inf":
            raise ValueError("series at infinity have no constant term to invert")
        if scalar_zero(self.coeffs[0]):
            raise ZeroDivisionError("series is not a unit at its center")
        return TruncSeries(self.center, _series_inverse(self.coeffs, self.order))

    def __eq__(self, other):
        return (
            isinstance(other, TruncSeries)
            and self.center == other.center
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        return f"TruncSeries({self.center!r}, {self.coeffs!r})"


def _poly_mul(a, b, K):
    out = [a[0] * 0] * K
    for i, ai in enumerate(a):
        if scalar_zero(ai):
            continue
        for j, bj in enumerate(b):
            if i + j < K:
                out[i + j] = out[i + j] + ai * bj
    return out


def _series_inverse(a, K):
    inv0 = _inv(a[0])
    inv = [a[0] * 0] * K
    inv[0] = inv0
    for n in range(1, K):
        s = a[0] * 0
        for k in range(1, n + 1):
            if k < len(a):
                s = s + a[k] * inv[n - k]
        inv[n] = -s * inv0
    return inv


def _shift_series(c0, e, K):
    """Coefficients of (c0 + w)^e mod w^K; c0 must be nonzero when e < 0."""
    if e >= 0:
        out = [c0 * 0] * K
        for j in range(min(e, K - 1) + 1):
            out[j] = math.comb(e, j) * _pow(c0, e - j)
        return out
    return _series_inverse(_shift_series(c0, -e, K), K)


def _geom_series(r, e, K):
    """Coefficients of (1 - r*w)^e mod w^K."""
    if e >= 0:
        out = [r * 0] * K
        for j in range(min(e, K - 1) + 1):
            out[j] = math.comb(e, j) * ((-r) ** j)
        return out
    return _series_inverse(_geom_series(r, -e, K), K)


class LinForm:
    """const * prod (z - root)^exponent, stored exactly.

    Roots are pairwise distinct scalars of one mode; exponents are nonzero
    integers.  Multiplication merges equal roots and drops exponent zero, so
    cancellation is automatic and exact.
    """

    __slots__ = ("const", "factors")

    def __init__(self, const, factors=()):
        merged = []
        for root, e in factors:
            if e == 0:
                continue
            for k, (r0, e0) in enumerate(merged):
                if r0 == root:
                    merged[k] = (r0, e0 + e)
                    break
            else:
                merged.append((root, e))
        self.const = const
        self.factors = tuple(
            (r, e) for r, e in sorted(merged, key=lambda t: scalar_key(t[0])) if e != 0
        )

    # -- constructors --------------------------------------------------------

    @classmethod
    def constant(cls, c):
        return cls(c)

    @classmethod
    def linear(cls, root, exponent=1):
        """(z - root)^exponent."""
        return cls(1, [(root, exponent)])

    # -- structure -----------------------------------------------------------

    def exponent_of(self, root) -> int:
        for r, e in self.factors:
            if r == root:
                return e
        return 0

    def poles(self):
        return [r for r, e in self.factors if e < 0]

    def zeros(self):
        return [r for r, e in self.factors if e > 0]

    def degree(self) -> int:
        """Degree at infinity: numerator degree minus denominator degree."""
        return sum(e for _, e in self.factors)

    def is_zero(self) -> bool:
        return scalar_zero(self.const)

    # -- arithmetic ------------------------------------------------------------

    def __mul__(self, other):
        if not isinstance(other, LinForm):
            return LinForm(self.const * other, self.factors)
        return LinForm(self.const * other.const, self.factors + other.factors)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, LinForm):
            return LinForm(_div(self.const, other), self.factors)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero form")
        inv = tuple((r, -e) for r, e in other.factors)
        return LinForm(_div(self.const, other.const), self.factors + inv)

    def __pow__(self, n: int):
        if n == 0:
            return LinForm(self.const**0)
        return LinForm(_pow(self.const, n), [(r, e * n) for r, e in self.factors])

    def __eq__(self, other):
        return (
            isinstance(other, LinForm)
            and self.const == other.const
            and self.factors == other.factors
        )

    def __hash__(self):
        return hash((self.const, self.factors))

    def __repr__(self):
        parts = [rational_str(self.const)]
        for r, e in self.factors:
            parts.append(f"(z - {rational_str(r)})^{e}")
        return " * ".join(parts)

    # -- evaluation and expansion ----------------------------------------------

    def eval(self, z0):
        """Evaluate at z0; PoleAtPoint if z0 sits on a negative-exponent root."""
        v = self.const
        for r, e in self.factors:
            d = z0 - r
            if scalar_zero(d):
                if e < 0:
                    raise PoleAtPoint(f"evaluation at pole z = {rational_str(z0)}")
                return self.const * 0
            v = v * _pow(d, e)
        return v

    def eval_reduced(self, z0):
        """Evaluate with every (z - z0) factor deleted first.

        Equals eval(z0) whenever no factor vanishes there; at a zero or pole
        it returns the nonzero leading coefficient of the local expansion.
        """
        v = self.const
        for r, e in self.factors:
            d = z0 - r
            if scalar_zero(d):
                continue
            v = v * _pow(d, e)
        return v

    def taylor_at(self, a, K: int, pole_order: int = 0) -> TruncSeries:
        """TruncSeries of (z-a)^pole_order * self around z = a, K coefficients.

        With pole_order=0 the form must be regular at a (NotRegular
        otherwise); a positive pole_order shifts a Laurent expansion into
        Taylor range.
        """
        m = -self.exponent_of(a)
        if m > pole_order:
            raise NotRegular(
                f"pole of order {m} at {rational_str(a)} exceeds offset {pole_order}"
            )
        ser = [self.const * 0] * K
        ser[0] = self.const
        for r, e in self.factors:
            if r == a:
                continue
            ser = _poly_mul(ser, _shift_series(a - r, e, K), K)
        extra = pole_order - m
        if extra:
            ser = ([self.const * 0] * extra + ser)[:K]
        return TruncSeries(a, ser)

    def residue_at(self, a, power: int = 0):
        """Res_{z=a} of z^power * self, exact; 0 when a is not a pole.

        Higher-order poles go through the truncated local series of the
        regular part, never through numerics.
        """
        form = self if power == 0 else self * LinForm(1, [(a * 0, power)])
        m = -form.exponent_of(a)
        if m <= 0:
            return self.const * 0
        return form.taylor_at(a, m, pole_order=m).coeffs[m - 1]

    def expand_at_infinity(self, K: int) -> TruncSeries:
        """Coefficients of z^-1 .. z^-K in the expansion at infinity.

        Polynomial parts are dropped; 1/(z-a) expands to [1, a, a^2, ...].
        """
        d = self.degree()
        need = d + K + 1
        if need <= 0:
            return TruncSeries("inf", [self.const * 0] * K)
        ser = [self.const * 0] * need
        ser[0] = self.const
        for r, e in self.factors:
            ser = _poly_mul(ser, _geom_series(r, e, need), need)
        out = []
        for j in range(1, K + 1):
            idx = d + j
            out.append(ser[idx] if 0 <= idx < need else self.const * 0)
        return TruncSeries("inf", out)

    def residue_at_infinity(self, power: int = 0):
        """-(coefficient of z^-1 in z^power * self).

        The sign convention is pinned by the residue theorem: finite residues
        plus the residue at infinity sum to zero exactly.
        """
        form = self if power == 0 else self * LinForm(1, [(self.const * 0, power)])
        return -form.expand_at_infinity(1).coeffs[0]

    def to_json(self):
        return {
            "const": rational_str(self.const),
            "factors": [[rational_str(r), e] for r, e in self.factors],
        }

    @classmethod
    def from_json(cls, obj):
        return cls(
            parse_rational(obj["const"]),
            [(parse_rational(r), int(e)) for r, e in obj["factors"]],
        )


def expand(form: LinForm, center, K: int, pole_order: int = 0) -> TruncSeries:
    """Truncated expansion of a LinForm at a finite point or at 'inf'."""
    if center == "inf":
        return form.expand_at_infinity(K)
    return form.taylor_at(center, K, pole_order=pole_order)


# ---------------------------------------------------------------------------
# Parameters
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Params:
    """Exact specialization of the deformation parameters and framing weight.

    h1 + h2 + h3 = 0 always; the conifold aliases are t = h1, q = h2,
    h = h3.  Genericity demands no relation a*h1 + b*h2 = 0 for integers
    with |a|, |b| <= resonance_bound (not both zero).
    """

    h1: object
    h2: object
    h3: object
    chi: object
    mode: str = "rational"
    resonance_bound: int = 64

    @classmethod
    def make(cls, h1, h2, chi, mode="rational", resonance_bound=64):
        h1, h2, chi = Fraction(h1), Fraction(h2), Fraction(chi)
        _check_generic(h1, h2, resonance_bound)
        h3 = -h1 - h2
        return cls(
            to_mode(h1, mode),
            to_mode(h2, mode),
            to_mode(h3, mode),
            to_mode(chi, mode),
            mode,
            resonance_bound,
        )

    # conifold aliases
    @property
    def t(self):
        return self.h1

    @property
    def q(self):
        return self.h2

    @property
    def h(self):
        return self.h3

    @property
    def hbars(self):
        return (self.h1, self.h2, self.h3)

    @property
    def sigma2(self):
        return self.h1 * self.h2 + self.h1 * self.h3 + self.h2 * self.h3

    @property
    def sigma3(self):
        return self.h1 * self.h2 * self.h3

    @property
    def zero(self):
        return self.h1 * 0

    @property
    def one(self):
        return self.h1**0

    def to_json(self):
        return {
            "mode": self.mode,
            "h1": rational_str(self.h1),
            "h2": rational_str(self.h2),
            "h3": rational_str(self.h3),
            "chi": rational_str(self.chi),
        }

    def __repr__(self):
        return (
            f"Params(h1={rational_str(self.h1)}, h2={rational_str(self.h2)}, "
            f"chi={rational_str(self.chi)}, mode={self.mode})"
        )


def _check_generic(h1: Fraction, h2: Fraction, bound: int):
    if h1 == 0 or h2 == 0:
        raise Resonance("h1 and h2 must be nonzero")
    for a in range(0, bound + 1):
        for b in range(-bound, bound + 1):
            if a == 0 and b <= 0:
                continue
            if a * h1 + b * h2 == 0:
                raise Resonance(f"resonance {a}*h1 + {b}*h2 = 0")


def random_params(seed, mode="rational", resonance_bound=64, chi=None):
    """Seeded generic parameter draw.

    Numerators up to 4 digits and denominators up to 2, rejection-sampled
    against the resonance predicate so repeated draws stay reproducible.
    """
    rng = random.Random(seed)
    while True:
        h1 = Fraction(rng.randint(1, 9999), rng.randint(1, 99))
        h2 = Fraction(rng.randint(1, 9999), rng.randint(1, 99))
        if rng.random() < 0.5:
            h2 = -h2
        c = Fraction(rng.randint(-9999, 9999), rng.randint(1, 99)) if chi is None else Fraction(chi)
        try:
            return Params.make(h1, h2, c, mode=mode, resonance_bound=resonance_bound)
        except Resonance:
            continue
