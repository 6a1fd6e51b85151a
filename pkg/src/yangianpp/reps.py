"""Fixed-point representations: raising/lowering operators and the diagonal
rational series, for the 3D-partition geometry ("c3") and the length-m
pyramid geometry ("conifold").

Matrix coefficients come from equivariant residue calculus.  On a transition
lam -> lam + box (or + pair) at spectral position x, the raising integrand
E(z) and lowering factor F(z), both products over the smaller configuration,
multiply to the diagonal integrand h(z) = E(z)*F(z) which has a simple pole
at x.  The split of that residue between e and f is pinned by

    <lam|e_i|lam+box> * <lam+box|f_j|lam> = Res_{z=x} z^(i+j) h(z)

with the f side normalized to the reduced evaluation of F at x (all factors
vanishing at x deleted first).  Wherever E has a simple pole and F is
nonvanishing at x, this reproduces the naive Res(z^i E) and z^j F(x)
coefficients verbatim; it remains finite and correct at the weight
collisions forced by h1 + h2 + h3 = 0, where the naive split degenerates.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import partitions3d as p3
from . import pyramid as pyr
from .errors import InconsistentShift, Resonance
from .exact import LinForm, Params, parse_rational, rational_str


@dataclass(frozen=True)
class Geometry:
    """Which fixed-point representation to build, and how far."""

    kind: str  # "c3" | "conifold"
    params: Params
    level_cap: int  # max level N (boxes for c3, pairs above the floor for conifold)
    m: int = 0  # conifold length
    sector: int = 0  # conifold only: #black - #white

    def __post_init__(self):
        if self.kind not in ("c3", "conifold"):
            raise ValueError(f"unknown geometry {self.kind!r}")
        if self.kind == "conifold" and self.m < 1:
            raise ValueError("conifold geometry needs m >= 1")
        if self.level_cap < 0:
            raise ValueError("level cap must be nonnegative")

    def tag(self) -> str:
        if self.kind == "c3":
            return "c3"
        return f"conifold:{self.m}(sector {self.sector})"

    def to_json(self):
        out = {"kind": self.kind, "N": self.level_cap, "params": self.params.to_json()}
        if self.kind == "conifold":
            out["m"] = self.m
            out["sector"] = self.sector
        return out


class FixedPointBasis:
    """Canonically ordered fixed-point labels, graded by level.

    c3: level n lists the plane partitions with n boxes.  conifold: level n
    lists the sector's pyramid partitions with n whites (each raising step
    adds one black/white pair).
    """

    def __init__(self, geometry: Geometry):
        self.geometry = geometry
        g = geometry
        if g.kind == "c3":
            self.erc = None
            self.levels = [
                list(L) for L in p3.enumerate_plane_partitions(g.level_cap, cap=max(10, g.level_cap))
            ]
        else:
            self.erc = pyr.build_erc(g.m, cap=max(pyr.DEFAULT_CAP, g.m))
            max_stones = g.sector + 2 * g.level_cap
            max_stones = min(max_stones, len(self.erc.stones))
            groups = pyr.enumerate_pyramids(
                g.m, max_stones, sector=g.sector, cap=max(pyr.DEFAULT_CAP, g.m)
            )
            self.levels = [[] for _ in range(g.level_cap + 1)]
            for (_, nw), pis in groups.items():
                if nw <= g.level_cap:
                    self.levels[nw] = list(pis)
        self._index = [
            {lab: i for i, lab in enumerate(level)} for level in self.levels
        ]

    @property
    def top_level(self) -> int:
        return len(self.levels) - 1

    def level(self, n):
        return self.levels[n]

    def index(self, n, label) -> int:
        return self._index[n][label]

    def size(self) -> int:
        return sum(len(L) for L in self.levels)

    def __iter__(self):
        for n, L in enumerate(self.levels):
            for lab in L:
                yield n, lab


@dataclass
class SparseOperator:
    """Level-graded sparse matrix with a fixed level shift.

    blocks[n] maps (target_index, source_index) -> scalar for sources at
    level n and targets at level n + shift; zero entries are omitted.
    """

    shift: int
    blocks: dict = field(default_factory=dict)

    def entry(self, n, tgt, src):
        return self.blocks.get(n, {}).get((tgt, src))

    def add_entry(self, n, tgt, src, value):
        if value == 0:
            return
        blk = self.blocks.setdefault(n, {})
        key = (tgt, src)
        v = blk.get(key, value * 0) + value
        if v == 0:
            blk.pop(key, None)
        else:
            blk[key] = v

    def compose(self, other: "SparseOperator") -> "SparseOperator":
        """self applied after other; blocks outside the truncation vanish."""
        out = SparseOperator(self.shift + other.shift)
        for n, blk in other.blocks.items():
            mid = n + other.shift
            ablk = self.blocks.get(mid)
            if not ablk:
                continue
            col = {}
            for (j, k), bv in blk.items():
                col.setdefault(j, []).append((k, bv))
            for (i, j), av in ablk.items():
                for k, bv in col.get(j, ()):
                    out.add_entry(n, i, k, av * bv)
        return out

    def scaled(self, c) -> "SparseOperator":
        out = SparseOperator(self.shift)
        for n, blk in self.blocks.items():
            for (i, j), v in blk.items():
                out.add_entry(n, i, j, c * v)
        return out

    def plus(self, other: "SparseOperator", sign=1) -> "SparseOperator":
        if self.shift != other.shift:
            raise ValueError("shift mismatch in operator sum")
        out = SparseOperator(self.shift)
        for src in (self, other):
            s = sign if src is other else 1
            for n, blk in src.blocks.items():
                for (i, j), v in blk.items():
                    out.add_entry(n, i, j, s * v)
        return out

    def commutator(self, other: "SparseOperator") -> "SparseOperator":
        return self.compose(other).plus(other.compose(self), sign=-1)

    def anticommutator(self, other: "SparseOperator") -> "SparseOperator":
        return self.compose(other).plus(other.compose(self), sign=1)

    def is_zero_on(self, levels) -> bool:
        return all(not self.blocks.get(n) for n in levels)

    def first_nonzero_on(self, levels):
        for n in levels:
            for (i, j), v in sorted(self.blocks.get(n, {}).items()):
                return n, (i, j), v
        return None

    def off_diagonal_on(self, levels):
        for n in levels:
            for (i, j), v in sorted(self.blocks.get(n, {}).items()):
                if i != j:
                    return n, (i, j), v
        return None

    def diagonal(self, n, size):
        blk = self.blocks.get(n, {})
        return [blk.get((i, i), 0) for i in range(size)]

    def to_json(self):
        levels = []
        for n in sorted(self.blocks):
            entries = [
                [i, j, rational_str(v)] for (i, j), v in sorted(self.blocks[n].items())
            ]
            levels.append({"n": n, "entries": entries})
        return {"shift": self.shift, "levels": levels}

    @classmethod
    def from_json(cls, obj):
        op = cls(int(obj["shift"]))
        for lev in obj["levels"]:
            n = int(lev["n"])
            for i, j, v in lev["entries"]:
                op.add_entry(n, int(i), int(j), parse_rational(v))
        return op


# ---------------------------------------------------------------------------
# Integrands and diagonal series
# ---------------------------------------------------------------------------


def integrand_e(label, geometry: Geometry, erc=None) -> LinForm:
    """Raising integrand: products over the stones/boxes of the source label."""
    p = geometry.params
    if geometry.kind == "c3":
        f = LinForm(1, [(p.chi, -1)])
        for b in label:
            x = p3.box_weight(b, p)
            f = f * LinForm(1, [(x, 1)] + [(x + hb, -1) for hb in p.hbars])
        return f
    erc = erc or pyr.build_erc(geometry.m, cap=max(pyr.DEFAULT_CAP, geometry.m))
    sign = (-1) ** pyr.black_only_count(label, erc)
    f = LinForm(sign, [(p.chi + i * p.t, -1) for i in range(geometry.m)])
    for s in label:
        x = pyr.stone_weight(s, p)
        if s.color == "B":
            f = f * LinForm(1, [(x, 1), (x + p.t, -1)])
        else:
            f = f * LinForm(1, [(x + p.q, -1), (x + p.h, -1)])
    return f


def lowering_form(label, geometry: Geometry) -> LinForm:
    """Lowering factor F(z): products over the stones/boxes of the smaller label."""
    p = geometry.params
    if geometry.kind == "c3":
        f = LinForm(1)
        for b in label:
            x = p3.box_weight(b, p)
            f = f * LinForm(1, [(x - hb, 1) for hb in p.hbars] + [(x, -1)])
        return f
    f = LinForm((-1) ** (geometry.m + 1), [(p.chi + i * p.t, 1) for i in range(geometry.m + 1)])
    for s in label:
        x = pyr.stone_weight(s, p)
        if s.color == "B":
            f = f * LinForm(1, [(x - p.q, 1), (x - p.h, 1)])
        else:
            f = f * LinForm(1, [(x - p.t, 1), (x, -1)])
    return f


def box_local_factor(x, params) -> LinForm:
    """Per-box factor of the diagonal series: prod (z-x+h_i)/(z-x-h_i)."""
    return LinForm(
        1, [(x - hb, 1) for hb in params.hbars] + [(x + hb, -1) for hb in params.hbars]
    )


def black_only_factor(x, params) -> LinForm:
    """(z-x)(z-x+q)(z-x+h)/(z-x-t), the contribution of an unpaired black."""
    return LinForm(
        1, [(x, 1), (x - params.q, 1), (x - params.h, 1), (x + params.t, -1)]
    )


def stone_product(label, geometry: Geometry, erc=None) -> LinForm:
    """The label-dependent part of the diagonal series.

    c3: product of box_local_factor over the boxes.  conifold: one
    box_local_factor (in t, q, h) per completed pair plus one
    black_only_factor per unpaired black.
    """
    p = geometry.params
    f = LinForm(1)
    if geometry.kind == "c3":
        for b in label:
            f = f * box_local_factor(p3.box_weight(b, p), p)
        return f
    erc = erc or pyr.build_erc(geometry.m, cap=max(pyr.DEFAULT_CAP, geometry.m))
    s = set(label.stones)
    for st in label.stones:
        if st.color != "B":
            continue
        x = pyr.stone_weight(st, p)
        w = erc.pair_white_of(st)
        if w is not None and w in s:
            f = f * box_local_factor(x, p)
        else:
            f = f * black_only_factor(x, p)
    return f


def h_rat(label, geometry: Geometry, erc=None) -> LinForm:
    """Diagonal rational series h(z) on a basis vector.

    c3: (1/(z-chi)) * stone product.  conifold:
    (-1)^(black only) * (-1)^(m+1) * (z-chi-m*t) * stone product.
    Always equal to integrand_e * lowering_form, which the tests assert.
    """
    p = geometry.params
    if geometry.kind == "c3":
        return LinForm(1, [(p.chi, -1)]) * stone_product(label, geometry)
    erc = erc or pyr.build_erc(geometry.m, cap=max(pyr.DEFAULT_CAP, geometry.m))
    sign = (-1) ** (pyr.black_only_count(label, erc) + geometry.m + 1)
    head = LinForm(sign, [(p.chi + geometry.m * p.t, 1)])
    return head * stone_product(label, geometry, erc=erc)


def psi_eigen(label, geometry: Geometry, erc=None) -> LinForm:
    """Eigenvalue of the diagonal psi-series: the stone product itself.

    For c3 this is the Chern-polynomial product over boxes; for the conifold
    it is h_rat with the linear shift factor and global sign divided out.
    """
    return stone_product(label, geometry, erc=erc)


# ---------------------------------------------------------------------------
# Transitions and operator assembly
# ---------------------------------------------------------------------------


def transition_data(label, geometry: Geometry, x, erc=None):
    """(rho, fhat) for the transition label -> label + (box/pair at weight x).

    rho is the residue at x of the full diagonal integrand over the smaller
    label (the pole must be simple: weight collisions of higher order would
    make the raising/lowering split ill-posed); fhat is the reduced
    evaluation of the lowering factor there.
    """
    h_int = integrand_e(label, geometry, erc=erc) * lowering_form(label, geometry)
    order = -h_int.exponent_of(x)
    if order > 1:
        raise Resonance(
            f"diagonal integrand has a pole of order {order} at {rational_str(x)}"
        )
    rho = h_int.residue_at(x)
    fhat = lowering_form(label, geometry).eval_reduced(x)
    return rho, fhat


def matcoef_e(label, x, i, geometry: Geometry, erc=None):
    """<label| e_i |label + (box/pair at weight x)>.

    Equals Res_{z=x} z^i * integrand_e wherever that naive reading is
    nondegenerate; defined through the balanced residue split in general.
    """
    rho, fhat = transition_data(label, geometry, x, erc=erc)
    return x**i * rho / fhat


def matcoef_f(label, x, j, geometry: Geometry, erc=None):
    """<label + (box/pair at weight x)| f_j |label>.

    Equals z^j * lowering_form evaluated at x wherever no factor vanishes;
    the reduced evaluation keeps it finite and nonzero in general.
    """
    _, fhat = transition_data(label, geometry, x, erc=erc)
    return x**j * fhat


def _transitions(basis: FixedPointBasis, n):
    """All (src_idx, tgt_idx, weight, label) raising transitions from level n."""
    g = basis.geometry
    out = []
    for si, lab in enumerate(basis.level(n)):
        if g.kind == "c3":
            ws = p3.addible_weights(lab, g.params)
            for b, x in ws:
                tgt = lab.add(b)
                ti = basis.index(n + 1, tgt)
                out.append((si, ti, x, lab))
        else:
            ws = pyr.pair_weights(lab, basis.erc, g.params, which="addible")
            for pair, x in ws:
                tgt = lab.with_pair(pair)
                ti = basis.index(n + 1, tgt)  # enumeration is complete per level
                out.append((si, ti, x, lab))
    return out


class Representation:
    """Basis plus cached transition data; builds e_i / f_j on demand."""

    def __init__(self, geometry: Geometry):
        self.geometry = geometry
        self.basis = FixedPointBasis(geometry)
        self._trans = {}  # level n -> list of (si, ti, x, rho, fhat)

    def transitions(self, n):
        if n not in self._trans:
            out = []
            for si, ti, x, lab in _transitions(self.basis, n):
                rho, fhat = transition_data(lab, self.geometry, x, erc=self.basis.erc)
                out.append((si, ti, x, rho, fhat))
            self._trans[n] = out
        return self._trans[n]

    def build_e(self, i: int) -> SparseOperator:
        op = SparseOperator(+1)
        for n in range(self.basis.top_level):
            for si, ti, x, rho, fhat in self.transitions(n):
                op.add_entry(n, ti, si, x**i * rho / fhat)
        return op

    def build_f(self, j: int) -> SparseOperator:
        op = SparseOperator(-1)
        for n in range(self.basis.top_level):
            for si, ti, x, rho, fhat in self.transitions(n):
                # source of f is the level-(n+1) target of the raising step
                op.add_entry(n + 1, si, ti, x**j * fhat)
        return op

    def h_rat(self, label) -> LinForm:
        return h_rat(label, self.geometry, erc=self.basis.erc)

    def psi(self, label) -> LinForm:
        return psi_eigen(label, self.geometry, erc=self.basis.erc)


def detect_shift(rep):
    """Shift degree l and shift point z1 of the diagonal series.

    Divides h_rat by the stone product exactly; the residual must be a
    single linear factor (z - z1)^(+-1) with unit constant, identical across
    the whole basis.  Returns (l, z1).
    """
    geometry = rep.geometry
    basis = rep.basis
    found = None
    for n, lab in basis:
        resid = h_rat(lab, geometry, erc=basis.erc) / stone_product(
            lab, geometry, erc=basis.erc
        )
        fac = resid.factors
        if len(fac) != 1 or abs(fac[0][1]) != 1 or resid.const not in (1, -1):
            raise InconsistentShift(
                f"residual factor {resid!r} of {lab!r} is not a signed linear factor"
            )
        l, z1 = fac[0][1], fac[0][0]
        if found is None:
            found = (l, z1)
        elif found != (l, z1):
            raise InconsistentShift(
                f"shift {found} vs ({l}, {rational_str(z1)}) at {lab!r}"
            )
    if found is None:
        raise InconsistentShift("empty basis")
    return found


# ---------------------------------------------------------------------------
# Persistence
# ---------------------------------------------------------------------------


def operators_to_json(rep: Representation, imax: int):
    """Deterministic JSON blob with the basis and e_0..imax, f_0..imax."""
    basis = rep.basis
    labels = [[lab.to_json() for lab in L] for L in basis.levels]
    return {
        "geometry": rep.geometry.to_json(),
        "params": rep.geometry.params.to_json(),
        "basis": {"levels": labels},
        "operators": {
            "e": {str(i): rep.build_e(i).to_json() for i in range(imax + 1)},
            "f": {str(j): rep.build_f(j).to_json() for j in range(imax + 1)},
        },
    }


def dump_operators(rep: Representation, imax: int) -> str:
    return json.dumps(operators_to_json(rep, imax), sort_keys=True, indent=1)
