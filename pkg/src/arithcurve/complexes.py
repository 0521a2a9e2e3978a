"""Graded free complexes: the length-(m-1) minor complex of a 2 x m monomial
matrix, mapping cones, and the construction of the two resolved cases.

Basis bookkeeping for the minor complex of a 2 x m matrix M whose columns all
satisfy deg(bottom) - deg(top) = c:

  step 0      R, one generator of shift 0
  step s >= 1 labels (cols, v0, v1): cols a strictly increasing (s+1)-subset
              of [1, m] (1-based), v0 + v1 = s - 1; rank s * C(m, s+1);
              shift = sum of top-entry degrees over cols + (v1 + 1) * c

The differential removes one column from the wedge with sign (-1)^(j+1) on
the j-th wedge position: a v0-decrement multiplies by the top entry of the
removed column, a v1-decrement by the bottom entry.  Step 1 sends the pair
(c1, c2) to the 2x2 minor of those columns.

Labels are ordered (columns lexicographic, then v1 ascending) so every matrix
is reproducible bit-for-bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .curve import ArithmeticSequence
from .matrices import PolyMatrix
from .ring import QQ, Polynomial


class ComplexError(ValueError):
    pass


class NonMonomialEntry(ComplexError):
    pass


class InhomogeneousColumns(ComplexError):
    """Column degree difference bottom - top is not constant across columns."""


class InhomogeneousMultiplier(ComplexError):
    pass


class WrongCase(ValueError):
    """The requested construction does not apply to this sequence."""


@dataclass(frozen=True)
class WedgeLabel:
    """Basis label (e_{c1} ^ ... ^ e_{c_{s+1}}) tensor lambda0^v0 lambda1^v1."""

    columns: tuple[int, ...]  # 1-based, strictly increasing
    v0: int
    v1: int

    def __str__(self):
        cols = "^".join(f"e{c}" for c in self.columns)
        return f"({cols})*l0^{self.v0}*l1^{self.v1}"


@dataclass(frozen=True)
class ConeLabel:
    """Cone basis element: shifted-source copy or target copy of an inner label."""

    part: str  # "source" | "target"
    inner: object  # WedgeLabel, or None for a rank-1 step-0 generator

    def __str__(self):
        return f"{self.part}:{self.inner}"


@dataclass(frozen=True)
class GradedFreeModule:
    rank: int
    shifts: tuple[int, ...]
    labels: tuple

    def __post_init__(self):
        if not (len(self.shifts) == len(self.labels) == self.rank):
            raise ValueError("rank, shifts and labels must agree")


class GradedComplex:
    """Complex of graded free modules; maps[s-1] sends step s to step s-1."""

    def __init__(self, modules, maps, name: str = ""):
        self.modules = tuple(modules)
        self.maps = tuple(maps)
        self.name = name
        if len(self.maps) != len(self.modules) - 1:
            raise ValueError("need one differential per pair of adjacent steps")
        for s, mat in enumerate(self.maps, start=1):
            if mat.rows != self.modules[s - 1].rank or mat.cols != self.modules[s].rank:
                raise ValueError(f"differential {s} has the wrong shape")

    @property
    def length(self) -> int:
        return len(self.modules) - 1

    def module(self, s: int) -> GradedFreeModule:
        return self.modules[s]

    def differential(self, s: int) -> PolyMatrix:
        if not 1 <= s <= self.length:
            raise IndexError(f"no differential at step {s}")
        return self.maps[s - 1]

    def betti(self) -> tuple[int, ...]:
        return tuple(m.rank for m in self.modules)

    def shifts(self, s: int) -> tuple[int, ...]:
        return self.modules[s].shifts

    def shift_rows(self) -> dict[int, tuple[int, ...]]:
        return {s: tuple(sorted(m.shifts)) for s, m in enumerate(self.modules)}

    def __repr__(self):
        return f"<GradedComplex {self.name or 'C'}: ranks {self.betti()}>"


def _monomial_degree(p: Polynomial) -> int:
    if p.is_zero() or not p.is_monomial():
        raise NonMonomialEntry(f"entry {p} is not a monomial")
    return p.weighted_degree()


def minor_complex(M: PolyMatrix) -> GradedComplex:
    """Free complex resolving R modulo the 2x2 minors of a 2 x m matrix.

    Entries must be monomials and every column must have the same degree
    difference bottom - top; both are checked.
    """
    if M.rows != 2:
        raise ComplexError("a 2-row matrix is required")
    m = M.cols
    if m < 2:
        raise ComplexError("at least two columns are required")
    ring = M.ring
    top_deg = [_monomial_degree(M.entry(0, c)) for c in range(m)]
    bottom_deg = [_monomial_degree(M.entry(1, c)) for c in range(m)]
    diffs = {bottom_deg[c] - top_deg[c] for c in range(m)}
    if len(diffs) != 1:
        raise InhomogeneousColumns(
            f"column degree differences {sorted(diffs)} are not constant"
        )
    c_diff = diffs.pop()

    def labels_at(s: int) -> list[WedgeLabel]:
        return [
            WedgeLabel(columns=cols, v0=s - 1 - v1, v1=v1)
            for cols in combinations(range(1, m + 1), s + 1)
            for v1 in range(s)
        ]

    def shift_of(label: WedgeLabel) -> int:
        return sum(top_deg[c - 1] for c in label.columns) + (label.v1 + 1) * c_diff

    modules = [GradedFreeModule(rank=1, shifts=(0,), labels=(None,))]
    all_labels = [None]
    for s in range(1, m):
        labels = labels_at(s)
        modules.append(
            GradedFreeModule(
                rank=len(labels),
                shifts=tuple(shift_of(l) for l in labels),
                labels=tuple(labels),
            )
        )
        all_labels.append(labels)

    maps = []
    # step 1: the pair (c1, c2) goes to the corresponding 2x2 minor
    maps.append(
        PolyMatrix(
            ring,
            1,
            len(all_labels[1]),
            [M.minor2(l.columns[0] - 1, l.columns[1] - 1) for l in all_labels[1]],
        )
    )
    for s in range(2, m):
        source = all_labels[s]
        target_index = {lbl: i for i, lbl in enumerate(all_labels[s - 1])}
        entries = [ring.zero] * (len(all_labels[s - 1]) * len(source))
        width = len(source)
        for j, lbl in enumerate(source):
            cols, v0, v1 = lbl.columns, lbl.v0, lbl.v1
            for pos, c in enumerate(cols):
                sign = 1 if pos % 2 == 0 else -1
                rest = cols[:pos] + cols[pos + 1 :]
                if v0 >= 1:
                    tgt = WedgeLabel(columns=rest, v0=v0 - 1, v1=v1)
                    i = target_index[tgt]
                    term = M.entry(0, c - 1)
                    entries[i * width + j] = entries[i * width + j] + (
                        term if sign > 0 else -term
                    )
                if v1 >= 1:
                    tgt = WedgeLabel(columns=rest, v0=v0, v1=v1 - 1)
                    i = target_index[tgt]
                    term = M.entry(1, c - 1)
                    entries[i * width + j] = entries[i * width + j] + (
                        term if sign > 0 else -term
                    )
        maps.append(PolyMatrix(ring, len(all_labels[s - 1]), width, entries))
    return GradedComplex(modules, maps, name=f"minor-complex({M.rows}x{M.cols})")


def mapping_cone(source: GradedComplex, target: GradedComplex,
                 multiplier: Polynomial) -> GradedComplex:
    """Cone of multiplication by `multiplier` from `source` into `target`.

    Step s is (shifted source step s-1) + (target step s); the differential is
    [[-d_src, 0], [multiplier * I, d_tgt]] in that block order, which squares
    to zero because multiplication by a ring element commutes with the
    differentials.  The source block's shifts are raised by deg(multiplier).
    """
    if source.length != target.length or source.maps != target.maps:
        raise ComplexError(
            "multiplication is only a chain map from a complex to itself"
        )
    ring = target.maps[0].ring if target.maps else multiplier.ring
    if multiplier.is_zero():
        bump = 0
    else:
        bump = multiplier.weighted_degree()
        if bump is None:
            raise InhomogeneousMultiplier(f"{multiplier} is not homogeneous")

    L = target.length + 1  # cone has one extra step
    modules = []
    for s in range(L + 1):
        shifts: list[int] = []
        labels: list = []
        if 0 <= s - 1 <= source.length:
            src = source.module(s - 1)
            shifts.extend(x + bump for x in src.shifts)
            labels.extend(ConeLabel("source", l) for l in src.labels)
        if s <= target.length:
            tgt = target.module(s)
            shifts.extend(tgt.shifts)
            labels.extend(ConeLabel("target", l) for l in tgt.labels)
        modules.append(
            GradedFreeModule(rank=len(shifts), shifts=tuple(shifts), labels=tuple(labels))
        )

    maps = []
    for s in range(1, L + 1):
        rows, cols = modules[s - 1].rank, modules[s].rank
        entries = [ring.zero] * (rows * cols)
        src_rows = source.module(s - 2).rank if 0 <= s - 2 <= source.length else 0
        src_cols = source.module(s - 1).rank if 0 <= s - 1 <= source.length else 0
        # -d_src block (top left)
        if s - 1 >= 1 and s - 1 <= source.length:
            d = source.differential(s - 1)
            for i in range(d.rows):
                for j in range(d.cols):
                    e = d.entry(i, j)
                    if not e.is_zero():
                        entries[i * cols + j] = -e
        # multiplier * identity block (below the source columns)
        for j in range(src_cols):
            entries[(src_rows + j) * cols + j] = multiplier
        # d_tgt block (bottom right)
        if s <= target.length:
            d = target.differential(s)
            for i in range(d.rows):
                for j in range(d.cols):
                    e = d.entry(i, j)
                    if not e.is_zero():
                        entries[(src_rows + i) * cols + (src_cols + j)] = e
        maps.append(PolyMatrix(ring, rows, cols, entries))
    return GradedComplex(modules, maps, name="cone")


def resolution_b1(seq: ArithmeticSequence, field=QQ) -> GradedComplex:
    """Minimal graded free resolution when m0 = 1 mod n: the minor complex of
    the power-column matrix (which then contains all consecutive pairs)."""
    if seq.b != 1:
        raise WrongCase(f"b = {seq.b}, construction requires b = 1")
    C = minor_complex(seq.matrix_b(field))
    C.name = f"b1-resolution{seq}"
    return C

def resolution_bn(seq: ArithmeticSequence, field=QQ) -> GradedComplex:
    """Minimal graded free resolution when m0 = 0 mod n: cone over the minor
    complex of the consecutive-pair matrix, along the extra power binomial."""
    if seq.b != seq.n:
        raise WrongCase(f"b = {seq.b}, construction requires b = n = {seq.n}")
    E = minor_complex(seq.matrix_a(field))
    psi = seq.generators(field).powers[0]
    C = mapping_cone(E, E, psi)
    C.name = f"bn-resolution{seq}"
    return C


def minor_complex_rank(m: int, s: int) -> int:
    """Expected rank s*C(m, s+1) of step s for a 2 x m matrix."""
    if s == 0:
        return 1
    return s * comb(m, s + 1)


@dataclass
class ComplexReport:
    dd_zero: bool
    homogeneous: bool
    minimal: bool
    witness: dict

    @property
    def all_ok(self) -> bool:
        return self.dd_zero and self.homogeneous and self.minimal


def verify_complex(C: GradedComplex) -> ComplexReport:
    """Check d.d = 0, graded homogeneity of every entry, and minimality.

    Each failing check records its first witness as (step, row, col).
    """
    witness: dict = {}
    dd_zero = True
    for s in range(2, C.length + 1):
        prod = C.differential(s - 1).mul(C.differential(s))
        if not prod.is_zero():
            dd_zero = False
            for i in range(prod.rows):
                for j in range(prod.cols):
                    if not prod.entry(i, j).is_zero():
                        witness["dd_zero"] = (s, i, j)
                        break
                if "dd_zero" in witness:
                    break
            break

    homogeneous = True
    for s in range(1, C.length + 1):
        d = C.differential(s)
        src = C.module(s).shifts
        tgt = C.module(s - 1).shifts
        for i in range(d.rows):
            for j in range(d.cols):
                e = d.entry(i, j)
                if e.is_zero():
                    continue
                deg = e.weighted_degree()
                if deg is None or deg != src[j] - tgt[i]:
                    homogeneous = False
                    witness.setdefault("homogeneous", (s, i, j))
        if not homogeneous:
            break

    minimal = True
    for s in range(1, C.length + 1):
        d = C.differential(s)
        for i in range(d.rows):
            for j in range(d.cols):
                e = d.entry(i, j)
                if not e.is_zero() and e.is_constant():
                    minimal = False
                    witness.setdefault("minimal", (s, i, j))
                    break
            if not minimal:
                break
        if not minimal:
            break

    return ComplexReport(dd_zero=dd_zero, homogeneous=homogeneous,
                         minimal=minimal, witness=witness)
