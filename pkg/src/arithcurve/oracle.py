"""Independent ground truth for every construction in this package.

Everything here goes through the Buchberger engine only - no closed form, no
complex construction - so agreement between this module and the constructive
ones is a genuine two-route check.

  toric_ideal          kernel of X_i -> t^{m_i} by eliminating t with a block
                       order (t carries weight 1, keeping the run graded)
  ideal_equal          two-sided membership via reduced bases
  colon_check          (I : f) from the first coordinates of the syzygies of
                       [f, g_1, ..., g_k], compared back to I
  minimal_generators   graded greedy minimalization of a homogeneous set
  minimal_resolution   iterated syzygies, pruned to minimal kernel generators
                       at every step (plus a unit-cancellation safety net), so
                       each differential is minimal and ranks are Betti numbers
  verify_exactness     image of d_1 generates the target ideal, every syzygy
                       of d_s lies in the image of d_{s+1}, and the last map
                       is injective
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from typing import Optional, Sequence

from .closedform import BettiTable
from .complexes import GradedComplex, GradedFreeModule
from .curve import ArithmeticSequence
from .matrices import PolyMatrix
from .ring import (
    QQ,
    Polynomial,
    PolyRing,
    curve_ring,
    drop_first_variable,
    elimination_ring,
)
from .groebner import (
    DEFAULT_LIMITS,
    Limits,
    ResourceLimitExceeded,
    groebner,
    ideal_member,
    minimal_module_generators,
    module_groebner_basis,
    module_reducer,
    syzygy_generators,
    v_is_zero,
)


def toric_ideal_of_weights(weights: Sequence[int], field=QQ,
                           limits: Limits = DEFAULT_LIMITS) -> list[Polynomial]:
    """Reduced basis of the kernel of X_i -> t^{weights[i]} (weights >= 1).

    Takes raw weights so the engine can be self-tested on tiny inputs that are
    not valid curve sequences.
    """
    if any(w < 1 for w in weights):
        raise ValueError("weights must be positive")
    ext = elimination_ring(weights, field=field)
    gens = [ext.var(i + 1) - ext.var(0, w) for i, w in enumerate(weights)]
    gb = groebner(gens, limits=limits)
    target = curve_ring(weights, field=field)
    kept = [g for g in gb if g.leading_monomial()[0] == 0]
    projected = [drop_first_variable(g, target) for g in kept]
    # already a basis of the elimination ideal; re-reduce in the target ring
    # for a canonical, order-sorted result
    return groebner(projected, limits=limits)


def toric_ideal(seq: ArithmeticSequence, field=QQ,
                limits: Limits = DEFAULT_LIMITS) -> list[Polynomial]:
    """Reduced basis of the defining ideal of the curve of `seq`."""
    return toric_ideal_of_weights(seq.terms, field=field, limits=limits)


def ideal_contains(gens: Sequence[Polynomial], polys: Sequence[Polynomial],
                   limits: Limits = DEFAULT_LIMITS) -> bool:
    """True iff every element of `polys` lies in the ideal of `gens`."""
    gb = groebner(list(gens), limits=limits)
    return all(ideal_member(p, gb) for p in polys)


def ideal_equal(gens_a: Sequence[Polynomial], gens_b: Sequence[Polynomial],
                limits: Limits = DEFAULT_LIMITS) -> bool:
    """Two-sided membership check between the generated ideals."""
    gb_a = groebner(list(gens_a), limits=limits)
    gb_b = groebner(list(gens_b), limits=limits)
    return all(ideal_member(p, gb_a) for p in gens_b) and all(
        ideal_member(p, gb_b) for p in gens_a
    )


def colon_ideal(gens: Sequence[Polynomial], f: Polynomial,
                limits: Limits = DEFAULT_LIMITS) -> list[Polynomial]:
    """Generators of (I : f), read off the syzygies of [f, g_1, ..., g_k]."""
    ring = f.ring
    vectors = [(f,)] + [(g,) for g in gens]
    syz = syzygy_generators(vectors, ring, limits=limits)
    out = [s[0] for s in syz if not s[0].is_zero()]
    return out


def colon_check(gens: Sequence[Polynomial], f: Polynomial,
                limits: Limits = DEFAULT_LIMITS) -> bool:
    """Is (I : f) = I?  Requires f not in I; raises ValueError otherwise."""
    gb = groebner(list(gens), limits=limits)
    if ideal_member(f, gb):
        raise ValueError("multiplier lies in the ideal; colon comparison undefined")
    quotient = colon_ideal(gens, f, limits=limits)
    # (I : f) always contains I, so only the forward inclusion needs work
    return all(ideal_member(q, gb) for q in quotient)


def minimal_generators(gens: Sequence[Polynomial],
                       limits: Limits = DEFAULT_LIMITS) -> list[Polynomial]:
    """Subset of a homogeneous generating set that generates minimally.

    Candidates are processed by increasing degree, keeping those not already
    in the ideal of the kept ones (graded Nakayama).
    """
    ring = gens[0].ring
    kept = minimal_module_generators([(g,) for g in gens], ring, limits=limits)
    return [v[0] for v in kept]


# -- minimal free resolution ---------------------------------------------------


def _column_degree(col: Sequence[Polynomial], target_shifts: Sequence[int]):
    degs = set()
    for pos, p in enumerate(col):
        if p.is_zero():
            continue
        d = p.weighted_degree()
        if d is None:
            return None
        degs.add(d + target_shifts[pos])
    if len(degs) != 1:
        return None
    return degs.pop()


def _matrix_columns(mat: PolyMatrix) -> list[tuple]:
    return [mat.column(j) for j in range(mat.cols)]


def _find_unit(mat: PolyMatrix):
    for i in range(mat.rows):
        for j in range(mat.cols):
            e = mat.entry(i, j)
            if not e.is_zero() and e.is_constant():
                return i, j
    return None


def _cancel_unit(prev: Optional[PolyMatrix], cur: PolyMatrix, i: int, j: int,
                 ring: PolyRing):
    """Split off the trivial summand through the unit at cur[i][j].

    Returns (new_prev, new_cur): basis element j of the source and i of the
    target are removed after clearing row i and column j with exact row and
    column operations; the compensating column operations are applied to
    `prev` (the differential out of the target module).
    """
    unit = cur.entry(i, j)
    c_inv = ring.field.inv(unit.leading_coeff())
    cols = cur.cols
    entries = list(cur.entries)

    # column operations: clear row i (compensation would act on the not yet
    # computed next differential, so none is needed)
    for j2 in range(cols):
        if j2 == j:
            continue
        factor = entries[i * cols + j2]
        if factor.is_zero():
            continue
        q = factor.scale(c_inv)
        for r in range(cur.rows):
            pivot = entries[r * cols + j]
            if not pivot.is_zero():
                entries[r * cols + j2] = entries[r * cols + j2] - q * pivot

    # row operations: clear column j; compensate on prev's columns
    prev_entries = list(prev.entries) if prev is not None else None
    for i2 in range(cur.rows):
        if i2 == i:
            continue
        factor = entries[i2 * cols + j]
        if factor.is_zero():
            continue
        q = factor.scale(c_inv)
        for c in range(cols):
            pivot = entries[i * cols + c]
            if not pivot.is_zero():
                entries[i2 * cols + c] = entries[i2 * cols + c] - q * pivot
        if prev_entries is not None:
            # prev <- prev * V^{-1}: column i of prev gains q * column i2
            for r in range(prev.rows):
                add = prev_entries[r * prev.cols + i2]
                if not add.is_zero():
                    prev_entries[r * prev.cols + i] = (
                        prev_entries[r * prev.cols + i] + q * add
                    )

    new_cur = PolyMatrix(ring, cur.rows, cur.cols, entries).delete_row(i).delete_col(j)
    new_prev = None
    if prev is not None:
        new_prev = PolyMatrix(ring, prev.rows, prev.cols, prev_entries).delete_col(i)
    return new_prev, new_cur


def minimal_resolution(gens: Sequence[Polynomial],
                       limits: Limits = DEFAULT_LIMITS,
                       case_tag: str = "oracle") -> GradedComplex:
    """Minimal graded free resolution of R/(gens) by iterated syzygies.

    The generators are first minimalized; at every step the syzygies are
    pruned to a minimal generating set of the kernel (graded Nakayama), so
    each differential is minimal and the ranks are the Betti numbers.  A
    unit-cancellation pass guards the minimality invariant; with the pruning
    in place it is expected to find nothing.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    ring = gens[0].ring
    for g in gens:
        if g.weighted_degree() is None:
            raise ValueError(f"generator {g} is not homogeneous")
        if g.is_constant():
            raise ValueError("a constant generator gives the unit ideal")

    gens = minimal_generators(gens, limits=limits)
    mats: list[PolyMatrix] = [PolyMatrix(ring, 1, len(gens), list(gens))]
    shifts: list[tuple[int, ...]] = [(0,), tuple(g.weighted_degree() for g in gens)]

    max_steps = ring.nvars + 2
    while True:
        if len(mats) > max_steps:
            raise ResourceLimitExceeded(
                f"resolution did not terminate within {max_steps} steps"
            )
        cur = mats[-1]
        tgt_shifts = shifts[-1]
        syz = syzygy_generators(_matrix_columns(cur), ring, limits=limits)
        syz = minimal_module_generators(syz, ring, shifts=tgt_shifts, limits=limits)
        if not syz:
            break
        columns = list(syz)
        new_mat = PolyMatrix(
            ring,
            cur.cols,
            len(columns),
            [col[i] for i in range(cur.cols) for col in columns],
        )
        new_shifts = tuple(_column_degree(col, tgt_shifts) for col in columns)

        # safety net: cancel any unit entry (keeps minimality exact even if
        # the pruning ever left one); compensations act on the previous matrix
        prev = mats[-1]
        prev_shifts = list(shifts[-1])
        cur_shifts = list(new_shifts)
        while True:
            hit = _find_unit(new_mat)
            if hit is None:
                break
            i, j = hit
            prev, new_mat = _cancel_unit(prev, new_mat, i, j, ring)
            del prev_shifts[i]
            del cur_shifts[j]
        mats[-1] = prev
        shifts[-1] = tuple(prev_shifts)
        if new_mat.cols == 0:
            break
        mats.append(new_mat)
        shifts.append(tuple(cur_shifts))

    # a fully cancelled last step leaves an empty matrix; drop it
    while mats and mats[-1].cols == 0:
        mats.pop()
        shifts.pop()

    modules = [
        GradedFreeModule(
            rank=len(sh),
            shifts=sh,
            labels=tuple(f"s{step}.{i}" for i in range(len(sh))),
        )
        for step, sh in enumerate(shifts)
    ]
    return GradedComplex(modules, mats, name=case_tag)


def betti_table_of(gens: Sequence[Polynomial], limits: Limits = DEFAULT_LIMITS,
                   case_tag: str = "oracle") -> BettiTable:
    return BettiTable.from_complex(minimal_resolution(gens, limits=limits), case_tag)


# -- exactness ---------------------------------------------------------------


@dataclass
class ExactnessReport:
    generates_target: bool
    steps: dict = dataclass_field(default_factory=dict)  # step -> bool

    @property
    def all_ok(self) -> bool:
        return self.generates_target and all(self.steps.values())

    def first_failure(self):
        if not self.generates_target:
            return "image of the first differential"
        for s in sorted(self.steps):
            if not self.steps[s]:
                return f"exactness at step {s}"
        return None


def verify_exactness(C: GradedComplex, gens: Sequence[Polynomial],
                     limits: Limits = DEFAULT_LIMITS) -> ExactnessReport:
    """Machine check that C resolves R modulo the ideal of `gens`.

    (a) the entries of d_1 generate the same ideal as `gens`;
    (b) for each s < length, the syzygies of d_s lie in the image of d_{s+1};
    (c) the last differential has no nonzero syzygies (injectivity).
    """
    if C.module(0).rank != 1:
        raise ValueError("step 0 must have rank 1")
    ring = C.differential(1).ring
    report = ExactnessReport(
        generates_target=ideal_equal(list(C.differential(1).row(0)), list(gens),
                                     limits=limits)
    )
    for s in range(1, C.length + 1):
        cols = _matrix_columns(C.differential(s))
        syz = [v for v in syzygy_generators(cols, ring, limits=limits)
               if not v_is_zero(v)]
        if s == C.length:
            report.steps[s] = not syz
        else:
            image = _matrix_columns(C.differential(s + 1))
            gb = module_groebner_basis(image, ring, limits=limits)
            reducer = module_reducer(gb, ring, len(cols))
            report.steps[s] = all(
                v_is_zero(reducer.top_reduce(v, None)[0]) for v in syz
            )
    return report
