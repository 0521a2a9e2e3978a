"""Buchberger engine for ideals and submodules of free modules, with syzygies.

Module elements are tuples of polynomials (one per free-module position).
The module order is position-over-term: position 0 dominates, ties broken by
the ring's monomial order, so the leading term of a vector lives in its first
nonzero component.  Ideals are handled as rank-1 modules.

Syzygy extraction keeps, for every basis element, its expression in the
original input vectors.  An S-pair that reduces to zero then yields that
expression as a syzygy of the inputs; because the inputs themselves stay in
the working basis, these transcripts generate the full syzygy module.  No
pair criteria are applied while syzygies are requested (every same-position
pair is reduced); for plain rank-1 basis runs the coprime-lead criterion is
used to skip pairs.

All computations are deterministic: fixed insertion order, pairs processed in
increasing (lcm order key, position, i, j), reducers chosen first-in-basis.
Resource limits are explicit errors, never silent truncation.
"""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass
from typing import Optional, Sequence

from .ring import (
    Polynomial,
    PolyRing,
    monomial_div,
    monomial_divides,
    monomial_lcm,
)


class ResourceLimitExceeded(RuntimeError):
    pass


@dataclass
class Limits:
    """Caps for the engine; exceeding one raises ResourceLimitExceeded."""

    max_spairs: int = 2_000_000
    max_basis: int = 100_000
    max_support: int = 1_000_000  # largest allowed term count per basis element
    deadline_s: Optional[float] = None  # wall-clock budget for this computation

    def start(self) -> "_Meter":
        return _Meter(self)


class _Meter:
    def __init__(self, limits: Limits):
        self.limits = limits
        self.spairs = 0
        self.t0 = time.monotonic()

    def tick_pair(self):
        self.spairs += 1
        if self.spairs > self.limits.max_spairs:
            raise ResourceLimitExceeded(
                f"S-pair budget {self.limits.max_spairs} exhausted"
            )
        if (
            self.limits.deadline_s is not None
            and self.spairs % 64 == 0
            and time.monotonic() - self.t0 > self.limits.deadline_s
        ):
            raise ResourceLimitExceeded(
                f"deadline of {self.limits.deadline_s}s exceeded"
            )

    def check_basis(self, size: int):
        if size > self.limits.max_basis:
            raise ResourceLimitExceeded(f"basis size cap {self.limits.max_basis} hit")

    def check_support(self, v: "Vector"):
        support = sum(len(p.terms) for p in v)
        if support > self.limits.max_support:
            raise ResourceLimitExceeded(
                f"support size {support} exceeds cap {self.limits.max_support}"
            )


DEFAULT_LIMITS = Limits()


# -- vectors -----------------------------------------------------------------

Vector = tuple  # tuple[Polynomial, ...]


def v_is_zero(v: Vector) -> bool:
    return all(p.is_zero() for p in v)


def v_leading(v: Vector):
    """Leading module term (pos, exps, coeff) under position-over-term, or None."""
    for pos, p in enumerate(v):
        if not p.is_zero():
            exps, coeff = p.leading_term()
            return pos, exps, coeff
    return None


def v_sub(v: Vector, w: Vector) -> Vector:
    return tuple(a - b for a, b in zip(v, w))


def v_mul_term(v: Vector, exps, coeff) -> Vector:
    return tuple(p.mul_term(exps, coeff) for p in v)


def v_scale(v: Vector, coeff) -> Vector:
    return tuple(p.scale(coeff) for p in v)


def v_degree(v: Vector, shifts: Optional[Sequence[int]] = None):
    """Weighted degree of a homogeneous vector (None if inhomogeneous/zero)."""
    degs = set()
    for pos, p in enumerate(v):
        if p.is_zero():
            continue
        d = p.weighted_degree()
        if d is None:
            return None
        degs.add(d + (shifts[pos] if shifts else 0))
    if len(degs) != 1:
        return None
    return degs.pop()


class _Engine:
    """One Buchberger run over vectors of a fixed rank."""

    def __init__(self, ring: PolyRing, rank: int, want_syzygies: bool,
                 limits: Limits):
        self.ring = ring
        self.rank = rank
        self.want_syz = want_syzygies
        self.meter = limits.start()
        self.basis: list[Vector] = []
        self.leads: list[tuple] = []  # (pos, exps); basis elements are monic
        self.coords: list[Vector] = []  # expressions in the original inputs
        self.by_pos: dict[int, list[int]] = {}
        self.pairs: list[tuple] = []  # (sort_key, i, j)
        self.syzygies: list[Vector] = []
        self.n_inputs = 0

    # -- reduction ----------------------------------------------------------

    def _find_reducer(self, pos: int, exps) -> Optional[int]:
        for idx in self.by_pos.get(pos, ()):  # first match: deterministic
            if monomial_divides(self.leads[idx][1], exps):
                return idx
        return None

    def top_reduce(self, v: Vector, coord: Optional[Vector]):
        """Cancel leading terms until none is reducible; returns (v, coord)."""
        while True:
            lead = v_leading(v)
            if lead is None:
                return v, coord
            pos, exps, coeff = lead
            idx = self._find_reducer(pos, exps)
            if idx is None:
                return v, coord
            u = monomial_div(exps, self.leads[idx][1])
            v = v_sub(v, v_mul_term(self.basis[idx], u, coeff))
            if coord is not None:
                coord = v_sub(coord, v_mul_term(self.coords[idx], u, coeff))

    def normal_form(self, v: Vector) -> Vector:
        """Full normal form: every remaining term is irreducible."""
        ring = self.ring
        remainder = [ring.zero] * self.rank
        work = v
        while True:
            lead = v_leading(work)
            if lead is None:
                break
            pos, exps, coeff = lead
            idx = self._find_reducer(pos, exps)
            if idx is not None:
                u = monomial_div(exps, self.leads[idx][1])
                work = v_sub(work, v_mul_term(self.basis[idx], u, coeff))
            else:
                head = ring.monomial(exps, 1).scale(coeff)
                remainder[pos] = remainder[pos] + head
                w = list(work)
                w[pos] = w[pos] - head
                work = tuple(w)
        return tuple(remainder)

    # -- basis growth ---------------------------------------------------------

    def add_element(self, v: Vector, coord: Optional[Vector]):
        lead = v_leading(v)
        assert lead is not None
        pos, exps, coeff = lead
        inv = self.ring.field.inv(coeff)
        v = v_scale(v, inv)
        if coord is not None:
            coord = v_scale(coord, inv)
        new = len(self.basis)
        # skip the coprime-lead pair only in plain rank-1 runs: for modules or
        # syzygy extraction every same-position pair must be reduced
        use_coprime = self.rank == 1 and not self.want_syz
        for other in self.by_pos.get(pos, ()):
            oexps = self.leads[other][1]
            if use_coprime and all(a == 0 or b == 0 for a, b in zip(oexps, exps)):
                continue
            heapq.heappush(self.pairs, self._pair_key_for(pos, oexps, exps, other, new))
        self.basis.append(v)
        self.leads.append((pos, exps))
        self.coords.append(coord)
        self.by_pos.setdefault(pos, []).append(new)
        self.meter.check_basis(len(self.basis))
        self.meter.check_support(v)

    def _pair_key_for(self, pos, e1, e2, i, j):
        lcm = monomial_lcm(e1, e2)
        return (self.ring.order.key(lcm), pos, i, j)

    def run(self, vectors: Sequence[Vector]):
        self.n_inputs = len(vectors)
        unit = [self.ring.zero] * self.n_inputs
        for i, v in enumerate(vectors):
            coord = None
            if self.want_syz:
                e = list(unit)
                e[i] = self.ring.one
                coord = tuple(e)
            if v_is_zero(v):
                if self.want_syz:
                    self.syzygies.append(coord)
                continue
            self.add_element(v, coord)
        self._main_loop()
        return self

    def _main_loop(self):
        while self.pairs:
            _, _, i, j = heapq.heappop(self.pairs)
            self.meter.tick_pair()
            e_i = self.leads[i][1]
            e_j = self.leads[j][1]
            lcm = monomial_lcm(e_i, e_j)
            one = self.ring.field.of(1)
            s = v_sub(
                v_mul_term(self.basis[i], monomial_div(lcm, e_i), one),
                v_mul_term(self.basis[j], monomial_div(lcm, e_j), one),
            )
            coord = None
            if self.want_syz:
                coord = v_sub(
                    v_mul_term(self.coords[i], monomial_div(lcm, e_i), one),
                    v_mul_term(self.coords[j], monomial_div(lcm, e_j), one),
                )
            s, coord = self.top_reduce(s, coord)
            if v_is_zero(s):
                if self.want_syz and coord is not None and not v_is_zero(coord):
                    self.syzygies.append(coord)
            else:
                self.add_element(s, coord)


class IncrementalModuleGB:
    """Groebner basis of a growing submodule; supports membership tests.

    Adding a vector completes the basis immediately, so `contains` is always
    answered against the current module.
    """

    def __init__(self, ring: PolyRing, rank: int, limits: Limits = DEFAULT_LIMITS):
        self._eng = _Engine(ring, rank, want_syzygies=False, limits=limits)
        self._empty = True

    def contains(self, v: Vector) -> bool:
        if self._empty:
            return v_is_zero(v)
        reduced, _ = self._eng.top_reduce(v, None)
        return v_is_zero(reduced)

    def add(self, v: Vector):
        if v_is_zero(v):
            return
        reduced, _ = self._eng.top_reduce(v, None)
        if v_is_zero(reduced):
            return
        self._eng.add_element(reduced, None)
        self._eng._main_loop()
        self._empty = False


def minimal_module_generators(vectors: Sequence[Vector], ring: PolyRing,
                              shifts: Optional[Sequence[int]] = None,
                              limits: Limits = DEFAULT_LIMITS) -> list[Vector]:
    """Minimal generating subset of a list of homogeneous vectors.

    Candidates are taken in increasing degree (graded Nakayama); a candidate
    already inside the module of the kept ones is dropped.  Ties and the kept
    order are deterministic.
    """
    nonzero = [v for v in vectors if not v_is_zero(v)]
    if not nonzero:
        return []
    rank = len(nonzero[0])

    def sort_key(v: Vector):
        deg = v_degree(v, shifts)
        if deg is None:
            raise ValueError("minimal generators need homogeneous vectors")
        lead = v_leading(v)
        return (deg, lead[0], ring.order.key(lead[1]))

    inc = IncrementalModuleGB(ring, rank, limits=limits)
    kept: list[Vector] = []
    for v in sorted(nonzero, key=sort_key):
        if inc.contains(v):
            continue
        kept.append(v)
        inc.add(v)
    return kept


def _as_vectors(polys: Sequence[Polynomial]) -> list[Vector]:
    return [(p,) for p in polys]


def _module_run(vectors: Sequence[Vector], ring: PolyRing, rank: int,
                want_syzygies: bool, limits: Limits) -> _Engine:
    eng = _Engine(ring, rank, want_syzygies, limits)
    eng.run(list(vectors))
    return eng


def module_groebner_basis(vectors: Sequence[Vector], ring: PolyRing,
                          limits: Limits = DEFAULT_LIMITS) -> list[Vector]:
    """Groebner basis (not interreduced) of the module the vectors generate."""
    if not vectors:
        return []
    rank = len(vectors[0])
    eng = _module_run(vectors, ring, rank, want_syzygies=False, limits=limits)
    return list(eng.basis)


def module_reducer(basis: Sequence[Vector], ring: PolyRing, rank: int) -> "_Engine":
    """Reusable reducer over a fixed (Groebner) basis; no completion is run."""
    eng = _Engine(ring, rank, want_syzygies=False, limits=DEFAULT_LIMITS)
    for b in basis:
        eng.add_element(b, None)
    eng.pairs.clear()
    return eng


def module_normal_form(v: Vector, basis: Sequence[Vector], ring: PolyRing) -> Vector:
    """Full normal form of v against a module Groebner basis."""
    return module_reducer(basis, ring, len(v)).normal_form(v)


def module_member(v: Vector, basis: Sequence[Vector], ring: PolyRing) -> bool:
    return v_is_zero(module_normal_form(v, basis, ring))


def syzygy_generators(vectors: Sequence[Vector], ring: PolyRing,
                      limits: Limits = DEFAULT_LIMITS) -> list[Vector]:
    """Generators of the syzygy module of the given vectors (in R^len(vectors))."""
    if not vectors:
        return []
    rank = len(vectors[0])
    eng = _module_run(vectors, ring, rank, want_syzygies=True, limits=limits)
    return list(eng.syzygies)


# -- ideal layer ---------------------------------------------------------------


def groebner(gens: Sequence[Polynomial], limits: Limits = DEFAULT_LIMITS) -> list[Polynomial]:
    """Reduced Groebner basis, sorted by increasing leading term.

    Deterministic for fixed input order; idempotent (a reduced basis maps to
    itself).
    """
    nonzero = [g for g in gens if not g.is_zero()]
    if not nonzero:
        return []
    ring = nonzero[0].ring
    eng = _module_run(_as_vectors(nonzero), ring, 1, want_syzygies=False, limits=limits)
    basis = [v[0] for v in eng.basis]
    return _interreduce(basis, ring)


def _interreduce(basis: list[Polynomial], ring: PolyRing) -> list[Polynomial]:
    # minimalize: drop any element whose leading monomial is divisible by
    # another's, preferring to keep smaller leading terms
    basis = sorted(basis, key=lambda p: ring.order.key(p.leading_monomial()))
    kept: list[Polynomial] = []
    for p in basis:
        lm = p.leading_monomial()
        if any(monomial_divides(q.leading_monomial(), lm) for q in kept):
            continue
        kept.append(p)
    # tail-reduce each against the others
    reduced: list[Polynomial] = []
    for i, p in enumerate(kept):
        others = kept[:i] + kept[i + 1 :]
        reduced.append(reduce_poly(p, others).monic())
    reduced.sort(key=lambda p: ring.order.key(p.leading_monomial()))
    return reduced


def reduce_poly(p: Polynomial, basis: Sequence[Polynomial]) -> Polynomial:
    """Full normal form of p modulo a list of polynomials."""
    if p.is_zero() or not basis:
        return p
    ring = p.ring
    nf = module_normal_form((p,), _as_vectors([b for b in basis if not b.is_zero()]), ring)
    return nf[0]


def ideal_member(p: Polynomial, gb: Sequence[Polynomial]) -> bool:
    return reduce_poly(p, gb).is_zero()
