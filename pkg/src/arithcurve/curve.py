"""Arithmetic sequences, their numerical semigroup, and the curve ideal's generators.

A sequence m0, m0+d, ..., m0+n*d qualifies when (i) the terms have gcd 1,
(ii) they increase strictly, and (iii) no term is a non-negative integer
combination of the others, i.e. the terms generate their numerical semigroup
minimally.  Writing m0 = a*n + b with b in [1, n], minimality forces a >= 1.

The defining ideal of the curve X_i = t^{m_i} is generated by two families of
homogeneous binomials (weights deg X_i = m_i):

  quadratics  X_i*X_{j+1} - X_j*X_{i+1}          for 0 <= i < j <= n-1
  powers      X_{b+j-2}*X_n^a - X_{j-2}*X_0^{a+d}  for 2 <= j <= n+2-b

which are exactly the 2x2 minors of the consecutive-pair matrix (matrix_a)
and the first-column 2x2 minors of the power-column matrix (matrix_b).
Indexing is stable: quadratics in lexicographic (i, j) order, powers by
ascending j, `all` = quadratics followed by powers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .matrices import PolyMatrix
from .ring import QQ, Polynomial, PolyRing, curve_ring


class SequenceError(ValueError):
    """Input fails one of the defining conditions."""


class GcdNotOne(SequenceError):
    pass


class FirstTermTooSmall(SequenceError):
    """m0 <= n, so the quotient of m0 by n vanishes and minimality fails."""


class NotMinimalGenerators(SequenceError):
    """Some term is a non-negative integer combination of the others."""


def _representable(target: int, parts: tuple[int, ...]) -> bool:
    """Exact reachability of `target` as a non-negative combination of `parts`."""
    reachable = bytearray(target + 1)
    reachable[0] = 1
    for v in range(1, target + 1):
        for p in parts:
            if p <= v and reachable[v - p]:
                reachable[v] = 1
                break
    return bool(reachable[target])


@dataclass(frozen=True)
class ArithmeticSequence:
    """Validated sequence with the derived decomposition m0 = a*n + b."""

    m0: int
    d: int
    n: int
    a: int
    b: int
    terms: tuple[int, ...]

    @classmethod
    def validate(cls, m0: int, d: int, n: int) -> "ArithmeticSequence":
        if m0 < 1:
            raise ValueError("m0 must be a positive integer")
        if d < 0:
            raise ValueError("common difference d must be non-negative")
        if n < 2:
            raise ValueError("n must be at least 2")
        terms = tuple(m0 + i * d for i in range(n + 1))
        g = math.gcd(*terms)
        if g != 1:
            raise GcdNotOne(f"gcd{terms} = {g} != 1")
        b = m0 % n or n
        a = (m0 - b) // n
        if a < 1:
            raise FirstTermTooSmall(
                f"m0 = {m0} <= n = {n}: writing m0 = a*n + b with b in [1,n] "
                f"gives a = 0, and the terms cannot generate minimally"
            )
        for j, mj in enumerate(terms):
            others = terms[:j] + terms[j + 1 :]
            if _representable(mj, others):
                raise NotMinimalGenerators(
                    f"term m_{j} = {mj} is a non-negative combination of {others}"
                )
        return cls(m0=m0, d=d, n=n, a=a, b=b, terms=terms)

    # -- ring and parametrization -----------------------------------------

    def ring(self, field=QQ) -> PolyRing:
        return _cached_ring(self.terms, field)

    def semigroup_contains(self, x: int) -> bool:
        """Exact membership of x in the semigroup generated by the terms."""
        if x < 0:
            return False
        if x == 0:
            return True
        return _representable(x, self.terms)

    def phi_image(self, p: Polynomial) -> dict[int, object]:
        """Image of p under X_i -> t^{m_i}, as {t-exponent: coefficient}."""
        field = p.ring.field
        out: dict[int, object] = {}
        for exps, coeff in p.terms:
            e = sum(x * m for x, m in zip(exps, self.terms))
            s = field.add(out[e], coeff) if e in out else coeff
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return out

    def vanishes(self, p: Polynomial) -> bool:
        """True iff p lies in the kernel of the parametrization map."""
        return not self.phi_image(p)

    # -- the two matrices ---------------------------------------------------

    def matrix_a(self, field=QQ) -> PolyMatrix:
        """2 x n matrix whose column j (0-based) is (X_j, X_{j+1})."""
        R = self.ring(field)
        top = [R.var(j) for j in range(self.n)]
        bottom = [R.var(j + 1) for j in range(self.n)]
        return PolyMatrix.from_rows(R, [top, bottom])

    def matrix_b(self, field=QQ) -> PolyMatrix:
        """2 x (n-b+2) matrix: first column (X_n^a, X_0^{a+d}), then (X_{j-1}, X_{b+j-1})."""
        R = self.ring(field)
        n, a, b, d = self.n, self.a, self.b, self.d
        top = [R.var(n, a)] + [R.var(j - 1) for j in range(1, n - b + 2)]
        bottom = [R.var(0, a + d)] + [R.var(b + j - 1) for j in range(1, n - b + 2)]
        return PolyMatrix.from_rows(R, [top, bottom])

    def generators(self, field=QQ) -> "GeneratorSet":
        """Minimal binomial generating set of the curve ideal."""
        R = self.ring(field)
        n, a, b, d = self.n, self.a, self.b, self.d
        quadratics = tuple(
            R.var(i) * R.var(j + 1) - R.var(j) * R.var(i + 1)
            for i in range(n)
            for j in range(i + 1, n)
        )
        powers = tuple(
            R.var(b + j - 2) * R.var(n, a) - R.var(j - 2) * R.var(0, a + d)
            for j in range(2, n + 2 - b + 1)
        )
        return GeneratorSet(sequence=self, quadratics=quadratics, powers=powers)

    def __str__(self):
        return f"({self.m0}, {self.d}, {self.n})"


@lru_cache(maxsize=None)
def _cached_ring(terms: tuple[int, ...], field) -> PolyRing:
    return curve_ring(terms, field=field)


def validate_sequence(m0: int, d: int, n: int) -> ArithmeticSequence:
    return ArithmeticSequence.validate(m0, d, n)


@dataclass(frozen=True)
class GeneratorSet:
    sequence: ArithmeticSequence
    quadratics: tuple[Polynomial, ...]
    powers: tuple[Polynomial, ...]

    @property
    def all(self) -> tuple[Polynomial, ...]:
        return self.quadratics + self.powers

    def __len__(self) -> int:
        return len(self.quadratics) + len(self.powers)

    def degrees(self) -> list[int]:
        return [p.weighted_degree() for p in self.all]

    def labels(self) -> list[str]:
        n = self.sequence.n
        out = [
            f"q[{i},{j}]" for i in range(n) for j in range(i + 1, n)
        ]
        out += [f"p[{j}]" for j in range(2, self.sequence.n + 2 - self.sequence.b + 1)]
        return out


def expected_generator_count(n: int, b: int) -> int:
    """C(n,2) + n - b + 1, the size of the minimal generating set."""
    return math.comb(n, 2) + n - b + 1
