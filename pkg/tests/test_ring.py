"""Polynomial kernel: exact arithmetic, weighted degrees, monomial orders."""

import pytest
from hypothesis import given, settings, strategies as st

from arithcurve.ring import (
    QQ,
    EliminationOrder,
    PolyRing,
    PrimeField,
    WeightedGrevlex,
    curve_ring,
    elimination_ring,
)

W = (5, 6, 7, 8, 9)


@pytest.fixture
def R():
    return curve_ring(W)


def test_weighted_degree_of_quadratic_binomial(R):
    p = R.var(0) * R.var(2) + (-1) * (R.var(1) * R.var(1))
    assert p.is_homogeneous
    assert p.weighted_degree() == 12  # 5 + 7 = 6 + 6


def test_additive_inverse_gives_zero(R):
    p = R.var(0) * R.var(2) - R.var(1) * R.var(3)
    assert (p + (-p)).is_zero()
    assert (p + (-p)).terms == ()


def test_one_is_multiplicative_identity(R):
    p = R.var(0) * R.var(2) - R.var(1) ** 2 + 3 * R.var(4)
    assert R.one * p == p
    assert 1 * p == p


def test_inhomogeneous_marker(R):
    assert (R.var(0) - R.var(1)).weighted_degree() is None
    assert not (R.var(0) - R.var(1)).is_homogeneous


def test_constant_has_degree_zero(R):
    assert R.one.weighted_degree() == 0


def test_zero_degree_raises(R):
    with pytest.raises(ValueError):
        R.zero.weighted_degree()


def test_terms_sorted_strictly_decreasing(R):
    p = R.var(0) ** 3 + R.var(4) + R.var(2) * R.var(3)
    keys = [R.order.key(m) for m, _ in p.terms]
    assert keys == sorted(keys, reverse=True)
    assert len({m for m, _ in p.terms}) == len(p.terms)


def test_no_zero_coefficients_stored(R):
    p = R.var(0) + R.var(1)
    q = p - R.var(1)
    assert all(c != 0 for _, c in q.terms)
    assert q == R.var(0)


def test_grevlex_tie_break(R):
    # X1^2 and X0*X2 share weighted degree 12; grevlex puts X1^2 first
    p = R.var(0) * R.var(2) - R.var(1) ** 2
    assert p.leading_monomial() == (0, 2, 0, 0, 0)


def test_elimination_order_puts_t_first():
    ext = elimination_ring(W)
    t, x0 = ext.var(0), ext.var(1)
    p = x0 ** 5 - t
    assert p.leading_monomial() == (1, 0, 0, 0, 0, 0)


def test_scalar_and_power(R):
    p = R.var(0) + R.var(1)
    assert p * 0 == R.zero
    assert (p ** 2) == p * p


def test_float_coefficients_rejected(R):
    with pytest.raises(TypeError):
        R.constant(0.5)


def test_prime_field_values_reduced():
    F = PrimeField(7)
    assert F.of(10) == 3
    assert F.of(-1) == 6
    assert F.inv(3) == 5  # 3*5 = 15 = 1 mod 7
    with pytest.raises(ValueError):
        PrimeField(6)


def test_prime_field_rejects_bad_denominator():
    F = PrimeField(7)
    with pytest.raises(ZeroDivisionError):
        F.of(QQ.of(1) / QQ.of(7))


def test_rationals_reduced_positive_denominator():
    c = QQ.of(4) / QQ.of(-6)
    assert c.numerator == -2 and c.denominator == 3


# -- property tests ------------------------------------------------------------

NVARS = 4
SMALL_W = (3, 4, 5, 7)


def poly_strategy(ring):
    exps = st.tuples(*[st.integers(0, 4) for _ in range(NVARS)])
    term = st.tuples(exps, st.integers(-5, 5))
    return st.lists(term, max_size=5).map(
        lambda ts: ring.from_dict(
            {m: ring.field.of(sum(c for m2, c in ts if m2 == m)) for m, _ in ts}
        )
    )


RQ = PolyRing(tuple(f"X{i}" for i in range(NVARS)), SMALL_W)


@settings(max_examples=60, deadline=None)
@given(poly_strategy(RQ), poly_strategy(RQ))
def test_addition_commutes(p, q):
    assert p + q == q + p


@settings(max_examples=60, deadline=None)
@given(poly_strategy(RQ), poly_strategy(RQ))
def test_multiplication_commutes(p, q):
    assert p * q == q * p


@settings(max_examples=40, deadline=None)
@given(poly_strategy(RQ), poly_strategy(RQ), poly_strategy(RQ))
def test_multiplication_associates_and_distributes(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@settings(max_examples=60, deadline=None)
@given(poly_strategy(RQ), poly_strategy(RQ))
def test_rational_and_prime_backends_agree(p, q):
    """Integer computations reduced mod p match the prime-field computation."""
    Fp = PrimeField(32003)
    Rp = PolyRing(RQ.names, RQ.weights, field=Fp)
    assert (p * q + p).change_ring(Rp) == (
        p.change_ring(Rp) * q.change_ring(Rp) + p.change_ring(Rp)
    )


@settings(max_examples=60, deadline=None)
@given(
    st.tuples(*[st.integers(0, 5) for _ in range(NVARS)]),
    st.tuples(*[st.integers(0, 5) for _ in range(NVARS)]),
    st.tuples(*[st.integers(0, 3) for _ in range(NVARS)]),
)
def test_order_keys_multiplicative(u, v, w):
    order = WeightedGrevlex(SMALL_W)
    if order.key(u) > order.key(v):
        uw = tuple(a + b for a, b in zip(u, w))
        vw = tuple(a + b for a, b in zip(v, w))
        assert order.key(uw) > order.key(vw)


def test_elimination_order_is_multiplicative():
    order = EliminationOrder(1, SMALL_W)
    u, v, w = (1, 0, 0, 2, 0), (0, 3, 1, 0, 0), (2, 1, 0, 0, 1)
    assert order.key(u) > order.key(v)
    uw = tuple(a + b for a, b in zip(u, w))
    vw = tuple(a + b for a, b in zip(v, w))
    assert order.key(uw) > order.key(vw)
