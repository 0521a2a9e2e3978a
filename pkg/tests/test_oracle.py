"""Oracle ground truth: toric ideals, ideal identities, colon ideals,
minimal resolutions, and exactness verification."""

import pytest

from arithcurve import (
    BettiTable,
    GradedComplex,
    betti_b1,
    betti_bn,
    colon_check,
    colon_ideal,
    groebner,
    ideal_contains,
    ideal_equal,
    minimal_generators,
    minimal_resolution,
    resolution_b1,
    resolution_bn,
    shift_table_b1,
    shift_table_bn,
    shifts_gor4,
    toric_ideal,
    toric_ideal_of_weights,
    validate_sequence,
    verify_complex,
    verify_exactness,
)
from arithcurve.ring import PrimeField, curve_ring


class TestToricIdeal:
    def test_cusp(self):
        gb = toric_ideal_of_weights((2, 3))
        R = curve_ring((2, 3))
        assert gb == [R.var(0) ** 3 - R.var(1) ** 2]

    def test_rational_normal_curve_quartic(self):
        gb = toric_ideal_of_weights((4, 5, 6, 7, 8))
        assert len(groebner(gb)) == len(gb)
        # contains the consecutive-pair minors
        R = curve_ring((4, 5, 6, 7, 8))
        quad = R.var(0) * R.var(2) - R.var(1) ** 2
        assert ideal_contains(gb, [quad])

    def test_kernel_equals_generator_ideal(self):
        seq = validate_sequence(5, 1, 4)
        P = toric_ideal(seq)
        assert ideal_equal(P, list(seq.generators().all))

    def test_nine_minimal_generators_for_gor4(self):
        seq = validate_sequence(6, 1, 4)
        P = toric_ideal(seq)
        assert len(minimal_generators(P)) == 9

    def test_everything_in_kernel_vanishes(self):
        seq = validate_sequence(7, 1, 3)
        for g in toric_ideal(seq):
            assert seq.vanishes(g)

    def test_rejects_nonpositive_weights(self):
        with pytest.raises(ValueError):
            toric_ideal_of_weights((0, 3))


class TestIdealEqual:
    def test_trivial_examples(self):
        R = curve_ring((1, 1))
        x0 = R.var(0)
        assert not ideal_equal([x0], [x0 ** 2])
        assert ideal_equal([x0], [x0])

    def test_sum_of_minor_ideals_is_kernel(self):
        for m0, d, n in [(5, 1, 4), (7, 1, 3), (4, 1, 2), (6, 1, 4)]:
            seq = validate_sequence(m0, d, n)
            both = seq.matrix_a().all_minors2() + seq.matrix_b().all_minors2()
            assert ideal_equal(both, toric_ideal(seq))

    def test_b1_pair_minors_inside_power_minors(self):
        # when b = 1 the power matrix contains every consecutive pair
        seq = validate_sequence(5, 1, 4)
        assert ideal_contains(
            seq.matrix_b().all_minors2(), seq.matrix_a().all_minors2()
        )

    def test_other_power_minors_already_in_pair_ideal(self):
        # 2x2 minors of the power matrix avoiding its first column lie in the
        # ideal of the consecutive-pair minors
        for m0, d, n in [(5, 1, 4), (6, 1, 4), (8, 1, 4), (7, 1, 3)]:
            seq = validate_sequence(m0, d, n)
            B = seq.matrix_b()
            rest = [
                B.minor2(c1, c2)
                for c1 in range(1, B.cols)
                for c2 in range(c1 + 1, B.cols)
            ]
            assert ideal_contains(seq.matrix_a().all_minors2(), rest)


class TestColon:
    def test_colon_by_power_binomial_fixes_pair_ideal(self):
        for m0, d, n in [(8, 1, 4), (6, 1, 3)]:
            seq = validate_sequence(m0, d, n)
            minors = seq.matrix_a().all_minors2()
            psi = seq.generators().powers[0]
            assert colon_check(minors, psi)

    def test_colon_detects_growth(self):
        R = curve_ring((1, 1))
        x0, x1 = R.var(0), R.var(1)
        assert not colon_check([x0 * x1], x0)
        quotient = colon_ideal([x0 * x1], x0)
        assert ideal_equal(quotient, [x1])

    def test_colon_undefined_for_member(self):
        R = curve_ring((1, 1))
        x0 = R.var(0)
        with pytest.raises(ValueError):
            colon_check([x0], x0 ** 2)

    def test_prime_ideal_colon_family(self):
        # for a prime ideal, (P : f) = P for any f outside P
        seq = validate_sequence(8, 1, 4)
        minors = seq.matrix_a().all_minors2()
        R = seq.ring()
        for f in [R.var(1), R.var(0) * R.var(4), R.var(2) ** 2 + R.var(1) * R.var(3)]:
            assert colon_check(minors, f)

    def test_kernel_ideal_colon_family(self):
        seq = validate_sequence(5, 1, 4)
        gens = list(seq.generators().all)
        R = seq.ring()
        for f in [R.var(0), R.var(3) ** 2, R.var(0) * R.var(2) + R.var(1) ** 2]:
            assert colon_check(gens, f)


class TestMinimalGenerators:
    def test_redundant_member_dropped(self):
        R = curve_ring((1, 1))
        x0, x1 = R.var(0), R.var(1)
        kept = minimal_generators([x0, x1, x0 * x1, x0 ** 3])
        assert sorted(str(p) for p in kept) == ["X0", "X1"]

    def test_curve_generators_already_minimal(self):
        for m0, d, n in [(5, 1, 4), (8, 1, 4), (6, 1, 4)]:
            seq = validate_sequence(m0, d, n)
            gens = list(seq.generators().all)
            assert len(minimal_generators(gens)) == len(gens)


class TestMinimalResolution:
    def test_codim3_gorenstein_shape(self):
        seq = validate_sequence(8, 1, 3)
        C = minimal_resolution(list(seq.generators().all))
        assert C.betti() == (1, 5, 5, 1)
        rep = verify_complex(C)
        assert rep.dd_zero and rep.homogeneous and rep.minimal

    def test_b1_agrees_with_construction(self):
        seq = validate_sequence(5, 1, 4)
        C = minimal_resolution(list(seq.generators().all))
        assert C.betti() == betti_b1(4)
        assert BettiTable.from_complex(C, "oracle").same_shifts(shift_table_b1(seq))

    def test_bn_agrees_with_construction(self):
        seq = validate_sequence(6, 1, 3)
        C = minimal_resolution(list(seq.generators().all))
        assert C.betti() == betti_bn(3)
        assert BettiTable.from_complex(C, "oracle").same_shifts(shift_table_bn(seq))

    def test_gor4_table(self):
        seq = validate_sequence(6, 1, 4)
        C = minimal_resolution(list(seq.generators().all))
        assert BettiTable.from_complex(C, "oracle").same_shifts(
            shifts_gor4(seq.a, seq.d)
        )

    def test_length_equals_codimension(self):
        for m0, d, n in [(5, 1, 4), (8, 1, 4), (6, 1, 4), (7, 1, 3), (4, 1, 2)]:
            seq = validate_sequence(m0, d, n)
            C = minimal_resolution(list(seq.generators().all))
            assert C.length == n

    def test_resolution_of_non_minimal_input(self):
        # redundant generators must not change the Betti numbers
        seq = validate_sequence(7, 1, 3)
        gens = list(seq.generators().all)
        R = seq.ring()
        padded = gens + [gens[0] * R.var(2), gens[1] * R.var(0)]
        C = minimal_resolution(padded)
        assert C.betti() == betti_b1(3)

    def test_field_invariance(self):
        seq = validate_sequence(6, 1, 4)
        over_q = minimal_resolution(list(seq.generators().all))
        over_p = minimal_resolution(list(seq.generators(PrimeField(32003)).all))
        assert BettiTable.from_complex(over_q, "q").same_shifts(
            BettiTable.from_complex(over_p, "p")
        )

    def test_n3_grid_betti_by_residue_class(self):
        """Full oracle grid at n = 3: vectors depend only on the class b."""
        import math

        expected = {1: (1, 6, 8, 3), 2: (1, 5, 5, 1), 3: (1, 4, 5, 2)}
        field = PrimeField(32003)
        for b in (1, 2, 3):
            for a in (1, 2):
                for d in (1, 2, 3):
                    m0 = 3 * a + b
                    if math.gcd(m0, d) != 1:
                        continue
                    seq = validate_sequence(m0, d, 3)
                    C = minimal_resolution(list(seq.generators(field).all))
                    assert C.betti() == expected[b], (m0, d)

    def test_n2_shapes(self):
        field = PrimeField(32003)
        for m0, d, expected in [(3, 1, (1, 3, 2)), (5, 2, (1, 3, 2)),
                                (4, 1, (1, 2, 1)), (6, 1, (1, 2, 1))]:
            seq = validate_sequence(m0, d, 2)
            C = minimal_resolution(list(seq.generators(field).all))
            assert C.betti() == expected

    def test_exactness_of_own_output(self):
        seq = validate_sequence(8, 1, 3)
        gens = list(seq.generators().all)
        C = minimal_resolution(gens)
        assert verify_exactness(C, gens).all_ok

    def test_rejects_inhomogeneous(self):
        R = curve_ring((5, 6, 7))
        with pytest.raises(ValueError):
            minimal_resolution([R.var(0) + R.var(1)])

    def test_rejects_unit_ideal(self):
        R = curve_ring((5, 6, 7))
        with pytest.raises(ValueError):
            minimal_resolution([R.one])


class TestVerifyExactness:
    def test_constructed_b1_resolution_exact(self):
        seq = validate_sequence(5, 1, 4)
        C = resolution_b1(seq)
        rep = verify_exactness(C, list(seq.generators().all))
        assert rep.all_ok
        assert rep.first_failure() is None

    def test_constructed_bn_resolution_exact(self):
        seq = validate_sequence(8, 1, 4)
        C = resolution_bn(seq)
        assert verify_exactness(C, list(seq.generators().all)).all_ok

    def test_truncated_complex_fails_at_cut(self):
        seq = validate_sequence(5, 1, 4)
        C = resolution_b1(seq)
        truncated = GradedComplex(C.modules[:-1], C.maps[:-1])
        rep = verify_exactness(truncated, list(seq.generators().all))
        assert not rep.all_ok
        assert rep.steps[truncated.length] is False
        assert rep.first_failure() == f"exactness at step {truncated.length}"

    def test_wrong_ideal_detected(self):
        seq = validate_sequence(5, 1, 4)
        C = resolution_b1(seq)
        wrong = [seq.ring().var(0)]
        rep = verify_exactness(C, wrong)
        assert not rep.generates_target
