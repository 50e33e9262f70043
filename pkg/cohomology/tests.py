import random

from django.test import SimpleTestCase, override_settings

from algebra.exceptions import ParameterError, UnsupportedOperationError
from algebra.models import FAIL, PASS, UNDETERMINED, GradedRing, Weighting
from cohomology.models import MINUS, PLUS
from cohomology.serializers import CohomologyTableSerializer, DualityReportSerializer
from cohomology.services.cech import (
    build_cech,
    euler_characteristic,
    multidegree_cohomology,
    term_euler_characteristic,
    triangle_consistent,
)
from cohomology.services.checks import canonical_vanishing_check, duality_check
from cohomology.services.tables import closed_form_table, cohomology_table, twist_table
from rings.models import RingSpec
from rings.testing import fixture_spec

CONFIGURATIONS = [
    ((1,), (-1,)),
    ((1, 1), (-1,)),
    ((1, 1), (-1, -1)),
    ((1, 1, 1), (-1, -1)),
    ((1,), (-1, -1, -1)),
    ((1, 2), (-1,)),
    ((1, 2), (-1, -3)),
]


def polynomial_spec(plus, minus=(), zero=0):
    names = (
        [f"x{i + 1}" for i in range(len(plus))]
        + [f"y{i + 1}" for i in range(len(minus))]
        + [f"z{i + 1}" for i in range(zero)]
    )
    weights = tuple(plus) + tuple(minus) + (0,) * zero
    return RingSpec(GradedRing(Weighting(tuple(names), weights)))


class CechComplexTests(SimpleTestCase):
    def test_single_variable(self):
        complex_ = build_cech(polynomial_spec((1,)), PLUS)
        self.assertEqual(complex_.terms(), [(0, ()), (1, (0,))])

    def test_two_positive_variables(self):
        complex_ = build_cech(fixture_spec("flip_21"), PLUS)
        self.assertEqual(
            [degree for degree, _ in complex_.terms()], [0, 1, 1, 2]
        )
        minus = build_cech(fixture_spec("flip_21"), MINUS)
        self.assertEqual(minus.terms(), [(0, ()), (1, (2,))])

    def test_plain_drops_the_ring(self):
        complex_ = build_cech(fixture_spec("flip_21"), PLUS, extended=False)
        self.assertEqual(complex_.terms(), [(0, (0,)), (0, (1,)), (1, (0, 1))])

    def test_relations_unsupported(self):
        with self.assertRaises(UnsupportedOperationError):
            build_cech(fixture_spec("brown_reid"), PLUS)

    def test_inverting_must_reorder_block(self):
        with self.assertRaises(ParameterError):
            build_cech(fixture_spec("flip_21"), PLUS, inverting=(0, 2))

    def test_invalid_side(self):
        with self.assertRaises(ParameterError):
            build_cech(fixture_spec("flip_21"), "left")

    # Multidegree Tests
    def test_multidegree_examples(self):
        complex_ = build_cech(polynomial_spec((1, 1)), PLUS)
        self.assertEqual(multidegree_cohomology(complex_, (-1, -2)), {0: 0, 1: 0, 2: 1})
        self.assertEqual(multidegree_cohomology(complex_, (0, 0)), {0: 0, 1: 0, 2: 0})
        self.assertEqual(multidegree_cohomology(complex_, (-1, 3)), {0: 0, 1: 0, 2: 0})
        line = build_cech(polynomial_spec((1,)), PLUS)
        self.assertEqual(multidegree_cohomology(line, (-1,)), {0: 0, 1: 1})

    def test_multidegree_outside_block(self):
        """Test a negative exponent outside the inverting block gives nothing"""
        complex_ = build_cech(fixture_spec("flip_21"), PLUS)
        self.assertEqual(multidegree_cohomology(complex_, (-1, -1, -1)), {0: 0, 1: 0, 2: 0})

    def test_degenerate_block(self):
        """Test an empty block gives RGamma = A and a zero Cech complex"""
        spec = polynomial_spec((1, 1))
        extended = build_cech(spec, MINUS)
        self.assertTrue(extended.is_degenerate)
        table = cohomology_table(extended, -2, 3)
        self.assertEqual(table.rows(), [(0, 0, 1), (0, 1, 2), (0, 2, 3), (0, 3, 4)])
        plain = cohomology_table(build_cech(spec, MINUS, extended=False), -2, 3)
        self.assertEqual(plain.rows(), [])
        self.assertTrue(plain.is_complete)


class CohomologyTableTests(SimpleTestCase):
    def test_two_unit_variables(self):
        """Test H^2 at weight -w has dimension w - 1"""
        table = cohomology_table(build_cech(polynomial_spec((1, 1)), PLUS), -8, 2)
        for w in range(-2, 9):
            self.assertEqual(table.dim(2, -w), max(w - 1, 0))
        self.assertEqual(table.nonzero_degrees(), [2])
        self.assertTrue(table.is_complete)

    def test_flip_21_weight_minus_three(self):
        table = cohomology_table(build_cech(fixture_spec("flip_21"), PLUS), -3, -3)
        self.assertEqual(table.dim(2, -3), 3)

    def test_concentrated_in_top_degree(self):
        for plus, minus in CONFIGURATIONS:
            spec = polynomial_spec(plus, minus)
            table = cohomology_table(build_cech(spec, PLUS), -8, 8)
            self.assertEqual(table.nonzero_degrees(), [spec.p])
            self.assertEqual(table.nonzero_weights()[-1], -spec.weighting.eta_plus)

    def test_matches_closed_form(self):
        """Test Cech tables agree with the closed form on every configuration"""
        for plus, minus in CONFIGURATIONS:
            spec = polynomial_spec(plus, minus)
            for side in (PLUS, MINUS):
                table = cohomology_table(build_cech(spec, side), -8, 8)
                oracle = closed_form_table(spec, side, -8, 8)
                self.assertEqual(table.entries, oracle.entries, (plus, minus, side))

    def test_inverting_order_independence(self):
        rng = random.Random(5)
        for plus, minus in CONFIGURATIONS:
            spec = polynomial_spec(plus, minus)
            for side in (PLUS, MINUS):
                block = list(spec.weighting.positive if side == PLUS else spec.weighting.negative)
                reference = cohomology_table(build_cech(spec, side), -6, 6)
                plain = cohomology_table(build_cech(spec, side, False), -3, 3, box=2)
                for _ in range(5):
                    rng.shuffle(block)
                    permuted = cohomology_table(build_cech(spec, side, inverting=block), -6, 6)
                    self.assertEqual(permuted.entries, reference.entries)
                    permuted_plain = cohomology_table(
                        build_cech(spec, side, False, inverting=block), -3, 3, box=2
                    )
                    self.assertEqual(permuted_plain.entries, plain.entries)

    def test_support_bound(self):
        """Test cohomology sits where exactly the inverting exponents are negative"""
        for plus, minus in CONFIGURATIONS:
            spec = polynomial_spec(plus, minus)
            for side in (PLUS, MINUS):
                complex_ = build_cech(spec, side)
                table = cohomology_table(complex_, -8, 8)
                for _, multidegree in table.multigraded:
                    for v, e in enumerate(multidegree):
                        if v in complex_.inverting:
                            self.assertLessEqual(e, -1)
                        else:
                            self.assertGreaterEqual(e, 0)

    def test_plain_table_single_sign(self):
        """Test the plain complex of k[x1,x2] has A in degree 0 and the top term in degree 1"""
        table = cohomology_table(build_cech(polynomial_spec((1, 1)), PLUS, extended=False), -4, 3)
        self.assertTrue(table.is_complete)
        for i in range(0, 4):
            self.assertEqual(table.dim(0, i), i + 1)
        for w in range(2, 5):
            self.assertEqual(table.dim(1, -w), w - 1)

    @override_settings(GRADEDFLIP={"ZERO_WEIGHT_BOX": 3})
    def test_plain_table_both_signs_is_boxed(self):
        table = cohomology_table(build_cech(fixture_spec("atiyah"), PLUS, extended=False), -2, 2)
        self.assertFalse(table.is_complete)
        self.assertEqual(table.box, 3)
        # x^k y^k for k <= 3
        self.assertEqual(table.dim(0, 0), 4)

    def test_zero_weight_variables(self):
        spec = polynomial_spec((1,), (-1,), zero=1)
        table = cohomology_table(build_cech(spec, PLUS), -3, 0, box=2)
        self.assertFalse(table.is_complete)
        self.assertEqual(table.box, 2)
        # x^-1 z^k, k = 0..2
        self.assertEqual(table.dim(1, -1), 3)
        with self.assertRaises(UnsupportedOperationError):
            closed_form_table(spec, PLUS, -3, 0)

    def test_empty_range(self):
        with self.assertRaises(ParameterError):
            cohomology_table(build_cech(fixture_spec("atiyah"), PLUS), 2, 1)

    def test_twist_table(self):
        table = closed_form_table(fixture_spec("flip_21"), PLUS, -6, 0)
        twisted = twist_table(table, 1)
        self.assertEqual(twisted.dim(2, -2), table.dim(2, -3))
        self.assertEqual((twisted.lo, twisted.hi), (-5, 1))

    def test_serializer(self):
        table = cohomology_table(build_cech(fixture_spec("atiyah"), PLUS), -2, 0)
        data = CohomologyTableSerializer(table).data
        self.assertEqual(data["side"], PLUS)
        self.assertTrue(data["complete"])
        self.assertEqual(data["weights"], [{"h": 1, "i": -2, "dim": 2}, {"h": 1, "i": -1, "dim": 1}])


class EulerCharacteristicTests(SimpleTestCase):
    def test_sampled_multidegrees(self):
        """Test Euler characteristics and the triangle on sampled multidegrees"""
        rng = random.Random(1234)
        samples = 0
        for plus, minus in CONFIGURATIONS:
            spec = polynomial_spec(plus, minus)
            nvars = len(spec.weighting)
            for side in (PLUS, MINUS):
                complexes = [build_cech(spec, side, extended) for extended in (True, False)]
                for _ in range(750):
                    multidegree = tuple(rng.randint(-3, 3) for _ in range(nvars))
                    for complex_ in complexes:
                        self.assertEqual(
                            term_euler_characteristic(complex_, multidegree),
                            euler_characteristic(multidegree_cohomology(complex_, multidegree)),
                        )
                    self.assertTrue(triangle_consistent(spec, side, multidegree))
                    samples += 1
        self.assertGreaterEqual(samples, 10**4)


class CanonicalVanishingTests(SimpleTestCase):
    def test_flip_two_three(self):
        spec = polynomial_spec((1, 1), (-1, -1, -1))
        check = canonical_vanishing_check(spec, 1, -8, 8)
        self.assertEqual(check.status, PASS)
        self.assertIn("top weight -2", check.detail)
        self.assertIn("bottom weight 3", check.detail)

    def test_atiyah(self):
        spec = fixture_spec("atiyah")
        self.assertEqual(canonical_vanishing_check(spec, 0, -8, 8).status, PASS)
        failed = canonical_vanishing_check(spec, 2, -8, 8)
        self.assertEqual(failed.status, FAIL)
        self.assertIn("side minus", failed.detail)

    def test_every_configuration(self):
        """Test side plus tops out at -eta+, side minus starts at eta- and a = eta- - eta+ passes"""
        for plus_weights, minus_weights in CONFIGURATIONS:
            spec = polynomial_spec(plus_weights, minus_weights)
            eta_plus, eta_minus = spec.weighting.eta_plus, spec.weighting.eta_minus
            plus = cohomology_table(build_cech(spec, PLUS), -8, 8)
            minus = cohomology_table(build_cech(spec, MINUS), -8, 8)
            self.assertEqual(plus.nonzero_weights()[-1], -eta_plus, spec)
            self.assertEqual(minus.nonzero_weights()[0], eta_minus, spec)
            check = canonical_vanishing_check(spec, eta_minus - eta_plus, -8, 8, tables=(plus, minus))
            self.assertEqual(check.status, PASS, spec)

    def test_zero_weight_is_undetermined(self):
        spec = polynomial_spec((1,), (-1,), zero=1)
        self.assertEqual(canonical_vanishing_check(spec, 0, -4, 4).status, UNDETERMINED)


class DualityTests(SimpleTestCase):
    def test_atiyah_entry(self):
        spec = fixture_spec("atiyah")
        plus = cohomology_table(build_cech(spec, PLUS), -3, -3)
        minus = cohomology_table(build_cech(spec, MINUS), 3, 3)
        self.assertEqual(plus.dim(1, -3), 3)
        self.assertEqual(minus.dim(1, 3), 3)

    def test_rule_holds(self):
        """Test duality at a = eta- - eta+ on every configuration"""
        for plus, minus in CONFIGURATIONS:
            spec = polynomial_spec(plus, minus)
            a = spec.weighting.eta_minus - spec.weighting.eta_plus
            report = duality_check(spec, a, -8, 8)
            self.assertEqual(report.check.status, PASS, (plus, minus))
            self.assertEqual(report.n, spec.p + spec.q - 1)

    def test_wrong_a_fails(self):
        report = duality_check(fixture_spec("atiyah"), 1, -4, 4)
        self.assertEqual(report.check.status, FAIL)
        self.assertTrue(report.discrepancies)
        data = DualityReportSerializer(report).data
        self.assertEqual(len(data["discrepancies"]), len(report.discrepancies))

    def test_needs_both_blocks(self):
        with self.assertRaises(UnsupportedOperationError):
            duality_check(polynomial_spec((1, 1)), 0, -4, 4)
