import random

from django.test import SimpleTestCase
from sympy.polys.domains import GF, QQ

from algebra.exceptions import ParameterError, StructuralError
from algebra.models import (
    EVERY_WEIGHT,
    INHOMOGENEOUS,
    GradedRing,
    Weighting,
    field_domain,
    field_label,
    homogeneity,
    monomial_lcm,
    weight_of_monomial,
)
from algebra.services.enumeration import (
    count_monomials,
    iter_monomials,
    iter_positive_solutions,
)


class WeightingTests(SimpleTestCase):
    def setUp(self):
        self.weighting = Weighting(("x1", "x2", "y1", "y2", "z"), (1, 2, -1, -3, 0))

    def test_blocks_by_sign(self):
        """Test variables are split into blocks by the sign of their weight"""
        self.assertEqual(self.weighting.positive, (0, 1))
        self.assertEqual(self.weighting.negative, (2, 3))
        self.assertEqual(self.weighting.zero, (4,))
        self.assertEqual(self.weighting.eta_plus, 3)
        self.assertEqual(self.weighting.eta_minus, 4)

    def test_rejects_mismatched_lengths(self):
        with self.assertRaises(StructuralError):
            Weighting(("x", "y"), (1,))

    def test_rejects_duplicate_names(self):
        with self.assertRaises(StructuralError):
            Weighting(("x", "x"), (1, -1))

    def test_restrict(self):
        restricted = self.weighting.restrict((3, 0))
        self.assertEqual(restricted.names, ("y2", "x1"))
        self.assertEqual(restricted.weights, (-3, 1))


class PolynomialTests(SimpleTestCase):
    def setUp(self):
        self.weighting = Weighting(("x1", "x2", "y1"), (1, 2, -1))
        self.base = GradedRing(self.weighting)

    # Weight Tests
    def test_weight_of_monomial(self):
        self.assertEqual(weight_of_monomial((2, 1, 3), self.weighting), 1)
        self.assertEqual(weight_of_monomial((0, 0, 0), self.weighting), 0)

    def test_weight_of_monomial_length_mismatch(self):
        """Test a monomial of the wrong length is a structural error"""
        with self.assertRaises(StructuralError):
            weight_of_monomial((1, 1), self.weighting)

    def test_homogeneity(self):
        x1, x2, y1 = (self.base.gen(i) for i in range(3))
        self.assertEqual(homogeneity(x1 * x1 - x2), 2)
        self.assertEqual(homogeneity(x1 + y1), INHOMOGENEOUS)
        self.assertEqual(homogeneity(self.base.zero()), EVERY_WEIGHT)
        self.assertEqual((x1 * y1).weight, 0)

    def test_product_weight_is_sum(self):
        x1, x2, y1 = (self.base.gen(i) for i in range(3))
        f = x1 * x1 - x2
        g = y1 * y1 * y1 + 3 * x1 * y1 * y1 * y1 * y1
        self.assertEqual((f * g).weight, f.weight + g.weight)

    def test_monomial_rejects_negative_exponents(self):
        with self.assertRaises(StructuralError):
            self.base.monomial((1, -1, 0))

    def test_ring_mismatch(self):
        other = GradedRing(Weighting(("a",), (1,)))
        with self.assertRaises(StructuralError):
            self.base.gen(0) + other.gen(0)

    def test_format(self):
        x1, x2, y1 = (self.base.gen(i) for i in range(3))
        self.assertEqual(str(x1 * y1 - 2), "x1*y1 - 2")
        self.assertEqual(str(-(x2 * x2)), "-x2^2")
        self.assertEqual(str(self.base.zero()), "0")

    def test_monomial_lcm(self):
        self.assertEqual(monomial_lcm((2, 0, 1), (1, 3, 1)), (2, 3, 1))


class FieldTests(SimpleTestCase):
    def test_field_domain(self):
        self.assertEqual(field_domain("Q"), QQ)
        self.assertEqual(field_domain("GF", 7), GF(7))
        self.assertEqual(field_label(GF(7)), "GF 7")
        self.assertEqual(field_label(QQ), "Q")

    def test_composite_characteristic(self):
        """Test GF with a composite characteristic is rejected"""
        with self.assertRaises(ParameterError):
            field_domain("GF", 4)

    def test_unknown_field(self):
        with self.assertRaises(ParameterError):
            field_domain("R")


class EnumerationTests(SimpleTestCase):
    def test_count_monomials_standard_flop(self):
        weighting = Weighting(("x1", "x2", "y1", "y2"), (1, 1, -1, -1))
        # sum over k of (number of x-monomials of degree k in the box)^2
        self.assertEqual(count_monomials(weighting, 0, (2, 2, 2, 2)), 19)
        self.assertEqual(
            count_monomials(weighting, 1, (2, 2, 2, 2)),
            len(list(iter_monomials(weighting, 1, (2, 2, 2, 2)))),
        )

    def test_count_monomials_empty_box(self):
        weighting = Weighting(("x", "y"), (1, -1))
        self.assertEqual(count_monomials(weighting, 0, (-1, 3)), 0)
        self.assertEqual(list(iter_monomials(weighting, 0, (2, -1))), [])

    def test_count_monomials_box_length(self):
        weighting = Weighting(("x", "y"), (1, -1))
        with self.assertRaises(StructuralError):
            count_monomials(weighting, 0, (1,))

    def test_iter_positive_solutions(self):
        self.assertEqual(
            sorted(iter_positive_solutions((1, 2), 4)),
            [(0, 2), (2, 1), (4, 0)],
        )
        self.assertEqual(list(iter_positive_solutions((2,), 3)), [])
        self.assertEqual(list(iter_positive_solutions((), 0)), [()])


RANDOM_SAMPLES = 200


class AlgebraPropertyTests(SimpleTestCase):
    def setUp(self):
        self.rng = random.Random(20240611)
        self.weighting = Weighting(("x1", "x2", "y1", "y2"), (1, 2, -1, -3))
        self.base = GradedRing(self.weighting)

    def random_exponents(self, bound=4):
        return tuple(self.rng.randint(0, bound) for _ in range(len(self.weighting)))

    def random_homogeneous(self, weight):
        monomials = list(iter_monomials(self.weighting, weight, (3, 3, 3, 3)))
        poly = self.base.zero()
        for exponents in self.rng.sample(monomials, min(len(monomials), self.rng.randint(1, 4))):
            poly = poly + self.base.monomial(exponents, self.rng.randint(1, 20))
        return poly

    def random_sparse(self):
        poly = self.base.zero()
        for _ in range(self.rng.randint(1, 4)):
            poly = poly + self.base.monomial(self.random_exponents(2), self.rng.randint(-9, 9))
        return poly

    def test_weight_of_monomial_is_additive(self):
        for _ in range(RANDOM_SAMPLES):
            first, second = self.random_exponents(), self.random_exponents()
            product_ = tuple(a + b for a, b in zip(first, second))
            self.assertEqual(
                weight_of_monomial(product_, self.weighting),
                weight_of_monomial(first, self.weighting) + weight_of_monomial(second, self.weighting),
            )

    def test_product_of_homogeneous_is_homogeneous(self):
        for _ in range(RANDOM_SAMPLES // 4):
            a, b = self.rng.randint(-3, 3), self.rng.randint(-3, 3)
            f, g = self.random_homogeneous(a), self.random_homogeneous(b)
            self.assertEqual((f.weight, g.weight), (a, b))
            self.assertEqual((f * g).weight, a + b)

    def test_multiplication_is_associative(self):
        for _ in range(RANDOM_SAMPLES // 4):
            f, g, h = self.random_sparse(), self.random_sparse(), self.random_sparse()
            self.assertEqual(((f * g) * h).poly, (f * (g * h)).poly)

    def test_count_matches_enumeration(self):
        for _ in range(RANDOM_SAMPLES // 4):
            box = self.random_exponents(3)
            weight = self.rng.randint(-6, 6)
            self.assertEqual(
                count_monomials(self.weighting, weight, box),
                len(list(iter_monomials(self.weighting, weight, box))),
            )

    # Counting Examples
    def test_count_unit_weights(self):
        weighting = Weighting(("x", "y"), (1, 1))
        self.assertEqual(count_monomials(weighting, 3, (10, 10)), 4)

    def test_count_mixed_signs(self):
        weighting = Weighting(("x", "y"), (1, -1))
        self.assertEqual(count_monomials(weighting, 0, (2, 2)), 3)
