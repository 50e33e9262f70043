import random

from django.test import SimpleTestCase
from sympy.polys.domains import GF, QQ

from algebra.exceptions import BudgetExceededError, StructuralError
from algebra.models import GradedRing, Weighting, monomial_divides
from algebra.services.enumeration import iter_monomials
from grobner.models import EMPTY_DIMENSION
from grobner.services.buchberger import StepBudget, buchberger, ideal_contains, normal_form
from grobner.services.dimension import independent_set, krull_dimension

RANDOM_IDEALS = 100


def random_polynomial(base, rng, max_degree=2, terms=3):
    poly = base.zero()
    for _ in range(terms):
        exponents = tuple(rng.randint(0, max_degree) for _ in range(base.nvars))
        poly = poly + base.monomial(exponents, rng.randint(1, 50))
    return poly if not poly.is_zero else base.one()


def random_homogeneous(base, rng, weight, box):
    monomials = list(iter_monomials(base.weighting, weight, box))
    chosen = rng.sample(monomials, min(len(monomials), rng.randint(1, 3)))
    poly = base.zero()
    for exponents in chosen:
        poly = poly + base.monomial(exponents, rng.randint(1, 50))
    return poly


class BuchbergerExampleTests(SimpleTestCase):
    def setUp(self):
        self.base = GradedRing(Weighting(("x", "y", "z"), (1, 1, 1)))
        self.x, self.y, self.z = (self.base.gen(i) for i in range(3))

    def test_cyclic_three(self):
        x, y, z = self.x, self.y, self.z
        basis = buchberger([x + y + z, x * y + y * z + z * x, x * y * z - 1])
        self.assertEqual(
            set(basis.leading_monomials), {(1, 0, 0), (0, 2, 0), (0, 0, 3)}
        )
        self.assertEqual(krull_dimension(basis), 0)
        self.assertTrue(all(poly.leading_coefficient == QQ.one for poly in basis))
        self.assertEqual(basis.order, "grevlex")

    def test_unit_ideal(self):
        """Test the unit ideal reduces to {1} and has empty dimension"""
        basis = buchberger([self.x, self.x - 1])
        self.assertTrue(basis.is_unit_ideal)
        self.assertEqual(len(basis), 1)
        self.assertEqual(krull_dimension(basis), EMPTY_DIMENSION)
        self.assertIsNone(independent_set(basis))

    def test_zero_ideal(self):
        basis = buchberger([], base=self.base)
        self.assertEqual(len(basis), 0)
        self.assertEqual(krull_dimension(basis), 3)

    def test_zero_ideal_needs_a_ring(self):
        with self.assertRaises(StructuralError):
            buchberger([])

    def test_twisted_cubic_cone(self):
        base = GradedRing(Weighting(("x", "y", "z", "w"), (1, 1, 1, 1)))
        x, y, z, w = (base.gen(i) for i in range(4))
        basis = buchberger([x * z - y * y, x * w - y * z, y * w - z * z])
        self.assertEqual(krull_dimension(basis), 2)
        self.assertTrue(ideal_contains(basis, z * (x * z - y * y) - y * (x * w - y * z)))
        self.assertFalse(ideal_contains(basis, x * w))

    def test_normal_form(self):
        basis = buchberger([self.x * self.x - self.y])
        remainder = normal_form(self.x * self.x * self.x, basis)
        self.assertEqual(remainder.poly, (self.x * self.y).poly)

    # Budget Tests
    def test_budget_exceeded(self):
        x, y, z = self.x, self.y, self.z
        with self.assertRaises(BudgetExceededError) as context:
            buchberger([x + y + z, x * y + y * z + z * x, x * y * z - 1], budget=1)
        self.assertGreater(context.exception.steps, 1)

    def test_step_budget(self):
        budget = StepBudget(2)
        budget.spend()
        budget.spend()
        with self.assertRaises(BudgetExceededError):
            budget.spend()

    def test_steps_are_recorded(self):
        x, y, z = self.x, self.y, self.z
        basis = buchberger([x + y + z, x * y + y * z + z * x, x * y * z - 1])
        self.assertGreater(basis.steps, 0)


class BuchbergerPropertyTests(SimpleTestCase):
    def setUp(self):
        self.rng = random.Random(20240613)
        self.base = GradedRing(Weighting(("x", "y", "z"), (1, 1, 1)), GF(32003))

    def random_ideal(self):
        count = self.rng.randint(2, 3)
        return [random_polynomial(self.base, self.rng) for _ in range(count)]

    def test_reduced_and_order_independent(self):
        """Test the reduced basis does not depend on generator order"""
        for _ in range(RANDOM_IDEALS):
            generators = self.random_ideal()
            basis = buchberger(generators)
            shuffled = list(generators)
            self.rng.shuffle(shuffled)
            self.assertEqual(
                [poly.poly for poly in buchberger(shuffled)],
                [poly.poly for poly in basis],
            )
            leading = basis.leading_monomials
            for index, poly in enumerate(basis):
                self.assertEqual(poly.leading_coefficient, self.base.domain.one)
                for monomial, _ in poly.terms():
                    for other, lead in enumerate(leading):
                        if other != index:
                            self.assertFalse(monomial_divides(lead, monomial))

    def test_membership(self):
        """Test generators and their combinations reduce to zero"""
        for _ in range(RANDOM_IDEALS):
            generators = self.random_ideal()
            basis = buchberger(generators)
            combination = self.base.zero()
            for generator in generators:
                self.assertTrue(ideal_contains(basis, generator))
                combination = combination + random_polynomial(self.base, self.rng, 1) * generator
            self.assertTrue(ideal_contains(basis, combination))
            f = random_polynomial(self.base, self.rng)
            self.assertTrue(ideal_contains(basis, f - normal_form(f, basis)))

    def test_dimension_is_monotone(self):
        """Test adding a generator never raises the dimension"""
        for _ in range(RANDOM_IDEALS):
            generators = self.random_ideal()
            extra = random_polynomial(self.base, self.rng)
            smaller = krull_dimension(buchberger(generators))
            larger = krull_dimension(buchberger(generators + [extra]))
            self.assertLessEqual(larger, smaller)

    def test_homogeneity_preserved(self):
        """Test homogeneous generators give a homogeneous basis"""
        base = GradedRing(Weighting(("x", "y", "t"), (1, 2, -1)), GF(32003))
        for _ in range(RANDOM_IDEALS):
            generators = []
            while len(generators) < 2:
                poly = random_homogeneous(base, self.rng, self.rng.randint(-2, 2), (3, 2, 3))
                if not poly.is_zero:
                    generators.append(poly)
            for poly in buchberger(generators):
                self.assertTrue(poly.is_homogeneous)
