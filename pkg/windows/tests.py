import time
from itertools import product
from math import gcd

from django.test import SimpleTestCase, override_settings

from algebra.exceptions import PreconditionError, UnsupportedOperationError
from algebra.models import FAIL, PASS, GradedRing, Weighting
from algebra.services.enumeration import count_monomials
from cohomology.models import MINUS, PLUS
from complexes.services.operations import hilbert_box_count, twist
from complexes.services.presentation import nonpositive_presentation_check
from rings.models import RingSpec
from rings.services.brown_reid import brown_reid_spec
from rings.services.invariants import validate_ci_assumptions
from rings.testing import fixture_spec
from windows.serializers import FunctorImageSerializer, WindowSpecSerializer
from windows.services.functor import (
    functor_euler_check,
    functor_image,
    quotient_weight_count,
    truncated_module_count,
    weight_truncation,
)
from windows.services.windows import QUOTIENT_NOTE, eta, window_generators, window_membership


class WindowGeneratorTests(SimpleTestCase):
    def test_eta(self):
        self.assertEqual(eta(fixture_spec("flip_21")), (2, 1))
        self.assertEqual(eta(fixture_spec("brown_reid")), (3, 6))
        spec = RingSpec(GradedRing(Weighting(("x1", "x2", "y1"), (1, 2, -1))))
        self.assertEqual(eta(spec), (3, 1))

    def test_plus_side(self):
        window = window_generators(fixture_spec("flip_21"), 0, PLUS)
        self.assertEqual(window.generators, ("A", "A(-1)"))
        self.assertEqual(window.note, "")

    def test_minus_side(self):
        window = window_generators(fixture_spec("flip_21"), 0, MINUS)
        self.assertEqual(window.generators, ("A",))
        shifted = window_generators(fixture_spec("standard_flop"), 1, MINUS)
        self.assertEqual(shifted.generators, ("A(1)", "A(2)"))

    def test_brown_reid_has_provenance_note(self):
        window = window_generators(fixture_spec("brown_reid"), 0)
        self.assertEqual(window.generators, ("A", "A(-1)", "A(-2)"))
        self.assertEqual(window.note, QUOTIENT_NOTE)
        data = WindowSpecSerializer(window).data
        self.assertEqual(data["twists"], [0, 1, 2])

    def test_empty_block(self):
        spec = RingSpec(GradedRing(Weighting(("x",), (1,))))
        with self.assertRaises(PreconditionError):
            window_generators(spec, 0, MINUS)


class WindowMembershipTests(SimpleTestCase):
    def test_examples(self):
        spec = fixture_spec("flip_21")
        member = window_membership(spec, 1, 0)
        self.assertTrue(member.member)
        self.assertEqual(member.top_weight, -1)
        boundary = window_membership(spec, 2, 0)
        self.assertFalse(boundary.vanishing)
        self.assertEqual(boundary.top_weight, 0)
        self.assertEqual(boundary.check.status, FAIL)
        below = window_membership(spec, -1, 0)
        self.assertTrue(below.vanishing)
        self.assertFalse(below.generation)

    def test_window_length(self):
        """Test membership at w = 0 holds exactly for 0 <= i < eta+"""
        for name in ("flip_21", "standard_flop", "weighted", "atiyah"):
            spec = fixture_spec(name)
            eta_plus = spec.weighting.eta_plus
            for i in range(-2, eta_plus + 3):
                self.assertEqual(window_membership(spec, i, 0).member, 0 <= i < eta_plus, (name, i))

    def test_quotient_ring(self):
        with self.assertRaises(UnsupportedOperationError):
            window_membership(fixture_spec("brown_reid"), 0, 0)


class FunctorImageTests(SimpleTestCase):
    def test_inside_window(self):
        spec = fixture_spec("flip_21")
        image = functor_image(spec, -1)
        self.assertTrue(image.is_single_module)
        self.assertEqual(image.complex.module(0).twists, (1,))
        self.assertEqual(str(image.complex.module(0)), "A(-1)")

    def test_positive_twist(self):
        """Test the image of A(1) is A(-1) -> A^2"""
        image = functor_image(fixture_spec("flip_21"), 1)
        complex_ = image.complex
        self.assertEqual((complex_.lo, complex_.hi), (-1, 0))
        self.assertEqual(complex_.module(-1).twists, (1,))
        self.assertEqual(complex_.module(0).twists, (0, 0))

    def test_brown_reid(self):
        image = functor_image(fixture_spec("brown_reid"), 1)
        self.assertEqual(image.complex.ranks, (2, 5, 4, 1))
        self.assertIn("Koszul", image.note)
        minimized = functor_image(fixture_spec("brown_reid"), 1, minimized=True)
        self.assertTrue(minimized.minimized)
        self.assertLessEqual(minimized.complex.total_rank, image.complex.total_rank)

    def test_deep_negative_twist_refused(self):
        with self.assertRaises(UnsupportedOperationError) as context:
            functor_image(fixture_spec("flip_21"), -2)
        self.assertIn("cone", str(context.exception))

    def test_other_cutoff_by_twisting(self):
        spec = fixture_spec("flip_21")
        self.assertEqual(
            functor_image(spec, 0, w=1).complex, twist(functor_image(spec, 1).complex, -1)
        )

    def test_serializer(self):
        data = FunctorImageSerializer(functor_image(fixture_spec("flip_21"), 1)).data
        self.assertEqual(data["complex"]["ranks"], [2, 1])
        self.assertEqual(data["twist"], 1)

    # Euler Characteristic Tests
    def test_image_matches_truncated_module(self):
        """Test weightwise box counts of functor images on |weight| <= 8"""
        for name in ("flip_21", "standard_flop", "weighted"):
            spec = fixture_spec(name)
            for i in range(-spec.weighting.eta_plus + 1, 3):
                check = functor_euler_check(functor_image(spec, i), -8, 8, box=5)
                self.assertEqual(check.status, PASS, (name, i, check.detail))

    def test_minimized_image_keeps_counts(self):
        spec = fixture_spec("weighted")
        image = functor_image(spec, 2, minimized=True)
        self.assertEqual(functor_euler_check(image, -6, 6, box=4).status, PASS)

    @override_settings(GRADEDFLIP={"EULER_BOX": 3})
    def test_box_from_settings(self):
        check = functor_euler_check(functor_image(fixture_spec("flip_21"), 1), -2, 2)
        self.assertIn("box 3", check.detail)

    def test_weight_truncation_in_window_is_free(self):
        """Test A(-i) with i >= w is its own truncation"""
        spec = fixture_spec("standard_flop")
        complex_ = weight_truncation(spec, 2, 1)
        self.assertEqual(complex_.ranks, (1,))
        self.assertEqual(complex_.module(0).twists, (2,))

    def test_truncated_and_quotient_counts(self):
        spec = fixture_spec("flip_21")
        box = (4, 4, 4)
        for weight in range(-4, 5):
            total = count_monomials(spec.weighting, weight, box)
            self.assertEqual(
                truncated_module_count(spec, 1, weight, box) + quotient_weight_count(spec, 1, weight, box),
                total,
            )
        # weight 0, x-part of weight 0 only: 1, y^1 x^1 and y^2 x^2 etc. are truncated
        self.assertEqual(quotient_weight_count(spec, 1, 0, box), 1)
        self.assertEqual(truncated_module_count(spec, 0, 0, box), count_monomials(spec.weighting, 0, box))

    def test_truncation_count_matches_presentation(self):
        spec = fixture_spec("weighted")
        complex_ = weight_truncation(spec, 0, 3)
        box = (4,) * 4
        for weight in range(-4, 8):
            self.assertEqual(
                hilbert_box_count(complex_, weight, box), truncated_module_count(spec, 3, weight, box)
            )


class BrownReidFamilyTests(SimpleTestCase):
    def test_checks_hold_over_parameter_grid(self):
        """Test CI level 2, the non-positive presentation and the window on every small parameter choice"""
        started = time.perf_counter()
        instances = 0
        for lam, mu, d, e, alpha, beta in product(range(1, 5), range(1, 5), *(range(1, 3),) * 4):
            if gcd(lam, mu) != 1:
                continue
            instances += 1
            spec = brown_reid_spec(lam, mu, d, e, alpha, beta)
            label = spec.parameters.as_template()

            ci_report = validate_ci_assumptions(spec, level=2)
            self.assertTrue(ci_report.passed, label)
            self.assertEqual(
                (ci_report.dimension, ci_report.quotient_plus_dimension), (4, 2), label
            )

            presentation = nonpositive_presentation_check(spec, ci_report)
            self.assertEqual(presentation.check.status, PASS, label)
            self.assertIn((-mu * e, 0), tuple(presentation.tor_weights), label)

            window = window_generators(spec, 0)
            self.assertEqual(window.twists, tuple(range(lam + mu)), label)

        self.assertEqual(instances, 176)
        self.assertLess(time.perf_counter() - started, 60)
