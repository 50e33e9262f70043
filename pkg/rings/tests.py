from itertools import product
from math import gcd
from unittest.mock import patch

from django.test import SimpleTestCase
from sympy.polys.domains import GF, QQ

from algebra.exceptions import (
    BudgetExceededError,
    InhomogeneousRelationError,
    ParameterError,
    RingSpecError,
    RingSpecSyntaxError,
)
from algebra.models import FAIL, PASS, UNDETERMINED
from rings.models import FLIP, FLOP, UNSPECIFIED
from rings.services.brown_reid import brown_reid_spec
from rings.services.invariants import flip_invariants, validate_ci_assumptions
from rings.services.parser import parse_ring_spec, serialize_ring_spec
from rings.testing import fixture_spec, fixture_text


class ParserTests(SimpleTestCase):
    # Parsing Tests
    def test_parse_standard_flop(self):
        spec = fixture_spec("standard_flop")
        self.assertEqual(spec.weighting.names, ("x1", "x2", "y1", "y2"))
        self.assertEqual(spec.weighting.weights, (1, 1, -1, -1))
        self.assertEqual(spec.kind, FLOP)
        self.assertEqual((spec.p, spec.q, spec.r, spec.s), (2, 2, 0, 0))
        self.assertTrue(spec.is_polynomial_ring)
        self.assertEqual(spec.domain, QQ)

    def test_parse_brown_reid_template(self):
        spec = fixture_spec("brown_reid")
        self.assertEqual(spec.weighting.names, ("x1", "x2", "y1", "y2", "y3", "z"))
        self.assertEqual(spec.weighting.weights, (1, 2, -2, -3, -1, 0))
        self.assertEqual(spec.relation_degrees, (-2, 0))
        self.assertEqual(spec.kind, FLIP)
        self.assertEqual((spec.p, spec.q, spec.r, spec.s), (2, 3, 1, 2))

    def test_parse_relation(self):
        spec = fixture_spec("quadric")
        self.assertEqual(spec.domain, GF(101))
        self.assertEqual(spec.relation_degrees, (0,))
        self.assertEqual(str(spec.relations[0]), "x1*y1 - x2*y2")

    def test_field_override(self):
        """Test a field passed on the command line wins over the field line"""
        spec = fixture_spec("standard_flop", field=("GF", 7))
        self.assertEqual(spec.domain, GF(7))

    def test_comments_and_unicode_minus(self):
        spec = parse_ring_spec("# header\nvar x 2  # positive\nvar y −3\n")
        self.assertEqual(spec.weighting.weights, (2, -3))
        self.assertEqual(spec.kind, UNSPECIFIED)

    def test_tab_separated_directives(self):
        spec = parse_ring_spec("var\tx 1\nvar y\t-1\n")
        self.assertEqual(spec.weighting.names, ("x", "y"))
        self.assertEqual(spec.weighting.weights, (1, -1))
        with self.assertRaises(RingSpecSyntaxError) as context:
            parse_ring_spec("var\tx q\n")
        self.assertEqual((context.exception.line, context.exception.column), (1, 7))

    def test_round_trip(self):
        """Test serializing and parsing again gives the same ring"""
        for name in ("standard_flop", "atiyah", "weighted", "quadric", "brown_reid"):
            spec = fixture_spec(name)
            self.assertEqual(parse_ring_spec(serialize_ring_spec(spec)), spec, name)

    # Error Tests
    def test_malformed_reports_position(self):
        with self.assertRaises(RingSpecSyntaxError) as context:
            fixture_spec("malformed")
        self.assertEqual(context.exception.line, 4)
        self.assertEqual(context.exception.column, 18)
        self.assertIn("line 4, column 18", str(context.exception))

    def test_unknown_directive(self):
        with self.assertRaises(RingSpecSyntaxError) as context:
            parse_ring_spec("var x 1\nvariable y -1\n")
        self.assertEqual(context.exception.line, 2)

    def test_undeclared_variable(self):
        with self.assertRaises(RingSpecSyntaxError) as context:
            parse_ring_spec("var x 1\nvar y -1\nrel x*w\n")
        self.assertIn("'w'", str(context.exception))

    def test_non_integer_weight(self):
        with self.assertRaises(RingSpecSyntaxError):
            parse_ring_spec("var x 1.5\n")

    def test_negative_exponent_is_not_a_polynomial(self):
        with self.assertRaises(RingSpecSyntaxError):
            parse_ring_spec("var x 1\nvar y -1\nrel x^-1\n")

    def test_no_variables(self):
        with self.assertRaises(RingSpecError):
            parse_ring_spec("field Q\n")

    def test_inhomogeneous_relation(self):
        """Test an inhomogeneous relation names its term weights"""
        with self.assertRaises(InhomogeneousRelationError) as context:
            parse_ring_spec("var x 1\nvar y -1\nrel x*y + y\n")
        self.assertEqual(sorted(context.exception.term_weights), [-1, 0])
        self.assertIn("-1", str(context.exception))

    def test_template_with_variables(self):
        with self.assertRaises(RingSpecSyntaxError):
            parse_ring_spec(fixture_text("brown_reid") + "var w 1\n")

    def test_gcd_violation(self):
        with self.assertRaises(ParameterError) as context:
            parse_ring_spec("template brown-reid lambda=2 mu=4 d=1 e=1 alpha=1 beta=1\n")
        self.assertIn("gcd", str(context.exception))

    def test_nonpositive_parameter(self):
        with self.assertRaises(ParameterError) as context:
            brown_reid_spec(1, 2, 0, 1, 1, 1)
        self.assertIn("d", str(context.exception))

    def test_composite_field(self):
        with self.assertRaises(ParameterError):
            parse_ring_spec("field GF 4\nvar x 1\n")


class BrownReidTests(SimpleTestCase):
    def test_relation_degrees_over_parameter_grid(self):
        """Test deg f1 = -mu*e and deg f2 = 0 for every parameter choice"""
        for lam, mu, d, e, alpha, beta in product(range(1, 5), range(1, 5), *(range(1, 4),) * 4):
            if gcd(lam, mu) != 1:
                continue
            spec = brown_reid_spec(lam, mu, d, e, alpha, beta)
            self.assertEqual(spec.relation_degrees, (-mu * e, 0))
            self.assertEqual(spec.weighting.weights, (lam, mu, -mu, -lam - mu * e, -1, 0))


class FlipInvariantsTests(SimpleTestCase):
    def test_polynomial_rings(self):
        cases = {
            "standard_flop": (2, 2, 0),
            "atiyah": (1, 1, 0),
            "flip_21": (2, 1, -1),
            "weighted": (3, 4, 1),
        }
        for name, expected in cases.items():
            invariants = flip_invariants(fixture_spec(name))
            self.assertEqual(
                (invariants.eta_plus, invariants.eta_minus, invariants.a), expected, name
            )
            self.assertEqual(invariants.source, "polynomial-ring")

    def test_expected_comparison(self):
        self.assertEqual(
            flip_invariants(fixture_spec("standard_flop")).expected_comparison,
            "D(X+) equivalent to D(X-)",
        )
        self.assertEqual(
            flip_invariants(fixture_spec("flip_21")).expected_comparison,
            "D(X-) embeds into D(X+)",
        )
        self.assertEqual(
            flip_invariants(fixture_spec("weighted")).expected_comparison,
            "D(X+) embeds into D(X-)",
        )

    def test_brown_reid_uses_declared_kind(self):
        invariants = flip_invariants(fixture_spec("brown_reid"))
        self.assertEqual((invariants.eta_plus, invariants.eta_minus), (3, 6))
        self.assertEqual(invariants.a, 1)
        self.assertEqual(invariants.source, "declared-kind")

    def test_unspecified_kind_with_relations(self):
        invariants = flip_invariants(fixture_spec("positive_relation"))
        self.assertIsNone(invariants.a)
        self.assertEqual(invariants.expected_comparison, "unknown")

    def test_override(self):
        invariants = flip_invariants(fixture_spec("positive_relation"), a_override=2)
        self.assertEqual(invariants.a, 2)
        self.assertEqual(invariants.source, "override")

    def test_disagreeing_kind_is_logged(self):
        """Test a declared kind that disagrees with eta- - eta+ is logged and ignored"""
        spec = parse_ring_spec("var x1 1\nvar x2 1\nvar y1 -1\nkind flip\n")
        with self.assertLogs("rings.services.invariants", level="WARNING"):
            invariants = flip_invariants(spec)
        self.assertEqual(invariants.a, -1)


class CompleteIntersectionTests(SimpleTestCase):
    def test_brown_reid_level_two(self):
        report = validate_ci_assumptions(fixture_spec("brown_reid"), level=2)
        self.assertTrue(report.passed)
        self.assertEqual(report.dimension, 4)
        self.assertEqual(report.quotient_plus_dimension, 2)
        self.assertEqual(
            [check.name for check in report.checks],
            ["relation-degrees", "complete-intersection", "quotient-plus-dimension"],
        )

    def test_polynomial_ring(self):
        report = validate_ci_assumptions(fixture_spec("weighted"))
        self.assertTrue(report.passed)
        self.assertEqual(report.dimension, 4)

    def test_positive_relation_degree(self):
        report = validate_ci_assumptions(fixture_spec("positive_relation"))
        self.assertFalse(report.degrees_ok)
        self.assertTrue(report.dimension_ok)
        self.assertEqual(report.check("relation-degrees").status, FAIL)

    def test_quotient_plus_failure(self):
        """Test the hypersurface x1*y1 - x2*y2 fails the level-2 dimension check"""
        report = validate_ci_assumptions(fixture_spec("quadric"), level=2)
        self.assertEqual(report.check("complete-intersection").status, PASS)
        self.assertEqual(report.check("quotient-plus-dimension").status, FAIL)
        self.assertEqual(report.quotient_plus_dimension, 3)

    def test_budget_exhaustion_is_undetermined(self):
        with patch(
            "rings.services.invariants.buchberger",
            side_effect=BudgetExceededError("Groebner step budget of 5 reductions exceeded", 6),
        ):
            report = validate_ci_assumptions(fixture_spec("brown_reid"))
        self.assertEqual(report.check("complete-intersection").status, UNDETERMINED)
        self.assertTrue(report.budget_exhausted)
        self.assertIsNone(report.dimension)

    def test_invalid_level(self):
        with self.assertRaises(ParameterError):
            validate_ci_assumptions(fixture_spec("atiyah"), level=3)
