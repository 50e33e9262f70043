import random
from itertools import combinations_with_replacement, product

from django.test import SimpleTestCase

from algebra.exceptions import PreconditionError, StructuralError
from algebra.models import (
    FAIL,
    PASS,
    UNDETERMINED,
    CheckResult,
    GradedRing,
    Weighting,
    monomial_divides,
    weight_of_monomial,
)
from algebra.services.enumeration import iter_monomials
from complexes.models import FreeComplex, FreeModule
from complexes.serializers import FreeComplexSerializer, PresentationReportSerializer
from complexes.services.koszul import koszul_complex, tor_weights
from complexes.services.operations import (
    dualize,
    hilbert_box_count,
    minimize,
    shift,
    tensor,
    twist,
)
from complexes.services.presentation import nonpositive_presentation_check, truncate_generators
from complexes.services.taylor import taylor_resolution
from rings.models import CIReport, RingSpec
from rings.services.invariants import validate_ci_assumptions
from rings.testing import fixture_spec


def ideal_box_count(generators, weighting, weight, box):
    """Monomials of the given weight in the box that lie in the monomial ideal."""
    return sum(
        1 for monomial in iter_monomials(weighting, weight, box)
        if any(monomial_divides(generator, monomial) for generator in generators)
    )


def brute_force_truncation(weights, w):
    """Minimal generators of the monomials of weight >= w, by direct search."""
    weighting = Weighting(tuple(f"x{i}" for i in range(len(weights))), weights)
    found = []
    for monomial in product(*(range(w + 4) for _ in weights)):
        if weight_of_monomial(monomial, weighting) < w:
            continue
        if all(
            weight_of_monomial(monomial, weighting) - weights[i] < w
            for i, e in enumerate(monomial) if e
        ):
            found.append(monomial)
    return weighting, sorted(found)


class KoszulTests(SimpleTestCase):
    def test_brown_reid(self):
        complex_ = koszul_complex(fixture_spec("brown_reid"))
        self.assertEqual((complex_.lo, complex_.hi), (-2, 0))
        self.assertEqual(complex_.ranks, (1, 2, 1))
        self.assertEqual(tor_weights(complex_).weights, ((0,), (-2, 0), (-2,)))

    def test_polynomial_ring(self):
        complex_ = koszul_complex(fixture_spec("weighted"))
        self.assertEqual(complex_.ranks, (1,))
        self.assertEqual(complex_.module(0).multidegrees, ((0, 0, 0, 0),))
        self.assertEqual(tor_weights(complex_).weights, ((0,),))

    def test_three_relations(self):
        """Test C(3, j) ranks and pairwise degree sums"""
        spec = fixture_spec("weighted")
        x1, x2, y1, y2 = (spec.base.gen(i) for i in range(4))
        spec = RingSpec(spec.base, (x1 * y1, x2 * y1, x1 * y2))
        complex_ = koszul_complex(spec)
        self.assertEqual(complex_.ranks, (1, 3, 3, 1))
        self.assertEqual(sorted(complex_.module(-2).twists), [-2, -1, 1])
        self.assertEqual(complex_.module(-3).twists, (-1,))


class TaylorTests(SimpleTestCase):
    def setUp(self):
        self.base = GradedRing(Weighting(("x1", "x2"), (1, 1)))

    def test_three_quadrics(self):
        complex_ = taylor_resolution([(2, 0), (1, 1), (0, 2)], self.base)
        self.assertEqual(complex_.ranks, (3, 3, 1))
        self.assertEqual(complex_.module(-2).twists, (4,))
        self.assertEqual(complex_.module(-2).multidegrees, ((2, 2),))

    def test_single_generator(self):
        complex_ = taylor_resolution([(1, 0)], self.base)
        self.assertEqual(complex_.ranks, (1,))
        self.assertEqual(complex_.module(0).twists, (1,))

    def test_coprime_pair(self):
        """Test the syzygy of two coprime monomials sits at the weight of their product"""
        base = GradedRing(Weighting(("x1", "x2", "y1"), (1, 2, -1)))
        complex_ = taylor_resolution([base.gen(0), base.gen(1)], base)
        self.assertEqual(complex_.ranks, (2, 1))
        self.assertEqual(complex_.module(-1).twists, (3,))
        self.assertEqual(
            [[str(entry) for entry in row] for row in complex_.differential(-1)],
            [["-x2"], ["x1"]],
        )

    def test_rejects_non_monomials(self):
        with self.assertRaises(StructuralError):
            taylor_resolution([self.base.gen(0) + self.base.gen(1)], self.base)

    def test_rejects_negative_block(self):
        base = GradedRing(Weighting(("x", "y"), (1, -1)))
        with self.assertRaises(PreconditionError):
            taylor_resolution([(0, 1)], base)

    def test_exactness_by_box_counts(self):
        """Test the Taylor complex resolves its ideal, weight by weight"""
        rng = random.Random(7)
        for weights in ((1, 1), (1, 2), (1, 2, 3)):
            base = GradedRing(Weighting(tuple(f"x{i}" for i in range(len(weights))), weights))
            for _ in range(5):
                generators = {
                    tuple(rng.randint(0, 3) for _ in weights) for _ in range(rng.randint(1, 4))
                }
                generators = sorted(g for g in generators if any(g))
                if not generators:
                    continue
                complex_ = taylor_resolution(generators, base)
                box = (8,) * len(weights)
                for weight in range(0, 9):
                    self.assertEqual(
                        hilbert_box_count(complex_, weight, box),
                        ideal_box_count(generators, base.weighting, weight, box),
                    )


class TruncationTests(SimpleTestCase):
    def test_examples(self):
        spec = fixture_spec("flip_21")
        self.assertEqual(truncate_generators(spec, 1), [(1, 0, 0), (0, 1, 0)])
        self.assertEqual(truncate_generators(spec, 0), [(0, 0, 0)])
        self.assertEqual(truncate_generators(spec, -3), [(0, 0, 0)])
        self.assertEqual(
            truncate_generators(fixture_spec("weighted"), 2), [(2, 0, 0, 0), (0, 1, 0, 0)]
        )

    def test_needs_positive_block(self):
        base = GradedRing(Weighting(("y",), (-1,)))
        with self.assertRaises(PreconditionError):
            truncate_generators(RingSpec(base), 1)

    def test_agrees_with_brute_force(self):
        for size in (1, 2, 3):
            for weights in combinations_with_replacement((1, 2, 3), size):
                for w in range(1, 7):
                    weighting, expected = brute_force_truncation(weights, w)
                    spec = RingSpec(GradedRing(weighting))
                    self.assertEqual(sorted(truncate_generators(spec, w)), expected, (weights, w))


class OperationTests(SimpleTestCase):
    def setUp(self):
        self.spec = fixture_spec("flip_21")
        self.base = self.spec.base
        self.x1, self.x2, self.y1 = (self.base.gen(i) for i in range(3))
        # A(-1)^2 -> A
        self.pair = FreeComplex(
            self.base, -1, [FreeModule((1, 1)), FreeModule((0,))], [[[self.x1, self.x2]]]
        )

    # Validation Tests
    def test_weight_mismatch(self):
        with self.assertRaises(StructuralError):
            FreeComplex(self.base, -1, [FreeModule((2,)), FreeModule((0,))], [[[self.x1]]])

    def test_shape_mismatch(self):
        with self.assertRaises(StructuralError):
            FreeComplex(self.base, -1, [FreeModule((1, 1)), FreeModule((0,))], [[[self.x1]]])

    def test_square_not_zero(self):
        with self.assertRaises(StructuralError):
            FreeComplex(
                self.base, -2,
                [FreeModule((2,)), FreeModule((1,)), FreeModule((0,))],
                [[[self.x1]], [[self.x2]]],
            )

    # Operation Tests
    def test_twist(self):
        """Test twist(1) of the resolution of (x1, x2) gives generator weights (0, 0; 1)"""
        resolution = taylor_resolution([(1, 0, 0), (0, 1, 0)], self.base)
        twisted = twist(resolution, 1)
        self.assertEqual(twisted.module(0).twists, (0, 0))
        self.assertEqual(twisted.module(-1).twists, (1,))
        self.assertEqual(twisted.module(0).multidegrees, resolution.module(0).multidegrees)

    def test_shift(self):
        shifted = shift(self.pair, 1)
        self.assertEqual((shifted.lo, shifted.hi), (-2, -1))
        self.assertEqual(str(shifted.differential(-2)[0][0]), "-x1")
        self.assertEqual(shift(shift(self.pair, 1), -1), self.pair)

    def test_dualize(self):
        dual = dualize(self.pair)
        self.assertEqual((dual.lo, dual.hi), (0, 1))
        self.assertEqual(dual.module(0).twists, (0,))
        self.assertEqual(dual.module(1).twists, (-1, -1))
        self.assertEqual(
            [[str(entry) for entry in row] for row in dual.differential(0)], [["-x1"], ["-x2"]]
        )

    def test_dualize_twice_negates_differentials(self):
        rng = random.Random(11)
        for _ in range(10):
            generators = sorted({
                (rng.randint(0, 2), rng.randint(0, 2), 0) for _ in range(rng.randint(1, 3))
            } - {(0, 0, 0)})
            if not generators:
                continue
            complex_ = tensor(taylor_resolution(generators, self.base), self.pair)
            negated = [[[-entry for entry in row] for row in d] for d in complex_.differentials]
            self.assertEqual(
                dualize(dualize(complex_)),
                FreeComplex(complex_.base, complex_.lo, complex_.modules, negated),
            )
            self.assertEqual(dualize(dualize(dualize(dualize(complex_)))), complex_)

    def test_tensor_ranks(self):
        """Test (2, 1) tensor (1, 2, 1) has total ranks (2, 5, 4, 1)"""
        spec = fixture_spec("brown_reid")
        resolution = taylor_resolution(truncate_generators(spec, 1), spec.base)
        product_ = tensor(resolution, koszul_complex(spec))
        self.assertEqual(product_.ranks, (2, 5, 4, 1))

    def test_tensor_ring_mismatch(self):
        other = taylor_resolution([(1, 0)], GradedRing(Weighting(("a", "b"), (1, 1))))
        with self.assertRaises(StructuralError):
            tensor(self.pair, other)

    def test_minimize(self):
        """Test cancelling unit entries keeps the box counts"""
        base = GradedRing(Weighting(("x1", "x2"), (1, 1)))
        complex_ = taylor_resolution([(2, 0), (1, 1), (0, 2)], base)
        minimal = minimize(complex_)
        self.assertEqual(minimal.ranks, (3, 2))
        for weight in range(0, 7):
            self.assertEqual(
                hilbert_box_count(minimal, weight, (6, 6)),
                hilbert_box_count(complex_, weight, (6, 6)),
            )

    def test_box_count_needs_multidegrees(self):
        with self.assertRaises(PreconditionError):
            hilbert_box_count(self.pair, 0, (2, 2, 2))

    def test_serializer(self):
        data = FreeComplexSerializer(self.pair).data
        self.assertEqual(data["ranks"], [1, 2])
        self.assertEqual(data["differentials"][0]["matrix"], [["x1", "x2"]])
        self.assertEqual(
            data["differentials"][0]["terms"][0][0], [{"exponents": [1, 0, 0], "coefficient": "1"}]
        )


class NonpositivePresentationTests(SimpleTestCase):
    def test_brown_reid_passes(self):
        spec = fixture_spec("brown_reid")
        report = nonpositive_presentation_check(spec, validate_ci_assumptions(spec))
        self.assertEqual(report.check.status, PASS)
        self.assertEqual(report.tor_weights.weights, ((0,), (-2, 0), (-2,)))
        data = PresentationReportSerializer(report).data
        self.assertEqual(data["tor_weights"]["weights"], [[0], [-2, 0], [-2]])

    def test_positive_relation_fails(self):
        spec = fixture_spec("positive_relation")
        report = nonpositive_presentation_check(spec, validate_ci_assumptions(spec))
        self.assertEqual(report.check.status, FAIL)

    def test_polynomial_ring_passes(self):
        spec = fixture_spec("atiyah")
        report = nonpositive_presentation_check(spec, validate_ci_assumptions(spec))
        self.assertEqual(report.check.status, PASS)

    def test_requires_ci_report(self):
        with self.assertRaises(PreconditionError):
            nonpositive_presentation_check(fixture_spec("brown_reid"), None)

    def test_report_of_another_ring(self):
        report = validate_ci_assumptions(fixture_spec("atiyah"))
        with self.assertRaises(PreconditionError):
            nonpositive_presentation_check(fixture_spec("brown_reid"), report)

    def test_undetermined_without_dimension(self):
        """Test a failed dimension check leaves the verdict undetermined"""
        spec = fixture_spec("brown_reid")
        report = CIReport(spec, 1, (
            CheckResult("relation-degrees", PASS),
            CheckResult("complete-intersection", FAIL, "dimension 5, expected 4"),
        ))
        self.assertEqual(nonpositive_presentation_check(spec, report).check.status, UNDETERMINED)
