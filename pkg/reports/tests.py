import hashlib
import json
from io import StringIO
from unittest.mock import patch

from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from algebra.exceptions import BudgetExceededError, ParameterError, RingSpecSyntaxError
from algebra.models import FAIL, NOT_APPLICABLE, PASS, UNDETERMINED
from reports.models import EXIT_BUDGET_EXCEEDED, EXIT_CHECK_FAILED, EXIT_INPUT_ERROR, EXIT_PASS
from reports.serializers import RunReportSerializer
from reports.services.rendering import render_json, render_report, render_table
from reports.services.suite import QUOTIENT_RING, run_suite, spec_digest
from rings.services.parser import serialize_ring_spec
from rings.testing import fixture_path, fixture_spec, fixture_text


def statuses(report):
    return {check.name: check.status for check in report.checks}


class SuiteTests(SimpleTestCase):
    def test_standard_flop_passes(self):
        report = run_suite(fixture_text("standard_flop"))
        self.assertEqual(report.exit_code, EXIT_PASS)
        names = [check.name for check in report.checks]
        self.assertEqual(names[:2], ["validation", "flip-invariants"])
        for name in ("closed-form[plus]", "closed-form[minus]", "canonical-vanishing", "duality",
                     "window-length", "window-generators", "functor-image[1]"):
            self.assertEqual(statuses(report)[name], PASS, name)
        self.assertLess(names.index("duality"), names.index("window-generators"))
        self.assertLess(names.index("window-generators"), names.index("functor-image[-1]"))

    def test_standard_flop_tables_complete(self):
        report = run_suite(fixture_text("standard_flop"))
        plus, minus = report.tables
        self.assertTrue(plus.is_complete and minus.is_complete)
        self.assertEqual((minus.lo, minus.hi), (-8, 8))
        self.assertEqual(report.sections["duality"]["discrepancies"], [])

    def test_brown_reid(self):
        report = run_suite(fixture_text("brown_reid"))
        checks = statuses(report)
        self.assertEqual(report.exit_code, EXIT_PASS)
        self.assertEqual(checks["quotient-plus-dimension"], PASS)
        self.assertEqual(checks["nonpositive-presentation"], PASS)
        self.assertEqual(checks["cohomology"], NOT_APPLICABLE)
        self.assertEqual(report.checks[[c.name for c in report.checks].index("cohomology")].detail, QUOTIENT_RING)
        self.assertEqual(report.sections["window"]["generators"], ["A", "A(-1)", "A(-2)"])
        self.assertEqual(report.tables, [])

    def test_quotient_functor_images_are_not_applicable(self):
        report = run_suite(fixture_text("brown_reid"), twists=[0])
        check = report.checks[[c.name for c in report.checks].index("functor-image[0]")]
        self.assertEqual(check.status, NOT_APPLICABLE)
        self.assertTrue(check.detail.startswith("ranks "))
        self.assertTrue(check.detail.endswith(QUOTIENT_RING))
        self.assertEqual(len(report.sections["functor_images"]), 1)
        self.assertEqual(report.exit_code, EXIT_PASS)

    def test_quadric_fails_quotient_plus_dimension(self):
        report = run_suite(fixture_text("quadric"))
        self.assertEqual(statuses(report)["quotient-plus-dimension"], FAIL)
        self.assertEqual(report.exit_code, EXIT_CHECK_FAILED)

    def test_positive_relation_fails(self):
        report = run_suite(fixture_text("positive_relation"))
        self.assertEqual(statuses(report)["relation-degrees"], FAIL)
        self.assertEqual(report.exit_code, EXIT_CHECK_FAILED)

    def test_atiyah_skips_cone_twist(self):
        report = run_suite(fixture_text("atiyah"))
        self.assertEqual(statuses(report)["functor-image[-1]"], NOT_APPLICABLE)
        self.assertEqual(report.exit_code, EXIT_PASS)

    def test_budget_exhaustion(self):
        error = BudgetExceededError("Groebner step budget of 1 exhausted", 1)
        with patch("rings.services.invariants.buchberger", side_effect=error):
            report = run_suite(fixture_text("brown_reid"), budget=1)
        self.assertTrue(report.budget_exhausted)
        self.assertEqual(statuses(report)["complete-intersection"], UNDETERMINED)
        self.assertEqual(report.exit_code, EXIT_BUDGET_EXCEEDED)

    def test_stage_error_keeps_partial_report(self):
        error = BudgetExceededError("Groebner step budget of 5 exhausted", 5)
        with patch("reports.services.suite.validate_ci_assumptions", side_effect=error):
            report = run_suite(fixture_text("brown_reid"))
        self.assertEqual(report.errors, ["complete-intersection: Groebner step budget of 5 exhausted"])
        self.assertIn("window-generators", statuses(report))
        self.assertEqual(report.exit_code, EXIT_BUDGET_EXCEEDED)

    def test_malformed_input(self):
        with self.assertRaises(RingSpecSyntaxError) as caught:
            run_suite(fixture_text("malformed"))
        self.assertEqual(caught.exception.line, 4)

    def test_unknown_suite(self):
        with self.assertRaises(ParameterError):
            run_suite(fixture_text("atiyah"), suite="everything")

    def test_configured_twists(self):
        report = run_suite(fixture_text("flip_21"), twists=[0, 1])
        images = report.sections["functor_images"]
        self.assertEqual([image["twist"] for image in images], [0, 1])
        self.assertEqual(images[1]["complex"]["ranks"], [2, 1])

    @override_settings(GRADEDFLIP={**settings.GRADEDFLIP, "FUNCTOR_TWISTS": [0]})
    def test_twists_from_settings(self):
        report = run_suite(fixture_text("atiyah"))
        self.assertEqual([image["twist"] for image in report.sections["functor_images"]], [0])
        self.assertNotIn("functor-image[-1]", statuses(report))

    def test_digest(self):
        spec = fixture_spec("standard_flop")
        expected = hashlib.sha256(serialize_ring_spec(spec).encode("utf-8")).hexdigest()
        self.assertEqual(spec_digest(spec), expected)
        # comments and spacing do not change the digest
        text = "# flop\n" + fixture_text("standard_flop").replace("var x1 1", "var  x1   1")
        self.assertEqual(run_suite(text).digest, expected)


class RenderingTests(SimpleTestCase):
    def test_json_is_deterministic(self):
        first = RunReportSerializer(run_suite(fixture_text("flip_21"))).data
        second = RunReportSerializer(run_suite(fixture_text("flip_21"))).data
        self.assertEqual(render_json(first), render_json(second))
        self.assertNotIn("timing", first)
        self.assertEqual(json.loads(render_json(first))["schema"], 1)

    def test_timing_on_request(self):
        report = run_suite(fixture_text("flip_21"))
        data = RunReportSerializer(report, context={"timing": True}).data
        self.assertEqual(data["timing"], report.timing)

    def test_text_report(self):
        report = run_suite(fixture_text("standard_flop"))
        text = render_report(report)
        self.assertIn(f"digest {report.digest}", text)
        self.assertIn("exit 0: all applicable checks pass", text)
        self.assertIn("canonical-vanishing", text)

    def test_table_rows(self):
        report = run_suite(fixture_text("atiyah"))
        lines = render_table(report.tables[0])
        self.assertTrue(lines[0].startswith("RGamma+ (extended, cech) weights -8..8"))
        self.assertTrue(lines[2].startswith("    1 "))


class CommandTests(SimpleTestCase):
    def run_command(self, *args):
        out = StringIO()
        call_command("gradedflip", *args, stdout=out)
        return out.getvalue()

    def assertExitCode(self, code, *args):
        with self.assertRaises(CommandError) as caught:
            self.run_command(*args)
        self.assertEqual(caught.exception.returncode, code)

    def test_suite_json(self):
        path = str(fixture_path("standard_flop"))
        first = self.run_command("suite", path, "--json")
        self.assertEqual(first, self.run_command("suite", path, "--json"))
        data = json.loads(first)
        self.assertEqual(data["schema"], 1)
        self.assertEqual(data["exit_code"], 0)
        self.assertNotIn("timing", data)
        self.assertIn("timing", json.loads(self.run_command("suite", path, "--json", "--timing")))

    def test_suite_failure_exit_code(self):
        self.assertExitCode(EXIT_CHECK_FAILED, "suite", str(fixture_path("quadric")))

    def test_suite_budget_exit_code(self):
        error = BudgetExceededError("Groebner step budget of 1 exhausted", 1)
        with patch("rings.services.invariants.buchberger", side_effect=error):
            self.assertExitCode(EXIT_BUDGET_EXCEEDED, "suite", str(fixture_path("brown_reid")), "--budget", "1")

    def test_malformed_exit_code(self):
        self.assertExitCode(EXIT_INPUT_ERROR, "validate", str(fixture_path("malformed")))

    def test_missing_file_exit_code(self):
        self.assertExitCode(EXIT_INPUT_ERROR, "suite", str(fixture_path("no_such_ring")))

    def test_validate(self):
        out = self.run_command("validate", str(fixture_path("brown_reid")), "--ci-level", "2")
        self.assertIn("quotient-plus-dimension", out)
        self.assertExitCode(EXIT_CHECK_FAILED, "validate", str(fixture_path("quadric")), "--ci-level", "2")

    def test_dim(self):
        data = json.loads(self.run_command("dim", str(fixture_path("brown_reid")), "--quotient-plus", "--json"))
        self.assertEqual((data["dimension"], data["quotient_plus_dimension"]), (4, 2))
        data = json.loads(self.run_command("dim", str(fixture_path("standard_flop")), "--json"))
        self.assertEqual(data["dimension"], 4)

    def test_koszul(self):
        data = json.loads(self.run_command("koszul", str(fixture_path("brown_reid")), "--json"))
        self.assertEqual(data["complex"]["ranks"], [1, 2, 1])

    def test_nonpositive(self):
        out = self.run_command("nonpositive", str(fixture_path("brown_reid")))
        self.assertIn("nonpositive-presentation", out)
        self.assertExitCode(EXIT_CHECK_FAILED, "nonpositive", str(fixture_path("positive_relation")))

    def test_cohomology(self):
        path = str(fixture_path("standard_flop"))
        data = json.loads(self.run_command("cohomology", path, "--weights=-3..3", "--json"))
        self.assertEqual(data["side"], "plus")
        self.assertTrue(data["complete"])
        self.assertIn({"h": 2, "i": -2, "dim": 1}, data["weights"])
        self.assertNotIn(-1, [row["i"] for row in data["weights"]])

    def test_cohomology_quotient_is_input_error(self):
        self.assertExitCode(EXIT_INPUT_ERROR, "cohomology", str(fixture_path("brown_reid")))

    def test_vanishing_and_duality(self):
        path = str(fixture_path("flip_21"))
        self.assertIn("PASS", self.run_command("vanishing", path))
        data = json.loads(self.run_command("duality", path, "--weights=-4..4", "--json"))
        self.assertEqual(data["duality"]["check"]["status"], PASS)

    def test_wrong_a_fails_vanishing(self):
        self.assertExitCode(EXIT_CHECK_FAILED, "vanishing", str(fixture_path("flip_21")), "--a", "-3")

    def test_window(self):
        out = self.run_command("window", str(fixture_path("brown_reid")))
        self.assertIn("A(-2)", out)
        data = json.loads(self.run_command("window", str(fixture_path("flip_21")), "--twist", "1", "--json"))
        self.assertTrue(data["membership"]["member"])
        self.assertExitCode(EXIT_CHECK_FAILED, "window", str(fixture_path("flip_21")), "--twist", "2")

    def test_functor_image(self):
        path = str(fixture_path("standard_flop"))
        data = json.loads(self.run_command("functor-image", path, "--twist", "1", "--json"))
        self.assertEqual(data["image"]["complex"]["ranks"], [2, 1])
        self.assertEqual(data["check"]["status"], PASS)
        self.assertExitCode(EXIT_INPUT_ERROR, "functor-image", path, "--twist", "-2")

    def test_field_override(self):
        data = json.loads(self.run_command("suite", str(fixture_path("atiyah")), "--field", "GF:7", "--json"))
        self.assertEqual(data["spec"]["field"], "GF 7")
