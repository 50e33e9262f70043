import argparse
import logging
import re

from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError

from algebra.exceptions import (
    BudgetExceededError,
    PreconditionError,
    StructuralError,
    UnsupportedOperationError,
)
from algebra.models import NOT_APPLICABLE, PASS
from algebra.serializers import CheckResultSerializer
from cohomology.models import PLUS, SIDE_ALIASES, parse_side
from cohomology.serializers import CohomologyTableSerializer, DualityReportSerializer
from cohomology.services.cech import build_cech
from cohomology.services.checks import canonical_vanishing_check, duality_check
from cohomology.services.tables import cohomology_table, default_weight_radius
from complexes.serializers import FreeComplexSerializer, PresentationReportSerializer, TorWeightsSerializer
from complexes.services.koszul import koszul_complex, tor_weights
from complexes.services.presentation import nonpositive_presentation_check
from grobner.services.buchberger import buchberger
from grobner.services.dimension import krull_dimension
from reports.models import EXIT_BUDGET_EXCEEDED, EXIT_CHECK_FAILED, EXIT_INPUT_ERROR, SUITE_CHOICES
from reports.serializers import RunReportSerializer
from reports.services.rendering import render_checks, render_complex, render_json, render_report, render_table
from reports.services.suite import run_suite
from rings.serializers import CIReportSerializer, FlipInvariantsSerializer, RingSpecSerializer, dimension_value
from rings.services.invariants import CI_LEVELS, flip_invariants, validate_ci_assumptions
from rings.services.parser import parse_field, parse_ring_spec
from windows.serializers import FunctorImageSerializer, MembershipReportSerializer, WindowSpecSerializer
from windows.services.functor import functor_euler_check, functor_image
from windows.services.windows import window_generators, window_membership

logger = logging.getLogger(__name__)

_RANGE = re.compile(r"^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$")


def weight_range(text):
    match = _RANGE.match(text)
    if not match or int(match.group(1)) > int(match.group(2)):
        raise argparse.ArgumentTypeError(f"expected lo..hi with lo <= hi, got {text!r}")
    return int(match.group(1)), int(match.group(2))


def field_option(text):
    try:
        return parse_field(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def common_options():
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("file", help="Ring-spec document")
    parser.add_argument("--json", action="store_true", help="Emit versioned JSON instead of text")
    parser.add_argument("--budget", type=int, help="Groebner step budget")
    parser.add_argument("--field", type=field_option, help="Override the field: Q or GF:<p>")
    parser.add_argument("--a", type=int, help="Override the canonical-vanishing index a")
    return parser


class Command(BaseCommand):
    help = "Verify weight-graded rings: cohomology tables, windows and flip/flop checks"

    def add_arguments(self, parser):
        common = common_options()
        commands = parser.add_subparsers(dest="subcommand", required=True)

        validate = commands.add_parser("validate", parents=[common], help="Parse and check CI assumptions")
        validate.add_argument("--ci-level", type=int, choices=CI_LEVELS, default=1)

        dim = commands.add_parser("dim", parents=[common], help="Krull dimension via Groebner bases")
        dim.add_argument("--quotient-plus", action="store_true", help="Also compute dim A/(x-variables)")

        commands.add_parser("koszul", parents=[common], help="Koszul complex of the relations")
        commands.add_parser("nonpositive", parents=[common], help="Non-positive presentation verdict")

        cohomology = commands.add_parser("cohomology", parents=[common], help="Weightwise local cohomology")
        cohomology.add_argument("--side", choices=sorted(SIDE_ALIASES), default=PLUS)
        cohomology.add_argument("--weights", type=weight_range, help="lo..hi (write --weights=-8..8)")
        cohomology.add_argument("--plain", action="store_true", help="Use the plain Cech complex")

        vanishing = commands.add_parser("vanishing", parents=[common], help="Canonical vanishing check")
        vanishing.add_argument("--weights", type=weight_range)

        duality = commands.add_parser("duality", parents=[common], help="Degreewise duality check")
        duality.add_argument("--weights", type=weight_range)

        window = commands.add_parser("window", parents=[common], help="Window generators and membership")
        window.add_argument("--w", type=int, default=0)
        window.add_argument("--side", choices=sorted(SIDE_ALIASES), default=PLUS)
        window.add_argument("--twist", type=int, help="Check whether A(-i) lies in the window")

        image = commands.add_parser("functor-image", parents=[common], help="Image of A(i) under the functor")
        image.add_argument("--twist", type=int, required=True)
        image.add_argument("--w", type=int, default=0)
        image.add_argument("--minimize", action="store_true")

        suite = commands.add_parser("suite", parents=[common], help="Run every applicable check")
        suite.add_argument("--suite", choices=[name for name, _ in SUITE_CHOICES], default="paper-checks")
        suite.add_argument("--timing", action="store_true", help="Include timing in JSON output")

    def handle(self, *args, **options):
        subcommand = options["subcommand"]
        handler = getattr(self, f"handle_{subcommand.replace('-', '_')}")
        try:
            checks = handler(options)
        except ValidationError as exc:
            logger.error(f"{subcommand}: invalid input: {exc.message}")
            raise CommandError(exc.message, returncode=EXIT_INPUT_ERROR)
        except OSError as exc:
            logger.error(f"{subcommand}: cannot read {options['file']}: {exc}")
            raise CommandError(f"cannot read {options['file']}: {exc.strerror}", returncode=EXIT_INPUT_ERROR)
        except BudgetExceededError as exc:
            logger.error(f"{subcommand}: {exc} after {exc.steps} steps")
            raise CommandError(f"{exc} after {exc.steps} steps", returncode=EXIT_BUDGET_EXCEEDED)
        except (UnsupportedOperationError, PreconditionError, StructuralError) as exc:
            logger.error(f"{subcommand}: {exc}")
            raise CommandError(str(exc), returncode=EXIT_INPUT_ERROR)

        if any(check.budget_exhausted for check in checks):
            raise CommandError("step budget exhausted", returncode=EXIT_BUDGET_EXCEEDED)
        failed = [check.name for check in checks if check.status not in (PASS, NOT_APPLICABLE)]
        if failed:
            raise CommandError(f"checks not passing: {', '.join(failed)}", returncode=EXIT_CHECK_FAILED)

    def read(self, options):
        with open(options["file"], encoding="utf-8") as handle:
            return handle.read()

    def load(self, options):
        return parse_ring_spec(self.read(options), field=options["field"])

    def emit(self, options, data, lines):
        if options["json"]:
            self.stdout.write(render_json(data))
        else:
            self.stdout.write("\n".join(lines))

    def handle_validate(self, options):
        spec = self.load(options)
        report = validate_ci_assumptions(spec, options["ci_level"], options["budget"])
        invariants = flip_invariants(spec, options["a"])
        self.emit(
            options,
            {
                "command": "validate",
                "spec": RingSpecSerializer(spec).data,
                "complete_intersection": CIReportSerializer(report).data,
                "invariants": FlipInvariantsSerializer(invariants).data,
            },
            [
                f"{spec}: p={spec.p}, q={spec.q}, r={spec.r}, s={spec.s}",
                f"eta+={invariants.eta_plus}, eta-={invariants.eta_minus}, a={invariants.a} "
                f"({invariants.source}): {invariants.expected_comparison}",
                *render_checks(report.checks),
            ],
        )
        return report.checks

    def handle_dim(self, options):
        spec = self.load(options)
        basis = buchberger(spec.relations, base=spec.base, budget=options["budget"])
        dimension = krull_dimension(basis)
        data = {"command": "dim", "dimension": dimension_value(dimension), "steps": basis.steps}
        lines = [f"dim A = {dimension} ({len(basis)} basis elements, {basis.steps} reductions)"]
        if options["quotient_plus"]:
            x_variables = tuple(spec.base.gen(i) for i in spec.weighting.positive)
            quotient = krull_dimension(
                buchberger(spec.relations + x_variables, base=spec.base, budget=options["budget"])
            )
            data["quotient_plus_dimension"] = dimension_value(quotient)
            lines.append(f"dim A/I+ = {quotient}")
        self.emit(options, data, lines)
        return []

    def handle_koszul(self, options):
        spec = self.load(options)
        complex_ = koszul_complex(spec)
        weights = tor_weights(complex_)
        self.emit(
            options,
            {
                "command": "koszul",
                "complex": FreeComplexSerializer(complex_).data,
                "tor_weights": TorWeightsSerializer(weights).data,
            },
            [*render_complex(complex_), f"Koszul twists: {weights}"],
        )
        return []

    def handle_nonpositive(self, options):
        spec = self.load(options)
        ci_report = validate_ci_assumptions(spec, 1, options["budget"])
        report = nonpositive_presentation_check(spec, ci_report)
        self.emit(
            options,
            {"command": "nonpositive", "presentation": PresentationReportSerializer(report).data},
            render_checks([report.check]) + [f"Tor weights: {report.tor_weights}"],
        )
        return [report.check]

    def handle_cohomology(self, options):
        spec = self.load(options)
        lo, hi = self.weights(options, spec)
        complex_ = build_cech(spec, parse_side(options["side"]), extended=not options["plain"])
        table = cohomology_table(complex_, lo, hi)
        self.emit(
            options,
            {"command": "cohomology", **CohomologyTableSerializer(table).data},
            render_table(table),
        )
        return []

    def handle_vanishing(self, options):
        spec = self.load(options)
        lo, hi = self.weights(options, spec)
        a = self.canonical_index(spec, options)
        check = canonical_vanishing_check(spec, a, lo, hi)
        self.emit(options, {"command": "vanishing", "check": check_data(check)}, render_checks([check]))
        return [check]

    def handle_duality(self, options):
        spec = self.load(options)
        lo, hi = self.weights(options, spec)
        report = duality_check(spec, self.canonical_index(spec, options), lo, hi)
        lines = render_checks([report.check])
        lines.extend(
            f"  h={h}, i={i}: {lhs} != {rhs}" for h, i, lhs, rhs in report.discrepancies
        )
        self.emit(options, {"command": "duality", "duality": DualityReportSerializer(report).data}, lines)
        return [report.check]

    def handle_window(self, options):
        spec = self.load(options)
        window = window_generators(spec, options["w"], options["side"])
        data = {"command": "window", "window": WindowSpecSerializer(window).data}
        lines = [str(window)] + ([window.note] if window.note else [])
        checks = []
        if options["twist"] is not None:
            membership = window_membership(spec, options["twist"], options["w"])
            data["membership"] = MembershipReportSerializer(membership).data
            lines.extend(render_checks([membership.check]))
            checks.append(membership.check)
        self.emit(options, data, lines)
        return checks

    def handle_functor_image(self, options):
        spec = self.load(options)
        image = functor_image(spec, options["twist"], options["w"], options["minimize"])
        data = {"command": "functor-image", "image": FunctorImageSerializer(image).data}
        lines = [f"image of A({image.twist}) at w={image.w}: {image.note}", *render_complex(image.complex)]
        checks = []
        if spec.is_polynomial_ring:
            radius = default_weight_radius(spec)
            check = functor_euler_check(image, -radius, radius)
            data["check"] = check_data(check)
            lines.extend(render_checks([check]))
            checks.append(check)
        self.emit(options, data, lines)
        return checks

    def handle_suite(self, options):
        report = run_suite(
            self.read(options),
            suite=options["suite"],
            field=options["field"],
            budget=options["budget"],
            a_override=options["a"],
        )
        if options["json"]:
            data = RunReportSerializer(report, context={"timing": options["timing"]}).data
            self.stdout.write(render_json(data))
        else:
            self.stdout.write(render_report(report))
        return report.checks

    def weights(self, options, spec):
        if options.get("weights"):
            return options["weights"]
        radius = default_weight_radius(spec)
        return -radius, radius

    def canonical_index(self, spec, options):
        invariants = flip_invariants(spec, options["a"])
        if invariants.a is None:
            raise PreconditionError(f"The index a of {spec} is unknown; declare a kind or pass --a")
        return invariants.a


def check_data(check):
    return CheckResultSerializer(check).data
