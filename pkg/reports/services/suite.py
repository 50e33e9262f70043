"""Ordered verification runs over one ring-spec document."""
import hashlib
import logging
import time

from django.conf import settings

from algebra.exceptions import (
    BudgetExceededError,
    GradedFlipError,
    ParameterError,
    PreconditionError,
    UnsupportedOperationError,
)
from algebra.models import FAIL, NOT_APPLICABLE, PASS, UNDETERMINED, CheckResult
from cohomology.models import MINUS, PLUS
from cohomology.serializers import DualityReportSerializer
from cohomology.services.cech import build_cech
from cohomology.services.checks import canonical_vanishing_check, duality_check
from cohomology.services.tables import closed_form_table, cohomology_table, default_weight_radius
from complexes.serializers import PresentationReportSerializer
from complexes.services.presentation import nonpositive_presentation_check
from reports.models import SUITE_CHOICES, RunReport
from rings.serializers import CIReportSerializer, FlipInvariantsSerializer
from rings.services.invariants import flip_invariants, validate_ci_assumptions
from rings.services.parser import parse_ring_spec, serialize_ring_spec
from windows.serializers import FunctorImageSerializer, MembershipReportSerializer, WindowSpecSerializer
from windows.services.functor import functor_euler_check, functor_image
from windows.services.windows import window_generators, window_membership

logger = logging.getLogger(__name__)

QUOTIENT_RING = "not applicable (quotient ring)"


def spec_digest(spec):
    return hashlib.sha256(serialize_ring_spec(spec).encode("utf-8")).hexdigest()


def run_suite(text, suite="paper-checks", field=None, budget=None, a_override=None,
              radius=None, twists=None, command="suite"):
    """Parse `text` and run every applicable check on it, in order.

    Parse errors propagate. Errors raised by a later stage are recorded
    as failed checks so the partial report is still returned.
    """
    if suite not in dict(SUITE_CHOICES):
        raise ParameterError(
            f"Invalid suite {suite!r}. Must be one of: {', '.join(name for name, _ in SUITE_CHOICES)}"
        )
    started = time.perf_counter()
    spec = parse_ring_spec(text, field=field)
    report = RunReport(
        version=settings.GRADEDFLIP["VERSION"],
        digest=spec_digest(spec),
        command=command,
        spec=spec,
    )
    report.add(CheckResult(
        "validation", PASS, f"{spec}: p={spec.p}, q={spec.q}, r={spec.r}, s={spec.s}"
    ))

    ci_report = None
    if spec.relations:
        ci_report = _stage(report, "complete-intersection", validate_ci_assumptions, spec, 2, budget)
        if ci_report is not None:
            for check in ci_report.checks:
                report.add(check)
            report.sections["complete_intersection"] = CIReportSerializer(ci_report).data

    invariants = flip_invariants(spec, a_override)
    report.sections["invariants"] = FlipInvariantsSerializer(invariants).data
    report.add(CheckResult(
        "flip-invariants",
        UNDETERMINED if invariants.a is None else PASS,
        f"eta+={invariants.eta_plus}, eta-={invariants.eta_minus}, a={invariants.a} ({invariants.source})",
    ))

    if spec.relations:
        presentation = _stage(report, "nonpositive-presentation", nonpositive_presentation_check, spec, ci_report)
        if presentation is not None:
            report.add(presentation.check)
            report.sections["presentation"] = PresentationReportSerializer(presentation).data

    radius = default_weight_radius(spec) if radius is None else radius
    if spec.is_polynomial_ring:
        _cohomology_section(report, spec, invariants.a, radius)
    else:
        report.add(CheckResult("cohomology", NOT_APPLICABLE, QUOTIENT_RING))

    window = _stage(report, "window-generators", window_generators, spec, 0, PLUS)
    if window is not None:
        report.add(CheckResult("window-generators", PASS, f"{window}{'; ' + window.note if window.note else ''}"))
        report.sections["window"] = WindowSpecSerializer(window).data

    images = []
    for i in settings.GRADEDFLIP["FUNCTOR_TWISTS"] if twists is None else twists:
        image = _stage(report, f"functor-image[{i}]", functor_image, spec, i)
        if image is None:
            continue
        images.append(FunctorImageSerializer(image).data)
        if spec.is_polynomial_ring:
            report.add(functor_euler_check(image, -radius, radius))
        else:
            report.add(CheckResult(
                f"functor-image[{i}]", NOT_APPLICABLE,
                f"ranks {image.complex.ranks}; {image.note}; {QUOTIENT_RING}",
            ))
    report.sections["functor_images"] = images

    report.timing = round(time.perf_counter() - started, 3)
    logger.info(
        f"Suite {suite} on {spec}: {sum(c.passed for c in report.checks)}/{len(report.checks)} "
        f"checks pass, exit code {report.exit_code} in {report.timing}s"
    )
    return report


def _cohomology_section(report, spec, a, radius):
    lo, hi = -radius, radius
    plus_lo, plus_hi = lo + min(a, 0), hi + max(a, 0)
    plus = cohomology_table(build_cech(spec, PLUS), plus_lo, plus_hi)
    minus = cohomology_table(build_cech(spec, MINUS), lo, hi)
    report.tables.extend([plus, minus])

    for table, table_lo, table_hi in ((plus, plus_lo, plus_hi), (minus, lo, hi)):
        name = f"closed-form[{table.side}]"
        if spec.weighting.zero:
            report.add(CheckResult(name, NOT_APPLICABLE, "weight-0 variables have no closed form"))
            continue
        expected = closed_form_table(spec, table.side, table_lo, table_hi)
        mismatched = sorted(
            key for key in set(expected.entries) | set(table.entries)
            if expected.entries.get(key, 0) != table.entries.get(key, 0)
        )
        if mismatched:
            h, i = mismatched[0]
            report.add(CheckResult(
                name, FAIL,
                f"{len(mismatched)} entries differ, first (h={h}, i={i}): "
                f"{table.dim(h, i)} != {expected.dim(h, i)}",
            ))
        else:
            report.add(CheckResult(name, PASS, f"matches on weights {table_lo}..{table_hi}"))

    report.add(canonical_vanishing_check(spec, a, lo, hi, tables=(plus, minus)))

    if spec.p and spec.q:
        duality = duality_check(spec, a, lo, hi, tables=(plus, minus))
        report.add(duality.check)
        report.sections["duality"] = DualityReportSerializer(duality).data
    else:
        report.add(CheckResult("duality", NOT_APPLICABLE, f"p={spec.p}, q={spec.q}"))

    if not spec.p:
        report.add(CheckResult("window-length", NOT_APPLICABLE, "no positive-weight variables"))
        return
    eta_plus = spec.weighting.eta_plus
    memberships = [window_membership(spec, i, 0, table=plus) for i in range(-1, eta_plus + 1)]
    report.sections["memberships"] = [MembershipReportSerializer(m).data for m in memberships]
    members = [m.i for m in memberships if m.member]
    expected_members = list(range(eta_plus))
    report.add(CheckResult(
        "window-length",
        PASS if members == expected_members else FAIL,
        f"A(-i) in the window at w=0 for i in {members}; expected {expected_members}",
    ))


def _stage(report, name, func, *args):
    try:
        return func(*args)
    except BudgetExceededError as exc:
        logger.warning(f"{name}: {exc}")
        report.errors.append(f"{name}: {exc}")
        report.add(CheckResult(name, UNDETERMINED, f"{exc} (after {exc.steps} steps)", budget_exhausted=True))
    except (UnsupportedOperationError, PreconditionError) as exc:
        logger.info(f"{name}: not applicable: {exc}")
        report.add(CheckResult(name, NOT_APPLICABLE, str(exc)))
    except GradedFlipError as exc:
        logger.error(f"{name} failed: {exc}")
        report.errors.append(f"{name}: {exc}")
        report.add(CheckResult(name, FAIL, str(exc)))
    return None
