import logging

from algebra.exceptions import BudgetExceededError, ParameterError
from algebra.models import FAIL, PASS, UNDETERMINED, CheckResult
from grobner.services.buchberger import buchberger
from grobner.services.dimension import krull_dimension
from rings.models import KIND_TO_A, UNSPECIFIED, CIReport, FlipInvariants

logger = logging.getLogger(__name__)

CI_LEVELS = (1, 2)


def flip_invariants(spec, a_override=None):
    """eta+, eta- and the canonical-vanishing index a of a ring spec."""
    eta_plus = spec.weighting.eta_plus
    eta_minus = spec.weighting.eta_minus
    if a_override is not None:
        return FlipInvariants(eta_plus, eta_minus, a_override, "override")
    if spec.is_polynomial_ring:
        a = eta_minus - eta_plus
        declared = KIND_TO_A.get(spec.kind)
        if declared is not None and declared != a:
            logger.warning(
                f"Declared kind {spec.kind} disagrees with eta- - eta+ = {a}; using {a}"
            )
        return FlipInvariants(eta_plus, eta_minus, a, "polynomial-ring")
    if spec.kind == UNSPECIFIED:
        return FlipInvariants(eta_plus, eta_minus, None, "unknown")
    return FlipInvariants(eta_plus, eta_minus, KIND_TO_A[spec.kind], "declared-kind")


def validate_ci_assumptions(spec, level=1, budget=None):
    """Check the complete-intersection hypotheses on A = k[vars]/(relations).

    Level 1 checks relation degrees and dim A = p+q+r-s; level 2 also
    checks dim A/(x-variables) = q+r-s.
    """
    if level not in CI_LEVELS:
        raise ParameterError(f"CI level must be 1 or 2, got {level}")

    degrees = spec.relation_degrees
    positive = [degree for degree in degrees if degree > 0]
    checks = [CheckResult(
        "relation-degrees",
        FAIL if positive else PASS,
        f"relation degrees {list(degrees)}" + (f"; positive: {positive}" if positive else ""),
    )]

    expected = spec.p + spec.q + spec.r - spec.s
    dimension, check = _dimension_check(
        "complete-intersection", spec.relations, spec, expected, budget
    )
    checks.append(check)

    quotient_plus_dimension = None
    if level == 2:
        x_variables = tuple(spec.base.gen(i) for i in spec.weighting.positive)
        quotient_plus_dimension, check = _dimension_check(
            "quotient-plus-dimension",
            spec.relations + x_variables,
            spec,
            spec.q + spec.r - spec.s,
            budget,
        )
        checks.append(check)

    report = CIReport(spec, level, tuple(checks), dimension, quotient_plus_dimension)
    logger.info(
        f"CI level {level} for {spec}: "
        + ", ".join(f"{check.name}={check.status}" for check in report.checks)
    )
    return report


def _dimension_check(name, generators, spec, expected, budget):
    try:
        basis = buchberger(generators, base=spec.base, budget=budget)
    except BudgetExceededError as exc:
        logger.warning(f"{name}: {exc} after {exc.steps} steps")
        return None, CheckResult(
            name, UNDETERMINED, f"{exc} (after {exc.steps} steps)", budget_exhausted=True
        )
    dimension = krull_dimension(basis)
    status = PASS if dimension == expected else FAIL
    return dimension, CheckResult(
        name, status, f"dimension {dimension}, expected {expected} ({len(basis)} basis elements)"
    )
