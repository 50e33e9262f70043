import logging

from algebra.exceptions import PreconditionError
from algebra.models import (
    FAIL,
    PASS,
    UNDETERMINED,
    CheckResult,
    monomial_divides,
    weight_of_monomial,
)
from algebra.services.enumeration import iter_monomials, sign_block_bounds
from complexes.models import PresentationReport
from complexes.services.koszul import koszul_complex, tor_weights

logger = logging.getLogger(__name__)


def truncate_generators(spec, w):
    """Minimal monomial generators of the ideal (C+)_{>=w} of the positive block.

    Every monomial of weight >= w is divisible by one of weight in
    [w, w + max positive weight - 1], so only that band is enumerated.
    """
    weighting = spec.weighting
    block = weighting.positive
    if not block:
        raise PreconditionError(f"{spec} has no positive-weight variables to truncate")
    nvars = len(weighting)
    if w <= 0:
        return [(0,) * nvars]

    restricted = weighting.restrict(block)
    top = max(restricted.weights)
    candidates = []
    for weight in range(w, w + top):
        box = sign_block_bounds(restricted.weights, weight)
        for exponents in iter_monomials(restricted, weight, box):
            full = [0] * nvars
            for index, exponent in zip(block, exponents):
                full[index] = exponent
            candidates.append(tuple(full))

    minimal = [
        monomial for monomial in candidates
        if not any(other != monomial and monomial_divides(other, monomial) for other in candidates)
    ]
    minimal.sort(key=lambda m: (weight_of_monomial(m, weighting), tuple(-e for e in m)))
    logger.info(f"(C+)_(>={w}) of {spec} has {len(minimal)} minimal generators")
    return minimal


def nonpositive_presentation_check(spec, ci_report):
    """Does A have a presentation generated in weights <= 0?

    The Koszul twists are the Tor weights only when the relations form a
    regular sequence, so the verdict needs a passing dimension check.
    """
    if ci_report is None:
        raise PreconditionError(
            "The non-positive presentation check needs a complete-intersection report; "
            "run validate first"
        )
    if ci_report.spec != spec:
        raise PreconditionError("The complete-intersection report belongs to another ring")

    weights = tor_weights(koszul_complex(spec))
    if not ci_report.dimension_ok:
        status = ci_report.check("complete-intersection").status
        check = CheckResult(
            "nonpositive-presentation",
            UNDETERMINED,
            f"complete-intersection check is {status}; Koszul twists may not be Tor weights",
            budget_exhausted=ci_report.budget_exhausted,
        )
    else:
        positive = sorted({weight for degree in weights for weight in degree if weight > 0})
        if positive:
            check = CheckResult(
                "nonpositive-presentation", FAIL, f"positive Tor weights {positive}; weights {weights}"
            )
        else:
            check = CheckResult("nonpositive-presentation", PASS, f"Tor weights {weights}")
    logger.info(f"Non-positive presentation of {spec}: {check.status}")
    return PresentationReport(spec, check, weights)
