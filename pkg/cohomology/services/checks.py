import logging

from algebra.exceptions import UnsupportedOperationError
from algebra.models import FAIL, PASS, UNDETERMINED, CheckResult
from cohomology.models import MINUS, PLUS, DualityReport
from cohomology.services.cech import build_cech
from cohomology.services.tables import cohomology_table

logger = logging.getLogger(__name__)


def canonical_vanishing_check(spec, a, lo, hi, tables=None):
    """RGamma+ lives in weights < a and RGamma- in weights > a, over lo..hi.

    `tables` may pass precomputed (plus, minus) extended tables.
    """
    plus, minus = tables or (
        cohomology_table(build_cech(spec, PLUS), lo, hi),
        cohomology_table(build_cech(spec, MINUS), lo, hi),
    )
    plus_weights, minus_weights = plus.nonzero_weights(), minus.nonzero_weights()
    top = plus_weights[-1] if plus_weights else None
    bottom = minus_weights[0] if minus_weights else None
    detail = f"a={a}; side plus top weight {top}; side minus bottom weight {bottom}"

    violations = []
    if top is not None and top >= a:
        violations.append(f"side plus has weight {top} >= {a}")
    if bottom is not None and bottom <= a:
        violations.append(f"side minus has weight {bottom} <= {a}")

    if violations:
        check = CheckResult("canonical-vanishing", FAIL, f"{detail}; {'; '.join(violations)}")
    elif not (plus.is_complete and minus.is_complete):
        check = CheckResult("canonical-vanishing", UNDETERMINED, f"{detail}; tables are incomplete")
    else:
        check = CheckResult("canonical-vanishing", PASS, detail)
    logger.info(f"Canonical vanishing of {spec} at a={a}: {check.status}")
    return check


def duality_check(spec, a, lo, hi, tables=None):
    """dim RGamma+^{h+1}_{i+a} = dim RGamma-^{n-h}_{-i} for n = p+q-1 and i in lo..hi.

    `tables` may pass (plus, minus) tables covering lo+a..hi+a and -hi..-lo.
    """
    if spec.p == 0 or spec.q == 0:
        raise UnsupportedOperationError(
            f"Duality needs both blocks nonempty, {spec} has p={spec.p}, q={spec.q}"
        )
    n = spec.p + spec.q - 1
    plus, minus = tables or (
        cohomology_table(build_cech(spec, PLUS), lo + a, hi + a),
        cohomology_table(build_cech(spec, MINUS), -hi, -lo),
    )

    discrepancies = []
    for h in range(-1, n + 1):
        for i in range(lo, hi + 1):
            lhs, rhs = plus.dim(h + 1, i + a), minus.dim(n - h, -i)
            if lhs != rhs:
                discrepancies.append((h, i, lhs, rhs))

    complete = all(plus.complete.get(i + a, False) for i in range(lo, hi + 1)) and all(
        minus.complete.get(-i, False) for i in range(lo, hi + 1)
    )
    if discrepancies:
        status = FAIL if complete else UNDETERMINED
        h, i, lhs, rhs = discrepancies[0]
        detail = (
            f"n={n}, a={a}: {len(discrepancies)} mismatches, first at (h={h}, i={i}): {lhs} != {rhs}"
        )
    else:
        status = PASS if complete else UNDETERMINED
        detail = f"n={n}, a={a}: all weights {lo}..{hi} match"
    check = CheckResult("duality", status, detail)
    logger.info(f"Duality for {spec}: {status}")
    return DualityReport(check, n, tuple(discrepancies))
