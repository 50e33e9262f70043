import logging

from algebra.exceptions import PreconditionError, UnsupportedOperationError
from algebra.models import FAIL, PASS, CheckResult
from cohomology.models import PLUS, parse_side
from cohomology.services.cech import build_cech
from cohomology.services.tables import cohomology_table, default_weight_radius, twist_table
from windows.models import MembershipReport, WindowSpec

logger = logging.getLogger(__name__)

QUOTIENT_NOTE = (
    "quotient ring: split generation by these twists holds under the "
    "dim A/I+ = q+r-s hypothesis and is not recomputed"
)


def eta(spec):
    return spec.weighting.eta_plus, spec.weighting.eta_minus


def window_generators(spec, w, side=PLUS):
    """A(-w), ..., A(-w-eta+ + 1) on side plus; A(w), ..., A(w+eta- - 1) on side minus."""
    side = parse_side(side)
    eta_plus, eta_minus = eta(spec)
    length = eta_plus if side == PLUS else eta_minus
    if length == 0:
        raise PreconditionError(f"{spec} has no variables in the {side} block")
    if side == PLUS:
        twists = tuple(w + j for j in range(length))
    else:
        twists = tuple(-w - j for j in range(length))
    window = WindowSpec(w, side, twists, "" if spec.is_polynomial_ring else QUOTIENT_NOTE)
    logger.info(f"{spec}: {window}")
    return window


def window_membership(spec, i, w, table=None):
    """Check A(-i) against the window at cutoff w via the weights of RGamma+(A(-i)).

    `table` may pass a precomputed side-plus table of A; it must reach
    weight w - i.
    """
    if not spec.is_polynomial_ring:
        raise UnsupportedOperationError(f"Window membership needs a polynomial ring, got {spec}")
    if table is None:
        eta_plus = spec.weighting.eta_plus
        lo = min(w - i, -eta_plus) - 1
        hi = max(w - i, -eta_plus) + default_weight_radius(spec)
        table = cohomology_table(build_cech(spec, PLUS), lo, hi)
    twisted = twist_table(table, i)
    weights = twisted.nonzero_weights()
    top = weights[-1] if weights else None

    vanishing = top is None or top < w
    generation = i >= w
    status = PASS if vanishing and generation else FAIL
    detail = (
        f"top weight of RGamma+(A(-{i})) is {top} ({'<' if vanishing else 'not <'} {w}); "
        f"i={i} {'>=' if generation else '<'} w={w}"
    )
    check = CheckResult(f"window-membership[{i}]", status, detail)
    logger.info(f"A(-{i}) in window w={w} of {spec}: {status}")
    return MembershipReport(i, w, top, vanishing, generation, check)
