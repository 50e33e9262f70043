import logging
from collections import Counter
from itertools import product

from django.conf import settings

from algebra.exceptions import ParameterError, UnsupportedOperationError
from algebra.services.enumeration import count_monomials, iter_positive_solutions, sign_block_bounds
from cohomology.models import CLOSED_FORM, PLUS, CohomologyTable, parse_side
from cohomology.services.cech import multidegree_cohomology

logger = logging.getLogger(__name__)


def default_weight_radius(spec):
    return max(settings.GRADEDFLIP["MIN_WEIGHT_RADIUS"], spec.weighting.eta_plus + spec.weighting.eta_minus + 2)


def cohomology_table(complex_, lo, hi, box=None):
    """Weightwise cohomology of a Cech complex for weights lo..hi.

    Weights whose support is infinite (weight-0 variables, or the
    nonnegative orthant of a plain complex with both signs present) are
    enumerated with every free exponent at most `box` and flagged
    incomplete.
    """
    if lo > hi:
        raise ParameterError(f"Empty weight range {lo}..{hi}")
    box = settings.GRADEDFLIP["ZERO_WEIGHT_BOX"] if box is None else box
    weighting = complex_.spec.weighting
    regions = _support_regions(complex_)

    entries, complete, multigraded = Counter(), {}, {}
    boxed = False
    for weight in range(lo, hi + 1):
        complete[weight] = True
        for bases, signs in regions:
            multidegrees, exact = _region_multidegrees(weighting.weights, bases, signs, weight, box)
            complete[weight] = complete[weight] and exact
            boxed = boxed or not exact
            for multidegree in multidegrees:
                for h, dimension in multidegree_cohomology(complex_, multidegree).items():
                    if dimension:
                        entries[(h, weight)] += dimension
                        multigraded[(h, multidegree)] = dimension

    table = CohomologyTable(
        side=complex_.side,
        extended=complex_.extended,
        lo=lo,
        hi=hi,
        entries=dict(entries),
        complete=complete,
        box=box if boxed else None,
        multigraded=multigraded,
    )
    if not table.is_complete:
        missing = [weight for weight, exact in complete.items() if not exact]
        logger.warning(
            f"{complex_}: weights {missing[0]}..{missing[-1]} enumerated inside exponent box {box}"
        )
    logger.info(f"{complex_}: {len(table.rows())} nonzero entries on weights {lo}..{hi}")
    return table


def _support_regions(complex_):
    """Regions e_v = base_v + sign_v * k_v (k_v >= 0) covering the cohomology support.

    Cohomology sits where the negative exponents are exactly the inverting
    variables; the plain complex also has k in degree 0 on the
    nonnegative orthant.
    """
    nvars = len(complex_.spec.weighting)
    inverting = set(complex_.inverting)
    top = (
        tuple(-1 if v in inverting else 0 for v in range(nvars)),
        tuple(-1 if v in inverting else 1 for v in range(nvars)),
    )
    orthant = ((0,) * nvars, (1,) * nvars)
    if complex_.extended:
        return [top]
    if complex_.is_degenerate:
        return []
    return [top, orthant]


def _region_multidegrees(weights, bases, signs, weight, box):
    steps = [w * s for w, s in zip(weights, signs)]
    target = weight - sum(w * b for w, b in zip(weights, bases))
    moving = [v for v, step in enumerate(steps) if step]
    still = [v for v, step in enumerate(steps) if not step]
    mixed = any(step > 0 for step in steps) and any(step < 0 for step in steps)

    def assemble(ks):
        return tuple(b + s * k for b, s, k in zip(bases, signs, ks))

    if mixed:
        ranges = [range(box + 1)] * len(weights)
        found = [
            assemble(ks) for ks in product(*ranges)
            if sum(step * k for step, k in zip(steps, ks)) == target
        ]
        return found, False

    direction = -1 if any(step < 0 for step in steps) else 1
    found = []
    for solution in iter_positive_solutions(tuple(abs(steps[v]) for v in moving), direction * target):
        for extra in product(*(range(box + 1) for _ in still)):
            ks = [0] * len(weights)
            for v, k in zip(moving, solution):
                ks[v] = k
            for v, k in zip(still, extra):
                ks[v] = k
            found.append(assemble(ks))
    return found, not still


def closed_form_table(spec, side, lo, hi):
    """Weightwise dimensions from the closed form of RGamma for a polynomial ring.

    Side plus: k[y] (x) k[x]^*(eta+) in degree p.
    Side minus: k[x] (x) k[y]^*(-eta-) in degree q.
    """
    side = parse_side(side)
    if lo > hi:
        raise ParameterError(f"Empty weight range {lo}..{hi}")
    if not spec.is_polynomial_ring:
        raise UnsupportedOperationError(f"No closed form for the quotient ring {spec}")
    weighting = spec.weighting
    if weighting.zero:
        raise UnsupportedOperationError(
            f"The closed form needs every weight nonzero; {spec} has weight-0 variables"
        )
    plus = weighting.restrict(weighting.positive)
    minus = weighting.restrict(weighting.negative)

    def x_count(weight):
        return count_monomials(plus, weight, sign_block_bounds(plus.weights, weight)) if weight >= 0 else 0

    def y_count(weight):
        return count_monomials(minus, weight, sign_block_bounds(minus.weights, weight)) if weight <= 0 else 0

    entries = {}
    for i in range(lo, hi + 1):
        if side == PLUS:
            degree = spec.p
            dimension = sum(
                y_count(u) * x_count(u - i - weighting.eta_plus)
                for u in range(i + weighting.eta_plus, 1)
            )
        else:
            degree = spec.q
            dimension = sum(
                x_count(u) * y_count(weighting.eta_minus - i + u)
                for u in range(0, i - weighting.eta_minus + 1)
            )
        if dimension:
            entries[(degree, i)] = dimension

    return CohomologyTable(
        side=side,
        extended=True,
        lo=lo,
        hi=hi,
        entries=entries,
        complete={i: True for i in range(lo, hi + 1)},
        source=CLOSED_FORM,
    )


def twist_table(table, i):
    """Table of A(-i): RGamma(A(-i))_j = RGamma(A)_{j-i}."""
    return CohomologyTable(
        side=table.side,
        extended=table.extended,
        lo=table.lo + i,
        hi=table.hi + i,
        entries={(h, weight + i): d for (h, weight), d in table.entries.items()},
        complete={weight + i: exact for weight, exact in table.complete.items()},
        source=table.source,
        box=table.box,
    )
