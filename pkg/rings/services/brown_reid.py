"""The Brown-Reid family of 3-fold flips of type A.

Generators are named so that x-variables have positive weight, y-variables
negative weight and z has weight 0.
"""
import logging

from sympy.polys.domains import QQ

from algebra.exceptions import ParameterError
from algebra.models import GradedRing, Weighting
from rings.models import FLIP, BrownReidParameters, RingSpec
from rings.serializers import BrownReidParametersSerializer

logger = logging.getLogger(__name__)

BROWN_REID_NAMES = ("x1", "x2", "y1", "y2", "y3", "z")

_LABELS = {"lam": "lambda"}


def validate_parameters(data):
    """Run the parameter serializer and return BrownReidParameters."""
    serializer = BrownReidParametersSerializer(data=data)
    if not serializer.is_valid():
        messages = []
        for field, errors in serializer.errors.items():
            prefix = "" if field == "non_field_errors" else f"{_LABELS.get(field, field)}: "
            messages.extend(f"{prefix}{error}" for error in errors)
        raise ParameterError("; ".join(messages))
    return BrownReidParameters(**serializer.validated_data)


def brown_reid_weighting(parameters):
    lam, mu, e = parameters.lam, parameters.mu, parameters.e
    return Weighting(BROWN_REID_NAMES, (lam, mu, -mu, -lam - mu * e, -1, 0))


def brown_reid_spec(lam, mu, d, e, alpha, beta, domain=QQ, kind=FLIP):
    """k[x1,x2,y1,y2,y3,z]/(f1, f2) for the given parameters.

    f1 = x1*y2 - y1^e*z^alpha - y3^(mu*e) has weight -mu*e and
    f2 = y1*x2 - z^beta - x1^d*y3^(lam*d) has weight 0.
    """
    parameters = validate_parameters(
        {"lam": lam, "mu": mu, "d": d, "e": e, "alpha": alpha, "beta": beta}
    )
    base = GradedRing(brown_reid_weighting(parameters), domain)
    f1 = (
        base.monomial((1, 0, 0, 1, 0, 0))
        - base.monomial((0, 0, e, 0, 0, alpha))
        - base.monomial((0, 0, 0, 0, mu * e, 0))
    )
    f2 = (
        base.monomial((0, 1, 1, 0, 0, 0))
        - base.monomial((0, 0, 0, 0, 0, beta))
        - base.monomial((d, 0, 0, 0, lam * d, 0))
    )
    spec = RingSpec(base, (f1, f2), kind, parameters)
    logger.info(f"Brown-Reid ring {parameters.as_template()}: weights {base.weighting.weights}")
    return spec
