"""Free presentations of the comparison functor on twists of A.

All complexes are complexes of free modules over the ambient polynomial
ring C; for a quotient ring A the Koszul factor makes the tensor with A
derived.
"""
import logging

from django.conf import settings

from algebra.exceptions import UnsupportedOperationError
from algebra.models import FAIL, PASS, CheckResult
from algebra.services.enumeration import count_monomials
from complexes.models import FreeComplex, FreeModule
from complexes.services.koszul import koszul_complex
from complexes.services.operations import hilbert_box_count, minimize, tensor, twist
from complexes.services.presentation import truncate_generators
from complexes.services.taylor import taylor_resolution
from windows.models import FunctorImage

logger = logging.getLogger(__name__)


def weight_truncation(spec, i, w):
    """((C+)_{>=w-i} (x) C-)(-i) (x) A: a presentation of L_{[>=w]}(A(-i))."""
    generators = truncate_generators(spec, w - i)
    product = tensor(taylor_resolution(generators, spec.base), koszul_complex(spec))
    return twist(product, -i)


def functor_image(spec, i, w=0, minimized=False):
    """Image of A(i) for the window at cutoff w.

    The window at w is the window at 0 twisted by w, so A(i) is handled as
    A(i + w) at cutoff 0 and the result twisted back.
    """
    eta_plus = spec.weighting.eta_plus
    j = i + w
    if j <= -eta_plus:
        raise UnsupportedOperationError(
            f"The image of A({j}) for twists <= -eta+ = {-eta_plus} involves a cone "
            "and is not computed"
        )
    if j <= 0:
        complex_ = FreeComplex(spec.base, 0, [FreeModule((-j,), ((0,) * spec.base.nvars,))])
        note = f"free A-module A({j})"
    else:
        complex_ = weight_truncation(spec, -j, 0)
        note = f"((C+)_(>={j}) (x) C-)({j}) (x) A"
        if not spec.is_polynomial_ring:
            note += "; complex of free C-modules, tensor with A resolved by the Koszul complex"
    if w:
        complex_ = twist(complex_, -w)
    if minimized:
        complex_ = minimize(complex_)
    logger.info(f"Functor image of A({i}) at w={w} for {spec}: ranks {complex_.ranks}")
    return FunctorImage(spec, i, complex_, w, minimized, note)


def truncated_module_count(spec, c, weight, box):
    """Monomials b <= box of the given weight whose positive-block part has weight >= c.

    This is the dimension of ((C+)_{>=c} (x) C- (x) C0) in that weight and box.
    """
    weighting = spec.weighting
    plus_indices = weighting.positive
    rest_indices = tuple(v for v in range(len(weighting)) if v not in plus_indices)
    plus, rest = weighting.restrict(plus_indices), weighting.restrict(rest_indices)
    plus_box = tuple(box[v] for v in plus_indices)
    rest_box = tuple(box[v] for v in rest_indices)
    top = sum(w * b for w, b in zip(plus.weights, plus_box))
    return sum(
        count_monomials(plus, u, plus_box) * count_monomials(rest, weight - u, rest_box)
        for u in range(max(c, 0), top + 1)
    )


def quotient_weight_count(spec, c, weight, box):
    """Dimension of L_{<c}(C) = C / (C+)_{>=c} C in one weight, inside the box."""
    return count_monomials(spec.weighting, weight, box) - truncated_module_count(spec, c, weight, box)


def functor_euler_check(image, lo, hi, box=None):
    """Compare the image's alternating box counts with the truncated module, weight by weight."""
    spec, i = image.spec, image.twist
    cutoff = i + image.w
    if not spec.is_polynomial_ring:
        raise UnsupportedOperationError("Box counts of functor images need a polynomial ring")
    bound = settings.GRADEDFLIP["EULER_BOX"] if box is None else box
    full_box = (bound,) * spec.base.nvars
    mismatches = []
    for weight in range(lo, hi + 1):
        presented = hilbert_box_count(image.complex, weight, full_box)
        expected = truncated_module_count(spec, cutoff, weight + i, full_box)
        if presented != expected:
            mismatches.append((weight, presented, expected))
    name = f"functor-image[{i}]"
    if mismatches:
        weight, presented, expected = mismatches[0]
        return CheckResult(
            name, FAIL, f"weight {weight}: presentation counts {presented}, module has {expected}"
        )
    return CheckResult(
        name, PASS, f"ranks {image.complex.ranks}; counts agree on weights {lo}..{hi} in box {bound}"
    )
