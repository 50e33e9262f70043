"""Taylor resolutions of monomial ideals.

The j-subsets J of the generators sit in degree -(j-1) with twist the
weight of lcm(J) and multidegree lcm(J); the differential sends e_J to
sum_t (-1)^t (lcm(J) / lcm(J - J_t)) e_{J - J_t}.
"""
import logging
from functools import reduce
from itertools import combinations

from algebra.exceptions import PreconditionError, StructuralError
from algebra.models import GradedPolynomial, monomial_lcm, monomial_quotient, weight_of_monomial
from complexes.models import FreeComplex, FreeModule

logger = logging.getLogger(__name__)


def taylor_resolution(monomials, base):
    """Resolve the ideal generated by `monomials` (exponent tuples or monomial polynomials)."""
    generators = [_exponents(monomial, base) for monomial in monomials]
    positive = set(base.weighting.positive)
    for exponents in generators:
        if any(e and index not in positive for index, e in enumerate(exponents)):
            raise PreconditionError(
                f"Taylor resolution needs monomials in positive-weight variables, got {exponents}"
            )
    m = len(generators)
    if m == 0:
        return FreeComplex(base, 0, (FreeModule((), ()),))

    subsets = {j: list(combinations(range(m), j)) for j in range(1, m + 1)}
    lcms = {
        subset: reduce(monomial_lcm, (generators[i] for i in subset))
        for j in subsets for subset in subsets[j]
    }

    modules = []
    for j in range(m, 0, -1):
        multidegrees = tuple(lcms[subset] for subset in subsets[j])
        twists = tuple(weight_of_monomial(lcm, base.weighting) for lcm in multidegrees)
        modules.append(FreeModule(twists, multidegrees))

    differentials = []
    for j in range(m, 1, -1):
        position = {subset: row for row, subset in enumerate(subsets[j - 1])}
        matrix = [[base.zero()] * len(subsets[j]) for _ in subsets[j - 1]]
        for column, subset in enumerate(subsets[j]):
            for t in range(j):
                face = subset[:t] + subset[t + 1:]
                quotient = monomial_quotient(lcms[subset], lcms[face])
                matrix[position[face]][column] = base.monomial(quotient, (-1) ** t)
        differentials.append(matrix)

    complex_ = FreeComplex(base, -(m - 1), modules, differentials)
    logger.info(f"Taylor resolution of {m} monomials: ranks {complex_.ranks}")
    return complex_


def _exponents(monomial, base):
    if isinstance(monomial, GradedPolynomial):
        if not monomial.is_monomial:
            raise StructuralError(f"Taylor resolution needs monomials, got {monomial}")
        return monomial.leading_monomial
    exponents = tuple(monomial)
    if len(exponents) != base.nvars or any(e < 0 for e in exponents):
        raise StructuralError(f"Not an exponent vector of {base.ring}: {exponents}")
    return exponents
