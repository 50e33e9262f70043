"""Cech complexes evaluated one multidegree at a time.

Each Cech term is at most one-dimensional in a given multidegree, so the
complex at a multidegree is a complex of incidence matrices between the
subsets containing its negative support. Only that negative support
matters, which is what the cache is keyed on.
"""
import logging
from functools import lru_cache
from itertools import combinations

from sympy.polys.matrices import DomainMatrix

from algebra.exceptions import ParameterError, StructuralError, UnsupportedOperationError
from cohomology.models import PLUS, CechComplex, parse_side

logger = logging.getLogger(__name__)


def build_cech(spec, side, extended=True, inverting=None):
    """Cech complex of a polynomial ring along its positive or negative block.

    `inverting` may reorder the block; the default is declaration order.
    An empty block gives the degenerate complex (RGamma = A, Cech = 0).
    """
    side = parse_side(side)
    if not spec.is_polynomial_ring:
        raise UnsupportedOperationError(
            f"Local cohomology of quotient rings is not computed ({spec} has {spec.s} relations)"
        )
    block = spec.weighting.positive if side == PLUS else spec.weighting.negative
    if inverting is None:
        inverting = block
    inverting = tuple(inverting)
    if sorted(inverting) != sorted(block):
        raise ParameterError(
            f"Inverting variables {inverting} are not an ordering of the {side} block {block}"
        )
    if not block:
        logger.info(f"Empty {side} block in {spec}: degenerate Cech complex")
    return CechComplex(spec, side, inverting, extended)


def multidegree_cohomology(complex_, multidegree):
    """Dimension of cohomology in each degree of the complex, at one multidegree."""
    if len(multidegree) != len(complex_.spec.weighting):
        raise StructuralError(
            f"Multidegree of length {len(multidegree)} in a ring with "
            f"{len(complex_.spec.weighting)} variables"
        )
    negative = frozenset(v for v, e in enumerate(multidegree) if e < 0)
    return dict(_pattern_cohomology(
        complex_.inverting, complex_.extended, complex_.spec.domain, negative
    ))


@lru_cache(maxsize=None)
def _pattern_cohomology(inverting, extended, domain, negative):
    offset = 0 if extended else 1
    dimensions = {h: 0 for h in range(0, len(inverting) - offset + 1)}
    if not negative <= set(inverting):
        return tuple(sorted(dimensions.items()))

    free = [v for v in inverting if v not in negative]
    terms = {}
    for size in range(len(free) + 1):
        for chosen in combinations(free, size):
            sigma = tuple(v for v in inverting if v in negative or v in chosen)
            if len(sigma) >= offset:
                terms.setdefault(len(sigma) - offset, []).append(sigma)

    ranks = {}
    for degree, sources in terms.items():
        targets = terms.get(degree + 1, [])
        if not targets:
            ranks[degree] = 0
            continue
        position = {tau: row for row, tau in enumerate(targets)}
        rows = [[domain.zero] * len(sources) for _ in targets]
        for column, sigma in enumerate(sources):
            for v in free:
                if v in sigma:
                    continue
                tau = tuple(u for u in inverting if u in sigma or u == v)
                rows[position[tau]][column] = domain.convert((-1) ** tau.index(v))
        ranks[degree] = DomainMatrix(rows, (len(targets), len(sources)), domain).rank()

    for degree, sources in terms.items():
        dimensions[degree] = len(sources) - ranks[degree] - ranks.get(degree - 1, 0)
    return tuple(sorted(dimensions.items()))


def term_euler_characteristic(complex_, multidegree):
    """Alternating count of the terms containing the multidegree."""
    return sum(
        -1 if degree % 2 else 1
        for degree, sigma in complex_.terms()
        if complex_.contains(sigma, multidegree)
    )


def euler_characteristic(dimensions):
    return sum(-d if h % 2 else d for h, d in dimensions.items())


def triangle_consistent(spec, side, multidegree, inverting=None):
    """chi(RGamma) = chi(A) - chi(Cech) at one multidegree."""
    extended = build_cech(spec, side, True, inverting)
    plain = build_cech(spec, side, False, inverting)
    in_ring = 1 if all(e >= 0 for e in multidegree) else 0
    return (
        euler_characteristic(multidegree_cohomology(extended, multidegree))
        == in_ring - euler_characteristic(multidegree_cohomology(plain, multidegree))
    )
