import logging
from itertools import combinations

from grobner.models import EMPTY_DIMENSION

logger = logging.getLogger(__name__)


def independent_set(basis):
    """A largest set of variable indices containing no leading-monomial support."""
    if basis.is_unit_ideal:
        return None
    supports = [
        frozenset(i for i, exponent in enumerate(monomial) if exponent)
        for monomial in basis.leading_monomials
    ]
    nvars = basis.base.nvars
    for size in range(nvars, -1, -1):
        for subset in combinations(range(nvars), size):
            chosen = set(subset)
            if not any(support <= chosen for support in supports):
                return subset
    return ()


def krull_dimension(basis):
    """Dimension of k[vars]/I; EMPTY_DIMENSION for the unit ideal."""
    subset = independent_set(basis)
    if subset is None:
        return EMPTY_DIMENSION
    names = [basis.base.weighting.names[i] for i in subset]
    logger.info(f"Krull dimension {len(subset)} (independent variables: {', '.join(names) or 'none'})")
    return len(subset)
