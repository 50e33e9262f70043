import logging
from itertools import combinations

from complexes.models import FreeComplex, FreeModule, TorWeights

logger = logging.getLogger(__name__)


def koszul_complex(spec):
    """Koszul complex of the relations over the ambient polynomial ring.

    The basis in degree -j is the j-subsets J of the relations, each of
    twist sum(deg f_i for i in J), and d(e_J) = sum_t (-1)^t f_{J_t} e_{J - J_t}.
    """
    base, s = spec.base, spec.s
    degrees = spec.relation_degrees
    subsets = [list(combinations(range(s), j)) for j in range(s + 1)]

    modules = []
    for j in range(s, -1, -1):
        twists = tuple(sum(degrees[i] for i in subset) for subset in subsets[j])
        # the relation-free complex is just A, generated in multidegree zero
        multidegrees = ((0,) * base.nvars,) if s == 0 else None
        modules.append(FreeModule(twists, multidegrees))

    differentials = []
    for j in range(s, 0, -1):
        position = {subset: row for row, subset in enumerate(subsets[j - 1])}
        matrix = [[base.zero()] * len(subsets[j]) for _ in subsets[j - 1]]
        for column, subset in enumerate(subsets[j]):
            for t, index in enumerate(subset):
                face = subset[:t] + subset[t + 1:]
                relation = spec.relations[index]
                matrix[position[face]][column] = relation if t % 2 == 0 else -relation
        differentials.append(matrix)

    complex_ = FreeComplex(base, -s, modules, differentials)
    logger.info(f"Koszul complex of {spec}: ranks {complex_.ranks}")
    return complex_


def tor_weights(complex_):
    """Generator weights per homological degree 0, 1, ... of a complex ending in degree 0."""
    return TorWeights(tuple(
        tuple(sorted(complex_.module(-j).twists)) for j in range(0, -complex_.lo + 1)
    ))
