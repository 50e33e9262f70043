"""Twist, shift, dual, tensor product and minimization of free complexes."""
import logging

from algebra.exceptions import PreconditionError, StructuralError
from algebra.services.enumeration import count_monomials
from complexes.models import FreeComplex, FreeModule

logger = logging.getLogger(__name__)


def twist(complex_, n):
    """M(n): every generator weight drops by n."""
    modules = [
        FreeModule(tuple(t - n for t in module.twists), module.multidegrees)
        for module in complex_.modules
    ]
    return FreeComplex(complex_.base, complex_.lo, modules, complex_.differentials)


def shift(complex_, n):
    """M[n]: degree k moves to k - n and differentials pick up (-1)^n."""
    differentials = complex_.differentials
    if n % 2:
        differentials = [[[-entry for entry in row] for row in d] for d in differentials]
    return FreeComplex(complex_.base, complex_.lo - n, complex_.modules, differentials)


def dualize(complex_):
    """Hom(-, A): negated degrees and twists, transposed differentials.

    The transpose of d^k carries the sign (-1)^k, so dualize(dualize(C)) is C
    with every differential negated.
    """
    modules = []
    for module in reversed(complex_.modules):
        multidegrees = None
        if module.multidegrees is not None:
            multidegrees = tuple(tuple(-e for e in m) for m in module.multidegrees)
        modules.append(FreeModule(tuple(-t for t in module.twists), multidegrees))
    differentials = []
    for degree in range(complex_.hi - 1, complex_.lo - 1, -1):
        matrix = complex_.differential(degree)
        columns = complex_.module(degree + 1).rank
        rows = complex_.module(degree).rank
        transpose = [[matrix[c][r] for c in range(columns)] for r in range(rows)]
        if degree % 2:
            transpose = [[-entry for entry in row] for row in transpose]
        differentials.append(transpose)
    return FreeComplex(complex_.base, -complex_.hi, modules, differentials)


def tensor(first, second):
    """Total complex of first (x) second with d = d1 (x) 1 + (-1)^p 1 (x) d2.

    The basis of each total degree is ordered by (p, i, j): degree p of
    the first factor, then generator i of the first and j of the second.
    """
    if first.base != second.base:
        raise StructuralError("Cannot tensor complexes over different rings")
    base = first.base
    lo, hi = first.lo + second.lo, first.hi + second.hi

    def basis(n):
        return [
            (p, i, j)
            for p in first.degrees if second.lo <= n - p <= second.hi
            for i in range(first.module(p).rank)
            for j in range(second.module(n - p).rank)
        ]

    modules = []
    for n in range(lo, hi + 1):
        twists, multidegrees = [], []
        keep_multidegrees = True
        for p, i, j in basis(n):
            left, right = first.module(p), second.module(n - p)
            twists.append(left.twists[i] + right.twists[j])
            if left.multidegrees is None or right.multidegrees is None:
                keep_multidegrees = False
            else:
                multidegrees.append(tuple(
                    a + b for a, b in zip(left.multidegrees[i], right.multidegrees[j])
                ))
        modules.append(FreeModule(twists, multidegrees if keep_multidegrees else None))

    differentials = []
    for n in range(lo, hi):
        sources, targets = basis(n), basis(n + 1)
        position = {element: row for row, element in enumerate(targets)}
        matrix = [[base.zero()] * len(sources) for _ in targets]
        for column, (p, i, j) in enumerate(sources):
            q = n - p
            if p < first.hi:
                d1 = first.differential(p)
                for target in range(first.module(p + 1).rank):
                    if not d1[target][i].is_zero:
                        matrix[position[(p + 1, target, j)]][column] = d1[target][i]
            if q < second.hi:
                d2 = second.differential(q)
                for target in range(second.module(q + 1).rank):
                    entry = d2[target][j]
                    if not entry.is_zero:
                        matrix[position[(p, i, target)]][column] = -entry if p % 2 else entry
        differentials.append(matrix)

    return FreeComplex(base, lo, modules, differentials)


def minimize(complex_):
    """Cancel unit entries of the differentials until none is left."""
    base = complex_.base
    domain = base.domain
    twists = [list(module.twists) for module in complex_.modules]
    multidegrees = [
        None if module.multidegrees is None else list(module.multidegrees)
        for module in complex_.modules
    ]
    matrices = [[list(row) for row in d] for d in complex_.differentials]

    while True:
        pivot = _find_unit(matrices)
        if pivot is None:
            break
        index, r, c = pivot
        matrix = matrices[index]
        inverse = domain.quo(domain.one, matrix[r][c].leading_coefficient)
        source_rank = len(twists[index])
        reduced = []
        for row in range(len(matrix)):
            if row == r:
                continue
            factor = matrix[row][c].scale(inverse)
            reduced.append([
                matrix[row][col] - factor * matrix[r][col]
                for col in range(source_rank) if col != c
            ])
        matrices[index] = reduced
        if index > 0:
            del matrices[index - 1][c]
        if index + 1 < len(matrices):
            for row in matrices[index + 1]:
                del row[r]
        del twists[index][c]
        del twists[index + 1][r]
        for position, generator in ((index, c), (index + 1, r)):
            if multidegrees[position] is not None:
                del multidegrees[position][generator]

    modules = [FreeModule(t, m) for t, m in zip(twists, multidegrees)]
    minimal = FreeComplex(base, complex_.lo, modules, matrices)
    logger.info(f"Minimized ranks {complex_.ranks} to {minimal.ranks}")
    return minimal


def _find_unit(matrices):
    for index, matrix in enumerate(matrices):
        for r, row in enumerate(matrix):
            for c, entry in enumerate(row):
                if entry.is_unit:
                    return index, r, c
    return None


def hilbert_box_count(complex_, weight, box):
    """Alternating count of weight-`weight` monomials over all summands, inside `box`.

    For a resolution this is the weightwise dimension of what it resolves,
    restricted to multidegrees <= box.
    """
    if not complex_.has_multidegrees:
        raise PreconditionError("Box counts need generator multidegrees on every module")
    weighting = complex_.base.weighting
    total = 0
    for degree in complex_.degrees:
        module = complex_.module(degree)
        count = sum(
            count_monomials(
                weighting, weight - t, tuple(b - e for b, e in zip(box, multidegree))
            )
            for t, multidegree in zip(module.twists, module.multidegrees)
        )
        total += -count if degree % 2 else count
    return total
