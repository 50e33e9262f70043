"""Lattice-point enumeration behind Hilbert-function style counts."""
from collections import Counter
from itertools import product

from algebra.exceptions import StructuralError


def count_monomials(weighting, weight, box):
    """Number of exponent vectors 0 <= e <= box with the given Z-weight."""
    if len(box) != len(weighting):
        raise StructuralError(f"Box has {len(box)} bounds for {len(weighting)} variables")
    if any(bound < 0 for bound in box):
        return 0
    partial = Counter({0: 1})
    for variable_weight, bound in zip(weighting.weights, box):
        extended = Counter()
        for total, count in partial.items():
            for exponent in range(bound + 1):
                extended[total + variable_weight * exponent] += count
        partial = extended
    return partial[weight]


def iter_monomials(weighting, weight, box):
    """Yield the exponent vectors counted by count_monomials, in lex order."""
    if any(bound < 0 for bound in box):
        return
    for exponents in product(*(range(bound + 1) for bound in box)):
        if sum(e * w for e, w in zip(exponents, weighting.weights)) == weight:
            yield exponents


def iter_positive_solutions(steps, total):
    """Yield k >= 0 with sum(steps[v] * k[v]) == total, for positive steps."""
    if total < 0:
        return
    if not steps:
        if total == 0:
            yield ()
        return
    head, rest = steps[0], steps[1:]
    for k in range(total // head + 1):
        for tail in iter_positive_solutions(rest, total - head * k):
            yield (k,) + tail


def sign_block_bounds(weights, weight):
    """Exponent bounds for a single-sign block: nothing heavier than `weight` fits."""
    return tuple(abs(weight) // abs(w) for w in weights)
