"""Buchberger's algorithm with the normal selection strategy.

Pairs are chosen by smallest lcm of leading monomials in grevlex, ties
broken by basis position, and pruned with the Gebauer-Moeller criteria.
Every polynomial reduction step is charged to a StepBudget.
"""
import logging

from django.conf import settings

from algebra.exceptions import BudgetExceededError, StructuralError
from algebra.models import GradedRing
from grobner.models import GroebnerBasis

logger = logging.getLogger(__name__)


class StepBudget:
    """Counts reduction steps and fails loudly once the limit is passed."""

    def __init__(self, limit=None):
        self.limit = settings.GRADEDFLIP["GROEBNER_STEP_BUDGET"] if limit is None else limit
        self.spent = 0

    def spend(self, steps=1):
        self.spent += steps
        if self.spent > self.limit:
            raise BudgetExceededError(
                f"Groebner step budget of {self.limit} reductions exceeded", self.spent
            )


def buchberger(generators, base=None, budget=None):
    """Reduced Groebner basis of the ideal generated by `generators`.

    `base` is only needed for the zero ideal (no generators); `budget` is a
    step limit or a StepBudget shared between several computations.
    """
    generators = tuple(generators)
    if base is None:
        if not generators:
            raise StructuralError("buchberger needs generators or a ring")
        first = generators[0]
        base = GradedRing(first.weighting, first.poly.ring.domain)
    if base.nvars == 0:
        raise StructuralError("buchberger needs at least one variable")
    ring = base.ring
    budget = budget if isinstance(budget, StepBudget) else StepBudget(budget)

    basis, pairs = [], set()
    for generator in generators:
        poly = base.wrap(generator.poly).poly
        if not poly:
            logger.warning("Skipping zero generator")
            continue
        basis, pairs = _update(basis, pairs, poly.monic())

    while pairs:
        i, j = _select(basis, pairs)
        pairs.remove((i, j))
        remainder = _reduce(_spoly(basis[i], basis[j]), basis, budget)
        if not remainder:
            continue
        if remainder.is_ground:
            basis, pairs = [ring.one], set()
            break
        basis, pairs = _update(basis, pairs, remainder.monic())

    reduced = _interreduce(_minimalize(basis), budget)
    reduced.sort(key=lambda poly: ring.order(poly.LM), reverse=True)
    logger.info(
        f"Groebner basis of {len(generators)} generators: {len(reduced)} elements, "
        f"{budget.spent} reductions"
    )
    return GroebnerBasis(
        base=base,
        polynomials=tuple(base.wrap(poly) for poly in reduced),
        generators=generators,
        steps=budget.spent,
    )


def normal_form(polynomial, basis, budget=None):
    """Remainder of `polynomial` with no term divisible by a leading monomial of `basis`."""
    poly = basis.base.wrap(polynomial.poly).poly
    budget = budget if isinstance(budget, StepBudget) else StepBudget(budget)
    remainder = _reduce(poly, [element.poly for element in basis], budget)
    return basis.base.wrap(remainder)


def ideal_contains(basis, polynomial):
    return normal_form(polynomial, basis).is_zero


def _spoly(f, g):
    ring = f.ring
    lcm = ring.monomial_lcm(f.LM, g.LM)
    return f.mul_monom(ring.monomial_div(lcm, f.LM)) - g.mul_monom(ring.monomial_div(lcm, g.LM))


def _select(basis, pairs):
    ring = basis[0].ring

    def strategy_key(pair):
        lcm = ring.monomial_lcm(basis[pair[0]].LM, basis[pair[1]].LM)
        return ring.order(lcm), pair

    return min(pairs, key=strategy_key)


def _update(basis, pairs, f):
    """Add monic `f` to the basis and return the pruned pair set."""
    if not basis:
        return [f], set()
    ring = f.ring
    lcm, mul, div = ring.monomial_lcm, ring.monomial_mul, ring.monomial_div
    leading = [g.LM for g in basis]
    lmf = f.LM

    pairs = {
        (i, j) for i, j in pairs
        if (not div(lcm(leading[i], leading[j]), lmf)
            or lcm(leading[i], leading[j]) == lcm(leading[i], lmf)
            or lcm(leading[i], leading[j]) == lcm(leading[j], lmf))
    }
    by_lcm = {}
    for i in range(len(basis)):
        by_lcm.setdefault(lcm(leading[i], lmf), []).append(i)
    minimal_lcms = []
    for candidate in sorted(by_lcm, key=ring.order):
        if all(not div(candidate, kept) for kept in minimal_lcms):
            minimal_lcms.append(candidate)
    new_pairs = set()
    for candidate in minimal_lcms:
        # coprime leading monomials: the S-polynomial reduces to zero
        if not any(lcm(leading[i], lmf) == mul(leading[i], lmf) for i in by_lcm[candidate]):
            new_pairs.add((min(by_lcm[candidate]), len(basis)))
    return basis + [f], pairs | new_pairs


def _reduce(poly, divisors, budget):
    ring = poly.ring
    remainder = ring.zero
    while poly:
        monomial, coefficient = poly.LT
        for divisor in divisors:
            quotient = ring.monomial_div(monomial, divisor.LM)
            if quotient is not None:
                factor = ring.domain.quo(coefficient, divisor.LC)
                poly = poly - divisor.mul_term((quotient, factor))
                budget.spend()
                break
        else:
            term = ring.term_new(monomial, coefficient)
            remainder = remainder + term
            poly = poly - term
    return remainder


def _minimalize(basis):
    if not basis:
        return []
    ring = basis[0].ring
    minimal = []
    for f in sorted(basis, key=lambda poly: ring.order(poly.LM)):
        if all(ring.monomial_div(f.LM, g.LM) is None for g in minimal):
            minimal.append(f)
    return minimal


def _interreduce(basis, budget):
    reduced = []
    for i, f in enumerate(basis):
        g = _reduce(f, basis[:i] + basis[i + 1:], budget)
        reduced.append(g.monic())
    return reduced
