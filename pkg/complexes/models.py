"""Bounded complexes of free graded modules.

A generator of twist t spans a copy of A(-t): its weight is t. The
differential d^k maps degree k to degree k+1 and is stored as a matrix
with one row per target generator and one column per source generator;
a nonzero entry has weight (source twist - target twist).
"""
from dataclasses import dataclass

from algebra.exceptions import StructuralError
from algebra.models import EVERY_WEIGHT, GradedRing


@dataclass(frozen=True)
class FreeModule:
    """A finite direct sum of twisted copies of A, one twist per generator."""
    twists: tuple = ()
    multidegrees: tuple = None

    def __post_init__(self):
        object.__setattr__(self, "twists", tuple(int(twist) for twist in self.twists))
        if self.multidegrees is not None:
            object.__setattr__(self, "multidegrees", tuple(tuple(m) for m in self.multidegrees))
            if len(self.multidegrees) != len(self.twists):
                raise StructuralError(
                    f"{len(self.multidegrees)} multidegrees for {len(self.twists)} generators"
                )

    @property
    def rank(self):
        return len(self.twists)

    def __str__(self):
        if not self.twists:
            return "0"
        return " + ".join(f"A({-twist})" if twist else "A" for twist in self.twists)


@dataclass(frozen=True)
class FreeComplex:
    """Modules in cohomological degrees lo..hi with their differentials.

    Construction checks matrix shapes, entry weights and d^2 = 0.
    """
    base: GradedRing
    lo: int
    modules: tuple
    differentials: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "modules", tuple(self.modules))
        object.__setattr__(
            self, "differentials", tuple(tuple(tuple(row) for row in d) for d in self.differentials)
        )
        if not self.modules:
            raise StructuralError("A complex needs at least one module")
        if len(self.differentials) != len(self.modules) - 1:
            raise StructuralError(
                f"{len(self.modules)} modules need {len(self.modules) - 1} differentials, "
                f"got {len(self.differentials)}"
            )
        for degree in range(self.lo, self.hi):
            self._check_differential(degree)
        for degree in range(self.lo, self.hi - 1):
            self._check_square_zero(degree)

    @property
    def hi(self):
        return self.lo + len(self.modules) - 1

    @property
    def degrees(self):
        return range(self.lo, self.hi + 1)

    @property
    def ranks(self):
        """Ranks from degree hi down to lo."""
        return tuple(self.module(degree).rank for degree in reversed(self.degrees))

    @property
    def total_rank(self):
        return sum(module.rank for module in self.modules)

    @property
    def has_multidegrees(self):
        return all(module.multidegrees is not None for module in self.modules)

    def module(self, degree):
        if degree < self.lo or degree > self.hi:
            return FreeModule()
        return self.modules[degree - self.lo]

    def differential(self, degree):
        """Matrix of d^degree; empty when a neighbouring module is outside lo..hi."""
        if degree < self.lo or degree >= self.hi:
            return ()
        return self.differentials[degree - self.lo]

    def _check_differential(self, degree):
        source, target = self.module(degree), self.module(degree + 1)
        matrix = self.differential(degree)
        if len(matrix) != target.rank or any(len(row) != source.rank for row in matrix):
            raise StructuralError(
                f"d^{degree} must be {target.rank}x{source.rank}, got "
                f"{len(matrix)}x{len(matrix[0]) if matrix else 0}"
            )
        for r, row in enumerate(matrix):
            for c, entry in enumerate(row):
                if entry.weighting != self.base.weighting or entry.poly.ring != self.base.ring:
                    raise StructuralError(f"d^{degree}[{r}][{c}] lives in another ring")
                expected = source.twists[c] - target.twists[r]
                if entry.weight not in (EVERY_WEIGHT, expected):
                    raise StructuralError(
                        f"d^{degree}[{r}][{c}] = {entry} has weight {entry.weight}, expected {expected}"
                    )

    def _check_square_zero(self, degree):
        product = matrix_product(self.differential(degree + 1), self.differential(degree),
                                 self.module(degree + 1).rank, self.base)
        if any(not entry.is_zero for row in product for entry in row):
            raise StructuralError(f"d^{degree + 1} * d^{degree} is not zero")


def matrix_product(left, right, inner, base):
    """left * right, where left has `inner` columns and right has `inner` rows."""
    columns = len(right[0]) if right else 0
    ring = base.ring
    result = []
    for row in left:
        values = []
        for c in range(columns):
            total = ring.zero
            for k in range(inner):
                if row[k].poly and right[k][c].poly:
                    total += row[k].poly * right[k][c].poly
            values.append(base.wrap(total))
        result.append(tuple(values))
    return tuple(result)


@dataclass(frozen=True)
class TorWeights:
    """Weights of generators per homological degree, each tuple sorted."""
    weights: tuple

    def __iter__(self):
        return iter(self.weights)

    def __str__(self):
        return "; ".join(", ".join(str(weight) for weight in degree) for degree in self.weights)


@dataclass(frozen=True)
class PresentationReport:
    """Verdict of the non-positive presentation criterion with its Tor weights."""
    spec: object
    check: object
    tor_weights: TorWeights
