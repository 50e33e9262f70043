from dataclasses import dataclass

from algebra.exceptions import InhomogeneousRelationError, RingSpecError
from algebra.models import EVERY_WEIGHT, INHOMOGENEOUS, PASS

FLIP = "flip"
FLOP = "flop"
UNSPECIFIED = "unspecified"

KIND_CHOICES = [
    (FLIP, "Flip"),
    (FLOP, "Flop"),
    (UNSPECIFIED, "Unspecified"),
]

# a = 1 for flips, a = 0 for flops.
KIND_TO_A = {FLIP: 1, FLOP: 0}


@dataclass(frozen=True)
class BrownReidParameters:
    """Positive integers of the Brown-Reid family, gcd(lam, mu) = 1."""
    lam: int
    mu: int
    d: int
    e: int
    alpha: int
    beta: int

    def as_template(self):
        return (
            f"lambda={self.lam} mu={self.mu} d={self.d} "
            f"e={self.e} alpha={self.alpha} beta={self.beta}"
        )


@dataclass(frozen=True)
class RingSpec:
    """A weighted polynomial ring, optionally divided by homogeneous relations."""
    base: object
    relations: tuple = ()
    kind: str = UNSPECIFIED
    parameters: BrownReidParameters = None

    def __post_init__(self):
        object.__setattr__(self, "relations", tuple(self.relations))
        if self.kind not in KIND_TO_A and self.kind != UNSPECIFIED:
            raise RingSpecError(f"Invalid kind {self.kind!r}. Must be one of: flip, flop", code="kind")
        for relation in self.relations:
            if relation.weighting != self.weighting:
                raise RingSpecError(f"Relation {relation} is graded by another weighting")
            if relation.weight == EVERY_WEIGHT:
                raise RingSpecError("Relation is identically zero", code="zero-relation")
            if relation.weight == INHOMOGENEOUS:
                raise InhomogeneousRelationError(str(relation), relation.term_weights())

    @property
    def weighting(self):
        return self.base.weighting

    @property
    def domain(self):
        return self.base.domain

    @property
    def ring(self):
        return self.base.ring

    @property
    def p(self):
        return len(self.weighting.positive)

    @property
    def q(self):
        return len(self.weighting.negative)

    @property
    def r(self):
        return len(self.weighting.zero)

    @property
    def s(self):
        return len(self.relations)

    @property
    def is_polynomial_ring(self):
        return not self.relations

    @property
    def relation_degrees(self):
        return tuple(relation.weight for relation in self.relations)

    def __str__(self):
        ring = f"k[{','.join(self.weighting.names)}]"
        if not self.relations:
            return ring
        return f"{ring}/({', '.join(str(relation) for relation in self.relations)})"


@dataclass(frozen=True)
class FlipInvariants:
    """Window lengths eta+/eta- and the canonical-vanishing index a."""
    eta_plus: int
    eta_minus: int
    a: int = None
    source: str = "unknown"

    @property
    def expected_comparison(self):
        if self.a is None:
            return "unknown"
        if self.a > 0:
            return "D(X+) embeds into D(X-)"
        if self.a == 0:
            return "D(X+) equivalent to D(X-)"
        return "D(X-) embeds into D(X+)"


@dataclass(frozen=True)
class CIReport:
    """Complete-intersection verdicts for one ring spec."""
    spec: RingSpec
    level: int
    checks: tuple
    dimension: object = None
    quotient_plus_dimension: object = None

    def check(self, name):
        return next(check for check in self.checks if check.name == name)

    @property
    def degrees_ok(self):
        return self.check("relation-degrees").status == PASS

    @property
    def dimension_ok(self):
        return self.check("complete-intersection").status == PASS

    @property
    def passed(self):
        return all(check.status == PASS for check in self.checks)

    @property
    def budget_exhausted(self):
        return any(check.budget_exhausted for check in self.checks)
