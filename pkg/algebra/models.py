"""Weighted polynomial data model shared by every other app.

Coefficients live in an exact sympy domain (QQ, or GF(p) for speed) and
terms are stored in sympy's sparse PolyRing under grevlex on the raw
exponents. The Z-grading comes from a Weighting and never from the term
order: weights may be negative, so they cannot order monomials globally.
"""
import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache

from sympy import Symbol, isprime
from sympy.polys.domains import GF, QQ
from sympy.polys.orderings import grevlex
from sympy.polys.rings import PolyElement, PolyRing

from algebra.exceptions import ParameterError, StructuralError

logger = logging.getLogger(__name__)

# Weight markers for polynomials without a single weight.
INHOMOGENEOUS = "inhomogeneous"
EVERY_WEIGHT = "every-weight"

FIELD_CHOICES = [
    ("Q", "Rational numbers"),
    ("GF", "Prime field"),
]

# Check outcomes used by every report.
PASS = "pass"
FAIL = "fail"
UNDETERMINED = "undetermined"
NOT_APPLICABLE = "not-applicable"


def field_domain(name="Q", characteristic=None):
    """Return the sympy domain for a field declaration."""
    if name == "Q":
        return QQ
    if name == "GF":
        if characteristic is None or not isprime(characteristic):
            raise ParameterError(f"GF needs a prime characteristic, got {characteristic}")
        return GF(characteristic)
    raise ParameterError(f"Unknown field {name!r}. Must be one of: Q, GF")


def field_label(domain):
    """Inverse of field_domain, as written in ring-spec files."""
    if domain == QQ:
        return "Q"
    return f"GF {domain.characteristic()}"


@dataclass(frozen=True)
class Weighting:
    """Ordered variable names with one integer weight each.

    The sign of the weight alone decides the block: positive variables are
    the x-block, negative ones the y-block and weight-0 ones the z-block.
    """
    names: tuple
    weights: tuple

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "weights", tuple(int(weight) for weight in self.weights))
        if len(self.names) != len(self.weights):
            raise StructuralError(
                f"{len(self.names)} variable names but {len(self.weights)} weights"
            )
        if len(set(self.names)) != len(self.names):
            raise StructuralError(f"Variable names must be unique: {', '.join(self.names)}")

    def __len__(self):
        return len(self.names)

    @property
    def positive(self):
        return tuple(i for i, weight in enumerate(self.weights) if weight > 0)

    @property
    def negative(self):
        return tuple(i for i, weight in enumerate(self.weights) if weight < 0)

    @property
    def zero(self):
        return tuple(i for i, weight in enumerate(self.weights) if weight == 0)

    @property
    def eta_plus(self):
        return sum(self.weights[i] for i in self.positive)

    @property
    def eta_minus(self):
        return -sum(self.weights[i] for i in self.negative)

    def index(self, name):
        return self.names.index(name)

    def restrict(self, indices):
        """Weighting of the variables at `indices`, in that order."""
        return Weighting(
            tuple(self.names[i] for i in indices),
            tuple(self.weights[i] for i in indices),
        )


# A monomial is its exponent tuple; negative entries only occur inside
# localizations (Cech terms), never in stored polynomials.
Monomial = tuple


def weight_of_monomial(monomial, weighting):
    """Z-weight of an exponent vector: sum of exponent times weight."""
    if len(monomial) != len(weighting):
        raise StructuralError(
            f"Monomial of length {len(monomial)} in a ring with {len(weighting)} variables"
        )
    return sum(exponent * weight for exponent, weight in zip(monomial, weighting.weights))


def monomial_divides(divisor, monomial):
    return all(a <= b for a, b in zip(divisor, monomial))


def monomial_lcm(first, second):
    return tuple(max(a, b) for a, b in zip(first, second))


def monomial_quotient(monomial, divisor):
    return tuple(a - b for a, b in zip(monomial, divisor))


@lru_cache(maxsize=None)
def polynomial_ring(names, domain):
    return PolyRing(tuple(Symbol(name) for name in names), domain, grevlex)


@dataclass(frozen=True)
class GradedRing:
    """The polynomial ring k[variables] with its Z-grading."""
    weighting: Weighting
    domain: object = QQ

    @cached_property
    def ring(self):
        return polynomial_ring(self.weighting.names, self.domain)

    @property
    def nvars(self):
        return len(self.weighting)

    def wrap(self, poly):
        if poly.ring != self.ring:
            raise StructuralError(f"Polynomial from {poly.ring} used in {self.ring}")
        return GradedPolynomial(poly, self.weighting)

    def zero(self):
        return self.wrap(self.ring.zero)

    def one(self):
        return self.wrap(self.ring.one)

    def constant(self, value):
        return self.wrap(self.ring.ground_new(self.domain.convert(value)))

    def gen(self, index):
        return self.wrap(self.ring.gens[index])

    def monomial(self, exponents, coefficient=1):
        exponents = tuple(exponents)
        if len(exponents) != self.nvars or any(e < 0 for e in exponents):
            raise StructuralError(f"Not a monomial of {self.ring}: {exponents}")
        return self.wrap(self.ring.term_new(exponents, self.domain.convert(coefficient)))


@dataclass(frozen=True)
class GradedPolynomial:
    """A sparse polynomial together with the weighting that grades it."""
    poly: PolyElement
    weighting: Weighting

    def __post_init__(self):
        if self.poly.ring.ngens != len(self.weighting):
            raise StructuralError(
                f"Polynomial in {self.poly.ring.ngens} variables graded by {len(self.weighting)} weights"
            )

    @cached_property
    def weight(self):
        return homogeneity(self)

    @property
    def is_zero(self):
        return not self.poly

    @property
    def is_homogeneous(self):
        return self.weight != INHOMOGENEOUS

    @property
    def is_unit(self):
        return bool(self.poly) and self.poly.is_ground

    @property
    def is_monomial(self):
        return len(self.poly) == 1

    @property
    def leading_monomial(self):
        return self.poly.LM

    @property
    def leading_coefficient(self):
        return self.poly.LC

    def terms(self):
        """(exponents, coefficient) pairs, largest first in grevlex."""
        return tuple(self.poly.terms())

    def term_weights(self):
        return [weight_of_monomial(monomial, self.weighting) for monomial, _ in self.terms()]

    def scale(self, coefficient):
        return GradedPolynomial(self.poly * coefficient, self.weighting)

    def _coerce(self, other):
        if isinstance(other, GradedPolynomial):
            if other.weighting != self.weighting or other.poly.ring != self.poly.ring:
                raise StructuralError("Arithmetic between polynomials of different rings")
            return other.poly
        return self.poly.ring.ground_new(self.poly.ring.domain.convert(other))

    def __add__(self, other):
        return GradedPolynomial(self.poly + self._coerce(other), self.weighting)

    __radd__ = __add__

    def __sub__(self, other):
        return GradedPolynomial(self.poly - self._coerce(other), self.weighting)

    def __rsub__(self, other):
        return GradedPolynomial(self._coerce(other) - self.poly, self.weighting)

    def __mul__(self, other):
        return GradedPolynomial(self.poly * self._coerce(other), self.weighting)

    __rmul__ = __mul__

    def __neg__(self):
        return GradedPolynomial(-self.poly, self.weighting)

    def __str__(self):
        return format_polynomial(self.poly, self.weighting.names)


def homogeneity(polynomial, weighting=None):
    """Common weight of all terms, INHOMOGENEOUS, or EVERY_WEIGHT for zero."""
    weighting = weighting or polynomial.weighting
    weights = {weight_of_monomial(monomial, weighting) for monomial in polynomial.poly.monoms()}
    if not weights:
        return EVERY_WEIGHT
    if len(weights) == 1:
        return weights.pop()
    return INHOMOGENEOUS


def format_polynomial(poly, names):
    """Render in ring-spec syntax (`*`, `^`, integer coefficients)."""
    if not poly:
        return "0"
    domain = poly.ring.domain
    pieces = []
    for monomial, coefficient in poly.terms():
        value = domain.to_sympy(coefficient)
        negative = value < 0
        magnitude = -value if negative else value
        factors = [name if e == 1 else f"{name}^{e}" for name, e in zip(names, monomial) if e]
        if magnitude != 1 or not factors:
            factors.insert(0, str(magnitude))
        pieces.append(("-" if negative else "+", "*".join(factors)))
    sign, body = pieces[0]
    text = f"-{body}" if sign == "-" else body
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


@dataclass(frozen=True)
class CheckResult:
    """One named verdict in a report."""
    name: str
    status: str
    detail: str = ""
    budget_exhausted: bool = False

    @property
    def passed(self):
        return self.status == PASS
