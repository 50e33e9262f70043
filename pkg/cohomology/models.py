from dataclasses import dataclass, field
from itertools import combinations

from algebra.exceptions import ParameterError

PLUS = "plus"
MINUS = "minus"

SIDE_CHOICES = [
    (PLUS, "Local cohomology along the positive block"),
    (MINUS, "Local cohomology along the negative block"),
]

SIDE_ALIASES = {"plus": PLUS, "+": PLUS, "minus": MINUS, "-": MINUS}

CECH = "cech"
CLOSED_FORM = "closed-form"


def parse_side(value):
    try:
        return SIDE_ALIASES[value]
    except KeyError:
        raise ParameterError(f"Invalid side {value!r}. Must be one of: plus, minus")


@dataclass(frozen=True)
class CechComplex:
    """The (extended) Cech complex of A along the variables in `inverting`.

    The term for a subset sigma of the inverting variables is the
    localization of A at their product. It is never built: a multidegree
    lies in it iff every negative exponent belongs to a variable of sigma.
    The extended complex puts sigma in degree |sigma| (A itself in degree
    0); the plain one drops A and puts sigma in degree |sigma| - 1.
    """
    spec: object
    side: str
    inverting: tuple
    extended: bool = True

    @property
    def offset(self):
        return 0 if self.extended else 1

    @property
    def lo(self):
        return 0

    @property
    def hi(self):
        return len(self.inverting) - self.offset

    @property
    def degrees(self):
        return range(self.lo, self.hi + 1)

    @property
    def is_degenerate(self):
        return not self.inverting

    def terms(self):
        """(degree, sigma) pairs, sigma listed in inverting order."""
        result = []
        for size in range(self.offset, len(self.inverting) + 1):
            for sigma in combinations(self.inverting, size):
                result.append((size - self.offset, sigma))
        return result

    def contains(self, sigma, multidegree):
        return all(e >= 0 or v in sigma for v, e in enumerate(multidegree))

    def __str__(self):
        names = [self.spec.weighting.names[v] for v in self.inverting]
        kind = "extended Cech" if self.extended else "Cech"
        return f"{kind} complex of {self.spec} inverting {', '.join(names) or 'nothing'}"


@dataclass(frozen=True)
class CohomologyTable:
    """Weightwise dimensions of local cohomology, keyed by (degree, weight).

    `complete[i]` is False when weight i had to be enumerated inside the
    exponent box `box` instead of over its full (finite) support.
    """
    side: str
    extended: bool
    lo: int
    hi: int
    entries: dict
    complete: dict
    source: str = CECH
    box: int = None
    multigraded: dict = field(default_factory=dict, compare=False)

    @property
    def weights(self):
        return range(self.lo, self.hi + 1)

    @property
    def is_complete(self):
        return all(self.complete.values())

    def dim(self, h, i):
        return self.entries.get((h, i), 0)

    def nonzero_weights(self):
        return sorted({i for (_, i), dimension in self.entries.items() if dimension})

    def nonzero_degrees(self):
        return sorted({h for (h, _), dimension in self.entries.items() if dimension})

    def rows(self):
        """(h, i, dim) for every nonzero entry, sorted."""
        return [(h, i, d) for (h, i), d in sorted(self.entries.items()) if d]


@dataclass(frozen=True)
class DualityReport:
    """Duality verdict with every (h, i, lhs, rhs) mismatch."""
    check: object
    n: int
    discrepancies: tuple = ()
