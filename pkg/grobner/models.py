import math
from dataclasses import dataclass

# Krull dimension of the unit ideal's quotient (the empty variety).
EMPTY_DIMENSION = -math.inf


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis under grevlex, elements monic and sorted by leading term."""
    base: object
    polynomials: tuple
    generators: tuple = ()
    order: str = "grevlex"
    steps: int = 0

    def __len__(self):
        return len(self.polynomials)

    def __iter__(self):
        return iter(self.polynomials)

    @property
    def is_unit_ideal(self):
        return any(polynomial.is_unit for polynomial in self.polynomials)

    @property
    def leading_monomials(self):
        return tuple(polynomial.leading_monomial for polynomial in self.polynomials)
