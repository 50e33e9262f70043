from dataclasses import dataclass

from cohomology.models import PLUS


def module_name(twist):
    """A(-t) for a generator of weight t."""
    return f"A({-twist})" if twist else "A"


@dataclass(frozen=True)
class WindowSpec:
    """Generators of the window at cutoff w, as generator weights."""
    w: int
    side: str
    twists: tuple
    note: str = ""

    @property
    def generators(self):
        return tuple(module_name(twist) for twist in self.twists)

    def __str__(self):
        sign = "+" if self.side == PLUS else "-"
        return f"window {sign} at w={self.w}: {{{', '.join(self.generators)}}}"


@dataclass(frozen=True)
class MembershipReport:
    """Is A(-i) in the window at cutoff w?

    Vanishing: RGamma+(A(-i)) lives in weights < w. Generation: i >= w.
    """
    i: int
    w: int
    top_weight: int
    vanishing: bool
    generation: bool
    check: object

    @property
    def member(self):
        return self.vanishing and self.generation


@dataclass(frozen=True)
class FunctorImage:
    """Presentation of the image of A(i) under the comparison functor."""
    spec: object
    twist: int
    complex: object
    w: int = 0
    minimized: bool = False
    note: str = ""

    @property
    def is_single_module(self):
        return len(self.complex.modules) == 1 and self.complex.modules[0].rank == 1
