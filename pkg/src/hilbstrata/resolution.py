"""Generic graded Betti numbers of the ideal of a stratum.

The saturated ideal of a generic point set with Hilbert function h has a
minimal resolution whose generator and relation counts (a_i) and (b_i) are
forced by h alone: the numerator q(t) of the ideal's Hilbert series over
the three-variable polynomial ring splits its positive coefficients into
generators and its negative ones into relations (genericity means no
degree carries both).
"""

from .diagrams import HilbertFunction
from .laurent import IntLaurentPoly


def ambient_hilbert(m: int) -> int:
    """Number of degree-m monomials in three variables: C(m+2, 2) for m >= 0."""
    if m < 0:
        return 0
    return (m + 2) * (m + 1) // 2


def series_numerator(hf: HilbertFunction) -> IntLaurentPoly:
    """Numerator q(t) of the ideal's Hilbert series.

    q(t) = (1-t)^3 * (ambient series - h(t)); since (1-t) * h(t) is the
    height sequence of the diagram and (1-t)^3 times the ambient series is
    1, this reduces to the finite computation q = 1 - (1-t)^2 * s(t).
    Always q(1) = 1 (the ideal has rank one).
    """
    one_minus_t_sq = IntLaurentPoly({0: 1, 1: -2, 2: 1})
    return IntLaurentPoly.one() - one_minus_t_sq * hf.diagram.poly()


class BettiTable:
    """Sparse generator counts ``a`` and relation counts ``b`` by degree."""

    __slots__ = ("a", "b")

    def __init__(self, a, b):
        self.a = {d: c for d, c in sorted(a.items()) if c}
        self.b = {d: c for d, c in sorted(b.items()) if c}

    def a_at(self, d) -> int:
        return self.a.get(d, 0)

    def b_at(self, d) -> int:
        return self.b.get(d, 0)

    def delta(self, d) -> int:
        """a_d - b_d."""
        return self.a.get(d, 0) - self.b.get(d, 0)

    def render(self) -> str:
        return f"a: {self.a}, b: {self.b}"

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __repr__(self):
        return f"BettiTable({self.render()})"


def generic_betti(hf: HilbertFunction) -> BettiTable:
    """Split the numerator coefficients: a_i = max(q_i, 0), b_i = max(-q_i, 0)."""
    q = series_numerator(hf)
    a = {}
    b = {}
    for d, c in q.coeffs.items():
        if c > 0:
            a[d] = c
        else:
            b[d] = -c
    return BettiTable(a, b)
