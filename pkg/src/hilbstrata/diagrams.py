"""Castelnuovo diagrams and Hilbert functions of finite point sets in the plane.

A diagram is a sequence of column heights s(0), s(1), ... that climbs the
staircase 1, 2, ..., k and is non-increasing afterwards; its weight is the
total number of unit squares.  The running sums of a weight-n diagram form
the Hilbert function of a length-n subscheme of the plane: they increase to
n and stay there.  This module owns validation, conversion both ways,
enumeration of all diagrams of a given weight, and the coefficientwise
partial order on Hilbert functions.
"""

from .laurent import IntLaurentPoly


def is_castelnuovo(seq) -> bool:
    """True iff ``seq`` (implicitly zero-padded) is a valid height sequence.

    Validity: for some k >= 0 the first k entries are exactly 1, 2, ..., k
    and from position k-1 on the entries never increase.  Equivalently the
    sequence climbs by exactly one per step while it is climbing, and once
    it stops climbing it never recovers.
    """
    s = list(seq)
    while s and s[-1] == 0:
        s.pop()
    if not s:
        return True
    if any(x < 0 for x in s):
        return False
    if s[0] != 1:
        return False
    climbing = True
    for i in range(1, len(s)):
        if climbing and s[i] == s[i - 1] + 1:
            continue
        climbing = False
        if s[i] > s[i - 1]:
            return False
    return True


class CastelnuovoDiagram:
    """A valid height sequence, stored with trailing zeros trimmed."""

    __slots__ = ("s", "weight", "sigma")

    def __init__(self, seq):
        s = list(seq)
        while s and s[-1] == 0:
            s.pop()
        if not is_castelnuovo(s):
            raise ValueError(f"not a Castelnuovo sequence: {list(seq)}")
        self.s = tuple(s)
        self.weight = sum(s)
        # First index where the height fails to climb (final height is 0).
        sigma = 0
        while sigma < len(s) - 1 and s[sigma] < s[sigma + 1]:
            sigma += 1
        self.sigma = sigma

    def height(self, i) -> int:
        """Column height at ``i``; zero outside the diagram."""
        if 0 <= i < len(self.s):
            return self.s[i]
        return 0

    def __len__(self):
        return len(self.s)

    def poly(self) -> IntLaurentPoly:
        """The height sequence as a polynomial (degree i carries s(i))."""
        return IntLaurentPoly.from_list(self.s)

    def hilbert_function(self) -> "HilbertFunction":
        return HilbertFunction(self)

    def render(self) -> str:
        return ",".join(str(x) for x in self.s)

    def __eq__(self, other):
        if not isinstance(other, CastelnuovoDiagram):
            return NotImplemented
        return self.s == other.s

    def __hash__(self):
        return hash(self.s)

    def __repr__(self):
        return f"CastelnuovoDiagram({self.render() or 'empty'})"


class HilbertFunction:
    """Running sums of a diagram: 0 before degree 0, then climbing to the weight.

    ``transient`` lists the values at 0..L where L is the last diagram
    column; from L on the value stays at the degree ``n``.
    """

    __slots__ = ("diagram", "transient", "degree")

    def __init__(self, diagram: CastelnuovoDiagram):
        self.diagram = diagram
        acc = 0
        transient = []
        for x in diagram.s:
            acc += x
            transient.append(acc)
        self.transient = tuple(transient)
        self.degree = acc

    @classmethod
    def from_values(cls, values) -> "HilbertFunction":
        """Build from explicit values h(0), h(1), ...; the values may repeat
        the stable tail.  Raises ValueError when the differences are not a
        valid height sequence."""
        vals = list(values)
        diffs = []
        prev = 0
        for v in vals:
            diffs.append(v - prev)
            prev = v
        while diffs and diffs[-1] == 0:
            diffs.pop()
        if not is_castelnuovo(diffs):
            raise ValueError(f"values {vals} are not the sums of a Castelnuovo sequence")
        return cls(CastelnuovoDiagram(diffs))

    def value(self, m) -> int:
        if m < 0:
            return 0
        if m >= len(self.transient):
            return self.degree
        return self.transient[m]

    def render(self) -> str:
        if not self.transient:
            return "0,.."
        return ",".join(str(v) for v in self.transient) + ",.."

    def __eq__(self, other):
        if not isinstance(other, HilbertFunction):
            return NotImplemented
        return self.transient == other.transient and self.degree == other.degree

    def __hash__(self):
        return hash((self.transient, self.degree))

    def __repr__(self):
        return f"HilbertFunction({self.render()})"


def convert(x):
    """Swap a diagram for its Hilbert function or back (round-trip identity)."""
    if isinstance(x, CastelnuovoDiagram):
        return x.hilbert_function()
    if isinstance(x, HilbertFunction):
        return x.diagram
    raise TypeError(f"cannot convert {type(x).__name__}")


def diagram_stats(d: CastelnuovoDiagram):
    """(weight, sigma) of a diagram."""
    return d.weight, d.sigma


def _tails(remaining, max_part):
    """Non-increasing sequences of parts in [1, max_part] summing to ``remaining``."""
    if remaining == 0:
        yield []
        return
    for first in range(min(remaining, max_part), 0, -1):
        for rest in _tails(remaining - first, first):
            yield [first] + rest


def enumerate_diagrams(n: int):
    """All weight-n diagrams, each once, in descending lexicographic order.

    Construction: every diagram splits uniquely into its longest staircase
    prefix 1, 2, ..., k followed by a non-increasing tail with parts <= k,
    so it suffices to range over k and partition the remaining weight.
    """
    if n < 0:
        raise ValueError("weight must be non-negative")
    if n == 0:
        return [CastelnuovoDiagram(())]
    out = []
    k = 1
    while k * (k + 1) // 2 <= n:
        prefix = list(range(1, k + 1))
        rest = n - k * (k + 1) // 2
        for tail in _tails(rest, k):
            out.append(CastelnuovoDiagram(prefix + tail))
        k += 1
    out.sort(key=lambda d: d.s, reverse=True)
    return out


def hf_leq(a: HilbertFunction, b: HilbertFunction) -> bool:
    """Coefficientwise comparison of two Hilbert functions of equal degree."""
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} != {b.degree}")
    top = max(len(a.transient), len(b.transient))
    return all(a.value(m) <= b.value(m) for m in range(top))


def run_of_ones(phi: HilbertFunction, psi: HilbertFunction):
    """The interval [u, v] with u >= 1 on which psi - phi is identically 1.

    Returns None when the difference is anything else (zero, negative
    somewhere, higher than 1, or not contiguous).  Such a run is exactly
    what a single square jumping left does to the running sums.  Raises on
    degree mismatch.
    """
    if phi.degree != psi.degree:
        raise ValueError(f"degree mismatch: {phi.degree} != {psi.degree}")
    top = max(len(phi.transient), len(psi.transient))
    nonzero = []
    for m in range(top):
        d = psi.value(m) - phi.value(m)
        if d == 0:
            continue
        if d != 1:
            return None
        nonzero.append(m)
    if not nonzero:
        return None
    u, v = nonzero[0], nonzero[-1]
    if len(nonzero) != v - u + 1 or u < 1:
        return None
    return u, v


def _parse_int_list(text: str, what: str):
    """Comma-separated integers with a character position in error messages."""
    values = []
    pos = 0
    for token in text.split(","):
        stripped = token.strip()
        if not stripped or not (stripped.isdigit() or (stripped[0] == "-" and stripped[1:].isdigit())):
            raise ValueError(f"{what}: expected an integer at position {pos}, got {token!r}")
        values.append(int(stripped))
        pos += len(token) + 1
    return values


def parse_diagram(text: str) -> CastelnuovoDiagram:
    """Parse the canonical comma-separated form, e.g. ``1,2,3,4,4,1,1,1``."""
    stripped = text.strip()
    if stripped == "":
        return CastelnuovoDiagram(())
    values = _parse_int_list(stripped, "diagram")
    if not is_castelnuovo(values):
        raise ValueError(f"diagram {stripped!r} violates the staircase shape")
    return CastelnuovoDiagram(values)


def parse_hilbert_function(text: str) -> HilbertFunction:
    """Parse the canonical form ``1,3,6,10,14,15,16,17,..`` (trailing ``..``).

    Redundant repetitions of the stable value are accepted.
    """
    stripped = text.strip()
    if not stripped.endswith(".."):
        raise ValueError(
            f"Hilbert function must end with '..' (position {len(stripped)})"
        )
    body = stripped[:-2].rstrip(",")
    if body == "" or body == "0":
        return HilbertFunction(CastelnuovoDiagram(()))
    values = _parse_int_list(body, "Hilbert function")
    return HilbertFunction.from_values(values)
