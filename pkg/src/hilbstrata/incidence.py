"""Cover detection and incidence resolution for adjacent strata.

A pair of Hilbert functions (phi, psi) of one degree is a cover ("length
zero") when phi < psi with nothing strictly between; equivalently psi's
diagram arises from phi's by a minimal leftward jump of a single square,
adding one to column u and removing one from column v+1.  For such pairs
the closure of the bigger stratum contains the smaller one exactly when
both the dimension comparison and the tangent comparison hold; this module
also evaluates the equivalent criterion on the Betti numbers of phi, the
type-zero shape of the diagram, and the truncated intersection products
that certify solvability of the underlying equation systems.
"""

from dataclasses import dataclass

from .diagrams import CastelnuovoDiagram, HilbertFunction, run_of_ones
from .resolution import BettiTable, generic_betti
from .strata import stratum_dim, tangent_leq


@dataclass(frozen=True)
class CoverPair:
    """A cover (phi, psi) together with its move columns 0 < u <= v."""

    phi: HilbertFunction
    psi: HilbertFunction
    u: int
    v: int

    @property
    def degree(self) -> int:
        return self.phi.degree


@dataclass(frozen=True)
class IncidenceVerdict:
    """Resolution of one cover, with all diagnostics that fed the answer."""

    incident: bool
    dim_ok: bool
    tangent_ok: bool
    betti_ok: bool
    type_zero: bool
    dims: tuple


def _addable_columns(s):
    """Columns u >= 1 where one extra square keeps the sequence valid.

    Either the raised column still fits under its left neighbour, or the
    column currently matches the staircase value of its neighbour and the
    extra square extends the staircase by one step.
    """
    out = []
    for u in range(1, len(s)):
        left = s[u - 1]
        if s[u] + 1 <= left or (left == u and s[u] == u):
            out.append(u)
    return out


def _removable_columns(s):
    """Columns w where removing the top square keeps the sequence valid:
    the lowered column must not dip below its right neighbour."""
    n = len(s)
    return [w for w in range(1, n) if s[w] - 1 >= (s[w + 1] if w + 1 < n else 0)]


def move_params(diagram: CastelnuovoDiagram):
    """All (u, v) with a valid single-square move from column v+1 to column u.

    Independent validity of the addition and the removal suffices for the
    combined move: the two edits touch disjoint junctions except when
    v+1 = u+1, where the raised column only grows away from the lowered
    one.  Sorted by (u, v).
    """
    s = diagram.s
    add = _addable_columns(s)
    rem = _removable_columns(s)
    return sorted((u, w - 1) for u in add for w in rem if u < w)


def apply_move(diagram: CastelnuovoDiagram, u: int, v: int) -> CastelnuovoDiagram:
    """Diagram after the single-square move (u, v); validates the result."""
    s = list(diagram.s)
    w = v + 1
    if not (0 < u <= v and w < len(s) and s[w] > 0):
        raise ValueError(f"move ({u}, {v}) out of range for {diagram.render()}")
    s[u] += 1
    s[w] -= 1
    return CastelnuovoDiagram(s)


def square_moves(hf: HilbertFunction):
    """All single-square-move images of ``hf`` as (psi, u, v), sorted by (u, v)."""
    out = []
    for u, v in move_params(hf.diagram):
        out.append((apply_move(hf.diagram, u, v).hilbert_function(), u, v))
    return out


def _is_minimal_move(params, u, v) -> bool:
    """A move is minimal iff no other valid move nests inside [u, v].

    Any function strictly between phi and its move image is reachable from
    phi by a first single-square jump staying below the image, and staying
    below means precisely that the jump's interval nests inside [u, v].
    """
    return not any((up, vp) != (u, v) and up >= u and vp <= v for up, vp in params)


def cover_moves(hf: HilbertFunction):
    """The covers above ``hf`` as CoverPair records, sorted by (u, v)."""
    params = move_params(hf.diagram)
    out = []
    for u, v in params:
        if _is_minimal_move(params, u, v):
            psi = apply_move(hf.diagram, u, v).hilbert_function()
            out.append(CoverPair(hf, psi, u, v))
    return out


def is_length_zero(phi: HilbertFunction, psi: HilbertFunction):
    """The CoverPair for (phi, psi) when it is a cover, else None.

    Raises on degree mismatch.  The pair must differ by a run of ones
    (a single-square move) and the move must be minimal.
    """
    run = run_of_ones(phi, psi)
    if run is None:
        return None
    u, v = run
    params = move_params(phi.diagram)
    if (u, v) not in params or not _is_minimal_move(params, u, v):
        return None
    return CoverPair(phi, psi, u, v)


def find_intermediate(phi: HilbertFunction, psi: HilbertFunction):
    """Some Hilbert function strictly between phi and psi, or None.

    Only meaningful for single-square-move pairs; for other inputs the
    answer is None (the caller already knows the difference is not a run).
    """
    run = run_of_ones(phi, psi)
    if run is None:
        return None
    u, v = run
    for up, vp in move_params(phi.diagram):
        if (up, vp) != (u, v) and up >= u and vp <= v:
            return apply_move(phi.diagram, up, vp).hilbert_function()
    return None


def cover_conditions(pair: CoverPair, betti_phi=None, betti_psi=None, dims=None):
    """(dimension comparison, tangent comparison) for a cover.

    The first asks that the smaller stratum have strictly smaller
    dimension; the second that its tangent function dominate coefficientwise.
    """
    if dims is None:
        dims = (stratum_dim(pair.phi), stratum_dim(pair.psi))
    dim_ok = dims[0] < dims[1]
    tangent_ok = tangent_leq(pair.psi, pair.phi, betti_phi=betti_phi, betti_psi=betti_psi)
    return dim_ok, tangent_ok


def betti_criterion(pair: CoverPair, betti_phi: BettiTable | None = None) -> bool:
    """Criterion on the Betti numbers of phi equivalent to the two
    comparisons above: a_u and b_{v+3} must be nonzero, with extra
    equalities tied to the width v - u of the move."""
    t = betti_phi if betti_phi is not None else generic_betti(pair.phi)
    u, v = pair.u, pair.v
    a_u = t.a_at(u)
    b_v3 = t.b_at(v + 3)
    if a_u == 0 or b_v3 == 0:
        return False
    if v == u:
        return True
    b_u1 = t.b_at(u + 1)
    a_v2 = t.a_at(v + 2)
    if v == u + 1:
        return (b_u1 <= a_u <= b_u1 + 1 and b_v3 == a_v2) or (
            a_u == b_u1 + 1 and b_v3 == a_v2 - 1
        )
    return a_u == b_u1 + 1 and b_v3 == a_v2


def is_type_zero(pair: CoverPair) -> bool:
    """Does phi's diagram match the two-column-jump shape that the older
    incidence criterion could not decide?

    The square jumps from column u+2 to column u across a plateau of
    exactly three columns at height h.  To the left sits a wall at least
    two columns wide and strictly higher than the plateau; to the right
    the diagram drops to exactly h-1 and stays there until it ends (for
    h >= 2 that lower level is at least two columns wide).  On such
    diagrams the generator count at u equals the relation count at u+1 and
    the counts at v+2 and v+3 are both one, so the shape always passes the
    Betti criterion.
    """
    u, v = pair.u, pair.v
    if v != u + 1:
        return False
    ht = pair.phi.diagram.height
    h = ht(u)
    if ht(u - 1) <= h:
        return False
    if ht(u - 2) != ht(u - 1):
        return False
    if ht(u + 1) != h or ht(u + 2) != h:
        return False
    last = len(pair.phi.diagram.s) - 1
    if any(ht(j) != h - 1 for j in range(v + 2, last + 1)):
        return False
    if h >= 2 and ht(v + 3) != h - 1:
        return False
    return True


def resolve_incidence(pair: CoverPair, betti_phi=None, betti_psi=None, dims=None) -> IncidenceVerdict:
    """Full verdict for one cover: incident iff both comparisons hold."""
    if betti_phi is None:
        betti_phi = generic_betti(pair.phi)
    if betti_psi is None:
        betti_psi = generic_betti(pair.psi)
    if dims is None:
        dims = (stratum_dim(pair.phi), stratum_dim(pair.psi))
    dim_ok, tangent_ok = cover_conditions(pair, betti_phi, betti_psi, dims)
    return IncidenceVerdict(
        incident=dim_ok and tangent_ok,
        dim_ok=dim_ok,
        tangent_ok=tangent_ok,
        betti_ok=betti_criterion(pair, betti_phi),
        type_zero=is_type_zero(pair),
        dims=dims,
    )


def verdict_line(pair: CoverPair, verdict: IncidenceVerdict) -> str:
    """One-line rendering used by the command-line front end."""
    ok = lambda flag: "OK" if flag else "FAIL"
    return (
        f"u={pair.u} v={pair.v} "
        f"dim: {verdict.dims[0]}->{verdict.dims[1]} "
        f"tangent:{ok(verdict.tangent_ok)} "
        f"C:{ok(verdict.betti_ok)} "
        f"type0:{'Y' if verdict.type_zero else 'N'} "
        f"=> {'INCIDENT' if verdict.incident else 'NOT INCIDENT'}"
    )


@dataclass(frozen=True)
class TruncatedChowElement:
    """Element of Z[r,s,t] with r, s, t nilpotent of orders given by ``caps``."""

    caps: tuple
    coeffs: dict

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, exponents) -> int:
        return self.coeffs.get(tuple(exponents), 0)


def chow_product(caps, factors) -> TruncatedChowElement:
    """Product of powers of 0/1-coefficient linear forms in r, s, t.

    ``caps`` bounds the exponents strictly (a monomial reaching a cap is
    discarded); ``factors`` is a list of ((c_r, c_s, c_t), multiplicity)
    entries.  The empty product is the unit.
    """
    alpha, beta, gamma = caps
    if alpha < 1 or beta < 1 or gamma < 1:
        raise ValueError("caps must all be at least 1")
    acc = {(0, 0, 0): 1}
    for form, mult in factors:
        cr, cs, ct = form
        for _ in range(mult):
            nxt = {}
            for (i, j, k), c in acc.items():
                if cr and i + 1 < alpha:
                    key = (i + 1, j, k)
                    nxt[key] = nxt.get(key, 0) + c * cr
                if cs and j + 1 < beta:
                    key = (i, j + 1, k)
                    nxt[key] = nxt.get(key, 0) + c * cs
                if ct and k + 1 < gamma:
                    key = (i, j, k + 1)
                    nxt[key] = nxt.get(key, 0) + c * ct
            acc = {key: c for key, c in nxt.items() if c}
    return TruncatedChowElement(tuple(caps), acc)


def verify_intersections(pair: CoverPair, betti_phi: BettiTable | None = None) -> bool:
    """Non-vanishing of the intersection product certifying a wider move.

    Only defined for covers satisfying the Betti criterion with v >= u+1.
    The ambient ring caps the three classes at a_u, 3 and b_{v+3}; for
    v = u+1 the product of (s+t)^{a_{v+2}} and (r+s)^{b_{u+1}} must
    survive, and for v >= u+2 the triple product with one extra factor
    r+s+t must survive and carry the monomial r^{b_{u+1}} s^2 t^{a_{v+2}-1}
    with positive coefficient.
    """
    t = betti_phi if betti_phi is not None else generic_betti(pair.phi)
    u, v = pair.u, pair.v
    if v < u + 1:
        raise ValueError("intersection check applies to moves wider than one column")
    if not betti_criterion(pair, t):
        raise ValueError("intersection check requires the Betti criterion")
    caps = (t.a_at(u), 3, t.b_at(v + 3))
    a_v2 = t.a_at(v + 2)
    b_u1 = t.b_at(u + 1)
    if v == u + 1:
        product = chow_product(caps, [((0, 1, 1), a_v2), ((1, 1, 0), b_u1)])
        return not product.is_zero()
    product = chow_product(caps, [((1, 1, 1), 1), ((0, 1, 1), a_v2), ((1, 1, 0), b_u1)])
    return not product.is_zero() and product.coeff((b_u1, 2, a_v2 - 1)) > 0
