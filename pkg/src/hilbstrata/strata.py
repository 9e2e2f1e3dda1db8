"""Numerical invariants of a stratum: dimension and tangent-twist function.

The stratum of a Hilbert function h is smooth and connected; its dimension
is 1 + n + c where c is the constant coefficient of
(t^-1 - t^-2) * s(t^-1) * s(t) for the height sequence s.  The tangent
function counts global sections of the ideal sheaf twisted by the tangent
bundle of the plane; only windows of it are ever needed, and they are
computed exactly degree by degree.
"""

from dataclasses import dataclass

from .diagrams import HilbertFunction, run_of_ones
from .laurent import IntLaurentPoly
from .resolution import BettiTable, ambient_hilbert, generic_betti


def stratum_dim(hf: HilbertFunction) -> int:
    """Dimension of the stratum of ``hf`` (degree must be at least 1)."""
    if hf.degree < 1:
        raise ValueError("stratum dimension needs degree >= 1")
    s = hf.diagram.poly()
    shift = IntLaurentPoly({-1: 1, -2: -1})
    c = (shift * s.reverse() * s).coeff(0)
    return 1 + hf.degree + c


def tangent_bundle_sections(m: int) -> int:
    """Global sections of the plane's tangent bundle twisted by ``m``.

    The bundle sits between three copies of the degree-2 twist and one
    degree-3 twist of the structure sheaf; the only higher-cohomology
    correction is a single unit at twist -3.  At m = 0 this gives 8, the
    dimension of the symmetry algebra of the plane.
    """
    return 3 * ambient_hilbert(m + 2) - ambient_hilbert(m + 3) + (1 if m == -3 else 0)


def tangent_function(hf: HilbertFunction, lo: int, hi: int, betti: BettiTable | None = None):
    """Exact tangent-function values on the degree window [lo, hi].

    Value at m:  sections(m) - 3*h(m+1) + h(m) + b(m+3), with b the
    relation counts of the generic Betti table of ``hf``.
    """
    if lo > hi:
        raise ValueError("empty window")
    if betti is None:
        betti = generic_betti(hf)
    return {
        m: tangent_bundle_sections(m) - 3 * hf.value(m + 1) + hf.value(m) + betti.b_at(m + 3)
        for m in range(lo, hi + 1)
    }


def required_window(u: int, v: int):
    """Window guaranteed to decide the tangent comparison for a move (u, v).

    The difference of the two tangent functions is supported inside
    [u-3, v+1]; the margin up to v+4 also covers the shifted relation
    counts and costs nothing.
    """
    return u - 3, v + 4


def tangent_leq(
    psi: HilbertFunction,
    phi: HilbertFunction,
    window=None,
    betti_phi: BettiTable | None = None,
    betti_psi: BettiTable | None = None,
) -> bool:
    """True iff the tangent function of ``psi`` is <= that of ``phi`` everywhere.

    The two functions agree outside an explicit window determined by the
    single-square move taking ``phi`` to ``psi``; comparison on that window
    therefore decides all degrees.  Identical inputs compare as True.
    ``window`` may widen but not shrink the required range.
    """
    if psi == phi:
        return True
    run = run_of_ones(phi, psi)
    if run is None:
        raise ValueError("tangent comparison needs a single-square-move pair")
    lo, hi = required_window(*run)
    if window is not None:
        wlo, whi = window
        if wlo > lo or whi < hi:
            raise ValueError(f"window {window} does not cover required [{lo}, {hi}]")
        lo, hi = wlo, whi
    t_phi = tangent_function(phi, lo, hi, betti_phi)
    t_psi = tangent_function(psi, lo, hi, betti_psi)
    return all(t_psi[m] <= t_phi[m] for m in range(lo, hi + 1))


@dataclass(frozen=True)
class StratumInfo:
    """Dimension plus a tangent-function window for one stratum."""

    dim: int
    window: tuple
    tangent: dict


def stratum_info(hf: HilbertFunction, lo: int, hi: int) -> StratumInfo:
    return StratumInfo(dim=stratum_dim(hf), window=(lo, hi), tangent=tangent_function(hf, lo, hi))
