"""Turning interval evidence [eps_lo, eps_hi] on a proposition A into masses.

Two models are offered.  ``appriou_dst`` stays on the power set of
{A, A^c}.  ``interval_to_bpa`` also lets mass fall on the paradox A & A^c
and picks that mass by maximizing the generalized entropy subject to

    m(A) + m*/2 = eps_lo,   m(A^c) + m*/2 = 1 - eps_hi,   m(A | A^c) = eps_hi - eps_lo.

The stationarity condition of that entropy is the quartic

    64 e^2 x^4 - x^2 + 2(1 - eps_hi + eps_lo) x - 4 (1 - eps_hi) eps_lo = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .errors import DSMTError
from .frame import Frame
from .mass import Granule, HyperPowerSet

C4 = 64.0 * math.e ** 2  # about 472.957
CLAMP_TOL = 1e-12
ROOT_XTOL = 1e-13
SIDE_DECIMALS = 12


@dataclass(frozen=True)
class IntervalEvidence:
    eps_lo: float
    eps_hi: float

    def __post_init__(self):
        lo, hi = float(self.eps_lo), float(self.eps_hi)
        if not (0.0 <= lo <= hi <= 1.0):
            raise DSMTError(f"need 0 <= eps_lo <= eps_hi <= 1, got [{lo}, {hi}]")
        object.__setattr__(self, "eps_lo", lo)
        object.__setattr__(self, "eps_hi", hi)


@dataclass(frozen=True)
class BinaryGranule:
    """Masses on A, A^c, A | A^c and A & A^c."""

    a: float
    a_c: float
    union: float
    inter: float

    @property
    def total(self) -> float:
        return self.a + self.a_c + self.union + self.inter

    def as_tuple(self):
        return (self.a, self.a_c, self.union, self.inter)

    def interval(self):
        """Invert the model: recover (eps_lo, eps_hi)."""
        return self.a + self.inter / 2, 1.0 - self.a_c - self.inter / 2

    def to_granule(self, frame: Frame | None = None, a: int = 0, a_c: int = 1) -> Granule:
        """Lift onto D^Theta of ``frame`` using generators ``a`` and ``a_c``."""
        frame = frame or Frame(("A", "~A"))
        pa, pc = frame.singleton(a), frame.singleton(a_c)
        masses = {}
        for p, v in ((pa, self.a), (pc, self.a_c), (pa | pc, self.union), (pa & pc, self.inter)):
            if v > 0:
                masses[p] = masses.get(p, 0.0) + v
        return Granule(frame, masses, HyperPowerSet, allow_unnormalized=True)


def _coerce(ev, hi=None) -> IntervalEvidence:
    if isinstance(ev, IntervalEvidence):
        return ev
    if hi is not None:
        return IntervalEvidence(ev, hi)
    lo, hi = ev
    return IntervalEvidence(lo, hi)


def _sides(ev: IntervalEvidence):
    """(eps_lo, 1 - eps_hi, eps_hi - eps_lo) rounded to SIDE_DECIMALS.

    Rounding makes mirrored intervals such as [0.2, 0.2] and [0.8, 0.8]
    produce bit-identical sides (1 - 0.8 is not 0.2 in binary).
    """
    return (round(ev.eps_lo, SIDE_DECIMALS), round(1.0 - ev.eps_hi, SIDE_DECIMALS),
            round(ev.eps_hi - ev.eps_lo, SIDE_DECIMALS))


def appriou_dst(ev, hi=None) -> BinaryGranule:
    ev = _coerce(ev, hi)
    return BinaryGranule(ev.eps_lo, 1.0 - ev.eps_hi, ev.eps_hi - ev.eps_lo, 0.0)


def _xlogx(x):
    x = np.asarray(x, dtype=float)
    return np.where(x > 0, x * np.log(np.where(x > 0, x, 1.0)), 0.0)


def paradox_entropy(x, eps_lo: float, eps_hi: float):
    """H_g of the constrained granule as a function of the paradox mass x."""
    a, b = eps_lo, 1.0 - eps_hi
    d = eps_hi - eps_lo
    x = np.asarray(x, dtype=float)
    return -(_xlogx(a - x / 2) + _xlogx(b - x / 2) + _xlogx(np.full_like(x, d / 2)) + _xlogx(2 * x))


def _quartic(lin, const):
    return lambda x: C4 * x ** 4 - x ** 2 + lin * x - const


def _feasible_roots(lin, const, upper):
    q = _quartic(lin, const)
    found = []
    for r in np.roots([C4, 0.0, -1.0, lin, -const]):
        if abs(r.imag) < 1e-9 and -1e-12 <= r.real <= upper + 1e-12:
            found.append(min(max(r.real, 0.0), upper))
    # polish each candidate on a small bracket where the sign changes
    polished = []
    for r in found:
        lo, hi = max(r - 1e-6, 0.0), min(r + 1e-6, upper)
        if lo < hi and q(lo) * q(hi) < 0:
            r = brentq(q, lo, hi, xtol=ROOT_XTOL)
        polished.append(r)
    if upper > 0 and q(0.0) < 0 < q(upper):
        polished.append(brentq(q, 0.0, upper, xtol=ROOT_XTOL))
    return sorted(set(polished))


def solve_mstar(ev, hi=None) -> float:
    """Paradox mass maximizing H_g for interval evidence.

    The feasible range is [0, 2 min(eps_lo, 1 - eps_hi)].  On it H_g is
    strictly concave, so the quartic has one root there; it is bracketed and
    polished with Brent's method.  Should several candidates survive
    (numerical edge cases) the one with the largest H_g wins, and a dense
    grid is the last resort.
    """
    ev = _coerce(ev, hi)
    # the problem is symmetric in (a, b); a fixed order makes mirrored
    # intervals give bit-identical answers
    a, b = sorted(_sides(ev)[:2])
    upper = 2.0 * a
    if upper <= 0.0:
        return 0.0
    lo_, hi_ = a, 1.0 - b
    cands = _feasible_roots(2.0 * (a + b), 4.0 * a * b, upper)
    if not cands:
        grid = np.linspace(0.0, upper, 10001)
        return float(grid[np.argmax(paradox_entropy(grid, lo_, hi_))])
    h = paradox_entropy(np.array(cands), lo_, hi_)
    return float(cands[int(np.argmax(h))])


def _clamp(v):
    if v < 0:
        if v < -CLAMP_TOL:
            raise DSMTError(f"negative mass {v:.3g} produced by the interval model")
        return 0.0
    return v


def masses_from_mstar(ev: IntervalEvidence, mstar: float) -> BinaryGranule:
    a, b, d = _sides(ev)
    return BinaryGranule(a=_clamp(a - mstar / 2), a_c=_clamp(b - mstar / 2), union=_clamp(d),
                         inter=_clamp(mstar))


def interval_to_bpa(ev, hi=None) -> BinaryGranule:
    ev = _coerce(ev, hi)
    return masses_from_mstar(ev, solve_mstar(ev))


def solve_quartic_printed(lin: float, const: float, upper: float) -> float:
    """Root in [0, upper] of 64e^2 x^4 - x^2 + lin x - const.

    For quartics whose constant term does not come from the interval being
    converted, so no entropy argument applies.  Returns the smallest
    feasible root, or whichever bound of [0, upper] has the smaller residual
    when no root is feasible.
    """
    if upper <= 0:
        return 0.0
    cands = _feasible_roots(lin, const, upper)
    if cands:
        return cands[0]
    q = _quartic(lin, const)
    return 0.0 if abs(q(0.0)) <= abs(q(upper)) else upper
