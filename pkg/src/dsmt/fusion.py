"""Combination rules: Dempster, DSm, Bayesian, plus conditioning and fusion tables."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import ConditioningError, FrameError, FullConflict, GranuleError, TotalContradiction
from .frame import Proposition
from .mass import (
    Granule, HyperPowerSet, PowerSet, NORM_TOL, _member_bits, _union_mask, belief, plausibility,
)

CONTRADICTION_TOL = 1e-12


@dataclass(frozen=True)
class ConflictReport:
    K: float
    conflict: float

    @property
    def weight_of_conflict(self) -> float:
        return math.log(1.0 / self.K) if self.K > 0 else math.inf


def _same_frame(m1, m2):
    if m1.frame != m2.frame:
        raise FrameError("granules are defined on different frames")


def dempster_combine(m1: Granule, m2: Granule):
    """Normalized orthogonal sum on the power set.

    Returns ``(granule, ConflictReport)``.  K is accumulated from the
    non-conflicting products directly, so small K values such as 1e-4 keep
    full relative precision.
    """
    _same_frame(m1, m2)
    for g in (m1, m2):
        if g.mode is not PowerSet:
            raise GranuleError("Dempster's rule needs power-set granules")
        if not g.normalized:
            raise GranuleError("Dempster's rule needs normalized granules")
    n = m1.frame.n
    acc = {}
    conflict_terms = []
    for a, va in m1.items():
        ba = _member_bits(a)
        for b, vb in m2.items():
            c = ba & _member_bits(b)
            if c:
                acc.setdefault(c, []).append(va * vb)
            else:
                conflict_terms.append(va * vb)
    K = math.fsum(v for terms in acc.values() for v in terms)
    conflict = math.fsum(conflict_terms)
    if K <= CONTRADICTION_TOL:
        raise TotalContradiction(conflict=conflict)
    masses = {Proposition(m1.frame, _union_mask(n, c)): math.fsum(terms) / K
              for c, terms in acc.items()}
    return Granule(m1.frame, masses, PowerSet, allow_unnormalized=True), ConflictReport(K, conflict)


def dsm_combine(m1: Granule, m2: Granule) -> Granule:
    """Conjunctive combination on D^Theta without renormalization."""
    _same_frame(m1, m2)
    acc = {}
    for a, va in m1.promote().items():
        for b, vb in m2.promote().items():
            acc.setdefault(a.mask & b.mask, []).append(va * vb)
    masses = {Proposition(m1.frame, c): math.fsum(t) for c, t in acc.items()}
    return Granule(m1.frame, masses, HyperPowerSet, allow_unnormalized=True)


def dsm_combine_n(granules: Sequence[Granule]) -> Granule:
    granules = list(granules)
    if not granules:
        raise GranuleError("need at least one granule")
    out = granules[0].promote()
    for g in granules[1:]:
        out = dsm_combine(out, g)
    return out


def normalize(g: Granule) -> Granule:
    total = g.total()
    if total <= 0:
        raise GranuleError("cannot normalize a granule with zero total mass")
    return Granule(g.frame, {p: v / total for p, v in g.items()}, g.mode, allow_unnormalized=True)


def bayes_fuse(dists, priors=None) -> np.ndarray:
    """Fuse M probability vectors on the singletons.

    With priors p the posterior is proportional to p^(1-M) * prod P_m;
    without priors the product alone is used.
    """
    P = np.atleast_2d(np.asarray(dists, dtype=float))
    if P.size == 0:
        raise GranuleError("need at least one distribution")
    if (P < 0).any() or np.any(np.abs(P.sum(axis=1) - 1.0) > NORM_TOL):
        raise GranuleError("each distribution must be non-negative and sum to 1")
    weights = P.prod(axis=0)
    if priors is not None:
        p = np.asarray(priors, dtype=float)
        if p.shape != weights.shape or (p <= 0).any():
            raise GranuleError("priors must be strictly positive, one per hypothesis")
        weights = weights * p ** (1 - P.shape[0])
    z = weights.sum()
    if z <= 0:
        raise FullConflict("sources are in full contradiction (normalizer is zero)")
    return weights / z


def _complement(b: Proposition) -> Proposition:
    n = b.frame.n
    return Proposition(b.frame, _union_mask(n, ((1 << n) - 1) & ~_member_bits(b)))


def condition_bel(g: Granule, b: Proposition) -> Callable[[Proposition], float]:
    """Bel(A given B) = (Bel(A or B^c) - Bel(B^c)) / (1 - Bel(B^c))."""
    if g.mode is not PowerSet:
        raise GranuleError("conditioning needs a power-set granule")
    bc = _complement(b)
    bel_bc = belief(g, bc)
    denom = g.total() - bel_bc
    if denom <= CONTRADICTION_TOL:
        raise ConditioningError("Bel(B^c) = 1, conditioning on B is impossible")

    def cond(a: Proposition) -> float:
        return (belief(g, a | bc) - bel_bc) / denom

    return cond


def condition_pl(g: Granule, b: Proposition) -> Callable[[Proposition], float]:
    """Pl(A given B) = Pl(A and B) / Pl(B)."""
    if g.mode is not PowerSet:
        raise GranuleError("conditioning needs a power-set granule")
    pl_b = plausibility(g, b)
    if pl_b <= CONTRADICTION_TOL:
        raise ConditioningError("Pl(B) = 0, conditioning on B is impossible")
    members_b = _member_bits(b)

    def cond(a: Proposition) -> float:
        n = a.frame.n
        meet = Proposition(a.frame, _union_mask(n, _member_bits(a) & members_b))
        return plausibility(g, meet) / pl_b

    return cond


@dataclass(frozen=True)
class FusionTable:
    """Cells m1(col) * m2(row) with the proposition each cell lands on."""

    row_focals: tuple  # focal elements of m2
    col_focals: tuple  # focal elements of m1
    row_masses: np.ndarray
    col_masses: np.ndarray
    cells: np.ndarray  # shape (rows, cols)
    results: tuple  # results[r][c] is a Proposition

    @property
    def shape(self):
        return self.cells.shape

    def cell(self, row: int, col: int):
        return float(self.cells[row, col]), self.results[row][col]

    def collapse(self, mode=HyperPowerSet) -> Granule:
        acc = {}
        for r, row in enumerate(self.results):
            for c, p in enumerate(row):
                acc.setdefault(p, []).append(float(self.cells[r, c]))
        frame = self.row_focals[0].frame
        return Granule(frame, {p: math.fsum(v) for p, v in acc.items()}, mode,
                       allow_unnormalized=True)


def fusion_table(m1: Granule, m2: Granule) -> FusionTable:
    """Rows follow m2's focal elements, columns m1's, in insertion order."""
    _same_frame(m1, m2)
    g1, g2 = m1.promote(), m2.promote()
    cols, cm = zip(*g1.items())
    rows, rm = zip(*g2.items())
    cm, rm = np.array(cm), np.array(rm)
    cells = np.outer(rm, cm)
    results = tuple(tuple(a & b for a in cols) for b in rows)
    return FusionTable(rows, cols, rm, cm, cells, results)
