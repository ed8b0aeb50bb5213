"""Entropies of granules and fusion tables, in nats."""

from __future__ import annotations

import numpy as np
from scipy.special import entr

from .errors import GranuleError
from .frame import Frame, strength
from .fusion import FusionTable
from .mass import Granule


def _h(values) -> float:
    # entr(x) = -x ln x with entr(0) = 0
    return float(np.sum(entr(np.asarray(values, dtype=float))))


def shannon(g: Granule) -> float:
    return _h([v for _, v in g.items()])


def joint_entropy(t: FusionTable) -> float:
    return _h(t.cells.ravel())


def conditional_entropy(t: FusionTable, given: str = "m2") -> float:
    """H(M1|M2) with ``given="m2"`` (row conditioning) or H(M2|M1) with ``given="m1"``."""
    if given not in ("m1", "m2"):
        raise ValueError("given must be 'm1' or 'm2'")
    cells = t.cells if given == "m2" else t.cells.T
    total = 0.0
    for row in cells:
        w = row.sum()
        if w > 0:
            total += w * _h(row / w)
    return total


def entropy_of_combined(g: Granule) -> float:
    """Shannon entropy of an already collapsed (combined) granule."""
    return shannon(g)


def generalized_entropy(g: Granule) -> float:
    """H_g = -sum (m(A)/s(A)) ln(m(A)/s(A)), s being the intrinsic strength."""
    terms = []
    for p, v in g.items():
        if p.mask == 0:
            raise GranuleError("the empty proposition cannot be focal")
        terms.append(v / float(strength(p)))
    return _h(terms)


def whitening_grid(steps: int = 50):
    """Grid search of the H_g maximizer over two-hypothesis granules.

    Scans (m(t1), m(t2), m(t1|t2), m(t1&t2)) on the simplex with the given
    resolution and returns ``(best_entropy, masses)``.  This is a scan, not
    a solver.
    """
    frame = Frame(("t1", "t2"))
    keys = ("t1", "t2", "t1 | t2", "t1 & t2")
    s = np.array([float(strength(frame.prop(k))) for k in keys])
    grid = np.arange(steps + 1)
    a, b, c = np.meshgrid(grid, grid, grid, indexing="ij")
    d = steps - a - b - c
    ok = d >= 0
    m = np.stack([a[ok], b[ok], c[ok], d[ok]], axis=1) / steps
    h = entr(m / s).sum(axis=1)
    best = int(np.argmax(h))
    return float(h[best]), dict(zip(keys, m[best].tolist()))
