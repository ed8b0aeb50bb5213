"""Mass assignments (information granules) and the measures derived from them."""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from typing import Iterable, Mapping

import numpy as np

from .errors import FrameError, GranuleError
from .frame import Frame, Proposition, parse_expr, to_canonical, _singleton_masks

NORM_TOL = 1e-9
MOBIUS_CHOP = 1e-12


class DomainMode(enum.Enum):
    POWER_SET = "powerset"
    HYPER_POWER_SET = "hyper"

    @classmethod
    def coerce(cls, value) -> "DomainMode":
        if isinstance(value, cls):
            return value
        aliases = {"dst": cls.POWER_SET, "powerset": cls.POWER_SET, "power_set": cls.POWER_SET,
                   "dsm": cls.HYPER_POWER_SET, "hyper": cls.HYPER_POWER_SET,
                   "hyperpowerset": cls.HYPER_POWER_SET}
        try:
            return aliases[str(value).lower()]
        except KeyError:
            raise GranuleError(f"unknown domain mode {value!r}") from None


PowerSet = DomainMode.POWER_SET
HyperPowerSet = DomainMode.HYPER_POWER_SET


def _member_bits(p: Proposition) -> int:
    """Bitmask of hypotheses whose exclusive atom lies in ``p``.

    Under the exclusive (power-set) reading every intersection of distinct
    hypotheses is empty, so this is the subset of the frame that ``p``
    denotes there.
    """
    bits = 0
    for i in range(p.frame.n):
        if p.mask >> ((1 << i) - 1) & 1:
            bits |= 1 << i
    return bits


def _union_mask(n: int, bits: int) -> int:
    singles = _singleton_masks(n)
    mask = 0
    for i in range(n):
        if bits >> i & 1:
            mask |= singles[i]
    return mask


def is_pure_union(p: Proposition) -> bool:
    return _union_mask(p.frame.n, _member_bits(p)) == p.mask


class Granule:
    """A basic probability assignment over 2^Theta or D^Theta.

    Only focal elements are stored, in insertion order.  Instances are
    treated as immutable.
    """

    __slots__ = ("frame", "_masses", "mode", "normalized")

    def __init__(self, frame: Frame, masses: Mapping[Proposition, float], mode=HyperPowerSet,
                 allow_unnormalized: bool = False):
        mode = DomainMode.coerce(mode)
        clean = {}
        for p, v in masses.items():
            if not isinstance(p, Proposition):
                raise GranuleError(f"granule keys must be propositions, got {p!r}")
            if p.frame != frame:
                raise FrameError("proposition belongs to a different frame")
            v = float(v)
            if not math.isfinite(v) or v < 0:
                raise GranuleError(f"mass of {p} must be a finite non-negative number, got {v}")
            if p.mask == 0:
                if v > 0:
                    raise GranuleError("the empty proposition cannot carry mass")
                continue
            if mode is PowerSet and not is_pure_union(p):
                raise GranuleError(f"{p} is not a power-set element (intersections are empty there)")
            if v > 0:
                clean[p] = clean.get(p, 0.0) + v
        total = math.fsum(clean.values())
        normalized = abs(total - 1.0) <= NORM_TOL
        if not normalized and not allow_unnormalized:
            raise GranuleError(f"masses sum to {total!r}, expected 1 (pass allow_unnormalized)")
        self.frame = frame
        self._masses = clean
        self.mode = mode
        self.normalized = normalized

    def mass(self, p: Proposition) -> float:
        return self._masses.get(p, 0.0)

    def __getitem__(self, p):
        if isinstance(p, str):
            p = self.frame.prop(p)
        return self.mass(p)

    def items(self):
        return list(self._masses.items())

    def __iter__(self):
        return iter(self._masses)

    def __len__(self):
        return len(self._masses)

    def total(self) -> float:
        return math.fsum(self._masses.values())

    def focal_elements(self) -> list:
        return list(self._masses)

    def promote(self) -> "Granule":
        """The same assignment viewed on D^Theta (masks are unchanged)."""
        if self.mode is HyperPowerSet:
            return self
        return Granule(self.frame, self._masses, HyperPowerSet, allow_unnormalized=True)

    def as_dict(self) -> dict:
        return {str(p): v for p, v in self._masses.items()}

    def __eq__(self, other):
        return (isinstance(other, Granule) and self.frame == other.frame
                and self.mode == other.mode and self._masses == other._masses)

    def __repr__(self):
        body = ", ".join(f"{p}: {v:.6g}" for p, v in self._masses.items())
        return f"Granule({self.mode.value}; {body})"


def _to_prop(frame, key):
    if isinstance(key, Proposition):
        return key
    if isinstance(key, str):
        return to_canonical(parse_expr(key, frame), frame)
    return to_canonical(key, frame)


def make_granule(frame: Frame, entries, domain_mode=HyperPowerSet,
                 allow_unnormalized: bool = False) -> Granule:
    """Build and validate a granule.

    ``entries`` is a mapping or a sequence of ``(key, mass)`` pairs where a
    key is an expression string, a parsed expression or a Proposition.
    Keys that canonicalize to the same element are summed.
    """
    pairs = entries.items() if isinstance(entries, Mapping) else entries
    masses = {}
    for key, value in pairs:
        p = _to_prop(frame, key)
        try:
            v = float(value)
        except (TypeError, ValueError):
            raise GranuleError(f"mass for {key!r} is not a number") from None
        if v < 0:
            raise GranuleError(f"negative mass {v} for {key!r}")
        if p.mask == 0 and v != 0:
            raise GranuleError("the empty proposition cannot carry mass")
        masses[p] = masses.get(p, 0.0) + v
    return Granule(frame, masses, domain_mode, allow_unnormalized)


def vacuous(frame: Frame, domain_mode=HyperPowerSet) -> Granule:
    if frame.n == 0:
        raise FrameError("the vacuous granule needs at least one hypothesis")
    return Granule(frame, {frame.total: 1.0}, domain_mode)


def _check_frame(g, a):
    if a.frame != g.frame:
        raise FrameError("proposition and granule use different frames")


def belief(g: Granule, a: Proposition) -> float:
    _check_frame(g, a)
    if g.mode is PowerSet:
        bits = _member_bits(a)
        return math.fsum(v for b, v in g.items() if _member_bits(b) & ~bits == 0)
    return math.fsum(v for b, v in g.items() if b.mask & ~a.mask == 0)


def plausibility(g: Granule, a: Proposition) -> float:
    _check_frame(g, a)
    if g.mode is PowerSet:
        bits = _member_bits(a)
        return math.fsum(v for b, v in g.items() if _member_bits(b) & bits)
    return math.fsum(v for b, v in g.items() if b.mask & a.mask)


def power_set(frame: Frame) -> list:
    """All 2^n subsets of the frame as pure-union propositions (index = member bits)."""
    return [Proposition(frame, _union_mask(frame.n, bits)) for bits in range(2 ** frame.n)]


def belief_table(g: Granule) -> dict:
    """Bel over every subset of the frame (power-set reading)."""
    if g.mode is not PowerSet:
        raise GranuleError("belief_table needs a power-set granule")
    return {p: belief(g, p) for p in power_set(g.frame)}


def mass_from_belief(frame: Frame, bel_values: Mapping) -> Granule:
    """Moebius inversion m(A) = sum over B in A of (-1)^|A-B| Bel(B)."""
    n = frame.n
    bel = np.full(2 ** n, np.nan)
    for key, v in bel_values.items():
        p = _to_prop(frame, key)
        if not is_pure_union(p):
            raise GranuleError(f"{p} is not a subset of the frame")
        bel[_member_bits(p)] = float(v)
    missing = np.flatnonzero(np.isnan(bel))
    if missing.size:
        raise GranuleError(f"belief missing for {missing.size} subset(s)")
    if abs(bel[0]) > NORM_TOL or abs(bel[-1] - 1.0) > NORM_TOL:
        raise GranuleError("need Bel(empty) = 0 and Bel(frame) = 1")
    m = bel.copy()
    # fast Moebius transform over the subset lattice
    idx = np.arange(2 ** n)
    for i in range(n):
        has = (idx >> i) & 1 == 1
        m[has] -= m[idx[has] ^ (1 << i)]
    if m.min() < -NORM_TOL:
        raise GranuleError(f"not a belief function: Moebius mass {m.min():.3g} < 0")
    m[0] = 0.0
    # inclusion-exclusion leaves round-off residue on subsets that carry no mass
    m = np.where(m < MOBIUS_CHOP, 0.0, m)
    masses = {Proposition(frame, _union_mask(n, int(b))): float(m[b])
              for b in range(1, 2 ** n) if m[b] > 0}
    return Granule(frame, masses, PowerSet, allow_unnormalized=True)


def pignistic_classical(g: Granule) -> dict:
    """BetP{theta_i} = sum over focal B containing theta_i of m(B)/|B|."""
    if g.mode is not PowerSet:
        raise GranuleError("pignistic_classical needs a power-set granule")
    out = dict.fromkeys(g.frame.labels, 0.0)
    for b, v in g.items():
        bits = _member_bits(b)
        size = bin(bits).count("1")
        for i in range(g.frame.n):
            if bits >> i & 1:
                out[g.frame.labels[i]] += v / size
    return out


def relevant_hypotheses(p: Proposition) -> int:
    """Bitmask of the hypotheses ``p`` actually depends on.

    Hypothesis i is relevant when some atom S of ``p`` contains i while
    S - {i} is not an atom of ``p`` (the empty set never is).
    """
    n = p.frame.n
    rel = 0
    for s in range(1, 2 ** n):
        if not p.mask >> (s - 1) & 1:
            continue
        for i in range(n):
            if s >> i & 1:
                rest = s & ~(1 << i)
                if rest == 0 or not p.mask >> (rest - 1) & 1:
                    rel |= 1 << i
    return rel


def pignistic_weights(p: Proposition) -> list:
    """Exact alpha_i(p) for every hypothesis, as Fractions summing to 1.

    Each atom of ``p`` inside the sub-frame of relevant hypotheses shares
    itself equally between the hypotheses it lies in; the shares are then
    averaged over those atoms.
    """
    if p.mask == 0:
        raise GranuleError("the empty proposition has no pignistic weights")
    n = p.frame.n
    rel = relevant_hypotheses(p)
    atoms = [s for s in range(1, 2 ** n)
             if s & ~rel == 0 and p.mask >> (s - 1) & 1]
    acc = [Fraction(0)] * n
    for s in atoms:
        share = Fraction(1, bin(s).count("1"))
        for i in range(n):
            if s >> i & 1:
                acc[i] += share
    return [a / len(atoms) for a in acc]


def pignistic_general(g: Granule) -> dict:
    """P{theta_i} = sum over focal A of alpha_i(A) m(A)."""
    out = dict.fromkeys(g.frame.labels, 0.0)
    for a, v in g.items():
        for label, w in zip(g.frame.labels, pignistic_weights(a)):
            if w:
                out[label] += float(w) * v
    return out


def is_bayesian(g: Granule) -> bool:
    singles = set(_singleton_masks(g.frame.n))
    return all(p.mask in singles for p in g)


def core(g: Granule) -> list:
    return g.focal_elements()
