"""Neutrosophic components as finite unions of closed intervals.

Arithmetic on these sets is the pointwise image (S1 + S2 = {s1 + s2}),
computed interval by interval and merged.  Logical connectives, set
operations and probability operators act componentwise on (T, I, F)
triples and clamp their results into [0, 1]; the non-standard bounds
-0 and 1+ are represented by the real numbers 0 and 1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product

from .errors import DSMTError

CLASSIFY_TOL = 1e-12


class NValueSyntaxError(DSMTError):
    pass


@dataclass(frozen=True)
class SubsetU:
    """Sorted, disjoint closed intervals ``((lo, hi), ...)``."""

    intervals: tuple

    def __post_init__(self):
        ivs = []
        for lo, hi in self.intervals:
            lo, hi = float(lo), float(hi)
            if lo > hi:
                raise DSMTError(f"interval [{lo}, {hi}] has lo > hi")
            ivs.append((lo, hi))
        if not ivs:
            raise DSMTError("a component needs at least one interval")
        ivs.sort()
        merged = [ivs[0]]
        for lo, hi in ivs[1:]:
            plo, phi = merged[-1]
            if lo <= phi:
                merged[-1] = (plo, max(phi, hi))
            else:
                merged.append((lo, hi))
        object.__setattr__(self, "intervals", tuple(merged))

    @classmethod
    def point(cls, x) -> "SubsetU":
        return cls(((x, x),))

    @classmethod
    def interval(cls, lo, hi) -> "SubsetU":
        return cls(((lo, hi),))

    @classmethod
    def of(cls, *items) -> "SubsetU":
        """Build from numbers (singletons) and ``(lo, hi)`` pairs."""
        ivs = []
        for it in items:
            if isinstance(it, (tuple, list)):
                ivs.append(tuple(it))
            else:
                ivs.append((it, it))
        return cls(tuple(ivs))

    def inf(self) -> float:
        return self.intervals[0][0]

    def sup(self) -> float:
        return self.intervals[-1][1]

    def is_point(self) -> bool:
        return len(self.intervals) == 1 and self.intervals[0][0] == self.intervals[0][1]

    def is_interval(self) -> bool:
        return len(self.intervals) == 1

    def contains(self, x: float, tol: float = 0.0) -> bool:
        return any(lo - tol <= x <= hi + tol for lo, hi in self.intervals)

    def issubset(self, other: "SubsetU") -> bool:
        return all(any(olo <= lo and hi <= ohi for olo, ohi in other.intervals)
                   for lo, hi in self.intervals)

    def __add__(self, other):
        return su_add(self, other)

    def __sub__(self, other):
        return su_sub(self, other)

    def __mul__(self, other):
        return su_mul(self, other)

    def __str__(self):
        return format_subset(self)


def _pairwise(a: SubsetU, b: SubsetU, op):
    return SubsetU(tuple(op(x, y) for x, y in product(a.intervals, b.intervals)))


def su_add(a: SubsetU, b: SubsetU) -> SubsetU:
    return _pairwise(a, b, lambda x, y: (x[0] + y[0], x[1] + y[1]))


def su_sub(a: SubsetU, b: SubsetU) -> SubsetU:
    return _pairwise(a, b, lambda x, y: (x[0] - y[1], x[1] - y[0]))


def _mul_iv(x, y):
    ps = (x[0] * y[0], x[0] * y[1], x[1] * y[0], x[1] * y[1])
    return (min(ps), max(ps))


def su_mul(a: SubsetU, b: SubsetU) -> SubsetU:
    return _pairwise(a, b, _mul_iv)


def su_div_scalar(a: SubsetU, k: float) -> SubsetU:
    if k == 0:
        raise DSMTError("division of a set by zero")
    return SubsetU(tuple(tuple(sorted((lo / k, hi / k))) for lo, hi in a.intervals))


def su_clamp01(a: SubsetU) -> SubsetU:
    """Clip into [0, 1]; parts below 0 collapse onto 0, parts above 1 onto 1."""
    clip = lambda v: min(max(v, 0.0), 1.0)
    return SubsetU(tuple((clip(lo), clip(hi)) for lo, hi in a.intervals))


ONE = SubsetU.point(1.0)


def _as_subset(c) -> SubsetU:
    if isinstance(c, SubsetU):
        return c
    if isinstance(c, str):
        return parse_subset(c)
    if isinstance(c, tuple) and len(c) == 2 and not isinstance(c[0], (tuple, list)):
        return SubsetU.interval(*c)
    if isinstance(c, (list, tuple)):
        return SubsetU.of(*c)
    return SubsetU.point(c)


@dataclass(frozen=True)
class NValue:
    t: SubsetU
    i: SubsetU
    f: SubsetU

    @classmethod
    def of(cls, t, i, f) -> "NValue":
        """Accepts SubsetU, numbers, ``(lo, hi)`` tuples, lists of those, or text."""
        return cls(_as_subset(t), _as_subset(i), _as_subset(f))

    def components(self):
        return (self.t, self.i, self.f)

    @property
    def n_sup(self) -> float:
        return self.t.sup() + self.i.sup() + self.f.sup()

    @property
    def n_inf(self) -> float:
        return self.t.inf() + self.i.inf() + self.f.inf()

    def is_crisp(self) -> bool:
        return all(c.is_point() for c in self.components())

    def clamped(self) -> "NValue":
        return NValue(*(su_clamp01(c) for c in self.components()))

    def __str__(self):
        return format_nvalue(self)


# -- text form -----------------------------------------------------------------

_NUM = r"[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?"
_ITEM_RE = re.compile(rf"\s*(?:\[\s*({_NUM})\s*,\s*({_NUM})\s*\]|({_NUM}))\s*")


def parse_subset(text: str, percent: bool = False) -> SubsetU:
    """Parse ``[lo,hi]`` intervals and bare numbers separated by commas."""
    scale = 100.0 if percent else 1.0
    pos, items = 0, []
    text = text.strip()
    if not text:
        raise NValueSyntaxError("empty component")
    while True:
        m = _ITEM_RE.match(text, pos)
        if m is None:
            raise NValueSyntaxError(f"cannot parse component {text!r} at position {pos}")
        if m.group(3) is not None:
            x = float(m.group(3)) / scale
            items.append((x, x))
        else:
            items.append((float(m.group(1)) / scale, float(m.group(2)) / scale))
        pos = m.end()
        if pos == len(text):
            break
        if text[pos] != ",":
            raise NValueSyntaxError(f"expected ',' in component {text!r} at position {pos}")
        pos += 1
    return SubsetU(tuple(items))


def parse_nvalue(text: str, percent: bool = False) -> NValue:
    """Parse ``(T; I; F)``, e.g. ``([0.4,0.6]; [0.2,0.25],[0.3,0.35]; 0.1,0.2,0.3)``."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    parts = body.split(";")
    if len(parts) != 3:
        raise NValueSyntaxError(f"expected three ';'-separated components, got {len(parts)}")
    return NValue(*(parse_subset(p, percent) for p in parts))


def _fmt_num(x: float) -> str:
    return f"{x:.10g}"


def format_subset(a: SubsetU) -> str:
    out = []
    for lo, hi in a.intervals:
        out.append(_fmt_num(lo) if lo == hi else f"[{_fmt_num(lo)},{_fmt_num(hi)}]")
    return ",".join(out)


def format_nvalue(x: NValue) -> str:
    return "(" + "; ".join(format_subset(c) for c in x.components()) + ")"


# -- component formulas --------------------------------------------------------


def _not(a):
    return ONE - a


def _or(a, b):
    return a + b - a * b


def _xor(a, b):
    na, nb = _not(a), _not(b)
    return a * nb + b * na - a * b * na * nb


def _implies(a, b):
    return _not(a) + a * b


def _lift1(fn, x: NValue) -> NValue:
    x = x.clamped()
    return NValue(*(su_clamp01(fn(c)) for c in x.components()))


def _lift2(fn, x: NValue, y: NValue) -> NValue:
    x, y = x.clamped(), y.clamped()
    return NValue(*(su_clamp01(fn(a, b)) for a, b in zip(x.components(), y.components())))


def nl_not(x: NValue) -> NValue:
    return _lift1(_not, x)


def nl_and(x: NValue, y: NValue) -> NValue:
    return _lift2(su_mul, x, y)


def nl_or(x: NValue, y: NValue) -> NValue:
    return _lift2(_or, x, y)


def nl_xor(x: NValue, y: NValue) -> NValue:
    return _lift2(_xor, x, y)


def nl_implies(x: NValue, y: NValue) -> NValue:
    return _lift2(_implies, x, y)


def nl_iff(x: NValue, y: NValue) -> NValue:
    return _lift2(lambda a, b: _implies(a, b) * _implies(b, a), x, y)


def nl_sheffer(x: NValue, y: NValue) -> NValue:
    return _lift2(lambda a, b: ONE - a * b, x, y)


def nl_peirce(x: NValue, y: NValue) -> NValue:
    return _lift2(lambda a, b: _not(a) * _not(b), x, y)


CONNECTIVES = {
    "not": nl_not, "and": nl_and, "or": nl_or, "xor": nl_xor,
    "implies": nl_implies, "iff": nl_iff, "sheffer": nl_sheffer, "peirce": nl_peirce,
}


# -- set operations --------------------------------------------------------------

ns_complement = nl_not
ns_intersect = nl_and
ns_union = nl_or


def ns_difference(x: NValue, y: NValue, legacy: bool = False) -> NValue:
    """M - N as T_M - T_M * T_N per component.

    ``legacy=True`` gives the plain componentwise difference T_M - T_N.
    """
    if legacy:
        return _lift2(su_sub, x, y)
    return _lift2(lambda a, b: a - a * b, x, y)


def ns_is_subset(x: NValue, y: NValue) -> bool:
    return all(a.issubset(b) for a, b in zip(x.components(), y.components()))


# -- probability operators ---------------------------------------------------------


def np_add(x: NValue, y: NValue) -> NValue:
    return _lift2(su_add, x, y)


def np_sub(x: NValue, y: NValue) -> NValue:
    return _lift2(su_sub, x, y)


def np_mul(x: NValue, y: NValue) -> NValue:
    return _lift2(su_mul, x, y)


def np_not(x: NValue, swap: bool = False) -> NValue:
    """{1} - NP(A) componentwise, or (F, I, T) when ``swap`` is set."""
    if swap:
        return NValue(x.f, x.i, x.t).clamped()
    return _lift1(_not, x)


def np_union(x: NValue, y: NValue) -> NValue:
    # composed unclamped, clamped once at the end
    return _lift2(_or, x, y)


# -- taxonomy -----------------------------------------------------------------------


def classify(x: NValue, tol: float = CLASSIFY_TOL) -> frozenset:
    """Labels of the logics/sets/probabilities the value falls under.

    Uses t = sup T, i = sup I, f = sup F and n = t + i + f, on raw
    (unclamped) components.  ``paraconsistent-range`` is reserved for
    set-valued triples whose superior sum exceeds 1 or inferior sum is
    negative.
    """
    t, i, f = x.t.sup(), x.i.sup(), x.f.sup()
    n = t + i + f
    eq = lambda a, b: abs(a - b) <= tol
    unit = lambda v: -tol <= v <= 1 + tol
    i0 = eq(i, 0.0)
    labels = set()
    if i0 and tol < n < 1 - tol and unit(t) and unit(f):
        labels.add("intuitionistic")
    if i0 and eq(n, 1.0) and unit(t) and unit(f):
        labels.add("fuzzy-compatible")
        if (eq(t, 0) or eq(t, 1)) and (eq(f, 0) or eq(f, 1)):
            labels.add("boolean")
    if i0 and n > 1 + tol and t < 1 - tol and f < 1 - tol:
        labels.add("paraconsistent")
    if i0 and eq(t, 1.0) and eq(f, 1.0):
        labels.add("dialetheist")
    if i > tol:
        labels.add("faillibilist")
    if i > 1 + tol:
        labels.add("paradoxist")
    if tol < i < 1 - tol and t + f > 1 + tol:
        labels.add("pseudoparadoxist")
    if i < -tol and t > 1 + tol:
        labels.add("tautologic")
    if not x.is_crisp() and (x.n_sup > 1 + tol or x.n_inf < -tol):
        labels.add("paraconsistent-range")
    return frozenset(labels)
