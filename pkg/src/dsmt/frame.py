"""Frames of discernment and the hyper-power set D^Theta.

A proposition of D^Theta is stored canonically as a bitmask over the
``2**n - 1`` Venn atoms of the generic n-set diagram.  The atom indexed by
the non-empty subset ``S`` of hypotheses (itself an integer bitmask ``s``)
is the region lying inside exactly the hypotheses of ``S``; it occupies bit
``s - 1`` of the proposition mask.  Every element of D^Theta is an up-closed
set of atoms, so union and intersection are bitwise OR / AND.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union as _U

import numpy as np

from .errors import ExprSyntaxError, FrameError, UnknownLabel

__all__ = [
    "Frame", "Proposition", "Singleton", "Union", "Inter", "PropExpr",
    "parse_expr", "to_canonical", "format_expr", "expr_cost",
    "enumerate_hyper_power_set", "hyper_power_masks", "prop_union", "prop_inter",
    "atoms", "is_up_closed", "irreducible_form", "iis", "strength",
    "MAX_N", "DEFAULT_MAX_N",
]

MAX_N = 6
DEFAULT_MAX_N = 5
IRREDUCIBLE_MAX_N = 5


@dataclass(frozen=True)
class Frame:
    """Ordered, distinct hypothesis labels theta_1..theta_n."""

    labels: tuple

    def __post_init__(self):
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        for lab in labels:
            if not isinstance(lab, str) or not lab:
                raise FrameError(f"frame labels must be non-empty strings, got {lab!r}")
            if re.search(r"[\s&|()]", lab):
                raise FrameError(f"label {lab!r} contains a reserved character")
        if len(set(labels)) != len(labels):
            raise FrameError(f"duplicate labels in frame {labels}")
        if len(labels) > MAX_N:
            raise FrameError(f"frame of size {len(labels)} exceeds the limit of {MAX_N}")

    @classmethod
    def of_size(cls, n: int, prefix: str = "t") -> "Frame":
        if n < 0:
            raise FrameError(f"frame size must be non-negative, got {n}")
        return cls(tuple(f"{prefix}{i + 1}" for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.labels)

    def __len__(self):
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise FrameError(f"unknown label {label!r}") from None

    @property
    def empty(self) -> "Proposition":
        return Proposition(self, 0)

    def singleton(self, i: int) -> "Proposition":
        if not 0 <= i < self.n:
            raise FrameError(f"singleton index {i} outside frame of size {self.n}")
        return Proposition(self, _singleton_masks(self.n)[i])

    def singletons(self) -> list:
        return [Proposition(self, m) for m in _singleton_masks(self.n)]

    @property
    def total(self) -> "Proposition":
        """Union of all hypotheses (theta_1 | ... | theta_n)."""
        return Proposition(self, (1 << (2 ** self.n - 1)) - 1)

    def prop(self, text: str) -> "Proposition":
        """Parse and canonicalize an expression such as ``"(t1 & t2) | t3"``."""
        return to_canonical(parse_expr(text, self), self)

    def from_members(self, members: Iterable[int]) -> "Proposition":
        """Pure union of the given hypothesis indices (a power-set element)."""
        mask = 0
        singles = _singleton_masks(self.n)
        for i in members:
            mask |= singles[i]
        return Proposition(self, mask)

    def members(self, p: "Proposition"):
        """Hypothesis indices of a pure union, or None if ``p`` is not one.

        The empty proposition maps to the empty frozenset.
        """
        singles = _singleton_masks(self.n)
        inside = frozenset(i for i in range(self.n) if p.mask >> ((1 << i) - 1) & 1)
        rebuilt = 0
        for i in inside:
            rebuilt |= singles[i]
        return inside if rebuilt == p.mask else None


@dataclass(frozen=True)
class Proposition:
    """An element of D^Theta: an up-closed Venn-atom bitmask over ``frame``."""

    frame: Frame
    mask: int

    def __or__(self, other):
        return prop_union(self, other)

    def __and__(self, other):
        return prop_inter(self, other)

    def __le__(self, other):
        _check_same(self, other)
        return self.mask & ~other.mask == 0

    def __bool__(self):
        return self.mask != 0

    def atoms(self):
        return atoms(self)

    def describe(self) -> str:
        if self.mask == 0:
            return "{}"
        if self.frame.n <= IRREDUCIBLE_MAX_N:
            return format_expr(irreducible_form(self), self.frame)
        return f"<atoms {self.mask:#x}>"

    def __str__(self):
        return self.describe()


# -- expressions -------------------------------------------------------------


@dataclass(frozen=True)
class Singleton:
    index: int  # 0-based position in the frame


@dataclass(frozen=True)
class Union:
    children: tuple


@dataclass(frozen=True)
class Inter:
    children: tuple


PropExpr = _U[Singleton, Union, Inter]

_TOKEN_RE = re.compile(r"\s*(?:(?P<op>[&|()])|(?P<label>[^\s&|()]+))")


def _tokenize(text):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise ExprSyntaxError(f"unexpected character {text[pos]!r}", pos)
        if m.group("op"):
            tokens.append((m.group("op"), m.group("op"), m.start("op")))
        elif m.group("label"):
            tokens.append(("label", m.group("label"), m.start("label")))
        else:
            break
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, frame):
        self.tokens = _tokenize(text)
        self.i = 0
        self.frame = frame

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def _resolve(self, text, pos):
        labels = self.frame.labels
        if text in labels:
            return labels.index(text)
        # fall back to a case-insensitive match when it is unambiguous
        hits = [i for i, lab in enumerate(labels) if lab.casefold() == text.casefold()]
        if len(hits) == 1:
            return hits[0]
        raise UnknownLabel(f"unknown label {text!r}", pos)

    def expr(self):
        parts = [self.term()]
        while self.peek()[0] == "|":
            self.take()
            parts.append(self.term())
        return parts[0] if len(parts) == 1 else Union(tuple(parts))

    def term(self):
        parts = [self.factor()]
        while self.peek()[0] == "&":
            self.take()
            parts.append(self.factor())
        return parts[0] if len(parts) == 1 else Inter(tuple(parts))

    def factor(self):
        kind, text, pos = self.take()
        if kind == "label":
            return Singleton(self._resolve(text, pos))
        if kind == "(":
            inner = self.expr()
            kind2, _, pos2 = self.take()
            if kind2 != ")":
                raise ExprSyntaxError("expected ')'", pos2)
            return inner
        if kind == "end":
            raise ExprSyntaxError("unexpected end of expression", pos)
        raise ExprSyntaxError(f"unexpected token {text!r}", pos)


def parse_expr(text: str, frame: Frame) -> PropExpr:
    """Parse ``label``, ``&`` (intersection), ``|`` (union) and parentheses.

    ``&`` binds tighter than ``|``.
    """
    parser = _Parser(text, frame)
    tree = parser.expr()
    kind, tok, pos = parser.peek()
    if kind != "end":
        raise ExprSyntaxError(f"unexpected token {tok!r}", pos)
    return tree


def to_canonical(expr: PropExpr, frame: Frame) -> Proposition:
    return Proposition(frame, _expr_mask(expr, frame.n))


def _expr_mask(expr, n):
    if isinstance(expr, Singleton):
        if not 0 <= expr.index < n:
            raise FrameError(f"singleton index {expr.index} outside frame of size {n}")
        return _singleton_masks(n)[expr.index]
    masks = [_expr_mask(c, n) for c in expr.children]
    out = masks[0]
    for m in masks[1:]:
        out = out | m if isinstance(expr, Union) else out & m
    return out


def format_expr(expr: PropExpr, frame: Frame) -> str:
    if isinstance(expr, Singleton):
        return frame.labels[expr.index]
    sep = " | " if isinstance(expr, Union) else " & "
    parts = []
    for c in expr.children:
        s = format_expr(c, frame)
        parts.append(s if isinstance(c, Singleton) else f"({s})")
    return sep.join(parts)


def expr_cost(expr: PropExpr) -> int:
    """Operand count plus operator count."""
    if isinstance(expr, Singleton):
        return 1
    return sum(expr_cost(c) for c in expr.children) + len(expr.children) - 1


# -- masks -------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _singleton_masks(n):
    out = []
    for i in range(n):
        m = 0
        for s in range(1, 2 ** n):
            if s >> i & 1:
                m |= 1 << (s - 1)
        out.append(m)
    return tuple(out)


def is_up_closed(mask: int, n: int) -> bool:
    for s in range(1, 2 ** n):
        if mask >> (s - 1) & 1:
            for j in range(n):
                sup = s | (1 << j)
                if not mask >> (sup - 1) & 1:
                    return False
    return True


def _check_same(a, b):
    if a.frame != b.frame:
        raise FrameError("propositions belong to different frames")


def prop_union(a: Proposition, b: Proposition) -> Proposition:
    _check_same(a, b)
    return Proposition(a.frame, a.mask | b.mask)


def prop_inter(a: Proposition, b: Proposition) -> Proposition:
    _check_same(a, b)
    return Proposition(a.frame, a.mask & b.mask)


def atoms(p: Proposition) -> list:
    """Venn atoms of ``p`` as tuples of 0-based hypothesis indices, by atom index."""
    n = p.frame.n
    return [
        tuple(i for i in range(n) if s >> i & 1)
        for s in range(1, 2 ** n)
        if p.mask >> (s - 1) & 1
    ]


@functools.lru_cache(maxsize=None)
def _monotone_tables(n):
    """Truth tables of all monotone Boolean functions of n variables.

    Built recursively: f(x, x_n) is monotone iff f(., 0) <= f(., 1).
    Bit ``x`` of a table is the value at the assignment whose true variables
    are the set bits of ``x``.
    """
    tables = np.array([0, 1], dtype=np.uint64)
    for k in range(1, n + 1):
        shift = np.uint64(2 ** (k - 1))
        chunks = []
        for f1 in tables:
            lows = tables[(tables & ~f1) == 0]
            chunks.append(lows | (f1 << shift))
        tables = np.sort(np.concatenate(chunks))
    return tables


def hyper_power_masks(n: int, allow_huge: bool = False) -> np.ndarray:
    """Atom masks of all elements of D^Theta (including the empty set), ascending."""
    limit = MAX_N if allow_huge else DEFAULT_MAX_N
    if n < 0 or n > limit:
        hint = "" if allow_huge or n > MAX_N else " (pass allow_huge=True for n=6)"
        raise FrameError(f"cannot enumerate D^Theta for n={n}{hint}")
    tables = _monotone_tables(n)
    # drop the constant-true function (it is the only one true on the empty assignment)
    tables = tables[(tables & np.uint64(1)) == 0]
    return tables >> np.uint64(1)


def enumerate_hyper_power_set(frame: Frame, allow_huge: bool = False) -> list:
    """All elements of D^Theta, ordered by mask value; size is Dedekind(n) - 1."""
    return [Proposition(frame, int(m)) for m in hyper_power_masks(frame.n, allow_huge)]


# -- irreducible forms and intrinsic informational strength -------------------

_OP_UNION, _OP_INTER = 0, 1


class _FormSearch:
    """Minimum-cost construction of the non-empty elements of D^Theta.

    Costs only take odd values, so the search proceeds level by level: an
    element first reached at cost c is built from parts whose costs sum to
    c - 1, and among all such (left, right, op) triples the smallest one wins.
    Levels are always completed, so stopping early once a wanted mask has
    been found gives the same answer as running to the end.
    ``table`` maps mask -> (cost, left, right, op); singletons carry their
    index as ``left`` and ``None`` elsewhere.
    """

    def __init__(self, n):
        if n > IRREDUCIBLE_MAX_N:
            raise FrameError(f"irreducible forms are limited to n <= {IRREDUCIBLE_MAX_N}")
        self.n = n
        self.table = {m: (1, i, None, None) for i, m in enumerate(_singleton_masks(n))}
        self.levels = {1: np.array(sorted(_singleton_masks(n)), dtype=np.int64)}
        self.cost = 1
        self.n_target = len(hyper_power_masks(n)) - 1

    @property
    def complete(self):
        return len(self.table) >= self.n_target

    def _step(self):
        self.cost += 2
        cost, levels = self.cost, self.levels
        known = np.array(sorted(self.table), dtype=np.int64)
        found = []
        for ca in range(1, cost - 1, 2):
            cb = cost - 1 - ca
            if ca not in levels or cb not in levels:
                continue
            left = levels[ca][:, None]
            right = levels[cb][None, :]
            for op in (_OP_UNION, _OP_INTER):
                res = left | right if op == _OP_UNION else left & right
                li, ri = np.nonzero(~np.isin(res, known))
                if li.size:
                    found.append(np.stack([
                        res[li, ri], levels[ca][li], levels[cb][ri],
                        np.full(li.size, op, dtype=np.int64),
                    ]))
        if not found:
            if cost > 4 * 2 ** self.n:
                raise RuntimeError("minimal-form search did not converge")
            return
        cand = np.concatenate(found, axis=1)
        order = np.lexsort((cand[3], cand[2], cand[1], cand[0]))
        cand = cand[:, order]
        first = np.ones(cand.shape[1], dtype=bool)
        first[1:] = cand[0, 1:] != cand[0, :-1]
        cand = cand[:, first]
        for res, lm, rm, op in cand.T:
            self.table[int(res)] = (cost, int(lm), int(rm), int(op))
        levels[cost] = np.sort(cand[0])

    def ensure(self, mask=None):
        """Advance until ``mask`` (or every element, when None) is known."""
        while not self.complete and (mask is None or mask not in self.table):
            self._step()
        return self.table


@functools.lru_cache(maxsize=None)
def _search(n):
    return _FormSearch(n)


def _minimal_forms(n):
    """The complete minimum-cost table for frames of size ``n``."""
    return _search(n).ensure()


def _table_for(n, mask):
    # parts of a minimal form are cheaper than the whole, so once ``mask``
    # is known all of its parts are too
    return _search(n).ensure(mask)


def _build_expr(mask, table):
    cost, left, right, op = table[mask]
    if right is None:
        return Singleton(left)
    lhs, rhs = _build_expr(left, table), _build_expr(right, table)
    cls = Union if op == _OP_UNION else Inter
    children = []
    for part in (lhs, rhs):
        # flatten same-operator chains; cost and strength are unchanged
        children.extend(part.children if isinstance(part, cls) else (part,))
    return cls(tuple(children))


def irreducible_form(p: Proposition) -> PropExpr:
    """A minimum-cost expression (operands + operators) denoting ``p``."""
    if p.mask == 0:
        raise FrameError("the empty proposition has no irreducible form")
    return _build_expr(p.mask, _table_for(p.frame.n, p.mask))


def iis(expr: PropExpr) -> Fraction:
    """Intrinsic informational strength of an irreducible expression.

    Singletons have strength 1.  n-ary nodes are folded left to right with
    the binary rules s(A | B) = (1/sA + 1/sB) / (1/sA * 1/sB) and
    s(A & B) = sA * sB / (sA + sB).
    """
    if isinstance(expr, Singleton):
        return Fraction(1)
    values = [iis(c) for c in expr.children]
    acc = values[0]
    for v in values[1:]:
        if isinstance(expr, Union):
            acc = (1 / acc + 1 / v) / ((1 / acc) * (1 / v))
        else:
            acc = acc * v / (acc + v)
    return acc


@functools.lru_cache(maxsize=None)
def _strength_cached(n, mask):
    return iis(_build_expr(mask, _table_for(n, mask)))


def strength(p: Proposition) -> Fraction:
    """s(p) evaluated on the irreducible form of ``p``."""
    if p.mask == 0:
        raise FrameError("the empty proposition has no strength")
    return _strength_cached(p.frame.n, p.mask)
