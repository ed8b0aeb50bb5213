"""Two-level fusion of neutrosophic evidence reports.

Level 1 turns each (T, I, F) item of a report into elementary granules on
the pair {A, A^c}.  Level 2 lifts them onto the hyper-power set spanned by
the report's generators and folds everything with the DSm rule.  A and its
formal complement are separate generators, so A & A^c is an ordinary,
possibly massive, paradoxical proposition.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import DSMTError, FrameError
from .frame import Frame
from .fusion import dsm_combine, dsm_combine_n, normalize
from .interval_model import (
    BinaryGranule, IntervalEvidence, interval_to_bpa, masses_from_mstar, solve_quartic_printed,
)
from .mass import Granule
from .neutro import NValue, SubsetU, parse_subset

MAX_GENERATORS = 5
COMPLEMENT_PREFIX = "~"


def _check_unit(v: NValue):
    for c in v.components():
        if c.inf() < 0 or c.sup() > 1:
            raise DSMTError(f"neutrosophic component {c} leaves [0, 1]")


def _indeterminacy_granule(lo: float, hi: float) -> BinaryGranule:
    # no preference between A and A^c: the spread is shared equally
    half = (hi - lo) / 2
    return BinaryGranule(a=half, a_c=half, union=lo, inter=1.0 - hi)


def nvalue_to_granules_case1(v: NValue) -> list:
    """Three granules for a triple of plain numbers."""
    if not v.is_crisp():
        raise DSMTError("case 1 needs single-number components")
    _check_unit(v)
    t, i, f = v.t.inf(), v.i.inf(), v.f.inf()
    return [
        interval_to_bpa(t, t),
        interval_to_bpa(1.0 - f, 1.0 - f),
        _indeterminacy_granule(i, i),
    ]


def nvalue_to_granules_case2(v: NValue, strict_paper: bool = False) -> list:
    """Three granules for a triple of single intervals.

    The falsity granule uses the interval [1 - sup F, 1 - inf F] on A.
    With ``strict_paper`` its paradox mass instead solves the quartic whose
    constant term is built from the indeterminacy bounds,
    4 (1 - sup I) inf I.
    """
    if not all(c.is_interval() for c in v.components()):
        raise DSMTError("case 2 needs single-interval components")
    _check_unit(v)
    (mt, Mt), (mi, Mi), (mf, Mf) = (c.intervals[0] for c in v.components())
    m1 = interval_to_bpa(mt, Mt)
    ev_f = IntervalEvidence(1.0 - Mf, 1.0 - mf)
    if strict_paper:
        upper = 2.0 * min(ev_f.eps_lo, 1.0 - ev_f.eps_hi)
        x = solve_quartic_printed(2.0 * (1.0 - Mf + mf), 4.0 * (1.0 - Mi) * mi, upper)
        m2 = masses_from_mstar(ev_f, x)
    else:
        m2 = interval_to_bpa(ev_f)
    return [m1, m2, _indeterminacy_granule(mi, Mi)]


def _combine_binary(granules: Sequence[BinaryGranule]) -> Granule:
    return dsm_combine_n([g.to_granule() for g in granules])


def _to_binary(g: Granule) -> BinaryGranule:
    f = g.frame
    a, ac = f.singleton(0), f.singleton(1)
    return BinaryGranule(g.mass(a), g.mass(ac), g.mass(a | ac), g.mass(a & ac))


def nvalue_to_granules_case3(v: NValue, strict_paper: bool = False) -> BinaryGranule:
    """One normalized granule for components that are unions of intervals.

    Every (T_i, I_j, F_k) choice of sub-intervals yields case-2 granules;
    each triple's three granules are DSm-combined, then all triples are.
    """
    _check_unit(v)
    per_triple = []
    for t in v.t.intervals:
        for i in v.i.intervals:
            for f in v.f.intervals:
                sub = NValue(SubsetU((t,)), SubsetU((i,)), SubsetU((f,)))
                per_triple.append(_combine_binary(nvalue_to_granules_case2(sub, strict_paper)))
    return _to_binary(normalize(dsm_combine_n(per_triple)))


def nvalue_to_granules(v: NValue, strict_paper: bool = False) -> list:
    """Pick the simplest case that fits ``v``."""
    if v.is_crisp():
        return nvalue_to_granules_case1(v)
    if all(c.is_interval() for c in v.components()):
        return nvalue_to_granules_case2(v, strict_paper)
    return [nvalue_to_granules_case3(v, strict_paper)]


def dst_shortcut(v: NValue) -> BinaryGranule:
    """Classical alternative: m(A), m(A^c), m(A | A^c) proportional to T, F, I."""
    if not v.is_crisp():
        raise DSMTError("the shortcut needs single-number components")
    t, i, f = v.t.inf(), v.i.inf(), v.f.inf()
    c = t + i + f
    if c <= 0:
        raise DSMTError("T + I + F must be positive")
    return BinaryGranule(t / c, f / c, i / c, 0.0)


@dataclass(frozen=True)
class NItem:
    prop: str
    value: NValue
    complement: str = ""

    def complement_label(self) -> str:
        return self.complement or COMPLEMENT_PREFIX + self.prop


@dataclass(frozen=True)
class NReport:
    generators: tuple
    items: tuple = field(default=())

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "items", tuple(self.items))
        if len(gens) > MAX_GENERATORS:
            raise FrameError(f"a report may use at most {MAX_GENERATORS} generators, got {len(gens)}")
        frame = Frame(gens)  # validates labels
        for it in self.items:
            for lab in (it.prop, it.complement_label()):
                if lab not in frame.labels:
                    raise FrameError(f"item refers to {lab!r}, which is not a generator")

    @property
    def frame(self) -> Frame:
        return Frame(self.generators)


def report_from_dict(data: Mapping, percent: bool = False) -> NReport:
    """Build a report from ``{"generators": [...], "items": [{"prop", "T", "I", "F"}]}``."""
    try:
        gens = list(data["generators"])
        raw_items = data["items"]
    except (KeyError, TypeError):
        raise DSMTError("a report needs 'generators' and 'items'") from None
    items = []
    for k, it in enumerate(raw_items):
        try:
            comps = [_component(it[key], percent) for key in ("T", "I", "F")]
            prop = str(it["prop"])
        except KeyError as exc:
            raise DSMTError(f"item {k} is missing {exc.args[0]!r}") from None
        items.append(NItem(prop, NValue(*comps), str(it.get("complement", ""))))
    return NReport(tuple(gens), tuple(items))


def _component(raw, percent):
    if isinstance(raw, (int, float)):
        x = float(raw) / (100.0 if percent else 1.0)
        return SubsetU.point(x)
    return parse_subset(str(raw), percent)


def combine_report(r: NReport, strict_paper: bool = False) -> Granule:
    if not r.items:
        raise DSMTError("the report has no items")
    frame = r.frame
    lifted = []
    for it in r.items:
        ia, ic = frame.index(it.prop), frame.index(it.complement_label())
        for bg in nvalue_to_granules(it.value, strict_paper):
            lifted.append(bg.to_granule(frame, ia, ic))
    return dsm_combine_n(lifted)


def fuse_reports(r1: NReport, r2: NReport, strict_paper: bool = False) -> Granule:
    if r1.generators != r2.generators:
        raise FrameError("reports must share the same generator list")
    return dsm_combine(combine_report(r1, strict_paper), combine_report(r2, strict_paper))
