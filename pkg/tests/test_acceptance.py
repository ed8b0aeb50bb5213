"""Acceptance criteria 1-13, one test per criterion.

Each test prints a ``criterion N: PASS`` or ``criterion N: FAIL (...)``
line straight to the terminal, even under captured output.  Run alone with
``pytest tests/test_acceptance.py -v``.
"""

import math
import time
from fractions import Fraction

import numpy as np
import pytest

import oracles
import test_properties as props
from dsmt.entropy import (
    conditional_entropy, entropy_of_combined, generalized_entropy, joint_entropy, shannon,
)
from dsmt.frame import Frame, enumerate_hyper_power_set, hyper_power_masks, strength
from dsmt.fusion import dempster_combine, dsm_combine, fusion_table, normalize
from dsmt.interval_model import interval_to_bpa, solve_mstar
from dsmt.mass import PowerSet, belief, make_granule, pignistic_general, pignistic_weights

F2 = Frame.of_size(2)
F3 = Frame.of_size(3)


class Checks:
    def __init__(self, number):
        self.number = number
        self.failed = []

    def close(self, label, got, want, tol):
        ok = abs(got - want) <= tol
        if not ok:
            self.failed.append(f"{label}={got:.6g}, want {want:.6g} +/- {tol:g}")
        return ok

    def true(self, label, ok):
        if not ok:
            self.failed.append(label)
        return ok

    def finish(self, capsys):
        status = "PASS" if not self.failed else "FAIL (" + "; ".join(self.failed) + ")"
        with capsys.disabled():
            print(f"\ncriterion {self.number}: {status}")
        assert not self.failed, self.failed


def b2(a, b, u, i):
    return make_granule(F2, {"t1": a, "t2": b, "t1 | t2": u, "t1 & t2": i},
                        allow_unnormalized=True)


def b2_masses(g):
    return [g["t1"], g["t2"], g["t1 | t2"], g["t1 & t2"]]


def test_criterion_1_hyper_power_set_sizes(capsys):
    c = Checks(1)
    for n, want in enumerate([1, 2, 5, 19, 167]):
        c.true(f"|D| n={n}", len(hyper_power_masks(n)) == want)
    t0 = time.perf_counter()
    n5 = len(enumerate_hyper_power_set(Frame.of_size(5)))
    elapsed = time.perf_counter() - t0
    c.true(f"|D| n=5 is {n5}", n5 == 7580)
    c.true(f"n=5 took {elapsed:.2f}s", elapsed < 10.0)
    c.finish(capsys)


def test_criterion_2_weather(capsys):
    c = Checks(2)
    f = Frame(("S", "R"))
    g, _ = dempster_combine(make_granule(f, {"S": .8, "R": .12, "S | R": .08}, PowerSet),
                            make_granule(f, {"S": .9, "R": .02, "S | R": .08}, PowerSet))
    c.close("m(S)", g["S"], .9772, 5e-4)
    c.close("m(R)", g["R"], .0155, 5e-4)
    c.close("m(S|R)", g["S | R"], .0073, 5e-4)
    c.finish(capsys)


def zadeh_sources(mode):
    f = Frame(("M", "C", "T"))
    return f, make_granule(f, {"M": .99, "T": .01}, mode), make_granule(f, {"C": .99, "T": .01}, mode)


def test_criterion_3_zadeh_dempster(capsys):
    c = Checks(3)
    _, m1, m2 = zadeh_sources(PowerSet)
    g, rep = dempster_combine(m1, m2)
    c.close("m(T)", g["T"], 1.0, 1e-9)
    c.close("K", rep.K, 1e-4, 1e-12)
    c.finish(capsys)


DSM_EXAMPLES = {
    "rational": ((.8, .2, 0, 0), (.9, .1, 0, 0), (.72, .02, 0, .26)),
    "uncertain": ((.8, .15, .05, 0), (.9, .05, .05, 0), (.805, .0175, .0025, .175)),
    "paradoxical": ((.8, .15, 0, .05), (.9, .05, 0, .05), (.72, .0075, 0, .2725)),
    "mixed": ((.8, .1, .05, .05), (.9, .05, .03, .02), (.789, .0105, .0015, .199)),
}


def test_criterion_4_dsm_examples(capsys):
    c = Checks(4)
    for name, (x, y, want) in DSM_EXAMPLES.items():
        for k, got, w in zip("abui", b2_masses(dsm_combine(b2(*x), b2(*y))), want):
            c.close(f"{name}[{k}]", got, w, 1e-4)
    m1, m2 = b2(.6, .3, .2, .1), b2(.5, .2, .1, .1)
    raw = dsm_combine(m1, m2)
    c.close("paraconsistent total", raw.total(), 1.08, 1e-12)
    post = b2_masses(normalize(raw))
    pre = b2_masses(dsm_combine(normalize(m1), normalize(m2)))
    for k, a, b in zip("abui", post, pre):
        c.close(f"pre/post[{k}]", a, b, 1e-9)
    for k, got, w in zip("abui", post, (.426, .12, .019, .435)):
        c.close(f"m'[{k}]", got, w, 5e-3)
    c.finish(capsys)


def test_criterion_5_zadeh_dsm(capsys):
    c = Checks(5)
    f, m1, m2 = zadeh_sources(PowerSet)
    g = dsm_combine(m1, m2)
    for key, want in {"M & C": .9801, "M & T": .0099, "C & T": .0099, "T": .0001}.items():
        c.close(f"m({key})", g[key], want, 1e-9)
    for key, want in {"M": .99, "C": .99, "T": .0199}.items():
        c.close(f"Bel({key})", belief(g, f.prop(key)), want, 1e-9)
    c.finish(capsys)


MAHLER_BEL = {
    "t1": .400, "t2": .920, "t3": .500, "t1 & t2": .360, "t2 & t3": .460,
    "t1 & (t2 | t3)": .138, "t1 & t2 & t3": .100,
}


def mahler_final():
    m0 = make_granule(F3, {"t1": .2, "t2": .2, "t3": .2, "t2 & t3": .2, "t1 & t2": .1,
                           "t1 & t2 & t3": .1})
    m1 = make_granule(F3, {"t1 | t2 | t3": .05, "t2 | t3": .95})
    m2 = make_granule(F3, {"t1 | t2 | t3": .2, "t2": .8})
    mid = dsm_combine(m1, m2)
    return mid, dsm_combine(m0, mid)


@pytest.mark.xfail(strict=True, reason=(
    "printed Bel(t1 & (t2 | t3)) = 0.138 leaves out m(t1 & t2) = 0.26 although "
    "t1 & t2 lies inside t1 & (t2 | t3); the consistent value is 0.398"))
def test_criterion_6_mahler_chain(capsys):
    c = Checks(6)
    mid, final = mahler_final()
    for key, want in {"t2": .8, "t2 | t3": .19, "t1 | t2 | t3": .01}.items():
        c.close(f"m'({key})", mid[key], want, 1e-3)
    for key, want in {"t1": .002, "t2": .2, "t3": .04, "t1 & t2": .26, "t2 & t3": .36,
                      "t1 & t2 & t3": .1, "t1 & (t2 | t3)": .038}.items():
        c.close(f"m({key})", final[key], want, 1e-3)
    for key, want in MAHLER_BEL.items():
        c.close(f"Bel({key})", belief(final, F3.prop(key)), want, 1e-3)
    c.finish(capsys)


def test_mahler_belief_of_overlap_is_sum_of_contained_masses():
    # the value the criterion above cannot reach, recomputed by hand
    _, final = mahler_final()
    assert belief(final, F3.prop("t1 & (t2 | t3)")) == pytest.approx(.038 + .26 + .1, abs=1e-12)
    for key, want in MAHLER_BEL.items():
        if key != "t1 & (t2 | t3)":
            assert belief(final, F3.prop(key)) == pytest.approx(want, abs=1e-3)


def test_criterion_7_thief(capsys):
    c = Checks(7)
    g = dsm_combine(b2(.99, 0, .01, 0), b2(0, .99, .01, 0))
    c.close("m(t1&t2)", g["t1 & t2"], .9801, 1e-12)
    c.close("m(t1|t2)", g["t1 | t2"], .0001, 1e-12)
    c.finish(capsys)


def test_criterion_8_entropies(capsys):
    c = Checks(8)
    m1, m2 = b2(.6, .2, .1, .1), b2(.5, .2, .1, .2)
    t = fusion_table(m1, m2)
    c.close("H(M1)", shannon(m1), 1.0889, 1e-3)
    c.close("H(M2)", shannon(m2), 1.2206, 1e-3)
    c.close("H(M1|M2)", conditional_entropy(t, "m2"), 1.0889, 1e-3)
    c.close("H(M2|M1)", conditional_entropy(t, "m1"), 1.2206, 1e-3)
    c.close("H(M)", joint_entropy(t), 2.3095, 1e-3)
    c.close("H~", entropy_of_combined(t.collapse()), .96023, 1e-3)
    c.close("chain rule", joint_entropy(t), shannon(m1) + conditional_entropy(t, "m1"), 1e-9)
    r1, r2 = b2(.9, .09, .009, .001), b2(.09, .9, .009, .001)
    tr = fusion_table(r1, r2)
    c.close("remark H~", entropy_of_combined(tr.collapse()), .59659, 1e-3)
    c.close("remark H(M)", joint_entropy(tr), .72168, 1e-3)
    c.close("remark H(M1)", shannon(r1), .36084, 1e-3)
    c.finish(capsys)


STRENGTH_ROWS = [
    ("t1 | t2", 2, Fraction(2)), ("t1 & t2", 2, Fraction(1, 2)),
    ("t1 | t2 | t3", 3, Fraction(3)), ("t1 & t2 & t3", 3, Fraction(1, 3)),
    ("(t1 & t2) | t3", 3, Fraction(3, 2)), ("(t1 | t2) & t3", 3, Fraction(2, 3)),
    ("(t1 & t2) | (t3 & t4)", 4, Fraction(1)), ("(t1 | t2) & (t3 | t4)", 4, Fraction(1)),
    ("(t1 & t2) | (t3 & t4 & t5)", 5, Fraction(5, 6)),
    ("(t1 | t2) & (t3 | t4 | t5)", 5, Fraction(6, 5)),
]


def test_criterion_9_strength_rows(capsys):
    c = Checks(9)
    for text, n, want in STRENGTH_ROWS:
        got = strength(Frame.of_size(n).prop(text))
        c.true(f"s({text})={got}, want {want}", got == want)
    c.finish(capsys)


HG_ROWS = [
    ("B1", (0, 0, 0, 1), -1.386), ("B2", (0, 0, .3, .7), -.186), ("B3", (1, 0, 0, 0), 0.0),
    ("B4", (0, 1, 0, 0), 0.0), ("B5", (.1, .2, 0, .7), .081), ("B6", (0, 0, 1, 0), .346),
    ("B7", (.8, .2, 0, 0), .500), ("B8", (0, 0, .7, .3), .673), ("B9", (.5, .5, 0, 0), .693),
    ("B10", (.7, .2, .1, 0), .721), ("B11", (.7, .2, 0, .1), .893),
    ("B13", (.1, .2, .3, .4), 1.015), ("B14", (.1, .2, .4, .3), 1.180),
    ("B15", (.25, .25, .25, .25), 1.299), ("B16", (.25, .25, .35, .15), 1.359),
]


def test_criterion_10_generalized_entropy(capsys):
    c = Checks(10)
    values = []
    for name, m, want in HG_ROWS:
        got = generalized_entropy(b2(*m))
        values.append(got)
        c.close(f"H_g({name})", got, want, 1.5e-3)
    c.true("rank order", all(a <= b + 1e-12 for a, b in zip(values, values[1:])))
    for n in (2, 3):
        f = Frame.of_size(n)
        meet = f.singleton(0)
        for p in f.singletons()[1:]:
            meet = meet & p
        got = generalized_entropy(make_granule(f, {meet: 1.0}))
        c.close(f"total paradox n={n}", got, -n * math.log(n), 1e-9)
    c.finish(capsys)


INTERVAL_ROWS = [
    # [lo, hi] -> (m(A & A^c), m(A), m(A^c), m(A | A^c))
    ((0.0, 0.0), (0.000, 0.000, 1.000, 0.000)),
    ((0.2, 0.2), (0.164, 0.118, 0.718, 0.000)),
    ((0.5, 0.5), (0.192, 0.404, 0.404, 0.000)),
    ((0.8, 0.8), (0.164, 0.718, 0.118, 0.000)),
    ((1.0, 1.0), (0.000, 1.000, 0.000, 0.000)),
    ((0.2, 0.4), (0.152, 0.124, 0.524, 0.200)),
    ((0.6, 0.8), (0.152, 0.524, 0.124, 0.200)),
    ((0.4, 0.6), (0.170, 0.315, 0.315, 0.200)),
    ((0.3, 0.9), (0.100, 0.250, 0.050, 0.600)),
    ((0.0, 1.0), (0.000, 0.000, 0.000, 1.000)),
]
MIRROR_PAIRS = [((0.2, 0.2), (0.8, 0.8)), ((0.0, 0.0), (1.0, 1.0)), ((0.2, 0.4), (0.6, 0.8))]


def test_criterion_11_interval_model(capsys):
    c = Checks(11)
    for (lo, hi), want in INTERVAL_ROWS:
        g = interval_to_bpa(lo, hi)
        for k, got, w in zip(("&", "A", "Ac", "|"), (g.inter, g.a, g.a_c, g.union), want):
            c.close(f"[{lo},{hi}] m({k})", got, w, 5e-3)
        upper = 2 * min(lo, 1 - hi)
        if upper > 0:
            grid = np.linspace(0.0, upper, 20001)
            best = max(oracles.hg_interval(x, lo, hi) for x in grid)
            c.true(f"[{lo},{hi}] beaten by grid",
                   oracles.hg_interval(solve_mstar(lo, hi), lo, hi) >= best - 1e-9)
    for a, b in MIRROR_PAIRS:
        ga, gb = interval_to_bpa(*a), interval_to_bpa(*b)
        c.true(f"mirror {a}/{b}", (ga.inter, ga.a, ga.a_c, ga.union)
               == (gb.inter, gb.a_c, gb.a, gb.union))
    c.finish(capsys)


def test_criterion_12_pignistic(capsys):
    c = Checks(12)
    m = {"t1": .3, "t2": .25, "t1 | t2": .2, "t1 & t2": .25}
    p = pignistic_general(make_granule(F2, m))
    c.true("n=2 P(t1)", p["t1"] == .3 + .2 / 2 + .25 / 2)
    c.true("n=2 P(t2)", p["t2"] == .25 + .2 / 2 + .25 / 2)
    w = pignistic_weights(F3.prop("(t1 & t2) | t3"))
    c.true(f"alpha weights {w}", w == [Fraction(4, 15), Fraction(4, 15), Fraction(7, 15)])
    for n in range(1, 5):
        for prop in enumerate_hyper_power_set(Frame.of_size(n))[1:]:
            if sum(pignistic_weights(prop)) != 1:
                c.true(f"alpha sum for {prop}", False)
    c.finish(capsys)


PROPERTY_SUITE = [
    props.test_bel_le_pl_hyper, props.test_bel_le_pl_powerset, props.test_superadditivity,
    props.test_bel_intersection_bounds_and_pl_union_bounds, props.test_mobius_round_trip,
    props.test_dempster_commutative, props.test_dempster_associative,
    props.test_dsm_commutative, props.test_dsm_associative, props.test_dsm_cell_sum_law,
    props.test_product_table_has_maximal_joint_entropy, props.test_crisp_connectives_are_boolean,
    props.test_subset_arithmetic_against_sampling, props.test_case2_degenerates_to_case1,
    props.test_case3_degenerates_to_case2,
]


def test_criterion_13_property_suites(capsys):
    c = Checks(13)
    for fn in PROPERTY_SUITE:
        try:
            fn()
        except Exception as exc:  # noqa: BLE001 - any failure is reported by name
            c.true(f"{fn.__name__}: {type(exc).__name__}", False)
    c.finish(capsys)
