"""Acceptance suite: exact, zero-tolerance checks of every advertised property.

Each test covers one acceptance criterion and prints a single PASS line on
success (visible with ``pytest -s``); any assertion failure marks the
criterion as failed.
"""

import random
import time

import pytest

from starinv import axioms, oracle
from starinv.axioms import CompositeKind
from starinv.doublestar import (
    CaseKind,
    DoubleStarSpec,
    InverseKind,
    build,
    cepmp_closed_form,
    classify,
    closed_form,
    core_ep_closed_form,
    drazin_closed_form,
    dual_core_ep_closed_form,
    existence_table,
    gc_closed_form,
    gdc_closed_form,
    mirror,
    moore_penrose_closed_form,
    mpcep_closed_form,
    structural_scalars,
)
from starinv.field import (
    GAUSSIAN_CONJUGATION,
    GAUSSIAN_IDENTITY,
    ONE,
    RATIONAL,
    ZERO,
    scalar,
)
from starinv.generate import random_spec
from starinv.matrix import Matrix

CASES = (
    CaseKind.GROUP_INVERTIBLE,
    CaseKind.CASE_I,
    CaseKind.CASE_II,
    CaseKind.CASE_III,
)

CASE_INDEX = {
    CaseKind.CASE_I: 2,
    CaseKind.CASE_II: 3,
    CaseKind.CASE_III: 5,
}


def generate(case, count, seed, mode=RATIONAL):
    rng = random.Random(seed)
    return [random_spec(case, rng, mode, max_size=4) for _ in range(count)]


def report(criterion, text):
    print(f"ACCEPTANCE {criterion}: {text} ... PASS")


def test_criterion_1_index_classification():
    start = time.time()
    for case in CASES:
        for spec in generate(case, 100, seed=10 + len(case.value)):
            idx = oracle.drazin_index(build(spec))
            if case is CaseKind.GROUP_INVERTIBLE:
                assert idx <= 1
            else:
                assert idx == CASE_INDEX[case]
    elapsed = time.time() - start
    assert elapsed < 10.0, f"index sweep took {elapsed:.1f}s"
    report(1, f"index per case on 100 specs x 4 cases in {elapsed:.1f}s")


def test_criterion_2_drazin_closed_forms():
    for case in CASES:
        for spec in generate(case, 100, seed=20 + len(case.value)):
            m = build(spec)
            cf = drazin_closed_form(spec).value
            ref = oracle.drazin_inverse(m)
            assert cf == ref
            k = oracle.drazin_index(m)
            assert axioms.check_drazin(m, cf, k)
            assert axioms.check_drazin(m, ref, k)
    report(2, "drazin closed form = oracle on 100 specs x 4 cases")


def degenerate_gram_specs(seed, per_slot=10):
    """Specs over Q(i)/identity with exactly one Gram scalar forced to zero."""
    rng = random.Random(seed)
    degenerate = (ONE, scalar(0, 1))  # 1^2 + i^2 = 0 under the identity involution
    out = []
    for slot in ("x", "y", "z", "w"):
        for _ in range(per_slot):
            base = random_spec(
                CaseKind.GROUP_INVERTIBLE, rng, GAUSSIAN_IDENTITY, max_size=3
            )
            fields = dict(mode=base.mode, a=base.a, b=base.b,
                          x=base.x, y=base.y, z=base.z, w=base.w)
            partner = {"x": "y", "y": "x", "z": "w", "w": "z"}[slot]
            fields[slot] = degenerate
            fields[partner] = (fields[partner] + fields[partner])[:2]
            out.append((slot, DoubleStarSpec(**fields)))
    return out


def test_criterion_3_moore_penrose():
    checked = 0
    for case, mode in zip(
        CASES, (RATIONAL, GAUSSIAN_IDENTITY, GAUSSIAN_CONJUGATION, RATIONAL)
    ):
        for spec in generate(case, 40, seed=30 + len(case.value), mode=mode):
            m = build(spec)
            cf = moore_penrose_closed_form(spec)
            ref = oracle.moore_penrose(m)
            assert cf.exists == ref.exists
            if cf.exists:
                assert cf.value == ref.value
                assert axioms.check_penrose(m, cf.value)
            checked += 1
    gram_names = {"x": "s", "y": "u", "z": "t", "w": "v"}
    for slot, spec in degenerate_gram_specs(seed=31):
        m = build(spec)
        cf = moore_penrose_closed_form(spec)
        ref = oracle.moore_penrose(m)
        assert not cf.exists
        assert not ref.exists
        failing = [c.name for c in cf.criteria if not c.nonzero]
        assert gram_names[slot] in failing
        checked += 1
    assert checked == 200
    report(3, "moore-penrose verdicts and values on 200 specs incl. degenerate Gram sums")


def test_criterion_4_core_ep():
    for case in (CaseKind.CASE_I, CaseKind.CASE_II):
        for spec in generate(case, 100, seed=40 + len(case.value)):
            m = build(spec)
            cf = core_ep_closed_form(spec)
            ref = oracle.core_ep(m)
            assert cf.exists == ref.exists
            if cf.exists:
                assert cf.value == ref.value
            dcf = dual_core_ep_closed_form(spec)
            dref = oracle.dual_core_ep(m)
            assert dcf.exists == dref.exists
            if dcf.exists:
                assert dcf.value == dref.value

    # engineered degenerate instance: r = 0 while the Gram scalars survive
    degenerate = DoubleStarSpec(
        mode=GAUSSIAN_IDENTITY,
        a=scalar(0, 1),
        b=ONE,
        x=(ONE, ONE),
        y=(ONE, scalar(-1)),
        z=(scalar(4), scalar(-3)),
        w=(scalar("3/5"), scalar("4/5")),
    )
    sc = structural_scalars(degenerate)
    assert sc.r == ZERO
    cf = core_ep_closed_form(degenerate)
    assert not cf.exists
    assert not oracle.core_ep(build(degenerate)).exists
    assert moore_penrose_closed_form(degenerate).exists

    for spec in generate(CaseKind.CASE_III, 25, seed=43):
        m = build(spec)
        for dual in (False, True):
            fn = dual_core_ep_closed_form if dual else core_ep_closed_form
            rep = fn(spec)
            assert rep.exists and rep.value.is_zero()
            assert axioms.check_core_ep(m, rep.value, 5, dual=dual)
    report(4, "core EP existence and values vs rank-test oracle, incl. r=0 instance")


def test_criterion_5_composites():
    kinds = (
        (InverseKind.MPCEP, CompositeKind.MPCEP, mpcep_closed_form),
        (InverseKind.CEPMP, CompositeKind.CEPMP, cepmp_closed_form),
        (InverseKind.GDC, CompositeKind.GDC, gdc_closed_form),
        (InverseKind.GC, CompositeKind.GC, gc_closed_form),
    )
    for case in (CaseKind.CASE_I, CaseKind.CASE_II):
        for spec in generate(case, 100, seed=50 + len(case.value)):
            m = build(spec)
            mp = oracle.moore_penrose(m)
            cep = oracle.core_ep(m)
            dcep = oracle.dual_core_ep(m)
            compositions = {
                CompositeKind.MPCEP: (cep, lambda: mp.value @ m @ cep.value),
                CompositeKind.CEPMP: (dcep, lambda: dcep.value @ m @ mp.value),
                CompositeKind.GDC: (cep, lambda: mp.value @ cep.value @ m),
                CompositeKind.GC: (dcep, lambda: m @ dcep.value @ mp.value),
            }
            for kind, ckind, fn in kinds:
                rep = fn(spec)
                constituent, make = compositions[ckind]
                should_exist = mp.exists and constituent.exists
                assert rep.exists == should_exist, kind
                if rep.exists:
                    assert rep.value == make(), kind
                    assert axioms.check_composite(
                        m, rep.value, ckind, mp.value, constituent.value
                    )
            a, b = mpcep_closed_form(spec), cepmp_closed_form(spec)
            if a.exists and b.exists:
                assert a.value != b.value
            a, b = gdc_closed_form(spec), gc_closed_form(spec)
            if a.exists and b.exists:
                assert a.value != b.value
    report(5, "composites equal their defining compositions; never coincide")


EXPECTED_CELLS = {
    InverseKind.MOORE_PENROSE: {
        CaseKind.CASE_I: ("s", "u", "t", "v"),
        CaseKind.CASE_II: ("s", "u", "t", "v"),
    },
    InverseKind.CORE_EP: {
        CaseKind.CASE_I: ("r", "h"),
        CaseKind.CASE_II: ("h", "beta"),
    },
    InverseKind.DUAL_CORE_EP: {
        CaseKind.CASE_I: ("p", "q"),
        CaseKind.CASE_II: ("q", "alpha"),
    },
    InverseKind.MPCEP: {
        CaseKind.CASE_I: ("s", "u", "t", "v", "r", "h"),
        CaseKind.CASE_II: ("s", "u", "t", "v", "h", "beta"),
    },
    InverseKind.CEPMP: {
        CaseKind.CASE_I: ("s", "u", "t", "v", "p", "q"),
        CaseKind.CASE_II: ("s", "u", "t", "v", "q", "alpha"),
    },
    InverseKind.GDC: {
        CaseKind.CASE_I: ("s", "u", "t", "v", "r", "h"),
        CaseKind.CASE_II: ("s", "u", "t", "v", "h", "beta"),
    },
    InverseKind.GC: {
        CaseKind.CASE_I: ("s", "u", "t", "v", "p", "q"),
        CaseKind.CASE_II: ("s", "u", "t", "v", "q", "alpha"),
    },
}


def recomputed_scalars(spec):
    """The structural scalars, recomputed from their definitions inline."""
    inv = spec.mode.involve
    dot = lambda u, v: sum((a * b for a, b in zip(u, v)), ZERO)
    conj = lambda vec: [inv(e) for e in vec]
    s = dot(conj(spec.x), spec.x)
    t = dot(conj(spec.z), spec.z)
    u = dot(conj(spec.y), spec.y)
    v = dot(conj(spec.w), spec.w)
    zeta = dot(spec.x, spec.y) + spec.a * spec.b
    return {
        "s": s,
        "t": t,
        "u": u,
        "v": v,
        "r": spec.a * inv(spec.a) + v,
        "h": spec.b * inv(spec.b) + u,
        "p": spec.b * inv(spec.b) + t,
        "q": spec.a * inv(spec.a) + s,
        "zeta": zeta,
        "beta": zeta * inv(zeta) + spec.b * inv(spec.b) * v,
        "alpha": zeta * inv(zeta) + spec.a * inv(spec.a) * t,
    }


def test_criterion_6_existence_table():
    for case in (CaseKind.CASE_I, CaseKind.CASE_II):
        for spec in generate(case, 100, seed=60 + len(case.value)):
            reference = recomputed_scalars(spec)
            rows = {row.kind: row for row in existence_table(spec)}
            assert len(rows) == 7
            for kind, row in rows.items():
                expected_names = EXPECTED_CELLS[kind][case]
                assert tuple(c.name for c in row.criteria) == expected_names
                expected_exists = all(
                    not reference[name].is_zero() for name in expected_names
                )
                assert row.exists == expected_exists
                assert row.exists == closed_form(spec, kind).exists
    report(6, "existence table matches the expected cells on 100 specs x 2 cases")


def test_criterion_7_invariance():
    rng = random.Random(70)
    for case in CASES:
        spec = random_spec(case, rng, max_size=4)
        label = classify(spec)
        verdicts = {kind: closed_form(spec, kind).exists for kind in InverseKind}
        for _ in range(20):
            xp = list(range(spec.m))
            zp = list(range(spec.n))
            rng.shuffle(xp)
            rng.shuffle(zp)
            relabelled = DoubleStarSpec(
                mode=spec.mode,
                a=spec.a,
                b=spec.b,
                x=tuple(spec.x[i] for i in xp),
                y=tuple(spec.y[i] for i in xp),
                z=tuple(spec.z[j] for j in zp),
                w=tuple(spec.w[j] for j in zp),
            )
            assert classify(relabelled).kind is label.kind
            for kind in InverseKind:
                assert closed_form(relabelled, kind).exists == verdicts[kind]
        mirrored, _ = mirror(spec)
        assert classify(mirrored).kind is label.kind
        for kind in InverseKind:
            assert closed_form(mirrored, kind).exists == verdicts[kind]
    report(7, "verdicts invariant under 20 pendant relabellings and the star swap")


def test_criterion_8_counterexample_regression():
    a = Matrix(GAUSSIAN_IDENTITY, [["1"], ["i"]])
    assert a.rank() == 1
    assert (a.star() @ a).rank() == 0
    assert not oracle.one_three_inverse(a).exists
    assert not oracle.moore_penrose(a).exists
    report(8, "[1; i] over Q(i)/identity has no (1,3)-inverse and no Moore-Penrose inverse")
