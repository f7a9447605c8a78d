import random

import pytest

from starinv import axioms, oracle
from starinv.axioms import CompositeKind
from starinv.doublestar import build
from starinv.field import GAUSSIAN_IDENTITY, RATIONAL, scalar
from starinv.matrix import Matrix, Permutation


def random_square(rng, n, lo=-3, hi=3):
    return Matrix(RATIONAL, [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])


def test_index_invertible():
    a = Matrix(RATIONAL, [[2, 1], [1, 1]])
    assert oracle.drazin_index(a) == 0


def test_index_by_case(case1_spec, case2_spec, case3_spec, group_spec):
    assert oracle.drazin_index(build(case1_spec)) == 2
    assert oracle.drazin_index(build(case2_spec)) == 3
    assert oracle.drazin_index(build(case3_spec)) == 5
    assert oracle.drazin_index(build(group_spec)) <= 1


def test_drazin_nilpotent_is_zero():
    n = Matrix(RATIONAL, [[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    assert oracle.drazin_inverse(n).is_zero()


def test_drazin_case3_zero(case3_spec):
    assert oracle.drazin_inverse(build(case3_spec)).is_zero()


def test_drazin_properties_random():
    rng = random.Random(42)
    for _ in range(20):
        a = random_square(rng, rng.randint(1, 8), -2, 2)
        k = oracle.drazin_index(a)
        x = oracle.drazin_inverse(a)
        assert a @ x == x @ a
        assert (a ** (k + 1)) @ x == a**k
        assert x @ a @ x == x


def test_group_exists_iff_small_index(case1_spec, group_spec):
    assert not oracle.group_inverse(build(case1_spec)).exists
    res = oracle.group_inverse(build(group_spec))
    assert res.exists
    expected = Matrix(
        RATIONAL, [[0, 1, 0, 0], [1, 0, 0, -1], [0, 0, 0, 1], [0, -1, 1, 0]]
    )
    assert res.value == expected


def test_group_of_identity():
    i3 = Matrix.identity(RATIONAL, 3)
    assert oracle.group_inverse(i3).value == i3


def test_one_three_counterexample():
    a = Matrix(GAUSSIAN_IDENTITY, [[scalar(1)], [scalar(0, 1)]])
    res = oracle.one_three_inverse(a)
    assert not res.exists
    assert res.witness


def test_one_three_identity():
    i2 = Matrix.identity(RATIONAL, 2)
    assert oracle.one_three_inverse(i2).value == i2
    assert oracle.one_four_inverse(i2).value == i2


def test_one_three_of_squared_case1(case1_spec):
    m2 = build(case1_spec) ** 2
    assert m2.rank() == 2
    assert (m2.star() @ m2).rank() == 2
    res = oracle.one_three_inverse(m2)
    assert res.exists
    assert axioms.check_penrose(m2, res.value, {1, 3})


def test_moore_penrose_identity():
    i2 = Matrix.identity(RATIONAL, 2)
    assert oracle.moore_penrose(i2).value == i2


def test_moore_penrose_counterexample():
    a = Matrix(GAUSSIAN_IDENTITY, [[scalar(1)], [scalar(0, 1)]])
    assert not oracle.moore_penrose(a).exists


def test_moore_penrose_case1_entry(case1_spec):
    res = oracle.moore_penrose(build(case1_spec))
    assert res.exists
    assert str(res.value[1, 0]) == "1/2"
    assert axioms.check_penrose(build(case1_spec), res.value)


def test_moore_penrose_random_rationals():
    rng = random.Random(5)
    for _ in range(15):
        rows, cols = rng.randint(1, 4), rng.randint(1, 4)
        a = Matrix(
            RATIONAL,
            [[rng.randint(-2, 2) for _ in range(cols)] for _ in range(rows)],
        )
        res = oracle.moore_penrose(a)
        assert res.exists  # over the rationals the Gram ranks never collapse
        assert axioms.check_penrose(a, res.value)


def test_core_ep_invertible_is_inverse():
    a = Matrix(RATIONAL, [[2, 1], [1, 1]])
    inv = a.inverse()
    assert oracle.core_ep(a, 0).value == inv
    assert oracle.core_ep(a, 1).value == inv
    assert oracle.dual_core_ep(a, 1).value == inv


def test_core_ep_case3_zero(case3_spec):
    m = build(case3_spec)
    res = oracle.core_ep(m, 5)
    assert res.exists and res.value.is_zero()
    res = oracle.dual_core_ep(m, 5)
    assert res.exists and res.value.is_zero()


def test_core_ep_case1_entry(case1_spec):
    res = oracle.core_ep(build(case1_spec), 2)
    assert res.exists
    assert str(res.value[0, 1]) == "1/3"


def test_core_ep_rejects_small_exponent(case1_spec):
    with pytest.raises(oracle.IndexTooSmall):
        oracle.core_ep(build(case1_spec), 1)


def test_core_ep_independent_of_exponent(case2_spec):
    m = build(case2_spec)
    assert oracle.core_ep(m, 3).value == oracle.core_ep(m, 4).value
    assert oracle.dual_core_ep(m, 3).value == oracle.dual_core_ep(m, 5).value


def test_core_ep_uniqueness_under_relabelling(case1_spec, case2_spec):
    rng = random.Random(9)
    for spec in (case1_spec, case2_spec):
        m = build(spec)
        x = oracle.core_ep(m)
        image = list(range(m.rows))
        rng.shuffle(image)
        p = Permutation(tuple(image))
        y = oracle.core_ep(p.conjugate(m))
        assert y.exists == x.exists
        assert p.inverse().conjugate(y.value) == x.value


def test_core_ep_permutation_invariance(case2_spec):
    m = build(case2_spec)
    x = oracle.dual_core_ep(m).value
    p = Permutation((2, 0, 1, 3, 4))
    assert axioms.check_core_ep(p.conjugate(m), p.conjugate(x), oracle.drazin_index(m), dual=True)


def test_composite_invertible_all_equal_inverse():
    a = Matrix(RATIONAL, [[2, 1], [1, 1]])
    inv = a.inverse()
    for kind in CompositeKind:
        assert oracle.composite(a, kind).value == inv


def test_composite_case3_zero(case3_spec):
    m = build(case3_spec)
    for kind in CompositeKind:
        res = oracle.composite(m, kind)
        assert res.exists and res.value.is_zero()


def test_composite_mpcep_case1(case1_spec):
    res = oracle.composite(build(case1_spec), CompositeKind.MPCEP)
    assert res.exists
    assert str(res.value[0, 1]) == "1/3"
    for i in (1, 2, 4, 5):  # pendant rows vanish
        assert all(res.value[i, j].is_zero() for j in range(6))
