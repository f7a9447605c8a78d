from fractions import Fraction

import pytest

from starinv import DoubleStarSpec, GAUSSIAN_IDENTITY, RATIONAL
from starinv.field import scalar

ONE = scalar(1)
NEG = scalar(-1)


@pytest.fixture
def case1_spec():
    # both couplings vanish; index 2
    return DoubleStarSpec(
        mode=RATIONAL,
        a=ONE,
        b=ONE,
        x=(ONE, ONE),
        y=(ONE, NEG),
        z=(ONE, ONE),
        w=(ONE, NEG),
    )


@pytest.fixture
def case2_spec():
    # x^T y = 1, z^T w = 0, zeta = 2; index 3
    return DoubleStarSpec(
        mode=RATIONAL,
        a=ONE,
        b=ONE,
        x=(ONE,),
        y=(ONE,),
        z=(ONE, ONE),
        w=(ONE, NEG),
    )


@pytest.fixture
def case3_spec():
    # x^T y = 1, z^T w = 0, zeta = 0; nilpotent of index 5
    return DoubleStarSpec(
        mode=RATIONAL,
        a=ONE,
        b=NEG,
        x=(ONE,),
        y=(ONE,),
        z=(ONE, ONE),
        w=(ONE, NEG),
    )


@pytest.fixture
def group_spec():
    # both couplings nonzero; the 4x4 all-ones-weights instance
    return DoubleStarSpec(
        mode=RATIONAL, a=ONE, b=ONE, x=(ONE,), y=(ONE,), z=(ONE,), w=(ONE,)
    )


@pytest.fixture
def degenerate_r_spec():
    # over Q(i) with the identity involution: a*a = -1 cancels w*w = 1,
    # so r = 0 while s, u, t, v stay nonzero
    return DoubleStarSpec(
        mode=GAUSSIAN_IDENTITY,
        a=scalar(0, 1),
        b=ONE,
        x=(ONE, ONE),
        y=(ONE, NEG),
        z=(scalar(4), scalar(-3)),
        w=(scalar(Fraction(3, 5)), scalar(Fraction(4, 5))),
    )
