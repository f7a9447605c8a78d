"""Seeded random generation of double star specs landing in a chosen case.

Entries are drawn from a small pool of units; a required zero coupling is
manufactured by solving for the final entry of the second vector instead of
waiting for rejection sampling to hit it, and the nilpotent case pins the
center weight b to -x^T y / a. Draws whose solved entry would be zero are
rejected and retried.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .doublestar import CaseKind, DoubleStarSpec
from .field import FieldBase, FieldMode, RATIONAL, Scalar

_RATIONAL_POOL = tuple(
    Scalar(Fraction(p), Fraction(0)) for p in (1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 2))
)
_GAUSSIAN_EXTRA = tuple(
    Scalar(Fraction(p), Fraction(q))
    for p, q in ((0, 1), (0, -1), (1, 1), (1, -1), (-1, 1), (-1, -1))
)

_MAX_DRAWS = 10_000


class UnsatisfiableError(ValueError):
    """The requested case cannot be realized within the size bounds."""


def _pool(mode: FieldMode) -> tuple:
    if mode.base is FieldBase.GAUSSIAN_RATIONALS:
        return _RATIONAL_POOL + _GAUSSIAN_EXTRA
    return _RATIONAL_POOL


def _vector(rng: random.Random, pool, k: int) -> list:
    return [rng.choice(pool) for _ in range(k)]


def _dot(u, v) -> Scalar:
    return sum((a * b for a, b in zip(u, v)), Scalar(Fraction(0), Fraction(0)))


def _coupled_pair(rng, pool, k, want_zero):
    """Vectors (first, second) of length k with first^T second zero or not."""
    first = _vector(rng, pool, k)
    if not want_zero:
        second = _vector(rng, pool, k)
        if _dot(first, second).is_zero():
            return None
        return first, second
    if k < 2:
        return None
    second = _vector(rng, pool, k - 1)
    head = _dot(first[:-1], second)
    if head.is_zero():
        return None  # solved entry would be zero
    second.append(-head / first[-1])
    return first, second


def random_spec(
    case: CaseKind,
    rng: random.Random,
    mode: FieldMode = RATIONAL,
    max_size: int = 4,
) -> DoubleStarSpec:
    """A spec whose classification kind equals ``case``; deterministic per rng."""
    pool = _pool(mode)
    lo_m = 2 if case is CaseKind.CASE_I else 1
    lo_n = 1 if case is CaseKind.GROUP_INVERTIBLE else 2
    if max_size < lo_m or max_size < lo_n:
        raise UnsatisfiableError(
            f"{case.value} needs m >= {lo_m} and n >= {lo_n}, "
            f"impossible with max size {max_size}"
        )
    zero_xy = case is CaseKind.CASE_I
    zero_zw = case is not CaseKind.GROUP_INVERTIBLE
    for _ in range(_MAX_DRAWS):
        m = rng.randint(lo_m, max_size)
        n = rng.randint(lo_n, max_size)
        xy = _coupled_pair(rng, pool, m, zero_xy)
        if xy is None:
            continue
        zw = _coupled_pair(rng, pool, n, zero_zw)
        if zw is None:
            continue
        x, y = xy
        z, w = zw
        a = rng.choice(pool)
        if case is CaseKind.CASE_III:
            b = -_dot(x, y) / a  # forces zeta = 0; nonzero since x^T y != 0
        else:
            b = rng.choice(pool)
            if case is CaseKind.CASE_II and (_dot(x, y) + a * b).is_zero():
                continue
        return DoubleStarSpec(mode=mode, a=a, b=b, x=tuple(x), y=tuple(y), z=tuple(z), w=tuple(w))
    raise UnsatisfiableError(
        f"could not realize {case.value} within {_MAX_DRAWS} draws"
    )
