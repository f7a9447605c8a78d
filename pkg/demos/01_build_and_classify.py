#!/usr/bin/env python3
"""Build double star matrices and see how the case classification works.

A double star digraph has two hub vertices u, v joined both ways, with m
pendants on u and n pendants on v. Its adjacency matrix is determined by
the center weights a, b and four pendant weight vectors x, y, z, w. Two
coupling products x^T y and z^T w split all such matrices into four
mutually exclusive classes with indices <=1, 2, 3 and 5.
"""

from starinv import DoubleStarSpec, RATIONAL, build, classify, structural_scalars
from starinv.field import scalar
from starinv.oracle import drazin_index

one = scalar(1)


def show(title, spec):
    print("=" * 64)
    print(title)
    print("=" * 64)
    m = build(spec)
    print(m)
    sc = structural_scalars(spec)
    label = classify(spec)
    print(f"couplings: x^T y = {sc.xty}, z^T w = {sc.ztw}, zeta = {sc.zeta}")
    print(f"classified as {label.kind.value} ({label.orientation.value})")
    print(f"index of the matrix: {drazin_index(m)}")
    print()


# both couplings nonzero: the group inverse exists
show(
    "group invertible (all weights 1, one pendant per star)",
    DoubleStarSpec(mode=RATIONAL, a=one, b=one, x=(one,), y=(one,), z=(one,), w=(one,)),
)

# both couplings zero: index jumps to 2
show(
    "both couplings vanish (x^T y = z^T w = 0)",
    DoubleStarSpec(
        mode=RATIONAL,
        a=one,
        b=one,
        x=(one, one),
        y=(one, scalar(-1)),
        z=(one, one),
        w=(one, scalar(-1)),
    ),
)

# one coupling zero, zeta = x^T y + ab nonzero: index 3
show(
    "one coupling vanishes, zeta = x^T y + ab = 2",
    DoubleStarSpec(
        mode=RATIONAL, a=one, b=one, x=(one,), y=(one,), z=(one, one), w=(one, scalar(-1))
    ),
)

# one coupling zero and zeta = 0: the matrix is nilpotent of index 5
spec = DoubleStarSpec(
    mode=RATIONAL, a=one, b=scalar(-1), x=(one,), y=(one,), z=(one, one), w=(one, scalar(-1))
)
show("one coupling vanishes and zeta = 0 (nilpotent)", spec)
m = build(spec)
print("powers of the nilpotent instance:")
for k in (4, 5):
    print(f"  M^{k} is zero: {(m ** k).is_zero()}")
