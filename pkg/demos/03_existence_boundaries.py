#!/usr/bin/env python3
"""Where generalized inverses stop existing, and how the reports explain it.

Over the Gaussian rationals with the identity involution (matrix
transposition, no conjugation), sums like x^T x can vanish for nonzero x.
That collapses Gram ranks and kills off inverses that always exist over
the reals or under true conjugation. Every report carries the scalar
criteria it evaluated, so a missing inverse names its culprit.
"""

from starinv import (
    DoubleStarSpec,
    GAUSSIAN_IDENTITY,
    InverseKind,
    Matrix,
    build,
    closed_form,
    existence_table,
    structural_scalars,
)
from starinv.field import scalar
from starinv import oracle

one = scalar(1)

# the classic 2x1 counterexample: [1; i] with plain transposition
a = Matrix(GAUSSIAN_IDENTITY, [["1"], ["i"]])
print("A = [1; i] over Q(i) with the identity involution")
print(f"  rank(A) = {a.rank()}, rank(A^T A) = {(a.star() @ a).rank()}")
print(f"  (1,3)-inverse exists: {oracle.one_three_inverse(a).exists}")
print(f"  moore-penrose exists: {oracle.moore_penrose(a).exists}")
print()

# a double star where r = a^2 + w^T w = -1 + 1 = 0 but the Gram scalars survive
spec = DoubleStarSpec(
    mode=GAUSSIAN_IDENTITY,
    a=scalar(0, 1),
    b=one,
    x=(one, one),
    y=(one, scalar(-1)),
    z=(scalar(4), scalar(-3)),
    w=(scalar("3/5"), scalar("4/5")),
)
sc = structural_scalars(spec)
print("degenerate double star: a = i, w on the unit circle")
print(f"  r = a*involve(a) + w^*w = {sc.r}   (s={sc.s}, u={sc.u}, t={sc.t}, v={sc.v})")
print()

print("existence table (cases with one or both couplings zero):")
for row in existence_table(spec):
    crits = ", ".join(f"{c.name}={c.value}" for c in row.criteria)
    print(f"  {row.kind.value:<14} exists={str(row.exists):<5}  [{crits}]")
print()

report = closed_form(spec, InverseKind.CORE_EP)
failing = [c.name for c in report.criteria if not c.nonzero]
print(f"core EP report: exists={report.exists}, failing criteria: {failing}")
print(f"rank-test route agrees: {oracle.core_ep(build(spec)).exists == report.exists}")
print(f"moore-penrose still exists: {closed_form(spec, InverseKind.MOORE_PENROSE).exists}")
