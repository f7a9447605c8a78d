#!/usr/bin/env python3
"""Export the weighted digraph to DOT and check the star-swap symmetry.

Swapping the two stars relabels the vertices; the matrices before and
after are conjugate by a permutation, so every inverse of one is the
conjugated inverse of the other. The closed forms exploit this to reduce
the pattern x^T y = 0 != z^T w to its mirror image.
"""

import random

from starinv import InverseKind, build, classify, closed_form, mirror, perm_similar, to_dot
from starinv.doublestar import CaseKind
from starinv.generate import random_spec

rng = random.Random(7)
spec = random_spec(CaseKind.CASE_II, rng, max_size=2)

print(to_dot(spec))

mirrored, p = mirror(spec)
print(f"mirror permutation image: {p.image}")
print(f"conjugation witness: perm_similar(M, p) == build(mirror): "
      f"{perm_similar(build(spec), p) == build(mirrored)}")

label, mlabel = classify(spec), classify(mirrored)
print(f"original orientation: {label.kind.value}/{label.orientation.value}, "
      f"mirrored: {mlabel.kind.value}/{mlabel.orientation.value}")

drazin = closed_form(spec, InverseKind.DRAZIN).value
mirrored_drazin = closed_form(mirrored, InverseKind.DRAZIN).value
print(f"drazin inverse commutes with the swap: {p.conjugate(drazin) == mirrored_drazin}")
