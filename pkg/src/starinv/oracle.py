"""Generalized inverses computed from their definitions alone.

Nothing in this module assumes any structure of the input matrix: existence
is decided by rank tests, values are assembled from inner inverses, and
every construction whose correctness is not self-evident is post-verified
against its defining equations. Because each of these inverses is unique
when it exists, the choice of inner inverse along the way is immaterial.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import axioms
from .axioms import CompositeKind
from .matrix import DimensionMismatch, Matrix


class VerificationError(RuntimeError):
    """An exact construction failed its own axioms; this signals a bug."""


class IndexTooSmall(ValueError):
    pass


@dataclass(frozen=True)
class OracleResult:
    exists: bool
    value: Optional[Matrix]
    witness: Optional[str] = None

    def __post_init__(self):
        assert self.exists == (self.value is not None)


def _require_square(a: Matrix):
    if not a.is_square():
        raise DimensionMismatch("a square matrix is required")


def drazin_index(a: Matrix) -> int:
    """Smallest k with rank(A^k) = rank(A^{k+1}); 0 for invertible A."""
    _require_square(a)
    power = Matrix.identity(a.mode, a.rows)
    prev_rank = a.rows
    for k in range(a.rows + 1):
        power = power @ a
        r = power.rank()
        if r == prev_rank:
            return k
        prev_rank = r
    raise AssertionError("rank chain failed to stabilize")  # pragma: no cover


def drazin_inverse(a: Matrix) -> Matrix:
    """The Drazin inverse, via A^k (A^{2k+1})^- A^k at k = index."""
    k = drazin_index(a)
    ak = a**k
    x = ak @ (a ** (2 * k + 1)).inner_inverse() @ ak
    verdict = axioms.check_drazin(a, x, k)
    if not verdict:
        raise VerificationError(f"drazin construction failed: {verdict.failures}")
    return x


def group_inverse(a: Matrix) -> OracleResult:
    """Exists exactly when the index is at most one."""
    k = drazin_index(a)
    if k > 1:
        return OracleResult(False, None, f"index {k} > 1")
    return OracleResult(True, drazin_inverse(a))


def one_three_inverse(a: Matrix) -> OracleResult:
    """A (1,3)-inverse; exists iff rank(A*A) = rank(A)."""
    gram = a.star() @ a
    if gram.rank() != a.rank():
        return OracleResult(False, None, "rank(A*A) < rank(A)")
    x = gram.inner_inverse() @ a.star()
    verdict = axioms.check_penrose(a, x, {1, 3})
    if not verdict:
        raise VerificationError(f"(1,3) construction failed: {verdict.failures}")
    return OracleResult(True, x)


def one_four_inverse(a: Matrix) -> OracleResult:
    """A (1,4)-inverse; exists iff rank(AA*) = rank(A)."""
    gram = a @ a.star()
    if gram.rank() != a.rank():
        return OracleResult(False, None, "rank(AA*) < rank(A)")
    x = a.star() @ gram.inner_inverse()
    verdict = axioms.check_penrose(a, x, {1, 4})
    if not verdict:
        raise VerificationError(f"(1,4) construction failed: {verdict.failures}")
    return OracleResult(True, x)


def moore_penrose(a: Matrix) -> OracleResult:
    """A†, composed as A^{(1,4)} A A^{(1,3)} when both halves exist."""
    left = one_four_inverse(a)
    if not left.exists:
        return OracleResult(False, None, left.witness)
    right = one_three_inverse(a)
    if not right.exists:
        return OracleResult(False, None, right.witness)
    x = left.value @ a @ right.value
    verdict = axioms.check_penrose(a, x, {1, 2, 3, 4})
    if not verdict:
        raise VerificationError(f"Moore-Penrose composition failed: {verdict.failures}")
    return OracleResult(True, x)


def core_ep(a: Matrix, m: Optional[int] = None) -> OracleResult:
    """The core EP inverse A^D A^m (A^m)^{(1,3)} for any m >= index."""
    k = drazin_index(a)
    if m is None:
        m = k
    if m < k:
        raise IndexTooSmall(f"m = {m} is below the index {k}")
    am = a**m
    half = one_three_inverse(am)
    if not half.exists:
        return OracleResult(False, None, f"A^{m} has no (1,3)-inverse")
    x = drazin_inverse(a) @ am @ half.value
    verdict = axioms.check_core_ep(a, x, m, dual=False)
    if not verdict:
        raise VerificationError(f"core EP construction failed: {verdict.failures}")
    return OracleResult(True, x)


def dual_core_ep(a: Matrix, m: Optional[int] = None) -> OracleResult:
    """The dual core EP inverse (A^m)^{(1,4)} A^m A^D for any m >= index."""
    k = drazin_index(a)
    if m is None:
        m = k
    if m < k:
        raise IndexTooSmall(f"m = {m} is below the index {k}")
    am = a**m
    half = one_four_inverse(am)
    if not half.exists:
        return OracleResult(False, None, f"A^{m} has no (1,4)-inverse")
    x = half.value @ am @ drazin_inverse(a)
    verdict = axioms.check_core_ep(a, x, m, dual=True)
    if not verdict:
        raise VerificationError(f"dual core EP construction failed: {verdict.failures}")
    return OracleResult(True, x)


def composite(a: Matrix, kind: CompositeKind) -> OracleResult:
    """One of the four outer inverses combining A† with a core-EP-type inverse.

    Existence is joint existence of the two constituents; the value is the
    corresponding product and is checked against the kind's defining
    equations before being returned.
    """
    mp = moore_penrose(a)
    if not mp.exists:
        return OracleResult(False, None, f"no Moore-Penrose inverse: {mp.witness}")
    if kind in (CompositeKind.MPCEP, CompositeKind.GDC):
        cep = core_ep(a)
        if not cep.exists:
            return OracleResult(False, None, cep.witness)
    else:
        cep = dual_core_ep(a)
        if not cep.exists:
            return OracleResult(False, None, cep.witness)
    if kind is CompositeKind.MPCEP:
        x = mp.value @ a @ cep.value
    elif kind is CompositeKind.CEPMP:
        x = cep.value @ a @ mp.value
    elif kind is CompositeKind.GDC:
        x = mp.value @ cep.value @ a
    else:
        x = a @ cep.value @ mp.value
    verdict = axioms.check_composite(a, x, kind, mp.value, cep.value)
    if not verdict:
        raise VerificationError(f"{kind.value} composition failed: {verdict.failures}")
    return OracleResult(True, x)
