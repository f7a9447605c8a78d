"""Exact checkers for the defining equation systems of each inverse kind.

Every check compares matrices entry by entry with no tolerance; a failure
reports the equation label and the first position where the two sides
differ. These checkers are the assertion vocabulary of the test suite and
the post-verification layer of the general-purpose constructions.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .matrix import DimensionMismatch, Matrix


class CompositeKind(Enum):
    MPCEP = "mpcep"
    CEPMP = "cepmp"
    GDC = "gdc"
    GC = "gc"


@dataclass(frozen=True)
class AxiomVerdict:
    system: str
    satisfied: bool
    failures: tuple

    def __bool__(self):
        return self.satisfied


def _first_difference(a: Matrix, b: Matrix):
    if a.shape != b.shape:
        raise DimensionMismatch(f"cannot compare {a.shape} with {b.shape}")
    for i in range(a.rows):
        for j in range(a.cols):
            if a[i, j] != b[i, j]:
                return (i, j)
    return None


def _collect(system: str, equations) -> AxiomVerdict:
    failures = []
    for label, lhs, rhs in equations:
        pos = _first_difference(lhs, rhs)
        if pos is not None:
            failures.append((label, pos))
    return AxiomVerdict(system, not failures, tuple(failures))


def check_penrose(a: Matrix, x: Matrix, subset=frozenset({1, 2, 3, 4})) -> AxiomVerdict:
    """Check the requested subset of the four defining equations of A†."""
    if a.rows != x.cols or a.cols != x.rows:
        raise DimensionMismatch("X must have the transposed shape of A")
    eqs = []
    if 1 in subset:
        eqs.append(("AXA=A", a @ x @ a, a))
    if 2 in subset:
        eqs.append(("XAX=X", x @ a @ x, x))
    if 3 in subset:
        ax = a @ x
        eqs.append(("(AX)*=AX", ax.star(), ax))
    if 4 in subset:
        xa = x @ a
        eqs.append(("(XA)*=XA", xa.star(), xa))
    return _collect("penrose" + "".join(str(k) for k in sorted(subset)), eqs)


def check_drazin(a: Matrix, x: Matrix, k: int) -> AxiomVerdict:
    """Check A^{k+1} X = A^k, X A X = X and A X = X A."""
    if not a.is_square() or a.shape != x.shape:
        raise DimensionMismatch("A and X must be square of the same order")
    ak = a**k
    return _collect(
        "drazin",
        [
            ("A^(k+1)X=A^k", ak @ a @ x, ak),
            ("XAX=X", x @ a @ x, x),
            ("AX=XA", a @ x, x @ a),
        ],
    )


def check_core_ep(a: Matrix, x: Matrix, m: int, dual: bool = False) -> AxiomVerdict:
    """Check the three-equation system at exponent m, or its dual."""
    if not a.is_square() or a.shape != x.shape:
        raise DimensionMismatch("A and X must be square of the same order")
    am = a**m
    if dual:
        xa = x @ a
        eqs = [
            ("A^(m+1)X=A^m", a @ am @ x, am),
            ("X^2A=X", x @ x @ a, x),
            ("(XA)*=XA", xa.star(), xa),
        ]
        return _collect("dual_core_ep", eqs)
    ax = a @ x
    eqs = [
        ("XA^(m+1)=A^m", x @ am @ a, am),
        ("AX^2=X", a @ x @ x, x),
        ("(AX)*=AX", ax.star(), ax),
    ]
    return _collect("core_ep", eqs)


def check_composite(
    a: Matrix,
    x: Matrix,
    kind: CompositeKind,
    adag: Matrix,
    acep: Matrix,
) -> AxiomVerdict:
    """Check the defining system of a composite inverse.

    ``adag`` is the Moore-Penrose inverse of A and ``acep`` the (dual)
    core EP inverse the composite is built from; passing them in keeps a
    failure localized to the composite rather than its constituents.
    """
    if not a.is_square() or a.shape != x.shape:
        raise DimensionMismatch("A and X must be square of the same order")
    if kind is CompositeKind.MPCEP:
        eqs = [
            ("XAX=X", x @ a @ x, x),
            ("AX", a @ x, a @ acep),
            ("XA", x @ a, adag @ a @ acep @ a),
        ]
    elif kind is CompositeKind.CEPMP:
        eqs = [
            ("XAX=X", x @ a @ x, x),
            ("AX", a @ x, a @ acep @ a @ adag),
            ("XA", x @ a, acep @ a),
        ]
    elif kind is CompositeKind.GDC:
        eqs = [
            ("XAX=X", x @ a @ x, x),
            ("AX", a @ x, acep @ a),
            ("XA", x @ a, adag @ acep @ a @ a),
        ]
    elif kind is CompositeKind.GC:
        eqs = [
            ("XAX=X", x @ a @ x, x),
            ("AX", a @ x, a @ a @ acep @ adag),
            ("XA", x @ a, a @ acep),
        ]
    else:  # pragma: no cover
        raise ValueError(f"unknown composite kind {kind}")
    return _collect(kind.value, eqs)
