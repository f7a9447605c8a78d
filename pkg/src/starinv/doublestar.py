"""Double star digraph matrices and their closed-form generalized inverses.

A double star digraph consists of two in-out stars whose centers are joined
by a pair of opposite edges. With the vertex order (center u, its m pendants,
center v, its n pendants) the weighted adjacency matrix takes the block form

    [ 0    x^T | a    0   ]
    [ y    0   | 0    0   ]
    [ b    0   | 0    z^T ]
    [ 0    0   | w    0   ]

with a, b and every entry of x, y, z, w nonzero. Eleven structural scalars
derived from the weights decide which generalized inverses exist, and each
existing inverse has an explicit block formula. The two coupling products
x^T y and z^T w split the world into four mutually exclusive cases:

* group invertible: both couplings nonzero;
* case I: both couplings zero (index 2);
* case II: x^T y != 0 = z^T w and zeta = x^T y + ab != 0 (index 3);
* case III: x^T y != 0 = z^T w and zeta = 0 (nilpotent of index 5).

The remaining sign pattern (x^T y = 0 != z^T w) is handled by swapping the
two stars, which is a permutation similarity; closed forms are evaluated on
the swapped spec and conjugated back.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .field import FieldMode, ONE, Scalar, ZERO, as_scalar, parse_scalar
from .matrix import Matrix, Permutation


def _coerce(v) -> Scalar:
    return parse_scalar(v) if isinstance(v, str) else as_scalar(v)


class InvalidSpecError(ValueError):
    """Raised when the defining data violates the nonzero constraints."""


class NotMoorePenroseInvertibleError(ValueError):
    pass


class OutOfTableScopeError(ValueError):
    pass


class CaseKind(Enum):
    GROUP_INVERTIBLE = "group_invertible"
    CASE_I = "case_i"
    CASE_II = "case_ii"
    CASE_III = "case_iii"


class Orientation(Enum):
    DIRECT = "direct"
    MIRRORED = "mirrored"


class InverseKind(Enum):
    DRAZIN = "drazin"
    GROUP = "group"
    MOORE_PENROSE = "moore_penrose"
    CORE = "core"
    DUAL_CORE = "dual_core"
    CORE_EP = "core_ep"
    DUAL_CORE_EP = "dual_core_ep"
    MPCEP = "mpcep"
    CEPMP = "cepmp"
    GDC = "gdc"
    GC = "gc"


@dataclass(frozen=True)
class CaseLabel:
    kind: CaseKind
    orientation: Orientation

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "orientation": self.orientation.value}


@dataclass(frozen=True)
class DoubleStarSpec:
    """Weights of a double star digraph: sizes, center edges, pendant vectors."""

    mode: FieldMode
    a: Scalar
    b: Scalar
    x: tuple
    y: tuple
    z: tuple
    w: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", _coerce(self.a))
        object.__setattr__(self, "b", _coerce(self.b))
        for field in ("x", "y", "z", "w"):
            vec = tuple(_coerce(e) for e in getattr(self, field))
            object.__setattr__(self, field, vec)
        problems = []
        if len(self.x) < 1 or len(self.x) != len(self.y):
            problems.append("x and y must have equal length m >= 1")
        if len(self.z) < 1 or len(self.z) != len(self.w):
            problems.append("z and w must have equal length n >= 1")
        if self.a.is_zero():
            problems.append("a must be nonzero")
        if self.b.is_zero():
            problems.append("b must be nonzero")
        for name, vec in (("x", self.x), ("y", self.y), ("z", self.z), ("w", self.w)):
            if any(e.is_zero() for e in vec):
                problems.append(f"all entries of {name} must be nonzero")
            if any(not self.mode.admits(e) for e in vec):
                problems.append(f"entries of {name} must lie in {self.mode}")
        for name, e in (("a", self.a), ("b", self.b)):
            if not self.mode.admits(e):
                problems.append(f"{name} must lie in {self.mode}")
        if problems:
            raise InvalidSpecError("; ".join(problems))

    @property
    def m(self) -> int:
        return len(self.x)

    @property
    def n(self) -> int:
        return len(self.z)

    @property
    def order(self) -> int:
        return self.m + self.n + 2

    def to_json(self) -> dict:
        return {
            "mode": self.mode.to_json(),
            "m": self.m,
            "n": self.n,
            "a": str(self.a),
            "b": str(self.b),
            "x": [str(e) for e in self.x],
            "y": [str(e) for e in self.y],
            "z": [str(e) for e in self.z],
            "w": [str(e) for e in self.w],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "DoubleStarSpec":
        try:
            mode = FieldMode.from_json(obj["mode"])
            spec = cls(
                mode=mode,
                a=parse_scalar(obj["a"]),
                b=parse_scalar(obj["b"]),
                x=tuple(parse_scalar(e) for e in obj["x"]),
                y=tuple(parse_scalar(e) for e in obj["y"]),
                z=tuple(parse_scalar(e) for e in obj["z"]),
                w=tuple(parse_scalar(e) for e in obj["w"]),
            )
        except (KeyError, TypeError) as exc:
            raise InvalidSpecError(f"malformed spec object: {exc}") from exc
        if "m" in obj and obj["m"] != spec.m:
            raise InvalidSpecError("declared m does not match len(x)")
        if "n" in obj and obj["n"] != spec.n:
            raise InvalidSpecError("declared n does not match len(z)")
        return spec


@dataclass(frozen=True)
class StructuralScalars:
    """The derived quantities controlling every existence criterion."""

    s: Scalar      # x* x
    t: Scalar      # z* z
    u: Scalar      # y* y
    v: Scalar      # w* w
    r: Scalar      # a a~ + w* w
    h: Scalar      # b b~ + y* y
    p: Scalar      # b b~ + z* z
    q: Scalar      # a a~ + x* x
    zeta: Scalar   # x^T y + a b
    beta: Scalar   # zeta zeta~ + b b~ w* w
    alpha: Scalar  # zeta zeta~ + a a~ z* z
    xty: Scalar
    ztw: Scalar


@dataclass(frozen=True)
class Criterion:
    name: str
    value: Scalar
    nonzero: bool

    def to_json(self) -> dict:
        return {"name": self.name, "value": str(self.value), "nonzero": self.nonzero}


@dataclass(frozen=True)
class InverseReport:
    kind: InverseKind
    exists: bool
    value: Optional[Matrix]
    criteria: tuple
    case: CaseLabel

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "exists": self.exists,
            "case": self.case.to_json(),
            "criteria": [c.to_json() for c in self.criteria],
            "matrix": self.value.to_json() if self.value is not None else None,
        }


# -- construction and classification ------------------------------------


def build(spec: DoubleStarSpec) -> Matrix:
    """The order m+n+2 adjacency matrix in the canonical vertex order."""
    m, n = spec.m, spec.n
    size = spec.order
    grid = [[ZERO] * size for _ in range(size)]
    for j, e in enumerate(spec.x):
        grid[0][1 + j] = e
    grid[0][m + 1] = spec.a
    for i, e in enumerate(spec.y):
        grid[1 + i][0] = e
    grid[m + 1][0] = spec.b
    for j, e in enumerate(spec.z):
        grid[m + 1][m + 2 + j] = e
    for i, e in enumerate(spec.w):
        grid[m + 2 + i][m + 1] = e
    return Matrix(spec.mode, grid)


def _dot(u, v) -> Scalar:
    return sum((a * b for a, b in zip(u, v)), ZERO)


def structural_scalars(spec: DoubleStarSpec) -> StructuralScalars:
    cj = spec.mode.involve
    s = _dot([cj(e) for e in spec.x], spec.x)
    t = _dot([cj(e) for e in spec.z], spec.z)
    u = _dot([cj(e) for e in spec.y], spec.y)
    v = _dot([cj(e) for e in spec.w], spec.w)
    xty = _dot(spec.x, spec.y)
    ztw = _dot(spec.z, spec.w)
    a, b = spec.a, spec.b
    zeta = xty + a * b
    return StructuralScalars(
        s=s,
        t=t,
        u=u,
        v=v,
        r=a * cj(a) + v,
        h=b * cj(b) + u,
        p=b * cj(b) + t,
        q=a * cj(a) + s,
        zeta=zeta,
        beta=zeta * cj(zeta) + b * cj(b) * v,
        alpha=zeta * cj(zeta) + a * cj(a) * t,
        xty=xty,
        ztw=ztw,
    )


def mirror(spec: DoubleStarSpec) -> tuple:
    """Swap the two stars; returns the swapped spec and the witnessing permutation.

    The permutation p satisfies perm_similar(build(spec), p) == build(mirrored).
    """
    mirrored = DoubleStarSpec(
        mode=spec.mode,
        a=spec.b,
        b=spec.a,
        x=spec.z,
        y=spec.w,
        z=spec.x,
        w=spec.y,
    )
    m, n = spec.m, spec.n
    image = tuple([m + 1] + [m + 2 + j for j in range(n)] + [0] + [1 + i for i in range(m)])
    return mirrored, Permutation(image)


def _direct_case_kind(sc: StructuralScalars) -> CaseKind:
    if not sc.xty.is_zero() and not sc.ztw.is_zero():
        return CaseKind.GROUP_INVERTIBLE
    if sc.xty.is_zero() and sc.ztw.is_zero():
        return CaseKind.CASE_I
    if sc.zeta.is_zero():
        return CaseKind.CASE_III
    return CaseKind.CASE_II


def _orient(spec: DoubleStarSpec):
    """Reduce to a spec whose zero coupling, if unique, sits on the z-w side."""
    sc = structural_scalars(spec)
    if sc.xty.is_zero() and not sc.ztw.is_zero():
        oriented, perm = mirror(spec)
        osc = structural_scalars(oriented)
        label = CaseLabel(_direct_case_kind(osc), Orientation.MIRRORED)
        return oriented, osc, perm, label
    label = CaseLabel(_direct_case_kind(sc), Orientation.DIRECT)
    return spec, sc, None, label


def classify(spec: DoubleStarSpec) -> CaseLabel:
    return _orient(spec)[3]


# -- block assembly helpers ----------------------------------------------


def _assemble(spec: DoubleStarSpec, cells: dict) -> Matrix:
    """Fill the 4x4 block grid with sizes (1, m, 1, n); missing cells are zero.

    Cell values are scalars for the 1x1 blocks or list-of-list grids.
    """
    m, n = spec.m, spec.n
    sizes = (1, m, 1, n)
    offsets = (0, 1, m + 1, m + 2)
    size = spec.order
    grid = [[ZERO] * size for _ in range(size)]
    for (bi, bj), cell in cells.items():
        if isinstance(cell, Scalar):
            cell = [[cell]]
        ri, cj_ = offsets[bi], offsets[bj]
        assert len(cell) == sizes[bi] and len(cell[0]) == sizes[bj]
        for i, row in enumerate(cell):
            for j, e in enumerate(row):
                grid[ri + i][cj_ + j] = e
    return Matrix(spec.mode, grid)


def _row(c: Scalar, vec) -> list:
    return [[c * e for e in vec]]


def _col(c: Scalar, vec) -> list:
    return [[c * e] for e in vec]


def _outer(c: Scalar, u, v) -> list:
    return [[c * eu * ev for ev in v] for eu in u]


def _conj(spec: DoubleStarSpec, vec) -> tuple:
    cj = spec.mode.involve
    return tuple(cj(e) for e in vec)


def _criteria(sc: StructuralScalars, names) -> tuple:
    return tuple(
        Criterion(name, getattr(sc, name), not getattr(sc, name).is_zero())
        for name in names
    )


def _report(kind, label, criteria, value_fn) -> InverseReport:
    exists = all(c.nonzero for c in criteria)
    value = value_fn() if exists else None
    return InverseReport(kind, exists, value, tuple(criteria), label)


def _pull_back(report: InverseReport, perm: Optional[Permutation]) -> InverseReport:
    if perm is None or report.value is None:
        return report
    return InverseReport(
        report.kind,
        report.exists,
        perm.inverse().conjugate(report.value),
        report.criteria,
        report.case,
    )


# -- closed forms ----------------------------------------------------------


def group_closed_form(spec: DoubleStarSpec) -> InverseReport:
    """Group inverse; exists iff both couplings are nonzero."""
    label = classify(spec)
    sc = structural_scalars(spec)
    criteria = _criteria(sc, ("xty", "ztw"))

    def value():
        g1, g2 = sc.xty, sc.ztw
        a, b = spec.a, spec.b
        return _assemble(
            spec,
            {
                (0, 1): _row(g1.inv(), spec.x),
                (1, 0): _col(g1.inv(), spec.y),
                (1, 3): _outer(-a * (g1 * g2).inv(), spec.y, spec.z),
                (2, 3): _row(g2.inv(), spec.z),
                (3, 1): _outer(-b * (g1 * g2).inv(), spec.w, spec.x),
                (3, 2): _col(g2.inv(), spec.w),
            },
        )

    return _report(InverseKind.GROUP, label, criteria, value)


def _drazin_direct(spec: DoubleStarSpec, sc: StructuralScalars, kind: CaseKind) -> Matrix:
    a, b = spec.a, spec.b
    if kind is CaseKind.GROUP_INVERTIBLE:
        return group_closed_form(spec).value
    if kind is CaseKind.CASE_I:
        f = (a * b).inv()
        return _assemble(
            spec,
            {
                (0, 1): _row(f, spec.x),
                (0, 2): f * a,
                (1, 0): _col(f, spec.y),
                (1, 3): _outer(f * b.inv(), spec.y, spec.z),
                (2, 0): f * b,
                (2, 3): _row(f, spec.z),
                (3, 1): _outer(f * a.inv(), spec.w, spec.x),
                (3, 2): _col(f, spec.w),
            },
        )
    if kind is CaseKind.CASE_II:
        f = sc.zeta.inv()
        return _assemble(
            spec,
            {
                (0, 1): _row(f, spec.x),
                (0, 2): f * a,
                (1, 0): _col(f, spec.y),
                (1, 3): _outer(f * f * a, spec.y, spec.z),
                (2, 0): f * b,
                (2, 3): _row(f * f * a * b, spec.z),
                (3, 1): _outer(f * f * b, spec.w, spec.x),
                (3, 2): _col(f * f * a * b, spec.w),
            },
        )
    return Matrix.zeros(spec.mode, spec.order, spec.order)


def drazin_closed_form(spec: DoubleStarSpec) -> InverseReport:
    """Drazin inverse; always exists (zero in the nilpotent case)."""
    oriented, sc, perm, label = _orient(spec)
    value = _drazin_direct(oriented, sc, label.kind)
    return _pull_back(InverseReport(InverseKind.DRAZIN, True, value, (), label), perm)


def moore_penrose_closed_form(spec: DoubleStarSpec) -> InverseReport:
    """Moore-Penrose inverse; exists iff the four Gram scalars are nonzero."""
    label = classify(spec)
    sc = structural_scalars(spec)
    criteria = _criteria(sc, ("s", "u", "t", "v"))

    def value():
        a, b = spec.a, spec.b
        xc, yc, zc, wc = (_conj(spec, vec) for vec in (spec.x, spec.y, spec.z, spec.w))
        return _assemble(
            spec,
            {
                (0, 1): _row(sc.u.inv(), yc),
                (1, 0): _col(sc.s.inv(), xc),
                (1, 3): _outer(-(sc.s.inv()) * a * sc.v.inv(), xc, wc),
                (2, 3): _row(sc.v.inv(), wc),
                (3, 1): _outer(-(sc.t.inv()) * b * sc.u.inv(), zc, yc),
                (3, 2): _col(sc.t.inv(), zc),
            },
        )

    return _report(InverseKind.MOORE_PENROSE, label, criteria, value)


def core_closed_form(spec: DoubleStarSpec) -> InverseReport:
    """Core inverse; needs both couplings and all four Gram scalars nonzero."""
    label = classify(spec)
    sc = structural_scalars(spec)
    criteria = _criteria(sc, ("xty", "ztw", "s", "u", "t", "v"))

    def value():
        a, b = spec.a, spec.b
        g1, g2 = sc.xty, sc.ztw
        yc, wc = _conj(spec, spec.y), _conj(spec, spec.w)
        return _assemble(
            spec,
            {
                (0, 1): _row(sc.u.inv(), yc),
                (1, 0): _col(g1.inv(), spec.y),
                (1, 3): _outer(-a * sc.v.inv() * g1.inv(), spec.y, wc),
                (2, 3): _row(sc.v.inv(), wc),
                (3, 1): _outer(-b * sc.u.inv() * g2.inv(), spec.w, yc),
                (3, 2): _col(g2.inv(), spec.w),
            },
        )

    return _report(InverseKind.CORE, label, criteria, value)


def dual_core_closed_form(spec: DoubleStarSpec) -> InverseReport:
    label = classify(spec)
    sc = structural_scalars(spec)
    criteria = _criteria(sc, ("xty", "ztw", "s", "u", "t", "v"))

    def value():
        a, b = spec.a, spec.b
        g1, g2 = sc.xty, sc.ztw
        xc, zc = _conj(spec, spec.x), _conj(spec, spec.z)
        return _assemble(
            spec,
            {
                (0, 1): _row(g1.inv(), spec.x),
                (1, 0): _col(sc.s.inv(), xc),
                (1, 3): _outer(-a * sc.s.inv() * g2.inv(), xc, spec.z),
                (2, 3): _row(g2.inv(), spec.z),
                (3, 1): _outer(-b * sc.t.inv() * g1.inv(), zc, spec.x),
                (3, 2): _col(sc.t.inv(), zc),
            },
        )

    return _report(InverseKind.DUAL_CORE, label, criteria, value)


def projectors(spec: DoubleStarSpec) -> tuple:
    """The orthogonal projectors M†M and MM† in block-diagonal form."""
    sc = structural_scalars(spec)
    if any(getattr(sc, nm).is_zero() for nm in ("s", "u", "t", "v")):
        raise NotMoorePenroseInvertibleError(
            "projectors need s, u, t, v all nonzero"
        )
    xc, yc, zc, wc = (_conj(spec, vec) for vec in (spec.x, spec.y, spec.z, spec.w))
    mdag_m = _assemble(
        spec,
        {
            (0, 0): ONE,
            (1, 1): _outer(sc.s.inv(), xc, spec.x),
            (2, 2): ONE,
            (3, 3): _outer(sc.t.inv(), zc, spec.z),
        },
    )
    m_mdag = _assemble(
        spec,
        {
            (0, 0): ONE,
            (1, 1): _outer(sc.u.inv(), spec.y, yc),
            (2, 2): ONE,
            (3, 3): _outer(sc.v.inv(), spec.w, wc),
        },
    )
    return mdag_m, m_mdag


def _core_ep_direct(spec, sc, kind) -> tuple:
    """Criteria names and value builder for the core EP inverse, oriented."""
    a, b = spec.a, spec.b
    cj = spec.mode.involve
    if kind is CaseKind.CASE_I:
        names = ("r", "h")

        def value():
            yc, wc = _conj(spec, spec.y), _conj(spec, spec.w)
            return _assemble(
                spec,
                {
                    (0, 1): _row(sc.h.inv(), yc),
                    (0, 2): cj(b) * sc.h.inv(),
                    (1, 0): _col(cj(a) * (b * sc.r).inv(), spec.y),
                    (1, 3): _outer((b * sc.r).inv(), spec.y, wc),
                    (2, 0): cj(a) * sc.r.inv(),
                    (2, 3): _row(sc.r.inv(), wc),
                    (3, 1): _outer((a * sc.h).inv(), spec.w, yc),
                    (3, 2): _col(cj(b) * (a * sc.h).inv(), spec.w),
                },
            )

        return names, value
    if kind is CaseKind.CASE_II:
        names = ("h", "beta")

        def value():
            zc_ = sc.zeta
            yc, wc = _conj(spec, spec.y), _conj(spec, spec.w)
            return _assemble(
                spec,
                {
                    (0, 1): _row(sc.h.inv(), yc),
                    (0, 2): sc.h.inv() * cj(b),
                    (1, 0): _col(sc.beta.inv() * cj(zc_), spec.y),
                    (1, 3): _outer(sc.beta.inv() * cj(b), spec.y, wc),
                    (2, 0): sc.beta.inv() * cj(zc_) * b,
                    (2, 3): _row(sc.beta.inv() * b * cj(b), wc),
                    (3, 1): _outer(b * sc.h.inv() * zc_.inv(), spec.w, yc),
                    (3, 2): _col(b * cj(b) * sc.h.inv() * zc_.inv(), spec.w),
                },
            )

        return names, value
    # nilpotent case: the inverse is the zero matrix, unconditionally
    return (), lambda: Matrix.zeros(spec.mode, spec.order, spec.order)


def _dual_core_ep_direct(spec, sc, kind) -> tuple:
    a, b = spec.a, spec.b
    cj = spec.mode.involve
    if kind is CaseKind.CASE_I:
        names = ("p", "q")

        def value():
            xc, zc = _conj(spec, spec.x), _conj(spec, spec.z)
            return _assemble(
                spec,
                {
                    (0, 1): _row(cj(b) * (a * sc.p).inv(), spec.x),
                    (0, 2): cj(b) * sc.p.inv(),
                    (1, 0): _col(sc.q.inv(), xc),
                    (1, 3): _outer((b * sc.q).inv(), xc, spec.z),
                    (2, 0): cj(a) * sc.q.inv(),
                    (2, 3): _row(cj(a) * (b * sc.q).inv(), spec.z),
                    (3, 1): _outer((a * sc.p).inv(), zc, spec.x),
                    (3, 2): _col(sc.p.inv(), zc),
                },
            )

        return names, value
    if kind is CaseKind.CASE_II:
        names = ("q", "alpha")

        def value():
            zt = sc.zeta
            xc, zc = _conj(spec, spec.x), _conj(spec, spec.z)
            return _assemble(
                spec,
                {
                    (0, 1): _row(cj(zt) * sc.alpha.inv(), spec.x),
                    (0, 2): cj(zt) * sc.alpha.inv() * a,
                    (1, 0): _col(sc.q.inv(), xc),
                    (1, 3): _outer((sc.q * zt).inv() * a, xc, spec.z),
                    (2, 0): cj(a) * sc.q.inv(),
                    (2, 3): _row((sc.q * zt).inv() * a * cj(a), spec.z),
                    (3, 1): _outer(cj(a) * sc.alpha.inv(), zc, spec.x),
                    (3, 2): _col(a * cj(a) * sc.alpha.inv(), zc),
                },
            )

        return names, value
    return (), lambda: Matrix.zeros(spec.mode, spec.order, spec.order)


def core_ep_closed_form(spec: DoubleStarSpec) -> InverseReport:
    """Core EP inverse; collapses to the core inverse when the group inverse exists."""
    oriented, sc, perm, label = _orient(spec)
    if label.kind is CaseKind.GROUP_INVERTIBLE:
        rep = core_closed_form(spec)
        return InverseReport(InverseKind.CORE_EP, rep.exists, rep.value, rep.criteria, label)
    names, value_fn = _core_ep_direct(oriented, sc, label.kind)
    rep = _report(InverseKind.CORE_EP, label, _criteria(sc, names), value_fn)
    return _pull_back(rep, perm)


def dual_core_ep_closed_form(spec: DoubleStarSpec) -> InverseReport:
    oriented, sc, perm, label = _orient(spec)
    if label.kind is CaseKind.GROUP_INVERTIBLE:
        rep = dual_core_closed_form(spec)
        return InverseReport(
            InverseKind.DUAL_CORE_EP, rep.exists, rep.value, rep.criteria, label
        )
    names, value_fn = _dual_core_ep_direct(oriented, sc, label.kind)
    rep = _report(InverseKind.DUAL_CORE_EP, label, _criteria(sc, names), value_fn)
    return _pull_back(rep, perm)


# criteria per case for the four composite inverses (the summary table rows)
_TABLE_CRITERIA = {
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


def _composite_closed_form(spec, kind: InverseKind, dual: bool, cells_fn) -> InverseReport:
    """Shared skeleton: case criteria, zero value in the nilpotent case,
    explicit composition when the group inverse exists."""
    oriented, sc, perm, label = _orient(spec)
    if label.kind is CaseKind.GROUP_INVERTIBLE:
        mp = moore_penrose_closed_form(spec)
        criteria = mp.criteria
        value = None
        if mp.exists:
            core = dual_core_closed_form(spec) if dual else core_closed_form(spec)
            m = build(spec)
            if kind is InverseKind.MPCEP:
                value = mp.value @ m @ core.value
            elif kind is InverseKind.CEPMP:
                value = core.value @ m @ mp.value
            elif kind is InverseKind.GDC:
                value = mp.value @ core.value @ m
            else:
                value = m @ core.value @ mp.value
        return InverseReport(kind, mp.exists, value, criteria, label)
    if label.kind is CaseKind.CASE_III:
        criteria = _criteria(sc, ("s", "u", "t", "v"))
        exists = all(c.nonzero for c in criteria)
        value = Matrix.zeros(spec.mode, spec.order, spec.order) if exists else None
        return InverseReport(kind, exists, value, criteria, label)
    names = _TABLE_CRITERIA[kind][label.kind]
    rep = _report(
        kind, label, _criteria(sc, names), lambda: cells_fn(oriented, sc, label.kind)
    )
    return _pull_back(rep, perm)


def _mpcep_value(spec, sc, kind) -> Matrix:
    a, b = spec.a, spec.b
    cj = spec.mode.involve
    yc, wc = _conj(spec, spec.y), _conj(spec, spec.w)
    if kind is CaseKind.CASE_I:
        return _assemble(
            spec,
            {
                (0, 1): _row(sc.h.inv(), yc),
                (0, 2): cj(b) * sc.h.inv(),
                (2, 0): cj(a) * sc.r.inv(),
                (2, 3): _row(sc.r.inv(), wc),
            },
        )
    xc = _conj(spec, spec.x)
    zt = sc.zeta
    return _assemble(
        spec,
        {
            (0, 1): _row(sc.h.inv(), yc),
            (0, 2): cj(b) * sc.h.inv(),
            (1, 0): _col((sc.s * sc.beta).inv() * cj(zt) * sc.xty, xc),
            (1, 3): _outer((sc.s * sc.beta).inv() * cj(b) * sc.xty, xc, wc),
            (2, 0): sc.beta.inv() * cj(zt) * b,
            (2, 3): _row(sc.beta.inv() * b * cj(b), wc),
        },
    )


def _cepmp_value(spec, sc, kind) -> Matrix:
    a, b = spec.a, spec.b
    cj = spec.mode.involve
    xc, zc = _conj(spec, spec.x), _conj(spec, spec.z)
    if kind is CaseKind.CASE_I:
        return _assemble(
            spec,
            {
                (0, 2): cj(b) * sc.p.inv(),
                (1, 0): _col(sc.q.inv(), xc),
                (2, 0): cj(a) * sc.q.inv(),
                (3, 2): _col(sc.p.inv(), zc),
            },
        )
    yc = _conj(spec, spec.y)
    zt = sc.zeta
    return _assemble(
        spec,
        {
            (0, 1): _row(cj(zt) * (sc.u * sc.alpha).inv() * sc.xty, yc),
            (0, 2): a * cj(zt) * sc.alpha.inv(),
            (1, 0): _col(sc.q.inv(), xc),
            (2, 0): cj(a) * sc.q.inv(),
            (3, 1): _outer(cj(a) * (sc.u * sc.alpha).inv() * sc.xty, zc, yc),
            (3, 2): _col(a * cj(a) * sc.alpha.inv(), zc),
        },
    )


def _gdc_value(spec, sc, kind) -> Matrix:
    a, b = spec.a, spec.b
    cj = spec.mode.involve
    if kind is CaseKind.CASE_I:
        return _assemble(
            spec,
            {
                (0, 1): _row(cj(a) * (b * sc.r).inv(), spec.x),
                (0, 2): b.inv(),
                (2, 0): a.inv(),
                (2, 3): _row(cj(b) * (a * sc.h).inv(), spec.z),
            },
        )
    xc = _conj(spec, spec.x)
    zt = sc.zeta
    return _assemble(
        spec,
        {
            (0, 1): _row(sc.beta.inv() * cj(zt), spec.x),
            (0, 2): sc.beta.inv() * (a * cj(zt) + cj(b) * sc.v),
            (1, 0): _col((sc.s * zt).inv() * sc.xty, xc),
            (1, 3): _outer(cj(b) * (sc.h * sc.s * zt).inv() * sc.xty, xc, spec.z),
            (2, 0): b * zt.inv(),
            (2, 3): _row(b * cj(b) * (sc.h * zt).inv(), spec.z),
        },
    )


def _gc_value(spec, sc, kind) -> Matrix:
    a, b = spec.a, spec.b
    cj = spec.mode.involve
    if kind is CaseKind.CASE_I:
        return _assemble(
            spec,
            {
                (0, 2): b.inv(),
                (1, 0): _col(cj(b) * (a * sc.p).inv(), spec.y),
                (2, 0): a.inv(),
                (3, 2): _col(cj(a) * (b * sc.q).inv(), spec.w),
            },
        )
    yc = _conj(spec, spec.y)
    zt = sc.zeta
    return _assemble(
        spec,
        {
            (0, 1): _row((sc.u * zt).inv() * sc.xty, yc),
            (0, 2): a * zt.inv(),
            (1, 0): _col(sc.alpha.inv() * cj(zt), spec.y),
            (2, 0): sc.alpha.inv() * (b * cj(zt) + cj(a) * sc.t),
            (3, 1): _outer(cj(a) * (sc.u * sc.q * zt).inv() * sc.xty, spec.w, yc),
            (3, 2): _col(a * cj(a) * (sc.q * zt).inv(), spec.w),
        },
    )


def mpcep_closed_form(spec: DoubleStarSpec) -> InverseReport:
    return _composite_closed_form(spec, InverseKind.MPCEP, False, _mpcep_value)


def cepmp_closed_form(spec: DoubleStarSpec) -> InverseReport:
    return _composite_closed_form(spec, InverseKind.CEPMP, True, _cepmp_value)


def gdc_closed_form(spec: DoubleStarSpec) -> InverseReport:
    return _composite_closed_form(spec, InverseKind.GDC, False, _gdc_value)


def gc_closed_form(spec: DoubleStarSpec) -> InverseReport:
    return _composite_closed_form(spec, InverseKind.GC, True, _gc_value)


CLOSED_FORMS = {
    InverseKind.DRAZIN: drazin_closed_form,
    InverseKind.GROUP: group_closed_form,
    InverseKind.MOORE_PENROSE: moore_penrose_closed_form,
    InverseKind.CORE: core_closed_form,
    InverseKind.DUAL_CORE: dual_core_closed_form,
    InverseKind.CORE_EP: core_ep_closed_form,
    InverseKind.DUAL_CORE_EP: dual_core_ep_closed_form,
    InverseKind.MPCEP: mpcep_closed_form,
    InverseKind.CEPMP: cepmp_closed_form,
    InverseKind.GDC: gdc_closed_form,
    InverseKind.GC: gc_closed_form,
}


def closed_form(spec: DoubleStarSpec, kind: InverseKind) -> InverseReport:
    return CLOSED_FORMS[kind](spec)


_TABLE_ROWS = (
    InverseKind.MOORE_PENROSE,
    InverseKind.CORE_EP,
    InverseKind.DUAL_CORE_EP,
    InverseKind.MPCEP,
    InverseKind.CEPMP,
    InverseKind.GDC,
    InverseKind.GC,
)


def existence_table(spec: DoubleStarSpec) -> list:
    """One report per summary-table row; only within cases I and II."""
    label = classify(spec)
    if label.kind not in (CaseKind.CASE_I, CaseKind.CASE_II):
        raise OutOfTableScopeError(
            f"the existence table covers cases I and II only, got {label.kind.value}"
        )
    return [closed_form(spec, kind) for kind in _TABLE_ROWS]


def table_criteria_names(kind: InverseKind, case: CaseKind) -> tuple:
    """The summary-table cell for one inverse kind and case."""
    return _TABLE_CRITERIA[kind][case]


def to_dot(spec: DoubleStarSpec) -> str:
    """DOT text of the weighted digraph; 2(m+n)+2 labelled edges."""
    lines = ["digraph doublestar {"]
    names = (
        ["u"]
        + [f"u{i+1}" for i in range(spec.m)]
        + ["v"]
        + [f"v{j+1}" for j in range(spec.n)]
    )
    for name in names:
        lines.append(f"  {name};")
    for i, e in enumerate(spec.x):
        lines.append(f'  u -> u{i+1} [label="{e}"];')
    for i, e in enumerate(spec.y):
        lines.append(f'  u{i+1} -> u [label="{e}"];')
    lines.append(f'  u -> v [label="{spec.a}"];')
    lines.append(f'  v -> u [label="{spec.b}"];')
    for j, e in enumerate(spec.z):
        lines.append(f'  v -> v{j+1} [label="{e}"];')
    for j, e in enumerate(spec.w):
        lines.append(f'  v{j+1} -> v [label="{e}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
